//! Brute-force count of absolutely indecomposable `g`-tuples of `r × r`
//! matrices over `F_q`, up to simultaneous conjugation.
//!
//! Orbits are enumerated explicitly with a visited bitmap. A tuple is
//! absolutely indecomposable exactly when every element of its commutant
//! is `λ I + N` with `λ ∈ F_q` and `N` nilpotent. Each orbit is also
//! checked against `|orbit| · |commutant units| = |GL_r(F_q)|`.

use rayon::prelude::*;

use super::field::Field;
use crate::error::{Error, Result};

/// Largest number of tuples `q^{g r²}` the oracle will scan.
pub const TUPLE_BUDGET: u64 = 1 << 22;

type Mat = Vec<u8>;

struct Ctx {
    f: Field,
    r: usize,
    g: usize,
}

impl Ctx {
    fn mat_mul(&self, a: &[u8], b: &[u8]) -> Mat {
        let r = self.r;
        let mut c = vec![0u8; r * r];
        for i in 0..r {
            for k in 0..r {
                let x = a[i * r + k];
                if x == 0 {
                    continue;
                }
                for j in 0..r {
                    let idx = i * r + j;
                    c[idx] = self.f.add(c[idx], self.f.mul(x, b[k * r + j]));
                }
            }
        }
        c
    }

    fn identity(&self) -> Mat {
        let r = self.r;
        (0..r * r).map(|i| u8::from(i / r == i % r)).collect()
    }

    /// Row reduction in place, pivoting in the first `ncols` columns only;
    /// returns the pivot columns.
    fn row_reduce(&self, rows: &mut [Vec<u8>], ncols: usize) -> Vec<usize> {
        let f = &self.f;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..ncols {
            let Some(pr) = (row..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(row, pr);
            let inv = f.inv(rows[row][col]);
            for x in rows[row].iter_mut() {
                *x = f.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != row && rows[i][col] != 0 {
                    let c = rows[i][col];
                    for j in 0..rows[i].len() {
                        let v = f.mul(c, rows[row][j]);
                        rows[i][j] = f.sub(rows[i][j], v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == rows.len() {
                break;
            }
        }
        pivots
    }

    fn is_invertible(&self, a: &[u8]) -> bool {
        let r = self.r;
        let mut rows: Vec<Vec<u8>> = a.chunks(r).map(<[u8]>::to_vec).collect();
        self.row_reduce(&mut rows, r).len() == r
    }

    fn inverse(&self, a: &[u8]) -> Mat {
        let r = self.r;
        let id = self.identity();
        let mut rows: Vec<Vec<u8>> = (0..r)
            .map(|i| a[i * r..(i + 1) * r].iter().chain(&id[i * r..(i + 1) * r]).copied().collect())
            .collect();
        self.row_reduce(&mut rows, r);
        rows.iter().flat_map(|row| row[r..].to_vec()).collect()
    }

    /// Basis of `{Y : Y X_i = X_i Y for all i}`.
    fn commutant_basis(&self, tuple: &[Mat]) -> Vec<Mat> {
        let (r, f) = (self.r, &self.f);
        let n = r * r;
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for x in tuple {
            // entry (a, b) of Y X - X Y, linear in the entries of Y
            for a in 0..r {
                for b in 0..r {
                    let mut eq = vec![0u8; n];
                    for k in 0..r {
                        eq[a * r + k] = f.add(eq[a * r + k], x[k * r + b]);
                        eq[k * r + b] = f.sub(eq[k * r + b], x[a * r + k]);
                    }
                    rows.push(eq);
                }
            }
        }
        if rows.is_empty() {
            return (0..n).map(|i| (0..n).map(|j| u8::from(i == j)).collect()).collect();
        }
        let pivots = self.row_reduce(&mut rows, n);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0u8; n];
                v[fc] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(rows[i][fc]);
                }
                v
            })
            .collect()
    }

    fn is_nilpotent(&self, a: &[u8]) -> bool {
        let mut p = a.to_vec();
        for _ in 1..self.r {
            p = self.mat_mul(&p, a);
        }
        p.iter().all(|&x| x == 0)
    }

    fn is_scalar_plus_nilpotent(&self, y: &[u8]) -> bool {
        let r = self.r;
        self.f.elements().any(|lambda| {
            let mut m = y.to_vec();
            for i in 0..r {
                m[i * r + i] = self.f.sub(m[i * r + i], lambda);
            }
            self.is_nilpotent(&m)
        })
    }

    fn encode(&self, tuple: &[Mat]) -> usize {
        let q = self.f.order();
        tuple.iter().flatten().fold(0usize, |acc, &x| acc * q + x as usize)
    }

    fn decode(&self, mut code: usize) -> Vec<Mat> {
        let q = self.f.order();
        let n = self.r * self.r;
        let mut flat = vec![0u8; self.g * n];
        for x in flat.iter_mut().rev() {
            *x = (code % q) as u8;
            code /= q;
        }
        flat.chunks(n).map(<[u8]>::to_vec).collect()
    }

    fn all_matrices(&self) -> impl Iterator<Item = Mat> + '_ {
        let q = self.f.order();
        let n = self.r * self.r;
        (0..q.pow(n as u32)).map(move |mut code| {
            let mut m = vec![0u8; n];
            for x in m.iter_mut().rev() {
                *x = (code % q) as u8;
                code /= q;
            }
            m
        })
    }
}

/// One orbit's verdict and the size check.
fn classify(ctx: &Ctx, rep: &[Mat], orbit: usize, gl_order: usize) -> Result<bool> {
    let basis = ctx.commutant_basis(rep);
    let q = ctx.f.order();
    let dim = basis.len();
    let mut units = 0usize;
    let mut local = true;
    for mut code in 0..q.pow(dim as u32) {
        let mut y = vec![0u8; ctx.r * ctx.r];
        for b in &basis {
            let c = (code % q) as u8;
            code /= q;
            if c != 0 {
                for (yi, &bi) in y.iter_mut().zip(b) {
                    *yi = ctx.f.add(*yi, ctx.f.mul(c, bi));
                }
            }
        }
        if ctx.is_invertible(&y) {
            units += 1;
        }
        if local && !ctx.is_scalar_plus_nilpotent(&y) {
            local = false;
        }
    }
    if orbit * units != gl_order {
        return Err(Error::Invariant(format!("orbit of size {orbit} with {units} commutant units, |GL| = {gl_order}")));
    }
    Ok(local)
}

/// Number of isomorphism classes of absolutely indecomposable `g`-tuples of
/// `r × r` matrices over `F_q`.
pub fn count_abs_indec(g: i64, r: i64, q: u64) -> Result<u64> {
    if g < 0 || r < 1 {
        return Err(Error::InvalidPartition(format!("need g >= 0 and r >= 1, got g={g} r={r}")));
    }
    let f = Field::new(q)?;
    let exponent = (g as u64).saturating_mul((r * r) as u64);
    let tuples = (q as f64).powf(exponent as f64);
    if tuples > TUPLE_BUDGET as f64 {
        return Err(Error::BudgetExceeded(format!("{q}^{exponent} tuples exceeds {TUPLE_BUDGET}")));
    }
    let total = q.pow(exponent as u32) as usize;
    let ctx = Ctx { f, r: r as usize, g: g as usize };
    let gl: Vec<(Mat, Mat)> = ctx
        .all_matrices()
        .filter(|m| ctx.is_invertible(m))
        .map(|m| {
            let inv = ctx.inverse(&m);
            (m, inv)
        })
        .collect();
    let mut visited = vec![false; total];
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for code in 0..total {
        if visited[code] {
            continue;
        }
        let tuple = ctx.decode(code);
        let mut orbit = 0usize;
        for (m, inv) in &gl {
            let image: Vec<Mat> = tuple.iter().map(|x| ctx.mat_mul(&ctx.mat_mul(m, x), inv)).collect();
            let c = ctx.encode(&image);
            if !visited[c] {
                visited[c] = true;
                orbit += 1;
            }
        }
        reps.push((code, orbit));
    }
    let verdicts: Vec<bool> = reps
        .par_iter()
        .map(|&(code, orbit)| classify(&ctx, &ctx.decode(code), orbit, gl.len()))
        .collect::<Result<_>>()?;
    Ok(verdicts.into_iter().filter(|&b| b).count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dimensional() {
        assert_eq!(count_abs_indec(2, 1, 2).unwrap(), 4);
        assert_eq!(count_abs_indec(1, 1, 3).unwrap(), 3);
        assert_eq!(count_abs_indec(3, 1, 4).unwrap(), 64);
    }

    #[test]
    fn single_matrix() {
        // one loop: only the Jordan blocks J_2(λ), λ ∈ F_q
        assert_eq!(count_abs_indec(1, 2, 2).unwrap(), 2);
        assert_eq!(count_abs_indec(1, 2, 3).unwrap(), 3);
        assert_eq!(count_abs_indec(1, 3, 2).unwrap(), 2);
    }

    #[test]
    fn no_loops() {
        assert_eq!(count_abs_indec(0, 1, 2).unwrap(), 1);
        assert_eq!(count_abs_indec(0, 2, 2).unwrap(), 0);
    }

    #[test]
    fn budget() {
        assert!(matches!(count_abs_indec(3, 3, 3), Err(Error::BudgetExceeded(_))));
        assert_eq!(count_abs_indec(1, 1, 6), Err(Error::UnsupportedField(6)));
    }
}
