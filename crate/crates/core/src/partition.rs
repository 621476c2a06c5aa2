//! Integer partitions in the two encodings used throughout the crate: a
//! descending list of parts, and the exponential form `r_k = #{parts = k}`.

/// All partitions of `n`, each as a weakly decreasing list of parts, in
/// reverse lexicographic order: `[3], [2, 1], [1, 1, 1]`.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=n.min(max)).rev() {
        cur.push(p);
        fill(n - p, p, cur, out);
        cur.pop();
    }
}

/// `[2, 1, 1] -> [2, 1]` (two parts of size 1, one of size 2).
pub fn multiplicities(parts: &[usize]) -> Vec<i64> {
    let s = parts.iter().copied().max().unwrap_or(0);
    let mut r = vec![0i64; s];
    for &p in parts {
        r[p - 1] += 1;
    }
    r
}

/// Inverse of [`multiplicities`].
pub fn parts_of(r_seq: &[i64]) -> Vec<usize> {
    let mut parts = Vec::new();
    for (i, &m) in r_seq.iter().enumerate().rev() {
        for _ in 0..m {
            parts.push(i + 1);
        }
    }
    parts
}

/// Exponential forms of all partitions of `r` (every one has `r_s > 0`).
pub fn rank_vectors(r: usize) -> Vec<Vec<i64>> {
    partitions(r).iter().map(|p| multiplicities(p)).collect()
}

pub fn conjugate(parts: &[usize]) -> Vec<usize> {
    let Some(&largest) = parts.first() else {
        return Vec::new();
    };
    (0..largest).map(|i| parts.iter().filter(|&&p| p > i).count()).collect()
}

/// `a` dominates `b` (same size): every partial sum of `a` is at least that of `b`.
pub fn dominates(a: &[usize], b: &[usize]) -> bool {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0usize, 0usize);
    for i in 0..len {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa < sb {
            return false;
        }
    }
    true
}

/// Compact label such as `(2,1^2)`.
pub fn label(r_seq: &[i64]) -> String {
    let items: Vec<String> = r_seq
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &m)| m > 0)
        .map(|(i, &m)| if m == 1 { format!("{}", i + 1) } else { format!("{}^{}", i + 1, m) })
        .collect();
    format!("({})", items.join(","))
}
