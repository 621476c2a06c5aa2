use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("class ({rank}, {degree}) is not in H: rank must be >= 0 and torsion classes need degree >= 0")]
    InvalidClass { rank: i64, degree: i64 },
    #[error("the zero class has no slope")]
    ZeroClass,
    #[error("genus {0} is too small for this operation (need g >= {1})")]
    GenusTooSmall(i64, i64),
    #[error("invalid Jordan type: {0}")]
    InvalidJordanType(String),
    #[error("invalid canonical region: {0}")]
    InvalidRegion(String),
    #[error("box (column {t}, height {h}) lies outside the tableau of size {s}")]
    OutOfTableau { t: usize, h: usize, s: usize },
    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },
    #[error("empty region has no slope")]
    EmptyRegion,
    #[error("Jordan type has torsion total class (rank 0)")]
    TorsionTotal,
    #[error("stratum comparison needs equal total ranks ({0} vs {1})")]
    RankMismatch(i64, i64),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("polytope is empty")]
    Infeasible,
    #[error("polytope is unbounded along variable d_{0}")]
    UnboundedPolytope(usize),
    #[error("invalid 1-flag: {0}")]
    InvalidFlag(String),
    #[error("guard of the condition is not met for (k, j) = ({k}, {j})")]
    GuardNotMet { k: usize, j: usize },
    #[error("Jordan type is not semistable")]
    NotSemistable,
    #[error("kappa exceeded its iteration cap of {0}")]
    IterationCapExceeded(usize),
    #[error("kappa is not injective: {0}")]
    InjectivityViolation(String),
    #[error("chain type has zero total rank")]
    ZeroRank,
    #[error("degree {d} is not coprime to rank {r}")]
    NotCoprime { r: i64, d: i64 },
    #[error("(g, r) = ({g}, {r}) exceeds the Kac polynomial budget")]
    SizeTooLarge { g: i64, r: i64 },
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unsupported field size {0}")]
    UnsupportedField(u64),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Errors that signal a bug in this crate rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Invariant(_)
                | Error::IterationCapExceeded(_)
                | Error::InjectivityViolation(_)
                | Error::UnboundedPolytope(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
