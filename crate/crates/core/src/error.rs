use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 2, got {0}")]
    InvalidRank(usize),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("generator index {letter} out of range for rank {n}")]
    InvalidLetter { letter: usize, n: usize },
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("translation vector {0:?} is not in the root lattice")]
    NotInRootLattice(Vec<i64>),
    #[error("cut {m} out of range for rank {n}")]
    CutOutOfRange { m: usize, n: usize },
    #[error("integer overflow")]
    Overflow,
    #[error("not a partition: {0:?}")]
    NotPartition(Vec<usize>),
    #[error("part {part} exceeds bound {bound}")]
    PartTooLarge { part: usize, bound: usize },
    #[error("shape {shape:?} does not fit in a {rows} x {cols} box")]
    ShapeOutOfBox { shape: Vec<usize>, rows: usize, cols: usize },
    #[error("shape {shape:?} is not a {n}-core")]
    NotCore { shape: Vec<usize>, n: usize },
    #[error("word is not a reduced word of a Grassmannian element: {0}")]
    NotGrassmannianWord(String),
    #[error("element is not Grassmannian")]
    NotGrassmannian,
    #[error("permutation is not a minimal coset representative for cut {0}")]
    NotCosetRepresentative(usize),
    #[error("degree {r} out of range for rank {n}")]
    DegreeOutOfRange { r: usize, n: usize },
    #[error("ring mismatch: Gr({m1},{n1}) vs Gr({m2},{n2})")]
    RingMismatch { m1: usize, n1: usize, m2: usize, n2: usize },
    #[error("negative structure constant {coeff} at q^{qdeg} {shape:?}")]
    NegativeStructureConstant { shape: Vec<usize>, qdeg: i64, coeff: i64 },
    #[error("element is not homogeneous in length")]
    NonHomogeneous,
    #[error("element is not in the span of non-commutative k-Schur functions")]
    NotInFominStanley,
    #[error("no factorization w = v u^r found: {0}")]
    FactorizationFailed(String),
    #[error("k-Schur recursion failed for {0:?}")]
    KSchurRecursion(Vec<usize>),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
