use crate::pattern::BoundaryKind;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("size {l} has the wrong parity for {kind:?}")]
    ParityMismatch { kind: BoundaryKind, l: usize },

    #[error("size {l} too small for {kind:?} (need {min} or more)")]
    SizeTooSmall { kind: BoundaryKind, l: usize, min: usize },

    #[error("generator index {i} out of range for {kind:?} of size {l}")]
    GeneratorOutOfRange { kind: BoundaryKind, l: usize, i: usize },

    #[error("invalid Dyck path: {0}")]
    InvalidPath(String),

    #[error("{kind:?} patterns of size {l} have no Dyck encoding")]
    NotDyckRepresentable { kind: BoundaryKind, l: usize },

    #[error("state space for {kind:?} at L = {l} exceeds the size cap {cap}")]
    SizeCapExceeded { kind: BoundaryKind, l: usize, cap: usize },

    #[error("Hamiltonian kernel has dimension != 1 (rank {rank} at dimension {dim})")]
    KernelDefect { rank: usize, dim: usize },

    #[error("ground state verification failed: {0}")]
    GroundStateDefect(String),

    #[error("no closed form is known for {kind:?}")]
    NoClosedForm { kind: BoundaryKind },

    #[error("index out of domain for combinatorial family: {0}")]
    CombDomain(String),

    #[error("malformed generating-function text: {0}")]
    BadGenFunText(String),
}
