use thiserror::Error;

pub type Result<T> = std::result::Result<T, LpmError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpmError {
    #[error("invalid character {found:?} at position {position} (expected 'E' or 'N')")]
    InvalidCharacter { position: usize, found: char },
    #[error("empty path word")]
    EmptyWord,
    #[error("paths end at different points: lower ends at ({lower_m},{lower_r}), upper at ({upper_m},{upper_r})")]
    EndpointMismatch {
        lower_m: usize,
        lower_r: usize,
        upper_m: usize,
        upper_r: usize,
    },
    #[error("lower path rises above upper path after step {index}")]
    DominanceViolation { index: usize },
    #[error("expected a subset of size {expected}, got {found}")]
    WrongCardinality { expected: usize, found: usize },
    #[error("element {element} outside ground set 1..={size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("no basis has coordinate {element} equal to {value}")]
    EmptyFace { element: usize, value: u8 },
    #[error("lower path is not of the form E^m N^r")]
    NotGeneralizedCatalan,
    #[error("region has {components} connected components; split it into blocks first")]
    DisconnectedRegion { components: usize },
    #[error("inequality is not a facet of this region")]
    NotAFacet,
    #[error("({x}, {j}) is not a hyperplane split of this region")]
    InvalidSplit { x: usize, j: usize },
    #[error("point does not lie in the order chamber of the given permutation")]
    WrongChamber,
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("hypersimplex parameters need 1 <= k <= n-1, got k={k}, n={n}")]
    BadK { k: usize, n: usize },
    #[error("cell {label:?} has determinant {det}, expected +-1")]
    NonUnimodularCell { label: Vec<usize>, det: i128 },
    #[error("region is not a border strip")]
    NotABorderStrip,
    #[error("size {size} exceeds the cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("interpolated polynomial disagrees with the lattice point count at t = {t}")]
    InterpolationMismatch { t: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
