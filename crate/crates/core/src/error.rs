use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rational {0:?}: expected an integer or canonical \"p/q\" with q > 0")]
    InvalidRational(String),
    #[error("convex hull of an empty set")]
    EmptyHull,
    #[error("duplicate point at positions {0} and {1}")]
    DuplicatePoint(usize, usize),
    #[error("point {0} of the subset is not in the ambient set")]
    NotSubset(usize),
    #[error("squared radius must be positive")]
    NonPositiveRadius,
    #[error("plane normal is zero")]
    ZeroNormal,
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("point set of size {0} exceeds the supported maximum of {1}")]
    TooManyPoints(usize, usize),
    #[error("disks {0} and {1} overlap or coincide")]
    InvalidInstance(usize, usize),
    #[error("disks {0} and {1} are not tangent")]
    NotTangent(usize, usize),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("points {0} and {1} project to the same planar point")]
    ProjectionCollision(usize, usize),
    #[error("points are not in general position: {0}, {1}, {2} are collinear")]
    NotGeneralPosition(usize, usize, usize),
    #[error("parameter out of range: {0}")]
    InvalidParameter(String),
    #[error("subset is not in convex position")]
    NotConvex,
    #[error("subset has size {found}, expected {expected}")]
    WrongSize { expected: usize, found: usize },
    #[error("swap on pair ({0}, {1}) broke convex position")]
    SwapBrokeConvexity(usize, usize),
    #[error("red and blue share the point at red {0}, blue {1}")]
    ColorOverlap(usize, usize),
}
