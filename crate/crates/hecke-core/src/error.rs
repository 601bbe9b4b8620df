use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("charge {0:?} is not cylindrical for e = {1}")]
    ChargeNotCylindrical(Vec<i64>, i64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("tableau is not standard")]
    NotStandard,
    #[error("component heights exceed {0:?}")]
    HeightOverflow(Vec<usize>),
    #[error("height vector {0:?} is not admissible for this charge")]
    NotAdmissible(Vec<usize>),
    #[error("e = {e} must exceed h = {h}")]
    ESmall { e: i64, h: usize },
    #[error("point lies on a wall")]
    OnWall,
    #[error("point is not in the fundamental alcove")]
    NotInAlcove,
    #[error("weight is not calibrated")]
    NotCalibrated,
    #[error("multipartition is not calibrated")]
    NotCali,
    #[error("invalid border set: {0}")]
    InvalidBorder(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("inconsistent form around a cycle")]
    InconsistentForm,
    #[error("sign system is infeasible")]
    Infeasible,
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ChargeNotCylindrical(..) => "CHARGE_NOT_CYLINDRICAL",
            Error::InvalidParameter(_) => "INVALID_PARAMETER",
            Error::SizeMismatch(..) => "SIZE_MISMATCH",
            Error::NotStandard => "NOT_STANDARD",
            Error::HeightOverflow(_) => "HEIGHT_OVERFLOW",
            Error::NotAdmissible(_) => "NOT_ADMISSIBLE",
            Error::ESmall { .. } => "E_NOT_GREATER_THAN_H",
            Error::OnWall => "ON_WALL",
            Error::NotInAlcove => "NOT_IN_ALCOVE",
            Error::NotCalibrated => "NOT_CALIBRATED",
            Error::NotCali => "NOT_CALI",
            Error::InvalidBorder(_) => "INVALID_BORDER",
            Error::DivisionByZero => "DIVISION_BY_ZERO",
            Error::InconsistentForm => "INCONSISTENT_FORM",
            Error::Infeasible => "INFEASIBLE",
        }
    }
}
