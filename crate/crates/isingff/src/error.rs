use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("index {n} outside the analytic range 0..{limit} at N={big_n}")]
    Range { big_n: i64, n: i64, limit: i64 },
    #[error("out of domain: {0}")]
    Domain(String),
    #[error("negative Pochhammer length {0}")]
    NegativeLength(i64),
    #[error("center {center} below degree {degree}")]
    MalformedCenter { center: i64, degree: i64 },
    #[error("ill-posed application: {0}")]
    IllPosed(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("linear system: {0}")]
    Linear(String),
    #[error("degenerate kernel: {0}")]
    Degenerate(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
