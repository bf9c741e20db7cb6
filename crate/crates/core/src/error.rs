use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GcatError {
    #[error("cannot compose {g_domain}->{g_codomain} after {f_domain}->{f_codomain}")]
    Composition {
        g_domain: usize,
        g_codomain: usize,
        f_domain: usize,
        f_codomain: usize,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("level {level} exceeds truncation width {width}")]
    Truncation { level: usize, width: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, GcatError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(GcatError::Domain(msg.into()))
}
