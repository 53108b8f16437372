use std::path::Path;

use anyhow::anyhow;

/// An error paired with the process exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
    /// Output to emit before the error (the diff listing of a failed comparison).
    pub stdout: Option<String>,
}

impl Failure {
    fn new(code: u8, error: anyhow::Error) -> Self {
        Self { code, error, stdout: None }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new(1, anyhow!(message.into()))
    }

    pub fn validation(error: anyhow::Error) -> Self {
        Self::new(1, error)
    }

    pub fn io(error: anyhow::Error) -> Self {
        Self::new(2, error)
    }

    pub fn paper(stdout: String, error: anyhow::Error) -> Self {
        Self { code: 3, error, stdout: Some(stdout) }
    }

    pub fn path(self, path: &Path) -> Self {
        let context = path.display().to_string();
        Self { error: self.error.context(context), ..self }
    }
}

impl From<paramcost::Error> for Failure {
    fn from(e: paramcost::Error) -> Self {
        let io = match &e {
            paramcost::Error::Io(_) => true,
            paramcost::Error::Csv(c) => matches!(c.kind(), csv::ErrorKind::Io(_)),
            _ => false,
        };
        if io {
            Self::io(e.into())
        } else {
            Self::validation(e.into())
        }
    }
}

pub trait ResultExt<T> {
    fn classify(self) -> Result<T, Failure>;
}

impl<T> ResultExt<T> for paramcost::Result<T> {
    fn classify(self) -> Result<T, Failure> {
        self.map_err(Failure::from)
    }
}

pub trait WithPath<T> {
    fn with_path(self, path: &Path) -> Result<T, Failure>;
}

impl<T> WithPath<T> for Result<T, Failure> {
    fn with_path(self, path: &Path) -> Result<T, Failure> {
        self.map_err(|f| f.path(path))
    }
}
