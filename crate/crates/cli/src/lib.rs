//! File formats, JSON records, parallel drivers and the command-line front
//! end for [`revtour_core`].

pub mod cli;
pub mod drive;
pub mod format;
pub mod records;

pub use cli::run;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] revtour_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }
}
