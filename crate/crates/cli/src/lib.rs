//! The `jones-asy` front end. The binary is a thin wrapper around
//! [`execute`], which writes one [`OutputRecord`] as JSON or CSV.

pub mod args;
pub mod commands;
pub mod output;
pub mod record;

use std::fmt;
use std::io::Write;

pub use args::{Cli, Command, Format};
pub use record::{OutputRecord, Row};

/// Overrides `--threads`.
pub const THREADS_ENV: &str = "JONES_ASY_THREADS";

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or environment; exit code 2.
    Usage(String),
    /// The library refused the inputs; exit code 3.
    Library(torus_jones::Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Library(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage: {msg}"),
            CliError::Library(e) => write!(f, "{}: {e}", e.name()),
            CliError::Io(e) => write!(f, "io: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<torus_jones::Error> for CliError {
    fn from(e: torus_jones::Error) -> Self {
        CliError::Library(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Worker count: the environment wins over the flag; `None` lets rayon decide.
pub fn thread_count(flag: Option<usize>, env: Option<&str>) -> Result<Option<usize>, CliError> {
    let parse = |s: &str| match s.trim().parse::<usize>() {
        Ok(k) if k > 0 => Ok(k),
        _ => Err(CliError::Usage(format!("{THREADS_ENV}={s} is not a positive integer"))),
    };
    match (env, flag) {
        (Some(s), _) => parse(s).map(Some),
        (None, Some(0)) => Err(CliError::Usage("--threads must be positive".into())),
        (None, k) => Ok(k),
    }
}

/// Runs a parsed command and writes its record to `--out` or `stdout`.
pub fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<OutputRecord, CliError> {
    let common = commands::common(&cli.command);
    let env = std::env::var(THREADS_ENV).ok();
    let threads = thread_count(common.threads, env.as_deref())?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = threads {
        builder = builder.num_threads(k);
    }
    let pool = builder.build().map_err(|e| CliError::Usage(e.to_string()))?;
    let record = pool.install(|| commands::run(&cli.command))?;

    let text = output::render(&record, common.format)?;
    match &common.out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(record)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn environment_overrides_the_flag() {
        assert_eq!(thread_count(Some(4), Some("2")).unwrap(), Some(2));
        assert_eq!(thread_count(Some(4), None).unwrap(), Some(4));
        assert_eq!(thread_count(None, None).unwrap(), None);
        assert!(thread_count(None, Some("zero")).is_err());
        assert!(thread_count(Some(0), None).is_err());
    }
}
