//! Run configuration: which resolution to raster at and where files go.
//! Precedence, highest first: command-line flags, the `--config` file,
//! the `CHROMATOPE_OUT` environment variable, then built-in defaults.

use std::fs;
use std::path::{Path, PathBuf};

use crate::CliError;

pub const OUT_ENV: &str = "CHROMATOPE_OUT";
pub const DEFAULT_RES: usize = 1024;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub res: usize,
    pub out: PathBuf,
}

impl RunConfig {
    /// Derived config for a gallery subdirectory.
    pub fn with_out(&self, out: PathBuf) -> Self {
        RunConfig { res: self.res, out }
    }
}

/// Parses a flat `key=value` config file; keys are `res` and `out`,
/// blank lines and `#` comments are ignored.
fn parse_config(path: &Path) -> Result<(Option<usize>, Option<PathBuf>), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    let mut res = None;
    let mut out = None;
    for (number, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Usage(format!(
                "config line {} is not key=value: {raw}",
                number + 1
            )));
        };
        match key.trim() {
            "res" => {
                let parsed = value
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::Usage(format!("config res is not a number: {value}")))?;
                res = Some(parsed);
            }
            "out" => out = Some(PathBuf::from(value.trim())),
            other => {
                return Err(CliError::Usage(format!("unknown config key: {other}")));
            }
        }
    }
    Ok((res, out))
}

pub fn resolve(
    res_flag: Option<usize>,
    out_flag: Option<PathBuf>,
    config_flag: Option<PathBuf>,
) -> Result<RunConfig, CliError> {
    let (file_res, file_out) = match &config_flag {
        Some(path) => parse_config(path)?,
        None => (None, None),
    };
    let res = res_flag.or(file_res).unwrap_or(DEFAULT_RES);
    if res < 16 {
        return Err(CliError::Usage(format!("resolution {res} is below 16")));
    }
    let out = out_flag
        .or(file_out)
        .or_else(|| std::env::var_os(OUT_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("out"));
    Ok(RunConfig { res, out })
}
