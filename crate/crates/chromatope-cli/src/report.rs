//! Run reporting: human-readable summary lines for stdout plus a
//! line-oriented `key=value` report file per command, and the list of
//! files a command produced.

use std::fmt::Display;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

/// Collected results of one command run. `ok` starts true and latches
/// false on the first failed verification; flagged discrepancies are
/// reported without clearing it.
pub struct Report {
    lines: Vec<String>,
    pairs: Vec<(String, String)>,
    ok: bool,
}

impl Report {
    pub fn new() -> Self {
        Report {
            lines: Vec::new(),
            pairs: Vec::new(),
            ok: true,
        }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn pair(&mut self, key: &str, value: impl Display) {
        self.pairs.push((key.to_string(), value.to_string()));
    }

    /// Records a verification outcome and returns its "OK"/"MISMATCH"
    /// suffix for the human line.
    pub fn check(&mut self, passed: bool) -> &'static str {
        if passed {
            "OK"
        } else {
            self.ok = false;
            "MISMATCH"
        }
    }

    pub fn fail(&mut self) {
        self.ok = false;
    }

    pub fn ok(&self) -> bool {
        self.ok
    }

    pub fn render(&self) -> String {
        let mut text = String::new();
        for (key, value) in &self.pairs {
            text.push_str(&format!("{key}={value}\n"));
        }
        text.push_str(if self.ok {
            "status=ok\n"
        } else {
            "status=fail\n"
        });
        text
    }

    pub fn print(&self) {
        for line in &self.lines {
            println!("{line}");
        }
    }
}

/// A command's run result: its report and every file it wrote.
pub struct Outcome {
    pub report: Report,
    pub files: Vec<PathBuf>,
}

impl Outcome {
    pub fn new() -> Self {
        Outcome {
            report: Report::new(),
            files: Vec::new(),
        }
    }

    /// Writes `bytes` under the output directory and records the path.
    pub fn emit(&mut self, dir: &Path, name: &str, bytes: &[u8]) -> io::Result<PathBuf> {
        fs::create_dir_all(dir)?;
        let path = dir.join(name);
        fs::write(&path, bytes)?;
        self.files.push(path.clone());
        Ok(path)
    }

    /// Writes the `key=value` report file itself.
    pub fn write_report(&mut self, dir: &Path, name: &str) -> io::Result<()> {
        let text = self.report.render();
        self.emit(dir, name, text.as_bytes())?;
        Ok(())
    }
}
