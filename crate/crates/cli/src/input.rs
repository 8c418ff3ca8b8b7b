use std::fs;
use std::path::{Path, PathBuf};

use attractors::{parse_attractor_file, AttractorSet, RemappedText};

use crate::Failure;

pub fn read_to_string(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

/// Raw bytes with one trailing newline dropped, or one decimal symbol per
/// line with `integers`.
pub fn read_text(path: &Path, integers: bool) -> Result<RemappedText, Failure> {
    if integers {
        let contents = read_to_string(path)?;
        let mut symbols = Vec::new();
        for (i, line) in contents.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let s: u64 = line.parse().map_err(|_| {
                Failure::Input(format!("{}:{}: expected a decimal symbol, found {line:?}", path.display(), i + 1))
            })?;
            symbols.push(s);
        }
        return Ok(RemappedText::from_symbols(&symbols)?);
    }
    let mut raw = fs::read(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    if raw.last() == Some(&b'\n') {
        raw.pop();
        if raw.last() == Some(&b'\r') {
            raw.pop();
        }
    }
    Ok(RemappedText::from_bytes(&raw)?)
}

pub fn read_gamma(path: &Path, n: usize) -> Result<AttractorSet, Failure> {
    let contents = read_to_string(path)?;
    parse_attractor_file(&contents, n).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

pub fn write(prefix: &Path, ext: &str, body: &str) -> Result<(), Failure> {
    let mut name = prefix.as_os_str().to_owned();
    name.push(".");
    name.push(ext);
    let path = PathBuf::from(name);
    fs::write(&path, body).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
}
