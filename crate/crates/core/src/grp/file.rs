//! Text group files: `degree <n>` followed by one generator per line in
//! disjoint-cycle notation. Blank lines and `#` comments are ignored.

use std::path::Path;

use super::perm::Permutation;
use super::table::{group_from_generators, GroupTable};
use crate::error::{Error, Result};

/// Parses a group file body; `origin` names the source in error messages.
pub fn parse_group_file(text: &str, origin: &str) -> Result<(usize, Vec<Permutation>)> {
    let err = |line: usize, message: String| Error::Parse {
        path: origin.to_string(),
        line,
        message,
    };
    let mut degree = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let mut words = line.split_whitespace();
                if words.next() != Some("degree") {
                    return Err(err(lineno, "expected 'degree <n>'".into()));
                }
                let n = words
                    .next()
                    .and_then(|w| w.parse::<usize>().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| err(lineno, "degree must be a positive integer".into()))?;
                if words.next().is_some() {
                    return Err(err(lineno, "trailing text after degree".into()));
                }
                degree = Some(n);
            }
            Some(n) => {
                let p = Permutation::parse_cycles(n, line)
                    .map_err(|e| err(lineno, e.to_string()))?;
                gens.push(p);
            }
        }
    }
    let degree = degree.ok_or_else(|| err(1, "missing 'degree <n>' line".into()))?;
    Ok((degree, gens))
}

pub fn read_group_file(path: &Path, bound: usize) -> Result<GroupTable> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {}", path.display(), e)))?;
    let (degree, gens) = parse_group_file(&text, &path.display().to_string())?;
    group_from_generators(degree, &gens, bound)
}
