//! The plain-text group file format:
//!
//! ```text
//! # optional comments
//! degree 4
//! gen (1 2)
//! gen (1 2 3 4)
//! ```

use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;

/// Parses the group file format into a degree and generator list.
pub fn parse_group_file(text: &str) -> Result<(usize, Vec<Permutation>)> {
    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();

    for (number, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fail = |reason: String| Error::ParseGroupFile {
            line: number + 1,
            reason,
        };
        if let Some(rest) = line.strip_prefix("degree") {
            if degree.is_some() {
                return Err(fail("degree declared twice".into()));
            }
            degree = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|e| fail(format!("bad degree: {e}")))?,
            );
        } else if let Some(rest) = line.strip_prefix("gen") {
            let d = degree.ok_or_else(|| fail("gen before degree".into()))?;
            generators.push(
                Permutation::parse_cycles(rest.trim(), d)
                    .map_err(|e| fail(e.to_string()))?,
            );
        } else {
            return Err(fail(format!("expected degree or gen, got {line:?}")));
        }
    }

    let degree = degree.ok_or(Error::ParseGroupFile {
        line: 0,
        reason: "missing degree line".into(),
    })?;
    Ok((degree, generators))
}

/// Parses and closes a group file in one step.
pub fn load_group(text: &str, cap: usize) -> Result<PermutationGroup> {
    let (degree, generators) = parse_group_file(text)?;
    PermutationGroup::generate(&generators, degree, cap)
}

/// Renders a group back into the file format, generators in order.
pub fn format_group_file(group: &PermutationGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&format!("gen {}\n", g.to_cycles()));
    }
    out
}

/// Parses a comma-separated list of cycle expressions, the inline form used
/// for subgroup generators (e.g. `"(1 2)(3 4), (1 3)"`).
pub fn parse_generator_list(text: &str, degree: usize) -> Result<Vec<Permutation>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|part| Permutation::parse_cycles(part.trim(), degree))
        .collect()
}
