//! The on-disk family format.
//!
//! A family file is a block of `# key: value` header lines followed by
//! M blocks of N sequence lines. The header echoes every construction
//! parameter, so a file reproduces itself; `# set: p` marker lines are
//! informational. Sequences are written as contiguous digit strings for
//! q <= 10 and as comma-separated integers for larger alphabets.
//!
//! Writing is deterministic: the same family always serializes to the same
//! bytes, and re-parsing a written file yields the identical in-memory
//! family.

use std::fmt;

use mocs_core::constructions::{
    ComplementarySet, Method, MocsFamily, PartitionPlan, Provenance,
};
use mocs_core::constructions::base_gbf;
use mocs_core::gbf::QarySequence;

/// A parse failure with its position (1-based line and column).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError { line, col, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

/// An in-memory family file: full construction parameters plus the M sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFile {
    pub q: u32,
    pub method: Method,
    pub plan: PartitionPlan,
    pub g: Vec<u32>,
    pub sets: Vec<ComplementarySet>,
}

/// Render the `parts` header value: parts joined by `;`, elements in
/// bijection order joined by `,` — the same syntax the CLI accepts.
pub fn parts_spec(plan: &PartitionPlan) -> String {
    plan.parts()
        .iter()
        .map(|part| {
            part.iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}

/// Parse the `parts` syntax back into ordered parts.
pub fn parse_parts_spec(spec: &str) -> Result<Vec<Vec<u32>>, String> {
    spec.split(';')
        .map(|part| {
            part.split(',')
                .map(|v| {
                    v.trim()
                        .parse::<u32>()
                        .map_err(|_| format!("bad part element `{v}`"))
                })
                .collect()
        })
        .collect()
}

impl FamilyFile {
    /// Wrap a single constructed set (the `gcs` method).
    pub fn from_set(q: u32, plan: PartitionPlan, g: Vec<u32>, set: ComplementarySet) -> Self {
        FamilyFile { q, method: Method::Gcs, plan, g, sets: vec![set] }
    }

    /// Wrap a constructed family.
    pub fn from_family(family: MocsFamily) -> Self {
        let prov = family.provenance().clone();
        FamilyFile {
            q: prov.q,
            method: prov.method,
            plan: prov.plan,
            g: prov.g,
            sets: family.sets().to_vec(),
        }
    }

    /// Set size M.
    pub fn set_size(&self) -> usize {
        self.sets.len()
    }

    /// Flock size N.
    pub fn flock_size(&self) -> usize {
        self.sets[0].flock_size()
    }

    /// Sequence length L.
    pub fn length(&self) -> u64 {
        self.sets[0].length()
    }

    /// Rebuild the family for verification; only meaningful for the family
    /// methods.
    pub fn into_family(self) -> mocs_core::Result<MocsFamily> {
        let provenance = Provenance {
            method: self.method,
            q: self.q,
            plan: self.plan,
            g: self.g,
        };
        MocsFamily::new(self.sets, provenance)
    }

    fn format_sequence(&self, seq: &QarySequence) -> String {
        if self.q <= 10 {
            seq.values()
                .iter()
                .map(|&v| char::from_digit(v, 10).unwrap())
                .collect()
        } else {
            seq.values()
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Serialize deterministically.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("# mocs-forge family\n");
        out.push_str(&format!("# construction: {}\n", self.method));
        out.push_str(&format!("# q: {}\n", self.q));
        out.push_str(&format!("# m: {}\n", self.plan.m()));
        out.push_str(&format!("# t: {}\n", self.plan.t()));
        out.push_str(&format!("# parts: {}\n", parts_spec(&self.plan)));
        let g_echo: Vec<String> = if self.g.is_empty() {
            vec!["0".to_string(); self.plan.m() as usize + 1]
        } else {
            self.g.iter().map(u32::to_string).collect()
        };
        out.push_str(&format!("# g: {}\n", g_echo.join(",")));
        if let Ok(f) = base_gbf(self.q, &self.plan, &self.g) {
            out.push_str(&format!("# f: {f}\n"));
        }
        out.push_str(&format!("# M: {}\n", self.set_size()));
        out.push_str(&format!("# N: {}\n", self.flock_size()));
        out.push_str(&format!("# L: {}\n", self.length()));
        for (p, set) in self.sets.iter().enumerate() {
            out.push_str(&format!("# set: {p}\n"));
            for member in set.members() {
                out.push_str(&self.format_sequence(member));
                out.push('\n');
            }
        }
        out
    }

    /// Parse a family file, reporting the first problem with its position.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut construction: Option<(Method, usize)> = None;
        let mut q: Option<u32> = None;
        let mut m: Option<u32> = None;
        let mut t: Option<u32> = None;
        let mut parts: Option<(Vec<Vec<u32>>, usize)> = None;
        let mut g: Option<Vec<u32>> = None;
        let mut set_count: Option<usize> = None;
        let mut flock: Option<usize> = None;
        let mut length: Option<u64> = None;
        let mut body: Vec<(usize, &str)> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim_end();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                let Some((key, value)) = comment.split_once(':') else {
                    continue; // free-form comment
                };
                let key = key.trim();
                let value = value.trim();
                let col = raw.find(':').map(|c| c + 2).unwrap_or(1);
                let bad = |msg: String| ParseError::new(lineno, col, msg);
                match key {
                    "construction" => {
                        let method: Method =
                            value.parse().map_err(|e: String| bad(e))?;
                        construction = Some((method, lineno));
                    }
                    "q" => q = Some(value.parse().map_err(|_| bad(format!("bad q `{value}`")))?),
                    "m" => m = Some(value.parse().map_err(|_| bad(format!("bad m `{value}`")))?),
                    "t" => t = Some(value.parse().map_err(|_| bad(format!("bad t `{value}`")))?),
                    "parts" => {
                        parts = Some((
                            parse_parts_spec(value).map_err(bad)?,
                            lineno,
                        ));
                    }
                    "g" => {
                        let coeffs: Result<Vec<u32>, _> =
                            value.split(',').map(|v| v.trim().parse::<u32>()).collect();
                        g = Some(coeffs.map_err(|_| bad(format!("bad g `{value}`")))?);
                    }
                    "M" => set_count = Some(value.parse().map_err(|_| bad(format!("bad M `{value}`")))?),
                    "N" => flock = Some(value.parse().map_err(|_| bad(format!("bad N `{value}`")))?),
                    "L" => length = Some(value.parse().map_err(|_| bad(format!("bad L `{value}`")))?),
                    _ => {} // `set`, `f` and future keys are informational
                }
                continue;
            }
            body.push((lineno, line));
        }

        let missing = |key: &str| ParseError::new(1, 1, format!("missing header `# {key}:`"));
        let (method, _) = construction.ok_or_else(|| missing("construction"))?;
        let q = q.ok_or_else(|| missing("q"))?;
        let m = m.ok_or_else(|| missing("m"))?;
        let t = t.ok_or_else(|| missing("t"))?;
        let (parts, parts_line) = parts.ok_or_else(|| missing("parts"))?;
        let g = g.unwrap_or_default();
        let set_count = set_count.ok_or_else(|| missing("M"))?;
        let flock = flock.ok_or_else(|| missing("N"))?;
        let length = length.ok_or_else(|| missing("L"))?;

        if q < 2 {
            return Err(ParseError::new(1, 1, format!("q must be at least 2, got {q}")));
        }
        let plan = PartitionPlan::new(m, parts, t)
            .map_err(|e| ParseError::new(parts_line, 1, e.to_string()))?;

        if set_count == 0 || flock == 0 || length == 0 {
            return Err(ParseError::new(1, 1, "M, N and L must be positive".to_string()));
        }
        if body.is_empty() {
            return Err(ParseError::new(
                text.lines().count().max(1),
                1,
                "empty body: no sequence lines".to_string(),
            ));
        }
        if body.len() != set_count * flock {
            return Err(ParseError::new(
                body[0].0,
                1,
                format!(
                    "expected M*N = {} sequence lines, found {}",
                    set_count * flock,
                    body.len()
                ),
            ));
        }

        let mut sequences = Vec::with_capacity(body.len());
        for (lineno, line) in body {
            sequences.push(parse_sequence(line, lineno, q, length)?);
        }

        let sets: Result<Vec<ComplementarySet>, ParseError> = sequences
            .chunks(flock)
            .map(|chunk| {
                ComplementarySet::new(chunk.to_vec())
                    .map_err(|e| ParseError::new(1, 1, e.to_string()))
            })
            .collect();
        Ok(FamilyFile { q, method, plan, g, sets: sets? })
    }
}

fn parse_sequence(
    line: &str,
    lineno: usize,
    q: u32,
    length: u64,
) -> Result<QarySequence, ParseError> {
    let mut values = Vec::with_capacity(length as usize);
    if q <= 10 {
        for (col, ch) in line.chars().enumerate() {
            let digit = ch
                .to_digit(10)
                .ok_or_else(|| ParseError::new(lineno, col + 1, format!("bad symbol `{ch}`")))?;
            if digit >= q {
                return Err(ParseError::new(
                    lineno,
                    col + 1,
                    format!("symbol {digit} is not a Z_{q} element"),
                ));
            }
            values.push(digit);
        }
    } else {
        let mut col = 1;
        for token in line.split(',') {
            let v: u32 = token.trim().parse().map_err(|_| {
                ParseError::new(lineno, col, format!("bad symbol `{token}`"))
            })?;
            if v >= q {
                return Err(ParseError::new(
                    lineno,
                    col,
                    format!("symbol {v} is not a Z_{q} element"),
                ));
            }
            values.push(v);
            col += token.len() + 1;
        }
    }
    if values.len() as u64 != length {
        return Err(ParseError::new(
            lineno,
            line.len() + 1,
            format!("expected {length} symbols, found {}", values.len()),
        ));
    }
    QarySequence::new(q, values).map_err(|e| ParseError::new(lineno, 1, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mocs_core::constructions::{build_gcs_theorem1, build_mocs_theorem2};

    fn example_plan(t: u32) -> PartitionPlan {
        PartitionPlan::new(6, vec![vec![1, 2], vec![3, 4, 5]], t).unwrap()
    }

    #[test]
    fn round_trip_identity() {
        let family = build_mocs_theorem2(4, &example_plan(3), &[]).unwrap();
        let file = FamilyFile::from_family(family);
        let text = file.to_text();
        let reparsed = FamilyFile::parse(&text).unwrap();
        assert_eq!(reparsed, file);
        // writing is deterministic
        assert_eq!(reparsed.to_text(), text);
    }

    #[test]
    fn gcs_file_shape() {
        let set = build_gcs_theorem1(4, &example_plan(3), &[]).unwrap();
        let file = FamilyFile::from_set(4, example_plan(3), Vec::new(), set);
        let text = file.to_text();
        assert!(text.contains("# construction: gcs\n"));
        assert!(text.contains("# parts: 1,2;3,4,5\n"));
        assert!(text.contains("# f: 2*x1*x2+2*x3*x4+2*x4*x5\n"));
        let body: Vec<&str> = text
            .lines()
            .filter(|l| !l.starts_with('#') && !l.is_empty())
            .collect();
        assert_eq!(body.len(), 8);
        assert!(body.iter().all(|l| l.len() == 40));
    }

    #[test]
    fn wide_alphabet_uses_commas() {
        let plan = PartitionPlan::new(3, vec![vec![1], vec![2]], 1).unwrap();
        let family = build_mocs_theorem2(12, &plan, &[]).unwrap();
        let file = FamilyFile::from_family(family);
        let text = file.to_text();
        let body_line = text.lines().find(|l| !l.starts_with('#')).unwrap();
        assert!(body_line.contains(','));
        assert_eq!(FamilyFile::parse(&text).unwrap(), file);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let family = build_mocs_theorem2(4, &example_plan(3), &[]).unwrap();
        let file = FamilyFile::from_family(family);
        let text = file.to_text();

        // corrupt one symbol into a letter
        let bad = text.replacen("0002", "00x2", 1);
        let err = FamilyFile::parse(&bad).unwrap_err();
        assert_eq!(err.col, 3);
        assert!(err.message.contains("bad symbol"));

        // a symbol outside the alphabet
        let bad = text.replacen("0002", "0052", 1);
        let err = FamilyFile::parse(&bad).unwrap_err();
        assert!(err.message.contains("not a Z_4 element"));

        // drop a body line
        let mut lines: Vec<&str> = text.lines().collect();
        let last = lines.len() - 1;
        lines.remove(last);
        let err = FamilyFile::parse(&lines.join("\n")).unwrap_err();
        assert!(err.message.contains("expected M*N"));

        // empty body
        let header_only: String = text
            .lines()
            .filter(|l| l.starts_with('#'))
            .collect::<Vec<_>>()
            .join("\n");
        let err = FamilyFile::parse(&header_only).unwrap_err();
        assert!(err.message.contains("empty body"));

        // missing header key
        let no_q: String = text
            .lines()
            .filter(|l| !l.starts_with("# q:"))
            .collect::<Vec<_>>()
            .join("\n");
        let err = FamilyFile::parse(&no_q).unwrap_err();
        assert!(err.message.contains("missing header"));
    }

    #[test]
    fn parts_spec_round_trip() {
        let plan = example_plan(3);
        let spec = parts_spec(&plan);
        assert_eq!(spec, "1,2;3,4,5");
        assert_eq!(parse_parts_spec(&spec).unwrap(), plan.parts());
        assert!(parse_parts_spec("1,,2").is_err());
        assert!(parse_parts_spec("1,2;a").is_err());
    }
}
