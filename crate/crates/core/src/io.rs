//! The GMAT and PMUL text formats.
//!
//! GMAT holds an explicit generator matrix:
//!
//! ```text
//! gmat q k n
//! <n space-separated element indices>   (k rows)
//! ```
//!
//! PMUL holds a projective multiset:
//!
//! ```text
//! pmul q k
//! <q_k space-separated multiplicities in canonical point order>
//! ```
//!
//! `q` is written as a plain integer for prime fields and as `p^m` for
//! extension fields. Lines end with LF and carry no trailing spaces. The
//! canonical modulus rule makes the `p^m` notation unambiguous, so files are
//! portable.

use crate::code::{GeneratorMatrix, ProjectiveMultiset};
use crate::error::{Error, Result};
use crate::field::{factor_prime_power, FieldElement, FieldSpec};
use crate::geometry::ProjectiveSpace;

/// Renders the field order: `p` for prime fields, `p^m` otherwise.
pub fn format_q(field: &FieldSpec) -> String {
    if field.m() == 1 {
        field.p().to_string()
    } else {
        format!("{}^{}", field.p(), field.m())
    }
}

/// Accepts `p`, `p^m`, or a plain prime-power integer.
pub fn parse_q(token: &str) -> Result<FieldSpec> {
    if let Some((ps, ms)) = token.split_once('^') {
        let p: u64 = ps
            .parse()
            .map_err(|_| Error::Parse(format!("bad field order {token:?}")))?;
        let m: u32 = ms
            .parse()
            .map_err(|_| Error::Parse(format!("bad field order {token:?}")))?;
        FieldSpec::make(p, m)
    } else {
        let q: u64 = token
            .parse()
            .map_err(|_| Error::Parse(format!("bad field order {token:?}")))?;
        let (p, m) = factor_prime_power(q)?;
        FieldSpec::make(p, m)
    }
}

pub fn write_gmat(g: &GeneratorMatrix) -> String {
    let mut out = format!("gmat {} {} {}\n", format_q(g.field()), g.k(), g.n());
    for r in 0..g.k() as usize {
        let row: Vec<String> = g.row(r).iter().map(|e| e.index().to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_gmat(text: &str) -> Result<GeneratorMatrix> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let mut tok = header.split_whitespace();
    if tok.next() != Some("gmat") {
        return Err(Error::Parse("expected gmat header".into()));
    }
    let field = parse_q(tok.next().ok_or_else(|| Error::Parse("missing q".into()))?)?;
    let k: u32 = parse_int(tok.next(), "k")?;
    let n: usize = parse_int(tok.next(), "n")?;
    let mut entries = Vec::with_capacity(k as usize * n);
    for r in 0..k {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {r}")))?;
        let row: Vec<u32> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(Error::Parse(format!(
                "row {r} has {} entries, expected {n}",
                row.len()
            )));
        }
        entries.extend(row.into_iter().map(FieldElement));
    }
    GeneratorMatrix::new(field, k, n, entries)
}

pub fn write_pmul(m: &ProjectiveMultiset) -> String {
    let space = m.space();
    let mut out = format!("pmul {} {}\n", format_q(space.field()), space.k());
    let row: Vec<String> = m.multiplicities().iter().map(|x| x.to_string()).collect();
    out.push_str(&row.join(" "));
    out.push('\n');
    out
}

pub fn parse_pmul(text: &str) -> Result<ProjectiveMultiset> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let mut tok = header.split_whitespace();
    if tok.next() != Some("pmul") {
        return Err(Error::Parse("expected pmul header".into()));
    }
    let field = parse_q(tok.next().ok_or_else(|| Error::Parse("missing q".into()))?)?;
    let k: u32 = parse_int(tok.next(), "k")?;
    let line = lines
        .next()
        .ok_or_else(|| Error::Parse("missing multiplicity row".into()))?;
    let mult: Vec<u64> = line
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad multiplicity {t:?}"))))
        .collect::<Result<_>>()?;
    let space = ProjectiveSpace::build(field, k)?;
    ProjectiveMultiset::new(space, mult)
}

/// Sniffs the format from the first token and parses either kind, returning
/// the matrix view and multiset view it implies.
pub enum CodeFile {
    Matrix(GeneratorMatrix),
    Multiset(ProjectiveMultiset),
}

pub fn parse_code_file(text: &str) -> Result<CodeFile> {
    match text.split_whitespace().next() {
        Some("gmat") => Ok(CodeFile::Matrix(parse_gmat(text)?)),
        Some("pmul") => Ok(CodeFile::Multiset(parse_pmul(text)?)),
        other => Err(Error::Parse(format!("unknown format {other:?}"))),
    }
}

fn parse_int<T: std::str::FromStr>(tok: Option<&str>, name: &str) -> Result<T> {
    tok.ok_or_else(|| Error::Parse(format!("missing {name}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad {name}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    #[test]
    fn gmat_roundtrip_prime_field() {
        let f = FieldSpec::make(2, 1).unwrap();
        let g = GeneratorMatrix::new(
            f,
            2,
            3,
            vec![1, 0, 0, 1, 1, 1].into_iter().map(FieldElement).collect(),
        )
        .unwrap();
        let text = write_gmat(&g);
        assert_eq!(text, "gmat 2 2 3\n1 0 0\n1 1 1\n");
        assert_eq!(parse_gmat(&text).unwrap(), g);
    }

    #[test]
    fn gmat_extension_field_header() {
        let f = FieldSpec::make(2, 2).unwrap();
        let g = GeneratorMatrix::new(
            f,
            1,
            2,
            vec![FieldElement(1), FieldElement(3)],
        )
        .unwrap();
        let text = write_gmat(&g);
        assert_eq!(text, "gmat 2^2 1 2\n1 3\n");
        let back = parse_gmat(&text).unwrap();
        assert_eq!(back.field().q(), 4);
        assert_eq!(back, g);
    }

    #[test]
    fn pmul_roundtrip() {
        let f = FieldSpec::make(3, 1).unwrap();
        let space = ProjectiveSpace::build(f, 2).unwrap();
        let m = ProjectiveMultiset::new(Arc::clone(&space), vec![1, 2, 0, 3]).unwrap();
        let text = write_pmul(&m);
        assert_eq!(text, "pmul 3 2\n1 2 0 3\n");
        assert_eq!(parse_pmul(&text).unwrap(), m);
    }

    #[test]
    fn parse_q_forms() {
        assert_eq!(parse_q("5").unwrap().q(), 5);
        assert_eq!(parse_q("2^3").unwrap().q(), 8);
        assert_eq!(parse_q("9").unwrap().q(), 9); // factored as 3^2
        assert!(parse_q("12").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_gmat("").is_err());
        assert!(parse_gmat("gmat 2 2 3\n1 0 0\n").is_err()); // missing row
        assert!(parse_gmat("gmat 2 2 2\n1 0\n1 1 1\n").is_err()); // row length
        assert!(parse_pmul("pmul 2 2\n1 2\n").is_err()); // wrong count
        assert!(parse_code_file("nope 1 2\n").is_err());
    }
}
