//! The plain-text diagram document: one `dim code birth death multiplicity`
//! entry per line, `#` starts a comment.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use parahom::bottleneck::UndecoratedDiagram;
use parahom::diagrams::{DecoratedPoint, FourDiagrams};
use parahom::measures::Behavior;

#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub dim: usize,
    pub behavior: Behavior,
    pub birth: f64,
    pub death: f64,
    pub multiplicity: usize,
}

impl Entry {
    fn key(&self) -> (usize, &'static str, f64, f64) {
        (self.dim, self.behavior.code(), self.birth, self.death)
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct DiagramDocument {
    entries: Vec<Entry>,
}

impl DiagramDocument {
    /// Entries are kept sorted by `(dim, code, birth, death)`.
    pub fn new(mut entries: Vec<Entry>) -> Self {
        entries.sort_by(|x, y| {
            let (a, b) = (x.key(), y.key());
            a.0.cmp(&b.0)
                .then(a.1.cmp(b.1))
                .then(a.2.total_cmp(&b.2))
                .then(a.3.total_cmp(&b.3))
        });
        Self { entries }
    }

    pub fn from_diagrams(diagrams: &[FourDiagrams]) -> Self {
        let entries = diagrams
            .iter()
            .flat_map(FourDiagrams::iter)
            .flat_map(|d| {
                d.iter().map(move |(pt, m)| Entry {
                    dim: d.dim(),
                    behavior: d.behavior(),
                    birth: pt.p(),
                    death: pt.q(),
                    multiplicity: m,
                })
            })
            .collect();
        Self::new(entries)
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Points of one `(dim, type)`; absent means empty.
    pub fn undecorated(&self, dim: usize, behavior: Behavior) -> UndecoratedDiagram {
        let mut out = UndecoratedDiagram::new();
        for e in self.entries.iter().filter(|e| e.dim == dim && e.behavior == behavior) {
            out.insert(e.birth, e.death, e.multiplicity);
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let entry = parse_entry(line).with_context(|| format!("line {}: {raw:?}", n + 1))?;
            entries.push(entry);
        }
        Ok(Self::new(entries))
    }

    pub fn serialize(&self) -> String {
        let mut out = String::from("# dim type birth death multiplicity\n");
        for e in &self.entries {
            let _ = writeln!(
                out,
                "{} {} {} {} {}",
                e.dim,
                e.behavior.code(),
                format_real(e.birth),
                format_real(e.death),
                e.multiplicity
            );
        }
        out
    }
}

fn parse_entry(line: &str) -> Result<Entry> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let [dim, code, birth, death, mult] = fields[..] else {
        bail!("expected 5 fields, found {}", fields.len());
    };
    let dim: usize = dim.parse().map_err(|_| anyhow!("bad dimension {dim:?}"))?;
    let behavior = Behavior::from_code(code).ok_or_else(|| anyhow!("unknown type code {code:?}"))?;
    let birth = parse_real(birth)?;
    let death = parse_real(death)?;
    let multiplicity: usize = mult.parse().map_err(|_| anyhow!("bad multiplicity {mult:?}"))?;
    if multiplicity == 0 {
        bail!("multiplicity must be at least 1");
    }
    DecoratedPoint::of_behavior(behavior, birth, death)?;
    Ok(Entry {
        dim,
        behavior,
        birth,
        death,
        multiplicity,
    })
}

pub fn parse_real(s: &str) -> Result<f64> {
    match s {
        "inf" | "+inf" => Ok(f64::INFINITY),
        "-inf" => Ok(f64::NEG_INFINITY),
        _ => {
            let v: f64 = s.parse().map_err(|_| anyhow!("bad number {s:?}"))?;
            if v.is_finite() {
                Ok(v)
            } else {
                bail!("bad number {s:?}")
            }
        }
    }
}

/// Up to 12 significant digits; integers without a decimal point.
pub fn format_real(v: f64) -> String {
    if v == f64::INFINITY {
        return "inf".into();
    }
    if v == f64::NEG_INFINITY {
        return "-inf".into();
    }
    let rounded: f64 = format!("{v:.11e}").parse().unwrap_or(v);
    if rounded == 0.0 {
        return "0".into();
    }
    format!("{rounded}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        assert_eq!(format_real(1.0), "1");
        assert_eq!(format_real(-3.0), "-3");
        assert_eq!(format_real(-0.0), "0");
        assert_eq!(format_real(0.1), "0.1");
        assert_eq!(format_real(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_real(f64::NEG_INFINITY), "-inf");
        assert_eq!(format_real(2.5e7), "25000000");
    }

    #[test]
    fn round_trip() {
        let text = "# dim type birth death multiplicity\n0 cc 0 1 1\n0 oo 0 1 1\n1 co 2.5 inf 2\n1 oc -inf 0.125 1\n";
        let doc = DiagramDocument::parse(text).unwrap();
        assert_eq!(doc.serialize(), text);
        assert_eq!(DiagramDocument::parse(&doc.serialize()).unwrap(), doc);
    }

    #[test]
    fn rejects_bad_entries() {
        assert!(DiagramDocument::parse("0 xx 0 1 1").is_err());
        assert!(DiagramDocument::parse("0 cc 0 1 0").is_err());
        assert!(DiagramDocument::parse("0 cc -inf 1 1").is_err());
        assert!(DiagramDocument::parse("0 oo 1 1 1").is_err());
        assert!(DiagramDocument::parse("0 cc 0 1").is_err());
        assert!(DiagramDocument::parse("# only a comment\n\n").unwrap().is_empty());
        assert!(DiagramDocument::parse("0 cc 1 1 1").is_ok());
    }
}
