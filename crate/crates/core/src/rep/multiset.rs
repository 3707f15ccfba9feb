use std::fmt;

use crate::dynkin::positive_roots;
use crate::error::{Error, Result};
use crate::parse::parse_dim_vector;
use crate::quiver::{DimVector, Quiver};

/// A representation given by its decomposition into indecomposables: each
/// positive root with a multiplicity, in input order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootMultiset {
    entries: Vec<(DimVector, usize)>,
}

impl RootMultiset {
    /// Validates every root against the quiver. Repeated roots are merged into
    /// their first occurrence; zero multiplicities are dropped.
    pub fn new(quiver: &Quiver, entries: Vec<(DimVector, usize)>) -> Result<Self> {
        let roots = positive_roots(quiver)?;
        let mut merged: Vec<(DimVector, usize)> = Vec::new();
        for (r, m) in entries {
            quiver.check_dims(&r)?;
            if !roots.contains(&r) {
                return Err(Error::input(format!("{r} is not a positive root of the quiver")));
            }
            if m == 0 {
                continue;
            }
            match merged.iter_mut().find(|(x, _)| *x == r) {
                Some(e) => e.1 += m,
                None => merged.push((r, m)),
            }
        }
        Ok(RootMultiset { entries: merged })
    }

    pub fn empty() -> Self {
        RootMultiset { entries: Vec::new() }
    }

    /// One entry per listed summand (repeats allowed).
    pub fn from_summands(quiver: &Quiver, summands: &[DimVector]) -> Result<Self> {
        Self::new(quiver, summands.iter().map(|r| (r.clone(), 1)).collect())
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<(DimVector, usize)>) -> Self {
        RootMultiset { entries }
    }

    pub fn entries(&self) -> &[(DimVector, usize)] {
        &self.entries
    }

    pub fn distinct_roots(&self) -> Vec<DimVector> {
        self.entries.iter().map(|(r, _)| r.clone()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn num_summands(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// Summands with multiplicity, in entry order.
    pub fn summands(&self) -> Vec<DimVector> {
        self.entries.iter().flat_map(|(r, m)| std::iter::repeat_n(r.clone(), *m)).collect()
    }

    pub fn total_dims(&self, n: usize) -> DimVector {
        self.entries.iter().fold(DimVector::zeros(n), |acc, (r, m)| acc.add(&r.scale(*m as u32)))
    }

    /// Parses lines `summand: <dims> x <mult>` (`x <mult>` optional, `#` comments).
    pub fn parse(quiver: &Quiver, text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let rest = content
                .strip_prefix("summand:")
                .ok_or_else(|| Error::Parse { line, msg: format!("expected `summand: ...`, got `{content}`") })?;
            entries.push(parse_summand(rest).map_err(|msg| Error::Parse { line, msg })?);
        }
        Self::new(quiver, entries)
    }

    /// Inline form for command lines: `1,1x2+0,1`.
    pub fn parse_inline(quiver: &Quiver, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "0" {
            return Ok(Self::empty());
        }
        let entries = text
            .split('+')
            .map(|s| parse_summand(s).map_err(|msg| Error::Parse { line: 1, msg }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(quiver, entries)
    }
}

fn parse_summand(text: &str) -> std::result::Result<(DimVector, usize), String> {
    let (dims, mult) = match text.split_once('x') {
        Some((d, m)) => {
            let m: usize = m.trim().parse().map_err(|_| format!("bad multiplicity `{}`", m.trim()))?;
            (d, m)
        }
        None => (text, 1),
    };
    let v = parse_dim_vector(dims.trim()).map_err(|e| e.to_string())?;
    Ok((v, mult))
}

impl fmt::Display for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(r, m)| if *m == 1 { r.to_string() } else { format!("{r}x{m}") })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_file_format() {
        let q = Quiver::linear_a(2);
        let m = RootMultiset::parse(&q, "# P plus S2\nsummand: 1,1 x 2\nsummand: 0,1\n").unwrap();
        assert_eq!(m.entries(), &[(DimVector(vec![1, 1]), 2), (DimVector(vec![0, 1]), 1)]);
        assert_eq!(m.total_dims(2), DimVector(vec![2, 3]));
        assert_eq!(m.num_summands(), 3);
    }

    #[test]
    fn inline_round_trip() {
        let q = Quiver::linear_a(3);
        let m = RootMultiset::parse_inline(&q, "1,1,0x2+0,0,1").unwrap();
        assert_eq!(RootMultiset::parse_inline(&q, &m.to_string()).unwrap(), m);
    }

    #[test]
    fn non_roots_rejected() {
        let q = Quiver::linear_a(2);
        assert!(RootMultiset::parse(&q, "summand: 2,1 x 1\n").is_err());
        assert!(RootMultiset::parse(&q, "summand: 1 x 1\n").is_err());
        assert!(matches!(RootMultiset::parse(&q, "part: 1,1\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn duplicates_merge() {
        let q = Quiver::linear_a(2);
        let m = RootMultiset::parse_inline(&q, "1,0+0,1+1,0").unwrap();
        assert_eq!(m.entries().len(), 2);
        assert_eq!(m.entries()[0].1, 2);
    }
}
