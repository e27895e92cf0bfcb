//! Text format:
//!
//! ```text
//! # comment
//! sign e2 -
//! circle: e1> e2< e1< e2>
//! circle:
//! ```
//!
//! `>` marks an arrow along the circle's reference orientation and `<` one
//! against it. Unlisted signs default to `+`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use super::{Arrow, RibbonGraph, Sign};
use crate::error::{Error, Result};

impl RibbonGraph {
    pub fn parse(text: &str) -> Result<Self> {
        let mut signs: BTreeMap<String, (Sign, usize)> = BTreeMap::new();
        let mut raw: Vec<Vec<(String, bool)>> = Vec::new();
        let mut first_line: BTreeMap<String, usize> = BTreeMap::new();

        for (i, line) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("circle:") {
                let mut circle = Vec::new();
                for tok in rest.split_whitespace() {
                    let (label, forward) = if let Some(l) = tok.strip_suffix('>') {
                        (l, true)
                    } else if let Some(l) = tok.strip_suffix('<') {
                        (l, false)
                    } else {
                        return Err(Error::parse(lineno, format!("arrow `{tok}` lacks a direction")));
                    };
                    if label.is_empty() || label.contains(['<', '>']) {
                        return Err(Error::parse(lineno, format!("malformed arrow `{tok}`")));
                    }
                    first_line.entry(label.to_string()).or_insert(lineno);
                    circle.push((label.to_string(), forward));
                }
                raw.push(circle);
                continue;
            }
            let mut words = line.split_whitespace();
            match words.next() {
                Some("sign") => {
                    let label = words
                        .next()
                        .ok_or_else(|| Error::parse(lineno, "sign line without an edge"))?;
                    let sign = match words.next() {
                        Some("+") => Sign::Plus,
                        Some("-") => Sign::Minus,
                        Some(other) => {
                            return Err(Error::parse(lineno, format!("sign must be + or -, got `{other}`")))
                        }
                        None => return Err(Error::parse(lineno, format!("edge `{label}` has no sign"))),
                    };
                    if let Some(extra) = words.next() {
                        return Err(Error::parse(lineno, format!("unexpected `{extra}`")));
                    }
                    if let Some((prev, _)) = signs.insert(label.to_string(), (sign, lineno)) {
                        if prev != sign {
                            return Err(Error::parse(lineno, format!("conflicting signs for `{label}`")));
                        }
                    }
                }
                _ => return Err(Error::parse(lineno, format!("unrecognised line `{line}`"))),
            }
        }

        let labels: Vec<String> = first_line
            .keys()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        for (label, (_, lineno)) in &signs {
            if !first_line.contains_key(label) {
                return Err(Error::parse(*lineno, format!("sign given for unknown edge `{label}`")));
            }
        }
        let index: BTreeMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut count = vec![0usize; labels.len()];
        let circles: Vec<Vec<Arrow>> = raw
            .iter()
            .map(|c| {
                c.iter()
                    .map(|(l, fwd)| {
                        let e = index[l.as_str()];
                        count[e] += 1;
                        Arrow::new(e, *fwd)
                    })
                    .collect()
            })
            .collect();
        for (e, &n) in count.iter().enumerate() {
            if n != 2 {
                return Err(Error::parse(
                    first_line[&labels[e]],
                    format!("edge `{}` appears {n} times, expected 2", labels[e]),
                ));
            }
        }
        let sign_vec = labels
            .iter()
            .map(|l| signs.get(l).map_or(Sign::Plus, |s| s.0))
            .collect();
        RibbonGraph::new(labels, sign_vec, circles)
    }

    /// Serialises in the text format; every edge gets an explicit sign line.
    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl FromStr for RibbonGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RibbonGraph::parse(s)
    }
}

impl fmt::Display for RibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, label) in self.labels.iter().enumerate() {
            writeln!(f, "sign {label} {}", self.signs[e].as_char())?;
        }
        for circle in &self.circles {
            write!(f, "circle:")?;
            for a in circle {
                write!(f, " {}{}", self.labels[a.edge], if a.forward { '>' } else { '<' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
