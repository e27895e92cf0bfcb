//! Signed Gauss codes.
//!
//! One line per link component, e.g. `O1+ U2- O3+ U1+ O2- U3+`. A token names
//! the crossing, whether the component passes over (`O`) or under (`U`) it,
//! and the crossing sign. `()` is a component without crossings. Virtual
//! crossings are not recorded.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ribbon::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Passage {
    pub crossing: usize,
    pub over: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualDiagram {
    labels: Vec<String>,
    signs: Vec<Sign>,
    components: Vec<Vec<Passage>>,
}

fn label_key(l: &str) -> (u8, u64, String) {
    match l.parse::<u64>() {
        Ok(n) => (0, n, String::new()),
        Err(_) => (1, 0, l.to_string()),
    }
}

impl VirtualDiagram {
    /// Builds a diagram; crossing `i` is `labels[i]` with sign `signs[i]`.
    pub fn new(labels: Vec<String>, signs: Vec<Sign>, components: Vec<Vec<Passage>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::parse(0, "a diagram needs at least one component"));
        }
        let n = labels.len();
        let mut seen = vec![(0usize, 0usize); n];
        for p in components.iter().flatten() {
            let Some(s) = seen.get_mut(p.crossing) else {
                return Err(Error::parse(0, format!("crossing #{} out of range", p.crossing)));
            };
            if p.over {
                s.0 += 1;
            } else {
                s.1 += 1;
            }
        }
        for (i, &(o, u)) in seen.iter().enumerate() {
            if (o, u) != (1, 1) {
                return Err(Error::parse(
                    0,
                    format!("crossing {} must be passed once over and once under", labels[i]),
                ));
            }
        }
        Ok(VirtualDiagram {
            labels,
            signs,
            components,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        struct Seen {
            sign: Sign,
            over: usize,
            under: usize,
            line: usize,
        }
        let mut info: BTreeMap<String, Seen> = BTreeMap::new();
        let mut raw: Vec<Vec<(String, bool)>> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if line.replace(' ', "") == "()" {
                raw.push(Vec::new());
                continue;
            }
            let mut comp = Vec::new();
            for tok in line.split_whitespace() {
                let bad = || Error::parse(lineno, format!("malformed passage `{tok}`"));
                let mut chars = tok.chars();
                let over = match chars.next() {
                    Some('O') => true,
                    Some('U') => false,
                    _ => return Err(bad()),
                };
                let sign = match chars.next_back() {
                    Some('+') => Sign::Plus,
                    Some('-') => Sign::Minus,
                    _ => return Err(bad()),
                };
                let label: String = chars.collect();
                if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(bad());
                }
                let entry = info.entry(label.clone()).or_insert(Seen {
                    sign,
                    over: 0,
                    under: 0,
                    line: lineno,
                });
                if entry.sign != sign {
                    return Err(Error::parse(lineno, format!("crossing {label} has inconsistent signs")));
                }
                if over {
                    entry.over += 1;
                } else {
                    entry.under += 1;
                }
                comp.push((label, over));
            }
            raw.push(comp);
        }
        if raw.is_empty() {
            return Err(Error::parse(0, "a diagram needs at least one component"));
        }
        for (label, s) in &info {
            match (s.over, s.under) {
                (1, 1) => {}
                (o, u) if o + u == 1 => {
                    return Err(Error::parse(s.line, format!("crossing {label} is unmatched")));
                }
                _ => {
                    return Err(Error::parse(
                        s.line,
                        format!("crossing {label} must be passed once over and once under"),
                    ))
                }
            }
        }
        let mut labels: Vec<String> = info.keys().cloned().collect();
        labels.sort_by_key(|l| label_key(l));
        let index: BTreeMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let components = raw
            .iter()
            .map(|c| {
                c.iter()
                    .map(|(l, over)| Passage {
                        crossing: index[l.as_str()],
                        over: *over,
                    })
                    .collect()
            })
            .collect();
        let signs = labels.iter().map(|l| info[l].sign).collect();
        VirtualDiagram::new(labels, signs, components)
    }

    pub fn serialize(&self) -> String {
        self.to_string()
    }

    pub fn num_crossings(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn crossing_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownEdge(label.to_string()))
    }

    pub fn sign(&self, i: usize) -> Sign {
        self.signs[i]
    }

    pub fn components(&self) -> &[Vec<Passage>] {
        &self.components
    }

    /// Groups of link components joined through shared crossings. Each group
    /// is returned as a diagram of its own, with crossing labels kept.
    pub fn split_parts(&self) -> Vec<VirtualDiagram> {
        let m = self.components.len();
        let mut owner = vec![Vec::new(); self.num_crossings()];
        for (ci, c) in self.components.iter().enumerate() {
            for p in c {
                owner[p.crossing].push(ci);
            }
        }
        let mut uf = crate::ribbon::UnionFind::new(m);
        for o in &owner {
            if let [a, b] = o[..] {
                uf.union(a, b);
            }
        }
        let group = uf.labels();
        let groups = uf.count();
        (0..groups)
            .map(|gi| {
                let comps: Vec<&Vec<Passage>> = (0..m).filter(|&c| group[c] == gi).map(|c| &self.components[c]).collect();
                let mut keep: Vec<usize> = comps.iter().flat_map(|c| c.iter().map(|p| p.crossing)).collect();
                keep.sort_unstable();
                keep.dedup();
                let remap: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &x)| (x, i)).collect();
                VirtualDiagram {
                    labels: keep.iter().map(|&x| self.labels[x].clone()).collect(),
                    signs: keep.iter().map(|&x| self.signs[x]).collect(),
                    components: comps
                        .iter()
                        .map(|c| {
                            c.iter()
                                .map(|p| Passage {
                                    crossing: remap[&p.crossing],
                                    over: p.over,
                                })
                                .collect()
                        })
                        .collect(),
                }
            })
            .collect()
    }
}

impl FromStr for VirtualDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VirtualDiagram::parse(s)
    }
}

impl fmt::Display for VirtualDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.components {
            if c.is_empty() {
                writeln!(f, "()")?;
                continue;
            }
            let toks: Vec<String> = c
                .iter()
                .map(|p| {
                    format!(
                        "{}{}{}",
                        if p.over { 'O' } else { 'U' },
                        self.labels[p.crossing],
                        self.signs[p.crossing].as_char()
                    )
                })
                .collect();
            writeln!(f, "{}", toks.join(" "))?;
        }
        Ok(())
    }
}
