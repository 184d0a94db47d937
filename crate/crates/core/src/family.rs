//! Graph families: planarity, forbidden cycle lengths, girth and degree caps.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cycles::{find_cycle_of_length, has_path_of_length};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::planarity::is_planar;

/// A hereditary graph class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    #[serde(default)]
    pub require_planar: bool,
    #[serde(default)]
    pub forbidden_cycle_lengths: BTreeSet<usize>,
    #[serde(default)]
    pub min_girth: Option<usize>,
    #[serde(default)]
    pub max_degree_cap: Option<usize>,
}

/// First constraint a graph violates, with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "constraint", rename_all = "kebab-case")]
pub enum Violation {
    NotPlanar,
    ForbiddenCycle { length: usize, cycle: Vec<Vertex> },
    DegreeCap { vertex: Vertex, degree: usize, cap: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotPlanar => write!(f, "graph is not planar"),
            Violation::ForbiddenCycle { length, cycle } => {
                write!(f, "forbidden {length}-cycle {cycle:?}")
            }
            Violation::DegreeCap { vertex, degree, cap } => {
                write!(f, "vertex {vertex} has degree {degree} above cap {cap}")
            }
        }
    }
}

impl FamilySpec {
    /// No constraints at all.
    pub fn unrestricted() -> Self {
        FamilySpec::default()
    }

    pub fn planar() -> Self {
        FamilySpec { require_planar: true, ..Default::default() }
    }

    /// Planar graphs without triangles (girth at least 4).
    pub fn triangle_free_planar() -> Self {
        FamilySpec::planar().forbid(3)
    }

    /// Planar graphs without 4-cycles.
    pub fn c4_free_planar() -> Self {
        FamilySpec::planar().forbid(4)
    }

    /// Planar graphs of girth at least `g`.
    pub fn planar_with_girth(g: usize) -> Self {
        FamilySpec { require_planar: true, min_girth: Some(g), ..Default::default() }.normalized()
    }

    pub fn forbid(mut self, len: usize) -> Self {
        self.forbidden_cycle_lengths.insert(len);
        self
    }

    pub fn with_max_degree(mut self, cap: usize) -> Self {
        self.max_degree_cap = Some(cap);
        self
    }

    /// Expands `min_girth = g` into the forbidden lengths `3..g`.
    pub fn normalized(mut self) -> Self {
        if let Some(g) = self.min_girth {
            self.forbidden_cycle_lengths.extend(3..g);
        }
        self
    }

    pub fn is_normalized(&self) -> bool {
        self.min_girth
            .is_none_or(|g| (3..g).all(|k| self.forbidden_cycle_lengths.contains(&k)))
    }

    /// Smallest cycle length the family allows; every member has at least this girth.
    pub fn girth_lower_bound(&self) -> usize {
        let mut k = 3;
        while self.forbidden_cycle_lengths.contains(&k) {
            k += 1;
        }
        k
    }

    /// Checks every constraint; on failure reports the first violated one.
    pub fn check(&self, g: &Graph) -> std::result::Result<(), Violation> {
        let spec = if self.is_normalized() { self.clone() } else { self.clone().normalized() };
        if spec.require_planar && !is_planar(g) {
            return Err(Violation::NotPlanar);
        }
        for &k in &spec.forbidden_cycle_lengths {
            if let Some(cycle) = find_cycle_of_length(g, k).expect("lengths are at least 3") {
                return Err(Violation::ForbiddenCycle { length: k, cycle });
            }
        }
        if let Some(cap) = spec.max_degree_cap {
            if let Some(v) = (0..g.order()).find(|&v| g.degree(v) > cap) {
                return Err(Violation::DegreeCap { vertex: v, degree: g.degree(v), cap });
            }
        }
        Ok(())
    }

    /// True iff `g + uv` is still in the family, assuming `g` already is.
    pub fn admits_edge(&self, g: &Graph, u: Vertex, v: Vertex) -> bool {
        if u == v || g.has_edge(u, v) {
            return false;
        }
        if let Some(cap) = self.max_degree_cap {
            if g.degree(u) >= cap || g.degree(v) >= cap {
                return false;
            }
        }
        let forbidden: BTreeSet<usize> = if self.is_normalized() {
            self.forbidden_cycle_lengths.clone()
        } else {
            self.clone().normalized().forbidden_cycle_lengths
        };
        if forbidden.iter().any(|&k| has_path_of_length(g, u, v, k - 1)) {
            return false;
        }
        if self.require_planar {
            let plus = g.with_edge(u, v).expect("edge checked absent");
            if !is_planar(&plus) {
                return false;
            }
        }
        true
    }
}

/// Result of [`matches_family`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub matches: bool,
    pub violation: Option<Violation>,
}

/// Family membership with a witness for the first violated constraint.
pub fn matches_family(g: &Graph, f: &FamilySpec) -> FamilyReport {
    match f.check(g) {
        Ok(()) => FamilyReport { matches: true, violation: None },
        Err(v) => FamilyReport { matches: false, violation: Some(v) },
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.require_planar {
            parts.push("planar".to_string());
        }
        if !self.forbidden_cycle_lengths.is_empty() {
            let list: Vec<String> =
                self.forbidden_cycle_lengths.iter().map(usize::to_string).collect();
            parts.push(format!("forbid={}", list.join(":")));
        }
        if let Some(g) = self.min_girth {
            parts.push(format!("girth={g}"));
        }
        if let Some(d) = self.max_degree_cap {
            parts.push(format!("maxdeg={d}"));
        }
        if parts.is_empty() {
            parts.push("any".to_string());
        }
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts the presets `any`, `planar`, `triangle-free`, `c4-free`,
    /// `girth<g>`, or a comma list such as `planar,forbid=3:4,girth=6,maxdeg=5`.
    fn from_str(s: &str) -> Result<Self> {
        let mut spec = FamilySpec::default();
        let bad = |msg: String| Error::Config(format!("family '{s}': {msg}"));
        for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match token {
                "any" | "all" => {}
                "planar" => spec.require_planar = true,
                "triangle-free" | "c3-free" => {
                    spec.require_planar = true;
                    spec.forbidden_cycle_lengths.insert(3);
                }
                "c4-free" => {
                    spec.require_planar = true;
                    spec.forbidden_cycle_lengths.insert(4);
                }
                _ => {
                    let (key, value) = match token.split_once('=') {
                        Some(kv) => kv,
                        None if token.starts_with("girth") => ("girth", &token[5..]),
                        None => return Err(bad(format!("unknown token '{token}'"))),
                    };
                    let num = |v: &str| {
                        v.parse::<usize>().map_err(|_| bad(format!("bad number '{v}'")))
                    };
                    match key {
                        "forbid" => {
                            for part in value.split(':') {
                                let k = num(part)?;
                                if k < 3 {
                                    return Err(bad(format!("cycle length {k} < 3")));
                                }
                                spec.forbidden_cycle_lengths.insert(k);
                            }
                        }
                        "girth" => {
                            spec.require_planar |= token.starts_with("girth") && !token.contains('=');
                            spec.min_girth = Some(num(value)?);
                        }
                        "maxdeg" => spec.max_degree_cap = Some(num(value)?),
                        _ => return Err(bad(format!("unknown key '{key}'"))),
                    }
                }
            }
        }
        Ok(spec.normalized())
    }
}
