//! Color-set assignments and the definitional verifier.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::de::Deserializer;
use serde::ser::{SerializeMap, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Digraph;

pub type Color = u32;
pub type ColorSet = BTreeSet<Color>;

/// A color set for each vertex `1..=n`. Colors are opaque ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    phi: Vec<ColorSet>,
}

impl Representation {
    /// Requires every color set to be nonempty.
    pub fn new(phi: Vec<ColorSet>) -> Result<Self> {
        let rep = Self::new_unchecked(phi);
        rep.check_nonempty()?;
        Ok(rep)
    }

    /// Skips the nonempty check so the verifier can be handed malformed input.
    pub fn new_unchecked(phi: Vec<ColorSet>) -> Self {
        Self { phi }
    }

    pub fn from_sets<I, S>(sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = Color>,
    {
        Self::new(sets.into_iter().map(|s| s.into_iter().collect()).collect())
    }

    fn check_nonempty(&self) -> Result<()> {
        match self.phi.iter().position(BTreeSet::is_empty) {
            Some(i) => Err(Error::EmptyColorSet { vertex: i + 1 }),
            None => Ok(()),
        }
    }

    pub fn n(&self) -> usize {
        self.phi.len()
    }

    /// Color set of vertex `v` (1-based).
    pub fn colors(&self, v: usize) -> &ColorSet {
        &self.phi[v - 1]
    }

    pub fn sets(&self) -> &[ColorSet] {
        &self.phi
    }

    pub fn size(&self, v: usize) -> usize {
        self.phi[v - 1].len()
    }

    pub fn palette(&self) -> ColorSet {
        self.phi.iter().flatten().copied().collect()
    }

    pub fn palette_size(&self) -> usize {
        self.palette().len()
    }

    /// Keeps the vertices listed in `kept` (original labels), renumbering them
    /// `1..=kept.len()` in the given order. Color sets are untouched.
    pub fn restrict(&self, kept: &[usize]) -> Result<Representation> {
        if kept.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut phi = Vec::with_capacity(kept.len());
        for &v in kept {
            if v == 0 || v > self.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
            }
            phi.push(self.phi[v - 1].clone());
        }
        Ok(Self { phi })
    }

    /// Renames colors to `0..k` in first-use order (ascending vertex, then ascending color).
    pub fn canonicalize(&self) -> Representation {
        let mut rename: HashMap<Color, Color> = HashMap::new();
        for set in &self.phi {
            for &c in set {
                let next = rename.len() as Color;
                rename.entry(c).or_insert(next);
            }
        }
        let phi = self.phi.iter().map(|s| s.iter().map(|c| rename[c]).collect()).collect();
        Self { phi }
    }

    /// Applies a color renaming. `map` should be injective for the result to be equivalent.
    pub fn map_colors(&self, map: impl Fn(Color) -> Color) -> Representation {
        Self { phi: self.phi.iter().map(|s| s.iter().map(|&c| map(c)).collect()).collect() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("representation json serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("representation json serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RepresentationJson = serde_json::from_str(text)?;
        let mut phi = vec![None; raw.n];
        for (key, colors) in raw.phi {
            let v: usize =
                key.trim().parse().map_err(|_| Error::Json(format!("vertex key {key:?} is not an integer")))?;
            if v == 0 || v > raw.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: raw.n });
            }
            phi[v - 1] = Some(colors.into_iter().collect::<ColorSet>());
        }
        let phi = phi
            .into_iter()
            .enumerate()
            .map(|(i, s)| s.ok_or(Error::EmptyColorSet { vertex: i + 1 }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(phi)
    }
}

impl Serialize for Representation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Phi<'a>(&'a [ColorSet]);
        impl Serialize for Phi<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (i, set) in self.0.iter().enumerate() {
                    map.serialize_entry(&(i + 1).to_string(), set)?;
                }
                map.end()
            }
        }
        let mut st = serializer.serialize_struct("Representation", 3)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("phi", &Phi(&self.phi))?;
        st.serialize_field("palette_size", &self.palette_size())?;
        st.end()
    }
}

#[derive(Deserialize)]
struct RepresentationJson {
    n: usize,
    phi: BTreeMap<String, Vec<Color>>,
    // Advisory only; recomputed from `phi`.
    #[allow(dead_code)]
    #[serde(default)]
    palette_size: Option<usize>,
}

impl<'de> Deserialize<'de> for Representation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = serde_json::Value::deserialize(deserializer)?;
        Representation::from_json(&raw.to_string()).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// Arc present but the color sets are disjoint.
    MissingIntersection,
    /// Arc present but the tail's set is not strictly smaller.
    SizeNotIncreasing,
    /// No arc, yet the sets intersect and the first is strictly smaller.
    FalseArcImplied,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::MissingIntersection => "missing-intersection",
            ViolationKind::SizeNotIncreasing => "size-not-increasing",
            ViolationKind::FalseArcImplied => "false-arc-implied",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.u, self.v, self.kind)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// Checks every ordered pair `(u, v)`, `u != v`: `(u, v)` is an arc exactly when
/// the color sets intersect and `|phi(u)| < |phi(v)|`. All violations are reported,
/// ordered by `(u, v)`.
pub fn verify(graph: &Digraph, rep: &Representation) -> Result<ValidityReport> {
    if rep.n() != graph.n() {
        return Err(Error::SizeMismatch { expected: graph.n(), found: rep.n() });
    }
    rep.check_nonempty()?;
    let mut violations = Vec::new();
    for u in graph.vertices() {
        let su = rep.colors(u);
        for v in graph.vertices() {
            if u == v {
                continue;
            }
            let sv = rep.colors(v);
            let meets = !su.is_disjoint(sv);
            let smaller = su.len() < sv.len();
            if graph.has_arc(u, v) {
                if !meets {
                    violations.push(Violation { u, v, kind: ViolationKind::MissingIntersection });
                }
                if !smaller {
                    violations.push(Violation { u, v, kind: ViolationKind::SizeNotIncreasing });
                }
            } else if meets && smaller {
                violations.push(Violation { u, v, kind: ViolationKind::FalseArcImplied });
            }
        }
    }
    Ok(ValidityReport { valid: violations.is_empty(), violations })
}

/// Shorthand for `verify(..).map(|r| r.valid)` that treats shape errors as invalid.
pub fn is_valid(graph: &Digraph, rep: &Representation) -> bool {
    verify(graph, rep).map(|r| r.valid).unwrap_or(false)
}
