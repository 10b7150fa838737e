//! Branch divisors of stable maps to a nonsingular target curve `D`.
//!
//! A stable map `f: C -> D` is described by its normalization components
//! and its nodes. Dominant components carry a degree and ramification
//! profiles over named points of `D`; contracted components carry the point
//! they collapse to. The branch divisor is
//!
//! ```text
//! br(f) = sum_i br(a_i) + sum_j (2 g(B_j) - 2) [p_j] + 2 f_*(N)
//! ```
//!
//! where `a_i` runs over dominant components, `B_j -> p_j` over contracted
//! ones and `N` is the set of nodes. Its degree is
//! `2 g(C) - 2 - d (2 g(D) - 2)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A point of the target curve. Two labels name the same point iff they are
/// equal as strings.
pub type PointLabel = String;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableMapGraph {
    pub target_genus: u32,
    pub components: Vec<ComponentSpec>,
    #[serde(default)]
    pub nodes: Vec<NodeSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub id: String,
    pub genus: u32,
    #[serde(flatten)]
    pub kind: ComponentKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentKind {
    /// Maps onto `D` with the given degree. Points not listed are unramified.
    Dominant {
        degree: u32,
        #[serde(default)]
        ramification: Vec<Ramification>,
    },
    /// Collapses to a single point of `D`.
    Contracted { image: PointLabel },
}

/// Sheet multiplicities over one point of the target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ramification {
    pub point: PointLabel,
    pub profile: Vec<u32>,
}

impl Ramification {
    /// `sum (e - 1)` over the profile.
    pub fn contribution(&self) -> i64 {
        self.profile.iter().map(|&e| e as i64 - 1).sum()
    }
}

/// A node joining two branches. Equal branch ids make a self-node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeSpec {
    pub branches: [String; 2],
    pub image: PointLabel,
}

impl ComponentSpec {
    pub fn dominant(id: &str, genus: u32, degree: u32, ramification: &[(&str, &[u32])]) -> Self {
        ComponentSpec {
            id: id.to_string(),
            genus,
            kind: ComponentKind::Dominant {
                degree,
                ramification: ramification
                    .iter()
                    .map(|(p, prof)| Ramification {
                        point: p.to_string(),
                        profile: prof.to_vec(),
                    })
                    .collect(),
            },
        }
    }

    pub fn contracted(id: &str, genus: u32, image: &str) -> Self {
        ComponentSpec {
            id: id.to_string(),
            genus,
            kind: ComponentKind::Contracted {
                image: image.to_string(),
            },
        }
    }

    pub fn degree(&self) -> u64 {
        match &self.kind {
            ComponentKind::Dominant { degree, .. } => *degree as u64,
            ComponentKind::Contracted { .. } => 0,
        }
    }
}

impl NodeSpec {
    pub fn new(a: &str, b: &str, image: &str) -> Self {
        NodeSpec {
            branches: [a.to_string(), b.to_string()],
            image: image.to_string(),
        }
    }
}

/// Finitely supported integer function on points of the target.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FormalDivisor {
    coefficients: BTreeMap<PointLabel, i64>,
}

impl FormalDivisor {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `coefficient * [point]`; zero coefficients are dropped.
    pub fn add(&mut self, point: &str, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let entry = self.coefficients.entry(point.to_string()).or_insert(0);
        *entry += coefficient;
        if *entry == 0 {
            self.coefficients.remove(point);
        }
    }

    pub fn coefficient(&self, point: &str) -> i64 {
        self.coefficients.get(point).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.coefficients.values().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.coefficients.values().all(|&c| c >= 0)
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> {
        self.coefficients.iter().map(|(p, &c)| (p.as_str(), c))
    }
}

impl<'a> FromIterator<(&'a str, i64)> for FormalDivisor {
    fn from_iter<T: IntoIterator<Item = (&'a str, i64)>>(iter: T) -> Self {
        let mut d = FormalDivisor::new();
        for (p, c) in iter {
            d.add(p, c);
        }
        d
    }
}

impl fmt::Display for FormalDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}[{p}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DuplicateComponent { id: String },
    UnknownComponent { node: usize, id: String },
    Disconnected,
    ZeroTotalDegree,
    ZeroComponentDegree { component: String },
    InvalidProfile { component: String, point: String, degree: u32, profile: Vec<u32> },
    RepeatedPoint { component: String, point: String },
    RiemannHurwitz { component: String, lhs: i128, rhs: i128 },
    UnstableRational { component: String, branches: usize },
    UnstableElliptic { component: String },
    NodeImage { node: usize, component: String, expected: String, found: String },
}

impl Violation {
    /// Stable machine-readable tag.
    pub fn code(&self) -> &'static str {
        match self {
            Violation::DuplicateComponent { .. } => "duplicate-component",
            Violation::UnknownComponent { .. } => "unknown-component",
            Violation::Disconnected => "disconnected",
            Violation::ZeroTotalDegree => "zero-degree",
            Violation::ZeroComponentDegree { .. } => "zero-component-degree",
            Violation::InvalidProfile { .. } => "invalid-profile",
            Violation::RepeatedPoint { .. } => "repeated-point",
            Violation::RiemannHurwitz { .. } => "riemann-hurwitz",
            Violation::UnstableRational { .. } => "unstable-rational",
            Violation::UnstableElliptic { .. } => "unstable-elliptic",
            Violation::NodeImage { .. } => "node-image",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateComponent { id } => write!(f, "component id `{id}` is used twice"),
            Violation::UnknownComponent { node, id } => {
                write!(f, "node {node} refers to unknown component `{id}`")
            }
            Violation::Disconnected => write!(f, "dual graph is disconnected"),
            Violation::ZeroTotalDegree => {
                write!(f, "total degree is 0; at least one dominant component is required")
            }
            Violation::ZeroComponentDegree { component } => {
                write!(f, "dominant component `{component}` has degree 0")
            }
            Violation::InvalidProfile { component, point, degree, profile } => write!(
                f,
                "profile {profile:?} of `{component}` over `{point}` is not a partition of {degree}"
            ),
            Violation::RepeatedPoint { component, point } => {
                write!(f, "component `{component}` lists point `{point}` more than once")
            }
            Violation::RiemannHurwitz { component, lhs, rhs } => write!(
                f,
                "Riemann-Hurwitz failure on `{component}`: 2g-2 = {lhs} but d(2h-2) + ramification = {rhs}"
            ),
            Violation::UnstableRational { component, branches } => write!(
                f,
                "contracted genus-0 component `{component}` has {branches} node branches (< 3 nodes)"
            ),
            Violation::UnstableElliptic { component } => {
                write!(f, "contracted genus-1 component `{component}` has no node branches")
            }
            Violation::NodeImage { node, component, expected, found } => write!(
                f,
                "node {node} maps to `{found}` but contracted component `{component}` maps to `{expected}`"
            ),
        }
    }
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

impl StableMapGraph {
    pub fn from_json(input: &str) -> Result<Self> {
        serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }

    /// Total degree `d`, the sum of the dominant degrees.
    pub fn degree(&self) -> u64 {
        self.components.iter().map(ComponentSpec::degree).sum()
    }

    fn index_by_id(&self) -> HashMap<&str, usize> {
        let mut ids = HashMap::new();
        for (i, c) in self.components.iter().enumerate() {
            ids.entry(c.id.as_str()).or_insert(i);
        }
        ids
    }

    /// Resolves node branches to component indices; `None` for unknown ids.
    fn node_ends(&self, ids: &HashMap<&str, usize>) -> Vec<[Option<usize>; 2]> {
        self.nodes
            .iter()
            .map(|n| [ids.get(n.branches[0].as_str()).copied(), ids.get(n.branches[1].as_str()).copied()])
            .collect()
    }

    fn is_connected(&self, ends: &[[Option<usize>; 2]]) -> bool {
        if self.components.is_empty() {
            return true;
        }
        let mut sets = DisjointSets::new(self.components.len());
        for [a, b] in ends {
            if let (Some(a), Some(b)) = (a, b) {
                sets.union(*a, *b);
            }
        }
        let root = sets.find(0);
        (1..self.components.len()).all(|i| sets.find(i) == root)
    }

    /// Every violation of the stable-map conditions; empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = Vec::new();
        let ids = self.index_by_id();
        for (i, c) in self.components.iter().enumerate() {
            if ids[c.id.as_str()] != i {
                violations.push(Violation::DuplicateComponent { id: c.id.clone() });
            }
        }
        let ends = self.node_ends(&ids);
        for (i, (node, end)) in self.nodes.iter().zip(&ends).enumerate() {
            for (id, resolved) in node.branches.iter().zip(end) {
                if resolved.is_none() {
                    violations.push(Violation::UnknownComponent { node: i, id: id.clone() });
                }
            }
        }
        if !self.is_connected(&ends) {
            violations.push(Violation::Disconnected);
        }
        if self.degree() == 0 {
            violations.push(Violation::ZeroTotalDegree);
        }

        let mut branch_counts = vec![0usize; self.components.len()];
        for end in &ends {
            for c in end.iter().flatten() {
                branch_counts[*c] += 1;
            }
        }

        let target_euler = 2 * self.target_genus as i128 - 2;
        for (c, &branches) in self.components.iter().zip(&branch_counts) {
            match &c.kind {
                ComponentKind::Dominant { degree, ramification } => {
                    if *degree == 0 {
                        violations.push(Violation::ZeroComponentDegree { component: c.id.clone() });
                        continue;
                    }
                    let mut profiles_ok = true;
                    let mut seen = std::collections::HashSet::new();
                    for ram in ramification {
                        if !seen.insert(ram.point.as_str()) {
                            violations.push(Violation::RepeatedPoint {
                                component: c.id.clone(),
                                point: ram.point.clone(),
                            });
                        }
                        let sum: u64 = ram.profile.iter().map(|&e| e as u64).sum();
                        if ram.profile.contains(&0) || sum != *degree as u64 {
                            profiles_ok = false;
                            violations.push(Violation::InvalidProfile {
                                component: c.id.clone(),
                                point: ram.point.clone(),
                                degree: *degree,
                                profile: ram.profile.clone(),
                            });
                        }
                    }
                    if profiles_ok {
                        let lhs = 2 * c.genus as i128 - 2;
                        let rhs = *degree as i128 * target_euler
                            + ramification.iter().map(|r| r.contribution() as i128).sum::<i128>();
                        if lhs != rhs {
                            violations.push(Violation::RiemannHurwitz {
                                component: c.id.clone(),
                                lhs,
                                rhs,
                            });
                        }
                    }
                }
                ComponentKind::Contracted { .. } => match c.genus {
                    0 if branches < 3 => violations.push(Violation::UnstableRational {
                        component: c.id.clone(),
                        branches,
                    }),
                    1 if branches == 0 => {
                        violations.push(Violation::UnstableElliptic { component: c.id.clone() })
                    }
                    _ => {}
                },
            }
        }

        for (i, (node, end)) in self.nodes.iter().zip(&ends).enumerate() {
            let mut checked = Vec::new();
            for c in end.iter().flatten() {
                if checked.contains(c) {
                    continue;
                }
                checked.push(*c);
                let comp = &self.components[*c];
                if let ComponentKind::Contracted { image } = &comp.kind {
                    if image != &node.image {
                        violations.push(Violation::NodeImage {
                            node: i,
                            component: comp.id.clone(),
                            expected: image.clone(),
                            found: node.image.clone(),
                        });
                    }
                }
            }
        }
        violations
    }

    /// `g(C) = sum g_i + #nodes - #components + 1` for a connected curve.
    pub fn arithmetic_genus(&self) -> Result<u64> {
        let ids = self.index_by_id();
        let ends = self.node_ends(&ids);
        let unknown: Vec<Violation> = self
            .nodes
            .iter()
            .zip(&ends)
            .enumerate()
            .flat_map(|(i, (node, end))| {
                node.branches
                    .iter()
                    .zip(end)
                    .filter(|(_, r)| r.is_none())
                    .map(move |(id, _)| Violation::UnknownComponent { node: i, id: id.clone() })
            })
            .collect();
        if !unknown.is_empty() {
            return Err(Error::InvalidGraph(unknown));
        }
        if self.components.is_empty() || !self.is_connected(&ends) {
            return Err(Error::DisconnectedGraph);
        }
        let genera: u64 = self.components.iter().map(|c| c.genus as u64).sum();
        Ok(genera + self.nodes.len() as u64 + 1 - self.components.len() as u64)
    }

    /// `r = 2 g(C) - 2 - d (2 g(D) - 2)`.
    pub fn expected_degree(&self) -> Result<i64> {
        let g = self.arithmetic_genus()? as i128;
        let r = 2 * g - 2 - self.degree() as i128 * (2 * self.target_genus as i128 - 2);
        i64::try_from(r).map_err(|_| Error::Overflow)
    }

    /// Pointwise branch divisor. The graph must validate cleanly.
    pub fn branch_divisor(&self) -> Result<FormalDivisor> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(Error::InvalidGraph(violations));
        }
        let mut divisor = FormalDivisor::new();
        for c in &self.components {
            match &c.kind {
                ComponentKind::Dominant { ramification, .. } => {
                    for ram in ramification {
                        divisor.add(&ram.point, ram.contribution());
                    }
                }
                ComponentKind::Contracted { image } => {
                    divisor.add(image, 2 * c.genus as i64 - 2);
                }
            }
        }
        for node in &self.nodes {
            divisor.add(&node.image, 2);
        }
        Ok(divisor)
    }

    /// Validates, then evaluates the divisor together with `g(C)`, `d` and `r`.
    pub fn evaluate(&self) -> Result<BranchDivisorReport> {
        let divisor = self.branch_divisor()?;
        let arithmetic_genus = self.arithmetic_genus()?;
        let expected_degree = self.expected_degree()?;
        Ok(BranchDivisorReport {
            degree_check: divisor.degree() == expected_degree,
            effective: divisor.is_effective(),
            divisor,
            arithmetic_genus,
            map_degree: self.degree(),
            expected_degree,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchDivisorReport {
    pub divisor: FormalDivisor,
    pub arithmetic_genus: u64,
    pub map_degree: u64,
    /// `r` from the arithmetic genus and the map degree.
    pub expected_degree: i64,
    pub degree_check: bool,
    pub effective: bool,
}

pub fn validate(graph: &StableMapGraph) -> Vec<Violation> {
    graph.validate()
}

pub fn arithmetic_genus(graph: &StableMapGraph) -> Result<u64> {
    graph.arithmetic_genus()
}

pub fn branch_divisor(graph: &StableMapGraph) -> Result<FormalDivisor> {
    graph.branch_divisor()
}
