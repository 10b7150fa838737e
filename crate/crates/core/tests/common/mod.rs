//! Random valid stable maps for property and acceptance tests.

#![allow(dead_code)]

use hurwitz_core::branch::{ComponentKind, ComponentSpec, NodeSpec, Ramification, StableMapGraph};
use rand::seq::SliceRandom;
use rand::Rng;

const POINTS: [&str; 6] = ["p0", "p1", "p2", "p3", "p4", "p5"];

/// Random partition of `degree` with at least one part >= 2 (`degree >= 2`).
fn random_profile<R: Rng>(rng: &mut R, degree: u32) -> Vec<u32> {
    loop {
        let mut parts = Vec::new();
        let mut left = degree;
        while left > 0 {
            let p = rng.gen_range(1..=left);
            parts.push(p);
            left -= p;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts[0] >= 2 {
            return parts;
        }
    }
}

fn simple_profile(degree: u32) -> Vec<u32> {
    let mut parts = vec![2];
    parts.extend(std::iter::repeat_n(1, degree as usize - 2));
    parts
}

/// Dominant component with random ramification over distinct points and the
/// genus forced by Riemann-Hurwitz.
fn random_dominant<R: Rng>(rng: &mut R, id: String, target_genus: u32) -> ComponentSpec {
    let degree = rng.gen_range(1..=4u32);
    let mut ramification: Vec<Ramification> = Vec::new();
    let mut total: i64 = 0;
    if degree >= 2 {
        let mut points: Vec<String> = (0..12).map(|i| format!("q{i}")).collect();
        points.extend(POINTS.iter().map(|p| p.to_string()));
        points.shuffle(rng);
        let mut points = points.into_iter();
        let wanted = rng.gen_range(0..=4);
        for _ in 0..wanted {
            let profile = random_profile(rng, degree);
            total += profile.iter().map(|&e| e as i64 - 1).sum::<i64>();
            ramification.push(Ramification { point: points.next().unwrap(), profile });
        }
        // Parity and nonnegative genus: 2g - 2 = d(2h - 2) + total.
        let base = degree as i64 * (2 * target_genus as i64 - 2);
        while (base + total) % 2 != 0 || base + total < -2 {
            ramification.push(Ramification {
                point: points.next().unwrap(),
                profile: simple_profile(degree),
            });
            total += 1;
        }
    }
    let genus = if degree == 1 {
        target_genus
    } else {
        let base = degree as i64 * (2 * target_genus as i64 - 2);
        ((base + total + 2) / 2) as u32
    };
    ComponentSpec {
        id,
        genus,
        kind: ComponentKind::Dominant { degree, ramification },
    }
}

fn image_of(c: &ComponentSpec) -> Option<&str> {
    match &c.kind {
        ComponentKind::Contracted { image } => Some(image),
        ComponentKind::Dominant { .. } => None,
    }
}

/// Node between `a` and `b` with an image compatible with both, if any.
fn node_between<R: Rng>(rng: &mut R, a: &ComponentSpec, b: &ComponentSpec) -> Option<NodeSpec> {
    let image = match (image_of(a), image_of(b)) {
        (Some(x), Some(y)) if x != y => return None,
        (Some(x), _) | (None, Some(x)) => x.to_string(),
        (None, None) => POINTS.choose(rng).unwrap().to_string(),
    };
    Some(NodeSpec { branches: [a.id.clone(), b.id.clone()], image })
}

/// A random connected stable map that passes validation.
pub fn random_stable_map<R: Rng>(rng: &mut R) -> StableMapGraph {
    let target_genus = rng.gen_range(0..=2u32);
    let dominant = rng.gen_range(1..=3usize);
    let contracted = rng.gen_range(0..=3usize);
    let mut components: Vec<ComponentSpec> = (0..dominant)
        .map(|i| random_dominant(rng, format!("A{i}"), target_genus))
        .collect();
    for j in 0..contracted {
        let genus = rng.gen_range(0..=2u32);
        components.push(ComponentSpec::contracted(&format!("B{j}"), genus, POINTS.choose(rng).unwrap()));
    }
    // components[0] is dominant, so every component has a compatible parent.
    let mut nodes = Vec::new();
    for k in 1..components.len() {
        let mut parents: Vec<usize> = (0..k).collect();
        parents.shuffle(rng);
        let node = parents
            .into_iter()
            .find_map(|p| node_between(rng, &components[p], &components[k]))
            .expect("dominant parent always compatible");
        nodes.push(node);
    }
    for _ in 0..rng.gen_range(0..=3) {
        let a = rng.gen_range(0..components.len());
        let b = rng.gen_range(0..components.len());
        if let Some(n) = node_between(rng, &components[a], &components[b]) {
            nodes.push(n);
        }
    }
    // Stabilize contracted components.
    for c in &components {
        if image_of(c).is_none() {
            continue;
        }
        let branches = nodes
            .iter()
            .flat_map(|n| n.branches.iter())
            .filter(|b| **b == c.id)
            .count();
        let needed = match c.genus {
            0 => 3,
            1 => 1,
            _ => 0,
        };
        let mut have = branches;
        while have < needed {
            if rng.gen_bool(0.5) {
                nodes.push(node_between(rng, c, c).unwrap());
                have += 2;
            } else {
                let a = &components[0];
                nodes.push(node_between(rng, a, c).unwrap());
                have += 1;
            }
        }
    }
    StableMapGraph { target_genus, components, nodes }
}
