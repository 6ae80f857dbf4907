//! Seeded random instances for property checks and demos.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::group::{GroupFamily, GroupTable};
use crate::voltage::{VoltageArc, VoltageDigraph};

/// Every builtin family spec of order at most `max_order`: cyclic groups,
/// dihedral groups and two-factor products of those.
pub fn builtin_families(max_order: usize) -> Vec<GroupFamily> {
    let mut base = Vec::new();
    for m in 1..=max_order {
        base.push(GroupFamily::Cyclic(m));
    }
    for m in 2..=max_order / 2 {
        base.push(GroupFamily::Dihedral(m));
    }
    let mut out = base.clone();
    for (i, a) in base.iter().enumerate() {
        for b in &base[i..] {
            if a.order() > 1 && b.order() > 1 && a.order() * b.order() <= max_order {
                out.push(GroupFamily::Product(vec![a.clone(), b.clone()]));
            }
        }
    }
    out
}

/// A random voltage digraph with `1..=max_vertices` vertices and
/// `0..=max_arcs` arcs (loops and parallel arcs allowed), voltages uniform.
pub fn random_voltage_digraph<R: Rng>(rng: &mut R, group: Arc<GroupTable>, max_vertices: usize, max_arcs: usize) -> VoltageDigraph {
    let r = rng.gen_range(1..=max_vertices);
    let n = group.order();
    let arcs = (0..rng.gen_range(0..=max_arcs))
        .map(|_| VoltageArc { tail: rng.gen_range(0..r), head: rng.gen_range(0..r), voltage: rng.gen_range(0..n) })
        .collect();
    let vertices = (0..r).map(|i| format!("v{i}")).collect();
    VoltageDigraph::new(group, vertices, arcs).expect("generated digraph is valid")
}

/// A random builtin group of order at most `max_order`.
pub fn random_builtin_group<R: Rng>(rng: &mut R, max_order: usize) -> Arc<GroupTable> {
    let families = builtin_families(max_order);
    let family = families.choose(rng).expect("at least the trivial group");
    Arc::new(family.build().expect("builtin family builds"))
}
