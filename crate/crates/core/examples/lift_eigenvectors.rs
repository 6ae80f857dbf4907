//! Eigenvectors of the lift assembled from eigenvectors of ρᵢ(B), with their
//! residuals against the explicit lift adjacency matrix.

use std::sync::Arc;

use voltlift::spectra::multiset::format_value;
use voltlift::*;

fn main() -> Result<()> {
    let group = Arc::new(build_builtin_group("dihedral:3")?);
    let digraph = parse_voltage_digraph(include_str!("../data/k2star.json"), group.clone())?;
    let irreps = builtin_irreps(group)?;
    let ev = lift_eigenvectors(&digraph, &irreps)?;
    let lift = build_lift(&digraph);

    for p in &ev.pairs {
        // fix the phase so the largest entry is real and positive
        let pivot = p.vector.iter().copied().max_by(|a, b| a.norm().total_cmp(&b.norm())).unwrap();
        let phase = pivot.conj() / pivot.norm();
        let entries: Vec<String> = p.vector.iter().map(|z| format!("{:+.3}", (z * phase).re)).collect();
        println!("irrep {} row {}  lambda = {:>2}  residual {:.1e}  [{}]", p.irrep, p.row, format_value(p.value), p.residual, entries.join(" "));
    }
    println!("{} vectors for {} lift vertices; labels {}", ev.pairs.len(), lift.order(), lift.labels().join(" "));
    if !ev.defective.is_empty() {
        println!("defective irreps skipped: {:?}", ev.defective);
    }
    Ok(())
}
