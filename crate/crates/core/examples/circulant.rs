//! A single vertex with loops over a cyclic group lifts to a circulant
//! digraph, whose eigenvalues have the closed form Σ_{δ∈Δ} ω^{kδ}.
//!
//! Usage: `cargo run --example circulant -- 12 1 4 5`

use std::f64::consts::TAU;
use std::sync::Arc;

use num_complex::Complex64;
use voltlift::spectra::{SpectrumMultiset, DEFAULT_TOL};
use voltlift::voltage::VoltageArc;
use voltlift::*;

fn main() -> Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (m, delta) = match args.split_first() {
        Some((&m, rest)) if !rest.is_empty() => (m, rest.to_vec()),
        _ => (12, vec![1, 4, 5]),
    };
    let group = Arc::new(build_builtin_group(&format!("cyclic:{m}"))?);
    let arcs = delta.iter().map(|&j| VoltageArc { tail: 0, head: 0, voltage: j % m }).collect();
    let digraph = VoltageDigraph::new(group.clone(), vec!["x".into()], arcs)?;

    let repr = lift_spectrum_repr(&digraph, &builtin_irreps(group)?, DEFAULT_TOL)?;
    let closed: Vec<Complex64> = (0..m)
        .map(|k| delta.iter().map(|&j| Complex64::from_polar(1.0, TAU * ((k * j) % m) as f64 / m as f64)).sum())
        .collect();
    let closed = SpectrumMultiset::from_values(&closed, DEFAULT_TOL * (1.0 + delta.len() as f64));

    println!("Cay(Z_{m}, {delta:?})");
    print!("{}", repr.to_text());
    println!("closed form: {}", spectra_equal(&repr, &closed, 1e-9));
    Ok(())
}
