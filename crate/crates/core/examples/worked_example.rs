//! The two-vertex digraph with a loop at each vertex and a double arc in each
//! direction, lifted over the dihedral group of order 6.
//!
//! Prints the associated matrix, the character matrices χᵢ(B), and the lift
//! spectrum by all three routes.

use std::sync::Arc;

use voltlift::spectra::{character_matrix, DEFAULT_TOL};
use voltlift::*;

fn main() -> Result<()> {
    let group = Arc::new(build_builtin_group("dihedral:3")?);
    let digraph = parse_voltage_digraph(include_str!("../data/k2star.json"), group.clone())?;
    let irreps = builtin_irreps(group.clone())?;
    let chars = character_table(&irreps);

    let b = associated_matrix(&digraph);
    println!("B =");
    for u in 0..b.size() {
        let row: Vec<String> = (0..b.size()).map(|v| b.entry(u, v).display(&group).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }

    for i in 0..chars.len() {
        let m = character_matrix(&b, chars.row(i));
        let rows: Vec<String> = (0..m.rows())
            .map(|u| (0..m.cols()).map(|v| format!("{:.0}", m[(u, v)].re)).collect::<Vec<_>>().join(" "))
            .collect();
        println!("chi_{}(B) = [{}]", i + 1, rows.join("; "));
    }

    let repr = lift_spectrum_repr(&digraph, &irreps, DEFAULT_TOL)?;
    let charsum = lift_spectrum_charsum(&digraph, &chars, DEFAULT_TOL)?;
    let brute = lift_spectrum_bruteforce(&digraph, DEFAULT_TOL)?;
    print!("spectrum:\n{}", repr.to_text());
    println!("repr vs charsum: {}", spectra_equal(&repr, &charsum, 1e-9));
    println!("repr vs bruteforce: {}", spectra_equal(&repr, &brute, 1e-9));
    Ok(())
}
