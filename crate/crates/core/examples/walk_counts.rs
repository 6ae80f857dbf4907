//! The coefficient of g in (B^ℓ)_{uv} counts the walks of length ℓ in the lift
//! from (u, h) to (v, h·g), for every h. This example prints B^ℓ and checks
//! every coefficient against a direct walk count in the lift.

use std::sync::Arc;

use voltlift::*;

fn main() -> Result<()> {
    let length: u32 = std::env::args().nth(1).map(|a| a.parse().expect("length")).unwrap_or(3);
    let group = Arc::new(build_builtin_group("dihedral:3")?);
    let digraph = parse_voltage_digraph(include_str!("../data/k2star.json"), group.clone())?;
    let power = associated_matrix(&digraph).pow(length)?;
    let lift = build_lift(&digraph);
    let names = digraph.vertices();

    let mut checked = 0;
    for u in 0..digraph.order() {
        for v in 0..digraph.order() {
            println!("(B^{length})[{}][{}] = {}", names[u], names[v], power.entry(u, v).display(&group));
            for g in 0..group.order() {
                for h in 0..group.order() {
                    let walks = count_walks_lift(&lift, lift.vertex(u, h), lift.vertex(v, group.mul(h, g)), length)?;
                    assert_eq!(walks, power.entry(u, v).coeff(g));
                    checked += 1;
                }
            }
        }
    }
    let closed = lift.trace_of_power(length)?;
    let identity: i64 = (0..digraph.order()).map(|u| power.entry(u, u).coeff(group.identity())).sum();
    println!("{checked} coefficients match lift walk counts");
    println!("trace(A^{length}) = {closed} = {} * {identity}", group.order());
    Ok(())
}
