//! Builds the explicit lift, writes it as an ordinary digraph and reads it
//! back over the trivial group.

use std::sync::Arc;

use voltlift::spectra::DEFAULT_TOL;
use voltlift::*;

fn main() -> Result<()> {
    let group = Arc::new(build_builtin_group("product:cyclic:2,cyclic:3")?);
    let json = r#"{"vertices":["u","v"],"arcs":[
        {"from":"u","to":"v","voltage":"(g,e)"},
        {"from":"v","to":"u","voltage":"(e,g)"},
        {"from":"u","to":"u","voltage":"(g,g^2)"}]}"#;
    let digraph = parse_voltage_digraph(json, group.clone())?;
    let lift = build_lift(&digraph);
    let doc = serde_json::to_string(&lift.to_document())?;
    println!("{doc}");

    let trivial = Arc::new(build_builtin_group("cyclic:1")?);
    let plain = parse_voltage_digraph(&doc, trivial)?;
    let brute = lift_spectrum_bruteforce(&plain, DEFAULT_TOL)?;
    let repr = lift_spectrum_repr(&digraph, &builtin_irreps(group)?, DEFAULT_TOL)?;
    print!("{}", repr.to_text());
    println!("re-read lift vs repr: {}", spectra_equal(&brute, &repr, 1e-7));
    Ok(())
}
