//! A group given by its multiplication table, with user-supplied irreps and
//! character table: the symmetric group on three points written as
//! permutations. The lift spectrum agrees with the builtin dihedral group.

use std::sync::Arc;

use voltlift::spectra::DEFAULT_TOL;
use voltlift::*;

fn main() -> Result<()> {
    let group = Arc::new(parse_group_table(include_str!("../data/s3_table.json"))?);
    let irreps = load_irreps(include_str!("../data/s3_irreps.json"), group.clone())?;
    let chars = load_character_table(include_str!("../data/s3_chars.json"), group.clone())?;
    let classes: Vec<Vec<&str>> =
        conjugacy_classes(&group).iter().map(|c| c.iter().map(|&g| group.name(g)).collect()).collect();
    println!("classes {classes:?}, irrep dimensions {:?}", irreps.dims());

    let digraph = parse_voltage_digraph(include_str!("../data/k2star_s3.json"), group.clone())?;
    let repr = lift_spectrum_repr(&digraph, &irreps, DEFAULT_TOL)?;
    let charsum = lift_spectrum_charsum(&digraph, &chars, DEFAULT_TOL)?;
    print!("{}", repr.to_text());
    println!("repr vs charsum: {}", spectra_equal(&repr, &charsum, 1e-9));

    let dihedral = build_builtin_group("dihedral:3")?;
    let iso = find_isomorphism(&group, &dihedral).expect("isomorphic");
    let map: Vec<String> = (0..group.order()).map(|g| format!("{} -> {}", group.name(g), dihedral.name(iso[g]))).collect();
    println!("isomorphism to dihedral:3: {}", map.join(", "));
    Ok(())
}
