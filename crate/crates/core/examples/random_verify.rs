//! Random voltage digraphs over builtin groups: the representation route
//! against brute force and, where well conditioned, the character route.
//!
//! Usage: `cargo run --release --example random_verify -- [count] [seed]`

use rand::rngs::StdRng;
use rand::SeedableRng;
use voltlift::random::{random_builtin_group, random_voltage_digraph};
use voltlift::spectra::{charsum_well_conditioned, DEFAULT_TOL};
use voltlift::*;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().map(|a| a.parse().expect("count")).unwrap_or(50);
    let seed: u64 = args.next().map(|a| a.parse().expect("seed")).unwrap_or(1);
    let mut rng = StdRng::seed_from_u64(seed);
    let (mut worst_brute, mut worst_chars, mut with_chars) = (0.0f64, 0.0f64, 0);
    for k in 0..count {
        let group = random_builtin_group(&mut rng, 24);
        let digraph = random_voltage_digraph(&mut rng, group.clone(), 6, 20);
        let irreps = builtin_irreps(group.clone())?;
        let repr = lift_spectrum_repr(&digraph, &irreps, DEFAULT_TOL)?;
        let brute = spectra_equal(&repr, &lift_spectrum_bruteforce(&digraph, DEFAULT_TOL)?, 1e-7);
        assert!(brute.matched, "case {k}: {brute}");
        worst_brute = worst_brute.max(brute.worst);
        let chars = character_table(&irreps);
        if charsum_well_conditioned(&digraph, &chars) {
            let c = spectra_equal(&repr, &lift_spectrum_charsum(&digraph, &chars, DEFAULT_TOL)?, 1e-6);
            assert!(c.matched, "case {k}: {c}");
            worst_chars = worst_chars.max(c.worst);
            with_chars += 1;
        }
    }
    println!("{count} cases: bruteforce worst {worst_brute:.1e}; charsum on {with_chars} cases, worst {worst_chars:.1e}");
    Ok(())
}
