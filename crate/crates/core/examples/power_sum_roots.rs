//! Recovers a multiset from its power sums, comparing the Newton-identity
//! polynomial with the determinant formula.

use num_complex::Complex64;
use voltlift::spectra::multiset::{format_value, power_sums_of};
use voltlift::spectra::roots::{determinant_polynomial, newton_polynomial, polynomial_discrepancy};
use voltlift::*;

fn show(label: &str, p: &PowerSums) -> Result<()> {
    let roots = roots_from_power_sums(p)?;
    let fmt = |v: &[Complex64]| v.iter().map(|&z| format_value(z)).collect::<Vec<_>>().join(", ");
    println!("{label}");
    println!("  newton      {}", fmt(&newton_polynomial(p)));
    println!("  determinant {}", fmt(&determinant_polynomial(p)));
    println!("  discrepancy {:.1e}", polynomial_discrepancy(p));
    println!("  roots       {}", fmt(&roots));
    Ok(())
}

fn main() -> Result<()> {
    show("s = (0, 2, 0, 2)", &PowerSums::from_real(&[0.0, 2.0, 0.0, 2.0], 4)?)?;
    show("s = (2, 2, 8)", &PowerSums::from_real(&[2.0, 2.0, 8.0], 3)?)?;

    let values = [Complex64::new(1.5, 0.5), Complex64::new(1.5, 0.5), Complex64::new(-2.0, 1.0), Complex64::new(0.0, -3.0)];
    show("a double root and two simple ones", &PowerSums::new(power_sums_of(&values, 4), 4)?)?;

    // a fifth sum inconsistent with the first four
    let mut sums = power_sums_of(&values, 5);
    sums[4] += Complex64::new(1.0, 0.0);
    match roots_from_power_sums(&PowerSums::new(sums, 4)?) {
        Err(e) => println!("inconsistent extra sum: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
