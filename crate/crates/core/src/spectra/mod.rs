//! Spectra of lifts.
//!
//! Three independent routes to the same multiset:
//!
//! * [`lift_spectrum_repr`]: for every irrep `ρᵢ` of degree `dᵢ`, the
//!   eigenvalues of the `r·dᵢ` square matrix `ρᵢ(B)`, each counted `dᵢ` times;
//! * [`lift_spectrum_charsum`]: the same eigenvalues recovered from the
//!   power sums `χᵢ(trace(B^ℓ))`, `ℓ = 1..r·dᵢ`, which need only the
//!   character table;
//! * [`lift_spectrum_bruteforce`]: the eigenvalues of the explicit lift.
//!
//! All three return `r·n` eigenvalues clustered at
//! `tol·(1 + ‖A‖₁)`, where `‖A‖₁` is the largest in-degree of the base
//! digraph (and so of the lift).

mod eigenvectors;
pub mod multiset;
pub mod roots;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{eigenvalues, ComplexMatrix};
use crate::repr::{CharacterTable, Irrep, IrrepSet};
use crate::voltage::{associated_matrix, build_lift, GroupAlgebraElement, GroupAlgebraMatrix, VoltageDigraph};

pub use eigenvectors::{lift_eigenvectors, LiftEigenpair, LiftEigenvectors, DEFECTIVE_CONDITION, ZERO_VECTOR_NORM};
pub use multiset::{spectra_equal, MatchReport, Method, SpectrumDocument, SpectrumEntry, SpectrumMultiset};
pub use roots::{roots_from_power_sums, PowerSums};

/// Default relative clustering tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Above this `r·dᵢ` the character route still runs but is poorly conditioned.
pub const CHARSUM_WARN_DEGREE: usize = 12;
/// Hard cap on `r·dᵢ` for the character route.
pub const CHARSUM_MAX_DEGREE: usize = roots::MAX_DEGREE;
/// Largest lift handled by the brute-force route.
pub const BRUTEFORCE_MAX_ORDER: usize = 2000;

/// Number of power-sum levels used to validate cluster refinement.
const REFINE_LEVELS: usize = 6;

/// `‖A‖₁` of the lift: the largest in-degree of the base digraph.
pub fn lift_norm_one(d: &VoltageDigraph) -> f64 {
    (0..d.order()).map(|u| d.in_degree(u)).max().unwrap_or(0) as f64
}

/// Absolute clustering tolerance for a relative `tol`.
pub fn cluster_tolerance(d: &VoltageDigraph, tol: f64) -> f64 {
    tol * (1.0 + lift_norm_one(d))
}

/// `χ(Σ a_g g) = Σ a_g χ(g)`.
pub fn apply_character(chi: &[Complex64], x: &GroupAlgebraElement) -> Complex64 {
    x.support().map(|(g, a)| chi[g] * a as f64).sum()
}

/// Rounding-error estimate for [`apply_character`]: `4ε·Σ|a_g|·|χ(g)|`.
pub fn character_rounding(chi: &[Complex64], x: &GroupAlgebraElement) -> f64 {
    4.0 * f64::EPSILON * x.support().map(|(g, a)| chi[g].norm() * a.unsigned_abs() as f64).sum::<f64>()
}

/// The `r·dᵢ` square matrix obtained from `B` by replacing each group element
/// with its `dᵢ×dᵢ` image; block `(u, v)` is `Σ_g a_g ρᵢ(g)`.
pub fn rho_matrix(b: &GroupAlgebraMatrix, irrep: &Irrep) -> ComplexMatrix {
    let r = b.size();
    let d = irrep.dim();
    let mut m = ComplexMatrix::zeros(r * d, r * d);
    for u in 0..r {
        for v in 0..r {
            for (g, a) in b.entry(u, v).support() {
                m.add_block(u * d, v * d, irrep.matrix(g), Complex64::new(a as f64, 0.0));
            }
        }
    }
    m
}

/// The `r×r` matrix of character values `χ(B_uv)`.
pub fn character_matrix(b: &GroupAlgebraMatrix, chi: &[Complex64]) -> ComplexMatrix {
    let r = b.size();
    ComplexMatrix::from_fn(r, r, |u, v| apply_character(chi, b.entry(u, v)))
}

/// `trace(M^ℓ)` for `ℓ = 1..=levels`.
fn trace_powers(m: &ComplexMatrix, levels: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(levels);
    let mut p = m.clone();
    for l in 0..levels {
        if l > 0 {
            p = &p * m;
        }
        out.push(p.trace());
    }
    out
}

/// Eigenvalues of `m` with multiple eigenvalues collapsed onto their
/// cluster means, validated against `reference` traces of powers.
fn refined_eigenvalues(m: &ComplexMatrix, reference: &[Complex64]) -> Result<Vec<Complex64>> {
    let raw = eigenvalues(m)?;
    Ok(multiset::refine_multiple_values(&raw, reference, m.norm_one()))
}

pub(crate) fn check_group(d: &VoltageDigraph, group: &crate::group::GroupTable) -> Result<()> {
    if d.group().order() != group.order() || d.group().names() != group.names() {
        return Err(Error::InvalidArgument("digraph and representations use different groups".into()));
    }
    Ok(())
}

/// Eigenvalues of every `ρᵢ(B)`, each repeated `dᵢ` times, in irrep order.
pub fn lift_eigenvalues_repr(d: &VoltageDigraph, s: &IrrepSet) -> Result<Vec<Complex64>> {
    check_group(d, s.group())?;
    let b = associated_matrix(d);
    let per_irrep = s
        .irreps()
        .par_iter()
        .map(|irrep| {
            let m = rho_matrix(&b, irrep);
            let reference = trace_powers(&m, REFINE_LEVELS.min(m.rows()));
            let vals = refined_eigenvalues(&m, &reference)?;
            Ok(vals.into_iter().flat_map(|z| std::iter::repeat(z).take(irrep.dim())).collect::<Vec<_>>())
        })
        .collect::<Result<Vec<Vec<Complex64>>>>()?;
    Ok(per_irrep.concat())
}

/// Lift spectrum from the eigenvalues of `ρᵢ(B)` over a complete irrep set.
pub fn lift_spectrum_repr(d: &VoltageDigraph, s: &IrrepSet, tol: f64) -> Result<SpectrumMultiset> {
    let values = lift_eigenvalues_repr(d, s)?;
    debug_assert_eq!(values.len(), d.order() * d.group().order());
    Ok(SpectrumMultiset::from_values(&values, cluster_tolerance(d, tol)))
}

/// `s_ℓ = χ(trace(B^ℓ))` for `ℓ = 1..=len`, with `B^ℓ` exact in the group
/// algebra and the character applied afterwards.
pub fn power_sums_from_characters(b: &GroupAlgebraMatrix, chi: &[Complex64], len: usize) -> Result<PowerSums> {
    let degree = chi[b.group().identity()].re.round() as usize;
    let traces = b.powers(len as u32)?.iter().map(GroupAlgebraMatrix::trace).collect::<Result<Vec<_>>>()?;
    let sums = traces.iter().map(|t| apply_character(chi, t)).collect();
    let errors = traces.iter().map(|t| character_rounding(chi, t)).collect();
    PowerSums::new(sums, (b.size() * degree).min(len).max(1))?.with_errors(errors)
}

/// Exact integer traces `trace(B^ℓ)` in the group algebra, `ℓ = 1..=len`.
pub fn algebra_traces(b: &GroupAlgebraMatrix, len: usize) -> Result<Vec<GroupAlgebraElement>> {
    b.powers(len as u32)?.iter().map(GroupAlgebraMatrix::trace).collect()
}

/// Per-row roots recovered by the character route, before repetition.
#[derive(Clone, Debug)]
pub struct CharsumRow {
    pub degree: usize,
    pub power_sums: PowerSums,
    pub roots: Vec<Complex64>,
}

/// Runs the character route row by row.
pub fn charsum_rows(d: &VoltageDigraph, t: &CharacterTable) -> Result<Vec<CharsumRow>> {
    check_group(d, t.group())?;
    let r = d.order();
    let max_degree = (0..t.len()).map(|i| t.degree(i)).max().unwrap_or(1);
    if r * max_degree > CHARSUM_MAX_DEGREE {
        return Err(Error::SizeLimit(format!(
            "r·d = {} exceeds the character-route limit of {CHARSUM_MAX_DEGREE}",
            r * max_degree
        )));
    }
    let b = associated_matrix(d);
    let traces = algebra_traces(&b, r * max_degree)?;
    (0..t.len())
        .into_par_iter()
        .map(|i| {
            let degree = t.degree(i);
            let len = r * degree;
            let chi = t.row(i);
            let sums = traces[..len].iter().map(|x| apply_character(chi, x)).collect();
            let errors = traces[..len].iter().map(|x| character_rounding(chi, x)).collect();
            let power_sums = PowerSums::new(sums, len)?.with_errors(errors)?;
            let roots = roots_from_power_sums(&power_sums)?;
            Ok(CharsumRow { degree, power_sums, roots })
        })
        .collect()
}

/// Whether the character route is within its conditioning comfort zone.
pub fn charsum_well_conditioned(d: &VoltageDigraph, t: &CharacterTable) -> bool {
    (0..t.len()).all(|i| d.order() * t.degree(i) <= CHARSUM_WARN_DEGREE)
}

/// Lift spectrum from character power sums and root recovery.
pub fn lift_spectrum_charsum(d: &VoltageDigraph, t: &CharacterTable, tol: f64) -> Result<SpectrumMultiset> {
    let values: Vec<Complex64> = charsum_rows(d, t)?
        .into_iter()
        .flat_map(|row| {
            let degree = row.degree;
            row.roots.into_iter().flat_map(move |z| std::iter::repeat(z).take(degree))
        })
        .collect();
    Ok(SpectrumMultiset::from_values(&values, cluster_tolerance(d, tol)))
}

/// Eigenvalues of the explicit lift adjacency matrix.
pub fn lift_eigenvalues_bruteforce(d: &VoltageDigraph) -> Result<Vec<Complex64>> {
    let order = d.order() * d.group().order();
    if order > BRUTEFORCE_MAX_ORDER {
        return Err(Error::SizeLimit(format!("lift has {order} vertices, brute force is limited to {BRUTEFORCE_MAX_ORDER}")));
    }
    let lift = build_lift(d);
    let a = lift.to_complex_matrix();
    let levels = REFINE_LEVELS.min(order);
    match lift.power_traces(levels as u32) {
        Ok(traces) => {
            let reference: Vec<Complex64> = traces.iter().map(|&t| Complex64::new(t as f64, 0.0)).collect();
            refined_eigenvalues(&a, &reference)
        }
        Err(_) => eigenvalues(&a),
    }
}

/// Lift spectrum by brute force, for lifts with at most 2000 vertices.
pub fn lift_spectrum_bruteforce(d: &VoltageDigraph, tol: f64) -> Result<SpectrumMultiset> {
    let values = lift_eigenvalues_bruteforce(d)?;
    Ok(SpectrumMultiset::from_values(&values, cluster_tolerance(d, tol)))
}

/// Dispatches on `method`; `repr` needs irreps, `charsum` a character table.
pub fn lift_spectrum(
    d: &VoltageDigraph,
    method: Method,
    irreps: Option<&IrrepSet>,
    chars: Option<&CharacterTable>,
    tol: f64,
) -> Result<SpectrumMultiset> {
    match method {
        Method::Repr => {
            let s = irreps.ok_or_else(|| Error::InvalidArgument("the repr method needs irreducible representations".into()))?;
            lift_spectrum_repr(d, s, tol)
        }
        Method::Charsum => {
            let t = chars.ok_or_else(|| Error::InvalidArgument("the charsum method needs a character table".into()))?;
            lift_spectrum_charsum(d, t, tol)
        }
        Method::Bruteforce => lift_spectrum_bruteforce(d, tol),
    }
}
