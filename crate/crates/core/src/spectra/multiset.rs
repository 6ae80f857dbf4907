//! Eigenvalue multisets: clustering, refinement of multiple eigenvalues,
//! tolerance-aware comparison and output formats.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Which computation produced a spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Repr,
    Charsum,
    Bruteforce,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Repr => "repr",
            Method::Charsum => "charsum",
            Method::Bruteforce => "bruteforce",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "repr" => Ok(Method::Repr),
            "charsum" => Ok(Method::Charsum),
            "bruteforce" => Ok(Method::Bruteforce),
            other => Err(Error::InvalidArgument(format!("unknown method {other:?} (expected repr, charsum or bruteforce)"))),
        }
    }
}

/// One distinct eigenvalue and its algebraic multiplicity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumEntry {
    pub value: Complex64,
    pub mult: usize,
}

/// Eigenvalues with multiplicities, sorted by descending real part and then
/// ascending imaginary part.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumMultiset {
    entries: Vec<SpectrumEntry>,
}

fn spectrum_order(a: &Complex64, b: &Complex64) -> Ordering {
    b.re.total_cmp(&a.re).then(a.im.total_cmp(&b.im))
}

impl SpectrumMultiset {
    /// Single-linkage clustering at `tol`; each cluster is represented by its
    /// mean, with real and imaginary parts within `tol / 1000` of an integer
    /// snapped to it.
    pub fn from_values(values: &[Complex64], tol: f64) -> Self {
        let clusters = single_linkage(values, tol);
        let snap = |x: f64| if (x - x.round()).abs() <= tol * 1e-3 { x.round() } else { x };
        let mut entries: Vec<SpectrumEntry> = clusters
            .into_iter()
            .map(|members| {
                let sum: Complex64 = members.iter().map(|&i| values[i]).sum();
                let mean = sum / members.len() as f64;
                SpectrumEntry { value: clean(Complex64::new(snap(mean.re), snap(mean.im))), mult: members.len() }
            })
            .collect();
        entries.sort_by(|a, b| spectrum_order(&a.value, &b.value));
        SpectrumMultiset { entries }
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    /// Total number of eigenvalues counted with multiplicity.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.mult).sum()
    }

    /// Every eigenvalue repeated by its multiplicity, in sorted order.
    pub fn expanded(&self) -> Vec<Complex64> {
        self.entries.iter().flat_map(|e| std::iter::repeat(e.value).take(e.mult)).collect()
    }

    pub fn to_document(&self, method: Method) -> SpectrumDocument {
        SpectrumDocument {
            order: self.total(),
            eigenvalues: self.entries.iter().map(|e| EigenvalueDocument { re: e.value.re, im: e.value.im, mult: e.mult }).collect(),
            method,
        }
    }

    /// One `value^mult` line per distinct eigenvalue.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!("{}^{}\n", format_value(e.value), e.mult));
        }
        out
    }
}

/// Normalizes negative zeros so output is stable.
fn clean(z: Complex64) -> Complex64 {
    let fix = |x: f64| if x == 0.0 { 0.0 } else { x };
    Complex64::new(fix(z.re), fix(z.im))
}

fn format_real(x: f64) -> String {
    let s = format!("{:.10}", x);
    let s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

/// Compact human-readable form: `3`, `-1`, `0.5+0.8660254038i`.
pub fn format_value(z: Complex64) -> String {
    let re = format_real(z.re);
    let im = format_real(z.im);
    if im == "0" {
        re
    } else if re == "0" {
        format!("{im}i")
    } else if im.starts_with('-') {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

/// Spectrum output document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumDocument {
    pub order: usize,
    pub eigenvalues: Vec<EigenvalueDocument>,
    pub method: Method,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueDocument {
    pub re: f64,
    pub im: f64,
    pub mult: usize,
}

/// Groups of indices whose values are chained by distances `< tol`.
/// Output order is deterministic (by smallest index in each group).
fn single_linkage(values: &[Complex64], tol: f64) -> Vec<Vec<usize>> {
    let m = values.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| values[a].re.total_cmp(&values[b].re));
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[pos + 1..] {
            if values[j].re - values[i].re >= tol {
                break;
            }
            if (values[i] - values[j]).norm() < tol {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; m];
    for i in 0..m {
        let root = find(&mut parent, i);
        if slot[root] == usize::MAX {
            slot[root] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[root]].push(i);
    }
    groups
}

/// Result of comparing two spectra.
#[derive(Clone, Debug, PartialEq)]
pub struct MatchReport {
    pub matched: bool,
    pub count_a: usize,
    pub count_b: usize,
    /// Largest distance between matched values (0 when nothing was matched).
    pub worst: f64,
    pub worst_pair: Option<(Complex64, Complex64)>,
}

impl fmt::Display for MatchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.count_a != self.count_b {
            return write!(f, "MISMATCH (sizes {} and {})", self.count_a, self.count_b);
        }
        let verdict = if self.matched { "MATCH" } else { "MISMATCH" };
        write!(f, "{verdict} (worst {:.1e})", self.worst)?;
        if let (false, Some((a, b))) = (self.matched, self.worst_pair) {
            write!(f, " at {} vs {}", format_value(a), format_value(b))?;
        }
        Ok(())
    }
}

/// Greedy matching: each value of `a` (in sorted order) takes the nearest
/// unused value of `b`. Succeeds iff sizes agree and every matched pair is
/// within `tol`.
pub fn spectra_equal(a: &SpectrumMultiset, b: &SpectrumMultiset, tol: f64) -> MatchReport {
    let xs = a.expanded();
    let ys = b.expanded();
    let mut used = vec![false; ys.len()];
    let mut worst = 0.0f64;
    let mut worst_pair = None;
    for &x in &xs {
        let best = ys
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .min_by(|(_, p), (_, q)| (x - **p).norm().total_cmp(&(x - **q).norm()));
        let Some((j, &y)) = best else { break };
        used[j] = true;
        let dist = (x - y).norm();
        if dist > worst || worst_pair.is_none() {
            worst = worst.max(dist);
            worst_pair = Some((x, y));
        }
    }
    MatchReport { matched: xs.len() == ys.len() && worst <= tol, count_a: xs.len(), count_b: ys.len(), worst, worst_pair }
}

/// Power sums `Σ zᵏ` for `k = 1..=max`.
pub fn power_sums_of(values: &[Complex64], max: usize) -> Vec<Complex64> {
    let mut sums = vec![Complex64::new(0.0, 0.0); max];
    for &z in values {
        let mut p = Complex64::new(1.0, 0.0);
        for s in sums.iter_mut() {
            p *= z;
            *s += p;
        }
    }
    sums
}

/// Replaces clusters of computed eigenvalues (or polynomial roots) that
/// approximate one multiple value by their mean.
///
/// A multiple value of a defective matrix comes out of a dense solve as a
/// ring of radius about `ε^(1/k)`, while the cluster mean stays accurate.
/// Clusters grow by single linkage, closest pair first. A merge of size
/// `k` is accepted only if every member lies within `(1e-12)^(1/k)·(1+scale)`
/// of the new mean and the power sums `reference[ℓ-1] = Σ λ^ℓ` (exact or
/// near exact, from traces of matrix powers) stay matched to within
/// `1e-12` relative. Merging distinct values moves the second power sum by
/// the square of their separation, which the check rejects.
pub fn refine_multiple_values(values: &[Complex64], reference: &[Complex64], scale: f64) -> Vec<Complex64> {
    const MAX_CLUSTER: usize = 16;
    let m = values.len();
    if m < 2 || reference.len() < 2 {
        return values.to_vec();
    }
    let scale = 1.0 + scale.abs();
    let radius = |k: usize| 1e-12f64.powf(1.0 / k.min(MAX_CLUSTER) as f64) * scale;
    let max_radius = radius(MAX_CLUSTER);
    let levels = reference.len();
    let mut current: Vec<Complex64> = values.to_vec();
    let mut sums = power_sums_of(&current, levels);
    let magnitude: Vec<f64> = (1..=levels)
        .map(|l| 1.0 + values.iter().map(|z| z.norm().powi(l as i32)).sum::<f64>())
        .collect();
    let residual = |sums: &[Complex64]| -> f64 {
        sums.iter().zip(reference).zip(&magnitude).map(|((s, r), mag)| (s - r).norm() / mag).fold(0.0, f64::max)
    };
    let baseline = residual(&sums);

    // candidate pairs within the largest admissible radius, closest first
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| values[a].re.total_cmp(&values[b].re));
    let mut pairs: Vec<(f64, usize, usize)> = Vec::new();
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[pos + 1..] {
            if values[j].re - values[i].re > 2.0 * max_radius {
                break;
            }
            let d = (values[i] - values[j]).norm();
            if d <= 2.0 * max_radius {
                pairs.push((d, i.min(j), i.max(j)));
            }
        }
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));

    // single linkage over the candidate pairs; every time a component grows
    // the whole component is tried as one multiple value
    let mut cluster_of: Vec<usize> = (0..m).collect();
    let mut members: Vec<Vec<usize>> = (0..m).map(|i| vec![i]).collect();
    for (_, i, j) in pairs {
        let (ci, cj) = (cluster_of[i], cluster_of[j]);
        if ci == cj {
            continue;
        }
        let moved = std::mem::take(&mut members[cj]);
        for &x in &moved {
            cluster_of[x] = ci;
        }
        members[ci].extend(moved);
        let merged = &members[ci];
        let k = merged.len();
        let mean: Complex64 = merged.iter().map(|&x| values[x]).sum::<Complex64>() / k as f64;
        if merged.iter().any(|&x| (values[x] - mean).norm() > radius(k)) {
            continue;
        }
        let mut trial = sums.clone();
        for &x in merged {
            let (mut old, mut new) = (Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0));
            for s in trial.iter_mut() {
                old *= current[x];
                new *= mean;
                *s += new - old;
            }
        }
        if residual(&trial) > (10.0 * baseline).max(1e-12) {
            continue;
        }
        sums = trial;
        for &x in merged {
            current[x] = mean;
        }
    }
    current
}
