//! Irreducible representations and character tables.
//!
//! Built-in families (cyclic, dihedral and their direct products) come with
//! explicit irreps. Anything else is loaded from JSON and validated.
//! Representations are only ever compared through their characters.

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupFamily, GroupTable};
use crate::linalg::{ComplexMatrix, ONE, ZERO};

/// Entrywise tolerance for homomorphism and identity checks.
pub const ENTRY_TOL: f64 = 1e-10;
/// Tolerance factor for aggregate sums; multiplied by the group order.
pub const AGGREGATE_TOL: f64 = 1e-8;

/// One irreducible representation: a `dim × dim` matrix per group element.
#[derive(Clone, Debug)]
pub struct Irrep {
    dim: usize,
    matrices: Vec<ComplexMatrix>,
}

impl Irrep {
    pub fn new(dim: usize, matrices: Vec<ComplexMatrix>) -> Self {
        Irrep { dim, matrices }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &ComplexMatrix {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[ComplexMatrix] {
        &self.matrices
    }

    pub fn character(&self) -> Vec<Complex64> {
        self.matrices.iter().map(ComplexMatrix::trace).collect()
    }

    fn is_trivial(&self) -> bool {
        self.dim == 1 && self.matrices.iter().all(|m| (m[(0, 0)] - ONE).norm() <= ENTRY_TOL)
    }

    /// Checks identity, homomorphism and (for non-trivial irreps) the
    /// zero-sum property. `label` identifies the irrep in error messages.
    fn validate(&self, group: &GroupTable, label: &str) -> Result<()> {
        let n = group.order();
        if self.dim == 0 {
            return Err(Error::Representation(format!("{label}: dimension must be positive")));
        }
        if self.matrices.len() != n {
            return Err(Error::Representation(format!("{label}: {} matrices for {n} elements", self.matrices.len())));
        }
        for (g, m) in self.matrices.iter().enumerate() {
            if m.rows() != self.dim || m.cols() != self.dim {
                return Err(Error::Representation(format!(
                    "{label}: matrix for {} is {}x{}, expected {d}x{d}",
                    group.name(g),
                    m.rows(),
                    m.cols(),
                    d = self.dim
                )));
            }
            if !m.is_finite() {
                return Err(Error::Representation(format!("{label}: matrix for {} is not finite", group.name(g))));
            }
        }
        let id = ComplexMatrix::identity(self.dim);
        if self.matrices[group.identity()].max_abs_diff(&id) > ENTRY_TOL {
            return Err(Error::Representation(format!(
                "{label}: identity element {} is not mapped to the identity matrix",
                group.name(group.identity())
            )));
        }
        for g in 0..n {
            for h in 0..n {
                let prod = &self.matrices[g] * &self.matrices[h];
                if prod.max_abs_diff(&self.matrices[group.mul(g, h)]) > ENTRY_TOL {
                    return Err(Error::Representation(format!(
                        "{label}: not a homomorphism, rho({g}*{h}) != rho({g}) rho({h})",
                        g = group.name(g),
                        h = group.name(h)
                    )));
                }
            }
        }
        if !self.is_trivial() {
            let mut sum = ComplexMatrix::zeros(self.dim, self.dim);
            for m in &self.matrices {
                sum = &sum + m;
            }
            let defect = sum.as_slice().iter().map(|z| z.norm()).fold(0.0, f64::max);
            if defect > AGGREGATE_TOL * n as f64 {
                return Err(Error::Representation(format!(
                    "{label}: sum over the group of a non-trivial irrep is not zero (max entry {defect:.3e})"
                )));
            }
        }
        Ok(())
    }
}

/// A complete set of irreps of one group, trivial representation first.
#[derive(Clone, Debug)]
pub struct IrrepSet {
    group: Arc<GroupTable>,
    irreps: Vec<Irrep>,
}

impl IrrepSet {
    /// Validates every invariant and moves the trivial irrep to the front.
    pub fn new(group: Arc<GroupTable>, mut irreps: Vec<Irrep>) -> Result<Self> {
        for (i, irrep) in irreps.iter().enumerate() {
            irrep.validate(&group, &format!("irrep {i}"))?;
        }
        let nu = group.num_classes();
        if irreps.len() != nu {
            return Err(Error::Representation(format!(
                "expected {nu} irreps (one per conjugacy class), got {}",
                irreps.len()
            )));
        }
        let dim_sq: usize = irreps.iter().map(|r| r.dim * r.dim).sum();
        if dim_sq != group.order() {
            return Err(Error::Representation(format!(
                "sum of squared dimensions is {dim_sq}, expected the group order {}",
                group.order()
            )));
        }
        let rows: Vec<Vec<Complex64>> = irreps.iter().map(Irrep::character).collect();
        check_orthogonality(&rows, &group).map_err(|(i, j, defect)| {
            Error::Representation(format!("irreps {i} and {j}: character orthogonality fails (defect {defect:.3e})"))
        })?;
        let trivial = irreps
            .iter()
            .position(Irrep::is_trivial)
            .ok_or_else(|| Error::Representation("no trivial representation".into()))?;
        let t = irreps.remove(trivial);
        irreps.insert(0, t);
        Ok(IrrepSet { group, irreps })
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.irreps.iter().map(Irrep::dim).collect()
    }

    /// Re-runs the full validation; used by tests and the `validate` command.
    pub fn validate(&self) -> Result<()> {
        IrrepSet::new(self.group.clone(), self.irreps.clone()).map(|_| ())
    }
}

/// Returns `Err((i, j, defect))` for the first pair of rows violating
/// `Σ_g χᵢ(g) conj(χⱼ(g)) = n δᵢⱼ`.
fn check_orthogonality(rows: &[Vec<Complex64>], group: &GroupTable) -> std::result::Result<(), (usize, usize, f64)> {
    let n = group.order() as f64;
    for i in 0..rows.len() {
        for j in i..rows.len() {
            let ip: Complex64 = rows[i].iter().zip(&rows[j]).map(|(a, b)| a * b.conj()).sum();
            let expect = if i == j { n } else { 0.0 };
            let defect = (ip - Complex64::new(expect, 0.0)).norm();
            if defect > AGGREGATE_TOL * n {
                return Err((i, j, defect));
            }
        }
    }
    Ok(())
}

fn unit(angle: f64) -> Complex64 {
    Complex64::from_polar(1.0, angle)
}

fn scalar(z: Complex64) -> ComplexMatrix {
    ComplexMatrix::from_fn(1, 1, |_, _| z)
}

/// `exp(2πi·k/m)` with `k` reduced mod `m` first, snapping the four
/// quarter-turn values to exact constants.
fn root_of_unity(k: usize, m: usize) -> Complex64 {
    let k = k % m;
    if 4 * k % m == 0 {
        return match 4 * k / m {
            0 => ONE,
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    unit(TAU * k as f64 / m as f64)
}

/// Irrep matrices per element for a family, in the family's element order.
fn family_irreps(family: &GroupFamily) -> Vec<Vec<ComplexMatrix>> {
    match *family {
        GroupFamily::Cyclic(m) => (0..m).map(|k| (0..m).map(|j| scalar(root_of_unity(k * j, m))).collect()).collect(),
        GroupFamily::Dihedral(m) => {
            // element 2j + s is r^j s^s
            let linear = |r_sign: f64, s_sign: f64| -> Vec<ComplexMatrix> {
                (0..2 * m)
                    .map(|k| {
                        let (j, s) = (k / 2, k % 2);
                        let v = r_sign.powi(j as i32) * if s == 1 { s_sign } else { 1.0 };
                        scalar(Complex64::new(v, 0.0))
                    })
                    .collect()
            };
            let mut out = vec![linear(1.0, 1.0), linear(1.0, -1.0)];
            if m % 2 == 0 {
                out.push(linear(-1.0, 1.0));
                out.push(linear(-1.0, -1.0));
            }
            for h in 1..=(m - 1) / 2 {
                out.push(
                    (0..2 * m)
                        .map(|k| {
                            let (j, s) = (k / 2, k % 2);
                            let z = root_of_unity(h * j, m);
                            let rot = ComplexMatrix::from_fn(2, 2, |a, b| match (a, b) {
                                (0, 0) | (1, 1) => Complex64::new(z.re, 0.0),
                                (0, 1) => Complex64::new(-z.im, 0.0),
                                _ => Complex64::new(z.im, 0.0),
                            });
                            if s == 0 {
                                rot
                            } else {
                                let refl = ComplexMatrix::from_fn(2, 2, |a, b| match (a, b) {
                                    (0, 0) => ONE,
                                    (1, 1) => -ONE,
                                    _ => ZERO,
                                });
                                &rot * &refl
                            }
                        })
                        .collect(),
                );
            }
            out
        }
        GroupFamily::Product(ref factors) => {
            let per_factor: Vec<Vec<Vec<ComplexMatrix>>> = factors.iter().map(family_irreps).collect();
            let orders: Vec<usize> = factors.iter().map(GroupFamily::order).collect();
            let order: usize = orders.iter().product();
            let digits = |mut k: usize| {
                let mut out = vec![0; orders.len()];
                for (slot, &m) in out.iter_mut().zip(&orders).rev() {
                    *slot = k % m;
                    k /= m;
                }
                out
            };
            let mut combos: Vec<Vec<usize>> = vec![vec![]];
            for f in &per_factor {
                combos = combos.into_iter().flat_map(|c| (0..f.len()).map(move |i| [c.clone(), vec![i]].concat())).collect();
            }
            let mut out: Vec<Vec<ComplexMatrix>> = combos
                .iter()
                .map(|combo| {
                    (0..order)
                        .map(|k| {
                            digits(k).iter().enumerate().fold(ComplexMatrix::identity(1), |acc, (f, &x)| {
                                acc.kron(&per_factor[f][combo[f]][x])
                            })
                        })
                        .collect()
                })
                .collect();
            // trivial ⊗ trivial stays first; stable sort keeps the rest lexicographic per dimension
            out.sort_by_key(|mats| mats[0].rows());
            out
        }
    }
}

/// The built-in complete set of irreps for a group made by
/// [`crate::group::build_builtin_group`].
pub fn builtin_irreps(group: Arc<GroupTable>) -> Result<IrrepSet> {
    let family = group
        .family()
        .ok_or_else(|| Error::UnsupportedFamily("group was not built from a family spec".into()))?
        .clone();
    let irreps = family_irreps(&family)
        .into_iter()
        .map(|matrices| Irrep { dim: matrices[0].rows(), matrices })
        .collect();
    Ok(IrrepSet { group, irreps })
}

/// One entry of an irreps document.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IrrepDocument {
    pub dim: usize,
    /// element name -> rows of `[re, im]` pairs
    pub matrices: HashMap<String, Vec<Vec<[f64; 2]>>>,
}

/// Loads and validates an irreps JSON document
/// (`[{"dim": d, "matrices": {"<name>": [[[re,im],...],...]}}, ...]`).
pub fn load_irreps(json: &str, group: Arc<GroupTable>) -> Result<IrrepSet> {
    let docs: Vec<IrrepDocument> = serde_json::from_str(json)?;
    irreps_from_documents(&docs, group)
}

pub fn irreps_from_documents(docs: &[IrrepDocument], group: Arc<GroupTable>) -> Result<IrrepSet> {
    let n = group.order();
    let mut irreps = Vec::with_capacity(docs.len());
    for (i, doc) in docs.iter().enumerate() {
        let mut matrices: Vec<Option<ComplexMatrix>> = vec![None; n];
        for (name, rows) in &doc.matrices {
            let g = group.element_index(name)?;
            if rows.len() != doc.dim || rows.iter().any(|r| r.len() != doc.dim) {
                return Err(Error::Representation(format!(
                    "irrep {i}: matrix for {name} is not {d}x{d}",
                    d = doc.dim
                )));
            }
            let m = ComplexMatrix::from_fn(doc.dim, doc.dim, |a, b| Complex64::new(rows[a][b][0], rows[a][b][1]));
            if matrices[g].replace(m).is_some() {
                return Err(Error::Representation(format!("irrep {i}: element {name} listed twice")));
            }
        }
        let matrices = matrices
            .into_iter()
            .enumerate()
            .map(|(g, m)| {
                m.ok_or_else(|| Error::Representation(format!("irrep {i}: missing matrix for element {}", group.name(g))))
            })
            .collect::<Result<Vec<_>>>()?;
        irreps.push(Irrep { dim: doc.dim, matrices });
    }
    IrrepSet::new(group, irreps)
}

/// Serializes an irrep set back into the document format.
pub fn irreps_to_documents(set: &IrrepSet) -> Vec<IrrepDocument> {
    set.irreps
        .iter()
        .map(|irrep| IrrepDocument {
            dim: irrep.dim,
            matrices: irrep
                .matrices
                .iter()
                .enumerate()
                .map(|(g, m)| {
                    let rows = (0..m.rows()).map(|a| (0..m.cols()).map(|b| [m[(a, b)].re, m[(a, b)].im]).collect()).collect();
                    (set.group.name(g).to_string(), rows)
                })
                .collect(),
        })
        .collect()
}

/// Irreducible characters, one value per element index.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<GroupTable>,
    rows: Vec<Vec<Complex64>>,
}

impl CharacterTable {
    /// Validates a table given per element; the trivial row is moved first.
    pub fn new(group: Arc<GroupTable>, mut rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let n = group.order();
        let nu = group.num_classes();
        if rows.len() != nu {
            return Err(Error::CharacterTable(format!("expected {nu} rows (one per conjugacy class), got {}", rows.len())));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::CharacterTable(format!("row {i} has {} values, expected {n}", row.len())));
            }
            if row.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::CharacterTable(format!("row {i} has non-finite values")));
            }
            for class in group.conjugacy_classes() {
                let first = row[class[0]];
                if let Some(&g) = class.iter().find(|&&g| (row[g] - first).norm() > 1e-9) {
                    return Err(Error::CharacterTable(format!(
                        "row {i} is not constant on the class of {}",
                        group.name(g)
                    )));
                }
            }
            let degree = row[group.identity()];
            if degree.im.abs() > 1e-9 || (degree.re - degree.re.round()).abs() > 1e-9 || degree.re.round() < 1.0 {
                return Err(Error::CharacterTable(format!(
                    "row {i}: value at the identity ({degree}) is not a positive integer"
                )));
            }
        }
        check_orthogonality(&rows, &group).map_err(|(i, j, defect)| {
            Error::CharacterTable(format!("rows {i} and {j}: orthogonality fails (defect {defect:.3e})"))
        })?;
        let trivial = rows
            .iter()
            .position(|row| row.iter().all(|z| (z - ONE).norm() <= 1e-9))
            .ok_or_else(|| Error::CharacterTable("no trivial (all-ones) row".into()))?;
        let t = rows.remove(trivial);
        rows.insert(0, t);
        let table = CharacterTable { group, rows };
        let defect = table.column_orthogonality_defect();
        if defect > AGGREGATE_TOL * n as f64 {
            return Err(Error::CharacterTable(format!("column orthogonality fails (defect {defect:.3e})")));
        }
        Ok(table)
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn rows(&self) -> &[Vec<Complex64>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.rows[i]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The degree `χᵢ(ι)` of row `i`.
    pub fn degree(&self, i: usize) -> usize {
        self.rows[i][self.group.identity()].re.round() as usize
    }

    /// Largest violation of `Σᵢ χᵢ(g) conj(χᵢ(h)) = δ·n/|class(g)|` over
    /// pairs of class representatives.
    pub fn column_orthogonality_defect(&self) -> f64 {
        let n = self.group.order() as f64;
        let classes = self.group.conjugacy_classes();
        let mut worst: f64 = 0.0;
        for (a, ca) in classes.iter().enumerate() {
            for (b, cb) in classes.iter().enumerate() {
                let s: Complex64 = self.rows.iter().map(|row| row[ca[0]] * row[cb[0]].conj()).sum();
                let expect = if a == b { n / ca.len() as f64 } else { 0.0 };
                worst = worst.max((s - Complex64::new(expect, 0.0)).norm());
            }
        }
        worst
    }
}

/// `rows[i][g] = trace(ρᵢ(g))`.
pub fn character_table(set: &IrrepSet) -> CharacterTable {
    CharacterTable { group: set.group.clone(), rows: set.irreps.iter().map(Irrep::character).collect() }
}

/// Character-table document: class lists plus one `[re, im]` per class per row.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterTableDocument {
    pub classes: Vec<Vec<String>>,
    pub rows: Vec<Vec<[f64; 2]>>,
}

/// Loads and validates a character-table JSON document. Each listed class
/// may name the whole conjugacy class or any non-empty part of it.
pub fn load_character_table(json: &str, group: Arc<GroupTable>) -> Result<CharacterTable> {
    let doc: CharacterTableDocument = serde_json::from_str(json)?;
    character_table_from_document(&doc, group)
}

pub fn character_table_from_document(doc: &CharacterTableDocument, group: Arc<GroupTable>) -> Result<CharacterTable> {
    let nu = group.num_classes();
    // doc class position -> group class id
    let mut class_map = Vec::with_capacity(doc.classes.len());
    let mut covered = vec![None; nu];
    for (k, names) in doc.classes.iter().enumerate() {
        let ids = names
            .iter()
            .map(|name| group.element_index(name).map(|g| group.class_of(g)))
            .collect::<Result<Vec<usize>>>()?;
        let Some(&id) = ids.first() else {
            return Err(Error::CharacterTable(format!("class {k} is empty")));
        };
        if ids.iter().any(|&x| x != id) {
            return Err(Error::CharacterTable(format!("class {k} mixes elements of different conjugacy classes")));
        }
        if let Some(prev) = covered[id].replace(k) {
            return Err(Error::CharacterTable(format!("classes {prev} and {k} are the same conjugacy class")));
        }
        class_map.push(id);
    }
    if let Some(missing) = covered.iter().position(Option::is_none) {
        let rep = group.conjugacy_classes()[missing][0];
        return Err(Error::CharacterTable(format!("no column for the class of {}", group.name(rep))));
    }
    if doc.rows.len() != nu {
        return Err(Error::CharacterTable(format!("expected {nu} rows (one per conjugacy class), got {}", doc.rows.len())));
    }
    let mut rows = Vec::with_capacity(nu);
    for (i, values) in doc.rows.iter().enumerate() {
        if values.len() != doc.classes.len() {
            return Err(Error::CharacterTable(format!("row {i} has {} values for {} classes", values.len(), doc.classes.len())));
        }
        let mut per_class = vec![ZERO; nu];
        for (k, v) in values.iter().enumerate() {
            per_class[class_map[k]] = Complex64::new(v[0], v[1]);
        }
        rows.push((0..group.order()).map(|g| per_class[group.class_of(g)]).collect());
    }
    CharacterTable::new(group, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_builtin_group;

    fn group(spec: &str) -> Arc<GroupTable> {
        Arc::new(build_builtin_group(spec).unwrap())
    }

    fn class_values(t: &CharacterTable) -> Vec<Vec<Complex64>> {
        let g = t.group();
        t.rows().iter().map(|row| g.conjugacy_classes().iter().map(|c| row[c[0]]).collect()).collect()
    }

    fn close(a: &[Vec<Complex64>], b: &[Vec<f64>], tol: f64) -> bool {
        a.len() == b.len()
            && a.iter().zip(b).all(|(x, y)| x.len() == y.len() && x.iter().zip(y).all(|(p, q)| (p - Complex64::new(*q, 0.0)).norm() <= tol))
    }

    #[test]
    fn cyclic_two() {
        let set = builtin_irreps(group("cyclic:2")).unwrap();
        set.validate().unwrap();
        let t = character_table(&set);
        assert!(close(t.rows(), &[vec![1.0, 1.0], vec![1.0, -1.0]], 0.0));
    }

    #[test]
    fn dihedral_three_reproduces_table_one() {
        let set = builtin_irreps(group("dihedral:3")).unwrap();
        set.validate().unwrap();
        assert_eq!(set.dims(), vec![1, 1, 2]);
        let t = character_table(&set);
        // classes ordered {e}, {s, r*s, r^2*s}, {r, r^2}
        let expected = [vec![1.0, 1.0, 1.0], vec![1.0, -1.0, 1.0], vec![2.0, 0.0, -1.0]];
        assert!(close(&class_values(&t), &expected, 1e-12));
    }

    #[test]
    fn dihedral_four_dims() {
        let set = builtin_irreps(group("dihedral:4")).unwrap();
        set.validate().unwrap();
        assert_eq!(set.dims(), vec![1, 1, 1, 1, 2]);
        assert_eq!(set.dims().iter().map(|d| d * d).sum::<usize>(), 8);
    }

    #[test]
    fn trivial_group_table() {
        let t = character_table(&builtin_irreps(group("cyclic:1")).unwrap());
        assert_eq!(t.rows(), &[vec![ONE]]);
    }

    #[test]
    fn cyclic_four_powers_of_i() {
        let t = character_table(&builtin_irreps(group("cyclic:4")).unwrap());
        let i = Complex64::new(0.0, 1.0);
        for k in 0..4 {
            for j in 0..4 {
                assert!((t.row(k)[j] - i.powu((k * j) as u32)).norm() < 1e-15);
            }
        }
        assert_eq!(t.row(3)[2], Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn products_of_dihedral_factors_validate() {
        let set = builtin_irreps(group("product:dihedral:3,cyclic:2")).unwrap();
        set.validate().unwrap();
        assert_eq!(set.dims(), vec![1, 1, 1, 1, 2, 2]);
        let set = builtin_irreps(group("product:dihedral:3,dihedral:3")).unwrap();
        set.validate().unwrap();
        assert_eq!(set.dims().iter().filter(|&&d| d == 4).count(), 1);
    }

    #[test]
    fn parsed_groups_have_no_builtin_irreps() {
        let g = Arc::new(crate::group::parse_group_table(r#"{"elements":["e","a"],"mul":[[0,1],[1,0]]}"#).unwrap());
        assert!(matches!(builtin_irreps(g), Err(Error::UnsupportedFamily(_))));
    }

    #[test]
    fn d3_irreps_document_round_trips_to_same_characters() {
        let g = group("dihedral:3");
        let set = builtin_irreps(g.clone()).unwrap();
        let json = serde_json::to_string(&irreps_to_documents(&set)).unwrap();
        let loaded = load_irreps(&json, g).unwrap();
        let a = character_table(&set);
        let b = character_table(&loaded);
        for (x, y) in a.rows().iter().zip(b.rows()) {
            assert!(x.iter().zip(y).all(|(p, q)| (p - q).norm() < 1e-12));
        }
    }

    #[test]
    fn trivial_irrep_is_moved_first() {
        let g = group("cyclic:2");
        let json = r#"[{"dim":1,"matrices":{"e":[[[1,0]]],"g":[[[-1,0]]]}},
                       {"dim":1,"matrices":{"e":[[[1,0]]],"g":[[[1,0]]]}}]"#;
        let set = load_irreps(json, g).unwrap();
        assert_eq!(set.irreps()[0].character(), vec![ONE, ONE]);
    }

    #[test]
    fn duplicate_sign_irrep_fails_orthogonality() {
        let g = group("cyclic:2");
        let sign = r#"{"dim":1,"matrices":{"e":[[[1,0]]],"g":[[[-1,0]]]}}"#;
        let json = format!("[{sign},{sign}]");
        let err = load_irreps(&json, g).unwrap_err();
        assert!(err.to_string().contains("irreps 0 and 1: character orthogonality"), "{err}");
    }

    #[test]
    fn repeated_nontrivial_row_fails_orthogonality() {
        let g = group("cyclic:3");
        let w = root_of_unity(1, 3);
        let w2 = root_of_unity(2, 3);
        let row = |a: Complex64, b: Complex64| format!(r#"{{"dim":1,"matrices":{{"e":[[[1,0]]],"g":[[[{},{}]]],"g^2":[[[{},{}]]]}}}}"#, a.re, a.im, b.re, b.im);
        let json = format!("[{},{},{}]", row(ONE, ONE), row(w, w2), row(w, w2));
        let err = load_irreps(&json, g).unwrap_err();
        assert!(err.to_string().contains("orthogonality"), "{err}");
    }

    #[test]
    fn homomorphism_violation_names_elements() {
        let g = group("cyclic:2");
        let json = r#"[{"dim":1,"matrices":{"e":[[[1,0]]],"g":[[[1,0]]]}},
                       {"dim":1,"matrices":{"e":[[[1,0]]],"g":[[[2,0]]]}}]"#;
        let err = load_irreps(json, g).unwrap_err().to_string();
        assert!(err.contains("homomorphism") && err.contains("irrep 1") && err.contains("g*g"), "{err}");
    }

    #[test]
    fn missing_element_is_reported() {
        let g = group("cyclic:2");
        let json = r#"[{"dim":1,"matrices":{"e":[[[1,0]]]}},{"dim":1,"matrices":{"e":[[[1,0]]],"g":[[[-1,0]]]}}]"#;
        let err = load_irreps(json, g).unwrap_err().to_string();
        assert!(err.contains("missing matrix for element g"), "{err}");
    }

    #[test]
    fn wrong_count_and_dimension_sum() {
        let g = group("dihedral:3");
        let set = builtin_irreps(g.clone()).unwrap();
        let mut docs = irreps_to_documents(&set);
        docs.pop();
        let err = irreps_from_documents(&docs, g.clone()).unwrap_err().to_string();
        assert!(err.contains("expected 3 irreps"), "{err}");
        let mut docs = irreps_to_documents(&set);
        docs[2] = docs[1].clone();
        let err = irreps_from_documents(&docs, g).unwrap_err().to_string();
        assert!(err.contains("squared dimensions"), "{err}");
    }

    #[test]
    fn table_one_loads() {
        let g = group("dihedral:3");
        let json = r#"{"classes":[["e"],["s","r*s","r^2*s"],["r","r^2"]],
                       "rows":[[[1,0],[1,0],[1,0]],[[1,0],[-1,0],[1,0]],[[2,0],[0,0],[-1,0]]]}"#;
        let t = load_character_table(json, g).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.degree(2), 2);
    }

    #[test]
    fn z2_all_ones_twice_fails() {
        let g = group("cyclic:2");
        let json = r#"{"classes":[["e"],["g"]],"rows":[[[1,0],[1,0]],[[1,0],[1,0]]]}"#;
        let err = load_character_table(json, g).unwrap_err().to_string();
        assert!(err.contains("orthogonality"), "{err}");
    }

    #[test]
    fn z3_cube_roots_valid() {
        let g = group("cyclic:3");
        let w = root_of_unity(1, 3);
        let json = format!(
            r#"{{"classes":[["e"],["g"],["g^2"]],"rows":[[[1,0],[1,0],[1,0]],[[1,0],[{a},{b}],[{a},{c}]],[[1,0],[{a},{c}],[{a},{b}]]]}}"#,
            a = w.re,
            b = w.im,
            c = -w.im
        );
        let t = load_character_table(&json, g).unwrap();
        assert_eq!(t.len(), 3);
    }

    #[test]
    fn non_integer_degree_rejected() {
        let g = group("cyclic:2");
        let json = r#"{"classes":[["e"],["g"]],"rows":[[[1,0],[1,0]],[[1.5,0],[-1,0]]]}"#;
        let err = load_character_table(json, g).unwrap_err().to_string();
        assert!(err.contains("positive integer"), "{err}");
    }

    #[test]
    fn wrong_row_count_rejected() {
        let g = group("cyclic:2");
        let json = r#"{"classes":[["e"],["g"]],"rows":[[[1,0],[1,0]]]}"#;
        assert!(load_character_table(json, g).unwrap_err().to_string().contains("expected 2 rows"));
    }

    #[test]
    fn builtin_tables_satisfy_invariants() {
        for spec in ["cyclic:1", "cyclic:7", "dihedral:5", "dihedral:6", "product:cyclic:2,cyclic:4", "product:cyclic:2,dihedral:4"] {
            let g = group(spec);
            let set = builtin_irreps(g.clone()).unwrap();
            set.validate().unwrap();
            let t = character_table(&set);
            CharacterTable::new(g, t.rows().to_vec()).unwrap();
        }
    }
}
