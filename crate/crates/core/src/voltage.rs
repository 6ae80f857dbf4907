//! Voltage digraphs, their associated matrix over the group algebra, and the
//! explicit lift.
//!
//! Group-algebra coefficients are exact `i64`s; every addition and product is
//! overflow-checked. The lift is the brute-force reference: vertex `(u, g)`
//! has index `u·n + g`, and a base arc `u -> v` with voltage `x` lifts to the
//! arcs `(u, g) -> (v, g·x)` for every `g`.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::ComplexMatrix;

/// An element `Σ a_g g` of the integral group algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement {
    coeffs: Vec<i64>,
}

impl GroupAlgebraElement {
    pub fn zero(order: usize) -> Self {
        GroupAlgebraElement { coeffs: vec![0; order] }
    }

    /// The basis element `g` itself.
    pub fn basis(order: usize, g: usize) -> Self {
        let mut e = Self::zero(order);
        e.coeffs[g] = 1;
        e
    }

    pub fn identity(group: &GroupTable) -> Self {
        Self::basis(group.order(), group.identity())
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        GroupAlgebraElement { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> i64 {
        self.coeffs[g]
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Nonzero `(element, coefficient)` pairs in index order.
    pub fn support(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(g, &c)| (g, c))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.order(), other.order(), "group algebra elements of different groups");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("group algebra sum")))
            .collect::<Result<_>>()?;
        Ok(GroupAlgebraElement { coeffs })
    }

    fn add_assign_checked(&mut self, other: &Self) -> Result<()> {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = a.checked_add(*b).ok_or(Error::Overflow("group algebra sum"))?;
        }
        Ok(())
    }

    /// Convolution product: the coefficient of `k` is the sum of
    /// `a_i·b_j` over all `i·j = k`.
    pub fn mul(&self, other: &Self, group: &GroupTable) -> Result<Self> {
        let n = group.order();
        assert!(self.order() == n && other.order() == n, "group algebra elements of different groups");
        let mut coeffs = vec![0i64; n];
        let rhs: Vec<(usize, i64)> = other.support().collect();
        for (i, a) in self.support() {
            for &(j, b) in &rhs {
                let k = group.mul(i, j);
                let term = a.checked_mul(b).ok_or(Error::Overflow("group algebra product"))?;
                coeffs[k] = coeffs[k].checked_add(term).ok_or(Error::Overflow("group algebra product"))?;
            }
        }
        Ok(GroupAlgebraElement { coeffs })
    }

    /// Renders as e.g. `2e + 2r + r^2`.
    pub fn display<'a>(&'a self, group: &'a GroupTable) -> impl fmt::Display + 'a {
        DisplayElement { elem: self, group }
    }
}

struct DisplayElement<'a> {
    elem: &'a GroupAlgebraElement,
    group: &'a GroupTable,
}

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, c) in self.elem.support() {
            let name = self.group.name(g);
            let (sign, abs) = if c < 0 { ("-", c.unsigned_abs()) } else { ("+", c as u64) };
            match (first, sign) {
                (true, "-") => write!(f, "-")?,
                (true, _) => {}
                (false, s) => write!(f, " {s} ")?,
            }
            if abs == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{abs}{name}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Convolution product of two group-algebra elements.
pub fn algebra_mul(a: &GroupAlgebraElement, b: &GroupAlgebraElement, group: &GroupTable) -> Result<GroupAlgebraElement> {
    a.mul(b, group)
}

/// Square matrix with entries in the group algebra.
#[derive(Clone, Debug)]
pub struct GroupAlgebraMatrix {
    group: Arc<GroupTable>,
    size: usize,
    entries: Vec<GroupAlgebraElement>,
}

impl PartialEq for GroupAlgebraMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.group.names() == other.group.names() && self.entries == other.entries
    }
}

impl GroupAlgebraMatrix {
    pub fn zeros(group: Arc<GroupTable>, size: usize) -> Self {
        let n = group.order();
        GroupAlgebraMatrix { group, size, entries: vec![GroupAlgebraElement::zero(n); size * size] }
    }

    /// `ι` on the diagonal.
    pub fn identity(group: Arc<GroupTable>, size: usize) -> Self {
        let mut m = Self::zeros(group, size);
        let e = m.group.identity();
        for u in 0..size {
            m.entries[u * size + u].coeffs[e] = 1;
        }
        m
    }

    pub fn from_entries(group: Arc<GroupTable>, size: usize, entries: Vec<GroupAlgebraElement>) -> Self {
        assert_eq!(entries.len(), size * size);
        assert!(entries.iter().all(|e| e.order() == group.order()));
        GroupAlgebraMatrix { group, size, entries }
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, u: usize, v: usize) -> &GroupAlgebraElement {
        &self.entries[u * self.size + v]
    }

    pub fn entry_mut(&mut self, u: usize, v: usize) -> &mut GroupAlgebraElement {
        &mut self.entries[u * self.size + v]
    }

    /// Diagonal sum, computed in the group algebra.
    pub fn trace(&self) -> Result<GroupAlgebraElement> {
        let mut t = GroupAlgebraElement::zero(self.group.order());
        for u in 0..self.size {
            t.add_assign_checked(self.entry(u, u))?;
        }
        Ok(t)
    }

    /// Matrix product over the group algebra. Entries are computed in
    /// parallel; integer arithmetic keeps the result independent of scheduling.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.size, other.size);
        assert!(Arc::ptr_eq(&self.group, &other.group) || self.group.order() == other.group.order());
        let r = self.size;
        let group = &self.group;
        let entries = (0..r * r)
            .into_par_iter()
            .map(|idx| {
                let (u, v) = (idx / r, idx % r);
                let mut acc = GroupAlgebraElement::zero(group.order());
                for w in 0..r {
                    let (a, b) = (self.entry(u, w), other.entry(w, v));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc.add_assign_checked(&a.mul(b, group)?)?;
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupAlgebraMatrix { group: self.group.clone(), size: r, entries })
    }

    pub fn pow(&self, exponent: u32) -> Result<Self> {
        let mut out = Self::identity(self.group.clone(), self.size);
        for _ in 0..exponent {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// `[B, B², ..., B^max]`.
    pub fn powers(&self, max: u32) -> Result<Vec<Self>> {
        let mut out: Vec<Self> = Vec::with_capacity(max as usize);
        for k in 0..max {
            let next = match out.last() {
                None => self.clone(),
                Some(prev) => prev.mul(self)?,
            };
            debug_assert_eq!(out.len(), k as usize);
            out.push(next);
        }
        Ok(out)
    }
}

/// `B^ℓ` by repeated multiplication; `B⁰` is the identity matrix.
pub fn algebra_matrix_power(b: &GroupAlgebraMatrix, exponent: u32) -> Result<GroupAlgebraMatrix> {
    b.pow(exponent)
}

/// One arc of a voltage digraph, by vertex and element index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VoltageArc {
    pub tail: usize,
    pub head: usize,
    pub voltage: usize,
}

/// A base multidigraph with a voltage on every arc. Loops and repeated
/// arcs are allowed.
#[derive(Clone, Debug)]
pub struct VoltageDigraph {
    group: Arc<GroupTable>,
    vertices: Vec<String>,
    arcs: Vec<VoltageArc>,
}

impl VoltageDigraph {
    pub fn new(group: Arc<GroupTable>, vertices: Vec<String>, arcs: Vec<VoltageArc>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Digraph("vertex list is empty".into()));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = vertices.iter().find(|v| !seen.insert(v.as_str())) {
            return Err(Error::Digraph(format!("duplicate vertex name {dup:?}")));
        }
        let r = vertices.len();
        for (i, arc) in arcs.iter().enumerate() {
            if arc.tail >= r || arc.head >= r {
                return Err(Error::Digraph(format!("arc {i} has an endpoint outside 0..{r}")));
            }
            if arc.voltage >= group.order() {
                return Err(Error::Digraph(format!("arc {i} has a voltage outside the group")));
            }
        }
        Ok(VoltageDigraph { group, vertices, arcs })
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[VoltageArc] {
        &self.arcs
    }

    /// Number of base vertices `r`.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.arcs.iter().filter(|a| a.tail == u).count()
    }

    pub fn in_degree(&self, u: usize) -> usize {
        self.arcs.iter().filter(|a| a.head == u).count()
    }

    /// Ordinary adjacency matrix of the base digraph (voltages forgotten).
    pub fn base_adjacency(&self) -> Vec<Vec<i64>> {
        let r = self.order();
        let mut a = vec![vec![0; r]; r];
        for arc in &self.arcs {
            a[arc.tail][arc.head] += 1;
        }
        a
    }

    pub fn to_document(&self) -> DigraphDocument {
        DigraphDocument {
            vertices: self.vertices.clone(),
            arcs: self
                .arcs
                .iter()
                .map(|a| ArcDocument::Labeled {
                    from: self.vertices[a.tail].clone(),
                    to: self.vertices[a.head].clone(),
                    voltage: Some(self.group.name(a.voltage).to_string()),
                })
                .collect(),
        }
    }
}

/// Digraph document: `{"vertices": [...], "arcs": [{"from","to","voltage"}, ...]}`.
/// An arc may also be written as a bare `[from, to]` pair, and an omitted
/// voltage means the identity; lift output can therefore be read back as an
/// ordinary digraph over the trivial group.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DigraphDocument {
    pub vertices: Vec<String>,
    pub arcs: Vec<ArcDocument>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ArcDocument {
    Labeled {
        from: String,
        to: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        voltage: Option<String>,
    },
    Pair([String; 2]),
}

/// Parses and validates a digraph document against `group`.
pub fn parse_voltage_digraph(json: &str, group: Arc<GroupTable>) -> Result<VoltageDigraph> {
    let doc: DigraphDocument = serde_json::from_str(json)?;
    voltage_digraph_from_document(&doc, group)
}

pub fn voltage_digraph_from_document(doc: &DigraphDocument, group: Arc<GroupTable>) -> Result<VoltageDigraph> {
    if doc.vertices.is_empty() {
        return Err(Error::Digraph("vertex list is empty".into()));
    }
    let lookup = |name: &str| doc.vertices.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVertex(name.to_string()));
    let arcs = doc
        .arcs
        .iter()
        .map(|arc| {
            let (from, to, voltage) = match arc {
                ArcDocument::Labeled { from, to, voltage } => (from, to, voltage.as_deref()),
                ArcDocument::Pair([from, to]) => (from, to, None),
            };
            let voltage = match voltage {
                Some(name) => group.element_index(name).map_err(|_| Error::UnknownVoltage {
                    name: name.to_string(),
                    from: from.clone(),
                    to: to.clone(),
                })?,
                None => group.identity(),
            };
            Ok(VoltageArc { tail: lookup(from)?, head: lookup(to)?, voltage })
        })
        .collect::<Result<Vec<_>>>()?;
    VoltageDigraph::new(group, doc.vertices.clone(), arcs)
}

/// `(B)_{uv}` counts, per group element `x`, the arcs `u -> v` with voltage `x`.
pub fn associated_matrix(d: &VoltageDigraph) -> GroupAlgebraMatrix {
    let mut b = GroupAlgebraMatrix::zeros(d.group.clone(), d.order());
    for arc in &d.arcs {
        b.entry_mut(arc.tail, arc.head).coeffs[arc.voltage] += 1;
    }
    b
}

/// The explicit lift, with both an arc list and a dense adjacency matrix.
#[derive(Clone, Debug)]
pub struct LiftDigraph {
    base_order: usize,
    group_order: usize,
    labels: Vec<String>,
    arcs: Vec<(usize, usize)>,
    adjacency: Vec<i64>,
}

/// Lift output document: `{"vertices": ["a.e", ...], "arcs": [["a.e","a.s"], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LiftDocument {
    pub vertices: Vec<String>,
    pub arcs: Vec<[String; 2]>,
}

/// Builds the lift: `A[(u,g)][(v,h)]` counts base arcs `u -> v` with `h = g·x`.
pub fn build_lift(d: &VoltageDigraph) -> LiftDigraph {
    let n = d.group.order();
    let r = d.order();
    let size = r * n;
    let labels = (0..r)
        .flat_map(|u| (0..n).map(move |g| (u, g)))
        .map(|(u, g)| format!("{}.{}", d.vertices[u], d.group.name(g)))
        .collect();
    let mut arcs = Vec::with_capacity(d.arcs.len() * n);
    let mut adjacency = vec![0i64; size * size];
    for arc in &d.arcs {
        for g in 0..n {
            let from = arc.tail * n + g;
            let to = arc.head * n + d.group.mul(g, arc.voltage);
            arcs.push((from, to));
            adjacency[from * size + to] += 1;
        }
    }
    arcs.sort_unstable();
    LiftDigraph { base_order: r, group_order: n, labels, arcs, adjacency }
}

impl LiftDigraph {
    /// Number of lift vertices `r·n`.
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn vertex(&self, base: usize, element: usize) -> usize {
        assert!(base < self.base_order && element < self.group_order);
        base * self.group_order + element
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn adjacency(&self, from: usize, to: usize) -> i64 {
        self.adjacency[from * self.order() + to]
    }

    pub fn out_degree(&self, v: usize) -> i64 {
        let m = self.order();
        self.adjacency[v * m..(v + 1) * m].iter().sum()
    }

    pub fn in_degree(&self, v: usize) -> i64 {
        let m = self.order();
        (0..m).map(|u| self.adjacency[u * m + v]).sum()
    }

    pub fn to_complex_matrix(&self) -> ComplexMatrix {
        let m = self.order();
        ComplexMatrix::from_fn(m, m, |i, j| num_complex::Complex64::new(self.adjacency[i * m + j] as f64, 0.0))
    }

    /// Maximum absolute column sum of `A`.
    pub fn norm_one(&self) -> f64 {
        let m = self.order();
        (0..m).map(|v| self.in_degree(v) as f64).fold(0.0, f64::max)
    }

    /// Dense `A^ℓ`, row-major, with overflow detection.
    pub fn adjacency_power(&self, exponent: u32) -> Result<Vec<i64>> {
        let m = self.order();
        let mut out: Vec<i64> = (0..m * m).map(|k| i64::from(k / m == k % m)).collect();
        for _ in 0..exponent {
            out = self.times_adjacency(&out)?;
        }
        Ok(out)
    }

    fn times_adjacency(&self, p: &[i64]) -> Result<Vec<i64>> {
        let m = self.order();
        let mut next = vec![0i64; m * m];
        for i in 0..m {
            for &(from, to) in &self.arcs {
                let a = p[i * m + from];
                if a != 0 {
                    let cell = &mut next[i * m + to];
                    *cell = cell.checked_add(a).ok_or(Error::Overflow("lift adjacency power"))?;
                }
            }
        }
        Ok(next)
    }

    /// `trace(A^ℓ)` for `ℓ = 1..=max`.
    pub fn power_traces(&self, max: u32) -> Result<Vec<i64>> {
        let m = self.order();
        let mut p: Vec<i64> = (0..m * m).map(|k| i64::from(k / m == k % m)).collect();
        let mut out = Vec::with_capacity(max as usize);
        for _ in 0..max {
            p = self.times_adjacency(&p)?;
            out.push((0..m).try_fold(0i64, |acc, i| acc.checked_add(p[i * m + i]).ok_or(Error::Overflow("lift trace")))?);
        }
        Ok(out)
    }

    /// `trace(A^ℓ)`.
    pub fn trace_of_power(&self, exponent: u32) -> Result<i64> {
        let m = self.order();
        let p = self.adjacency_power(exponent)?;
        (0..m).try_fold(0i64, |acc, i| acc.checked_add(p[i * m + i]).ok_or(Error::Overflow("lift trace")))
    }

    pub fn to_document(&self) -> LiftDocument {
        LiftDocument {
            vertices: self.labels.clone(),
            arcs: self.arcs.iter().map(|&(a, b)| [self.labels[a].clone(), self.labels[b].clone()]).collect(),
        }
    }
}

/// Number of walks of length `ℓ` from `from` to `to` in the lift:
/// the `(from, to)` entry of `A^ℓ`.
pub fn count_walks_lift(lift: &LiftDigraph, from: usize, to: usize, length: u32) -> Result<i64> {
    let m = lift.order();
    let mut current = vec![0i64; m];
    current[from] = 1;
    for _ in 0..length {
        let mut next = vec![0i64; m];
        for &(a, b) in &lift.arcs {
            if current[a] != 0 {
                next[b] = next[b].checked_add(current[a]).ok_or(Error::Overflow("lift walk count"))?;
            }
        }
        current = next;
    }
    Ok(current[to])
}
