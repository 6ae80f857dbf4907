//! Finite groups as explicit multiplication tables.
//!
//! Elements are identified by their index in `0..order`. With
//! `mul(g, x) = g·x`, the row acts on the left, and this is the
//! single multiplication convention used throughout the crate (lift arcs go
//! `(u, g) -> (v, g·x)`).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest group order accepted anywhere in the crate.
pub const MAX_ORDER: usize = 4096;

/// Above this order the associativity check samples triples instead of
/// enumerating all of them.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 256;

/// A built-in group family, as written in a group-spec string.
///
/// `cyclic:n`, `dihedral:n` (order `2n`) and `product:<spec>,<spec>,...`.
/// Nested products need parentheses: `product:(product:cyclic:2,cyclic:2),cyclic:3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupFamily {
    Cyclic(usize),
    Dihedral(usize),
    Product(Vec<GroupFamily>),
}

impl GroupFamily {
    pub fn order(&self) -> usize {
        match self {
            GroupFamily::Cyclic(n) => *n,
            GroupFamily::Dihedral(n) => 2 * n,
            GroupFamily::Product(factors) => factors.iter().map(GroupFamily::order).product(),
        }
    }

    fn checked_order(&self) -> Option<usize> {
        match self {
            GroupFamily::Cyclic(n) => Some(*n),
            GroupFamily::Dihedral(n) => n.checked_mul(2),
            GroupFamily::Product(factors) => factors
                .iter()
                .try_fold(1usize, |acc, f| acc.checked_mul(f.checked_order()?)),
        }
    }

    /// Builds the multiplication table of this family.
    pub fn build(&self) -> Result<GroupTable> {
        let order = self.checked_order().unwrap_or(usize::MAX);
        if order > MAX_ORDER {
            return Err(Error::GroupTooLarge { order, max: MAX_ORDER });
        }
        let (names, mul) = self.raw_table();
        let mut table = GroupTable::from_table(names, mul)?;
        table.family = Some(self.clone());
        Ok(table)
    }

    fn raw_table(&self) -> (Vec<String>, Vec<usize>) {
        match *self {
            GroupFamily::Cyclic(n) => {
                let names = (0..n).map(|j| power_name("g", j)).collect();
                let mul = (0..n * n).map(|k| (k / n + k % n) % n).collect();
                (names, mul)
            }
            GroupFamily::Dihedral(n) => {
                // index 2j is r^j, index 2j+1 is r^j*s
                let order = 2 * n;
                let mut names = Vec::with_capacity(order);
                for j in 0..n {
                    names.push(power_name("r", j));
                    names.push(match j {
                        0 => "s".to_string(),
                        _ => format!("{}*s", power_name("r", j)),
                    });
                }
                let mut mul = vec![0; order * order];
                for a in 0..order {
                    let (ra, sa) = (a / 2, a % 2);
                    for b in 0..order {
                        let (rb, sb) = (b / 2, b % 2);
                        // r^ra s^sa r^rb s^sb = r^(ra ± rb) s^(sa+sb), using s r = r^-1 s
                        let rot = if sa == 0 { (ra + rb) % n } else { (ra + n - rb) % n };
                        mul[a * order + b] = 2 * rot + (sa ^ sb);
                    }
                }
                (names, mul)
            }
            GroupFamily::Product(ref factors) => {
                let tables: Vec<_> = factors.iter().map(GroupFamily::raw_table).collect();
                let orders: Vec<usize> = tables.iter().map(|(names, _)| names.len()).collect();
                let order: usize = orders.iter().product();
                let digits = |mut k: usize| {
                    let mut out = vec![0; orders.len()];
                    for (slot, &m) in out.iter_mut().zip(&orders).rev() {
                        *slot = k % m;
                        k /= m;
                    }
                    out
                };
                let names = (0..order)
                    .map(|k| {
                        let parts: Vec<&str> = digits(k)
                            .iter()
                            .zip(&tables)
                            .map(|(&i, (names, _))| names[i].as_str())
                            .collect();
                        format!("({})", parts.join(","))
                    })
                    .collect();
                let all_digits: Vec<Vec<usize>> = (0..order).map(digits).collect();
                let mut mul = vec![0; order * order];
                for a in 0..order {
                    for b in 0..order {
                        let mut k = 0;
                        for (f, (_, fmul)) in tables.iter().enumerate() {
                            let m = orders[f];
                            k = k * m + fmul[all_digits[a][f] * m + all_digits[b][f]];
                        }
                        mul[a * order + b] = k;
                    }
                }
                (names, mul)
            }
        }
    }

    /// Resolves alternative spellings (`r^0`, `r^1*s`, `g^1`, ...) to an index.
    fn alias_index(&self, name: &str) -> Option<usize> {
        let parse_power = |s: &str, base: char| -> Option<usize> {
            let rest = s.strip_prefix(base)?;
            if rest.is_empty() {
                return Some(1);
            }
            rest.strip_prefix('^')?.parse().ok()
        };
        match *self {
            GroupFamily::Cyclic(n) => {
                let j = if name == "e" || name == "1" { 0 } else { parse_power(name, 'g')? };
                (j < n).then_some(j)
            }
            GroupFamily::Dihedral(n) => {
                let (rot, refl) = match name.strip_suffix("*s") {
                    Some(head) => (head, 1),
                    None if name == "s" => ("e", 1),
                    None => (name, 0),
                };
                let j = if rot == "e" || rot == "1" { 0 } else { parse_power(rot, 'r')? };
                (j < n).then_some(2 * j + refl)
            }
            GroupFamily::Product(_) => None,
        }
    }
}

fn power_name(base: &str, j: usize) -> String {
    match j {
        0 => "e".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{j}"),
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFamily::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupFamily::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupFamily::Product(factors) => {
                write!(f, "product:")?;
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    match factor {
                        GroupFamily::Product(_) => write!(f, "({factor})")?,
                        _ => write!(f, "{factor}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl FromStr for GroupFamily {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let fail = |reason: &str| Error::GroupSpec { spec: spec.to_string(), reason: reason.to_string() };
        let spec_trimmed = spec.trim();
        let (kind, arg) = spec_trimmed.split_once(':').ok_or_else(|| fail("expected <family>:<argument>"))?;
        match kind {
            "cyclic" | "dihedral" => {
                let n: usize = arg.trim().parse().map_err(|_| fail("expected a positive integer"))?;
                let min = if kind == "cyclic" { 1 } else { 2 };
                if n < min {
                    return Err(fail(&format!("{kind} needs n >= {min}")));
                }
                let family = if kind == "cyclic" { GroupFamily::Cyclic(n) } else { GroupFamily::Dihedral(n) };
                if n > MAX_ORDER {
                    return Err(Error::GroupTooLarge { order: family.checked_order().unwrap_or(usize::MAX), max: MAX_ORDER });
                }
                Ok(family)
            }
            "product" => {
                let factors = split_top_level(arg).ok_or_else(|| fail("unbalanced parentheses"))?;
                if factors.is_empty() || factors.iter().any(|f| f.trim().is_empty()) {
                    return Err(fail("empty product factor"));
                }
                let factors = factors
                    .into_iter()
                    .map(|f| {
                        let f = f.trim();
                        let inner = f.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(f);
                        inner.parse()
                    })
                    .collect::<Result<Vec<GroupFamily>>>()?;
                Ok(GroupFamily::Product(factors))
            }
            _ => Err(fail("unknown family (expected cyclic, dihedral or product)")),
        }
    }
}

/// Splits on commas that are not inside parentheses.
fn split_top_level(s: &str) -> Option<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    parts.push(&s[start..]);
    Some(parts)
}

/// Builds one of the built-in groups from its spec string.
pub fn build_builtin_group(spec: &str) -> Result<GroupTable> {
    spec.parse::<GroupFamily>()?.build()
}

/// On-disk form of a group: element names plus the full table,
/// `mul[i][j]` being the index of `elements[i] · elements[j]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupTableDocument {
    pub elements: Vec<String>,
    pub mul: Vec<Vec<usize>>,
}

/// Parses a group-table JSON document and validates it.
pub fn parse_group_table(json: &str) -> Result<GroupTable> {
    let doc: GroupTableDocument = serde_json::from_str(json)?;
    GroupTable::from_document(doc)
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug)]
pub struct GroupTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
    mul: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    family: Option<GroupFamily>,
}

impl GroupTable {
    pub fn from_document(doc: GroupTableDocument) -> Result<Self> {
        let n = doc.elements.len();
        if doc.mul.len() != n {
            return Err(Error::GroupTable(format!("mul has {} rows but there are {n} elements", doc.mul.len())));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in doc.mul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::GroupTable(format!("row {i} of mul has {} entries, expected {n}", row.len())));
            }
            flat.extend_from_slice(row);
        }
        Self::from_table(doc.elements, flat)
    }

    /// Validates a row-major `n×n` table and derives identity, inverses and
    /// conjugacy classes. The identity is always inferred.
    pub fn from_table(names: Vec<String>, mul: Vec<usize>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::GroupTable("group must have at least one element".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::GroupTooLarge { order: n, max: MAX_ORDER });
        }
        if mul.len() != n * n {
            return Err(Error::GroupTable(format!("table has {} entries, expected {}", mul.len(), n * n)));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::GroupTable(format!("duplicate element name {name:?}")));
            }
        }
        if let Some(&bad) = mul.iter().find(|&&x| x >= n) {
            return Err(Error::GroupTable(format!("entry {bad} is out of range 0..{n}")));
        }
        check_latin_square(&mul, n)?;

        let at = |a: usize, b: usize| mul[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or_else(|| Error::GroupTable("no identity element".into()))?;
        check_associativity(&mul, n)?;

        let inverse: Vec<usize> = (0..n)
            .map(|g| (0..n).find(|&h| at(g, h) == identity).expect("latin square row contains identity"))
            .collect();

        let mut table = GroupTable {
            names,
            index,
            mul,
            identity,
            inverse,
            classes: Vec::new(),
            class_of: Vec::new(),
            family: None,
        };
        table.compute_classes();
        Ok(table)
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let seeds = std::iter::once(self.identity).chain((0..n).filter(|&g| g != self.identity));
        for g in seeds {
            if class_of[g] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members: Vec<usize> = (0..n).map(|h| self.conjugate(g, h)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = id;
            }
            classes.push(members);
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn to_document(&self) -> GroupTableDocument {
        let n = self.order();
        GroupTableDocument {
            elements: self.names.clone(),
            mul: (0..n).map(|a| self.mul[a * n..(a + 1) * n].to_vec()).collect(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// `h·g·h⁻¹`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(h, g), self.inverse[h])
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn family(&self) -> Option<&GroupFamily> {
        self.family.as_ref()
    }

    /// Looks up an element by name. Built-in families also accept the
    /// explicit exponent spellings, e.g. `r^0*s` for `s` or `g^1` for `g`.
    pub fn element_index(&self, name: &str) -> Result<usize> {
        if let Some(&i) = self.index.get(name) {
            return Ok(i);
        }
        self.family
            .as_ref()
            .and_then(|f| f.alias_index(name.trim()))
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// Conjugacy classes, identity's class first, the rest ordered by their
    /// smallest element index. Each class is sorted.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Re-checks every structural invariant from scratch.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        check_latin_square(&self.mul, n)?;
        check_associativity(&self.mul, n)?;
        for g in 0..n {
            if self.mul(self.identity, g) != g || self.mul(g, self.identity) != g {
                return Err(Error::GroupTable(format!("{} is not a two-sided identity", self.names[self.identity])));
            }
            if self.mul(g, self.inverse[g]) != self.identity {
                return Err(Error::GroupTable(format!("wrong inverse for {}", self.names[g])));
            }
        }
        let mut seen = vec![false; n];
        for class in &self.classes {
            let g = class[0];
            let orbit: std::collections::BTreeSet<usize> = (0..n).map(|h| self.conjugate(g, h)).collect();
            if orbit.iter().copied().ne(class.iter().copied()) {
                return Err(Error::GroupTable(format!("class of {} is not a conjugation orbit", self.names[g])));
            }
            for &m in class {
                if std::mem::replace(&mut seen[m], true) {
                    return Err(Error::GroupTable("conjugacy classes overlap".into()));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::GroupTable("conjugacy classes do not cover the group".into()));
        }
        Ok(())
    }
}

/// Returns the conjugacy classes of `g`; see [`GroupTable::conjugacy_classes`].
pub fn conjugacy_classes(g: &GroupTable) -> Vec<Vec<usize>> {
    g.conjugacy_classes().to_vec()
}

fn check_latin_square(mul: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for row in 0..n {
        for col in 0..n {
            let x = mul[row * n + col];
            if seen[x] == row {
                return Err(Error::GroupTable(format!("not a Latin square: row {row} repeats {x}")));
            }
            seen[x] = row;
        }
    }
    seen.fill(usize::MAX);
    for col in 0..n {
        for row in 0..n {
            let x = mul[row * n + col];
            if seen[x] == col {
                return Err(Error::GroupTable(format!("not a Latin square: column {col} repeats {x}")));
            }
            seen[x] = col;
        }
    }
    Ok(())
}

fn check_associativity(mul: &[usize], n: usize) -> Result<()> {
    let at = |a: usize, b: usize| mul[a * n + b];
    let check = |a: usize, b: usize, c: usize| {
        if at(at(a, b), c) != at(a, at(b, c)) {
            Err(Error::GroupTable(format!("associativity fails for indices ({a}, {b}, {c})")))
        } else {
            Ok(())
        }
    };
    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return check(a, b, c);
                    }
                }
            }
        }
    } else {
        let mut rng = StdRng::seed_from_u64(0x5eed_0f_6a0c);
        for _ in 0..10 * n * n {
            check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
        }
    }
    Ok(())
}

/// Brute-force search for an isomorphism `a -> b`, returned as the image of
/// each element of `a`. Only meant for small groups.
pub fn find_isomorphism(a: &GroupTable, b: &GroupTable) -> Option<Vec<usize>> {
    let n = a.order();
    if n != b.order() || a.num_classes() != b.num_classes() {
        return None;
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    image[a.identity()] = b.identity();
    used[b.identity()] = true;
    let order: Vec<usize> = (0..n).filter(|&g| g != a.identity()).collect();
    if extend_isomorphism(a, b, &order, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn extend_isomorphism(
    a: &GroupTable,
    b: &GroupTable,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&g) = order.get(depth) else {
        return true;
    };
    if image[g] != usize::MAX {
        return extend_isomorphism(a, b, order, depth + 1, image, used);
    }
    for candidate in 0..b.order() {
        if used[candidate] {
            continue;
        }
        image[g] = candidate;
        used[candidate] = true;
        let consistent = (0..a.order()).filter(|&x| image[x] != usize::MAX).all(|x| {
            let checks = [(g, x), (x, g)];
            checks.iter().all(|&(p, q)| {
                let prod = image[a.mul(p, q)];
                prod == usize::MAX || prod == b.mul(image[p], image[q])
            })
        });
        if consistent && extend_isomorphism(a, b, order, depth + 1, image, used) {
            return true;
        }
        image[g] = usize::MAX;
        used[candidate] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = build_builtin_group("cyclic:1").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes(), &[vec![0]]);
        assert_eq!(g.name(0), "e");
    }

    #[test]
    fn dihedral_three_matches_symmetric_group_classes() {
        let g = build_builtin_group("dihedral:3").unwrap();
        assert_eq!(g.order(), 6);
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        let named: Vec<Vec<&str>> =
            g.conjugacy_classes().iter().map(|c| c.iter().map(|&i| g.name(i)).collect()).collect();
        assert_eq!(named, vec![vec!["e"], vec!["s", "r*s", "r^2*s"], vec!["r", "r^2"]]);
    }

    #[test]
    fn dihedral_relations() {
        for m in 2..9 {
            let g = build_builtin_group(&format!("dihedral:{m}")).unwrap();
            let r = g.element_index("r").unwrap();
            let s = g.element_index("s").unwrap();
            let e = g.identity();
            let mut x = e;
            for _ in 0..m {
                x = g.mul(x, r);
            }
            assert_eq!(x, e, "r^{m}");
            assert_eq!(g.mul(s, s), e);
            let rs = g.mul(r, s);
            assert_eq!(g.mul(rs, rs), e);
            assert_eq!(g.element_index("r*s").unwrap(), rs);
        }
    }

    #[test]
    fn product_is_abelian_with_singleton_classes() {
        let g = build_builtin_group("product:cyclic:2,cyclic:3").unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        assert_eq!(g.num_classes(), 6);
        assert_eq!(g.name(0), "(e,e)");
        assert_eq!(g.name(1), "(e,g)");
        assert_eq!(g.name(3), "(g,e)");
    }

    #[test]
    fn nested_product_spec_round_trips() {
        let spec = "product:(product:cyclic:2,cyclic:2),dihedral:3";
        let family: GroupFamily = spec.parse().unwrap();
        assert_eq!(family.to_string(), spec);
        assert_eq!(family.order(), 24);
        let g = family.build().unwrap();
        assert_eq!(g.num_classes(), 12);
    }

    #[test]
    fn malformed_specs_are_rejected() {
        for bad in ["", "cyclic", "cyclic:0", "cyclic:x", "dihedral:1", "klein:4", "product:", "product:cyclic:2,", "product:(cyclic:2"] {
            assert!(matches!(build_builtin_group(bad), Err(Error::GroupSpec { .. })), "{bad}");
        }
        assert!(matches!(build_builtin_group("cyclic:5000"), Err(Error::GroupTooLarge { .. })));
        assert!(matches!(build_builtin_group("product:cyclic:64,cyclic:65"), Err(Error::GroupTooLarge { .. })));
    }

    #[test]
    fn order_two_table() {
        let g = parse_group_table(r#"{"elements":["e","a"],"mul":[[0,1],[1,0]]}"#).unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inverse(1), 1);
    }

    #[test]
    fn identity_is_inferred_anywhere() {
        let g = parse_group_table(r#"{"elements":["a","e"],"mul":[[1,0],[0,1]]}"#).unwrap();
        assert_eq!(g.identity(), 1);
        assert_eq!(g.conjugacy_classes()[0], vec![1]);
    }

    #[test]
    fn non_latin_square_rejected() {
        let err = parse_group_table(r#"{"elements":["e","a"],"mul":[[0,0],[1,0]]}"#).unwrap_err();
        assert!(err.to_string().contains("Latin square"), "{err}");
    }

    #[test]
    fn duplicate_names_rejected() {
        let err = parse_group_table(r#"{"elements":["e","e"],"mul":[[0,1],[1,0]]}"#).unwrap_err();
        assert!(err.to_string().contains("duplicate"), "{err}");
    }

    #[test]
    fn missing_identity_rejected() {
        // x*y = -x-y mod 3: a Latin square with no identity row
        let err = parse_group_table(r#"{"elements":["a","b","c"],"mul":[[0,2,1],[2,1,0],[1,0,2]]}"#)
            .map(|_| ())
            .unwrap_err();
        assert!(err.to_string().contains("identity"), "{err}");
    }

    #[test]
    fn non_associative_loop_rejected() {
        // smallest non-associative Latin square with identity (order 5 loop)
        let mul = r#"[[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]"#;
        let doc = format!(r#"{{"elements":["e","a","b","c","d"],"mul":{mul}}}"#);
        let err = parse_group_table(&doc).unwrap_err();
        assert!(err.to_string().contains("associativity"), "{err}");
    }

    #[test]
    fn cyclic_five_has_five_classes() {
        let g = build_builtin_group("cyclic:5").unwrap();
        assert_eq!(g.conjugacy_classes().len(), 5);
        assert!(g.conjugacy_classes().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn aliases_resolve() {
        let d = build_builtin_group("dihedral:4").unwrap();
        assert_eq!(d.element_index("r^0").unwrap(), d.identity());
        assert_eq!(d.element_index("r^1*s").unwrap(), d.element_index("r*s").unwrap());
        assert_eq!(d.element_index("r^0*s").unwrap(), d.element_index("s").unwrap());
        assert!(d.element_index("r^4").is_err());
        let c = build_builtin_group("cyclic:3").unwrap();
        assert_eq!(c.element_index("g^1").unwrap(), 1);
        assert!(c.element_index("s").is_err());
    }

    #[test]
    fn large_group_uses_sampled_associativity() {
        let g = build_builtin_group("dihedral:200").unwrap();
        assert_eq!(g.order(), 400);
        assert!(g.order() > EXHAUSTIVE_ASSOCIATIVITY_LIMIT);
        assert_eq!(g.num_classes(), 200 / 2 + 3);
    }
}
