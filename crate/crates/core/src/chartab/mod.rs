//! Exact irreducible character tables and the character-side predicates:
//! root-of-unity elements, vanishing, degree divisibility, the centralizer
//! bound and commuting probability.

mod dixon;
mod modp;

use std::collections::HashSet;

use num_rational::Ratio;
use serde::Serialize;

pub use dixon::{class_multiplication_constants, ClassConstants};
pub use modp::{choose_prime, Fp};

use crate::cyclo::{Coefficient, Cyclotomic, CyclotomicRing, GaloisMap, RootSum};
use crate::error::{Error, Result};
use crate::grp::{conjugacy_classes, ConjClassSet, GroupTable, Subgroup};

/// Above this many classes the central-character relation is not rechecked
/// during construction (it is cubic in the class count per character).
const CENTRAL_RELATION_LIMIT: usize = 24;

/// Irreducible characters of a finite group with values in `Z[zeta_e]`,
/// `e` the group exponent. Rows are sorted by degree, then by values.
#[derive(Clone)]
pub struct CharacterTable<T: Coefficient> {
    order: usize,
    classes: ConjClassSet,
    centralizer_orders: Vec<usize>,
    exponent: u32,
    prime: u64,
    degrees: Vec<u64>,
    raw: Vec<Vec<RootSum>>,
    values: Vec<Vec<Cyclotomic<T>>>,
    unit: Vec<Vec<bool>>,
    zero: Vec<Vec<bool>>,
    constants: ClassConstants,
}

impl<T: Coefficient> std::fmt::Debug for CharacterTable<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CharacterTable")
            .field("order", &self.order)
            .field("exponent", &self.exponent)
            .field("degrees", &self.degrees)
            .field("values", &self.values)
            .finish()
    }
}

pub fn character_table<T: Coefficient>(g: &GroupTable) -> Result<CharacterTable<T>> {
    let classes = conjugacy_classes(g);
    let constants = class_multiplication_constants(g, &classes);
    check_constants(&classes, &constants)?;
    let out = dixon::dixon(g, &classes, &constants)?;

    let e = classes.exponent() as u32;
    let mut rows: Vec<(u64, Vec<Cyclotomic<T>>, Vec<RootSum>)> = out
        .characters
        .into_iter()
        .map(|c| {
            let vals = c.values.iter().map(RootSum::to_cyclotomic).collect();
            (c.degree, vals, c.values)
        })
        .collect();
    rows.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));

    let ring = CyclotomicRing::get(e);
    let mut unit = Vec::with_capacity(rows.len());
    let mut zero = Vec::with_capacity(rows.len());
    for (_, _, raw) in &rows {
        let mut u = Vec::with_capacity(raw.len());
        let mut z = Vec::with_capacity(raw.len());
        for v in raw {
            let n = reduce(&ring, &wide_product(e, v, v, true, 1))?;
            u.push(n[0] == 1 && n[1..].iter().all(|&c| c == 0));
            z.push(reduce(&ring, &wide(e, v))?.iter().all(|&c| c == 0));
        }
        unit.push(u);
        zero.push(z);
    }

    let n = g.order();
    let centralizer_orders = classes.sizes().iter().map(|s| n / s).collect();
    let mut degrees = Vec::with_capacity(rows.len());
    let mut values = Vec::with_capacity(rows.len());
    let mut raw = Vec::with_capacity(rows.len());
    for (d, v, r) in rows {
        degrees.push(d);
        values.push(v);
        raw.push(r);
    }
    let table = CharacterTable {
        order: n,
        classes,
        centralizer_orders,
        exponent: e,
        prime: out.prime,
        degrees,
        raw,
        values,
        unit,
        zero,
        constants,
    };
    table.verify()?;
    Ok(table)
}

fn check_constants(classes: &ConjClassSet, a: &ClassConstants) -> Result<()> {
    let h = classes.sizes();
    for i in 0..a.len() {
        for j in 0..a.len() {
            let s: u64 = a.nonzero(i, j).iter().map(|&(k, c)| c * h[k] as u64).sum();
            if s != (h[i] * h[j]) as u64 {
                return Err(Error::TableDefect(format!(
                    "class constants for ({}, {}) do not sum to the product of class sizes",
                    i, j
                )));
            }
        }
    }
    Ok(())
}

/// Dense exponent-indexed buffer of one value.
fn wide(e: u32, v: &RootSum) -> Vec<i128> {
    let mut buf = vec![0i128; e as usize];
    for &(j, m) in v.terms() {
        buf[j as usize] += m as i128;
    }
    buf
}

/// `scale * a * b` (or `scale * a * conj(b)`) as a dense buffer.
fn wide_product(e: u32, a: &RootSum, b: &RootSum, conj_b: bool, scale: i128) -> Vec<i128> {
    let mut buf = vec![0i128; e as usize];
    add_product(&mut buf, a, b, conj_b, scale);
    buf
}

fn add_product(buf: &mut [i128], a: &RootSum, b: &RootSum, conj_b: bool, scale: i128) {
    let e = buf.len();
    for &(i, m) in a.terms() {
        for &(j, n) in b.terms() {
            let k = if conj_b {
                (i as usize + e - j as usize) % e
            } else {
                (i as usize + j as usize) % e
            };
            buf[k] += scale * m as i128 * n as i128;
        }
    }
}

fn reduce(ring: &CyclotomicRing, buf: &[i128]) -> Result<Vec<i128>> {
    ring.reduce_wide(buf)
        .ok_or_else(|| Error::TableDefect("overflow in exact reduction".into()))
}

fn is_integer(v: &[i128], n: i128) -> bool {
    v[0] == n && v[1..].iter().all(|&c| c == 0)
}

/// Outcome of the degree-divides-class-size check.
#[derive(Clone, Debug, Default, Serialize)]
pub struct DivisibilityReport {
    /// `(character, class)` pairs with a unit-modulus value where the degree
    /// divides the class size.
    pub verified: Vec<(usize, usize)>,
    pub violations: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictWitness {
    /// A character vanishing at the element.
    Vanishes(usize),
    /// A character whose value has modulus different from 1.
    NotUnitModulus(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RueVerdict {
    pub element: usize,
    pub is_nonvanishing: bool,
    pub is_rue: bool,
    pub witness: Option<VerdictWitness>,
}

/// One class in the centralizer-versus-class-count comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub class: usize,
    pub centralizer_order: usize,
    pub nonvanishing: bool,
    pub rue: bool,
    /// `|C(x)| = k(G)`
    pub equality: bool,
    /// For nonvanishing classes: `|C(x)| >= k(G)` and equality exactly when
    /// the class consists of root-of-unity elements. Always true otherwise.
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub k: usize,
    pub entries: Vec<BoundEntry>,
    /// Classes with `|C(x)| = k(G)` that are not root-of-unity classes. Every
    /// one of them must be vanishing for the report to be consistent.
    pub equality_without_rue: Vec<usize>,
    pub ok: bool,
}

impl<T: Coefficient> CharacterTable<T> {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn classes(&self) -> &ConjClassSet {
        &self.classes
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// The prime used for the modular computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn values(&self) -> &[Vec<Cyclotomic<T>>] {
        &self.values
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic<T> {
        &self.values[chi][class]
    }

    /// The value as a sum of eigenvalues `sum m_j zeta_e^j`.
    pub fn eigenvalue_form(&self, chi: usize, class: usize) -> &RootSum {
        &self.raw[chi][class]
    }

    pub fn centralizer_order(&self, class: usize) -> usize {
        self.centralizer_orders[class]
    }

    pub fn constants(&self) -> &ClassConstants {
        &self.constants
    }

    pub fn is_unit_modulus(&self, chi: usize, class: usize) -> bool {
        self.unit[chi][class]
    }

    pub fn is_zero(&self, chi: usize, class: usize) -> bool {
        self.zero[chi][class]
    }

    pub fn k_of_group(&self) -> usize {
        self.classes.len()
    }

    /// `k(G) / |G|`, reduced.
    pub fn commuting_probability(&self) -> Ratio<usize> {
        Ratio::new(self.k_of_group(), self.order)
    }

    pub fn class_is_nonvanishing(&self, class: usize) -> bool {
        (0..self.degrees.len()).all(|chi| !self.zero[chi][class])
    }

    pub fn class_is_rue(&self, class: usize) -> bool {
        (0..self.degrees.len()).all(|chi| self.unit[chi][class])
    }

    /// Classes consisting of root-of-unity elements.
    pub fn rue_classes(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&c| self.class_is_rue(c))
            .collect()
    }

    /// Sorted element indices of all root-of-unity elements.
    pub fn rue_elements(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .rue_classes()
            .into_iter()
            .flat_map(|c| self.classes.class(c).members.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// `|class| chi(g) / chi(1)`, an algebraic integer.
    pub fn omega(&self, chi: usize, class: usize) -> Result<Cyclotomic<T>> {
        let h = T::from_usize(self.classes.class(class).size()).expect("class size");
        let d = T::from_u64(self.degrees[chi]).expect("degree");
        self.values[chi][class].scale(&h).div_exact(&d)
    }

    pub fn check_divisibility(&self) -> DivisibilityReport {
        let mut report = DivisibilityReport::default();
        for (chi, &d) in self.degrees.iter().enumerate() {
            for c in 0..self.classes.len() {
                if !self.unit[chi][c] {
                    continue;
                }
                if (self.classes.class(c).size() as u64).is_multiple_of(d) {
                    report.verified.push((chi, c));
                } else {
                    report.violations.push((chi, c));
                }
            }
        }
        report
    }

    fn class_witness(&self, class: usize) -> Option<VerdictWitness> {
        let chis = 0..self.degrees.len();
        if let Some(chi) = chis.clone().find(|&chi| self.zero[chi][class]) {
            return Some(VerdictWitness::Vanishes(chi));
        }
        chis.into_iter()
            .find(|&chi| !self.unit[chi][class])
            .map(VerdictWitness::NotUnitModulus)
    }

    /// One verdict per element, in element order.
    pub fn rue_verdicts(&self) -> Vec<RueVerdict> {
        let per_class: Vec<Option<VerdictWitness>> = (0..self.classes.len())
            .map(|c| self.class_witness(c))
            .collect();
        (0..self.order)
            .map(|x| {
                let w = per_class[self.classes.class_of(x)];
                RueVerdict {
                    element: x,
                    is_nonvanishing: !matches!(w, Some(VerdictWitness::Vanishes(_))),
                    is_rue: w.is_none(),
                    witness: w,
                }
            })
            .collect()
    }

    /// Compares `|C(x)|` with `k(G)` for every class.
    pub fn nonvanishing_bound_check(&self) -> BoundReport {
        let k = self.k_of_group();
        let mut entries = Vec::with_capacity(k);
        let mut equality_without_rue = Vec::new();
        for c in 0..k {
            let cent = self.centralizer_orders[c];
            let nonvanishing = self.class_is_nonvanishing(c);
            let rue = self.class_is_rue(c);
            let equality = cent == k;
            let consistent = !nonvanishing || (cent >= k && equality == rue);
            if equality && !rue {
                equality_without_rue.push(c);
            }
            entries.push(BoundEntry {
                class: c,
                centralizer_order: cent,
                nonvanishing,
                rue,
                equality,
                consistent,
            });
        }
        let ok = entries.iter().all(|e| e.consistent);
        BoundReport {
            k,
            entries,
            equality_without_rue,
            ok,
        }
    }

    /// Exact internal consistency: orthogonality, degree sum, Galois closure
    /// of the rows and (for small tables) the central-character relation.
    pub fn verify(&self) -> Result<()> {
        let r = self.classes.len();
        if self.degrees.len() != r {
            return Err(Error::TableDefect(format!(
                "{} characters for {} classes",
                self.degrees.len(),
                r
            )));
        }
        let sum: u64 = self.degrees.iter().map(|d| d * d).sum();
        if sum != self.order as u64 {
            return Err(Error::TableDefect(format!(
                "squared degrees sum to {}, not {}",
                sum, self.order
            )));
        }
        self.check_row_orthogonality()?;
        self.check_column_orthogonality()?;
        self.check_galois_closure()?;
        if r <= CENTRAL_RELATION_LIMIT {
            self.check_central_relation()?;
        }
        Ok(())
    }

    pub fn check_row_orthogonality(&self) -> Result<()> {
        let ring = CyclotomicRing::get(self.exponent);
        let sizes = self.classes.sizes();
        let r = self.degrees.len();
        for i in 0..r {
            for j in i..r {
                let mut buf = vec![0i128; self.exponent as usize];
                for (c, &h) in sizes.iter().enumerate() {
                    add_product(&mut buf, &self.raw[i][c], &self.raw[j][c], true, h as i128);
                }
                let expected = if i == j { self.order as i128 } else { 0 };
                if !is_integer(&reduce(&ring, &buf)?, expected) {
                    return Err(Error::TableDefect(format!(
                        "rows {} and {} violate orthogonality",
                        i, j
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn check_column_orthogonality(&self) -> Result<()> {
        let ring = CyclotomicRing::get(self.exponent);
        let r = self.classes.len();
        for c in 0..r {
            for d in c..r {
                let mut buf = vec![0i128; self.exponent as usize];
                for row in &self.raw {
                    add_product(&mut buf, &row[c], &row[d], true, 1);
                }
                let expected = if c == d {
                    self.centralizer_orders[c] as i128
                } else {
                    0
                };
                if !is_integer(&reduce(&ring, &buf)?, expected) {
                    return Err(Error::TableDefect(format!(
                        "columns {} and {} violate orthogonality",
                        c, d
                    )));
                }
            }
        }
        Ok(())
    }

    /// Every Galois map permutes the rows. Rows are compared in eigenvalue
    /// form, which determines the row and is itself canonical.
    pub fn check_galois_closure(&self) -> Result<()> {
        let rows: HashSet<&Vec<RootSum>> = self.raw.iter().collect();
        for m in GaloisMap::all(self.exponent) {
            let k = m.exponent() as i64;
            for (i, row) in self.raw.iter().enumerate() {
                let image: Vec<RootSum> = row.iter().map(|v| v.substitute(k)).collect();
                if !rows.contains(&image) {
                    return Err(Error::TableDefect(format!(
                        "row {} is not mapped to a row by zeta -> zeta^{}",
                        i, k
                    )));
                }
            }
        }
        Ok(())
    }

    /// `omega_i omega_j = sum_k a_ijk omega_k` for every character, checked
    /// after clearing denominators: `h_i h_j chi_i chi_j = d sum_k a_ijk h_k chi_k`.
    pub fn check_central_relation(&self) -> Result<()> {
        let ring = CyclotomicRing::get(self.exponent);
        let sizes = self.classes.sizes();
        let r = self.classes.len();
        for (chi, row) in self.raw.iter().enumerate() {
            let d = self.degrees[chi] as i128;
            for i in 0..r {
                for j in i..r {
                    let mut buf = wide_product(
                        self.exponent,
                        &row[i],
                        &row[j],
                        false,
                        (sizes[i] * sizes[j]) as i128,
                    );
                    for &(k, a) in self.constants.nonzero(i, j) {
                        let scale = d * a as i128 * sizes[k] as i128;
                        for &(t, m) in row[k].terms() {
                            buf[t as usize] -= scale * m as i128;
                        }
                    }
                    if reduce(&ring, &buf)?.iter().any(|&c| c != 0) {
                        return Err(Error::TableDefect(format!(
                            "central character of row {} fails at classes ({}, {})",
                            chi, i, j
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Whether every element of `G - N` is a vanishing element, for `N` the
/// unique minimal normal subgroup, nonabelian, with `G/N` solvable.
pub fn verify_vanishing_outside<T: Coefficient>(
    g: &GroupTable,
    table: &CharacterTable<T>,
    n: &Subgroup,
) -> Result<bool> {
    let minimal = g.minimal_normal_subgroups();
    if minimal.len() != 1 || minimal[0].members() != n.members() {
        return Err(Error::HypothesisNotMet(
            "subgroup is not the unique minimal normal subgroup".into(),
        ));
    }
    if n.is_abelian(g) {
        return Err(Error::HypothesisNotMet("minimal normal subgroup is abelian".into()));
    }
    if !g.quotient(n)?.group.structural_flags().solvable {
        return Err(Error::HypothesisNotMet("quotient is not solvable".into()));
    }
    let classes = table.classes();
    Ok((0..classes.len()).all(|c| {
        n.contains(classes.class(c).representative) || !table.class_is_nonvanishing(c)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{group_from_generators, Permutation};
    use num_bigint::BigInt;

    fn grp(degree: usize, gens: &[&str]) -> GroupTable {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(degree, s).unwrap())
            .collect();
        group_from_generators(degree, &gens, 100_000).unwrap()
    }

    fn int(v: &Cyclotomic<i64>) -> i64 {
        *v.as_integer().expect("rational value")
    }

    #[test]
    fn sym3_table() {
        let g = grp(3, &["(0 1 2)", "(0 1)"]);
        let t = character_table::<i64>(&g).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2]);
        // classes: identity, transpositions, 3-cycles
        assert_eq!(t.classes().sizes(), vec![1, 3, 2]);
        assert_eq!(int(t.value(2, 1)), 0);
        assert_eq!(int(t.value(2, 2)), -1);
        // the sign character sorts before the trivial one
        assert_eq!(int(t.value(0, 1)), -1);
        assert_eq!(int(t.value(1, 1)), 1);
        assert_eq!(t.omega(2, 2).unwrap(), Cyclotomic::from_integer(t.exponent(), -1));
        let rue = t.rue_elements();
        assert_eq!(rue.len(), 2);
        assert!(rue.iter().all(|&x| g.element_order(x) == 3));
        let b = t.nonvanishing_bound_check();
        assert!(b.ok);
        assert!(b.entries[2].equality && b.entries[2].rue);
        assert_eq!(t.commuting_probability(), Ratio::new(1, 2));
    }

    #[test]
    fn sym3_class_constants() {
        let g = grp(3, &["(0 1 2)", "(0 1)"]);
        let cl = conjugacy_classes(&g);
        let a = class_multiplication_constants(&g, &cl);
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(a.get(0, j, k), u64::from(j == k));
            }
        }
        // transposition squared: identity three ways, a 3-cycle in three ways
        assert_eq!(a.get(1, 1, 0), 3);
        assert_eq!(a.get(1, 1, 2), 3);
        assert_eq!(a.get(1, 1, 1), 0);
    }

    #[test]
    fn cyclic_tables_are_dual_groups() {
        for n in [1usize, 2, 5, 12] {
            let cycle: Vec<u32> = (0..n as u32).collect();
            let p = Permutation::from_cycles(n, &[cycle]).unwrap();
            let g = group_from_generators(n, &[p], 1000).unwrap();
            let t = character_table::<i64>(&g).unwrap();
            assert_eq!(t.degrees(), vec![1u64; n].as_slice());
            assert_eq!(t.rue_elements().len(), n);
            assert_eq!(t.commuting_probability(), Ratio::from_integer(1));
            for chi in 0..n {
                for c in 0..n {
                    let v = t.value(chi, c);
                    assert!(t.is_unit_modulus(chi, c));
                    assert!(v.is_unit_modulus());
                }
            }
        }
    }

    #[test]
    fn alt5_table_and_boundary_element() {
        let g = grp(5, &["(0 1 2 3 4)", "(0 1 2)"]);
        let t = character_table::<BigInt>(&g).unwrap();
        assert_eq!(t.degrees(), &[1, 3, 3, 4, 5]);
        assert_eq!(t.exponent(), 30);
        assert_eq!(t.k_of_group(), 5);
        let c5 = (0..5)
            .find(|&c| g.element_order(t.classes().class(c).representative) == 5)
            .unwrap();
        assert_eq!(t.centralizer_order(c5), 5);
        // degree-3 values at order-5 elements are (1 +- sqrt 5)/2
        for chi in [1, 2] {
            let v = t.value(chi, c5);
            let z = v.to_complex::<f64>();
            let golden = (1.0 + 5f64.sqrt()) / 2.0;
            assert!((z.re - golden).abs() < 1e-9 || (z.re - (1.0 - golden)).abs() < 1e-9);
            assert!(!t.is_unit_modulus(chi, c5));
            assert!(!v.norm_square().is_one());
        }
        // the degree-5 character vanishes there, so the element is vanishing
        assert!(t.is_zero(4, c5));
        assert!(!t.class_is_nonvanishing(c5));
        let b = t.nonvanishing_bound_check();
        assert!(b.ok);
        assert!(b.equality_without_rue.contains(&c5));
        assert!(t.rue_elements().is_empty());
    }

    #[test]
    fn alt4_divisibility() {
        let g = grp(4, &["(0 1 2)", "(0 1)(2 3)"]);
        let t = character_table::<i64>(&g).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1, 3]);
        let inv = (0..4)
            .find(|&c| g.element_order(t.classes().class(c).representative) == 2)
            .unwrap();
        assert_eq!(int(t.value(3, inv)), -1);
        let rep = t.check_divisibility();
        assert!(rep.violations.is_empty());
        assert!(rep.verified.contains(&(3, inv)));
    }

    #[test]
    fn quaternion_values_are_integers() {
        let g = grp(8, &["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"]);
        let t = character_table::<i64>(&g).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
        for row in t.values() {
            for v in row {
                assert!(v.rational_part_test().is_some());
            }
        }
        // the degree-2 character is +-2 on the center and 0 elsewhere
        assert!(t.rue_elements().is_empty());
    }

    #[test]
    fn vanishing_outside_minimal_normal() {
        let s5 = grp(5, &["(0 1 2 3 4)", "(0 1)"]);
        let t = character_table::<i64>(&s5).unwrap();
        let a5 = s5.derived_subgroup();
        assert_eq!(a5.order(), 60);
        assert!(verify_vanishing_outside(&s5, &t, &a5).unwrap());

        let alt5 = grp(5, &["(0 1 2 3 4)", "(0 1 2)"]);
        let ta = character_table::<i64>(&alt5).unwrap();
        assert!(verify_vanishing_outside(&alt5, &ta, &alt5.whole()).unwrap());

        let s3 = grp(3, &["(0 1 2)", "(0 1)"]);
        let t3 = character_table::<i64>(&s3).unwrap();
        assert!(matches!(
            verify_vanishing_outside(&s3, &t3, &s3.derived_subgroup()),
            Err(Error::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn generic_coefficients_agree() {
        let g = grp(5, &["(0 1 2 3 4)", "(1 2 4 3)"]);
        let a = character_table::<i64>(&g).unwrap();
        let b = character_table::<BigInt>(&g).unwrap();
        assert_eq!(a.degrees(), b.degrees());
        for (ra, rb) in a.values().iter().zip(b.values()) {
            for (x, y) in ra.iter().zip(rb) {
                assert_eq!(x.to_string(), y.to_string());
            }
        }
    }
}
