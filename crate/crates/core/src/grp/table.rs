use std::collections::{HashMap, HashSet};

use num_integer::Integer;

use super::perm::Permutation;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

/// Default cap on the number of enumerated elements.
pub const DEFAULT_BOUND: usize = 20_000;

/// Groups up to this order keep a dense multiplication table.
const DENSE_LIMIT: usize = 2048;

/// Reads `RUE_MAX_ELEMENTS`, falling back to [`DEFAULT_BOUND`].
pub fn enumeration_bound() -> usize {
    std::env::var("RUE_MAX_ELEMENTS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&b: &usize| b >= 1)
        .unwrap_or(DEFAULT_BOUND)
}

/// A fully enumerated permutation group. Element 0 is the identity.
#[derive(Clone)]
pub struct GroupTable {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    mul: Option<Vec<u32>>,
    inv: Vec<usize>,
    orders: Vec<usize>,
    gens: Vec<usize>,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("gens", &self.gens)
            .finish()
    }
}

/// Closure of `gens` under composition.
///
/// Elements are numbered breadth-first from the identity; each new layer is
/// sorted by image sequence so the numbering is independent of hash order.
pub fn group_from_generators(
    degree: usize,
    gens: &[Permutation],
    bound: usize,
) -> Result<GroupTable> {
    if bound == 0 {
        return Err(Error::EnumerationBoundExceeded { bound });
    }
    for g in gens {
        if g.degree() != degree {
            return Err(Error::InvalidPermutation(format!(
                "generator {} has degree {}, expected {}",
                g,
                g.degree(),
                degree
            )));
        }
    }
    let identity = Permutation::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity, 0usize);
    let mut layer = vec![0usize];
    while !layer.is_empty() {
        let mut fresh: HashSet<Permutation> = HashSet::new();
        for &e in &layer {
            for g in gens {
                let p = elements[e].then(g);
                if !index.contains_key(&p) {
                    fresh.insert(p);
                }
            }
        }
        let mut fresh: Vec<Permutation> = fresh.into_iter().collect();
        fresh.sort();
        if elements.len() + fresh.len() > bound {
            return Err(Error::EnumerationBoundExceeded { bound });
        }
        layer.clear();
        for p in fresh {
            let i = elements.len();
            index.insert(p.clone(), i);
            elements.push(p);
            layer.push(i);
        }
    }
    let gen_idx: Vec<usize> = {
        let mut v: Vec<usize> = gens.iter().map(|g| index[g]).filter(|&i| i != 0).collect();
        let mut seen = HashSet::new();
        v.retain(|i| seen.insert(*i));
        v
    };
    Ok(GroupTable::assemble(degree, elements, index, gen_idx))
}

impl GroupTable {
    fn assemble(
        degree: usize,
        elements: Vec<Permutation>,
        index: HashMap<Permutation, usize>,
        gens: Vec<usize>,
    ) -> Self {
        let n = elements.len();
        let inv = elements.iter().map(|p| index[&p.inverse()]).collect();
        let mul = if n <= DENSE_LIMIT {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[a * n + b] = index[&elements[a].then(&elements[b])] as u32;
                }
            }
            Some(t)
        } else {
            None
        };
        let mut g = GroupTable {
            degree,
            elements,
            index,
            mul,
            inv,
            orders: Vec::new(),
            gens,
        };
        g.orders = (0..n).map(|x| g.compute_order(x)).collect();
        g
    }

    fn compute_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn trivial() -> Self {
        group_from_generators(1, &[], 1).expect("trivial group")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    /// Indices of the generators (identity and duplicates removed).
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.mul {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].then(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `h^-1 g h`
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv[h], g), h)
    }

    /// `a^-1 b^-1 a b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv[a], self.inv[b]), self.mul(a, b))
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        let k = k % self.orders[g];
        let mut acc = 0;
        let mut base = g;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.orders[g]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1, |acc, &o| acc.lcm(&o))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.gens;
        g.iter()
            .enumerate()
            .all(|(i, &a)| g[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_members(self.order(), (0..self.order()).collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_members(self.order(), vec![0])
    }

    /// Subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let n = self.order();
        let mut mask = vec![false; n];
        mask[0] = true;
        let mut members = vec![0usize];
        let mut head = 0;
        while head < members.len() {
            let m = members[head];
            head += 1;
            for &g in gens {
                let p = self.mul(m, g);
                if !mask[p] {
                    mask[p] = true;
                    members.push(p);
                }
            }
        }
        Subgroup::from_mask(mask)
    }

    /// Subgroup generated by `elems`, keeping only the generators that
    /// enlarge the running subgroup.
    pub fn subgroup_generated_by_set<I: IntoIterator<Item = usize>>(&self, elems: I) -> Subgroup {
        let mut gens: Vec<usize> = Vec::new();
        let mut current = self.trivial_subgroup();
        for x in elems {
            if !current.contains(x) {
                gens.push(x);
                current = self.subgroup_generated(&gens);
            }
        }
        current
    }

    /// Greedy small generating set: elements taken by decreasing order.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut cand: Vec<usize> = (1..self.order()).collect();
        cand.sort_by(|&a, &b| self.orders[b].cmp(&self.orders[a]).then(a.cmp(&b)));
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        for x in cand {
            if current.order() == self.order() {
                break;
            }
            if !current.contains(x) {
                gens.push(x);
                current = self.subgroup_generated(&gens);
            }
        }
        gens
    }

    /// Internal product `AB` of two subgroups, one of which normalizes the other.
    pub fn product(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut mask = vec![false; self.order()];
        for &x in a.members() {
            for &y in b.members() {
                mask[self.mul(x, y)] = true;
            }
        }
        Subgroup::from_mask(mask)
    }

    /// Regroups the elements of `sub` into their own table, with the map
    /// back to indices of `self`.
    pub fn subgroup_as_group(&self, sub: &Subgroup) -> (GroupTable, Vec<usize>) {
        let gens: Vec<Permutation> = self
            .subgroup_generators_of(sub)
            .into_iter()
            .map(|g| self.elements[g].clone())
            .collect();
        let h = group_from_generators(self.degree, &gens, sub.order())
            .expect("subgroup closure stays within its own order");
        let back = h
            .elements()
            .iter()
            .map(|p| self.index[p])
            .collect();
        (h, back)
    }

    /// Spot-checks the group axioms; exhaustive associativity when small.
    pub fn check_axioms(&self) -> bool {
        let n = self.order();
        if !self.elements[0].is_identity() {
            return false;
        }
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a || self.mul(a, self.inv[a]) != 0 {
                return false;
            }
        }
        let step = if n <= 64 { 1 } else { n / 61 + 1 };
        for a in (0..n).step_by(step) {
            for b in (0..n).step_by(step) {
                for c in (0..n).step_by(step) {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    #[test]
    fn sym3_from_generators() {
        let g = group_from_generators(3, &[p(3, "(0 1 2)"), p(3, "(0 1)")], 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.element(0).is_identity());
        assert!(g.check_axioms());
        assert!(!g.is_abelian());
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn alt5_order_60() {
        let g =
            group_from_generators(5, &[p(5, "(0 1 2 3 4)"), p(5, "(0 1 2)")], 1000).unwrap();
        assert_eq!(g.order(), 60);
        // Lagrange chain: <(0 1 2 3 4)> has order 5 and index 12.
        let c5 = g.subgroup_generated(&[g.index_of(&p(5, "(0 1 2 3 4)")).unwrap()]);
        assert_eq!(c5.order(), 5);
        assert_eq!(g.order() % c5.order(), 0);
        assert!(g.check_axioms());
    }

    #[test]
    fn trivial_group() {
        let g = group_from_generators(1, &[], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.exponent(), 1);
        assert!(g.is_abelian());
    }

    #[test]
    fn bound_and_degree_errors() {
        let err = group_from_generators(3, &[p(3, "(0 1 2)"), p(3, "(0 1)")], 5).unwrap_err();
        assert_eq!(err, Error::EnumerationBoundExceeded { bound: 5 });
        assert!(matches!(
            group_from_generators(4, &[p(3, "(0 1)")], 5),
            Err(Error::InvalidPermutation(_))
        ));
    }

    #[test]
    fn ordering_is_deterministic() {
        let a = group_from_generators(4, &[p(4, "(0 1 2 3)"), p(4, "(0 1)")], 100).unwrap();
        let b = group_from_generators(4, &[p(4, "(0 1 2 3)"), p(4, "(0 1)")], 100).unwrap();
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn sparse_multiplication_matches_composition() {
        // Sym7 has 5040 elements, above the dense limit.
        let g = group_from_generators(7, &[p(7, "(0 1 2 3 4 5 6)"), p(7, "(0 1)")], 10_000)
            .unwrap();
        assert_eq!(g.order(), 5040);
        for (a, b) in [(3, 17), (100, 4000), (5039, 2)] {
            let prod = g.element(a).then(g.element(b));
            assert_eq!(g.element(g.mul(a, b)), &prod);
        }
        assert_eq!(g.exponent(), 420);
    }
}
