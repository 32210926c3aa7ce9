use super::table::GroupTable;

/// A subgroup stored as a sorted index set of its parent's elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.order(), self.members)
    }
}

impl Subgroup {
    pub fn from_members(parent_order: usize, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        let mut mask = vec![false; parent_order];
        for &m in &members {
            mask[m] = true;
        }
        Self { members, mask }
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect();
        Self { members, mask }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mask = self
            .mask
            .iter()
            .zip(&other.mask)
            .map(|(&a, &b)| a && b)
            .collect();
        Subgroup::from_mask(mask)
    }

    /// Closure and inverse test against the parent table.
    pub fn is_subgroup_of(&self, g: &GroupTable) -> bool {
        self.contains(0)
            && self.members.iter().all(|&a| {
                self.contains(g.inv(a)) && self.members.iter().all(|&b| self.contains(g.mul(a, b)))
            })
    }

    pub fn is_normal(&self, g: &GroupTable) -> bool {
        g.generators()
            .iter()
            .all(|&h| self.members.iter().all(|&x| self.contains(g.conj(x, h))))
    }

    pub fn is_abelian(&self, g: &GroupTable) -> bool {
        let gens = g.subgroup_generators_of(self);
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.commute(a, b)))
    }

    /// Nilpotent iff every Sylow subgroup is normal, i.e. for each prime p
    /// the p-elements number exactly the p-part of the order.
    pub fn is_nilpotent(&self, g: &GroupTable) -> bool {
        let n = self.order();
        crate::grp::prime_factors(n).into_iter().all(|p| {
            let mut pp = 1;
            while n.is_multiple_of(pp * p) {
                pp *= p;
            }
            let count = self
                .members
                .iter()
                .filter(|&&x| is_power_of(g.element_order(x), p))
                .count();
            count == pp
        })
    }

    /// Elementary abelian p-group of order `p^k` (k >= 1); returns p.
    pub fn elementary_abelian_prime(&self, g: &GroupTable) -> Option<usize> {
        let n = self.order();
        if n < 2 {
            return None;
        }
        let primes = crate::grp::prime_factors(n);
        if primes.len() != 1 {
            return None;
        }
        let p = primes[0];
        let exp_ok = self.members[1..].iter().all(|&x| g.element_order(x) == p);
        (exp_ok && self.is_abelian(g)).then_some(p)
    }
}

fn is_power_of(mut m: usize, p: usize) -> bool {
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

impl GroupTable {
    /// A small generating set for `sub`.
    pub fn subgroup_generators_of(&self, sub: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        for &x in sub.members() {
            if current.order() == sub.order() {
                break;
            }
            if !current.contains(x) {
                gens.push(x);
                current = self.subgroup_generated(&gens);
            }
        }
        gens
    }
}
