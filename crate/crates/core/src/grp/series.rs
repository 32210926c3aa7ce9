//! Sylow subgroups, p-cores, the Fitting subgroup, central series,
//! quotients and direct products.

use std::collections::HashSet;

use super::classes::conjugacy_classes;
use super::perm::Permutation;
use super::subgroup::Subgroup;
use super::table::{group_from_generators, GroupTable};
use super::prime_factors;
use crate::error::{Error, Result};

/// `G/N` realised as the action of `G` on the right cosets of `N`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: GroupTable,
    /// Image of each element of `G` in `group`.
    pub projection: Vec<usize>,
}

impl Quotient {
    /// Preimage of a subgroup of the quotient.
    pub fn preimage(&self, sub: &Subgroup) -> Subgroup {
        Subgroup::from_mask(self.projection.iter().map(|&q| sub.contains(q)).collect())
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup::from_mask(self.projection.iter().map(|&q| q == 0).collect())
    }
}

/// Boolean summary of the derived and central structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct StructuralFlags {
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub metabelian: bool,
}

impl GroupTable {
    /// A Sylow p-subgroup, grown one factor of p at a time inside normalizers.
    pub fn sylow_subgroup(&self, p: usize) -> Subgroup {
        let n = self.order();
        let mut target = 1;
        while n.is_multiple_of(target * p) {
            target *= p;
        }
        let mut sylow = self.trivial_subgroup();
        while sylow.order() < target {
            let norm = self.normalizer(&sylow);
            let g = norm
                .members()
                .iter()
                .copied()
                .find(|&g| !sylow.contains(g) && sylow.contains(self.pow(g, p)))
                .expect("a p-subgroup below Sylow order has a p-element in N(P)/P");
            let mut gens = self.subgroup_generators_of(&sylow);
            gens.push(g);
            sylow = self.subgroup_generated(&gens);
        }
        sylow
    }

    /// Intersection of all conjugates of a Sylow p-subgroup.
    pub fn p_core(&self, p: usize) -> Subgroup {
        let sylow = self.sylow_subgroup(p);
        if sylow.is_trivial() {
            return sylow;
        }
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(sylow.members().to_vec());
        let mut queue = vec![sylow.clone()];
        let mut core = sylow;
        let mut head = 0;
        while head < queue.len() {
            let cur = queue[head].clone();
            head += 1;
            for &h in self.generators() {
                let c = self.conjugate_subgroup(&cur, h);
                if seen.insert(c.members().to_vec()) {
                    core = core.intersection(&c);
                    queue.push(c);
                }
            }
        }
        core
    }

    /// Product of the p-cores over the primes dividing the order.
    pub fn fitting(&self) -> Subgroup {
        let mut members: Vec<usize> = Vec::new();
        for p in prime_factors(self.order()) {
            members.extend_from_slice(self.p_core(p).members());
        }
        members.sort_unstable();
        members.dedup();
        self.subgroup_generated_by_set(members)
    }

    /// `Z_1 <= Z_2 <= ...` up to the first repeat; `[trivial]` when the center is trivial.
    pub fn upper_central_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.center()];
        loop {
            let last = series.last().expect("nonempty");
            if last.is_trivial() || last.order() == self.order() {
                break;
            }
            let q = self.quotient(last).expect("terms of the upper central series are normal");
            let next = q.preimage(&q.group.center());
            if next.order() == last.order() {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn hypercenter(&self) -> Subgroup {
        self.upper_central_series().pop().expect("nonempty")
    }

    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient> {
        if !n.is_normal(self) {
            return Err(Error::NotNormal);
        }
        let order = self.order();
        let mut coset_of = vec![usize::MAX; order];
        let mut reps = Vec::new();
        for g in 0..order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for &x in n.members() {
                coset_of[self.mul(x, g)] = c;
            }
        }
        let index = reps.len();
        let action = |x: usize| -> Permutation {
            let images = reps
                .iter()
                .map(|&r| coset_of[self.mul(r, x)] as u32)
                .collect();
            Permutation::new(images).expect("coset action is a bijection")
        };
        let gens: Vec<Permutation> = self.generators().iter().map(|&x| action(x)).collect();
        let group = group_from_generators(index, &gens, index)?;
        let projection = (0..order)
            .map(|x| {
                group
                    .index_of(&action(x))
                    .expect("every coset permutation lies in the quotient")
            })
            .collect();
        Ok(Quotient { group, projection })
    }

    /// `G x H` acting on the disjoint union of the two point sets.
    pub fn direct_product(&self, other: &GroupTable) -> GroupTable {
        let d1 = self.degree();
        let d2 = other.degree();
        let lift = |p: &Permutation, offset: usize| -> Permutation {
            let mut images: Vec<u32> = (0..(d1 + d2) as u32).collect();
            for (i, &j) in p.images().iter().enumerate() {
                images[i + offset] = j + offset as u32;
            }
            Permutation::new(images).expect("shifted permutation")
        };
        let mut gens: Vec<Permutation> = self
            .generators()
            .iter()
            .map(|&g| lift(self.element(g), 0))
            .collect();
        gens.extend(other.generators().iter().map(|&g| lift(other.element(g), d1)));
        group_from_generators(d1 + d2, &gens, self.order() * other.order())
            .expect("direct product has order |G||H|")
    }

    /// Minimal elements among the normal closures of single elements.
    pub fn minimal_normal_subgroups(&self) -> Vec<Subgroup> {
        let classes = conjugacy_classes(self);
        let mut closures: Vec<Subgroup> = Vec::new();
        for cl in classes.classes().iter().skip(1) {
            let nc = self.normal_closure(&[cl.representative]);
            if !closures.contains(&nc) {
                closures.push(nc);
            }
        }
        let mut minimal: Vec<Subgroup> = closures
            .iter()
            .filter(|a| {
                !closures
                    .iter()
                    .any(|b| b.order() < a.order() && b.is_subset_of(a))
            })
            .cloned()
            .collect();
        minimal.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));
        minimal
    }

    /// Derived subgroup of a normal subgroup `sub`.
    pub fn derived_of(&self, sub: &Subgroup) -> Subgroup {
        let gens = self.subgroup_generators_of(sub);
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.commutator(a, b);
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.derived_of(last);
            if next.order() == last.order() {
                break;
            }
            let done = next.is_trivial();
            series.push(next);
            if done {
                break;
            }
        }
        series
    }

    pub fn structural_flags(&self) -> StructuralFlags {
        let abelian = self.is_abelian();
        let derived = self.derived_subgroup();
        StructuralFlags {
            abelian,
            nilpotent: self.whole().is_nilpotent(self),
            solvable: self
                .derived_series()
                .last()
                .map(Subgroup::is_trivial)
                .unwrap_or(true),
            metabelian: derived.is_abelian(self),
        }
    }
}
