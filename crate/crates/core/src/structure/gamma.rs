use std::collections::HashSet;

use serde::Serialize;

use super::field::FqField;
use crate::error::{Error, Result};
use crate::grp::{group_from_generators, GroupTable, Permutation, Subgroup};

/// `AGL(1, q)`: the affine maps `x -> a x + b` of `F_q`, acting on the `q`
/// field elements.
pub fn gamma_q(q: u64) -> Result<GroupTable> {
    let field = FqField::new(q)?;
    if q <= 2 {
        return Err(Error::QTooSmall(q));
    }
    let n = q as u32;
    let translation = Permutation::new((0..n).map(|x| field.add(x, 1)).collect())?;
    let scaling = Permutation::new((0..n).map(|x| field.mul(x, field.generator())).collect())?;
    let bound = (q * (q - 1)) as usize;
    group_from_generators(q as usize, &[translation, scaling], bound)
}

/// The first recognition condition that fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecognitionFailure {
    /// The center is nontrivial.
    NontrivialCenter,
    /// The Fitting subgroup is not the abelian direct product of the minimal
    /// normal subgroups, each elementary abelian.
    FittingNotSocle,
    /// The quotient by the Fitting subgroup is nonabelian or has the wrong order.
    QuotientShape,
    /// Some minimal normal subgroup is not permuted regularly (minus the
    /// identity) by conjugation.
    ActionNotRegular,
}

/// Witness that a centerless group is a direct product of `Gamma_{q_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaDecomposition {
    /// `(V_i, q_i)`, sorted by `q_i` then by members.
    pub factors: Vec<(Subgroup, u64)>,
    pub complement_order: u64,
    /// `V_1 ... V_m`, the Fitting subgroup.
    pub kernel_product: Subgroup,
}

impl GammaDecomposition {
    /// The sorted multiset of `q_i`.
    pub fn qs(&self) -> Vec<u64> {
        self.factors.iter().map(|&(_, q)| q).collect()
    }

    /// Elements of the kernel product with every coordinate nontrivial.
    pub fn all_coordinates_nontrivial(&self, g: &GroupTable) -> Vec<usize> {
        let mut acc = vec![0usize];
        for (v, _) in &self.factors {
            let mut next = Vec::with_capacity(acc.len() * (v.order() - 1));
            for &a in &acc {
                for &x in &v.members()[1..] {
                    next.push(g.mul(a, x));
                }
            }
            acc = next;
        }
        acc.sort_unstable();
        acc
    }
}

pub fn recognize_gamma_product(h: &GroupTable) -> Option<GammaDecomposition> {
    recognize_detailed(h).ok()
}

/// Recognition with the reason for failure.
pub fn recognize_detailed(h: &GroupTable) -> std::result::Result<GammaDecomposition, RecognitionFailure> {
    if h.order() == 1 {
        // the empty product
        return Ok(GammaDecomposition {
            factors: Vec::new(),
            complement_order: 1,
            kernel_product: h.trivial_subgroup(),
        });
    }
    if !h.center().is_trivial() {
        return Err(RecognitionFailure::NontrivialCenter);
    }
    let f = h.fitting();
    if f.is_trivial() || !f.is_abelian(h) {
        return Err(RecognitionFailure::FittingNotSocle);
    }
    let minimal = h.minimal_normal_subgroups();
    let mut product = 1usize;
    let mut factors = Vec::with_capacity(minimal.len());
    for v in &minimal {
        if v.elementary_abelian_prime(h).is_none() || !v.is_subset_of(&f) {
            return Err(RecognitionFailure::FittingNotSocle);
        }
        product *= v.order();
        factors.push((v.clone(), v.order() as u64));
    }
    let socle = minimal
        .iter()
        .fold(h.trivial_subgroup(), |acc, v| h.product(&acc, v));
    if product != f.order() || socle != f {
        return Err(RecognitionFailure::FittingNotSocle);
    }

    let complement_order: u64 = factors.iter().map(|&(_, q)| q - 1).product();
    let quotient = h.quotient(&f).expect("the Fitting subgroup is normal");
    if !quotient.group.is_abelian() || quotient.group.order() as u64 != complement_order {
        return Err(RecognitionFailure::QuotientShape);
    }

    for (v, q) in &factors {
        // conjugation orbit of one nonidentity element, and the kernel of
        // the action; the image has order |H| / |kernel|
        let x = v.members()[1];
        let orbit: HashSet<usize> = (0..h.order()).map(|g| h.conj(x, g)).collect();
        if orbit.len() as u64 != q - 1 {
            return Err(RecognitionFailure::ActionNotRegular);
        }
        let kernel = (0..h.order())
            .filter(|&g| v.members().iter().all(|&y| h.conj(y, g) == y))
            .count();
        if (h.order() / kernel) as u64 != q - 1 {
            return Err(RecognitionFailure::ActionNotRegular);
        }
    }

    factors.sort_by(|a, b| (a.1, a.0.members()).cmp(&(b.1, b.0.members())));
    Ok(GammaDecomposition {
        factors,
        complement_order,
        kernel_product: f,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::brute_force_isomorphic;

    fn grp(degree: usize, gens: &[&str]) -> GroupTable {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(degree, s).unwrap())
            .collect();
        group_from_generators(degree, &gens, 10_000).unwrap()
    }

    #[test]
    fn gamma_orders_and_frobenius() {
        for q in [3u64, 4, 5, 7, 8, 9, 11, 13, 16] {
            let g = gamma_q(q).unwrap();
            assert_eq!(g.order() as u64, q * (q - 1));
            // only the identity fixes two points
            for x in 1..g.order() {
                let fixed = g.element(x).images().iter().enumerate().filter(|(i, &j)| *i as u32 == j).count();
                assert!(fixed <= 1);
            }
        }
        assert_eq!(gamma_q(2).unwrap_err(), Error::QTooSmall(2));
        assert_eq!(gamma_q(12).unwrap_err(), Error::NotPrimePower(12));
    }

    #[test]
    fn gamma_small_cases() {
        let g3 = gamma_q(3).unwrap();
        let s3 = grp(3, &["(0 1 2)", "(0 1)"]);
        assert!(brute_force_isomorphic(&g3, &s3).unwrap());
        let g4 = gamma_q(4).unwrap();
        let a4 = grp(4, &["(0 1 2)", "(0 1)(2 3)"]);
        assert!(brute_force_isomorphic(&g4, &a4).unwrap());
        let g5 = gamma_q(5).unwrap();
        let f = g5.fitting();
        assert_eq!(f.order(), 5);
        let quo = g5.quotient(&f).unwrap().group;
        assert_eq!(quo.order(), 4);
        assert!(quo.element_orders().contains(&4));
    }

    #[test]
    fn round_trip() {
        for q in [3u64, 4, 5, 7, 8, 9, 11, 16] {
            let d = recognize_gamma_product(&gamma_q(q).unwrap()).unwrap();
            assert_eq!(d.qs(), vec![q]);
            assert_eq!(d.complement_order, q - 1);
        }
    }

    #[test]
    fn products_and_failures() {
        let p = gamma_q(3).unwrap().direct_product(&gamma_q(5).unwrap());
        let d = recognize_gamma_product(&p).unwrap();
        assert_eq!(d.qs(), vec![3, 5]);
        let p33 = gamma_q(3).unwrap().direct_product(&gamma_q(3).unwrap());
        let d = recognize_gamma_product(&p33).unwrap();
        assert_eq!(d.all_coordinates_nontrivial(&p33).len(), 4);

        let q8 = grp(8, &["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"]);
        assert_eq!(recognize_detailed(&q8), Err(RecognitionFailure::NontrivialCenter));
        let s4 = grp(4, &["(0 1 2 3)", "(0 1)"]);
        assert_eq!(recognize_detailed(&s4), Err(RecognitionFailure::QuotientShape));
        let a5 = grp(5, &["(0 1 2 3 4)", "(0 1 2)"]);
        assert_eq!(recognize_detailed(&a5), Err(RecognitionFailure::FittingNotSocle));
        // F_5^2 with scalar multiplications: too many minimal normal subgroups
        let scal = grp(25, &[
            "(0 1 2 3 4)(5 6 7 8 9)(10 11 12 13 14)(15 16 17 18 19)(20 21 22 23 24)",
            "(0 5 10 15 20)(1 6 11 16 21)(2 7 12 17 22)(3 8 13 18 23)(4 9 14 19 24)",
            "(1 2 4 3)(5 10 20 15)(6 12 24 18)(7 14 23 16)(8 11 22 19)(9 13 21 17)",
        ]);
        assert_eq!(scal.order(), 100);
        assert!(recognize_gamma_product(&scal).is_none());
    }
}
