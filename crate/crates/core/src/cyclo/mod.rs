//! Exact arithmetic in the cyclotomic integers `Z[zeta_e]`.
//!
//! [`Cyclotomic`] is the canonical (reduced mod `Phi_e`) representation in
//! which equality is coefficient equality. [`RootSum`] is the unreduced form
//! `sum m_j zeta^j` that character values naturally arrive in; bulk sums
//! (orthogonality, norms over a whole table) are accumulated in that form
//! and reduced once.

mod ring;
mod value;

use num_integer::Integer;

pub use ring::{cyclotomic_polynomial, CyclotomicRing};
pub use value::{Coefficient, Cyclotomic};

use crate::error::{Error, Result};
use value::coef;

/// The automorphism `zeta_e -> zeta_e^k` of `Q(zeta_e)`, `gcd(k, e) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaloisMap {
    e: u32,
    k: u32,
}

impl GaloisMap {
    pub fn new(e: u32, k: i64) -> Result<Self> {
        let kr = k.rem_euclid(e as i64) as u32;
        if kr.gcd(&e) != 1 && e != 1 {
            return Err(Error::NonUnitExponent {
                k: k.unsigned_abs(),
                e,
            });
        }
        Ok(Self { e, k: kr })
    }

    /// Complex conjugation.
    pub fn conjugation(e: u32) -> Self {
        Self::new(e, e as i64 - 1).expect("e - 1 is a unit")
    }

    pub fn conductor(&self) -> u32 {
        self.e
    }

    pub fn exponent(&self) -> u32 {
        self.k
    }

    /// `self` followed by `other`: `zeta -> zeta^(k k')`.
    pub fn then(&self, other: &GaloisMap) -> GaloisMap {
        assert_eq!(self.e, other.e, "conductor mismatch");
        let k = (self.k as u64 * other.k as u64 % self.e.max(1) as u64) as u32;
        GaloisMap { e: self.e, k }
    }

    pub fn apply<T: Coefficient>(&self, v: &Cyclotomic<T>) -> Cyclotomic<T> {
        assert_eq!(self.e, v.conductor(), "conductor mismatch");
        v.substitute(self.k as u64)
    }

    /// All Galois maps of conductor `e`.
    pub fn all(e: u32) -> Vec<GaloisMap> {
        CyclotomicRing::get(e)
            .units()
            .into_iter()
            .map(|k| GaloisMap { e, k })
            .collect()
    }
}

/// A formal sum `sum m_j zeta_e^j` before reduction mod `Phi_e`.
///
/// Terms are kept sorted by exponent with nonzero multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootSum {
    e: u32,
    terms: Vec<(u32, i64)>,
}

impl RootSum {
    pub fn new<I: IntoIterator<Item = (i64, i64)>>(e: u32, terms: I) -> Self {
        let mut dense: std::collections::BTreeMap<u32, i64> = Default::default();
        for (j, m) in terms {
            let j = j.rem_euclid(e as i64) as u32;
            *dense.entry(j).or_insert(0) += m;
        }
        Self {
            e,
            terms: dense.into_iter().filter(|&(_, m)| m != 0).collect(),
        }
    }

    pub fn integer(e: u32, n: i64) -> Self {
        Self::new(e, [(0, n)])
    }

    pub fn conductor(&self) -> u32 {
        self.e
    }

    pub fn terms(&self) -> &[(u32, i64)] {
        &self.terms
    }

    /// Value at `zeta = 1`.
    pub fn multiplicity_sum(&self) -> i64 {
        self.terms.iter().map(|&(_, m)| m).sum()
    }

    /// `zeta -> zeta^k`
    pub fn substitute(&self, k: i64) -> Self {
        Self::new(
            self.e,
            self.terms.iter().map(|&(j, m)| (j as i64 * k, m)),
        )
    }

    pub fn conjugate(&self) -> Self {
        self.substitute(-1)
    }

    pub fn mul(&self, other: &RootSum) -> Self {
        assert_eq!(self.e, other.e, "conductor mismatch");
        Self::new(
            self.e,
            self.terms.iter().flat_map(|&(a, m)| {
                other
                    .terms
                    .iter()
                    .map(move |&(b, n)| (a as i64 + b as i64, m * n))
            }),
        )
    }

    /// Adds `scale * self` to a dense exponent-indexed buffer of length `e`.
    pub fn accumulate_into<T: Coefficient>(&self, buf: &mut [T], scale: i64) {
        for &(j, m) in &self.terms {
            let j = j as usize;
            buf[j] = buf[j].clone() + coef::<T>(m * scale);
        }
    }

    pub fn to_cyclotomic<T: Coefficient>(&self) -> Cyclotomic<T> {
        let mut buf = vec![T::zero(); self.e as usize];
        self.accumulate_into(&mut buf, 1);
        Cyclotomic::reduce(&buf, self.e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type C = Cyclotomic<i64>;

    fn from(e: u32, raw: &[i64]) -> C {
        C::reduce(raw, e)
    }

    #[test]
    fn reduce_examples() {
        assert!(from(4, &[1, 0, 1]).is_zero());
        assert!(from(3, &[1, 1, 1]).is_zero());
        // golden-ratio relation for 2cos(2pi/5)
        let t = from(5, &[0, 1, 0, 0, 1]);
        let lhs = &(&t * &t) + &t;
        assert_eq!(lhs, C::one(5));
    }

    #[test]
    fn galois_examples() {
        assert_eq!(C::from_integer(7, 4).conjugate(), C::from_integer(7, 4));
        assert_eq!(C::root_of_unity(3, 1).conjugate(), C::root_of_unity(3, 2));
        let m = GaloisMap::new(5, 2).unwrap();
        let z = C::root_of_unity(5, 1);
        let mut v = z.clone();
        for _ in 0..4 {
            v = m.apply(&v);
        }
        assert_eq!(v, z);
        assert_eq!(m.apply(&z), C::root_of_unity(5, 2));
        assert!(matches!(
            GaloisMap::new(6, 2),
            Err(Error::NonUnitExponent { k: 2, e: 6 })
        ));
        assert_eq!(GaloisMap::conjugation(9).exponent(), 8);
    }

    #[test]
    fn unit_modulus_examples() {
        for k in 0..12 {
            assert!(C::root_of_unity(12, k).is_unit_modulus());
        }
        let v = from(3, &[1, 1]);
        assert!(v.norm_square().is_one());
        assert!(v.is_unit_modulus());
        let two = C::from_integer(5, 2);
        assert_eq!(two.norm_square(), C::from_integer(5, 4));
        assert!(!two.is_unit_modulus());
    }

    #[test]
    fn rational_part_examples() {
        assert_eq!(C::from_integer(6, 5).rational_part_test(), Some(5));
        assert_eq!(C::root_of_unity(3, 1).rational_part_test(), None);
        assert_eq!(from(5, &[0, 1, 1, 1, 1]).rational_part_test(), Some(-1));
    }

    #[test]
    fn display_format() {
        assert_eq!(C::from_integer(12, -3).to_string(), "-3");
        assert_eq!(C::root_of_unity(3, 1).to_string(), "3:[0,1]");
        assert_eq!(C::root_of_unity(3, 2).to_string(), "3:[-1,-1]");
    }

    #[test]
    fn lift_and_divide() {
        let z3 = C::root_of_unity(3, 1);
        assert_eq!(z3.lift(12), C::root_of_unity(12, 4));
        let v = from(6, &[4, 2, 6]);
        assert_eq!(v.div_exact(&2).unwrap(), from(6, &[2, 1, 3]));
        assert_eq!(v.div_exact(&4), Err(Error::InexactDivision));
    }

    #[test]
    fn bigint_agrees_with_i64() {
        let a = Cyclotomic::<BigInt>::reduce(
            &[1, -2, 3, 0, 5, 7].map(BigInt::from),
            12,
        );
        let b = from(12, &[1, -2, 3, 0, 5, 7]);
        let sq_a = &a * &a;
        let sq_b = &b * &b;
        assert_eq!(sq_a.to_string(), sq_b.to_string());
    }

    #[test]
    fn root_sum_matches_canonical() {
        let r = RootSum::new(15, [(1, 2), (4, 1), (16, 1)]);
        assert_eq!(r.terms(), &[(1, 3), (4, 1)]);
        let c: C = r.to_cyclotomic();
        assert_eq!(r.conjugate().to_cyclotomic::<i64>(), c.conjugate());
        assert_eq!(r.mul(&r).to_cyclotomic::<i64>(), &c * &c);
        assert_eq!(r.multiplicity_sum(), 4);
    }

    fn arb(e: u32) -> impl Strategy<Value = C> {
        proptest::collection::vec(-6i64..=6, e as usize).prop_map(move |raw| C::reduce(&raw, e))
    }

    fn arb_triple() -> impl Strategy<Value = (C, C, C)> {
        (1u32..=60).prop_flat_map(|e| (arb(e), arb(e), arb(e)))
    }

    proptest! {
        #[test]
        fn ring_laws((a, b, c) in arb_triple()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn conjugation_properties((a, _b, _c) in arb_triple()) {
            prop_assert_eq!(a.conjugate().conjugate(), a.clone());
            let n = a.norm_square();
            prop_assert_eq!(n.conjugate(), n);
        }

        #[test]
        fn galois_preserves_unit_modulus(e in 1u32..=60, k in 0i64..60) {
            let v = C::root_of_unity(e, k);
            for m in GaloisMap::all(e) {
                prop_assert!(m.apply(&v).norm_square().is_one());
            }
        }

        #[test]
        fn reduction_preserves_complex_value(e in 1u32..=60, raw in proptest::collection::vec(-9i64..=9, 1..=60)) {
            let v = C::reduce(&raw, e);
            let direct = raw.iter().enumerate().fold(num_complex::Complex::new(0.0f64, 0.0), |acc, (j, &c)| {
                let t = std::f64::consts::TAU * j as f64 / e as f64;
                acc + num_complex::Complex::new(t.cos(), t.sin()) * c as f64
            });
            let z = v.to_complex::<f64>();
            prop_assert!((z - direct).norm() < 1e-9);
        }

        #[test]
        fn galois_maps_compose(e in 2u32..=40, i in 0usize..64, j in 0usize..64) {
            let maps = GaloisMap::all(e);
            let a = maps[i % maps.len()];
            let b = maps[j % maps.len()];
            let v = C::root_of_unity(e, 1) + C::from_integer(e, 2);
            prop_assert_eq!(b.apply(&a.apply(&v)), a.then(&b).apply(&v));
        }
    }

    #[test]
    fn single_precision_embedding() {
        let v = from(8, &[0, 1, 0, 1]);
        let z = v.to_complex::<f32>();
        let expected = num_complex::Complex::new(0.0f32, 2.0f32.sqrt());
        assert!((z - expected).norm() < 1e-5);
    }
}
