use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex;
use num_integer::Integer;
use num_traits::{Float, FloatConst, FromPrimitive, Signed, ToPrimitive};

use super::ring::CyclotomicRing;
use crate::error::{Error, Result};

/// Integer types usable as cyclotomic coefficients.
pub trait Coefficient:
    Clone
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Signed
    + Integer
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Coefficient for T where
    T: Clone
        + Eq
        + Ord
        + Hash
        + fmt::Debug
        + fmt::Display
        + Signed
        + Integer
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

#[inline]
pub(crate) fn coef<T: Coefficient>(v: i64) -> T {
    T::from_i64(v).expect("coefficient fits")
}

/// An element of `Z[zeta_e]` in canonical form: the remainder modulo
/// `Phi_e` in the power basis `1, zeta, .., zeta^(phi(e)-1)`.
#[derive(Clone)]
pub struct Cyclotomic<T> {
    ring: Arc<CyclotomicRing>,
    coeffs: Vec<T>,
}

impl<T: Coefficient> Cyclotomic<T> {
    /// Canonical form of `sum raw[j] zeta_e^j`; exponents are folded mod `e`.
    pub fn reduce(raw: &[T], e: u32) -> Self {
        let ring = CyclotomicRing::get(e);
        let mut coeffs = vec![T::zero(); ring.degree()];
        for (j, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, &r) in ring.power(j).iter().enumerate() {
                if r != 0 {
                    coeffs[i] = coeffs[i].clone() + c.clone() * coef::<T>(r);
                }
            }
        }
        Self { ring, coeffs }
    }

    pub fn zero(e: u32) -> Self {
        let ring = CyclotomicRing::get(e);
        let coeffs = vec![T::zero(); ring.degree()];
        Self { ring, coeffs }
    }

    pub fn from_integer(e: u32, n: T) -> Self {
        let mut v = Self::zero(e);
        v.coeffs[0] = n;
        v
    }

    pub fn one(e: u32) -> Self {
        Self::from_integer(e, T::one())
    }

    /// `zeta_e^k`
    pub fn root_of_unity(e: u32, k: i64) -> Self {
        let ring = CyclotomicRing::get(e);
        let j = k.rem_euclid(e as i64) as usize;
        let coeffs = ring.power(j).iter().map(|&r| coef(r)).collect();
        Self { ring, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.ring.conductor()
    }

    /// Canonical coefficients, length `phi(e)`.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The integer value when the canonical form is constant.
    pub fn as_integer(&self) -> Option<&T> {
        self.coeffs[1..]
            .iter()
            .all(|c| c.is_zero())
            .then(|| &self.coeffs[0])
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.conductor(),
            other.conductor(),
            "conductor mismatch: lift both values to a common conductor first"
        );
    }

    /// Re-expresses the value in `Z[zeta_f]` where `e | f`.
    pub fn lift(&self, f: u32) -> Self {
        let e = self.conductor();
        assert!(f.is_multiple_of(e), "conductor {} does not divide {}", e, f);
        let step = (f / e) as usize;
        let mut raw = vec![T::zero(); f as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * step] = c.clone();
        }
        Self::reduce(&raw, f)
    }

    pub fn scale(&self, k: &T) -> Self {
        Self {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect(),
        }
    }

    /// Division by a nonzero integer when every coefficient is divisible.
    pub fn div_exact(&self, d: &T) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::InexactDivision);
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            coeffs.push(q);
        }
        Ok(Self {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    /// Applies `zeta -> zeta^k` without checking that `k` is a unit.
    pub(crate) fn substitute(&self, k: u64) -> Self {
        let e = self.conductor() as u64;
        let mut raw = vec![T::zero(); e as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let j = ((i as u64 * k) % e) as usize;
                raw[j] = raw[j].clone() + c.clone();
            }
        }
        Self::reduce(&raw, e as u32)
    }

    /// Complex conjugate, `zeta -> zeta^-1`.
    pub fn conjugate(&self) -> Self {
        let e = self.conductor() as u64;
        self.substitute(e - 1)
    }

    /// `v * conjugate(v)`, i.e. `|v|^2` as an element of the ring.
    pub fn norm_square(&self) -> Self {
        self * &self.conjugate()
    }

    /// `|v| = 1`, decided exactly.
    pub fn is_unit_modulus(&self) -> bool {
        self.norm_square().is_one()
    }

    /// The rational integer `n` when `v` is fixed by every Galois map and
    /// equals the constant `n`.
    pub fn rational_part_test(&self) -> Option<T> {
        let n = self.as_integer()?.clone();
        let stable = self
            .ring
            .units()
            .into_iter()
            .all(|k| &self.substitute(k as u64) == self);
        stable.then_some(n)
    }

    /// Evaluates at `zeta_e = exp(2 pi i / e)`. Only for diagnostics.
    pub fn to_complex<F: Float + FloatConst>(&self) -> Complex<F> {
        let e = F::from(self.conductor()).expect("conductor as float");
        let two_pi = F::TAU();
        self.coeffs
            .iter()
            .enumerate()
            .fold(Complex::new(F::zero(), F::zero()), |acc, (i, c)| {
                let theta = two_pi * F::from(i).expect("index") / e;
                let c = F::from(c.to_f64().expect("coefficient as f64")).expect("float");
                acc + Complex::new(theta.cos(), theta.sin()) * c
            })
    }
}

impl<T: Coefficient> PartialEq for Cyclotomic<T> {
    fn eq(&self, other: &Self) -> bool {
        self.conductor() == other.conductor() && self.coeffs == other.coeffs
    }
}

impl<T: Coefficient> Eq for Cyclotomic<T> {}

impl<T: Coefficient> Hash for Cyclotomic<T> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.conductor().hash(state);
        self.coeffs.hash(state);
    }
}

impl<T: Coefficient> PartialOrd for Cyclotomic<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on (conductor, canonical coefficients).
impl<T: Coefficient> Ord for Cyclotomic<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor()
            .cmp(&other.conductor())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl<'a, T: Coefficient> Add<&'a Cyclotomic<T>> for &'a Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn add(self, rhs: &'a Cyclotomic<T>) -> Cyclotomic<T> {
        self.check_same(rhs);
        Cyclotomic {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<'a, T: Coefficient> Sub<&'a Cyclotomic<T>> for &'a Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn sub(self, rhs: &'a Cyclotomic<T>) -> Cyclotomic<T> {
        self.check_same(rhs);
        Cyclotomic {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<'a, T: Coefficient> Mul<&'a Cyclotomic<T>> for &'a Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn mul(self, rhs: &'a Cyclotomic<T>) -> Cyclotomic<T> {
        self.check_same(rhs);
        let e = self.conductor() as usize;
        let mut raw = vec![T::zero(); e];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % e;
                raw[k] = raw[k].clone() + a.clone() * b.clone();
            }
        }
        Cyclotomic::reduce(&raw, e as u32)
    }
}

impl<T: Coefficient> Neg for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coefficient> $tr<Cyclotomic<T>> for Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $m(self, rhs: Cyclotomic<T>) -> Cyclotomic<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coefficient> Neg for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        -&self
    }
}

/// Rational values print as plain integers, others as `e:[c0,c1,...]`.
impl<T: Coefficient> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{}", n);
        }
        write!(f, "{}:[", self.conductor())?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

impl<T: Coefficient> fmt::Debug for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({}:{:?})", self.conductor(), self.coeffs)
    }
}

impl<T: Coefficient> serde::Serialize for Cyclotomic<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
