use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;

/// Precomputed data for `Z[x]/(Phi_e)`: the cyclotomic polynomial and the
/// canonical residues of `x^j` for `0 <= j < e`.
#[derive(Debug)]
pub struct CyclotomicRing {
    conductor: u32,
    phi: usize,
    modulus: Vec<i64>,
    powers: Vec<Vec<i64>>,
}

impl PartialEq for CyclotomicRing {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}

impl Eq for CyclotomicRing {}

impl CyclotomicRing {
    /// Shared ring for conductor `e`, built on first use.
    pub fn get(e: u32) -> Arc<CyclotomicRing> {
        assert!(e >= 1, "conductor must be positive");
        static RINGS: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicRing>>>> = OnceLock::new();
        let rings = RINGS.get_or_init(Default::default);
        if let Some(r) = rings.lock().expect("ring cache").get(&e) {
            return r.clone();
        }
        let ring = Arc::new(Self::build(e));
        rings
            .lock()
            .expect("ring cache")
            .entry(e)
            .or_insert(ring)
            .clone()
    }

    fn build(e: u32) -> Self {
        let modulus = cyclotomic_polynomial(e);
        let phi = modulus.len() - 1;
        let mut powers = Vec::with_capacity(e as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..e {
            powers.push(cur.clone());
            // multiply by x and fold the x^phi term back with the monic modulus
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] = cur[i]
                        .checked_sub(top.checked_mul(modulus[i]).expect("residue overflow"))
                        .expect("residue overflow");
                }
            }
        }
        Self {
            conductor: e,
            phi,
            modulus,
            powers,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Degree of `Phi_e`, i.e. Euler's totient of the conductor.
    pub fn degree(&self) -> usize {
        self.phi
    }

    /// Coefficients of `Phi_e`, constant term first.
    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    /// Canonical residue of `x^j` (`j` taken mod `e`).
    pub fn power(&self, j: usize) -> &[i64] {
        &self.powers[j % self.conductor as usize]
    }

    /// Canonical form of `sum raw[j] x^j` with wide coefficients; `None` on
    /// overflow. Used by bulk checks that accumulate many products first.
    pub fn reduce_wide(&self, raw: &[i128]) -> Option<Vec<i128>> {
        let mut out = vec![0i128; self.phi];
        for (j, &c) in raw.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(self.power(j)) {
                if r != 0 {
                    *o = o.checked_add(c.checked_mul(r as i128)?)?;
                }
            }
        }
        Some(out)
    }

    /// Exponents `k` in `1..e` coprime to `e`.
    pub fn units(&self) -> Vec<u32> {
        (1..=self.conductor)
            .filter(|k| k.gcd(&self.conductor) == 1)
            .map(|k| k % self.conductor)
            .collect()
    }
}

/// `Phi_n`, constant term first, computed by exact division of `x^n - 1`
/// by `Phi_d` for each proper divisor `d`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    static POLYS: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let polys = POLYS.get_or_init(Default::default);
    if let Some(p) = polys.lock().expect("poly cache").get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    polys.lock().expect("poly cache").insert(n, num.clone());
    num
}

/// Exact quotient of `a` by the monic polynomial `b`.
fn div_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let dq = a.len() - 1 - db;
    let mut q = vec![0i64; dq + 1];
    for i in (0..=dq).rev() {
        let c = rem[i + db];
        q[i] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                rem[i + j] -= c * bj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // first cyclotomic polynomial with a coefficient of absolute value 2
        let p105 = cyclotomic_polynomial(105);
        assert_eq!(p105.len(), 49);
        assert!(p105.contains(&-2));
    }

    #[test]
    fn residues_close_up() {
        for e in [1u32, 2, 5, 12, 60] {
            let r = CyclotomicRing::get(e);
            assert_eq!(r.power(0)[0], 1);
            assert_eq!(r.power(e as usize), r.power(0));
        }
        assert_eq!(CyclotomicRing::get(60).degree(), 16);
        assert_eq!(CyclotomicRing::get(12).units(), vec![1, 5, 7, 11]);
        assert_eq!(CyclotomicRing::get(1).units(), vec![0]);
        let r = CyclotomicRing::get(3);
        assert_eq!(r.reduce_wide(&[5, 5, 5]), Some(vec![0, 0]));
        assert_eq!(r.reduce_wide(&[1, 0, 2]), Some(vec![-1, -2]));
    }
}
