use crate::error::{Error, Result};
use crate::grp::prime_power;

/// The finite field with `q = p^k` elements, realised as `F_p[x]/(f)`.
///
/// Elements are encoded as integers `sum c_i p^i` (`c_i` the coefficient
/// of `x^i`), so `0` and `1` are the field's zero and one.
#[derive(Clone, Debug)]
pub struct FqField {
    p: u64,
    k: u32,
    q: usize,
    modulus: Vec<u64>,
    add: Vec<u32>,
    mul: Vec<u32>,
    generator: u32,
}

impl FqField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let modulus = smallest_irreducible(p, k as usize);
        let q = q as usize;
        let decode = |mut a: usize| -> Vec<u64> {
            (0..k)
                .map(|_| {
                    let c = (a as u64) % p;
                    a /= p as usize;
                    c
                })
                .collect()
        };
        let encode = |v: &[u64]| -> u32 { v.iter().rev().fold(0, |acc, &c| acc * p + c) as u32 };
        let polys: Vec<Vec<u64>> = (0..q).map(decode).collect();
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        for a in 0..q {
            for b in 0..q {
                let s: Vec<u64> = polys[a]
                    .iter()
                    .zip(&polys[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * q + b] = encode(&s);
                let prod = poly_mul(&polys[a], &polys[b], p);
                mul[a * q + b] = encode(&poly_rem(&prod, &modulus, p, k as usize));
            }
        }
        let mut field = Self {
            p,
            k,
            q,
            modulus,
            add,
            mul,
            generator: 0,
        };
        field.generator = (1..q as u32)
            .find(|&g| field.multiplicative_order(g) == q - 1)
            .expect("the multiplicative group of a finite field is cyclic");
        Ok(field)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> usize {
        self.q
    }

    /// Monic irreducible modulus, constant term first (length `k + 1`).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Least element generating the multiplicative group.
    pub fn generator(&self) -> u32 {
        self.generator
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn multiplicative_order(&self, a: u32) -> usize {
        if a == 0 {
            return 0;
        }
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder modulo a monic polynomial of degree `k`; result has length `k`.
fn poly_rem(a: &[u64], m: &[u64], p: u64, k: usize) -> Vec<u64> {
    let mut r = a.to_vec();
    for top in (k..r.len()).rev() {
        let c = r[top];
        if c != 0 {
            for (j, &mj) in m.iter().enumerate() {
                let idx = top - k + j;
                r[idx] = (r[idx] + p * p - c * mj % p) % p;
            }
        }
    }
    r.resize(k, 0);
    r
}

/// Monic polynomials of degree `d` over `F_p`, constant first, in
/// lexicographic order of the coefficient sequence.
fn monics(p: u64, d: usize) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(d as u32);
    (0..count).map(move |mut n| {
        let mut coeffs = vec![0u64; d + 1];
        for i in (0..d).rev() {
            coeffs[i] = n % p;
            n /= p;
        }
        coeffs[d] = 1;
        coeffs
    })
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    (1..=k / 2).all(|d| monics(p, d).all(|g| poly_rem(f, &g, p, d).iter().any(|&c| c != 0)))
}

fn smallest_irreducible(p: u64, k: usize) -> Vec<u64> {
    monics(p, k)
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli() {
        assert_eq!(FqField::new(5).unwrap().modulus(), &[0, 1]);
        assert_eq!(FqField::new(4).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FqField::new(9).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FqField::new(8).unwrap().modulus(), &[1, 0, 1, 1]);
        assert_eq!(FqField::new(6).unwrap_err(), Error::NotPrimePower(6));
        assert_eq!(FqField::new(1).unwrap_err(), Error::NotPrimePower(1));
    }

    #[test]
    fn field_axioms() {
        for q in [2u64, 3, 4, 7, 8, 9, 16, 25, 27, 32] {
            let f = FqField::new(q).unwrap();
            let n = q as u32;
            assert_eq!(f.multiplicative_order(f.generator()), q as usize - 1);
            for a in 0..n {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                for b in 0..n {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    if a != 0 && b != 0 {
                        assert_ne!(f.mul(a, b), 0);
                    }
                    for c in [0, 1, n - 1] {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }
}
