//! Prime-field arithmetic and the small amount of linear algebra the
//! eigenspace splitting needs.

use crate::grp::{is_prime, prime_factors};

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero mod {}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    /// Least generator of the multiplicative group.
    pub fn primitive_root(self) -> u64 {
        let n = self.p - 1;
        let qs = prime_factors(n as usize);
        (2..self.p)
            .find(|&g| qs.iter().all(|&q| self.pow(g, n / q as u64) != 1))
            .unwrap_or(1)
    }

    /// Horner evaluation; coefficients constant-first.
    pub fn eval(self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Distinct roots in `F_p`, by exhaustive evaluation.
    pub fn roots(self, poly: &[u64]) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(poly, x) == 0).collect()
    }

    /// Characteristic polynomial `det(xI - A)`, constant-first, via reduction
    /// to upper Hessenberg form.
    pub fn char_poly(self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h: Vec<Vec<u64>> = a.to_vec();
        for m in 1..n.saturating_sub(1) {
            let pivot = (m..n).find(|&i| h[i][m - 1] != 0);
            let Some(i) = pivot else { continue };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let inv = self.inv(h[m][m - 1]);
            for i in m + 1..n {
                let u = self.mul(h[i][m - 1], inv);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let t = self.mul(u, h[m][j]);
                    h[i][j] = self.sub(h[i][j], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[i]);
                    row[m] = self.add(row[m], t);
                }
            }
        }
        // p_k(x) = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod sub-diagonal) p_{k-i-1}
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let prev = &polys[k];
            let mut next = vec![0u64; k + 2];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                let t = self.mul(c, h[k][k]);
                next[d] = self.sub(next[d], t);
            }
            let mut prod = 1u64;
            for i in 1..=k {
                prod = self.mul(prod, h[k - i + 1][k - i]);
                if prod == 0 {
                    break;
                }
                let coef = self.mul(h[k - i][k], prod);
                if coef == 0 {
                    continue;
                }
                for (d, &c) in polys[k - i].iter().enumerate() {
                    let t = self.mul(coef, c);
                    next[d] = self.sub(next[d], t);
                }
            }
            polys.push(next);
        }
        polys.pop().expect("nonempty")
    }

    /// Row-reduces in place; returns the pivot columns.
    pub fn rref(self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, i);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for j in c..ncols {
                        let t = self.mul(f, rows[r][j]);
                        rows[i][j] = self.sub(rows[i][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of `{v : A v = 0}` for a square matrix.
    pub fn nullspace(self, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = a.first().map_or(0, Vec::len);
        let mut rows = a.to_vec();
        let pivots = self.rref(&mut rows);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; n];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.sub(0, rows[r][f]);
                }
                v
            })
            .collect()
    }
}

/// Least prime `p` with `p = 1 (mod e)` and `p > 2 sqrt(order)`.
pub fn choose_prime(e: u64, order: u64) -> u64 {
    let mut p = e + 1;
    loop {
        if p * p > 4 * order && is_prime(p) {
            return p;
        }
        p += e;
    }
}
