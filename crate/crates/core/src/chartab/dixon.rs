//! Dixon's modular method: common eigenvectors of the class matrices over a
//! prime field, then lifting of each value to `Z[zeta_e]` through the
//! eigenvalue multiplicities read off the power map.

use std::collections::HashMap;

use super::modp::{choose_prime, Fp};
use crate::cyclo::RootSum;
use crate::error::{Error, Result};
use crate::grp::{ConjClassSet, GroupTable};

/// Class multiplication constants `a_ijk`: the number of ways a fixed
/// element of class `k` is a product `xy` with `x` in class `i`, `y` in class `j`.
#[derive(Clone, Debug)]
pub struct ClassConstants {
    r: usize,
    /// `entries[i][j]` lists `(k, a_ijk)` for the nonzero constants.
    entries: Vec<Vec<Vec<(usize, u64)>>>,
}

impl ClassConstants {
    pub fn len(&self) -> usize {
        self.r
    }

    pub fn is_empty(&self) -> bool {
        self.r == 0
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.entries[i][j]
            .iter()
            .find(|&&(kk, _)| kk == k)
            .map_or(0, |&(_, c)| c)
    }

    pub fn nonzero(&self, i: usize, j: usize) -> &[(usize, u64)] {
        &self.entries[i][j]
    }
}

pub fn class_multiplication_constants(g: &GroupTable, classes: &ConjClassSet) -> ClassConstants {
    let r = classes.len();
    let mut entries = vec![vec![Vec::new(); r]; r];
    for k in 0..r {
        let z = classes.class(k).representative;
        let mut counts: HashMap<(usize, usize), u64> = HashMap::new();
        for x in 0..g.order() {
            let y = g.mul(g.inv(x), z);
            *counts
                .entry((classes.class_of(x), classes.class_of(y)))
                .or_insert(0) += 1;
        }
        for ((i, j), c) in counts {
            entries[i][j].push((k, c));
        }
    }
    for row in entries.iter_mut() {
        for cell in row.iter_mut() {
            cell.sort_unstable();
        }
    }
    ClassConstants { r, entries }
}

/// One irreducible character before sorting: degree and per-class values.
pub(crate) struct RawCharacter {
    pub degree: u64,
    pub values: Vec<RootSum>,
}

pub(crate) struct DixonOutput {
    pub prime: u64,
    pub characters: Vec<RawCharacter>,
}

pub(crate) fn dixon(
    g: &GroupTable,
    classes: &ConjClassSet,
    constants: &ClassConstants,
) -> Result<DixonOutput> {
    let n = g.order() as u64;
    let r = classes.len();
    let e = classes.exponent() as u64;
    let p = choose_prime(e, n);
    let f = Fp { p };
    let sizes: Vec<u64> = classes.sizes().into_iter().map(|s| s as u64).collect();

    let vectors = common_eigenvectors(f, constants, r)?;

    let z = f.pow(f.primitive_root(), (p - 1) / e);
    let mut characters = Vec::with_capacity(r);
    for mut w in vectors {
        let w0 = w[0];
        if w0 == 0 {
            return Err(Error::TableDefect("eigenvector vanishes at the identity class".into()));
        }
        let inv0 = f.inv(w0);
        for x in w.iter_mut() {
            *x = f.mul(*x, inv0);
        }
        // sum_k w_k w_k* / h_k = |G| / chi(1)^2
        let mut s = 0;
        for k in 0..r {
            let t = f.mul(f.mul(w[k], w[classes.inverse_class(k)]), f.inv(sizes[k] % p));
            s = f.add(s, t);
        }
        if s == 0 {
            return Err(Error::TableDefect("degree equation has no solution".into()));
        }
        let d2 = f.mul(n % p, f.inv(s));
        let degree = (1..)
            .take_while(|d: &u64| d * d <= n)
            .find(|d| f.mul(*d % p, *d % p) == d2)
            .ok_or_else(|| Error::TableDefect("no degree matches the modular square".into()))?;
        let chi_mod: Vec<u64> = (0..r)
            .map(|k| f.mul(f.mul(w[k], degree % p), f.inv(sizes[k] % p)))
            .collect();
        let values = (0..r)
            .map(|k| lift_value(f, z, e, classes, k, &chi_mod, degree, g))
            .collect::<Result<Vec<_>>>()?;
        characters.push(RawCharacter { degree, values });
    }
    Ok(DixonOutput {
        prime: p,
        characters,
    })
}

/// Eigenvalue multiplicities of `rho(x)` for `x` in class `k`, recovered
/// from `chi(x^t) mod p` by a discrete Fourier inversion.
#[allow(clippy::too_many_arguments)]
fn lift_value(
    f: Fp,
    z: u64,
    e: u64,
    classes: &ConjClassSet,
    k: usize,
    chi_mod: &[u64],
    degree: u64,
    g: &GroupTable,
) -> Result<RootSum> {
    let o = g.element_order(classes.class(k).representative) as u64;
    let step = e / o;
    let zo = f.pow(z, step); // primitive o-th root
    let zo_inv = f.inv(zo);
    let powers: Vec<u64> = (0..o)
        .map(|t| chi_mod[classes.power_map(k, t as i64)])
        .collect();
    let o_inv = f.inv(o % f.p);
    let mut terms = Vec::new();
    let mut total = 0u64;
    for s in 0..o {
        let base = f.pow(zo_inv, s);
        let mut acc = 0;
        let mut zt = 1;
        for &v in &powers {
            acc = f.add(acc, f.mul(v, zt));
            zt = f.mul(zt, base);
        }
        let m = f.mul(acc, o_inv);
        if m > degree {
            return Err(Error::TableDefect(format!(
                "multiplicity {} exceeds degree {} at class {}",
                m, degree, k
            )));
        }
        if m > 0 {
            terms.push(((s * step) as i64, m as i64));
            total += m;
        }
    }
    if total != degree {
        return Err(Error::TableDefect(format!(
            "multiplicities at class {} sum to {}, expected {}",
            k, total, degree
        )));
    }
    Ok(RootSum::new(e as u32, terms))
}

/// A subspace of `F_p^r` kept in reduced row echelon form.
struct Space {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

/// Splits `F_p^r` into the one-dimensional common eigenspaces of the class
/// matrices `(M_i)_jk = a_ijk`, trying classes in order.
fn common_eigenvectors(f: Fp, constants: &ClassConstants, r: usize) -> Result<Vec<Vec<u64>>> {
    let mut whole: Vec<Vec<u64>> = (0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect();
    let pivots = f.rref(&mut whole);
    let mut open = vec![Space {
        rows: whole,
        pivots,
    }];
    let mut done = Vec::new();
    for i in 1..r {
        if open.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for space in open {
            if space.rows.len() == 1 {
                done.push(space.rows.into_iter().next().expect("one row"));
                continue;
            }
            next.extend(split(f, constants, i, space)?);
        }
        open = next;
    }
    for space in open {
        if space.rows.len() != 1 {
            return Err(Error::TableDefect(format!(
                "common eigenspace of dimension {} did not split",
                space.rows.len()
            )));
        }
        done.push(space.rows.into_iter().next().expect("one row"));
    }
    done.sort();
    Ok(done)
}

fn split(f: Fp, constants: &ClassConstants, i: usize, space: Space) -> Result<Vec<Space>> {
    let d = space.rows.len();
    let apply = |b: &[u64]| -> Vec<u64> {
        (0..constants.len())
            .map(|j| {
                constants.nonzero(i, j).iter().fold(0, |acc, &(k, a)| {
                    f.add(acc, f.mul(a % f.p, b[k]))
                })
            })
            .collect()
    };
    // restriction in the echelon basis: coordinates are the pivot entries
    let images: Vec<Vec<u64>> = space.rows.iter().map(|b| apply(b)).collect();
    let a: Vec<Vec<u64>> = (0..d)
        .map(|row| (0..d).map(|col| images[col][space.pivots[row]]).collect())
        .collect();
    let roots = f.roots(&f.char_poly(&a));
    if roots.len() <= 1 {
        return Ok(vec![space]);
    }
    let mut parts = Vec::with_capacity(roots.len());
    let mut total = 0;
    for lambda in roots {
        let shifted: Vec<Vec<u64>> = a
            .iter()
            .enumerate()
            .map(|(ri, row)| {
                row.iter()
                    .enumerate()
                    .map(|(ci, &x)| if ri == ci { f.sub(x, lambda) } else { x })
                    .collect()
            })
            .collect();
        let coords = f.nullspace(&shifted);
        total += coords.len();
        let mut rows: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                let mut v = vec![0u64; space.rows[0].len()];
                for (l, &cl) in c.iter().enumerate() {
                    if cl != 0 {
                        for (x, &b) in v.iter_mut().zip(&space.rows[l]) {
                            *x = f.add(*x, f.mul(cl, b));
                        }
                    }
                }
                v
            })
            .collect();
        let pivots = f.rref(&mut rows);
        parts.push(Space { rows, pivots });
    }
    if total != d {
        return Err(Error::TableDefect(format!(
            "class matrix {} is not diagonalisable on a {}-dimensional space",
            i, d
        )));
    }
    Ok(parts)
}
