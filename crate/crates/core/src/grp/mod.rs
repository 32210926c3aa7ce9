//! Explicitly enumerated permutation groups and their characteristic subgroups.

mod classes;
mod file;
mod iso;
mod perm;
mod series;
mod subgroup;
mod table;

pub use classes::{conjugacy_classes, ConjClass, ConjClassSet};
pub use file::{parse_group_file, read_group_file};
pub use iso::{brute_force_isomorphic, ORACLE_LIMIT};
pub use perm::Permutation;
pub use series::{Quotient, StructuralFlags};
pub use subgroup::Subgroup;
pub use table::{enumeration_bound, group_from_generators, GroupTable, DEFAULT_BOUND};

/// Distinct prime divisors of `n`, ascending.
pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, k))` when `q = p^k` with `k >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut k = 0;
    let mut m = q;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}
