//! Partitions, hook lengths and symmetric-group character values by the
//! Murnaghan–Nakayama rule.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A partition of `n`, parts weakly decreasing and positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{:?} has a zero part", parts)));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{:?} is not nonincreasing", parts)));
        }
        Ok(Self(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    /// Parses `5,2` or `5 2`; the empty string is the empty partition.
    pub fn parse(text: &str) -> Result<Self> {
        let parts = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {:?}", s)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((1..=cols).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// `h[i][j] = arm + leg + 1` for every cell of the Young diagram.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| (row - j) + (conj.0[j] - i) - 1).collect())
            .collect()
    }

    /// Hook length of the cell in row `i`, column `j` (1-based), or 0 when
    /// the cell is outside the diagram.
    pub fn hook(&self, i: usize, j: usize) -> usize {
        if i == 0 || j == 0 || i > self.0.len() || j > self.0[i - 1] {
            return 0;
        }
        self.hook_lengths()[i - 1][j - 1]
    }

    /// Degree `n! / prod hooks`.
    pub fn degree(&self) -> u128 {
        let mut num: u128 = (1..=self.size() as u128).product();
        for h in self.hook_lengths().iter().flatten() {
            num /= *h as u128;
        }
        num
    }

    /// Whether a permutation of this cycle type is even.
    pub fn is_even_cycle_type(&self) -> bool {
        (self.size() - self.len()).is_multiple_of(2)
    }

    /// `(-1)^(n - number of parts)`
    pub fn sign(&self) -> i64 {
        if self.is_even_cycle_type() {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in ascending lexicographic order of parts.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

type MemoKey = (Vec<usize>, Vec<usize>);

thread_local! {
    static MEMO: RefCell<HashMap<MemoKey, i64>> = RefCell::new(HashMap::new());
}

/// `chi^lambda` at a permutation of cycle type `mu`.
pub fn mn_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(mn_rec(&lambda.0, &mu.0))
}

/// Rim hooks are removed on the beta-set `{lambda_i + r - i}`: taking away
/// a hook of length `m` moves one bead from `b` to an empty `b - m`, with
/// sign `(-1)^(beads strictly between)`.
fn mn_rec(lambda: &[usize], mu: &[usize]) -> i64 {
    let Some((&m, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = MEMO.with(|memo| memo.borrow().get(&key).copied()) {
        return v;
    }
    let r = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + r - 1 - i).collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < m || beta.contains(&(b - m)) {
            continue;
        }
        let target = b - m;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (r - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let v = mn_rec(&shape, rest);
        total += if between % 2 == 0 { v } else { -v };
    }
    MEMO.with(|memo| memo.borrow_mut().insert(key, total));
    total
}

/// Checks the rim-hook stripping identity: when `h_{2,1}(gamma) < beta_1`
/// and `gamma_1 - gamma_2 >= beta_1`, the value at `beta` equals the value
/// of `(gamma_1 - beta_1, gamma_2, ..)` at `(beta_2, ..)`. Both sides are
/// computed independently.
pub fn strip_identity_check(gamma: &Partition, beta: &Partition) -> Result<bool> {
    if gamma.size() != beta.size() {
        return Err(Error::SizeMismatch(gamma.size(), beta.size()));
    }
    let b1 = beta.0.first().copied().unwrap_or(0);
    let g1 = gamma.0.first().copied().unwrap_or(0);
    let g2 = gamma.0.get(1).copied().unwrap_or(0);
    if gamma.hook(2, 1) >= b1 || g1 - g2 < b1 {
        return Err(Error::HypothesisNotMet(format!(
            "need h21 < {} and gamma1 - gamma2 >= {} for {} at {}",
            b1, b1, gamma, beta
        )));
    }
    let mut stripped = gamma.0.clone();
    stripped[0] -= b1;
    let stripped = Partition::from_unsorted(stripped);
    let rest = Partition(beta.0[1..].to_vec());
    Ok(mn_value(gamma, beta)? == mn_value(&stripped, &rest)?)
}

/// No hook length divisible by `p`.
pub fn is_p_defect_zero(lambda: &Partition, p: usize) -> bool {
    lambda.hook_lengths().iter().flatten().all(|h| h % p != 0)
}

/// A non-self-conjugate `lambda` with `chi^lambda(alpha)` not `+-1`, for an
/// even cycle type `alpha` of `n >= 6`. The shapes `(n-2,1,1)`, `(n-2,2)` and
/// `(n - alpha_l, 1^alpha_l)` are tried first, then every partition.
pub fn lemma33_witness(alpha: &Partition) -> Result<Partition> {
    let n = alpha.size();
    if n < 6 {
        return Err(Error::NTooSmall(n));
    }
    if !alpha.is_even_cycle_type() {
        return Err(Error::NotEvenCycleType(alpha.to_string()));
    }
    find_witness(alpha)
}

/// The witness search without the size and parity preconditions.
pub fn find_witness(alpha: &Partition) -> Result<Partition> {
    let n = alpha.size();
    if n < 3 {
        return Err(Error::NTooSmall(n));
    }
    let smallest = *alpha.0.last().expect("n >= 6");
    let mut candidates = vec![vec![n - 2, 1, 1], vec![n - 2, 2]];
    if smallest < n {
        let mut hook = vec![n - smallest];
        hook.extend(std::iter::repeat_n(1, smallest));
        candidates.push(hook);
    }
    let candidates = candidates
        .into_iter()
        .filter_map(|c| Partition::new(c).ok())
        .chain(partitions(n));
    for lambda in candidates {
        if lambda.is_self_conjugate() {
            continue;
        }
        let v = mn_value(&lambda, alpha)?;
        if v != 1 && v != -1 {
            return Ok(lambda);
        }
    }
    Err(Error::NoWitness(alpha.to_string()))
}
