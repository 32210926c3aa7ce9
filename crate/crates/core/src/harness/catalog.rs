use std::fmt;
use std::path::PathBuf;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grp::{group_from_generators, is_prime, prime_power, read_group_file, GroupTable, Permutation};
use crate::structure::gamma_q;

/// How a catalog group is built. Dihedral and dicyclic groups are named by
/// their order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    Gamma(u64),
    Elementary { p: usize, k: u32 },
    Product(Vec<Construction>),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    #[serde(skip)]
    pub construction: Construction,
}

impl CatalogEntry {
    pub fn new(construction: Construction) -> Self {
        Self {
            name: construction.to_string(),
            construction,
        }
    }

    fn named(name: &str, construction: Construction) -> Self {
        Self {
            name: name.to_string(),
            construction,
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Cyclic(n) => write!(f, "cyclic:{}", n),
            Construction::Dihedral(n) => write!(f, "dihedral:{}", n),
            Construction::Dicyclic(n) => write!(f, "dicyclic:{}", n),
            Construction::Symmetric(n) => write!(f, "symmetric:{}", n),
            Construction::Alternating(n) => write!(f, "alternating:{}", n),
            Construction::Gamma(q) => write!(f, "gamma:{}", q),
            Construction::Elementary { p, k } => write!(f, "elementary:{}^{}", p, k),
            Construction::Product(parts) => {
                for (i, c) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    write!(f, "{}", c)?;
                }
                Ok(())
            }
            Construction::File(p) => write!(f, "@{}", p.display()),
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl Construction {
    /// Order predicted by the construction formula; `None` for files.
    pub fn expected_order(&self) -> Option<usize> {
        Some(match self {
            Construction::Cyclic(n)
            | Construction::Dihedral(n)
            | Construction::Dicyclic(n) => *n,
            Construction::Symmetric(n) => factorial(*n),
            Construction::Alternating(n) => factorial(*n).div_ceil(2).max(1),
            Construction::Gamma(q) => (q * (q - 1)) as usize,
            Construction::Elementary { p, k } => p.pow(*k),
            Construction::Product(parts) => {
                let mut n = 1usize;
                for c in parts {
                    n *= c.expected_order()?;
                }
                n
            }
            Construction::File(_) => return None,
        })
    }

    pub fn build(&self, bound: usize) -> Result<GroupTable> {
        if let Some(n) = self.expected_order() {
            if n > bound {
                return Err(Error::EnumerationBoundExceeded { bound });
            }
        }
        let g = match self {
            Construction::Cyclic(n) => {
                let n = (*n).max(1);
                perm_group(n, &[(0..n).map(|i| ((i + 1) % n) as u32).collect()], bound)?
            }
            Construction::Dihedral(n) => dihedral(*n, bound)?,
            Construction::Dicyclic(n) => dicyclic(*n, bound)?,
            Construction::Symmetric(n) => symmetric(*n, bound)?,
            Construction::Alternating(n) => alternating(*n, bound)?,
            Construction::Gamma(q) => gamma_q(*q)?,
            Construction::Elementary { p, k } => {
                if !is_prime(*p as u64) {
                    return Err(Error::BadGroupSpec(format!("{} is not prime", p)));
                }
                let cp = Construction::Cyclic(*p).build(bound)?;
                let mut g = GroupTable::trivial();
                for _ in 0..*k {
                    g = g.direct_product(&cp);
                }
                g
            }
            Construction::Product(parts) => {
                let mut g = GroupTable::trivial();
                for c in parts {
                    let h = c.build(bound)?;
                    if g.order() * h.order() > bound {
                        return Err(Error::EnumerationBoundExceeded { bound });
                    }
                    g = g.direct_product(&h);
                }
                g
            }
            Construction::File(path) => read_group_file(path, bound)?,
        };
        if let Some(n) = self.expected_order() {
            if g.order() != n {
                return Err(Error::OrderMismatch(g.order(), n));
            }
        }
        Ok(g)
    }
}

fn perm_group(degree: usize, gens: &[Vec<u32>], bound: usize) -> Result<GroupTable> {
    let gens = gens
        .iter()
        .map(|im| Permutation::new(im.clone()))
        .collect::<Result<Vec<_>>>()?;
    group_from_generators(degree, &gens, bound)
}

/// Dihedral group of order `n`: the symmetries of an `n/2`-gon, or the
/// regular representation for orders 2 and 4.
fn dihedral(n: usize, bound: usize) -> Result<GroupTable> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::BadGroupSpec(format!("dihedral order {} must be even", n)));
    }
    let m = n / 2;
    if m < 3 {
        return Construction::Elementary { p: 2, k: m as u32 }.build(bound);
    }
    let r = (0..m).map(|i| ((i + 1) % m) as u32).collect();
    let s = (0..m).map(|i| ((m - i) % m) as u32).collect();
    perm_group(m, &[r, s], bound)
}

/// Dicyclic group of order `n = 4m`: `<a, b | a^(2m), b^2 = a^m, a^b = a^-1>`,
/// in its right regular representation on the words `a^i b^j`.
fn dicyclic(n: usize, bound: usize) -> Result<GroupTable> {
    if n < 8 || !n.is_multiple_of(4) {
        return Err(Error::BadGroupSpec(format!(
            "dicyclic order {} must be a multiple of 4, at least 8",
            n
        )));
    }
    let h = n / 2;
    let m = n / 4;
    let idx = |i: usize, j: usize| (i % h + h * j) as u32;
    let a = (0..n)
        .map(|x| {
            let (i, j) = (x % h, x / h);
            if j == 0 {
                idx(i + 1, 0)
            } else {
                idx(i + h - 1, 1)
            }
        })
        .collect();
    let b = (0..n)
        .map(|x| {
            let (i, j) = (x % h, x / h);
            if j == 0 {
                idx(i, 1)
            } else {
                idx(i + m, 0)
            }
        })
        .collect();
    perm_group(n, &[a, b], bound)
}

fn symmetric(n: usize, bound: usize) -> Result<GroupTable> {
    if n < 2 {
        return Ok(GroupTable::trivial());
    }
    let cycle = (0..n).map(|i| ((i + 1) % n) as u32).collect();
    let mut swap: Vec<u32> = (0..n as u32).collect();
    swap.swap(0, 1);
    perm_group(n, &[cycle, swap], bound)
}

fn alternating(n: usize, bound: usize) -> Result<GroupTable> {
    if n < 3 {
        return Ok(GroupTable::trivial());
    }
    let gens: Vec<Vec<u32>> = (2..n)
        .map(|k| {
            let mut im: Vec<u32> = (0..n as u32).collect();
            im[0] = 1;
            im[1] = k as u32;
            im[k] = 0;
            im
        })
        .collect();
    perm_group(n, &gens, bound)
}

/// Parses `cyclic:12`, `dihedral:8`, `dicyclic:12`, `quaternion`,
/// `symmetric:4`, `alternating:5`, `gamma:9`, `elementary:2^3`, products
/// joined by `*`, or `@path` for a group file.
pub fn parse_group_spec(spec: &str) -> Result<Construction> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix('@') {
        return Ok(Construction::File(PathBuf::from(path)));
    }
    let parts: Vec<&str> = spec.split('*').map(str::trim).collect();
    if parts.len() > 1 {
        return Ok(Construction::Product(
            parts.into_iter().map(parse_factor).collect::<Result<_>>()?,
        ));
    }
    parse_factor(spec)
}

fn parse_factor(s: &str) -> Result<Construction> {
    let bad = || Error::BadGroupSpec(s.to_string());
    if s == "quaternion" {
        return Ok(Construction::Dicyclic(8));
    }
    if s == "trivial" {
        return Ok(Construction::Cyclic(1));
    }
    let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    Ok(match kind.trim() {
        "cyclic" => Construction::Cyclic(num(arg)?.max(1)),
        "dihedral" => Construction::Dihedral(num(arg)?),
        "dicyclic" => Construction::Dicyclic(num(arg)?),
        "symmetric" => Construction::Symmetric(num(arg)?),
        "alternating" => Construction::Alternating(num(arg)?),
        "gamma" => Construction::Gamma(num(arg)? as u64),
        "elementary" => {
            let (p, k) = match arg.split_once('^') {
                Some((p, k)) => (num(p)?, num(k)? as u32),
                None => (num(arg)?, 1),
            };
            let q = p.pow(k) as u64;
            match prime_power(q) {
                Some((pp, _)) if pp as usize == p => Construction::Elementary { p, k },
                _ => return Err(bad()),
            }
        }
        _ => return Err(bad()),
    })
}

fn prime_powers(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&q| prime_power(q).is_some()).collect()
}

/// Deterministic desk-scale catalog of groups of order at most `max_order`.
pub fn build_catalog(max_order: usize) -> Vec<CatalogEntry> {
    use Construction::*;
    let mut out: Vec<CatalogEntry> = Vec::new();
    let push = |c: Construction, out: &mut Vec<CatalogEntry>| {
        if c.expected_order().is_some_and(|n| n <= max_order) {
            out.push(CatalogEntry::new(c));
        }
    };

    for n in 1..=max_order {
        push(Cyclic(n), &mut out);
    }
    for n in (6..=max_order).step_by(2) {
        push(Dihedral(n), &mut out);
    }
    if max_order >= 8 {
        out.push(CatalogEntry::named("quaternion", Dicyclic(8)));
    }
    for n in (12..=max_order).step_by(4) {
        push(Dicyclic(n), &mut out);
    }
    for n in 3..=8 {
        push(Symmetric(n), &mut out);
    }
    for n in 4..=8 {
        push(Alternating(n), &mut out);
    }

    let gammas: Vec<u64> = prime_powers(32)
        .into_iter()
        .filter(|&q| q > 2 && (q * (q - 1)) as usize <= max_order)
        .collect();
    for &q in &gammas {
        push(Gamma(q), &mut out);
    }

    let mut elementary = Vec::new();
    for p in (2..=max_order).filter(|&p| is_prime(p as u64)) {
        let mut k = 2;
        while p.pow(k) <= max_order {
            elementary.push(Elementary { p, k });
            k += 1;
        }
    }
    for e in &elementary {
        push(e.clone(), &mut out);
    }

    // noncyclic abelian groups C_a x C_b with a | b
    for a in 2..=max_order {
        for b in (a..=max_order / a).filter(|b| b % a == 0) {
            if a == b && is_prime(a as u64) {
                continue; // already elementary
            }
            push(Product(vec![Cyclic(a), Cyclic(b)]), &mut out);
        }
    }

    for (i, &q) in gammas.iter().enumerate() {
        for &r in &gammas[i..] {
            push(Product(vec![Gamma(q), Gamma(r)]), &mut out);
        }
    }
    for &q in &gammas {
        for n in 2..=max_order {
            push(Product(vec![Gamma(q), Cyclic(n)]), &mut out);
        }
        for e in &elementary {
            push(Product(vec![Gamma(q), e.clone()]), &mut out);
        }
    }
    // near misses built from small nonabelian factors
    push(Product(vec![Symmetric(4), Cyclic(2)]), &mut out);
    push(Product(vec![Dicyclic(8), Cyclic(3)]), &mut out);
    push(Product(vec![Dihedral(8), Cyclic(3)]), &mut out);
    push(Product(vec![Dicyclic(12), Cyclic(2)]), &mut out);
    push(Product(vec![Dicyclic(12), Cyclic(3)]), &mut out);
    push(Product(vec![Dicyclic(12), Gamma(3)]), &mut out);
    if max_order >= 720 {
        push(Symmetric(6), &mut out);
    }

    let mut seen = std::collections::HashSet::new();
    out.retain(|e| seen.insert(e.name.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::brute_force_isomorphic;

    #[test]
    fn parse_round_trip() {
        for s in [
            "cyclic:12",
            "dihedral:8",
            "dicyclic:12",
            "symmetric:4",
            "alternating:5",
            "gamma:9",
            "elementary:2^3",
            "gamma:3*cyclic:4",
        ] {
            assert_eq!(parse_group_spec(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_group_spec("quaternion").unwrap(), Construction::Dicyclic(8));
        assert!(parse_group_spec("elementary:6^2").is_err());
        assert!(parse_group_spec("nonsense").is_err());
    }

    #[test]
    fn orders_match_formulas() {
        for e in build_catalog(60) {
            let g = e.construction.build(100_000).unwrap();
            assert_eq!(Some(g.order()), e.construction.expected_order(), "{}", e.name);
        }
    }

    #[test]
    fn small_catalogs() {
        let names: Vec<String> = build_catalog(1).into_iter().map(|e| e.name).collect();
        assert_eq!(names, vec!["cyclic:1"]);
        let names: Vec<String> = build_catalog(60).into_iter().map(|e| e.name).collect();
        for want in ["symmetric:3", "alternating:4", "gamma:4", "gamma:5", "dicyclic:12", "alternating:5"] {
            assert!(names.iter().any(|n| n == want), "{}", want);
        }
        let names: Vec<String> = build_catalog(240).into_iter().map(|e| e.name).collect();
        assert!(names.iter().any(|n| n == "gamma:3*gamma:4"));
        assert!(names.iter().any(|n| n == "gamma:3*cyclic:4"));
        assert!(build_catalog(120).len() >= 40);
    }

    #[test]
    fn named_constructions() {
        let q8 = Construction::Dicyclic(8).build(100).unwrap();
        let d8 = Construction::Dihedral(8).build(100).unwrap();
        assert!(!brute_force_isomorphic(&q8, &d8).unwrap());
        assert_eq!(q8.center().order(), 2);
        assert_eq!(q8.element_orders().iter().filter(|&&o| o == 4).count(), 6);
        let dic12 = Construction::Dicyclic(12).build(100).unwrap();
        let s3 = Construction::Symmetric(3).build(100).unwrap();
        let z = dic12.center();
        assert_eq!(z.order(), 2);
        assert!(brute_force_isomorphic(&dic12.quotient(&z).unwrap().group, &s3).unwrap());
        assert_eq!(Construction::Alternating(5).build(100).unwrap().order(), 60);
        assert!(matches!(
            Construction::Symmetric(8).build(20_000),
            Err(Error::EnumerationBoundExceeded { .. })
        ));
    }
}
