use std::cell::OnceCell;
use std::collections::HashSet;

use num_bigint::BigInt;

use super::report::{BoundaryNote, CheckOutcome};
use crate::chartab::{character_table, verify_vanishing_outside, CharacterTable};
use crate::error::Result;
use crate::grp::{brute_force_isomorphic, prime_factors, prime_power, GroupTable, Quotient, Subgroup, ORACLE_LIMIT};
use crate::structure::{
    gamma_q, recognize_gamma_product, theorem_b_classify, ClassificationResult, Verdict,
};
use crate::symchar::{lemma33_witness, mn_value, partitions, strip_identity_check, Partition};

pub(crate) const ORTHOGONALITY: &[&str] = &[
    "irreducible characters are orthonormal",
    "columns are orthogonal with norms equal to centralizer orders",
    "squared degrees sum to the group order",
    "characters and classes are equal in number",
    "the set of characters is closed under Galois conjugation",
    "class sizes times centralizer orders equal the group order",
];
pub(crate) const LEMMA21: &[&str] = &["a unit-modulus value chi(g) forces chi(1) to divide |g^G|"];
pub(crate) const LEMMA22: &[&str] = &[
    "a root-of-unity element x has |C(x)| = k(G)",
    "cp(G) = 1/|x^G| for a root-of-unity element x",
    "G' lies in the normal closure of a root-of-unity element",
    "root-of-unity elements stay root-of-unity in central quotients",
    "central translates of root-of-unity elements are root-of-unity elements",
];
pub(crate) const LEMMA23: &[&str] = &[
    "nonvanishing x has |C(x)| >= k(G), with equality exactly for root-of-unity x",
    "classes meeting the class count without being root-of-unity are vanishing",
];
pub(crate) const THEOREM_A: &[&str] = &[
    "a group with a root-of-unity element is abelian or metabelian",
    "root-of-unity elements lie in F(G)",
    "F(G) is abelian when a root-of-unity element exists",
    "G/F(G) is abelian when a root-of-unity element exists",
    "a centerless metabelian group has a root-of-unity element exactly when it is a product of affine groups",
    "in a centerless affine product F(G) = socle = G' = normal closure of x = C(x)",
    "F(G/N) = F(G)/N for central N",
];
pub(crate) const LEMMA32: &[&str] = &[
    "every element outside a unique nonabelian minimal normal subgroup with solvable quotient is vanishing",
];
pub(crate) const LEMMA33: &[&str] = &[
    "every even cycle type with 6 <= n <= 13 has a non-self-conjugate witness with value outside {-1, 1}",
    "chi^(5,2) vanishes at cycle type (4,3)",
    "chi^(n-2,2) vanishes on an n-cycle for 6 <= n <= 13",
    "the rim-hook stripping identity holds wherever its hypotheses do, n <= 12",
];
pub(crate) const LEMMA41: &[&str] = &[
    "G/Z is a product of affine groups and F(G) = G'Z is abelian",
    "C(xZ) and F(G/Z) both pull back to F(G)",
    "F(G) = C(x) and k(G) = |F(G)|",
    "for central N, k(G/N) = |F(G):N| and C(xN), F(G/N) pull back to F(G)",
];
pub(crate) const PROP42: &[&str] =
    &["a group with a root-of-unity element is solvable with abelian Sylow subgroups"];
pub(crate) const COR43: &[&str] = &[
    "a group with a root-of-unity element has hypercenter equal to its center",
    "G' meets Z(G) trivially when a root-of-unity element exists",
];
pub(crate) const THEOREM_B: &[&str] = &[
    "character-side root-of-unity elements exist exactly when the structural criterion holds",
    "the predicted set lies inside the certified root-of-unity set",
    "affine-product recognition agrees with brute-force isomorphism to the constructed product",
];

pub(crate) struct Checker {
    suite: &'static str,
    anchor: &'static str,
    assertions: usize,
    witness: Option<String>,
}

impl Checker {
    pub(crate) fn new(suite: &'static str, anchor: &'static str) -> Self {
        Self {
            suite,
            anchor,
            assertions: 0,
            witness: None,
        }
    }

    pub(crate) fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.assertions += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub(crate) fn finish(self) -> CheckOutcome {
        CheckOutcome {
            suite: self.suite.to_string(),
            anchor: self.anchor.to_string(),
            assertions: self.assertions,
            passed: self.witness.is_none(),
            witness: self.witness,
        }
    }
}

struct CentralQuotient {
    n: Subgroup,
    quotient: Quotient,
    table: OnceCell<CharacterTable<BigInt>>,
}

/// Everything the suites need about one catalog group, computed once.
pub(crate) struct GroupContext {
    pub(crate) name: String,
    pub(crate) g: GroupTable,
    pub(crate) table: CharacterTable<BigInt>,
    pub(crate) classification: ClassificationResult,
    pub(crate) rue_classes: Vec<usize>,
    pub(crate) rue_elements: Vec<usize>,
    center: Subgroup,
    derived: Subgroup,
    fitting: Subgroup,
    quotients: OnceCell<Vec<CentralQuotient>>,
}

impl GroupContext {
    pub(crate) fn new(name: String, g: GroupTable) -> Result<Self> {
        let table = character_table::<BigInt>(&g)?;
        let classification = theorem_b_classify(&g);
        let rue_classes = table.rue_classes();
        let rue_elements = table.rue_elements();
        Ok(Self {
            name,
            center: g.center(),
            derived: g.derived_subgroup(),
            fitting: g.fitting(),
            g,
            table,
            classification,
            rue_classes,
            rue_elements,
            quotients: OnceCell::new(),
        })
    }

    fn has_rue(&self) -> bool {
        !self.rue_classes.is_empty()
    }

    fn rep(&self, class: usize) -> usize {
        self.table.classes().class(class).representative
    }

    /// Nontrivial central subgroups used for quotients: every cyclic
    /// subgroup of the center, the center itself and the upper central
    /// series terms that are central.
    fn central_quotients(&self) -> &[CentralQuotient] {
        self.quotients.get_or_init(|| {
            let g = &self.g;
            let mut seen = HashSet::new();
            let mut subs = Vec::new();
            let candidates = self
                .center
                .members()
                .iter()
                .map(|&z| g.subgroup_generated(&[z]))
                .chain(std::iter::once(self.center.clone()))
                .chain(g.upper_central_series().into_iter().filter(|s| s.is_subset_of(&self.center)));
            for s in candidates {
                if !s.is_trivial() && seen.insert(s.clone()) {
                    subs.push(s);
                }
            }
            subs.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));
            subs.into_iter()
                .map(|n| CentralQuotient {
                    quotient: g.quotient(&n).expect("central subgroups are normal"),
                    n,
                    table: OnceCell::new(),
                })
                .collect()
        })
    }

    fn quotient_table<'a>(&self, cq: &'a CentralQuotient) -> Result<&'a CharacterTable<BigInt>> {
        if let Some(t) = cq.table.get() {
            return Ok(t);
        }
        let t = character_table::<BigInt>(&cq.quotient.group)?;
        Ok(cq.table.get_or_init(|| t))
    }

    pub(crate) fn agreement(&self) -> bool {
        self.has_rue() == (self.classification.verdict != Verdict::NoRueElement)
    }

    pub(crate) fn boundary_notes(&self) -> Vec<BoundaryNote> {
        let report = self.table.nonvanishing_bound_check();
        report
            .equality_without_rue
            .iter()
            .map(|&c| {
                let vanishing = (0..self.table.k_of_group()).find(|&chi| self.table.is_zero(chi, c));
                let rep = self.rep(c);
                BoundaryNote {
                    class: c,
                    representative: rep,
                    element_order: self.g.element_order(rep),
                    centralizer_order: self.table.centralizer_order(c),
                    class_count: report.k,
                    vanishing_character: vanishing,
                    resolution: if vanishing.is_some() { "vanishing" } else { "violation" }.into(),
                }
            })
            .collect()
    }

    fn witness(&self, detail: impl std::fmt::Display) -> String {
        format!("{}: {}", self.name, detail)
    }
}

pub(crate) fn orthogonality(cx: &GroupContext) -> Vec<CheckOutcome> {
    let t = &cx.table;
    let s = "orthogonality";
    let mut out = Vec::new();
    for (i, result) in [t.check_row_orthogonality(), t.check_column_orthogonality()]
        .into_iter()
        .enumerate()
    {
        let mut c = Checker::new(s, ORTHOGONALITY[i]);
        c.check(result.is_ok(), || cx.witness(format!("{:?}", result.err())));
        out.push(c.finish());
    }
    let mut c = Checker::new(s, ORTHOGONALITY[2]);
    let sum: u128 = t.degrees().iter().map(|&d| (d as u128) * (d as u128)).sum();
    c.check(sum == cx.g.order() as u128, || cx.witness(format!("sum of squares {}", sum)));
    out.push(c.finish());
    let mut c = Checker::new(s, ORTHOGONALITY[3]);
    c.check(t.degrees().len() == t.classes().len(), || {
        cx.witness(format!("{} characters, {} classes", t.degrees().len(), t.classes().len()))
    });
    out.push(c.finish());
    let mut c = Checker::new(s, ORTHOGONALITY[4]);
    let galois = t.check_galois_closure();
    c.check(galois.is_ok(), || cx.witness(format!("{:?}", galois.err())));
    out.push(c.finish());
    let mut c = Checker::new(s, ORTHOGONALITY[5]);
    for k in 0..t.classes().len() {
        let size = t.classes().class(k).size();
        let cent = cx.g.centralizer(t.classes().class(k).representative).order();
        c.check(size * cent == cx.g.order(), || cx.witness(format!("class {}", k)));
    }
    out.push(c.finish());
    out
}

pub(crate) fn lemma21(cx: &GroupContext) -> Vec<CheckOutcome> {
    let report = cx.table.check_divisibility();
    let mut c = Checker::new("lemma21", LEMMA21[0]);
    for _ in &report.verified {
        c.check(true, String::new);
    }
    for &(chi, class) in &report.violations {
        c.check(false, || cx.witness(format!("character {} at class {}", chi, class)));
    }
    vec![c.finish()]
}

pub(crate) fn lemma22(cx: &GroupContext) -> Result<Vec<CheckOutcome>> {
    let s = "lemma22";
    let (g, t) = (&cx.g, &cx.table);
    let k = t.k_of_group();
    let mut a = Checker::new(s, LEMMA22[0]);
    let mut cp = Checker::new(s, LEMMA22[1]);
    let mut b = Checker::new(s, LEMMA22[2]);
    let mut quot = Checker::new(s, LEMMA22[3]);
    let mut trans = Checker::new(s, LEMMA22[4]);
    let cp_value = t.commuting_probability();
    for &class in &cx.rue_classes {
        let x = cx.rep(class);
        a.check(t.centralizer_order(class) == k, || {
            cx.witness(format!("element {}: |C(x)| = {}, k = {}", x, t.centralizer_order(class), k))
        });
        let size = t.classes().class(class).size();
        cp.check(cp_value == num_rational::Ratio::new(1, size), || {
            cx.witness(format!("element {}: cp = {}, |x^G| = {}", x, cp_value, size))
        });
        let closure = g.normal_closure(&[x]);
        b.check(cx.derived.is_subset_of(&closure), || cx.witness(format!("element {}", x)));
        for cq in cx.central_quotients() {
            let qt = cx.quotient_table(cq)?;
            let image = cq.quotient.projection[x];
            let qc = qt.classes().class_of(image);
            quot.check(qt.class_is_rue(qc), || {
                cx.witness(format!("element {} modulo central subgroup of order {}", x, cq.n.order()))
            });
        }
        for &z in cx.center.members() {
            let xz = g.mul(x, z);
            trans.check(t.class_is_rue(t.classes().class_of(xz)), || {
                cx.witness(format!("element {} times central {}", x, z))
            });
        }
    }
    Ok(vec![a.finish(), cp.finish(), b.finish(), quot.finish(), trans.finish()])
}

pub(crate) fn lemma23(cx: &GroupContext) -> Vec<CheckOutcome> {
    let report = cx.table.nonvanishing_bound_check();
    let mut bound = Checker::new("lemma23", LEMMA23[0]);
    for e in &report.entries {
        bound.check(e.consistent, || {
            cx.witness(format!(
                "class {}: |C(x)| = {}, k = {}, rue = {}",
                e.class, e.centralizer_order, report.k, e.rue
            ))
        });
    }
    let mut boundary = Checker::new("lemma23", LEMMA23[1]);
    for note in cx.boundary_notes() {
        boundary.check(note.vanishing_character.is_some(), || {
            cx.witness(format!("class {} meets the bound with no vanishing character", note.class))
        });
    }
    vec![bound.finish(), boundary.finish()]
}

pub(crate) fn theorem_a(cx: &GroupContext) -> Result<Vec<CheckOutcome>> {
    let s = "theoremA";
    let g = &cx.g;
    let flags = g.structural_flags();
    let mut out = Vec::new();
    let mut meta = Checker::new(s, THEOREM_A[0]);
    let mut inside = Checker::new(s, THEOREM_A[1]);
    let mut f_ab = Checker::new(s, THEOREM_A[2]);
    let mut quo_ab = Checker::new(s, THEOREM_A[3]);
    if cx.has_rue() {
        meta.check(flags.abelian || flags.metabelian, || cx.witness("not metabelian"));
        for &x in &cx.rue_elements {
            inside.check(cx.fitting.contains(x), || cx.witness(format!("element {} outside F(G)", x)));
        }
        f_ab.check(cx.fitting.is_abelian(g), || cx.witness("F(G) nonabelian"));
        quo_ab.check(cx.derived.is_subset_of(&cx.fitting), || cx.witness("G' not inside F(G)"));
    }
    out.extend([meta.finish(), inside.finish(), f_ab.finish(), quo_ab.finish()]);

    let mut centerless = Checker::new(s, THEOREM_A[4]);
    let mut affine = Checker::new(s, THEOREM_A[5]);
    if cx.center.is_trivial() && flags.metabelian {
        let dec = recognize_gamma_product(g);
        centerless.check(dec.is_some() == cx.has_rue(), || {
            cx.witness(format!("recognized = {}, has root-of-unity = {}", dec.is_some(), cx.has_rue()))
        });
        if dec.is_some() {
            let socle = g
                .minimal_normal_subgroups()
                .iter()
                .fold(g.trivial_subgroup(), |acc, v| g.product(&acc, v));
            affine.check(cx.fitting == socle && cx.fitting == cx.derived, || {
                cx.witness("F(G), socle and G' differ")
            });
            for &class in &cx.rue_classes {
                let x = cx.rep(class);
                affine.check(g.normal_closure(&[x]) == cx.fitting, || {
                    cx.witness(format!("normal closure of {} is not F(G)", x))
                });
                affine.check(g.centralizer(x) == cx.fitting, || {
                    cx.witness(format!("C({}) is not F(G)", x))
                });
            }
        }
    }
    out.extend([centerless.finish(), affine.finish()]);

    let mut fit = Checker::new(s, THEOREM_A[6]);
    for cq in cx.central_quotients() {
        let lifted = cq.quotient.preimage(&cq.quotient.group.fitting());
        fit.check(lifted == cx.fitting, || {
            cx.witness(format!("central subgroup of order {}", cq.n.order()))
        });
    }
    out.push(fit.finish());
    Ok(out)
}

pub(crate) fn lemma32(cx: &GroupContext) -> Result<Vec<CheckOutcome>> {
    let mut c = Checker::new("lemma32", LEMMA32[0]);
    let g = &cx.g;
    if !g.structural_flags().solvable {
        let minimal = g.minimal_normal_subgroups();
        if minimal.len() == 1 && !minimal[0].is_abelian(g) {
            let n = &minimal[0];
            if g.quotient(n)?.group.structural_flags().solvable {
                let ok = verify_vanishing_outside(g, &cx.table, n)?;
                c.check(ok, || {
                    let t = &cx.table;
                    let bad = (0..t.classes().len())
                        .find(|&k| !n.contains(cx.rep(k)) && t.class_is_nonvanishing(k));
                    cx.witness(format!("nonvanishing class {:?} outside N", bad))
                });
            }
        }
    }
    Ok(vec![c.finish()])
}

pub(crate) fn lemma41(cx: &GroupContext) -> Result<Vec<CheckOutcome>> {
    let s = "lemma41";
    let g = &cx.g;
    let t = &cx.table;
    let mut shape = Checker::new(s, LEMMA41[0]);
    let mut pull = Checker::new(s, LEMMA41[1]);
    let mut fc = Checker::new(s, LEMMA41[2]);
    let mut central = Checker::new(s, LEMMA41[3]);
    if cx.has_rue() && !g.is_abelian() {
        let quotient = g.quotient(&cx.center)?;
        shape.check(recognize_gamma_product(&quotient.group).is_some(), || {
            cx.witness("G/Z is not a product of affine groups")
        });
        shape.check(
            g.product(&cx.derived, &cx.center) == cx.fitting && cx.fitting.is_abelian(g),
            || cx.witness("F(G) differs from G'Z or is nonabelian"),
        );
        let fit_bar = quotient.preimage(&quotient.group.fitting());
        for &class in &cx.rue_classes {
            let x = cx.rep(class);
            let cent_bar = quotient.preimage(&quotient.group.centralizer(quotient.projection[x]));
            pull.check(cent_bar == cx.fitting && fit_bar == cx.fitting, || {
                cx.witness(format!("element {}", x))
            });
            fc.check(
                g.centralizer(x) == cx.fitting && t.k_of_group() == cx.fitting.order(),
                || cx.witness(format!("element {}: |C(x)| = {}, |F| = {}, k = {}",
                    x, g.centralizer(x).order(), cx.fitting.order(), t.k_of_group())),
            );
            for cq in cx.central_quotients() {
                let q = &cq.quotient;
                let qt = cx.quotient_table(cq)?;
                let index = cx.fitting.order() / cq.n.order();
                let cent = q.preimage(&q.group.centralizer(q.projection[x]));
                let fit = q.preimage(&q.group.fitting());
                central.check(
                    qt.k_of_group() == index && cent == cx.fitting && fit == cx.fitting,
                    || cx.witness(format!("element {} modulo central subgroup of order {}", x, cq.n.order())),
                );
            }
        }
    }
    Ok(vec![shape.finish(), pull.finish(), fc.finish(), central.finish()])
}

pub(crate) fn prop42(cx: &GroupContext) -> Vec<CheckOutcome> {
    let g = &cx.g;
    let mut c = Checker::new("prop42", PROP42[0]);
    if cx.has_rue() {
        c.check(g.structural_flags().solvable, || cx.witness("not solvable"));
        for p in prime_factors(g.order()) {
            c.check(g.sylow_subgroup(p).is_abelian(g), || {
                cx.witness(format!("Sylow {}-subgroup nonabelian", p))
            });
        }
    }
    vec![c.finish()]
}

pub(crate) fn cor43(cx: &GroupContext) -> Vec<CheckOutcome> {
    let g = &cx.g;
    let mut hyper = Checker::new("cor43", COR43[0]);
    let mut meet = Checker::new("cor43", COR43[1]);
    if cx.has_rue() {
        hyper.check(g.hypercenter() == cx.center, || cx.witness("hypercenter exceeds center"));
        meet.check(cx.derived.intersection(&cx.center).is_trivial(), || {
            cx.witness("G' meets Z(G)")
        });
    }
    vec![hyper.finish(), meet.finish()]
}

pub(crate) fn theorem_b(cx: &GroupContext) -> Result<Vec<CheckOutcome>> {
    let s = "theoremB";
    let mut agree = Checker::new(s, THEOREM_B[0]);
    agree.check(cx.agreement(), || {
        cx.witness(format!(
            "verdict {:?}, {} certified root-of-unity elements",
            cx.classification.verdict,
            cx.rue_elements.len()
        ))
    });
    let mut sound = Checker::new(s, THEOREM_B[1]);
    if cx.classification.verdict != Verdict::NoRueElement {
        let certified: HashSet<usize> = cx.rue_elements.iter().copied().collect();
        for x in cx.classification.summary().predicted {
            sound.check(certified.contains(&x), || {
                cx.witness(format!("predicted element {} is not certified", x))
            });
        }
    }
    let mut oracle = Checker::new(s, THEOREM_B[2]);
    if cx.g.order() <= ORACLE_LIMIT {
        let (ok, detail) = recognition_oracle(&cx.g)?;
        oracle.check(ok, || cx.witness(detail));
    }
    Ok(vec![agree.finish(), sound.finish(), oracle.finish()])
}

/// Multisets `q_1 <= .. <= q_m` of prime powers above 2 with
/// `prod q_i (q_i - 1) = n`.
pub fn gamma_multisets(n: usize) -> Vec<Vec<u64>> {
    fn go(n: u64, min: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 1 {
            out.push(acc.clone());
            return;
        }
        let mut q = min;
        while q * (q - 1) <= n {
            if n.is_multiple_of(q * (q - 1)) && prime_power(q).is_some() {
                acc.push(q);
                go(n / (q * (q - 1)), q, acc, out);
                acc.pop();
            }
            q += 1;
        }
    }
    let mut out = Vec::new();
    go(n as u64, 3, &mut Vec::new(), &mut out);
    out
}

fn gamma_product(qs: &[u64]) -> Result<GroupTable> {
    let mut p = GroupTable::trivial();
    for &q in qs {
        p = p.direct_product(&gamma_q(q)?);
    }
    Ok(p)
}

/// Compares recognition against brute-force isomorphism: a recognized group
/// must be isomorphic to the product built from its `q` multiset, and an
/// unrecognized one to no product of matching order.
pub fn recognition_oracle(g: &GroupTable) -> Result<(bool, String)> {
    match recognize_gamma_product(g) {
        Some(dec) => {
            let qs = dec.qs();
            let ok = brute_force_isomorphic(g, &gamma_product(&qs)?)?;
            Ok((ok, format!("recognized as {:?}, isomorphic = {}", qs, ok)))
        }
        None => {
            for qs in gamma_multisets(g.order()) {
                if brute_force_isomorphic(g, &gamma_product(&qs)?)? {
                    return Ok((false, format!("unrecognized but isomorphic to {:?}", qs)));
                }
            }
            Ok((true, "unrecognized, no product of affine groups matches".into()))
        }
    }
}

pub(crate) fn lemma33_global() -> Result<Vec<CheckOutcome>> {
    let s = "lemma33";
    let mut wit = Checker::new(s, LEMMA33[0]);
    for n in 6..=13 {
        for alpha in partitions(n).into_iter().filter(Partition::is_even_cycle_type) {
            match lemma33_witness(&alpha) {
                Ok(lambda) => {
                    let v = mn_value(&lambda, &alpha)?;
                    wit.check(!lambda.is_self_conjugate() && v != 1 && v != -1, || {
                        format!("alpha {} gave {} with value {}", alpha, lambda, v)
                    });
                }
                Err(e) => wit.check(false, || format!("alpha {}: {}", alpha, e)),
            }
        }
    }
    let mut fixed = Checker::new(s, LEMMA33[1]);
    let v = mn_value(&Partition::new(vec![5, 2])?, &Partition::new(vec![4, 3])?)?;
    fixed.check(v == 0, || format!("value {}", v));
    let mut cycle = Checker::new(s, LEMMA33[2]);
    for n in 6..=13 {
        let v = mn_value(&Partition::new(vec![n - 2, 2])?, &Partition::new(vec![n])?)?;
        cycle.check(v == 0, || format!("n = {}: value {}", n, v));
    }
    let mut strip = Checker::new(s, LEMMA33[3]);
    for n in 1..=12 {
        let parts = partitions(n);
        for gamma in &parts {
            for beta in &parts {
                if let Ok(ok) = strip_identity_check(gamma, beta) {
                    strip.check(ok, || format!("gamma {} at beta {}", gamma, beta));
                }
            }
        }
    }
    Ok(vec![wit.finish(), fixed.finish(), cycle.finish(), strip.finish()])
}
