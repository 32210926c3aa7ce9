//! Affine groups over finite fields, recognition of direct products of
//! them, and the structural criterion for root-of-unity elements.

mod field;
mod gamma;

use serde::Serialize;

pub use field::FqField;
pub use gamma::{
    gamma_q, recognize_detailed, recognize_gamma_product, GammaDecomposition, RecognitionFailure,
};

use crate::error::{Error, Result};
use crate::grp::{GroupTable, Quotient, Subgroup};

pub fn fq_field(q: u64) -> Result<FqField> {
    FqField::new(q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Abelian,
    RueByTheoremB,
    NoRueElement,
}

/// The first structural condition a nonabelian group fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassificationFailure {
    /// `F(G) != G' Z(G)`
    FittingNotDerivedTimesCenter,
    /// `F(G)` is nonabelian.
    FittingNonabelian,
    /// `G' ∩ Z(G) != 1`
    DerivedMeetsCenter,
    /// `G/Z(G)` is not a product of affine groups.
    CentralQuotient(RecognitionFailure),
}

#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    pub failure: Option<ClassificationFailure>,
    pub center: Subgroup,
    /// `G -> G/Z(G)` together with the decomposition of the quotient, when
    /// the verdict is positive for a nonabelian group.
    pub central_quotient: Option<(Quotient, GammaDecomposition)>,
    /// The predicted root-of-unity set, sorted; empty for a negative verdict.
    predicted: Vec<usize>,
}

/// Serializable digest of a [`ClassificationResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationSummary {
    pub verdict: Verdict,
    pub failure: Option<ClassificationFailure>,
    pub q_multiset: Vec<u64>,
    pub center_order: usize,
    pub predicted_size: usize,
    pub predicted: Vec<usize>,
}

impl ClassificationResult {
    pub fn q_multiset(&self) -> Vec<u64> {
        self.central_quotient
            .as_ref()
            .map(|(_, d)| d.qs())
            .unwrap_or_default()
    }

    pub fn summary(&self) -> ClassificationSummary {
        ClassificationSummary {
            verdict: self.verdict,
            failure: self.failure,
            q_multiset: self.q_multiset(),
            center_order: self.center.order(),
            predicted_size: self.predicted.len(),
            predicted: self.predicted.clone(),
        }
    }
}

pub fn theorem_b_classify(g: &GroupTable) -> ClassificationResult {
    let center = g.center();
    let negative = |center: Subgroup, failure| ClassificationResult {
        verdict: Verdict::NoRueElement,
        failure: Some(failure),
        center,
        central_quotient: None,
        predicted: Vec::new(),
    };
    if g.is_abelian() {
        return ClassificationResult {
            verdict: Verdict::Abelian,
            failure: None,
            center,
            central_quotient: None,
            predicted: (0..g.order()).collect(),
        };
    }
    let derived = g.derived_subgroup();
    let fitting = g.fitting();
    if g.product(&derived, &center) != fitting {
        return negative(center, ClassificationFailure::FittingNotDerivedTimesCenter);
    }
    if !fitting.is_abelian(g) {
        return negative(center, ClassificationFailure::FittingNonabelian);
    }
    if !derived.intersection(&center).is_trivial() {
        return negative(center, ClassificationFailure::DerivedMeetsCenter);
    }
    let quotient = g.quotient(&center).expect("the center is normal");
    match recognize_detailed(&quotient.group) {
        Err(r) => negative(center, ClassificationFailure::CentralQuotient(r)),
        Ok(dec) => {
            let u = dec.all_coordinates_nontrivial(&quotient.group);
            let mut mask = vec![false; quotient.group.order()];
            for x in u {
                mask[x] = true;
            }
            let predicted = (0..g.order())
                .filter(|&x| mask[quotient.projection[x]])
                .collect();
            ClassificationResult {
                verdict: Verdict::RueByTheoremB,
                failure: None,
                center,
                central_quotient: Some((quotient, dec)),
                predicted,
            }
        }
    }
}

/// Preimage in `G` of the elements of `F(G/Z)` with all coordinates
/// nontrivial; all of `G` for abelian groups.
pub fn predicted_rue_set(result: &ClassificationResult) -> Result<Vec<usize>> {
    match result.verdict {
        Verdict::NoRueElement => Err(Error::WrongVerdict),
        _ => Ok(result.predicted.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{group_from_generators, Permutation};

    fn grp(degree: usize, gens: &[&str]) -> GroupTable {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(degree, s).unwrap())
            .collect();
        group_from_generators(degree, &gens, 10_000).unwrap()
    }

    #[test]
    fn quaternion_is_negative() {
        let q8 = grp(8, &["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"]);
        let r = theorem_b_classify(&q8);
        assert_eq!(r.verdict, Verdict::NoRueElement);
        assert_eq!(predicted_rue_set(&r), Err(Error::WrongVerdict));
    }

    #[test]
    fn dicyclic_twelve_is_positive() {
        // regular representation of <a, b | a^6, b^2 = a^3, a^b = a^-1>
        let g = grp(12, &["(0 1 2 3 4 5)(6 11 10 9 8 7)", "(0 6 3 9)(1 7 4 10)(2 8 5 11)"]);
        assert_eq!(g.order(), 12);
        let r = theorem_b_classify(&g);
        assert_eq!(r.verdict, Verdict::RueByTheoremB);
        assert_eq!(r.q_multiset(), vec![3]);
        assert_eq!(r.center.order(), 2);
        // two nontrivial kernel elements, each with two central lifts
        assert_eq!(predicted_rue_set(&r).unwrap().len(), 4);
    }

    #[test]
    fn sym4_fitting_is_not_derived_times_center() {
        let s4 = grp(4, &["(0 1 2 3)", "(0 1)"]);
        let r = theorem_b_classify(&s4);
        assert_eq!(r.verdict, Verdict::NoRueElement);
        assert_eq!(r.failure, Some(ClassificationFailure::FittingNotDerivedTimesCenter));
    }

    #[test]
    fn predicted_sets() {
        let c6 = grp(6, &["(0 1 2 3 4 5)"]);
        let r = theorem_b_classify(&c6);
        assert_eq!(r.verdict, Verdict::Abelian);
        assert_eq!(predicted_rue_set(&r).unwrap(), (0..6).collect::<Vec<_>>());

        let s3 = grp(3, &["(0 1 2)", "(0 1)"]);
        let r = theorem_b_classify(&s3);
        let u = predicted_rue_set(&r).unwrap();
        assert_eq!(u.len(), 2);
        assert!(u.iter().all(|&x| s3.element_order(x) == 3));

        let g = gamma_q(3).unwrap().direct_product(&gamma_q(3).unwrap());
        let r = theorem_b_classify(&g);
        assert_eq!(r.verdict, Verdict::RueByTheoremB);
        assert_eq!(predicted_rue_set(&r).unwrap().len(), 4);

        let a4 = grp(4, &["(0 1 2)", "(0 1)(2 3)"]);
        let r = theorem_b_classify(&a4);
        assert_eq!(r.q_multiset(), vec![4]);
        assert_eq!(predicted_rue_set(&r).unwrap().len(), 3);
    }
}
