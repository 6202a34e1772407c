use jwverma::qfield::{RationalFn, WeightExpr};
use jwverma::repspaces::{
    check_coassociativity, check_relations, tensor_action, BlockMatrix, Generator, GradedBasis,
    ModuleDesc,
};

fn verma(j: usize) -> ModuleDesc {
    ModuleDesc::Verma(WeightExpr::symbol(j))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn relations_on_mixed_products() {
    let spaces = [
        vec![verma(0), ModuleDesc::FiniteIrrep(1)],
        vec![ModuleDesc::FiniteIrrep(2), verma(0)],
        vec![verma(0), verma(1), verma(2)],
        vec![ModuleDesc::FiniteIrrep(1), ModuleDesc::FiniteIrrep(2)],
    ];
    for factors in &spaces {
        let v = check_relations(factors, 5);
        assert!(v.is_empty(), "{factors:?}: {:?}", v.first());
    }
}

#[test]
fn coassociativity_on_three_factors() {
    let spaces = [
        vec![verma(0), verma(1), verma(2)],
        vec![verma(0), ModuleDesc::FiniteIrrep(1), verma(1)],
        vec![ModuleDesc::FiniteIrrep(1); 3],
    ];
    for factors in &spaces {
        let v = check_coassociativity(factors, 5);
        assert!(v.is_empty(), "{factors:?}: {:?}", v.first());
    }
}

#[test]
fn k_acts_by_the_weight() {
    let factors = vec![verma(0), ModuleDesc::FiniteIrrep(2), verma(1)];
    for k in 0..=5 {
        let basis = GradedBasis::new(factors.clone(), k);
        let total = &(&WeightExpr::symbol(0) + &WeightExpr::symbol(1)).shift(2)
            - &WeightExpr::constant(2 * k);
        let expected =
            BlockMatrix::scalar(basis.clone().into(), &RationalFn::monomial(total.q_power()));
        let got = tensor_action(Generator::K, &factors, k);
        assert!(got.exactly_equals(&expected), "degree {k}");
    }
}

#[test]
fn verma_weight_spaces_have_binomial_dimension() {
    for n in 1..=4usize {
        let factors: Vec<ModuleDesc> = (0..n).map(verma).collect();
        for k in 0..=6u64 {
            let b = GradedBasis::new(factors.clone(), k as i64);
            assert_eq!(
                b.len() as u64,
                binomial(k + n as u64 - 1, n as u64 - 1),
                "n={n}, k={k}"
            );
        }
        assert!(GradedBasis::new(factors, -1).is_empty());
    }
}
