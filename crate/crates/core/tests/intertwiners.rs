use jwverma::intertwiners::{
    cap_cup_e, check_intertwiner, e_family, f_family, splice_family, IntertwinerBlocks,
};
use jwverma::projectors::{extended_jw, jw};
use jwverma::qfield::WeightExpr;
use jwverma::repspaces::ModuleDesc;

fn w(j: usize) -> WeightExpr {
    WeightExpr::symbol(j)
}

fn assert_same(a: &IntertwinerBlocks, b: &IntertwinerBlocks) {
    for (k, ab) in a.blocks() {
        let diff = ab.differences(b.block(k).unwrap()).unwrap();
        assert!(diff.is_empty(), "degree {k}: {:?}", diff.first());
    }
}

#[test]
fn splice_is_functorial() {
    const D: i64 = 4;
    let (e, f) = (e_family(&w(0), &w(1), D), f_family(&w(0), &w(1), D));
    let trailing = [ModuleDesc::Verma(w(2)), ModuleDesc::FiniteIrrep(1)];
    for (phi, psi) in [(&e, &f), (&f, &e)] {
        let whole = splice_family(&phi.compose(psi).unwrap(), &trailing, D).unwrap();
        let parts = splice_family(phi, &trailing, D)
            .unwrap()
            .compose(&splice_family(psi, &trailing, D).unwrap())
            .unwrap();
        assert_same(&whole, &parts);
    }
}

#[test]
fn spliced_maps_remain_intertwiners() {
    const D: i64 = 4;
    let trailing = [ModuleDesc::Verma(w(2))];
    for fam in [e_family(&w(0), &w(1), D), f_family(&w(0), &w(1), D)] {
        let spliced = splice_family(&fam, &trailing, D).unwrap();
        let v = check_intertwiner(&spliced, D);
        assert!(v.is_empty(), "{:?}", v.first());
    }
}

#[test]
fn extended_projectors_are_intertwiners() {
    for (n, d) in [(2, 5), (3, 4)] {
        let ws: Vec<WeightExpr> = (0..n).map(w).collect();
        let p = extended_jw(&ws, d).unwrap();
        let v = check_intertwiner(p.as_intertwiner(), d);
        assert!(v.is_empty(), "n={n}: {:?}", v.first());
    }
}

#[test]
fn temperley_lieb_generators_are_intertwiners() {
    for n in 2..=4 {
        for i in 1..n {
            let e = cap_cup_e(n, i).unwrap();
            assert!(
                check_intertwiner(&e, n as i64).is_empty(),
                "e_{i} on {n} strands"
            );
        }
    }
}

/// Diagnostic only: the classical projector is killed by every e_i.
#[test]
fn classical_projector_is_annihilated_by_cap_cup() {
    for n in 2..=4 {
        let p = jw(n).unwrap();
        for i in 1..n {
            let e = cap_cup_e(n, i).unwrap();
            for prod in [
                e.compose(p.as_intertwiner()).unwrap(),
                p.as_intertwiner().compose(&e).unwrap(),
            ] {
                for (k, b) in prod.blocks() {
                    assert!(b.is_zero(), "n={n}, i={i}, degree {k}");
                }
            }
        }
    }
}

/// Exploration only: fusing after projecting changes nothing, `E P = E`.
#[test]
fn fusion_absorbs_the_projector() {
    const D: i64 = 4;
    let p = extended_jw(&[w(0), w(1)], D).unwrap();
    let e = e_family(&w(0), &w(1), D);
    assert_same(&e.compose(p.as_intertwiner()).unwrap(), &e);
    let f = f_family(&w(0), &w(1), D);
    assert_same(&p.as_intertwiner().compose(&f).unwrap(), &f);
}
