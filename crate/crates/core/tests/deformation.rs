mod common;

use common::*;
use lieyam_core::cochain::{CochainMap, Complex, LyCochain, MdlyCochain};
use lieyam_core::cohomology::ComplexKind;
use lieyam_core::deformation::{
    apply_equivalence_order1, infinitesimal_cocycle_check, rigidity_report, verify_deformation,
    Rigidity, TruncatedDeformation,
};
use lieyam_core::linalg::{rat, sub_vec};
use lieyam_core::representation::adjoint_representation;
use lieyam_core::{catalog, MdlyAlgebra, Tensor};
use rand::Rng;

fn configs() -> Vec<MdlyAlgebra> {
    vec![
        catalog::two_dim_mdly(rat(1), rat(2), rat(3)),
        catalog::three_dim_mdly(rat(1), rat(2), rat(0), rat(7), rat(11), rat(13)),
    ]
}

#[test]
fn first_order_equations_match_the_cocycle_condition() {
    let mut rng = rng(41);
    for a in configs() {
        let r = adjoint_representation(&a);
        let cx = Complex::new(&a, &r).unwrap();
        let n = a.dim();
        let z = cx.cohomology(ComplexKind::Mdly, 2, true).unwrap().kernel_basis.unwrap();
        let (mut yes, mut no) = (0, 0);
        for _ in 0..50 {
            let v = mixed_sample(&mut rng, &z, cx.mdly_dim(2));
            let c = MdlyCochain::from_coords(n, n, 2, &v).unwrap();
            let d = TruncatedDeformation::from_infinitesimal(a.clone(), &c).unwrap();
            let passes = verify_deformation(&d).passes(1);
            let cocycle = infinitesimal_cocycle_check(&d).unwrap();
            assert_eq!(passes, cocycle);
            assert_eq!(cocycle, cx.is_cocycle(&c).unwrap());
            if cocycle {
                yes += 1;
            } else {
                no += 1;
            }
        }
        assert!(yes > 0 && no > 0, "both outcomes sampled: {yes} / {no}");
    }
}

#[test]
fn non_cochain_first_order_data_fails_both_ways() {
    let mut rng = rng(42);
    let a = &configs()[0];
    let n = a.dim();
    for _ in 0..10 {
        let mut f = Tensor::zeros(n, 2, n);
        f.set(&[rng.gen_range(0..n), rng.gen_range(0..n)], &[small_nonzero(&mut rng), rat(0)]);
        let d = TruncatedDeformation::new(
            a.clone(),
            vec![f],
            vec![Tensor::zeros(n, 3, n)],
            vec![random_matrix(&mut rng, n, n)],
        )
        .unwrap();
        let passes = verify_deformation(&d).passes(1);
        assert_eq!(passes, infinitesimal_cocycle_check(&d).unwrap());
    }
}

#[test]
fn failing_order_names_the_equation() {
    let a = &configs()[1];
    let n = a.dim();
    let mut d = TruncatedDeformation::trivial(a.clone(), 1).unwrap();
    let mut c = d.infinitesimal().unwrap();
    // a ternary term with g(e1,e2,e3) = e1 breaks the cyclic condition
    let mut top = c.top().clone();
    top.set(lieyam_core::cochain::Part::G, &[0, 1, 2], &[rat(1), rat(0), rat(0)]);
    c = MdlyCochain::new(top, c.shadow().cloned()).unwrap();
    d = TruncatedDeformation::from_infinitesimal(a.clone(), &c).unwrap();
    let r = verify_deformation(&d);
    assert!(r.passes(0));
    assert!(!r.passes(1));
    assert!(r.orders[1].mentions("LY3"));
    assert!(!infinitesimal_cocycle_check(&d).unwrap());
    assert_eq!(d.order(), 1);
    assert_eq!(d.base().dim(), n);
}

#[test]
fn coboundary_infinitesimal_is_a_cocycle() {
    let mut rng = rng(43);
    for a in configs() {
        let r = adjoint_representation(&a);
        let cx = Complex::new(&a, &r).unwrap();
        let n = a.dim();
        let w = MdlyCochain::from_coords(n, n, 1, &random_vec(&mut rng, n * n)).unwrap();
        let c = cx.partial(&w).unwrap();
        let d = TruncatedDeformation::from_infinitesimal(a.clone(), &c).unwrap();
        assert!(infinitesimal_cocycle_check(&d).unwrap());
        assert!(verify_deformation(&d).all_pass());
    }
}

#[test]
fn equivalence_changes_infinitesimal_by_a_coboundary() {
    let mut rng = rng(44);
    for a in configs() {
        let r = adjoint_representation(&a);
        let cx = Complex::new(&a, &r).unwrap();
        let n = a.dim();
        let z = cx.cohomology(ComplexKind::Mdly, 2, true).unwrap().kernel_basis.unwrap();
        let d1 = cx.matrix(CochainMap::Partial, 1).unwrap();
        for _ in 0..20 {
            let v = mixed_sample(&mut rng, &z, cx.mdly_dim(2));
            let c = MdlyCochain::from_coords(n, n, 2, &v).unwrap();
            let d = TruncatedDeformation::from_infinitesimal(a.clone(), &c).unwrap();
            let psi = random_matrix(&mut rng, n, n);
            let e = apply_equivalence_order1(&d, &psi).unwrap();
            let diff = sub_vec(&d.infinitesimal().unwrap().coords(), &e.infinitesimal().unwrap().coords());
            let psi_cochain = LyCochain::from_linear_map(&psi);
            assert_eq!(diff, d1.mul_vec(psi_cochain.coords()).unwrap());
            assert_eq!(
                infinitesimal_cocycle_check(&d).unwrap(),
                infinitesimal_cocycle_check(&e).unwrap()
            );
        }
    }
}

#[test]
fn equivalence_preserves_higher_order_deformations() {
    // Ψ_t transports a genuine deformation to a genuine deformation at every
    // truncated order; start from the trivial one so all orders hold.
    let mut rng = rng(45);
    for a in configs() {
        let n = a.dim();
        let d = TruncatedDeformation::trivial(a.clone(), 3).unwrap();
        let psi = random_matrix(&mut rng, n, n);
        let e = apply_equivalence_order1(&d, &psi).unwrap();
        let report = verify_deformation(&e);
        assert!(report.all_pass(), "{report}");
    }
}

#[test]
fn rigidity_is_reported_from_second_cohomology() {
    for a in configs().into_iter().chain([catalog::abelian_mdly(1, rat(0))]) {
        let r = adjoint_representation(&a);
        let h = Complex::new(&a, &r)
            .unwrap()
            .cohomology(ComplexKind::Mdly, 2, false)
            .unwrap();
        let z = Complex::new(&a, &r).unwrap().cohomology_system(ComplexKind::Mdly, 2).unwrap();
        assert_eq!(h.dim_h, naive_nullity(&z.cocycle_system) - naive_rank(&z.boundaries));
        match rigidity_report(&a).unwrap() {
            Rigidity::Rigid => assert_eq!(h.dim_h, 0),
            Rigidity::Inconclusive { dim_h2 } => assert_eq!(dim_h2, h.dim_h),
        }
    }
}
