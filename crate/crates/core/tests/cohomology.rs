mod common;

use common::*;
use lieyam_core::cochain::{CochainMap, Complex, LyCochain, MdlyCochain};
use lieyam_core::cohomology::{cohomology_dim, ComplexKind};
use lieyam_core::linalg::{rat, sub_vec};
use lieyam_core::representation::{adjoint_representation, Representation};
use lieyam_core::{catalog, rank, MdlyAlgebra};

fn configs() -> Vec<MdlyAlgebra> {
    vec![
        catalog::two_dim_mdly(rat(1), rat(2), rat(3)),
        catalog::three_dim_mdly(rat(1), rat(2), rat(0), rat(7), rat(11), rat(13)),
        catalog::abelian_mdly(1, rat(0)),
    ]
}

#[test]
fn dimensions_agree_with_naive_elimination() {
    for a in configs() {
        let r = adjoint_representation(&a);
        let cx = Complex::new(&a, &r).unwrap();
        for kind in [ComplexKind::Ly, ComplexKind::Mdly] {
            for p in 1..=3 {
                let sys = cx.cohomology_system(kind, p).unwrap();
                let h = cx.cohomology(kind, p, false).unwrap();
                assert_eq!(h.dim_z, naive_nullity(&sys.cocycle_system));
                assert_eq!(h.dim_b, naive_rank(&sys.boundaries));
                assert_eq!(rank(&sys.cocycle_system), naive_rank(&sys.cocycle_system));
            }
        }
    }
}

#[test]
fn two_dim_adjoint_degree_two_is_stable() {
    let a = &configs()[0];
    let r = adjoint_representation(a);
    let first = cohomology_dim(a, &r, 2, ComplexKind::Mdly).unwrap();
    let again = cohomology_dim(a, &r, 2, ComplexKind::Mdly).unwrap();
    assert_eq!(first, again);
    assert_eq!(first.dim_cochains, 10);
}

#[test]
fn mdly_dimension_bookkeeping() {
    for a in configs() {
        let r = adjoint_representation(&a);
        let cx = Complex::new(&a, &r).unwrap();
        assert_eq!(cx.mdly_dim(1), cx.ly_dim(1));
        for p in 2..=3 {
            assert_eq!(cx.mdly_dim(p), cx.ly_dim(p) + cx.ly_dim(p - 1));
            let h = cx.cohomology(ComplexKind::Mdly, p, false).unwrap();
            assert_eq!(h.dim_cochains, cx.mdly_dim(p));
        }
    }
}

#[test]
fn kernel_basis_elements_are_cocycles() {
    for a in configs() {
        let r = adjoint_representation(&a);
        let cx = Complex::new(&a, &r).unwrap();
        let n = a.dim();
        for p in 1..=3 {
            let h = cx.cohomology(ComplexKind::Mdly, p, true).unwrap();
            for v in h.kernel_basis.unwrap() {
                let c = MdlyCochain::from_coords(n, n, p, &v).unwrap();
                assert!(cx.is_cocycle(&c).unwrap(), "degree {p}");
            }
        }
    }
}

#[test]
fn coboundaries_are_cocycles_and_random_cochains_are_not() {
    let mut rng = rng(31);
    let a = &configs()[1];
    let r = adjoint_representation(a);
    let cx = Complex::new(a, &r).unwrap();
    let n = a.dim();
    for _ in 0..10 {
        let w = MdlyCochain::from_coords(n, n, 1, &random_vec(&mut rng, cx.mdly_dim(1))).unwrap();
        assert!(cx.is_cocycle(&cx.partial(&w).unwrap()).unwrap());
    }
    let c = MdlyCochain::from_coords(n, n, 2, &random_vec(&mut rng, cx.mdly_dim(2))).unwrap();
    let check = cx.cocycle_check(&c).unwrap();
    assert!(!check.holds());
    assert!(!check.residual.is_zero() || !check.admissible);
}

#[test]
fn zero_representation_on_abelian_has_full_cohomology() {
    let a = catalog::abelian_mdly(1, rat(0));
    let r = Representation::zero(1, 3);
    let cx = Complex::new(&a, &r).unwrap();
    let h = cx.cohomology(ComplexKind::Mdly, 1, false).unwrap();
    assert_eq!(h.dim_h, 3);
}

#[test]
fn witnesses_recover_coboundary_differences() {
    let mut rng = rng(32);
    for a in configs().into_iter().take(2) {
        let r = adjoint_representation(&a);
        let cx = Complex::new(&a, &r).unwrap();
        let n = a.dim();
        let h = cx.cohomology(ComplexKind::Mdly, 2, true).unwrap();
        let basis = h.kernel_basis.unwrap();
        let d1 = cx.matrix(CochainMap::Partial, 1).unwrap();
        for _ in 0..5 {
            let c1v = random_combination(&mut rng, &basis, cx.mdly_dim(2));
            let c1 = MdlyCochain::from_coords(n, n, 2, &c1v).unwrap();
            let w0 = random_vec(&mut rng, cx.mdly_dim(1));
            let bw0 = d1.mul_vec(&w0).unwrap();
            let c2 = MdlyCochain::from_coords(n, n, 2, &sub_vec(&c1v, &bw0)).unwrap();
            let w = cx.cohomologous(&c1, &c2).unwrap().expect("same class");
            assert_eq!(d1.mul_vec(w.coords()).unwrap(), bw0);

            // symmetry and transitivity through the witnesses
            let back = cx.cohomologous(&c2, &c1).unwrap().unwrap();
            assert_eq!(d1.mul_vec(back.coords()).unwrap(), d1.mul_vec(w.scale(&rat(-1)).coords()).unwrap());
            let w1 = random_vec(&mut rng, cx.mdly_dim(1));
            let c3v = sub_vec(&c2.coords(), &d1.mul_vec(&w1).unwrap());
            let c3 = MdlyCochain::from_coords(n, n, 2, &c3v).unwrap();
            let w13 = cx.cohomologous(&c1, &c3).unwrap().unwrap();
            let sum: LyCochain = w.add(&LyCochain::from_coords(w.shape(), w1).unwrap());
            assert_eq!(d1.mul_vec(w13.coords()).unwrap(), d1.mul_vec(sum.coords()).unwrap());
        }
    }
}

#[test]
fn representatives_are_distinct_classes() {
    for a in configs() {
        let r = adjoint_representation(&a);
        let cx = Complex::new(&a, &r).unwrap();
        let n = a.dim();
        let h = cx.cohomology(ComplexKind::Mdly, 2, true).unwrap();
        let reps = h.representatives.unwrap();
        assert_eq!(reps.len(), h.dim_h);
        let zero = MdlyCochain::zero(n, n, 2).unwrap();
        for (i, v) in reps.iter().enumerate() {
            let c = MdlyCochain::from_coords(n, n, 2, v).unwrap();
            assert!(cx.cohomologous(&c, &zero).unwrap().is_none());
            for u in &reps[..i] {
                let d = MdlyCochain::from_coords(n, n, 2, u).unwrap();
                assert!(cx.cohomologous(&c, &d).unwrap().is_none());
            }
        }
    }
}

#[test]
fn unsupported_degree_is_an_error() {
    let a = &configs()[0];
    let r = adjoint_representation(a);
    assert!(cohomology_dim(a, &r, 7, ComplexKind::Mdly).is_err());
    assert!(cohomology_dim(a, &r, 0, ComplexKind::Ly).is_err());
}
