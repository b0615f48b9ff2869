//! Cocycles, coboundaries and cohomology dimensions.
//!
//! In degree 2 a cocycle must also lie in the admissible subspace (see
//! [`crate::cochain::admissibility_residual`]); in degree 3 of the MDLY
//! complex the condition applies to the shadow block. Coboundaries are images
//! of admissible cochains.

use serde::Serialize;

use crate::algebra::MdlyAlgebra;
use crate::cochain::{CochainMap, Complex, LyCochain, MdlyCochain};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, kernel_basis, rank, solve, span_rank, sub_vec, RatMatrix, Rational, Solution};
use crate::representation::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    /// The Yamaguti complex `(C_LY, δ)`.
    Ly,
    /// The complex `(C_MDLY, ∂)`.
    Mdly,
}

/// The two matrices cohomology is computed from: cocycles are the kernel of
/// `cocycle_system`, coboundaries the column span of `boundaries`.
#[derive(Clone, Debug)]
pub struct CohomologySystem {
    pub kind: ComplexKind,
    pub degree: usize,
    pub cocycle_system: RatMatrix,
    pub boundaries: RatMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub kind: ComplexKind,
    pub degree: usize,
    pub dim_cochains: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
    /// Basis of the cocycle space, when requested.
    pub kernel_basis: Option<Vec<Vec<Rational>>>,
    /// Cocycles whose classes form a basis of cohomology, when requested.
    pub representatives: Option<Vec<Vec<Rational>>>,
}

fn stack(a: RatMatrix, b: Option<RatMatrix>) -> RatMatrix {
    match b {
        Some(b) => a.vstack(&b).expect("same column count"),
        None => a,
    }
}

fn restricted(map: RatMatrix, constraint: Option<RatMatrix>) -> RatMatrix {
    match constraint {
        None => map,
        Some(c) => {
            let k = kernel_basis(&c);
            if k.is_empty() {
                return RatMatrix::zeros(map.rows(), 0);
            }
            let basis = RatMatrix::from_columns(map.cols(), &k).expect("kernel vectors");
            map.try_mul(&basis).expect("shapes agree")
        }
    }
}

impl Complex<'_> {
    pub fn cohomology_system(&self, kind: ComplexKind, degree: usize) -> Result<CohomologySystem> {
        let (map, constraint) = match kind {
            ComplexKind::Ly => (CochainMap::Delta, self.ly_constraint(degree)?),
            ComplexKind::Mdly => (CochainMap::Partial, self.mdly_constraint(degree)?),
        };
        let cocycle_system = stack(self.matrix(map, degree)?, constraint);
        let boundaries = if degree == 1 {
            RatMatrix::zeros(cocycle_system.cols(), 0)
        } else {
            let lower = match kind {
                ComplexKind::Ly => self.ly_constraint(degree - 1)?,
                ComplexKind::Mdly => self.mdly_constraint(degree - 1)?,
            };
            restricted(self.matrix(map, degree - 1)?, lower)
        };
        Ok(CohomologySystem {
            kind,
            degree,
            cocycle_system,
            boundaries,
        })
    }

    pub fn cohomology(&self, kind: ComplexKind, degree: usize, with_basis: bool) -> Result<CohomologyReport> {
        let sys = self.cohomology_system(kind, degree)?;
        let dim_cochains = sys.cocycle_system.cols();
        let dim_b = rank(&sys.boundaries);
        let (dim_z, kernel, reps) = if with_basis {
            let k = kernel_basis(&sys.cocycle_system);
            let reps = representatives(&sys.boundaries, &k);
            (k.len(), Some(k), Some(reps))
        } else {
            (dim_cochains - rank(&sys.cocycle_system), None, None)
        };
        debug_assert!(dim_z >= dim_b);
        Ok(CohomologyReport {
            kind,
            degree,
            dim_cochains,
            dim_z,
            dim_b,
            dim_h: dim_z - dim_b,
            kernel_basis: kernel,
            representatives: reps,
        })
    }

    /// `∂c` together with the admissibility residual.
    pub fn cocycle_check(&self, c: &MdlyCochain) -> Result<CocycleCheck> {
        let residual = self.partial(c)?;
        let admissible = self.is_admissible(c)?;
        Ok(CocycleCheck {
            residual,
            admissible,
        })
    }

    pub fn is_cocycle(&self, c: &MdlyCochain) -> Result<bool> {
        Ok(self.cocycle_check(c)?.holds())
    }

    /// A degree-1 cochain `ω` with `∂¹ω = c1 − c2`, if one exists.
    pub fn cohomologous(&self, c1: &MdlyCochain, c2: &MdlyCochain) -> Result<Option<LyCochain>> {
        if c1.degree() != 2 || c2.degree() != 2 {
            return Err(Error::UnsupportedDegree {
                degree: if c1.degree() != 2 { c1.degree() } else { c2.degree() },
                reason: "classes are compared in degree 2 only".into(),
            });
        }
        let diff = sub_vec(&c1.coords(), &c2.coords());
        let m = self.matrix(CochainMap::Partial, 1)?;
        Ok(match solve(&m, &diff)? {
            Solution::Particular(w) => Some(LyCochain::from_coords(self.ly_shape(1)?, w)?),
            Solution::Inconsistent => None,
        })
    }
}

/// Greedy choice of kernel vectors independent modulo the boundary span.
fn representatives(boundaries: &RatMatrix, kernel: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let len = boundaries.rows();
    let mut span: Vec<Vec<Rational>> = (0..boundaries.cols()).map(|j| boundaries.column(j)).collect();
    let mut current = span_rank(len, &span);
    let mut out = Vec::new();
    for v in kernel {
        span.push(v.clone());
        let r = span_rank(len, &span);
        if r > current {
            current = r;
            out.push(v.clone());
        } else {
            span.pop();
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct CocycleCheck {
    pub residual: MdlyCochain,
    pub admissible: bool,
}

impl CocycleCheck {
    pub fn holds(&self) -> bool {
        self.admissible && is_zero_vec(&self.residual.coords())
    }
}

pub fn cohomology_dim(
    a: &MdlyAlgebra,
    r: &Representation,
    degree: usize,
    kind: ComplexKind,
) -> Result<CohomologyReport> {
    Complex::new(a, r)?.cohomology(kind, degree, false)
}

pub fn is_cocycle(a: &MdlyAlgebra, r: &Representation, c: &MdlyCochain) -> Result<bool> {
    Complex::new(a, r)?.is_cocycle(c)
}

pub fn cohomologous(
    a: &MdlyAlgebra,
    r: &Representation,
    c1: &MdlyCochain,
    c2: &MdlyCochain,
) -> Result<Option<LyCochain>> {
    Complex::new(a, r)?.cohomologous(c1, c2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::rat;
    use crate::representation::adjoint_representation;

    #[test]
    fn abelian_with_zero_data_has_full_cohomology_in_low_dimension() {
        for dim in 1..=2 {
            let a = catalog::abelian_mdly(dim, rat(0));
            let r = Representation::zero(dim, 2);
            let cx = Complex::new(&a, &r).unwrap();
            for p in 1..=3 {
                let h = cx.cohomology(ComplexKind::Mdly, p, false).unwrap();
                assert_eq!(h.dim_h, cx.mdly_dim(p), "dim {dim} degree {p}");
            }
        }
    }

    #[test]
    fn abelian_dim_three_degree_two_is_cut_by_admissibility() {
        let a = catalog::abelian_mdly(3, rat(0));
        let r = Representation::zero(3, 1);
        let cx = Complex::new(&a, &r).unwrap();
        let h = cx.cohomology(ComplexKind::Mdly, 2, false).unwrap();
        assert_eq!(h.dim_b, 0);
        // one cyclic condition on g per triple x<y<z, here only (1,2,3)
        assert_eq!(h.dim_h, cx.mdly_dim(2) - 1);
    }

    #[test]
    fn zero_cochain_is_a_cocycle_and_self_cohomologous() {
        let a = catalog::two_dim_mdly(rat(1), rat(2), rat(3));
        let r = adjoint_representation(&a);
        let cx = Complex::new(&a, &r).unwrap();
        let z = MdlyCochain::zero(2, 2, 2).unwrap();
        assert!(cx.is_cocycle(&z).unwrap());
        let w = cx.cohomologous(&z, &z).unwrap().unwrap();
        assert!(w.is_zero());
        let one = MdlyCochain::zero(2, 2, 1).unwrap();
        assert!(cx.cohomologous(&one, &one).is_err());
    }

    #[test]
    fn report_bookkeeping() {
        let a = catalog::two_dim_mdly(rat(1), rat(2), rat(3));
        let r = adjoint_representation(&a);
        let cx = Complex::new(&a, &r).unwrap();
        for p in 1..=3 {
            let h = cx.cohomology(ComplexKind::Mdly, p, true).unwrap();
            assert_eq!(h.dim_h, h.dim_z - h.dim_b);
            assert_eq!(h.kernel_basis.as_ref().unwrap().len(), h.dim_z);
            assert_eq!(h.representatives.as_ref().unwrap().len(), h.dim_h);
            if p >= 2 {
                assert_eq!(cx.mdly_dim(p), cx.ly_dim(p) + cx.ly_dim(p - 1));
            }
        }
    }
}
