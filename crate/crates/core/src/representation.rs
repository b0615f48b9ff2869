//! Representations `(V; ρ, θ, D, φ_V)` and the constructions built from them.
//!
//! Action matrices use the column convention of the rest of the crate:
//! `rho(i)` is the `m x m` matrix of `ρ(e_i)`, `theta(i, j)` that of
//! `θ(e_i, e_j)` (so for the adjoint module `θ(x,y)u = {u,x,y}`), and
//! `dee(i, j)` that of `D(e_i, e_j)`.

use num_traits::Zero;

use crate::algebra::{LyAlgebra, MdlyAlgebra, ModifiedOperator};
use crate::error::{Error, Result};
use crate::linalg::{rat, RatMatrix, Rational};
use crate::report::Report;
use crate::tensor::{tuples, Tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    base_dim: usize,
    module_dim: usize,
    rho: Vec<RatMatrix>,
    theta: Vec<RatMatrix>,
    dee: Vec<RatMatrix>,
    phi_v: RatMatrix,
}

impl Representation {
    /// `theta` and `dee` are indexed `i * base_dim + j`.
    pub fn new(
        base_dim: usize,
        module_dim: usize,
        rho: Vec<RatMatrix>,
        theta: Vec<RatMatrix>,
        dee: Vec<RatMatrix>,
        phi_v: RatMatrix,
    ) -> Result<Self> {
        let count = |v: &[RatMatrix], expected: usize, context: &'static str| -> Result<()> {
            if v.len() != expected {
                return Err(Error::DimensionMismatch {
                    context,
                    expected,
                    found: v.len(),
                });
            }
            square_of(v.iter(), module_dim, context)
        };
        count(&rho, base_dim, "rho matrices")?;
        count(&theta, base_dim * base_dim, "theta matrices")?;
        count(&dee, base_dim * base_dim, "D matrices")?;
        square_of(std::iter::once(&phi_v), module_dim, "phi_V matrix")?;
        Ok(Self {
            base_dim,
            module_dim,
            rho,
            theta,
            dee,
            phi_v,
        })
    }

    /// All actions and `φ_V` zero.
    pub fn zero(base_dim: usize, module_dim: usize) -> Self {
        let z = RatMatrix::zeros(module_dim, module_dim);
        Self {
            base_dim,
            module_dim,
            rho: vec![z.clone(); base_dim],
            theta: vec![z.clone(); base_dim * base_dim],
            dee: vec![z.clone(); base_dim * base_dim],
            phi_v: z,
        }
    }

    /// Solves the first representation axiom for `D`:
    /// `D(x,y) = θ(y,x) − θ(x,y) − ρ([x,y]) + ρ(x)ρ(y) − ρ(y)ρ(x)`.
    pub fn with_derived_dee(
        algebra: &LyAlgebra,
        module_dim: usize,
        rho: Vec<RatMatrix>,
        theta: Vec<RatMatrix>,
        phi_v: RatMatrix,
    ) -> Result<Self> {
        let n = algebra.dim();
        let placeholder = vec![RatMatrix::zeros(module_dim, module_dim); n * n];
        let mut r = Self::new(n, module_dim, rho, theta, placeholder, phi_v)?;
        r.dee = derive_dee_from_r1(algebra, &r);
        Ok(r)
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn rho(&self, i: usize) -> &RatMatrix {
        &self.rho[i]
    }

    pub fn theta(&self, i: usize, j: usize) -> &RatMatrix {
        &self.theta[i * self.base_dim + j]
    }

    pub fn dee(&self, i: usize, j: usize) -> &RatMatrix {
        &self.dee[i * self.base_dim + j]
    }

    pub fn phi_v(&self) -> &RatMatrix {
        &self.phi_v
    }

    /// `ρ(x)` for an arbitrary vector `x`.
    pub fn rho_of(&self, x: &[Rational]) -> RatMatrix {
        combine(self.module_dim, x.iter().zip(&self.rho))
    }

    /// `θ(x, e_j)` for a vector `x`.
    pub fn theta_left(&self, x: &[Rational], j: usize) -> RatMatrix {
        combine(
            self.module_dim,
            x.iter().enumerate().map(|(i, c)| (c, self.theta(i, j))),
        )
    }

    /// `θ(e_i, y)` for a vector `y`.
    pub fn theta_right(&self, i: usize, y: &[Rational]) -> RatMatrix {
        combine(
            self.module_dim,
            y.iter().enumerate().map(|(j, c)| (c, self.theta(i, j))),
        )
    }

    pub fn dee_left(&self, x: &[Rational], j: usize) -> RatMatrix {
        combine(
            self.module_dim,
            x.iter().enumerate().map(|(i, c)| (c, self.dee(i, j))),
        )
    }

    pub fn dee_right(&self, i: usize, y: &[Rational]) -> RatMatrix {
        combine(
            self.module_dim,
            y.iter().enumerate().map(|(j, c)| (c, self.dee(i, j))),
        )
    }

    /// Same action data with a different module operator.
    pub fn with_phi_v(&self, phi_v: RatMatrix) -> Result<Self> {
        square_of(std::iter::once(&phi_v), self.module_dim, "phi_V matrix")?;
        Ok(Self {
            phi_v,
            ..self.clone()
        })
    }

    pub fn theta_all(&self) -> &[RatMatrix] {
        &self.theta
    }

    pub fn dee_all(&self) -> &[RatMatrix] {
        &self.dee
    }

    pub fn rho_all(&self) -> &[RatMatrix] {
        &self.rho
    }
}

fn square_of<'a>(
    ms: impl Iterator<Item = &'a RatMatrix>,
    m: usize,
    context: &'static str,
) -> Result<()> {
    for x in ms {
        if x.rows() != m || x.cols() != m {
            return Err(Error::DimensionMismatch {
                context,
                expected: m,
                found: if x.rows() != m { x.rows() } else { x.cols() },
            });
        }
    }
    Ok(())
}

fn combine<'a>(m: usize, terms: impl Iterator<Item = (&'a Rational, &'a RatMatrix)>) -> RatMatrix {
    let mut acc = RatMatrix::zeros(m, m);
    for (c, x) in terms {
        if !c.is_zero() {
            acc = acc.add(&x.scale(c));
        }
    }
    acc
}

pub(crate) fn check_shapes(a: &MdlyAlgebra, r: &Representation) -> Result<()> {
    if a.dim() != r.base_dim {
        return Err(Error::DimensionMismatch {
            context: "representation base dimension",
            expected: a.dim(),
            found: r.base_dim,
        });
    }
    Ok(())
}

/// `D` forced by the first representation axiom.
pub fn derive_dee_from_r1(algebra: &LyAlgebra, r: &Representation) -> Vec<RatMatrix> {
    let n = algebra.dim();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let d = r
                .theta(j, i)
                .sub(r.theta(i, j))
                .sub(&r.rho_of(algebra.bracket_basis(i, j)))
                .add(&(r.rho(i) * r.rho(j)))
                .sub(&(r.rho(j) * r.rho(i)));
            out.push(d);
        }
    }
    out
}

fn flat(m: &RatMatrix) -> Vec<Rational> {
    m.entries().to_vec()
}

/// Checks R1–R7, R6′ and the three module-operator identities on all basis
/// tuples. Violation residuals are the flattened `m x m` difference matrices.
pub fn verify_representation(a: &MdlyAlgebra, r: &Representation) -> Result<Report> {
    check_shapes(a, r)?;
    let g = a.algebra();
    let n = g.dim();
    let mut report = Report::new();

    for i in 0..n {
        for j in 0..n {
            // R1
            let res = r
                .dee(i, j)
                .sub(r.theta(j, i))
                .add(r.theta(i, j))
                .add(&r.rho_of(g.bracket_basis(i, j)))
                .sub(&(r.rho(i) * r.rho(j)))
                .add(&(r.rho(j) * r.rho(i)));
            report.check("R1", &[i, j], flat(&res));
        }
    }
    for w in tuples(n, 3) {
        let (x, y, z) = (w[0], w[1], w[2]);
        // R2: D([x,y],z) + D([y,z],x) + D([z,x],y) = 0
        let res = r
            .dee_left(g.bracket_basis(x, y), z)
            .add(&r.dee_left(g.bracket_basis(y, z), x))
            .add(&r.dee_left(g.bracket_basis(z, x), y));
        report.check("R2", &w, flat(&res));
        // R3: θ([x,y],a) = θ(x,a)ρ(y) − θ(y,a)ρ(x), with a = z
        let res = r
            .theta_left(g.bracket_basis(x, y), z)
            .sub(&(r.theta(x, z) * r.rho(y)))
            .add(&(r.theta(y, z) * r.rho(x)));
        report.check("R3", &w, flat(&res));
        // R4: D(a,b)ρ(x) = ρ(x)D(a,b) + ρ({a,b,x}), with (a,b,x) = (x,y,z)
        let res = (r.dee(x, y) * r.rho(z))
            .sub(&(r.rho(z) * r.dee(x, y)))
            .sub(&r.rho_of(g.triple_basis(x, y, z)));
        report.check("R4", &w, flat(&res));
        // R5: θ(x,[a,b]) = ρ(a)θ(x,b) − ρ(b)θ(x,a), with (x,a,b) = (x,y,z)
        let res = r
            .theta_right(x, g.bracket_basis(y, z))
            .sub(&(r.rho(y) * r.theta(x, z)))
            .add(&(r.rho(z) * r.theta(x, y)));
        report.check("R5", &w, flat(&res));
    }
    for w in tuples(n, 4) {
        let (p, q, x, y) = (w[0], w[1], w[2], w[3]);
        // R6: D(a,b)θ(x,y) = θ(x,y)D(a,b) + θ({a,b,x},y) + θ(x,{a,b,y})
        let res = (r.dee(p, q) * r.theta(x, y))
            .sub(&(r.theta(x, y) * r.dee(p, q)))
            .sub(&r.theta_left(g.triple_basis(p, q, x), y))
            .sub(&r.theta_right(x, g.triple_basis(p, q, y)));
        report.check("R6", &w, flat(&res));
        // R6': the same with D in place of θ
        let res = (r.dee(p, q) * r.dee(x, y))
            .sub(&(r.dee(x, y) * r.dee(p, q)))
            .sub(&r.dee_left(g.triple_basis(p, q, x), y))
            .sub(&r.dee_right(x, g.triple_basis(p, q, y)));
        report.check("R6'", &w, flat(&res));
        // R7: θ(a,{x,y,z}) = θ(y,z)θ(a,x) − θ(x,z)θ(a,y) + D(x,y)θ(a,z)
        let (u, x, y, z) = (w[0], w[1], w[2], w[3]);
        let res = r
            .theta_right(u, g.triple_basis(x, y, z))
            .sub(&(r.theta(y, z) * r.theta(u, x)))
            .add(&(r.theta(x, z) * r.theta(u, y)))
            .sub(&(r.dee(x, y) * r.theta(u, z)));
        report.check("R7", &w, flat(&res));
    }

    let op = a.operator();
    let lambda = op.lambda();
    let two_lambda = lambda * rat(2);
    let phi_v = r.phi_v();
    for i in 0..n {
        let phi_i = op.column(i);
        // φ_V ρ(x) = ρ(φx) + ρ(x)φ_V + λρ(x)
        let res = (phi_v * r.rho(i))
            .sub(&r.rho_of(&phi_i))
            .sub(&(r.rho(i) * phi_v))
            .sub(&r.rho(i).scale(lambda));
        report.check("module-operator-rho", &[i], flat(&res));
        for j in 0..n {
            let phi_j = op.column(j);
            for (label, get, left, right) in [
                (
                    "module-operator-theta",
                    Representation::theta as fn(&Representation, usize, usize) -> &RatMatrix,
                    Representation::theta_left as fn(&Representation, &[Rational], usize) -> RatMatrix,
                    Representation::theta_right as fn(&Representation, usize, &[Rational]) -> RatMatrix,
                ),
                (
                    "module-operator-D",
                    Representation::dee,
                    Representation::dee_left,
                    Representation::dee_right,
                ),
            ] {
                let act = get(r, i, j);
                let res = (phi_v * act)
                    .sub(&left(r, &phi_i, j))
                    .sub(&right(r, i, &phi_j))
                    .sub(&(act * phi_v))
                    .sub(&act.scale(&two_lambda));
                report.check(label, &[i, j], flat(&res));
            }
        }
    }
    Ok(report)
}

/// `(𝔤; ad, ℒ, ℛ, φ)`: `ρ(x)z = [x,z]`, `D(x,y)z = {x,y,z}`,
/// `θ(x,y)z = {z,x,y}`, `φ_V = φ`.
pub fn adjoint_representation(a: &MdlyAlgebra) -> Representation {
    let g = a.algebra();
    let n = g.dim();
    let mut rho = Vec::with_capacity(n);
    for i in 0..n {
        let mut m = RatMatrix::zeros(n, n);
        for z in 0..n {
            for (k, c) in g.bracket_basis(i, z).iter().enumerate() {
                m[(k, z)] = c.clone();
            }
        }
        rho.push(m);
    }
    let mut theta = Vec::with_capacity(n * n);
    let mut dee = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut t = RatMatrix::zeros(n, n);
            let mut d = RatMatrix::zeros(n, n);
            for z in 0..n {
                for k in 0..n {
                    t[(k, z)] = g.triple_basis(z, i, j)[k].clone();
                    d[(k, z)] = g.triple_basis(i, j, z)[k].clone();
                }
            }
            theta.push(t);
            dee.push(d);
        }
    }
    Representation {
        base_dim: n,
        module_dim: n,
        rho,
        theta,
        dee,
        phi_v: a.operator().matrix().clone(),
    }
}

/// The derivation-side data attached to a representation: the algebra with
/// derivation `φ + λ·Id` (encoded as λ = 0) and the module with
/// `φ_V + λ·Id`.
#[derive(Clone, Debug)]
pub struct ShiftedRepresentation {
    pub algebra: MdlyAlgebra,
    pub representation: Representation,
}

pub fn shift_representation(a: &MdlyAlgebra, r: &Representation) -> Result<ShiftedRepresentation> {
    check_shapes(a, r)?;
    let lambda = a.lambda();
    let derivation = crate::algebra::shift_to_derivation(a.operator());
    let algebra = MdlyAlgebra::new(
        a.algebra().clone(),
        ModifiedOperator::new(Rational::zero(), derivation)?,
    )?;
    let phi_v = r.phi_v().add(&RatMatrix::scalar(r.module_dim, lambda));
    Ok(ShiftedRepresentation {
        algebra,
        representation: r.with_phi_v(phi_v)?,
    })
}

/// Checks a representation of a Lie-Yamaguti algebra with a derivation: the
/// same identities as [`verify_representation`] with λ = 0.
pub fn verify_shifted(s: &ShiftedRepresentation) -> Result<Report> {
    verify_representation(&s.algebra, &s.representation)
}

/// Structure tensors of `𝔤 ⊕ V` on the basis `(e_1..e_n, v_1..v_m)` built
/// from the action data, plus optional cocycle terms. Shared with the
/// abelian-extension construction.
pub(crate) fn assemble_total(
    a: &MdlyAlgebra,
    r: &Representation,
    nu: Option<&Tensor>,
    psi: Option<&Tensor>,
    chi: Option<&RatMatrix>,
) -> MdlyAlgebra {
    let g = a.algebra();
    let n = g.dim();
    let m = r.module_dim;
    let total = n + m;
    let mut bin = Tensor::zeros(total, 2, total);
    let mut ter = Tensor::zeros(total, 3, total);
    let put = |dst: &mut [Rational], offset: usize, src: &[Rational]| {
        for (k, c) in src.iter().enumerate() {
            dst[offset + k] += c;
        }
    };
    for i in 0..n {
        for j in 0..n {
            put(bin.get_mut(&[i, j]), 0, g.bracket_basis(i, j));
            if let Some(nu) = nu {
                put(bin.get_mut(&[i, j]), n, nu.get(&[i, j]));
            }
        }
        for u in 0..m {
            // [x, v] = ρ(x)v and [u, y] = −ρ(y)u
            let col = r.rho(i).column(u);
            put(bin.get_mut(&[i, n + u]), n, &col);
            let neg: Vec<Rational> = col.iter().map(|c| -c).collect();
            put(bin.get_mut(&[n + u, i]), n, &neg);
        }
    }
    for w in tuples(n, 3) {
        put(ter.get_mut(&[w[0], w[1], w[2]]), 0, g.triple_basis(w[0], w[1], w[2]));
        if let Some(psi) = psi {
            put(ter.get_mut(&[w[0], w[1], w[2]]), n, psi.get(&w));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for u in 0..m {
                // {x,y,w} = D(x,y)w, {x,v,z} = −θ(x,z)v, {u,y,z} = θ(y,z)u
                put(ter.get_mut(&[x, y, n + u]), n, &r.dee(x, y).column(u));
                let t = r.theta(x, y).column(u);
                let neg: Vec<Rational> = t.iter().map(|c| -c).collect();
                put(ter.get_mut(&[x, n + u, y]), n, &neg);
                put(ter.get_mut(&[n + u, x, y]), n, &t);
            }
        }
    }
    let mut op = RatMatrix::zeros(total, total);
    let phi = a.operator().matrix();
    for i in 0..n {
        for j in 0..n {
            op[(i, j)] = phi[(i, j)].clone();
        }
    }
    for i in 0..m {
        for j in 0..m {
            op[(n + i, n + j)] = r.phi_v()[(i, j)].clone();
        }
        if let Some(chi) = chi {
            for j in 0..n {
                op[(n + i, j)] = chi[(i, j)].clone();
            }
        }
    }
    MdlyAlgebra::new(
        LyAlgebra::from_tensors(bin, ter).expect("total tensors are square"),
        ModifiedOperator::new(a.lambda().clone(), op).expect("square"),
    )
    .expect("shapes agree")
}

/// `𝔤 ⋉ V` with operator `φ ⊕ φ_V` and the common λ.
pub fn semidirect_product(a: &MdlyAlgebra, r: &Representation) -> Result<MdlyAlgebra> {
    check_shapes(a, r)?;
    Ok(assemble_total(a, r, None, None, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::{rat, unit_vec};

    fn ex24() -> MdlyAlgebra {
        catalog::two_dim_mdly(rat(1), rat(2), rat(3))
    }

    #[test]
    fn adjoint_of_two_dim_example() {
        let a = ex24();
        let r = adjoint_representation(&a);
        // ad(e1)(e2) = [e1,e2] = e1
        assert_eq!(r.rho(0).column(1), unit_vec(2, 0));
        // θ(e2,e2)e1 = {e1,e2,e2} = e1
        assert_eq!(r.theta(1, 1).column(0), unit_vec(2, 0));
        assert!(verify_representation(&a, &r).unwrap().is_empty());
    }

    #[test]
    fn adjoint_of_three_dim_example() {
        let a = catalog::three_dim_mdly(rat(1), rat(2), rat(0), rat(7), rat(11), rat(13));
        let r = adjoint_representation(&a);
        let d = r.dee(0, 1);
        assert_eq!(d.column(0), unit_vec(3, 2));
        assert!(d.column(1).iter().all(Zero::is_zero));
        assert!(d.column(2).iter().all(Zero::is_zero));
        assert!(verify_representation(&a, &r).unwrap().is_empty());
    }

    #[test]
    fn zero_and_abelian_cases() {
        let a = ex24();
        assert!(verify_representation(&a, &Representation::zero(2, 3))
            .unwrap()
            .is_empty());
        let ab = catalog::abelian_mdly(3, rat(5));
        let r = adjoint_representation(&ab);
        assert!((0..3).all(|i| r.rho(i).is_zero()));
    }

    #[test]
    fn perturbed_phi_v_is_caught() {
        let a = ex24();
        let r = adjoint_representation(&a);
        let mut phi_v = r.phi_v().clone();
        phi_v[(0, 0)] += rat(1);
        let report = verify_representation(&a, &r.with_phi_v(phi_v).unwrap()).unwrap();
        assert!(report.mentions("module-operator-rho") || report.mentions("module-operator-theta"));
    }

    #[test]
    fn derived_dee_matches_adjoint() {
        let a = ex24();
        let adj = adjoint_representation(&a);
        let r = Representation::with_derived_dee(
            a.algebra(),
            2,
            adj.rho_all().to_vec(),
            adj.theta_all().to_vec(),
            adj.phi_v().clone(),
        )
        .unwrap();
        assert_eq!(r.dee_all(), adj.dee_all());
    }

    #[test]
    fn shift_cases() {
        let a = ex24();
        let r = adjoint_representation(&a);
        let s = shift_representation(&a, &r).unwrap();
        assert_eq!(
            s.representation.phi_v(),
            &r.phi_v().add(&RatMatrix::identity(2))
        );
        assert!(verify_shifted(&s).unwrap().is_empty());

        let z = Representation::zero(2, 2);
        let s = shift_representation(&a, &z).unwrap();
        assert_eq!(s.representation.phi_v(), &RatMatrix::identity(2));
        assert!(verify_shifted(&s).unwrap().is_empty());

        let a0 = catalog::two_dim_mdly(rat(0), rat(2), rat(3));
        let r0 = adjoint_representation(&a0);
        let s0 = shift_representation(&a0, &r0).unwrap();
        assert_eq!(s0.representation, r0);
        assert_eq!(s0.algebra, a0);
    }

    #[test]
    fn semidirect_products() {
        let a = ex24();
        let sd = semidirect_product(&a, &adjoint_representation(&a)).unwrap();
        assert_eq!(sd.dim(), 4);
        assert!(sd.verify().is_empty());

        let b = catalog::three_dim_mdly(rat(1), rat(2), rat(0), rat(7), rat(11), rat(13));
        let sd = semidirect_product(&b, &Representation::zero(3, 1)).unwrap();
        assert!(sd.verify().is_empty());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(&sd.algebra().bracket_basis(i, j)[..3], b.algebra().bracket_basis(i, j));
                assert!(sd.algebra().bracket_basis(i, j)[3].is_zero());
            }
        }
        // V is central for the zero module
        for i in 0..4 {
            assert!(sd.algebra().bracket_basis(i, 3).iter().all(Zero::is_zero));
        }
    }
}
