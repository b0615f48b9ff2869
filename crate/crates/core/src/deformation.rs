//! Formal deformations `f_t = Σ f_i tⁱ`, `g_t = Σ g_i tⁱ`, `φ_t = Σ φ_i tⁱ`
//! truncated at a finite order, with `f_0`, `g_0`, `φ_0` the base structure.

use std::fmt;

use crate::algebra::MdlyAlgebra;
use crate::cochain::{Complex, LyCochain, MdlyCochain};
use crate::cohomology::ComplexKind;
use crate::error::{Error, Result};
use crate::linalg::{add_vec, axpy, rat, sub_vec, zero_vec, RatMatrix, Rational};
use crate::report::Report;
use crate::representation::adjoint_representation;
use crate::tensor::{tuples, Tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedDeformation {
    base: MdlyAlgebra,
    f: Vec<Tensor>,
    g: Vec<Tensor>,
    phi: Vec<RatMatrix>,
}

impl TruncatedDeformation {
    /// `f`, `g`, `phi` hold the coefficients of `t¹..t^N`.
    pub fn new(base: MdlyAlgebra, f: Vec<Tensor>, g: Vec<Tensor>, phi: Vec<RatMatrix>) -> Result<Self> {
        let n = base.dim();
        let order = f.len();
        if order == 0 {
            return Err(Error::DimensionMismatch {
                context: "deformation order must be at least 1",
                expected: 1,
                found: 0,
            });
        }
        for (len, ctx) in [(g.len(), "number of ternary terms"), (phi.len(), "number of operator terms")] {
            if len != order {
                return Err(Error::DimensionMismatch {
                    context: ctx,
                    expected: order,
                    found: len,
                });
            }
        }
        for t in &f {
            shape_check(t, (n, 2, n), "binary deformation term")?;
        }
        for t in &g {
            shape_check(t, (n, 3, n), "ternary deformation term")?;
        }
        for m in &phi {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch {
                    context: "operator deformation term",
                    expected: n,
                    found: if m.rows() != n { m.rows() } else { m.cols() },
                });
            }
        }
        Ok(Self { base, f, g, phi })
    }

    /// All higher terms zero.
    pub fn trivial(base: MdlyAlgebra, order: usize) -> Result<Self> {
        let n = base.dim();
        Self::new(
            base,
            vec![Tensor::zeros(n, 2, n); order],
            vec![Tensor::zeros(n, 3, n); order],
            vec![RatMatrix::zeros(n, n); order],
        )
    }

    /// An order-1 deformation whose infinitesimal is the given degree-2 cochain.
    pub fn from_infinitesimal(base: MdlyAlgebra, c: &MdlyCochain) -> Result<Self> {
        let (f, g) = c.top().to_tensors()?;
        let phi = c
            .shadow()
            .ok_or(Error::UnsupportedDegree {
                degree: c.degree(),
                reason: "an infinitesimal is a degree-2 cochain".into(),
            })?
            .to_matrix()?;
        Self::new(base, vec![f], vec![g], vec![phi])
    }

    pub fn base(&self) -> &MdlyAlgebra {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.f.len()
    }

    /// `f_i` for `0 ≤ i ≤ N`.
    pub fn f(&self, i: usize) -> &Tensor {
        if i == 0 {
            self.base.algebra().binary()
        } else {
            &self.f[i - 1]
        }
    }

    pub fn g(&self, i: usize) -> &Tensor {
        if i == 0 {
            self.base.algebra().ternary()
        } else {
            &self.g[i - 1]
        }
    }

    pub fn phi(&self, i: usize) -> &RatMatrix {
        if i == 0 {
            self.base.operator().matrix()
        } else {
            &self.phi[i - 1]
        }
    }

    /// `((f_1, g_1), φ_1)` as a degree-2 cochain with adjoint coefficients.
    /// Fails when `f_1` or `g_1` is not antisymmetric.
    pub fn infinitesimal(&self) -> Result<MdlyCochain> {
        let top = LyCochain::from_tensors(&self.f[0], &self.g[0])?;
        let shadow = LyCochain::from_linear_map(&self.phi[0]);
        MdlyCochain::new(top, Some(shadow))
    }
}

fn shape_check(t: &Tensor, want: (usize, usize, usize), ctx: &'static str) -> Result<()> {
    let got = t.shape();
    if got != want {
        let (expected, found) = if got.0 != want.0 { (want.0, got.0) } else { (want.2, got.2) };
        return Err(Error::DimensionMismatch {
            context: ctx,
            expected,
            found,
        });
    }
    Ok(())
}

/// One report per order `0..=N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationReport {
    pub orders: Vec<Report>,
}

impl DeformationReport {
    pub fn passes(&self, n: usize) -> bool {
        self.orders[n].is_empty()
    }

    pub fn all_pass(&self) -> bool {
        self.orders.iter().all(Report::is_empty)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.orders.iter().position(|r| !r.is_empty())
    }
}

impl fmt::Display for DeformationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, r) in self.orders.iter().enumerate() {
            if r.is_empty() {
                writeln!(f, "order {n}: ok")?;
            } else {
                writeln!(f, "order {n}: {} violation(s)", r.total())?;
                write!(f, "{r}")?;
            }
        }
        Ok(())
    }
}

/// Checks the coefficient of `tⁿ` in every defining identity, for each
/// `n ≤ N`.
pub fn verify_deformation(d: &TruncatedDeformation) -> DeformationReport {
    DeformationReport {
        orders: (0..=d.order()).map(|n| verify_order(d, n)).collect(),
    }
}

fn verify_order(d: &TruncatedDeformation, n: usize) -> Report {
    let dim = d.base.dim();
    let lambda = d.base.lambda().clone();
    let two_lambda = &lambda * rat(2);
    let fs: Vec<&Tensor> = (0..=n).map(|i| d.f(i)).collect();
    let gs: Vec<&Tensor> = (0..=n).map(|i| d.g(i)).collect();
    let ps: Vec<&RatMatrix> = (0..=n).map(|i| d.phi(i)).collect();
    let mut report = Report::new();

    for i in 0..dim {
        for j in 0..dim {
            report.check("LY1", &[i, j], add_vec(fs[n].get(&[i, j]), fs[n].get(&[j, i])));
            for k in 0..dim {
                report.check(
                    "LY2",
                    &[i, j, k],
                    add_vec(gs[n].get(&[i, j, k]), gs[n].get(&[j, i, k])),
                );
            }
        }
    }

    for w in tuples(dim, 3) {
        let (x, y, z) = (w[0], w[1], w[2]);
        let mut r = zero_vec(dim);
        for (p, q, s) in [(x, y, z), (z, x, y), (y, z, x)] {
            for i in 0..=n {
                r = add_vec(&r, &fs[i].eval_with_vector(&[0, s], 0, fs[n - i].get(&[p, q])));
            }
            r = add_vec(&r, gs[n].get(&[p, q, s]));
        }
        report.check("LY3", &w, r);
    }

    for w in tuples(dim, 4) {
        let (x, y, z, a) = (w[0], w[1], w[2], w[3]);
        let mut r = zero_vec(dim);
        for (p, q, s) in [(x, y, z), (z, x, y), (y, z, x)] {
            for i in 0..=n {
                r = add_vec(&r, &gs[i].eval_with_vector(&[0, s, a], 0, fs[n - i].get(&[p, q])));
            }
        }
        report.check("LY4", &w, r);
    }

    for w in tuples(dim, 4) {
        let (a, b, x, y) = (w[0], w[1], w[2], w[3]);
        let mut r = zero_vec(dim);
        for i in 0..=n {
            let j = n - i;
            r = add_vec(&r, &gs[i].eval_with_vector(&[a, b, 0], 2, fs[j].get(&[x, y])));
            r = sub_vec(&r, &fs[i].eval_with_vector(&[0, y], 0, gs[j].get(&[a, b, x])));
            r = sub_vec(&r, &fs[i].eval_with_vector(&[x, 0], 1, gs[j].get(&[a, b, y])));
        }
        report.check("LY5", &w, r);
    }

    for w in tuples(dim, 5) {
        let (a, b, x, y, z) = (w[0], w[1], w[2], w[3], w[4]);
        let mut r = zero_vec(dim);
        for i in 0..=n {
            let j = n - i;
            r = add_vec(&r, &gs[i].eval_with_vector(&[a, b, 0], 2, gs[j].get(&[x, y, z])));
            r = sub_vec(&r, &gs[i].eval_with_vector(&[0, y, z], 0, gs[j].get(&[a, b, x])));
            r = sub_vec(&r, &gs[i].eval_with_vector(&[x, 0, z], 1, gs[j].get(&[a, b, y])));
            r = sub_vec(&r, &gs[i].eval_with_vector(&[x, y, 0], 2, gs[j].get(&[a, b, z])));
        }
        report.check("LY6", &w, r);
    }

    let cols: Vec<Vec<Vec<Rational>>> = ps
        .iter()
        .map(|m| (0..dim).map(|j| m.column(j)).collect())
        .collect();

    for x in 0..dim {
        for y in 0..dim {
            let mut r = zero_vec(dim);
            for i in 0..=n {
                let j = n - i;
                r = add_vec(&r, &ps[i].mul_vec(fs[j].get(&[x, y])).unwrap());
                r = sub_vec(&r, &fs[i].eval_with_vector(&[0, y], 0, &cols[j][x]));
                r = sub_vec(&r, &fs[i].eval_with_vector(&[x, 0], 1, &cols[j][y]));
            }
            axpy(&mut r, &-&lambda, fs[n].get(&[x, y]));
            report.check("operator-binary", &[x, y], r);
        }
    }

    for w in tuples(dim, 3) {
        let (x, y, z) = (w[0], w[1], w[2]);
        let mut r = zero_vec(dim);
        for i in 0..=n {
            let j = n - i;
            r = add_vec(&r, &ps[i].mul_vec(gs[j].get(&w)).unwrap());
            r = sub_vec(&r, &gs[i].eval_with_vector(&[0, y, z], 0, &cols[j][x]));
            r = sub_vec(&r, &gs[i].eval_with_vector(&[x, 0, z], 1, &cols[j][y]));
            r = sub_vec(&r, &gs[i].eval_with_vector(&[x, y, 0], 2, &cols[j][z]));
        }
        axpy(&mut r, &-&two_lambda, gs[n].get(&w));
        report.check("operator-ternary", &w, r);
    }
    report
}

/// Is the infinitesimal an admissible 2-cocycle of the adjoint complex?
/// Non-antisymmetric first-order terms are not cochains and give `false`.
pub fn infinitesimal_cocycle_check(d: &TruncatedDeformation) -> Result<bool> {
    let c = match d.infinitesimal() {
        Ok(c) => c,
        Err(Error::AntisymmetryConflict(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    let rep = adjoint_representation(&d.base);
    Complex::new(&d.base, &rep)?.is_cocycle(&c)
}

/// Transports `d` along `Ψ_t = Id + tΨ₁`:
/// `f'_t = Ψ_t ∘ f_t ∘ (Ψ_t⁻¹ ⊗ Ψ_t⁻¹)`, likewise for `g_t` and `φ_t`,
/// with `Ψ_t⁻¹ = Σ (−tΨ₁)^k` truncated at the order of `d`. The new
/// infinitesimal differs from the old one by `∂¹(Ψ₁)`.
pub fn apply_equivalence_order1(d: &TruncatedDeformation, psi1: &RatMatrix) -> Result<TruncatedDeformation> {
    let dim = d.base.dim();
    if psi1.rows() != dim || psi1.cols() != dim {
        return Err(Error::DimensionMismatch {
            context: "equivalence map",
            expected: dim,
            found: if psi1.rows() != dim { psi1.rows() } else { psi1.cols() },
        });
    }
    let order = d.order();
    let fwd = |i: usize| -> Option<RatMatrix> {
        match i {
            0 => Some(RatMatrix::identity(dim)),
            1 => Some(psi1.clone()),
            _ => None,
        }
    };
    let neg = psi1.scale(&rat(-1));
    let mut inv = vec![RatMatrix::identity(dim)];
    for k in 1..=order {
        inv.push(inv[k - 1].try_mul(&neg)?);
    }
    // inv_cols[k][a] = Ψ⁻¹_k(e_a)
    let inv_cols: Vec<Vec<Vec<Rational>>> = inv
        .iter()
        .map(|m| (0..dim).map(|a| m.column(a)).collect())
        .collect();

    let mut f_new = Vec::with_capacity(order);
    let mut g_new = Vec::with_capacity(order);
    let mut phi_new = Vec::with_capacity(order);
    for n in 1..=order {
        let mut f = Tensor::zeros(dim, 2, dim);
        for a in 0..dim {
            for b in 0..dim {
                let mut acc = zero_vec(dim);
                for i in 0..=n.min(1) {
                    let p = fwd(i).unwrap();
                    for j in 0..=n - i {
                        for k in 0..=n - i - j {
                            let l = n - i - j - k;
                            let v = d.f(j).eval(&[&inv_cols[k][a], &inv_cols[l][b]]);
                            acc = add_vec(&acc, &p.mul_vec(&v)?);
                        }
                    }
                }
                f.set(&[a, b], &acc);
            }
        }
        let mut g = Tensor::zeros(dim, 3, dim);
        for w in tuples(dim, 3) {
            let mut acc = zero_vec(dim);
            for i in 0..=n.min(1) {
                let p = fwd(i).unwrap();
                for j in 0..=n - i {
                    for k in 0..=n - i - j {
                        for l in 0..=n - i - j - k {
                            let m = n - i - j - k - l;
                            let v = d
                                .g(j)
                                .eval(&[&inv_cols[k][w[0]], &inv_cols[l][w[1]], &inv_cols[m][w[2]]]);
                            acc = add_vec(&acc, &p.mul_vec(&v)?);
                        }
                    }
                }
            }
            g.set(&w, &acc);
        }
        let mut phi = RatMatrix::zeros(dim, dim);
        for i in 0..=n.min(1) {
            let p = fwd(i).unwrap();
            for j in 0..=n - i {
                let k = n - i - j;
                phi = phi.add(&p.try_mul(d.phi(j))?.try_mul(&inv[k])?);
            }
        }
        f_new.push(f);
        g_new.push(g);
        phi_new.push(phi);
    }
    TruncatedDeformation::new(d.base.clone(), f_new, g_new, phi_new)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rigidity {
    /// `dim H² = 0`, so every formal deformation is trivial.
    Rigid,
    /// `dim H² > 0`; nothing is claimed either way.
    Inconclusive { dim_h2: usize },
}

impl fmt::Display for Rigidity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rigidity::Rigid => write!(f, "rigid (dimH2 = 0)"),
            Rigidity::Inconclusive { dim_h2 } => write!(f, "inconclusive: dimH2 = {dim_h2} > 0"),
        }
    }
}

/// Rigidity verdict from the second adjoint cohomology.
pub fn rigidity_report(a: &MdlyAlgebra) -> Result<Rigidity> {
    let rep = adjoint_representation(a);
    let h = Complex::new(a, &rep)?.cohomology(ComplexKind::Mdly, 2, false)?;
    Ok(if h.dim_h == 0 {
        Rigidity::Rigid
    } else {
        Rigidity::Inconclusive { dim_h2: h.dim_h }
    })
}
