//! Abelian extensions `0 → V → 𝔤 ⊕ V → 𝔤 → 0`, stored on the split basis
//! `(e_1..e_n, v_1..v_m)`.

use crate::algebra::{verify_homomorphism, LyAlgebra, MdlyAlgebra, ModifiedOperator};
use crate::cochain::{Complex, LyCochain, MdlyCochain};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, sub_vec, RatMatrix, Rational};
use crate::report::Report;
use crate::representation::{assemble_total, check_shapes, Representation};
use crate::tensor::{tuples, Tensor};

/// `ν : 𝔤 ∧ 𝔤 → V`, `ψ : 𝔤 ∧ 𝔤 ⊗ 𝔤 → V` and `χ : 𝔤 → V` (an `m x n` matrix).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCocycle {
    pub nu: Tensor,
    pub psi: Tensor,
    pub chi: RatMatrix,
}

impl ExtensionCocycle {
    pub fn new(nu: Tensor, psi: Tensor, chi: RatMatrix) -> Result<Self> {
        let (n, m) = (nu.dim(), nu.out_dim());
        let ok = nu.arity() == 2
            && psi.shape() == (n, 3, m)
            && chi.rows() == m
            && chi.cols() == n;
        if !ok {
            return Err(Error::DimensionMismatch {
                context: "extension cocycle blocks",
                expected: n * m,
                found: chi.rows() * chi.cols(),
            });
        }
        Ok(Self { nu, psi, chi })
    }

    pub fn zero(base: usize, module: usize) -> Self {
        Self {
            nu: Tensor::zeros(base, 2, module),
            psi: Tensor::zeros(base, 3, module),
            chi: RatMatrix::zeros(module, base),
        }
    }

    pub fn base_dim(&self) -> usize {
        self.nu.dim()
    }

    pub fn module_dim(&self) -> usize {
        self.nu.out_dim()
    }

    /// `((ν, ψ), χ)` as a degree-2 cochain.
    pub fn to_cochain(&self) -> Result<MdlyCochain> {
        let top = LyCochain::from_tensors(&self.nu, &self.psi)?;
        MdlyCochain::new(top, Some(LyCochain::from_linear_map(&self.chi)))
    }

    pub fn from_cochain(c: &MdlyCochain) -> Result<Self> {
        let (nu, psi) = c.top().to_tensors()?;
        let chi = c
            .shadow()
            .ok_or(Error::UnsupportedDegree {
                degree: c.degree(),
                reason: "extension cocycles have degree 2".into(),
            })?
            .to_matrix()?;
        Self::new(nu, psi, chi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianExtension {
    total: MdlyAlgebra,
    base_dim: usize,
    module_dim: usize,
}

impl AbelianExtension {
    /// Wraps an algebra on `n + m` basis vectors whose last `m` span `V`.
    /// Shapes only; see [`verify_extension`].
    pub fn new(total: MdlyAlgebra, base_dim: usize) -> Result<Self> {
        if base_dim > total.dim() {
            return Err(Error::MalformedExtension(format!(
                "base dimension {base_dim} exceeds total dimension {}",
                total.dim()
            )));
        }
        let module_dim = total.dim() - base_dim;
        Ok(Self {
            total,
            base_dim,
            module_dim,
        })
    }

    pub fn total(&self) -> &MdlyAlgebra {
        &self.total
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    /// `p`: drop the `V` coordinates.
    pub fn projection(&self) -> RatMatrix {
        let (n, m) = (self.base_dim, self.module_dim);
        let mut p = RatMatrix::zeros(n, n + m);
        for i in 0..n {
            p[(i, i)] = Rational::from_integer(1.into());
        }
        p
    }

    /// `i`: `V` into the last `m` coordinates.
    pub fn inclusion(&self) -> RatMatrix {
        let (n, m) = (self.base_dim, self.module_dim);
        let mut inc = RatMatrix::zeros(n + m, m);
        for k in 0..m {
            inc[(n + k, k)] = Rational::from_integer(1.into());
        }
        inc
    }

    /// `s(x) = x + 0`.
    pub fn canonical_section(&self) -> RatMatrix {
        self.projection().transpose()
    }

    /// `s(x) = x + ω(x)` for an `m x n` matrix `ω`.
    pub fn shifted_section(&self, omega: &RatMatrix) -> Result<RatMatrix> {
        let (n, m) = (self.base_dim, self.module_dim);
        if omega.rows() != m || omega.cols() != n {
            return Err(Error::DimensionMismatch {
                context: "section shift",
                expected: m * n,
                found: omega.rows() * omega.cols(),
            });
        }
        let mut s = self.canonical_section();
        for i in 0..m {
            for j in 0..n {
                s[(n + i, j)] = omega[(i, j)].clone();
            }
        }
        Ok(s)
    }

    /// The quotient algebra on the first `n` coordinates.
    pub fn base(&self) -> MdlyAlgebra {
        let n = self.base_dim;
        let t = self.total.algebra();
        let mut bin = Tensor::zeros(n, 2, n);
        let mut ter = Tensor::zeros(n, 3, n);
        for w in tuples(n, 2) {
            bin.set(&w, &t.bracket_basis(w[0], w[1])[..n]);
        }
        for w in tuples(n, 3) {
            ter.set(&w, &t.triple_basis(w[0], w[1], w[2])[..n]);
        }
        let phi = self.total.operator().matrix();
        let mut op = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                op[(i, j)] = phi[(i, j)].clone();
            }
        }
        MdlyAlgebra::new(
            LyAlgebra::from_tensors(bin, ter).expect("square"),
            ModifiedOperator::new(self.total.lambda().clone(), op).expect("square"),
        )
        .expect("shapes agree")
    }

    /// `V` as an abelian algebra with the restricted operator.
    pub fn module(&self) -> MdlyAlgebra {
        let (n, m) = (self.base_dim, self.module_dim);
        let phi = self.total.operator().matrix();
        let mut op = RatMatrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                op[(i, j)] = phi[(n + i, n + j)].clone();
            }
        }
        MdlyAlgebra::new(
            LyAlgebra::abelian(m),
            ModifiedOperator::new(self.total.lambda().clone(), op).expect("square"),
        )
        .expect("shapes agree")
    }
}

/// `V` must be an abelian ideal stable under the operator:
/// every bracket with at least one `V` argument lands in `V`, and those with
/// two or more vanish.
pub fn verify_abelian_ideal(e: &AbelianExtension) -> Report {
    let n = e.base_dim;
    let total = n + e.module_dim;
    let t = e.total.algebra();
    let in_v = |i: usize| i >= n;
    let mut report = Report::new();
    for w in tuples(total, 2) {
        let v = t.bracket_basis(w[0], w[1]);
        match w.iter().filter(|&&i| in_v(i)).count() {
            0 => {}
            1 => report.check("V-ideal", &w, v[..n].to_vec()),
            _ => report.check("V-abelian", &w, v.to_vec()),
        }
    }
    for w in tuples(total, 3) {
        let v = t.triple_basis(w[0], w[1], w[2]);
        match w.iter().filter(|&&i| in_v(i)).count() {
            0 => {}
            1 => report.check("V-ideal", &w, v[..n].to_vec()),
            _ => report.check("V-abelian", &w, v.to_vec()),
        }
    }
    let phi = e.total.operator().matrix();
    for j in n..total {
        report.check("V-operator", &[j], phi.column(j)[..n].to_vec());
    }
    report
}

/// Full check of an extension: the total algebra, the ideal conditions, and
/// that `p` and `i` are homomorphisms.
pub fn verify_extension(e: &AbelianExtension) -> Report {
    let mut r = e.total.verify();
    r.merge(verify_abelian_ideal(e));
    r.merge(verify_homomorphism(&e.total, &e.base(), &e.projection()).expect("shapes"));
    r.merge(verify_homomorphism(&e.module(), &e.total, &e.inclusion()).expect("shapes"));
    r
}

/// `𝔤 ⊕ V` with brackets and operator twisted by `(ν, ψ, χ)`. The result is
/// accepted only if the assembled algebra verifies; a rejection reports the
/// nonzero part of `∂²((ν, ψ), χ)`.
pub fn build_extension(a: &MdlyAlgebra, r: &Representation, c: &ExtensionCocycle) -> Result<AbelianExtension> {
    check_shapes(a, r)?;
    if c.base_dim() != a.dim() || c.module_dim() != r.module_dim() {
        return Err(Error::DimensionMismatch {
            context: "cocycle vs algebra and module",
            expected: a.dim() * r.module_dim(),
            found: c.base_dim() * c.module_dim(),
        });
    }
    let total = assemble_total(a, r, Some(&c.nu), Some(&c.psi), Some(&c.chi));
    let e = AbelianExtension::new(total, a.dim())?;
    let report = verify_extension(&e);
    if report.is_empty() {
        return Ok(e);
    }
    Err(Error::NotCocycle(describe_failure(a, r, c, &report)))
}

fn describe_failure(a: &MdlyAlgebra, r: &Representation, c: &ExtensionCocycle, total: &Report) -> String {
    let first = &total.violations()[0];
    let mut msg = format!(
        "total algebra fails {} ({} violation(s), first at {:?})",
        first.axiom,
        total.total(),
        first.witness.iter().map(|i| i + 1).collect::<Vec<_>>()
    );
    let Ok(cochain) = c.to_cochain() else {
        msg.push_str("; nu or psi is not antisymmetric");
        return msg;
    };
    let Ok(cx) = Complex::new(a, r) else {
        return msg;
    };
    if let Ok(check) = cx.cocycle_check(&cochain) {
        let top = check.residual.top().coords().iter().filter(|x| !num_traits::Zero::is_zero(*x)).count();
        let shadow = check
            .residual
            .shadow()
            .map_or(0, |s| s.coords().iter().filter(|x| !num_traits::Zero::is_zero(*x)).count());
        if top > 0 {
            msg.push_str(&format!("; delta^2(nu,psi) has {top} nonzero coordinate(s)"));
        }
        if shadow > 0 {
            msg.push_str(&format!("; delta^1(chi) + Phi^2(nu,psi) has {shadow} nonzero coordinate(s)"));
        }
        if !check.admissible {
            msg.push_str("; (nu,psi) violates the cyclic admissibility conditions");
        }
    }
    msg
}

/// Representation and cocycle induced by a section `s` (an `(n+m) x n`
/// matrix with `p∘s = Id`).
pub fn cocycle_from_section(e: &AbelianExtension, s: &RatMatrix) -> Result<(Representation, ExtensionCocycle)> {
    let (n, m) = (e.base_dim, e.module_dim);
    if s.rows() != n + m || s.cols() != n {
        return Err(Error::NotSection(format!(
            "expected a {}x{n} matrix, found {}x{}",
            n + m,
            s.rows(),
            s.cols()
        )));
    }
    if e.projection().try_mul(s)? != RatMatrix::identity(n) {
        return Err(Error::NotSection("p∘s is not the identity".into()));
    }
    let t = e.total.algebra();
    let phi = e.total.operator();
    let sx: Vec<Vec<Rational>> = (0..n).map(|j| s.column(j)).collect();
    let unit = |k: usize| {
        let mut v = vec![Rational::from_integer(0.into()); n + m];
        v[n + k] = Rational::from_integer(1.into());
        v
    };
    let v_part = |v: Vec<Rational>, what: &str| -> Result<Vec<Rational>> {
        if !is_zero_vec(&v[..n]) {
            return Err(Error::MalformedExtension(format!("{what} leaves V")));
        }
        Ok(v[n..].to_vec())
    };
    let mat_from = |cols: Vec<Vec<Rational>>| RatMatrix::from_columns(m, &cols).expect("columns of length m");

    let mut rho = Vec::with_capacity(n);
    for x in 0..n {
        let cols = (0..m)
            .map(|u| v_part(t.bracket(&sx[x], &unit(u)), "[s(x), u]"))
            .collect::<Result<Vec<_>>>()?;
        rho.push(mat_from(cols));
    }
    let mut theta = Vec::with_capacity(n * n);
    let mut dee = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let th = (0..m)
                .map(|u| v_part(t.triple(&unit(u), &sx[x], &sx[y]), "{u, s(x), s(y)}"))
                .collect::<Result<Vec<_>>>()?;
            let d = (0..m)
                .map(|u| v_part(t.triple(&sx[x], &sx[y], &unit(u)), "{s(x), s(y), u}"))
                .collect::<Result<Vec<_>>>()?;
            theta.push(mat_from(th));
            dee.push(mat_from(d));
        }
    }
    let phi_v = {
        let cols = (0..m)
            .map(|u| v_part(phi.apply(&unit(u)), "the operator on V"))
            .collect::<Result<Vec<_>>>()?;
        mat_from(cols)
    };
    let rep = Representation::new(n, m, rho, theta, dee, phi_v)?;

    let base = e.base();
    let b = base.algebra();
    let mut nu = Tensor::zeros(n, 2, m);
    for w in tuples(n, 2) {
        let lhs = t.bracket(&sx[w[0]], &sx[w[1]]);
        let rhs = s.mul_vec(b.bracket_basis(w[0], w[1]))?;
        nu.set(&w, &v_part(sub_vec(&lhs, &rhs), "nu")?);
    }
    let mut psi = Tensor::zeros(n, 3, m);
    for w in tuples(n, 3) {
        let lhs = t.triple(&sx[w[0]], &sx[w[1]], &sx[w[2]]);
        let rhs = s.mul_vec(b.triple_basis(w[0], w[1], w[2]))?;
        psi.set(&w, &v_part(sub_vec(&lhs, &rhs), "psi")?);
    }
    let chi_cols = (0..n)
        .map(|x| {
            let lhs = phi.apply(&sx[x]);
            let rhs = s.mul_vec(&base.operator().column(x))?;
            v_part(sub_vec(&lhs, &rhs), "chi")
        })
        .collect::<Result<Vec<_>>>()?;
    let chi = mat_from(chi_cols);
    Ok((rep, ExtensionCocycle::new(nu, psi, chi)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// `c1 − c2 = ∂¹ω`; `ω` is an `m x n` matrix.
    Equivalent { witness: RatMatrix },
    Inequivalent,
}

/// Compares the classes of two cocycles.
pub fn classify(
    a: &MdlyAlgebra,
    r: &Representation,
    c1: &ExtensionCocycle,
    c2: &ExtensionCocycle,
) -> Result<Classification> {
    let cx = Complex::new(a, r)?;
    Ok(match cx.cohomologous(&c1.to_cochain()?, &c2.to_cochain()?)? {
        Some(w) => Classification::Equivalent {
            witness: w.to_matrix()?,
        },
        None => Classification::Inequivalent,
    })
}

/// `η_ω(x + u) = x + ω(x) + u`. When `c1 − c2 = ∂¹ω` this is an isomorphism
/// from the extension of `c1` to that of `c2`.
pub fn eta_omega(omega: &RatMatrix) -> RatMatrix {
    let (m, n) = (omega.rows(), omega.cols());
    let mut eta = RatMatrix::identity(n + m);
    for i in 0..m {
        for j in 0..n {
            eta[(n + i, j)] = omega[(i, j)].clone();
        }
    }
    eta
}
