//! Lie-Yamaguti algebras given by structure constants, modified
//! λ-differential operators on them, and the identity checks for both.
//!
//! Conventions used throughout the crate:
//!
//! * `binary.get(&[i, j])` holds the coordinates of `[e_i, e_j]`,
//!   `ternary.get(&[i, j, k])` those of `{e_i, e_j, e_k}`.
//! * Operator matrices act on columns: `φ(e_j) = Σ_i M[i][j] e_i`.
//!
//! Every identity is multilinear, so checking it on all basis tuples is a
//! complete check.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    add_vec, axpy, kernel_basis, rat, solve, sub_vec, unit_vec, zero_vec, RatMatrix, Rational,
    Solution,
};
use crate::report::Report;
use crate::tensor::{tuples, Tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyAlgebra {
    dim: usize,
    binary: Tensor,
    ternary: Tensor,
}

impl LyAlgebra {
    /// Wraps raw structure tensors. Only shapes are checked here; the
    /// antisymmetries and the remaining axioms are reported by [`verify_lya`].
    pub fn from_tensors(binary: Tensor, ternary: Tensor) -> Result<Self> {
        let dim = binary.dim();
        let expect = |t: &Tensor, arity: usize, ctx: &'static str| -> Result<()> {
            if t.dim() != dim || t.out_dim() != dim {
                return Err(Error::DimensionMismatch {
                    context: ctx,
                    expected: dim,
                    found: if t.dim() != dim { t.dim() } else { t.out_dim() },
                });
            }
            if t.arity() != arity {
                return Err(Error::DimensionMismatch {
                    context: ctx,
                    expected: arity,
                    found: t.arity(),
                });
            }
            Ok(())
        };
        expect(&binary, 2, "binary bracket tensor")?;
        expect(&ternary, 3, "ternary bracket tensor")?;
        Ok(Self {
            dim,
            binary,
            ternary,
        })
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            dim,
            binary: Tensor::zeros(dim, 2, dim),
            ternary: Tensor::zeros(dim, 3, dim),
        }
    }

    pub fn builder(dim: usize) -> LyAlgebraBuilder {
        LyAlgebraBuilder::new(dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn binary(&self) -> &Tensor {
        &self.binary
    }

    pub fn ternary(&self) -> &Tensor {
        &self.ternary
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        self.binary.get(&[i, j])
    }

    pub fn triple_basis(&self, i: usize, j: usize, k: usize) -> &[Rational] {
        self.ternary.get(&[i, j, k])
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.binary.eval(&[x, y])
    }

    pub fn triple(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        self.ternary.eval(&[x, y, z])
    }

    pub fn verify(&self) -> Report {
        verify_lya(self)
    }
}

/// Assembles structure constants from sparse entries, filling in the
/// antisymmetric partners and rejecting inconsistent redundant entries.
#[derive(Debug, Clone)]
pub struct LyAlgebraBuilder {
    dim: usize,
    binary: Tensor,
    ternary: Tensor,
    binary_set: Vec<bool>,
    ternary_set: Vec<bool>,
}

impl LyAlgebraBuilder {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            binary: Tensor::zeros(dim, 2, dim),
            ternary: Tensor::zeros(dim, 3, dim),
            binary_set: vec![false; dim * dim],
            ternary_set: vec![false; dim * dim * dim],
        }
    }

    fn check_value(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "bracket value length",
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Sets `[e_i, e_j] = value` (and `[e_j, e_i] = -value`).
    pub fn bracket(mut self, i: usize, j: usize, value: Vec<Rational>) -> Result<Self> {
        self.binary.check_index(&[i, j])?;
        self.check_value(&value)?;
        set_antisymmetric(
            &mut self.binary,
            &mut self.binary_set,
            &[i, j],
            value,
            self.dim,
        )?;
        Ok(self)
    }

    /// Sets `{e_i, e_j, e_k} = value` (and `{e_j, e_i, e_k} = -value`).
    pub fn triple(mut self, i: usize, j: usize, k: usize, value: Vec<Rational>) -> Result<Self> {
        self.ternary.check_index(&[i, j, k])?;
        self.check_value(&value)?;
        set_antisymmetric(
            &mut self.ternary,
            &mut self.ternary_set,
            &[i, j, k],
            value,
            self.dim,
        )?;
        Ok(self)
    }

    pub fn build(self) -> LyAlgebra {
        LyAlgebra {
            dim: self.dim,
            binary: self.binary,
            ternary: self.ternary,
        }
    }
}

fn flat_index(idx: &[usize], dim: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * dim + i)
}

/// Writes `value` at `idx` and its negation at `idx` with the first two slots
/// swapped. Shared by the algebra builder and the document layer.
pub(crate) fn set_antisymmetric(
    t: &mut Tensor,
    set: &mut [bool],
    idx: &[usize],
    value: Vec<Rational>,
    dim: usize,
) -> Result<()> {
    let conflict = || Error::AntisymmetryConflict(idx.to_vec());
    if idx[0] == idx[1] {
        if value.iter().any(|x| !x.is_zero()) {
            return Err(conflict());
        }
        return Ok(());
    }
    let mut swapped = idx.to_vec();
    swapped.swap(0, 1);
    let neg: Vec<Rational> = value.iter().map(|x| -x).collect();
    let here = flat_index(idx, dim);
    let there = flat_index(&swapped, dim);
    if (set[here] && t.get(idx) != value.as_slice())
        || (set[there] && t.get(&swapped) != neg.as_slice())
    {
        return Err(conflict());
    }
    t.set(idx, &value);
    t.set(&swapped, &neg);
    set[here] = true;
    set[there] = true;
    Ok(())
}

/// Checks LY1–LY6 on every basis tuple.
pub fn verify_lya(a: &LyAlgebra) -> Report {
    let n = a.dim;
    let b = &a.binary;
    let t = &a.ternary;
    let mut report = Report::new();

    for i in 0..n {
        for j in 0..n {
            report.check("LY1", &[i, j], add_vec(b.get(&[i, j]), b.get(&[j, i])));
            for k in 0..n {
                report.check(
                    "LY2",
                    &[i, j, k],
                    add_vec(t.get(&[i, j, k]), t.get(&[j, i, k])),
                );
            }
        }
    }

    // LY3: cyclic [[x,y],z] + cyclic {x,y,z} = 0
    for w in tuples(n, 3) {
        let (x, y, z) = (w[0], w[1], w[2]);
        let mut r = zero_vec(n);
        for (p, q, s) in [(x, y, z), (z, x, y), (y, z, x)] {
            let inner = b.get(&[p, q]);
            r = add_vec(&r, &b.eval_with_vector(&[0, s], 0, inner));
            r = add_vec(&r, t.get(&[p, q, s]));
        }
        report.check("LY3", &w, r);
    }

    // LY4: cyclic {[x,y],z,a} = 0
    for w in tuples(n, 4) {
        let (x, y, z, u) = (w[0], w[1], w[2], w[3]);
        let mut r = zero_vec(n);
        for (p, q, s) in [(x, y, z), (z, x, y), (y, z, x)] {
            let inner = b.get(&[p, q]);
            r = add_vec(&r, &t.eval_with_vector(&[0, s, u], 0, inner));
        }
        report.check("LY4", &w, r);
    }

    // LY5: {a,b,[x,y]} = [{a,b,x},y] + [x,{a,b,y}]
    for w in tuples(n, 4) {
        let (p, q, x, y) = (w[0], w[1], w[2], w[3]);
        let lhs = t.eval_with_vector(&[p, q, 0], 2, b.get(&[x, y]));
        let mut rhs = b.eval_with_vector(&[0, y], 0, t.get(&[p, q, x]));
        rhs = add_vec(&rhs, &b.eval_with_vector(&[x, 0], 1, t.get(&[p, q, y])));
        report.check("LY5", &w, sub_vec(&lhs, &rhs));
    }

    // LY6: {a,b,{x,y,z}} = {{a,b,x},y,z} + {x,{a,b,y},z} + {x,y,{a,b,z}}
    for w in tuples(n, 5) {
        let (p, q, x, y, z) = (w[0], w[1], w[2], w[3], w[4]);
        let lhs = t.eval_with_vector(&[p, q, 0], 2, t.get(&[x, y, z]));
        let mut rhs = t.eval_with_vector(&[0, y, z], 0, t.get(&[p, q, x]));
        rhs = add_vec(&rhs, &t.eval_with_vector(&[x, 0, z], 1, t.get(&[p, q, y])));
        rhs = add_vec(&rhs, &t.eval_with_vector(&[x, y, 0], 2, t.get(&[p, q, z])));
        report.check("LY6", &w, sub_vec(&lhs, &rhs));
    }
    report
}

/// A linear map `φ` on the algebra together with its parameter `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModifiedOperator {
    lambda: Rational,
    matrix: RatMatrix,
}

impl ModifiedOperator {
    pub fn new(lambda: Rational, matrix: RatMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                context: "operator matrix must be square",
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        Ok(Self { lambda, matrix })
    }

    /// The zero map with the given `λ`.
    pub fn zero(dim: usize, lambda: Rational) -> Self {
        Self {
            lambda,
            matrix: RatMatrix::zeros(dim, dim),
        }
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(x).expect("operator applied to wrong-length vector")
    }

    /// `φ(e_j)`.
    pub fn column(&self, j: usize) -> Vec<Rational> {
        self.matrix.column(j)
    }
}

fn check_operator_shape(a: &LyAlgebra, m: &RatMatrix) -> Result<()> {
    if !m.is_square() || m.rows() != a.dim() {
        return Err(Error::DimensionMismatch {
            context: "operator matrix vs algebra dimension",
            expected: a.dim(),
            found: if m.rows() != a.dim() { m.rows() } else { m.cols() },
        });
    }
    Ok(())
}

fn check_operator_identities(
    a: &LyAlgebra,
    m: &RatMatrix,
    lambda: &Rational,
    labels: (&'static str, &'static str),
) -> Report {
    let n = a.dim();
    let b = a.binary();
    let t = a.ternary();
    let cols: Vec<Vec<Rational>> = (0..n).map(|j| m.column(j)).collect();
    let two_lambda = lambda * rat(2);
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            let xy = b.get(&[i, j]);
            let lhs = m.mul_vec(xy).unwrap();
            let mut rhs = b.eval_with_vector(&[0, j], 0, &cols[i]);
            rhs = add_vec(&rhs, &b.eval_with_vector(&[i, 0], 1, &cols[j]));
            axpy(&mut rhs, lambda, xy);
            report.check(labels.0, &[i, j], sub_vec(&lhs, &rhs));
        }
    }
    for w in tuples(n, 3) {
        let (i, j, k) = (w[0], w[1], w[2]);
        let xyz = t.get(&w);
        let lhs = m.mul_vec(xyz).unwrap();
        let mut rhs = t.eval_with_vector(&[0, j, k], 0, &cols[i]);
        rhs = add_vec(&rhs, &t.eval_with_vector(&[i, 0, k], 1, &cols[j]));
        rhs = add_vec(&rhs, &t.eval_with_vector(&[i, j, 0], 2, &cols[k]));
        axpy(&mut rhs, &two_lambda, xyz);
        report.check(labels.1, &w, sub_vec(&lhs, &rhs));
    }
    report
}

/// Checks `φ[x,y] = [φx,y] + [x,φy] + λ[x,y]` and
/// `φ{x,y,z} = {φx,y,z} + {x,φy,z} + {x,y,φz} + 2λ{x,y,z}`.
pub fn verify_modified_operator(a: &LyAlgebra, op: &ModifiedOperator) -> Result<Report> {
    check_operator_shape(a, op.matrix())?;
    Ok(check_operator_identities(
        a,
        op.matrix(),
        op.lambda(),
        ("operator-binary", "operator-ternary"),
    ))
}

/// Checks that `d` is a derivation of both brackets.
pub fn verify_derivation(a: &LyAlgebra, d: &RatMatrix) -> Result<Report> {
    check_operator_shape(a, d)?;
    Ok(check_operator_identities(
        a,
        d,
        &Rational::zero(),
        ("derivation-binary", "derivation-ternary"),
    ))
}

/// `φ + λ·Id`, which is a derivation exactly when `φ` is a modified
/// λ-differential operator.
pub fn shift_to_derivation(op: &ModifiedOperator) -> RatMatrix {
    op.matrix()
        .add(&RatMatrix::scalar(op.dim(), op.lambda()))
}

/// A Lie-Yamaguti algebra with a modified λ-differential operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdlyAlgebra {
    algebra: LyAlgebra,
    operator: ModifiedOperator,
}

impl MdlyAlgebra {
    /// Shape-checks the pair; use [`MdlyAlgebra::verify`] for the identities.
    pub fn new(algebra: LyAlgebra, operator: ModifiedOperator) -> Result<Self> {
        check_operator_shape(&algebra, operator.matrix())?;
        Ok(Self { algebra, operator })
    }

    pub fn algebra(&self) -> &LyAlgebra {
        &self.algebra
    }

    pub fn operator(&self) -> &ModifiedOperator {
        &self.operator
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn lambda(&self) -> &Rational {
        self.operator.lambda()
    }

    /// LY1–LY6 plus both operator identities.
    pub fn verify(&self) -> Report {
        let mut r = verify_lya(&self.algebra);
        r.merge(verify_modified_operator(&self.algebra, &self.operator).unwrap());
        r
    }
}

/// The solution set of the operator identities for a fixed `λ`:
/// `particular + span(basis)`.
#[derive(Clone, Debug)]
pub struct OperatorSpace {
    pub lambda: Rational,
    pub particular: RatMatrix,
    pub basis: Vec<RatMatrix>,
}

impl OperatorSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// `particular + Σ c_i basis_i`.
    pub fn sample(&self, coeffs: &[Rational]) -> RatMatrix {
        assert_eq!(coeffs.len(), self.basis.len());
        self.basis
            .iter()
            .zip(coeffs)
            .fold(self.particular.clone(), |acc, (b, c)| acc.add(&b.scale(c)))
    }

    /// Is `m` a member of the solution space?
    pub fn contains(&self, m: &RatMatrix) -> bool {
        let n = self.particular.rows();
        if m.rows() != n || !m.is_square() {
            return false;
        }
        if self.basis.is_empty() {
            return *m == self.particular;
        }
        let cols: Vec<Vec<Rational>> = self.basis.iter().map(|b| b.entries().to_vec()).collect();
        let sys = RatMatrix::from_columns(n * n, &cols).unwrap();
        let rhs = sub_vec(m.entries(), self.particular.entries());
        matches!(solve(&sys, &rhs), Ok(Solution::Particular(_)))
    }
}

/// Linear system whose solutions are exactly the operator matrices
/// (row-major unknowns `M[p][q]` at position `p*n + q`).
pub fn operator_system(a: &LyAlgebra, lambda: &Rational) -> (RatMatrix, Vec<Rational>) {
    let n = a.dim();
    let b = a.binary();
    let t = a.ternary();
    let var = |p: usize, q: usize| p * n + q;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    // φ[e_i,e_j] - [φe_i,e_j] - [e_i,φe_j] = λ[e_i,e_j], coordinate k
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = zero_vec(n * n);
                for p in 0..n {
                    row[var(k, p)] += &b.get(&[i, j])[p];
                    row[var(p, i)] -= &b.get(&[p, j])[k];
                    row[var(p, j)] -= &b.get(&[i, p])[k];
                }
                rows.push(row);
                rhs.push(lambda * &b.get(&[i, j])[k]);
            }
        }
    }
    let two_lambda = lambda * rat(2);
    for w in tuples(n, 3) {
        let (i, j, l) = (w[0], w[1], w[2]);
        for k in 0..n {
            let mut row = zero_vec(n * n);
            for p in 0..n {
                row[var(k, p)] += &t.get(&[i, j, l])[p];
                row[var(p, i)] -= &t.get(&[p, j, l])[k];
                row[var(p, j)] -= &t.get(&[i, p, l])[k];
                row[var(p, l)] -= &t.get(&[i, j, p])[k];
            }
            rows.push(row);
            rhs.push(&two_lambda * &t.get(&[i, j, l])[k]);
        }
    }
    let mut sys = RatMatrix::zeros(rows.len(), n * n);
    for (r, row) in rows.into_iter().enumerate() {
        for (c, x) in row.into_iter().enumerate() {
            sys[(r, c)] = x;
        }
    }
    (sys, rhs)
}

/// All modified λ-differential operators on `a` for the given `λ`.
pub fn enumerate_modified_operators(a: &LyAlgebra, lambda: &Rational) -> OperatorSpace {
    let n = a.dim();
    let (sys, rhs) = operator_system(a, lambda);
    // -λ·Id always solves the system, so the solve cannot be inconsistent
    let particular = match solve(&sys, &rhs).expect("operator system shape") {
        Solution::Particular(x) => RatMatrix::from_entries(n, n, x).unwrap(),
        Solution::Inconsistent => unreachable!("-λ·Id is always a solution"),
    };
    let basis = kernel_basis(&sys)
        .into_iter()
        .map(|v| RatMatrix::from_entries(n, n, v).unwrap())
        .collect();
    OperatorSpace {
        lambda: lambda.clone(),
        particular,
        basis,
    }
}

/// Lie-Yamaguti algebra of a Lie algebra: `{x,y,z} = [[x,y],z]`.
pub fn lya_from_lie(bracket: &Tensor) -> Result<LyAlgebra> {
    let n = bracket.dim();
    if bracket.arity() != 2 || bracket.out_dim() != n {
        return Err(Error::DimensionMismatch {
            context: "Lie bracket tensor",
            expected: n,
            found: bracket.out_dim(),
        });
    }
    if let Some(t) = bracket.first_antisymmetry_defect() {
        return Err(Error::AntisymmetryConflict(t));
    }
    for w in tuples(n, 3) {
        let (x, y, z) = (w[0], w[1], w[2]);
        let mut r = zero_vec(n);
        for (p, q, s) in [(x, y, z), (y, z, x), (z, x, y)] {
            r = add_vec(&r, &bracket.eval_with_vector(&[0, s], 0, bracket.get(&[p, q])));
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(Error::JacobiFailure([x, y, z]));
        }
    }
    let mut ternary = Tensor::zeros(n, 3, n);
    for w in tuples(n, 3) {
        let v = bracket.eval_with_vector(&[0, w[2]], 0, bracket.get(&[w[0], w[1]]));
        ternary.set(&w, &v);
    }
    LyAlgebra::from_tensors(bracket.clone(), ternary)
}

/// Lie-Yamaguti algebra of a left Leibniz algebra
/// (`x⋆(y⋆z) = (x⋆y)⋆z + y⋆(x⋆z)`): `[x,y] = x⋆y − y⋆x`,
/// `{x,y,z} = −(x⋆y)⋆z`.
pub fn lya_from_leibniz(product: &Tensor) -> Result<LyAlgebra> {
    let n = product.dim();
    if product.arity() != 2 || product.out_dim() != n {
        return Err(Error::DimensionMismatch {
            context: "Leibniz product tensor",
            expected: n,
            found: product.out_dim(),
        });
    }
    for w in tuples(n, 3) {
        let (x, y, z) = (w[0], w[1], w[2]);
        let lhs = product.eval_with_vector(&[x, 0], 1, product.get(&[y, z]));
        let mut rhs = product.eval_with_vector(&[0, z], 0, product.get(&[x, y]));
        rhs = add_vec(&rhs, &product.eval_with_vector(&[y, 0], 1, product.get(&[x, z])));
        if lhs != rhs {
            return Err(Error::LeibnizFailure([x, y, z]));
        }
    }
    let mut binary = Tensor::zeros(n, 2, n);
    for w in tuples(n, 2) {
        binary.set(&w, &sub_vec(product.get(&w), product.get(&[w[1], w[0]])));
    }
    let mut ternary = Tensor::zeros(n, 3, n);
    let minus_one = -Rational::one();
    for w in tuples(n, 3) {
        let v = product.eval_with_vector(&[0, w[2]], 0, product.get(&[w[0], w[1]]));
        ternary.set(&w, &v.iter().map(|c| c * &minus_one).collect::<Vec<_>>());
    }
    LyAlgebra::from_tensors(binary, ternary)
}

/// Checks that `eta` (a `dst.dim() x src.dim()` matrix) preserves both
/// brackets and intertwines the operators.
pub fn verify_homomorphism(src: &MdlyAlgebra, dst: &MdlyAlgebra, eta: &RatMatrix) -> Result<Report> {
    if eta.rows() != dst.dim() || eta.cols() != src.dim() {
        return Err(Error::DimensionMismatch {
            context: "homomorphism matrix",
            expected: dst.dim() * src.dim(),
            found: eta.rows() * eta.cols(),
        });
    }
    let n = src.dim();
    let img: Vec<Vec<Rational>> = (0..n).map(|j| eta.column(j)).collect();
    let s = src.algebra();
    let d = dst.algebra();
    let mut report = Report::new();
    for i in 0..n {
        let lhs = dst.operator().apply(&img[i]);
        let rhs = eta.mul_vec(&src.operator().column(i)).unwrap();
        report.check("hom-operator", &[i], sub_vec(&lhs, &rhs));
        for j in 0..n {
            let lhs = eta.mul_vec(s.bracket_basis(i, j)).unwrap();
            let rhs = d.bracket(&img[i], &img[j]);
            report.check("hom-binary", &[i, j], sub_vec(&lhs, &rhs));
            for k in 0..n {
                let lhs = eta.mul_vec(s.triple_basis(i, j, k)).unwrap();
                let rhs = d.triple(&img[i], &img[j], &img[k]);
                report.check("hom-ternary", &[i, j, k], sub_vec(&lhs, &rhs));
            }
        }
    }
    Ok(report)
}

/// Unit vectors `e_0, ..., e_{n-1}`.
pub fn basis_vectors(n: usize) -> Vec<Vec<Rational>> {
    (0..n).map(|i| unit_vec(n, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::{frac, rat};

    #[test]
    fn builder_fills_partner_and_rejects_conflicts() {
        let a = LyAlgebra::builder(2)
            .bracket(1, 0, vec![rat(-1), rat(0)])
            .unwrap()
            .build();
        let b = LyAlgebra::builder(2)
            .bracket(0, 1, vec![rat(1), rat(0)])
            .unwrap()
            .build();
        assert_eq!(a, b);
        let err = LyAlgebra::builder(2)
            .bracket(0, 1, vec![rat(1), rat(0)])
            .unwrap()
            .bracket(1, 0, vec![rat(1), rat(0)])
            .unwrap_err();
        assert_eq!(err, Error::AntisymmetryConflict(vec![1, 0]));
        assert!(LyAlgebra::builder(2)
            .bracket(1, 1, vec![rat(1), rat(0)])
            .is_err());
        // consistent redundancy is accepted
        assert!(LyAlgebra::builder(2)
            .bracket(0, 1, vec![rat(1), rat(0)])
            .unwrap()
            .bracket(1, 0, vec![rat(-1), rat(0)])
            .is_ok());
    }

    #[test]
    fn catalog_algebras_verify() {
        assert!(verify_lya(&catalog::two_dim_algebra()).is_empty());
        assert!(verify_lya(&catalog::three_dim_algebra()).is_empty());
        assert!(verify_lya(&LyAlgebra::abelian(3)).is_empty());
    }

    #[test]
    fn ly5_violation_is_reported() {
        let a = LyAlgebra::builder(2)
            .bracket(0, 1, vec![rat(1), rat(0)])
            .unwrap()
            .triple(0, 1, 1, vec![rat(0), rat(1)])
            .unwrap()
            .build();
        let r = verify_lya(&a);
        assert!(!r.is_empty());
        assert!(r.mentions("LY5"));
    }

    #[test]
    fn raw_tensors_report_antisymmetry() {
        let mut b = Tensor::zeros(2, 2, 2);
        b.set(&[0, 1], &[rat(1), rat(0)]);
        let a = LyAlgebra::from_tensors(b, Tensor::zeros(2, 3, 2)).unwrap();
        assert!(verify_lya(&a).mentions("LY1"));
    }

    #[test]
    fn catalog_operator_families() {
        let a2 = catalog::two_dim_algebra();
        let op = catalog::two_dim_operator(rat(1), rat(2), rat(3));
        assert!(verify_modified_operator(&a2, &op).unwrap().is_empty());
        let a3 = catalog::three_dim_algebra();
        let op = catalog::three_dim_operator(rat(1), rat(2), rat(0), rat(7), rat(11), rat(13));
        assert!(verify_modified_operator(&a3, &op).unwrap().is_empty());
        for a in [&a2, &a3] {
            let id = ModifiedOperator::new(rat(-1), RatMatrix::identity(a.dim())).unwrap();
            assert!(verify_modified_operator(a, &id).unwrap().is_empty());
        }
    }

    #[test]
    fn three_dim_family_needs_k1_zero() {
        let a3 = catalog::three_dim_algebra();
        let op = catalog::three_dim_operator(rat(1), rat(2), rat(5), rat(7), rat(11), rat(13));
        assert_eq!(
            op.matrix(),
            &RatMatrix::from_i64(&[&[-1, 5, 0], &[7, 2, 0], &[11, 13, 2]])
        );
        let r = verify_modified_operator(&a3, &op).unwrap();
        // phi{e1,e2,e2} - ... = -k1 e3, and its antisymmetric partner
        assert_eq!(r.total(), 2);
        let v = &r.violations()[0];
        assert_eq!(v.axiom, "operator-ternary");
        assert_eq!(v.witness, vec![0, 1, 1]);
        assert_eq!(v.residual, vec![rat(0), rat(0), rat(-5)]);
    }

    #[test]
    fn row_convention_fails_for_the_two_dim_family() {
        // the transposed reading of the displayed matrix is not an operator
        let a2 = catalog::two_dim_algebra();
        let op = catalog::two_dim_operator(rat(1), rat(2), rat(3));
        let transposed = ModifiedOperator::new(rat(1), op.matrix().transpose()).unwrap();
        assert!(!verify_modified_operator(&a2, &transposed).unwrap().is_empty());
    }

    #[test]
    fn shift_examples() {
        let id = ModifiedOperator::new(rat(-1), RatMatrix::identity(2)).unwrap();
        assert!(shift_to_derivation(&id).is_zero());
        let op = catalog::two_dim_operator(rat(1), rat(2), rat(3));
        let d = shift_to_derivation(&op);
        assert_eq!(d, RatMatrix::from_i64(&[&[3, 3], &[0, 0]]));
        assert!(verify_derivation(&catalog::two_dim_algebra(), &d)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn operator_space_of_two_dim_example() {
        let a2 = catalog::two_dim_algebra();
        let space = enumerate_modified_operators(&a2, &rat(1));
        assert!(space.dimension() >= 2);
        for (k, k1) in [(0, 0), (2, 3), (-5, 7)] {
            assert!(space.contains(&catalog::two_dim_operator(rat(1), rat(k), rat(k1)).matrix().clone()));
        }
        let abelian = enumerate_modified_operators(&LyAlgebra::abelian(3), &frac(2, 3));
        assert_eq!(abelian.dimension(), 9);
        let a3 = enumerate_modified_operators(&catalog::three_dim_algebra(), &rat(0));
        assert!(a3.contains(&RatMatrix::zeros(3, 3)));
    }

    #[test]
    fn builders_from_lie_and_leibniz() {
        let lie = LyAlgebra::abelian(1);
        let a = lya_from_lie(lie.binary()).unwrap();
        assert!(a.ternary().is_zero());

        let two = catalog::two_dim_lie();
        let a = lya_from_lie(&two).unwrap();
        assert_eq!(a.triple_basis(0, 1, 0), &[rat(0), rat(0)]);
        assert_eq!(a.triple_basis(0, 1, 1), &[rat(1), rat(0)]);
        assert!(verify_lya(&a).is_empty());
        assert!(verify_lya(&lya_from_lie(&catalog::sl2()).unwrap()).is_empty());

        // [e1,e2] = e1, [e2,e3] = e2: the Jacobi sum is e1
        let mut bad = Tensor::zeros(3, 2, 3);
        bad.set(&[0, 1], &[rat(1), rat(0), rat(0)]);
        bad.set(&[1, 0], &[rat(-1), rat(0), rat(0)]);
        bad.set(&[1, 2], &[rat(0), rat(1), rat(0)]);
        bad.set(&[2, 1], &[rat(0), rat(-1), rat(0)]);
        assert!(matches!(lya_from_lie(&bad), Err(Error::JacobiFailure(_))));
    }

    #[test]
    fn leibniz_builder_cases() {
        let z = lya_from_leibniz(&Tensor::zeros(2, 2, 2)).unwrap();
        assert_eq!(z, LyAlgebra::abelian(2));

        let mut nil = Tensor::zeros(2, 2, 2);
        nil.set(&[0, 0], &[rat(0), rat(1)]);
        let a = lya_from_leibniz(&nil).unwrap();
        assert!(a.binary().is_zero());
        assert!(a.ternary().is_zero());

        // Lie algebra viewed as Leibniz: doubled bracket, negated composite
        let sl2 = catalog::sl2();
        let a = lya_from_leibniz(&sl2).unwrap();
        let lie = lya_from_lie(&sl2).unwrap();
        assert_eq!(a.binary(), &sl2.scale(&rat(2)));
        assert_eq!(a.ternary(), &lie.ternary().scale(&rat(-1)));
        assert!(verify_lya(&a).is_empty());

        // a non-Lie left Leibniz algebra: e1⋆e2 = e2
        let mut l = Tensor::zeros(2, 2, 2);
        l.set(&[0, 1], &[rat(0), rat(1)]);
        assert!(verify_lya(&lya_from_leibniz(&l).unwrap()).is_empty());

        // right-Leibniz-only product is rejected: e2⋆e1 = e2
        let mut r = Tensor::zeros(2, 2, 2);
        r.set(&[1, 0], &[rat(0), rat(1)]);
        assert!(matches!(lya_from_leibniz(&r), Err(Error::LeibnizFailure(_))));
    }
}
