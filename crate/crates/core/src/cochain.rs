//! Cochains of the Yamaguti complex and of the complex of a modified
//! λ-differential algebra, with the maps δ, Φ and ∂.
//!
//! A degree-1 cochain is a linear map `𝔤 → V`. For degree `p + 1 ≥ 2` a
//! cochain is a pair `(f, g)`: `f` takes `p` wedge arguments `x_k ∧ y_k` and
//! `g` takes the same plus one trailing vector. Only canonical wedges
//! `e_i ∧ e_j` with `i < j` are stored; evaluation canonicalizes.
//!
//! Coordinates are laid out as: `f` block, then `g` block; inside a block the
//! multi-index is lexicographic (wedge slots by canonical pair number, then
//! the trailing basis index) and the module coordinate varies fastest.

use num_traits::{One, Zero};

use crate::algebra::{LyAlgebra, MdlyAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, rat, zero_vec, RatMatrix, Rational};
use crate::representation::Representation;
use crate::tensor::{tuples, Tensor};

/// Highest source degree for which δ and ∂ matrices are built without an
/// explicit opt-in (the target of ∂³ is degree 4).
pub const DEFAULT_MAX_DEGREE: usize = 3;

/// Canonical wedge pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// Position of `(i, j)` with `i < j` in [`pair_list`].
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CochainShape {
    base: usize,
    module: usize,
    degree: usize,
}

impl CochainShape {
    pub fn new(base: usize, module: usize, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::UnsupportedDegree {
                degree,
                reason: "cochain degrees start at 1".into(),
            });
        }
        Ok(Self {
            base,
            module,
            degree,
        })
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn module(&self) -> usize {
        self.module
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of wedge slots (`degree - 1`; zero in degree 1).
    pub fn wedges(&self) -> usize {
        self.degree - 1
    }

    fn pair_count(&self) -> usize {
        self.base * self.base.saturating_sub(1) / 2
    }

    fn wedge_tuples(&self) -> usize {
        self.pair_count().pow(self.wedges() as u32)
    }

    pub fn f_len(&self) -> usize {
        if self.degree == 1 {
            self.base * self.module
        } else {
            self.wedge_tuples() * self.module
        }
    }

    pub fn g_len(&self) -> usize {
        if self.degree == 1 {
            0
        } else {
            self.wedge_tuples() * self.base * self.module
        }
    }

    pub fn dim(&self) -> usize {
        self.f_len() + self.g_len()
    }

    /// Arity of the `f` component (`g` takes one more argument).
    pub fn f_arity(&self) -> usize {
        if self.degree == 1 {
            1
        } else {
            2 * self.wedges()
        }
    }

    /// Canonical argument tuples of the `f` block in storage order.
    pub fn f_indices(&self) -> Vec<Vec<usize>> {
        if self.degree == 1 {
            return (0..self.base).map(|i| vec![i]).collect();
        }
        let pairs = pair_list(self.base);
        tuples(pairs.len(), self.wedges())
            .map(|t| t.iter().flat_map(|&p| [pairs[p].0, pairs[p].1]).collect())
            .collect()
    }

    /// Canonical argument tuples of the `g` block in storage order.
    pub fn g_indices(&self) -> Vec<Vec<usize>> {
        if self.degree == 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for head in self.f_indices() {
            for z in 0..self.base {
                let mut t = head.clone();
                t.push(z);
                out.push(t);
            }
        }
        out
    }

    /// Sign and storage offset of a basis argument tuple; `None` when a
    /// wedge slot is degenerate.
    fn locate(&self, part: Part, idx: &[usize]) -> Option<(bool, usize)> {
        if self.degree == 1 {
            debug_assert_eq!(part, Part::F);
            return Some((false, idx[0] * self.module));
        }
        let b = self.pair_count();
        let mut neg = false;
        let mut slot = 0usize;
        for w in 0..self.wedges() {
            let (mut i, mut j) = (idx[2 * w], idx[2 * w + 1]);
            if i == j {
                return None;
            }
            if i > j {
                std::mem::swap(&mut i, &mut j);
                neg = !neg;
            }
            slot = slot * b + pair_index(self.base, i, j);
        }
        match part {
            Part::F => Some((neg, slot * self.module)),
            Part::G => {
                let z = idx[2 * self.wedges()];
                Some((neg, self.f_len() + (slot * self.base + z) * self.module))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    F,
    G,
}

/// An argument: a basis index or an arbitrary vector.
#[derive(Clone, Copy, Debug)]
pub enum Arg<'a> {
    E(usize),
    V(&'a [Rational]),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyCochain {
    shape: CochainShape,
    coords: Vec<Rational>,
}

impl LyCochain {
    pub fn zero(shape: CochainShape) -> Self {
        Self {
            shape,
            coords: zero_vec(shape.dim()),
        }
    }

    pub fn from_coords(shape: CochainShape, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != shape.dim() {
            return Err(Error::DimensionMismatch {
                context: "cochain coordinates",
                expected: shape.dim(),
                found: coords.len(),
            });
        }
        Ok(Self { shape, coords })
    }

    /// The indicator cochain of coordinate `k`.
    pub fn unit(shape: CochainShape, k: usize) -> Self {
        let mut c = Self::zero(shape);
        c.coords[k] = Rational::one();
        c
    }

    /// Degree-1 cochain whose value on `e_j` is column `j` of `m`.
    pub fn from_linear_map(m: &RatMatrix) -> Self {
        let shape = CochainShape::new(m.cols(), m.rows(), 1).expect("degree 1");
        let mut coords = Vec::with_capacity(shape.dim());
        for j in 0..m.cols() {
            coords.extend(m.column(j));
        }
        Self { shape, coords }
    }

    /// Degree-2 cochain from a binary tensor (antisymmetric) and a ternary
    /// tensor (antisymmetric in its first two slots).
    pub fn from_tensors(f: &Tensor, g: &Tensor) -> Result<Self> {
        let (n, m) = (f.dim(), f.out_dim());
        if f.arity() != 2 || g.arity() != 3 || g.dim() != n || g.out_dim() != m {
            return Err(Error::DimensionMismatch {
                context: "degree-2 cochain tensors",
                expected: n,
                found: g.dim(),
            });
        }
        for t in [f, g] {
            if let Some(w) = t.first_antisymmetry_defect() {
                return Err(Error::AntisymmetryConflict(w));
            }
        }
        let shape = CochainShape::new(n, m, 2)?;
        let mut c = Self::zero(shape);
        for idx in shape.f_indices() {
            c.set(Part::F, &idx, f.get(&idx));
        }
        for idx in shape.g_indices() {
            c.set(Part::G, &idx, g.get(&idx));
        }
        Ok(c)
    }

    pub fn shape(&self) -> CochainShape {
        self.shape
    }

    pub fn degree(&self) -> usize {
        self.shape.degree
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coords)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape, other.shape);
        Self {
            shape: self.shape,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape, other.shape);
        Self {
            shape: self.shape,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            shape: self.shape,
            coords: self.coords.iter().map(|x| c * x).collect(),
        }
    }

    /// Writes the value at a basis tuple (any wedge orientation).
    /// Degenerate wedges are silently ignored, since they evaluate to zero.
    pub fn set(&mut self, part: Part, idx: &[usize], value: &[Rational]) {
        let m = self.shape.module;
        if let Some((neg, off)) = self.shape.locate(part, idx) {
            for (k, v) in value.iter().enumerate().take(m) {
                self.coords[off + k] = if neg { -v } else { v.clone() };
            }
        }
    }

    /// Value at a basis tuple.
    pub fn value(&self, part: Part, idx: &[usize]) -> Vec<Rational> {
        let m = self.shape.module;
        match self.shape.locate(part, idx) {
            None => zero_vec(m),
            Some((neg, off)) => {
                let s = &self.coords[off..off + m];
                if neg {
                    s.iter().map(|x| -x).collect()
                } else {
                    s.to_vec()
                }
            }
        }
    }

    /// Multilinear evaluation on vector arguments. The argument count picks
    /// the component: `f` for `2(degree-1)` (or 1 in degree 1), `g` for one
    /// more.
    pub fn eval(&self, args: &[&[Rational]]) -> Result<Vec<Rational>> {
        let part = self.part_for_arity(args.len())?;
        for a in args {
            if a.len() != self.shape.base {
                return Err(Error::DimensionMismatch {
                    context: "cochain argument",
                    expected: self.shape.base,
                    found: a.len(),
                });
            }
        }
        let wrapped: Vec<Arg> = args.iter().map(|a| Arg::V(a)).collect();
        Ok(self.eval_args(part, &wrapped))
    }

    fn part_for_arity(&self, k: usize) -> Result<Part> {
        let fa = self.shape.f_arity();
        if k == fa {
            Ok(Part::F)
        } else if k == fa + 1 && self.shape.degree > 1 {
            Ok(Part::G)
        } else {
            Err(Error::DimensionMismatch {
                context: "cochain arity",
                expected: fa,
                found: k,
            })
        }
    }

    /// Evaluation on mixed basis/vector arguments.
    pub fn eval_args(&self, part: Part, args: &[Arg]) -> Vec<Rational> {
        let mut acc = zero_vec(self.shape.module);
        let mut idx = vec![0usize; args.len()];
        self.expand(part, args, 0, &mut idx, &Rational::one(), &mut acc);
        acc
    }

    fn expand(
        &self,
        part: Part,
        args: &[Arg],
        slot: usize,
        idx: &mut Vec<usize>,
        coeff: &Rational,
        acc: &mut [Rational],
    ) {
        if slot == args.len() {
            if let Some((neg, off)) = self.shape.locate(part, idx) {
                let m = self.shape.module;
                let s = &self.coords[off..off + m];
                if neg {
                    axpy(acc, &-coeff, s);
                } else {
                    axpy(acc, coeff, s);
                }
            }
            return;
        }
        match args[slot] {
            Arg::E(i) => {
                idx[slot] = i;
                self.expand(part, args, slot + 1, idx, coeff, acc);
            }
            Arg::V(v) => {
                for (q, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    idx[slot] = q;
                    self.expand(part, args, slot + 1, idx, &(coeff * c), acc);
                }
            }
        }
    }

    /// Degree-2 cochain as `(f, g)` tensors.
    pub fn to_tensors(&self) -> Result<(Tensor, Tensor)> {
        self.require_degree(2)?;
        let (n, m) = (self.shape.base, self.shape.module);
        let mut f = Tensor::zeros(n, 2, m);
        let mut g = Tensor::zeros(n, 3, m);
        for idx in tuples(n, 2) {
            f.set(&idx, &self.value(Part::F, &idx));
        }
        for idx in tuples(n, 3) {
            g.set(&idx, &self.value(Part::G, &idx));
        }
        Ok((f, g))
    }

    /// Degree-1 cochain as an `m x n` matrix (column convention).
    pub fn to_matrix(&self) -> Result<RatMatrix> {
        self.require_degree(1)?;
        let (n, m) = (self.shape.base, self.shape.module);
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| self.value(Part::F, &[j])).collect();
        RatMatrix::from_columns(m, &cols)
    }

    fn require_degree(&self, d: usize) -> Result<()> {
        if self.shape.degree != d {
            return Err(Error::UnsupportedDegree {
                degree: self.shape.degree,
                reason: format!("expected a degree-{d} cochain"),
            });
        }
        Ok(())
    }
}

/// An element of `C^{p}_LY ⊕ C^{p-1}_LY` (just `C^1_LY` when `p = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdlyCochain {
    top: LyCochain,
    shadow: Option<LyCochain>,
}

impl MdlyCochain {
    pub fn new(top: LyCochain, shadow: Option<LyCochain>) -> Result<Self> {
        let d = top.degree();
        match (&shadow, d) {
            (None, 1) => {}
            (Some(s), d) if d >= 2 && s.degree() == d - 1 => {
                if s.shape.base != top.shape.base || s.shape.module != top.shape.module {
                    return Err(Error::DimensionMismatch {
                        context: "shadow cochain shape",
                        expected: top.shape.base,
                        found: s.shape.base,
                    });
                }
            }
            _ => {
                return Err(Error::UnsupportedDegree {
                    degree: d,
                    reason: "shadow must have degree one less than the top, and exist iff degree >= 2"
                        .into(),
                })
            }
        }
        Ok(Self { top, shadow })
    }

    pub fn zero(base: usize, module: usize, degree: usize) -> Result<Self> {
        let top = LyCochain::zero(CochainShape::new(base, module, degree)?);
        let shadow = if degree >= 2 {
            Some(LyCochain::zero(CochainShape::new(base, module, degree - 1)?))
        } else {
            None
        };
        Ok(Self { top, shadow })
    }

    pub fn dim_of(base: usize, module: usize, degree: usize) -> usize {
        let top = CochainShape::new(base, module, degree).map(|s| s.dim()).unwrap_or(0);
        let shadow = if degree >= 2 {
            CochainShape::new(base, module, degree - 1).map(|s| s.dim()).unwrap_or(0)
        } else {
            0
        };
        top + shadow
    }

    pub fn from_coords(base: usize, module: usize, degree: usize, coords: &[Rational]) -> Result<Self> {
        let expected = Self::dim_of(base, module, degree);
        if coords.len() != expected {
            return Err(Error::DimensionMismatch {
                context: "MDLY cochain coordinates",
                expected,
                found: coords.len(),
            });
        }
        let ts = CochainShape::new(base, module, degree)?;
        let top = LyCochain::from_coords(ts, coords[..ts.dim()].to_vec())?;
        let shadow = if degree >= 2 {
            let ss = CochainShape::new(base, module, degree - 1)?;
            Some(LyCochain::from_coords(ss, coords[ts.dim()..].to_vec())?)
        } else {
            None
        };
        Ok(Self { top, shadow })
    }

    pub fn degree(&self) -> usize {
        self.top.degree()
    }

    pub fn top(&self) -> &LyCochain {
        &self.top
    }

    pub fn shadow(&self) -> Option<&LyCochain> {
        self.shadow.as_ref()
    }

    pub fn coords(&self) -> Vec<Rational> {
        let mut v = self.top.coords.clone();
        if let Some(s) = &self.shadow {
            v.extend(s.coords.iter().cloned());
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.top.is_zero() && self.shadow.as_ref().is_none_or(LyCochain::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            top: self.top.add(&other.top),
            shadow: self.shadow.as_ref().map(|s| s.add(other.shadow.as_ref().unwrap())),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            top: self.top.sub(&other.top),
            shadow: self.shadow.as_ref().map(|s| s.sub(other.shadow.as_ref().unwrap())),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            top: self.top.scale(c),
            shadow: self.shadow.as_ref().map(|s| s.scale(c)),
        }
    }
}

/// Scalar term of Φ on a `k`-argument component.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PhiConvention {
    /// `(k-1)·λ·f`.
    #[default]
    Scaled,
    /// `(k-1)·f`, the coefficient read literally without λ. Kept only to
    /// show that it does not give a complex.
    Unscaled,
}

fn act(m: &RatMatrix, v: &[Rational]) -> Vec<Rational> {
    if is_zero_vec(v) {
        return zero_vec(m.rows());
    }
    m.mul_vec(v).expect("module dimensions agree")
}

fn check_pair(a: &LyAlgebra, r: &Representation, c: &LyCochain) -> Result<()> {
    if c.shape.base != a.dim() || r.base_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            context: "cochain base dimension",
            expected: a.dim(),
            found: c.shape.base,
        });
    }
    if c.shape.module != r.module_dim() {
        return Err(Error::DimensionMismatch {
            context: "cochain module dimension",
            expected: r.module_dim(),
            found: c.shape.module,
        });
    }
    Ok(())
}

fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Arguments for `K_1..K_{n}` (basis wedges) with wedge `skip` removed and
/// wedge `replace` swapped for the given pair of arguments.
fn wedge_args<'a>(
    k: &[(usize, usize)],
    skip: Option<usize>,
    replace: Option<(usize, Arg<'a>, Arg<'a>)>,
) -> Vec<Arg<'a>> {
    let mut out = Vec::with_capacity(2 * k.len());
    for (w, &(x, y)) in k.iter().enumerate() {
        if Some(w) == skip {
            continue;
        }
        match replace {
            Some((l, a, b)) if l == w => {
                out.push(a);
                out.push(b);
            }
            _ => {
                out.push(Arg::E(x));
                out.push(Arg::E(y));
            }
        }
    }
    out
}

/// The Yamaguti coboundary `δ: C^d_LY → C^{d+1}_LY`.
pub fn delta(a: &LyAlgebra, r: &Representation, c: &LyCochain) -> Result<LyCochain> {
    check_pair(a, r, c)?;
    let n = a.dim();
    let m = r.module_dim();
    let out_shape = CochainShape::new(n, m, c.degree() + 1)?;
    let mut out = LyCochain::zero(out_shape);

    if c.degree() == 1 {
        let f = |i: usize| c.value(Part::F, &[i]);
        let fv = |v: &[Rational]| c.eval_args(Part::F, &[Arg::V(v)]);
        for idx in out_shape.f_indices() {
            let (x, y) = (idx[0], idx[1]);
            let mut v = act(r.rho(x), &f(y));
            axpy(&mut v, &rat(-1), &act(r.rho(y), &f(x)));
            axpy(&mut v, &rat(-1), &fv(a.bracket_basis(x, y)));
            out.set(Part::F, &idx, &v);
        }
        for idx in out_shape.g_indices() {
            let (x, y, z) = (idx[0], idx[1], idx[2]);
            let mut v = act(r.dee(x, y), &f(z));
            axpy(&mut v, &rat(1), &act(r.theta(y, z), &f(x)));
            axpy(&mut v, &rat(-1), &act(r.theta(x, z), &f(y)));
            axpy(&mut v, &rat(-1), &fv(a.triple_basis(x, y, z)));
            out.set(Part::G, &idx, &v);
        }
        return Ok(out);
    }

    let p = c.degree() - 1;
    let minus = rat(-1);
    for idx in out_shape.f_indices() {
        let k: Vec<(usize, usize)> = idx.chunks(2).map(|w| (w[0], w[1])).collect();
        let (x, y) = k[p];
        let head = wedge_args(&k[..p], None, None);
        let g_with = |last: Arg| {
            let mut args = head.clone();
            args.push(last);
            c.eval_args(Part::G, &args)
        };
        let mut inner = act(r.rho(x), &g_with(Arg::E(y)));
        axpy(&mut inner, &minus, &act(r.rho(y), &g_with(Arg::E(x))));
        axpy(&mut inner, &minus, &g_with(Arg::V(a.bracket_basis(x, y))));
        let mut v = zero_vec(m);
        axpy(&mut v, &sign(p), &inner);
        for kk in 0..p {
            let rest = c.eval_args(Part::F, &wedge_args(&k, Some(kk), None));
            axpy(&mut v, &sign(kk), &act(r.dee(k[kk].0, k[kk].1), &rest));
        }
        substitution_terms(a, c, Part::F, &k, None, &mut v);
        out.set(Part::F, &idx, &v);
    }
    for idx in out_shape.g_indices() {
        let z = idx[2 * (p + 1)];
        let k: Vec<(usize, usize)> = idx[..2 * (p + 1)].chunks(2).map(|w| (w[0], w[1])).collect();
        let (x, y) = k[p];
        let head = wedge_args(&k[..p], None, None);
        let g_with = |last: Arg| {
            let mut args = head.clone();
            args.push(last);
            c.eval_args(Part::G, &args)
        };
        let mut inner = act(r.theta(y, z), &g_with(Arg::E(x)));
        axpy(&mut inner, &minus, &act(r.theta(x, z), &g_with(Arg::E(y))));
        let mut v = zero_vec(m);
        axpy(&mut v, &sign(p), &inner);
        for kk in 0..=p {
            let mut args = wedge_args(&k, Some(kk), None);
            args.push(Arg::E(z));
            let rest = c.eval_args(Part::G, &args);
            axpy(&mut v, &sign(kk), &act(r.dee(k[kk].0, k[kk].1), &rest));
        }
        substitution_terms(a, c, Part::G, &k, Some(z), &mut v);
        for kk in 0..=p {
            let t = a.triple_basis(k[kk].0, k[kk].1, z);
            let mut args = wedge_args(&k, Some(kk), None);
            args.push(Arg::V(t));
            // (-1)^k with k 1-based
            axpy(&mut v, &sign(kk + 1), &c.eval_args(Part::G, &args));
        }
        out.set(Part::G, &idx, &v);
    }
    Ok(out)
}

/// `Σ_{k<l} (-1)^k c(.., K̂_k, .., {x_k,y_k,x_l}∧y_l + x_l∧{x_k,y_k,y_l}, ..)`
/// with `k` counted from 1.
fn substitution_terms(
    a: &LyAlgebra,
    c: &LyCochain,
    part: Part,
    k: &[(usize, usize)],
    z: Option<usize>,
    acc: &mut [Rational],
) {
    for kk in 0..k.len() {
        for l in kk + 1..k.len() {
            let (xk, yk) = k[kk];
            let (xl, yl) = k[l];
            let s = sign(kk + 1);
            let t1 = a.triple_basis(xk, yk, xl);
            let t2 = a.triple_basis(xk, yk, yl);
            for (p, q) in [(Arg::V(t1), Arg::E(yl)), (Arg::E(xl), Arg::V(t2))] {
                let mut args = wedge_args(k, Some(kk), Some((l, p, q)));
                if let Some(z) = z {
                    args.push(Arg::E(z));
                }
                axpy(acc, &s, &c.eval_args(part, &args));
            }
        }
    }
}

/// The map `Φ` on `C^d_LY`: on a `k`-argument component,
/// `Σ_slots c(.., φ·, ..) + (k-1)·λ·c - φ_V ∘ c` (the λ is dropped under
/// [`PhiConvention::Unscaled`]).
pub fn phi_map(
    a: &MdlyAlgebra,
    r: &Representation,
    c: &LyCochain,
    convention: PhiConvention,
) -> Result<LyCochain> {
    check_pair(a.algebra(), r, c)?;
    let shape = c.shape;
    let op = a.operator();
    let columns: Vec<Vec<Rational>> = (0..shape.base).map(|j| op.column(j)).collect();
    let mut out = LyCochain::zero(shape);
    let mut run = |part: Part, indices: Vec<Vec<usize>>| {
        for idx in indices {
            let k = idx.len();
            let base = c.value(part, &idx);
            let mut v = zero_vec(shape.module);
            for s in 0..k {
                let args: Vec<Arg> = idx
                    .iter()
                    .enumerate()
                    .map(|(t, &i)| if t == s { Arg::V(&columns[i]) } else { Arg::E(i) })
                    .collect();
                axpy(&mut v, &rat(1), &c.eval_args(part, &args));
            }
            let scalar = match convention {
                PhiConvention::Scaled => rat(k as i64 - 1) * op.lambda(),
                PhiConvention::Unscaled => rat(k as i64 - 1),
            };
            axpy(&mut v, &scalar, &base);
            axpy(&mut v, &rat(-1), &act(r.phi_v(), &base));
            out.set(part, &idx, &v);
        }
    };
    run(Part::F, shape.f_indices());
    run(Part::G, shape.g_indices());
    Ok(out)
}

/// The coboundary `∂` of the MDLY complex.
pub fn partial(
    a: &MdlyAlgebra,
    r: &Representation,
    c: &MdlyCochain,
    convention: PhiConvention,
) -> Result<MdlyCochain> {
    let g = a.algebra();
    let top = delta(g, r, &c.top)?;
    let phi = phi_map(a, r, &c.top, convention)?;
    let shadow = match &c.shadow {
        None => phi.scale(&rat(-1)),
        Some(s) => {
            let n = c.degree() - 1;
            delta(g, r, s)?.add(&phi.scale(&sign(n + 1)))
        }
    };
    MdlyCochain::new(top, Some(shadow))
}

/// Residuals of the two cyclic conditions a degree-2 pair `(f, g)` must meet
/// to belong to the Yamaguti cochain space:
/// `↻ f([x,y],z) − ρ(z)f(x,y) + g(x,y,z) = 0` over `x < y < z`, and
/// `↻ θ(z,a)f(x,y) + g([x,y],z,a) = 0` over `x < y < z` and all `a`.
pub fn admissibility_residual(a: &LyAlgebra, r: &Representation, c: &LyCochain) -> Result<Vec<Rational>> {
    check_pair(a, r, c)?;
    c.require_degree(2)?;
    let n = a.dim();
    let mut out = Vec::new();
    let cyc = |x: usize, y: usize, z: usize| [(x, y, z), (y, z, x), (z, x, y)];
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let mut v = zero_vec(r.module_dim());
                for (p, q, s) in cyc(x, y, z) {
                    let fxy = c.value(Part::F, &[p, q]);
                    let br = a.bracket_basis(p, q);
                    axpy(&mut v, &rat(1), &c.eval_args(Part::F, &[Arg::V(br), Arg::E(s)]));
                    axpy(&mut v, &rat(-1), &act(r.rho(s), &fxy));
                    axpy(&mut v, &rat(1), &c.value(Part::G, &[p, q, s]));
                }
                out.extend(v);
                for w in 0..n {
                    let mut v = zero_vec(r.module_dim());
                    for (p, q, s) in cyc(x, y, z) {
                        let fxy = c.value(Part::F, &[p, q]);
                        let br = a.bracket_basis(p, q);
                        axpy(&mut v, &rat(1), &act(r.theta(s, w), &fxy));
                        axpy(
                            &mut v,
                            &rat(1),
                            &c.eval_args(Part::G, &[Arg::V(br), Arg::E(s), Arg::E(w)]),
                        );
                    }
                    out.extend(v);
                }
            }
        }
    }
    Ok(out)
}

pub fn is_admissible(a: &LyAlgebra, r: &Representation, c: &LyCochain) -> Result<bool> {
    Ok(is_zero_vec(&admissibility_residual(a, r, c)?))
}

/// Which linear map to put in matrix form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CochainMap {
    /// `δ` on `C^d_LY`.
    Delta,
    /// `Φ` on `C^d_LY`.
    Phi,
    /// `∂` on `C^d_MDLY`.
    Partial,
}

/// The cochain complex of an MDLY algebra with coefficients in a
/// representation, with matrix assembly in the canonical bases.
#[derive(Clone, Debug)]
pub struct Complex<'a> {
    algebra: &'a MdlyAlgebra,
    rep: &'a Representation,
    convention: PhiConvention,
    max_degree: usize,
}

impl<'a> Complex<'a> {
    pub fn new(algebra: &'a MdlyAlgebra, rep: &'a Representation) -> Result<Self> {
        if rep.base_dim() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                context: "representation base dimension",
                expected: algebra.dim(),
                found: rep.base_dim(),
            });
        }
        Ok(Self {
            algebra,
            rep,
            convention: PhiConvention::Scaled,
            max_degree: DEFAULT_MAX_DEGREE,
        })
    }

    pub fn with_convention(mut self, convention: PhiConvention) -> Self {
        self.convention = convention;
        self
    }

    /// Raises the source-degree limit for matrix assembly. Cochain spaces
    /// grow like `(n(n-1)/2)^(d-1)`.
    pub fn allow_degree(mut self, max: usize) -> Self {
        self.max_degree = max;
        self
    }

    pub fn algebra(&self) -> &MdlyAlgebra {
        self.algebra
    }

    pub fn rep(&self) -> &Representation {
        self.rep
    }

    pub fn convention(&self) -> PhiConvention {
        self.convention
    }

    pub fn ly_shape(&self, degree: usize) -> Result<CochainShape> {
        CochainShape::new(self.algebra.dim(), self.rep.module_dim(), degree)
    }

    pub fn ly_dim(&self, degree: usize) -> usize {
        self.ly_shape(degree).map(|s| s.dim()).unwrap_or(0)
    }

    pub fn mdly_dim(&self, degree: usize) -> usize {
        MdlyCochain::dim_of(self.algebra.dim(), self.rep.module_dim(), degree)
    }

    pub fn delta(&self, c: &LyCochain) -> Result<LyCochain> {
        delta(self.algebra.algebra(), self.rep, c)
    }

    pub fn phi(&self, c: &LyCochain) -> Result<LyCochain> {
        phi_map(self.algebra, self.rep, c, self.convention)
    }

    pub fn partial(&self, c: &MdlyCochain) -> Result<MdlyCochain> {
        partial(self.algebra, self.rep, c, self.convention)
    }

    fn guard(&self, degree: usize) -> Result<()> {
        if degree == 0 {
            return Err(Error::UnsupportedDegree {
                degree,
                reason: "cochain degrees start at 1".into(),
            });
        }
        if degree > self.max_degree {
            let target = self.mdly_dim(degree + 1);
            return Err(Error::UnsupportedDegree {
                degree,
                reason: format!(
                    "degree above {} needs an explicit opt-in (target space has dimension {target})",
                    self.max_degree
                ),
            });
        }
        Ok(())
    }

    /// Matrix of `map` with source degree `degree`.
    pub fn matrix(&self, map: CochainMap, degree: usize) -> Result<RatMatrix> {
        self.guard(degree)?;
        let (cols, rows) = match map {
            CochainMap::Delta => (self.ly_dim(degree), self.ly_dim(degree + 1)),
            CochainMap::Phi => (self.ly_dim(degree), self.ly_dim(degree)),
            CochainMap::Partial => (self.mdly_dim(degree), self.mdly_dim(degree + 1)),
        };
        let mut out = RatMatrix::zeros(rows, cols);
        for j in 0..cols {
            let image = match map {
                CochainMap::Delta => self.delta(&LyCochain::unit(self.ly_shape(degree)?, j))?.coords,
                CochainMap::Phi => self.phi(&LyCochain::unit(self.ly_shape(degree)?, j))?.coords,
                CochainMap::Partial => {
                    let mut e = zero_vec(cols);
                    e[j] = Rational::one();
                    let c = MdlyCochain::from_coords(
                        self.algebra.dim(),
                        self.rep.module_dim(),
                        degree,
                        &e,
                    )?;
                    self.partial(&c)?.coords()
                }
            };
            for (i, v) in image.into_iter().enumerate() {
                if !v.is_zero() {
                    out[(i, j)] = v;
                }
            }
        }
        Ok(out)
    }

    /// Matrix of the admissibility residual on `C^2_LY`.
    pub fn admissibility_matrix(&self) -> Result<RatMatrix> {
        let shape = self.ly_shape(2)?;
        let g = self.algebra.algebra();
        let columns: Vec<Vec<Rational>> = (0..shape.dim())
            .map(|j| admissibility_residual(g, self.rep, &LyCochain::unit(shape, j)))
            .collect::<Result<_>>()?;
        let rows = columns.first().map_or(0, Vec::len);
        RatMatrix::from_columns(rows, &columns)
    }

    /// Linear constraints cutting the admissible subspace out of
    /// `C^degree_LY` (only degree 2 is constrained).
    pub fn ly_constraint(&self, degree: usize) -> Result<Option<RatMatrix>> {
        if degree == 2 {
            Ok(Some(self.admissibility_matrix()?))
        } else {
            Ok(None)
        }
    }

    /// Constraints on `C^degree_MDLY`: on the top block in degree 2, on the
    /// shadow block in degree 3.
    pub fn mdly_constraint(&self, degree: usize) -> Result<Option<RatMatrix>> {
        let y = match degree {
            2 | 3 => self.admissibility_matrix()?,
            _ => return Ok(None),
        };
        let total = self.mdly_dim(degree);
        let offset = if degree == 2 { 0 } else { self.ly_dim(3) };
        let mut out = RatMatrix::zeros(y.rows(), total);
        for i in 0..y.rows() {
            for j in 0..y.cols() {
                out[(i, offset + j)] = y[(i, j)].clone();
            }
        }
        Ok(Some(out))
    }

    /// Is `c` admissible in the sense of [`Complex::mdly_constraint`]?
    pub fn is_admissible(&self, c: &MdlyCochain) -> Result<bool> {
        let g = self.algebra.algebra();
        match c.degree() {
            2 => is_admissible(g, self.rep, c.top()),
            3 => is_admissible(g, self.rep, c.shadow().expect("degree 3 has a shadow")),
            _ => Ok(true),
        }
    }
}
