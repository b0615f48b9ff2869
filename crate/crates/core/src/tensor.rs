//! Dense multilinear maps `K^dim x ... x K^dim -> K^out` given on basis tuples.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, zero_vec, Rational};

/// Iterates all `k`-tuples over `0..dim` in lexicographic order.
pub fn tuples(dim: usize, k: usize) -> Tuples {
    Tuples {
        dim,
        current: if dim == 0 && k > 0 { None } else { Some(vec![0; k]) },
    }
}

pub struct Tuples {
    dim: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let mut next = out.clone();
        let mut pos = next.len();
        loop {
            if pos == 0 {
                self.current = None;
                break;
            }
            pos -= 1;
            next[pos] += 1;
            if next[pos] < self.dim {
                self.current = Some(next);
                break;
            }
            next[pos] = 0;
        }
        Some(out)
    }
}

/// A multilinear map stored densely: one `out`-vector per basis tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    arity: usize,
    out: usize,
    data: Vec<Rational>,
}

impl Tensor {
    pub fn zeros(dim: usize, arity: usize, out: usize) -> Self {
        Self {
            dim,
            arity,
            out,
            data: zero_vec(dim.pow(arity as u32) * out),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn out_dim(&self) -> usize {
        self.out
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.arity);
        let mut o = 0;
        for &i in idx {
            debug_assert!(i < self.dim);
            o = o * self.dim + i;
        }
        o * self.out
    }

    /// Checks that `idx` has the right length and range.
    pub fn check_index(&self, idx: &[usize]) -> Result<()> {
        if idx.len() != self.arity {
            return Err(Error::DimensionMismatch {
                context: "tensor index arity",
                expected: self.arity,
                found: idx.len(),
            });
        }
        match idx.iter().find(|&&i| i >= self.dim) {
            Some(&i) => Err(Error::IndexOutOfRange {
                index: i,
                dim: self.dim,
            }),
            None => Ok(()),
        }
    }

    pub fn get(&self, idx: &[usize]) -> &[Rational] {
        let o = self.offset(idx);
        &self.data[o..o + self.out]
    }

    pub fn get_mut(&mut self, idx: &[usize]) -> &mut [Rational] {
        let o = self.offset(idx);
        &mut self.data[o..o + self.out]
    }

    pub fn set(&mut self, idx: &[usize], value: &[Rational]) {
        assert_eq!(value.len(), self.out, "tensor value length");
        self.get_mut(idx).clone_from_slice(value);
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    /// Multilinear extension to arbitrary vector arguments.
    pub fn eval(&self, args: &[&[Rational]]) -> Vec<Rational> {
        assert_eq!(args.len(), self.arity, "tensor eval arity");
        let support: Vec<Vec<usize>> = args
            .iter()
            .map(|a| (0..self.dim).filter(|&i| !a[i].is_zero()).collect())
            .collect();
        let mut acc = zero_vec(self.out);
        let mut idx = vec![0usize; self.arity];
        self.eval_rec(args, &support, 0, &mut idx, &Rational::from_integer(1.into()), &mut acc);
        acc
    }

    fn eval_rec(
        &self,
        args: &[&[Rational]],
        support: &[Vec<usize>],
        slot: usize,
        idx: &mut Vec<usize>,
        coeff: &Rational,
        acc: &mut [Rational],
    ) {
        if slot == self.arity {
            axpy(acc, coeff, self.get(idx));
            return;
        }
        for &i in &support[slot] {
            idx[slot] = i;
            let c = coeff * &args[slot][i];
            self.eval_rec(args, support, slot + 1, idx, &c, acc);
        }
    }

    /// `sum_q v[q] * self(.., e_q at slot, ..)` with every other slot a basis index.
    pub fn eval_with_vector(&self, idx: &[usize], slot: usize, v: &[Rational]) -> Vec<Rational> {
        let mut acc = zero_vec(self.out);
        let mut t = idx.to_vec();
        for (q, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            t[slot] = q;
            axpy(&mut acc, c, self.get(&t));
        }
        acc
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.shape(), other.shape());
        let mut t = self.clone();
        for (a, b) in t.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        t
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.shape(), other.shape());
        let mut t = self.clone();
        for (a, b) in t.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Tensor {
        let mut t = self.clone();
        for a in t.data.iter_mut() {
            *a *= c;
        }
        t
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.dim, self.arity, self.out)
    }

    /// First index pair `(i, j)` (with the remaining slots) where swapping the
    /// first two slots does not negate the value.
    pub fn first_antisymmetry_defect(&self) -> Option<Vec<usize>> {
        assert!(self.arity >= 2);
        for t in tuples(self.dim, self.arity) {
            if t[0] > t[1] {
                continue;
            }
            let mut s = t.clone();
            s.swap(0, 1);
            let a = self.get(&t);
            let b = self.get(&s);
            if a.iter().zip(b).any(|(x, y)| !(x + y).is_zero()) {
                return Some(t);
            }
        }
        None
    }

    /// Keeps the value on tuples with `t[0] < t[1]`, writes the negation on
    /// the swapped tuple and zero on the diagonal.
    pub fn antisymmetrize_from_upper(&mut self) {
        for t in tuples(self.dim, self.arity) {
            if t[0] < t[1] {
                let v = self.get(&t).to_vec();
                let mut s = t.clone();
                s.swap(0, 1);
                let neg: Vec<Rational> = v.iter().map(|x| -x).collect();
                self.set(&s, &neg);
            } else if t[0] == t[1] {
                let z = zero_vec(self.out);
                self.set(&t, &z);
            }
        }
    }
}
