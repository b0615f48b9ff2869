//! Small algebras used in examples, tests and benchmarks.

use crate::algebra::{LyAlgebra, MdlyAlgebra, ModifiedOperator};
use crate::linalg::{rat, RatMatrix, Rational};
use crate::tensor::Tensor;

fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| rat(x)).collect()
}

/// `[e1,e2] = e1`, `{e1,e2,e2} = e1`.
pub fn two_dim_algebra() -> LyAlgebra {
    LyAlgebra::builder(2)
        .bracket(0, 1, v(&[1, 0]))
        .and_then(|b| b.triple(0, 1, 1, v(&[1, 0])))
        .expect("static structure constants")
        .build()
}

/// `[e1,e2] = e3`, `{e1,e2,e1} = e3`.
pub fn three_dim_algebra() -> LyAlgebra {
    LyAlgebra::builder(3)
        .bracket(0, 1, v(&[0, 0, 1]))
        .and_then(|b| b.triple(0, 1, 0, v(&[0, 0, 1])))
        .expect("static structure constants")
        .build()
}

/// The operator family `[[k, k1], [0, -λ]]` on [`two_dim_algebra`].
pub fn two_dim_operator(lambda: Rational, k: Rational, k1: Rational) -> ModifiedOperator {
    let m = RatMatrix::from_rows(vec![vec![k, k1], vec![rat(0), -lambda.clone()]]).unwrap();
    ModifiedOperator::new(lambda, m).unwrap()
}

/// The operator family `[[-λ, k1, 0], [k2, k, 0], [k3, k4, k]]` on
/// [`three_dim_algebra`].
pub fn three_dim_operator(
    lambda: Rational,
    k: Rational,
    k1: Rational,
    k2: Rational,
    k3: Rational,
    k4: Rational,
) -> ModifiedOperator {
    let m = RatMatrix::from_rows(vec![
        vec![-lambda.clone(), k1, rat(0)],
        vec![k2, k.clone(), rat(0)],
        vec![k3, k4, k],
    ])
    .unwrap();
    ModifiedOperator::new(lambda, m).unwrap()
}

pub fn two_dim_mdly(lambda: Rational, k: Rational, k1: Rational) -> MdlyAlgebra {
    MdlyAlgebra::new(two_dim_algebra(), two_dim_operator(lambda, k, k1)).unwrap()
}

pub fn three_dim_mdly(
    lambda: Rational,
    k: Rational,
    k1: Rational,
    k2: Rational,
    k3: Rational,
    k4: Rational,
) -> MdlyAlgebra {
    MdlyAlgebra::new(
        three_dim_algebra(),
        three_dim_operator(lambda, k, k1, k2, k3, k4),
    )
    .unwrap()
}

/// Abelian algebra with the zero operator.
pub fn abelian_mdly(dim: usize, lambda: Rational) -> MdlyAlgebra {
    MdlyAlgebra::new(LyAlgebra::abelian(dim), ModifiedOperator::zero(dim, lambda)).unwrap()
}

/// Non-abelian 2-dimensional Lie algebra, `[e1,e2] = e1`.
pub fn two_dim_lie() -> Tensor {
    let mut t = Tensor::zeros(2, 2, 2);
    t.set(&[0, 1], &v(&[1, 0]));
    t.set(&[1, 0], &v(&[-1, 0]));
    t
}

/// sl2 in the basis (h, e, f): `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> Tensor {
    let mut t = Tensor::zeros(3, 2, 3);
    for (i, j, val) in [(0, 1, [0, 2, 0]), (0, 2, [0, 0, -2]), (1, 2, [1, 0, 0])] {
        t.set(&[i, j], &v(&val));
        t.set(&[j, i], &v(&val.map(|x| -x)));
    }
    t
}
