//! Helpers shared by the integration tests: a deliberately plain rational
//! Gaussian elimination used as an independent rank oracle, and seeded
//! random data.
#![allow(dead_code)]

use lieyam_core::linalg::{frac, rat, RatMatrix, Rational};
use lieyam_core::{catalog, MdlyAlgebra};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Seed from `LIEYAM_SEED`, or a fixed default.
pub fn seed() -> u64 {
    std::env::var("LIEYAM_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(20240611)
}

pub fn rng(salt: u64) -> StdRng {
    StdRng::seed_from_u64(seed() ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Small random rational `p/q` with `|p| <= 6`, `1 <= q <= 4`.
pub fn small(rng: &mut StdRng) -> Rational {
    let num = rng.gen_range(-6i64..=6);
    let den = rng.gen_range(1i64..=4);
    frac(num, den)
}

pub fn small_nonzero(rng: &mut StdRng) -> Rational {
    loop {
        let q = small(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn random_vec(rng: &mut StdRng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| small(rng)).collect()
}

pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> RatMatrix {
    let entries = random_vec(rng, rows * cols);
    RatMatrix::from_entries(rows, cols, entries).unwrap()
}

/// Random member of the 2-dim operator family.
pub fn random_two_dim(rng: &mut StdRng) -> MdlyAlgebra {
    catalog::two_dim_mdly(small(rng), small(rng), small(rng))
}

/// Random member of the verified part (`k1 = 0`) of the 3-dim family.
pub fn random_three_dim(rng: &mut StdRng) -> MdlyAlgebra {
    catalog::three_dim_mdly(small(rng), small(rng), rat(0), small(rng), small(rng), small(rng))
}

/// Row reduction over `Rational` with the first nonzero pivot; returns the
/// reduced rows and pivot columns.
pub fn naive_rref(m: &RatMatrix) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut a: Vec<Vec<Rational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Rational::from_integer(1.into()) / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..m.cols() {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    (a, pivots)
}

pub fn naive_rank(m: &RatMatrix) -> usize {
    naive_rref(m).1.len()
}

pub fn naive_nullity(m: &RatMatrix) -> usize {
    m.cols() - naive_rank(m)
}

/// `m · k` where the columns of `k` are the given vectors.
pub fn apply_to_columns(m: &RatMatrix, vectors: &[Vec<Rational>]) -> RatMatrix {
    let k = RatMatrix::from_columns(m.cols(), vectors).unwrap();
    m.try_mul(&k).unwrap()
}

/// Random rational combination of the given vectors.
pub fn random_combination(rng: &mut StdRng, vectors: &[Vec<Rational>], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for v in vectors {
        let c = small(rng);
        for (o, x) in out.iter_mut().zip(v) {
            *o += &c * x;
        }
    }
    out
}

/// Degree-2 cochain coordinates that are cocycles about half of the time:
/// a random element of the given cocycle basis, sometimes with one entry
/// perturbed, sometimes fully random.
pub fn mixed_sample(rng: &mut StdRng, cocycles: &[Vec<Rational>], len: usize) -> Vec<Rational> {
    match rng.gen_range(0..4) {
        0 | 1 => random_combination(rng, cocycles, len),
        2 => {
            let mut v = random_combination(rng, cocycles, len);
            let k = rng.gen_range(0..len);
            v[k] += small_nonzero(rng);
            v
        }
        _ => random_vec(rng, len),
    }
}
