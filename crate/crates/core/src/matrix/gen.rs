use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use super::{check_order, Complex64, ComplexMatrix};
use crate::error::{Error, Result};
use crate::graph::{check_permutation, Digraph};

/// The built-in catalog of unitary matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixKind {
    /// Normalized discrete Fourier transform of order `n`.
    Dft(usize),
    /// Normalized Sylvester–Hadamard matrix of order `2^k`.
    Sylvester(u32),
    /// The weighing matrix W(4,3) scaled by `1/sqrt(3)`.
    Weighing43,
    /// Permutation matrix with a one at `(i, p[i])`.
    Permutation(Vec<usize>),
}

impl MatrixKind {
    pub fn build(&self) -> Result<ComplexMatrix> {
        match self {
            MatrixKind::Dft(n) => dft(*n),
            MatrixKind::Sylvester(k) => sylvester(*k),
            MatrixKind::Weighing43 => Ok(weighing43()),
            MatrixKind::Permutation(p) => permutation(p),
        }
    }
}

fn dft(n: usize) -> Result<ComplexMatrix> {
    check_order(n)?;
    let scale = 1.0 / (n as f64).sqrt();
    let mut m = ComplexMatrix::zeros(n)?;
    for j in 0..n {
        for k in 0..n {
            // reduce the exponent first so every entry is an exact n-th root of unity
            let angle = 2.0 * PI * ((j * k) % n) as f64 / n as f64;
            m.set(j, k, Complex64::from_polar(scale, angle));
        }
    }
    Ok(m)
}

fn sylvester(k: u32) -> Result<ComplexMatrix> {
    if k > 6 {
        return Err(Error::Capacity {
            what: "Sylvester order",
            requested: 1u64 << k.min(63),
            limit: 64,
        });
    }
    let n = 1usize << k;
    let scale = 1.0 / (n as f64).sqrt();
    let mut m = ComplexMatrix::zeros(n)?;
    for i in 0..n {
        for j in 0..n {
            // H[i][j] = (-1)^{popcount(i & j)}
            let sign = if (i & j).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
            m.set(i, j, Complex64::new(sign * scale, 0.0));
        }
    }
    Ok(m)
}

fn weighing43() -> ComplexMatrix {
    #[rustfmt::skip]
    let w = [
        0.0, 1.0, 1.0, 1.0,
        1.0, 0.0, 1.0, -1.0,
        1.0, -1.0, 0.0, 1.0,
        1.0, 1.0, -1.0, 0.0,
    ];
    ComplexMatrix::from_real(4, &w)
        .expect("fixed 4x4")
        .scaled(1.0 / 3f64.sqrt())
}

fn permutation(p: &[usize]) -> Result<ComplexMatrix> {
    check_order(p.len())?;
    check_permutation(p, p.len())?;
    let mut m = ComplexMatrix::zeros(p.len())?;
    for (i, &pi) in p.iter().enumerate() {
        m.set(i, pi, Complex64::new(1.0, 0.0));
    }
    Ok(m)
}

/// Seeded Haar-random unitary of order `n`.
///
/// Entries of an `n x n` matrix are filled row-major with complex Gaussians
/// whose real and imaginary parts come from a Box–Muller transform of
/// ChaCha20 uniforms (`u1` in `(0,1]`, `u2` in `[0,1)`, both from
/// `Rng::gen::<f64>()`). The columns are then orthonormalized with two passes
/// of modified Gram–Schmidt; the resulting `R` has a positive real diagonal,
/// which makes `Q` Haar-distributed.
pub fn random_unitary(n: usize, seed: u64) -> Result<ComplexMatrix> {
    check_order(n)?;
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut cols = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for col in cols.iter_mut() {
            col[i] = box_muller(&mut rng);
        }
    }
    for j in 0..n {
        for _pass in 0..2 {
            for k in 0..j {
                let (done, rest) = cols.split_at_mut(j);
                let q = &done[k];
                let proj: Complex64 = q.iter().zip(&rest[0]).map(|(a, b)| a.conj() * b).sum();
                for (x, a) in rest[0].iter_mut().zip(q) {
                    *x -= proj * a;
                }
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for x in cols[j].iter_mut() {
            *x /= norm;
        }
    }
    let mut m = ComplexMatrix::zeros(n)?;
    for (j, col) in cols.iter().enumerate() {
        for (i, &z) in col.iter().enumerate() {
            m.set(i, j, z);
        }
    }
    Ok(m)
}

fn box_muller<R: Rng>(rng: &mut R) -> Complex64 {
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen::<f64>();
    Complex64::from_polar((-2.0 * u1.ln()).sqrt(), 2.0 * PI * u2)
}

impl ComplexMatrix {
    /// The digraph of the adjacency pattern of `d` as a 0/1 matrix.
    pub fn pattern_of(d: &Digraph) -> ComplexMatrix {
        let n = d.order();
        let mut m = ComplexMatrix::zeros(n).expect("digraph order is valid");
        for (u, v) in d.arcs() {
            m.set(u, v, Complex64::new(1.0, 0.0));
        }
        m
    }
}
