//! Dense complex matrices, unitary generators, and the digraph of a matrix
//! (arc `i -> j` iff entry `(i, j)` is nonzero).

mod gen;
mod text;

pub use gen::{random_unitary, MatrixKind};
pub use num_complex::Complex64;

use std::ops::Index;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::vertex_set::MAX_VERTICES;

/// Default threshold below which a floating-point entry counts as zero.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Square complex matrix of order at most 64, stored row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(ComplexMatrix {
            n,
            entries: vec![Complex64::new(0.0, 0.0); n * n],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n)?;
        for i in 0..n {
            m.entries[i * n + i] = Complex64::new(1.0, 0.0);
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::invalid(format!("row {i} has {} entries, expected {n}", r.len())));
        }
        Ok(ComplexMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Real matrix from row-major values.
    pub fn from_real(n: usize, values: &[f64]) -> Result<Self> {
        check_order(n)?;
        if values.len() != n * n {
            return Err(Error::invalid(format!("{} values for a {n}x{n} matrix", values.len())));
        }
        Ok(ComplexMatrix {
            n,
            entries: values.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.entries[i * self.n + j] = z;
    }

    pub fn scaled(&self, factor: f64) -> ComplexMatrix {
        ComplexMatrix {
            n: self.n,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.entries[i * n + j].conj();
            }
        }
        out
    }

    pub fn mul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.n != other.n {
            return Err(Error::invalid(format!(
                "cannot multiply orders {} and {}",
                self.n, other.n
            )));
        }
        let n = self.n;
        let mut out = ComplexMatrix::zeros(n)?;
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * other.entries[k * n + j];
                }
            }
        }
        Ok(out)
    }

    /// Largest entry modulus of `U U† - I`.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    acc += self.entries[i * n + k] * self.entries[j * n + k].conj();
                }
                if i == j {
                    acc -= 1.0;
                }
                worst = worst.max(acc.norm());
            }
        }
        worst
    }

    /// `max |(U U† - I)_{ij}| <= tol`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }

    /// Arc `i -> j` iff `|m[i][j]| > tol`; nonzero diagonal entries give loops.
    pub fn digraph(&self, tol: f64) -> Digraph {
        let n = self.n;
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| self.entries[i * n + j].norm() > tol)
                    .fold(0u64, |acc, j| acc | 1 << j)
            })
            .collect();
        Digraph::from_out_rows(rows).expect("order already checked")
    }

    /// Irreducible in the combinatorial sense: the digraph at `tol` is strong.
    pub fn is_irreducible(&self, tol: f64) -> bool {
        self.digraph(tol).is_strong()
    }

    /// Kronecker product, entry `(i*nb + j, k*nb + l) = a[i][k] * b[j][l]`.
    pub fn kronecker(&self, b: &ComplexMatrix) -> Result<ComplexMatrix> {
        let (na, nb) = (self.n, b.n);
        let n = na * nb;
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "kronecker product order",
                requested: n as u64,
                limit: MAX_VERTICES as u64,
            });
        }
        let mut out = ComplexMatrix::zeros(n)?;
        for i in 0..na {
            for k in 0..na {
                let a = self.get(i, k);
                for j in 0..nb {
                    for l in 0..nb {
                        out.set(i * nb + j, k * nb + l, a * b.get(j, l));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Smallest nonzero entry modulus (above `tol`), if any.
    pub fn min_nonzero_modulus(&self, tol: f64) -> Option<f64> {
        self.entries
            .iter()
            .map(|z| z.norm())
            .filter(|&m| m > tol)
            .min_by(f64::total_cmp)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.n + j]
    }
}

impl std::fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("matrix order must be at least 1"));
    }
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "matrix order",
            requested: n as u64,
            limit: MAX_VERTICES as u64,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_checks() {
        assert!(ComplexMatrix::identity(3).unwrap().is_unitary(0.0));
        let h = ComplexMatrix::from_real(2, &[1.0, 1.0, 1.0, -1.0])
            .unwrap()
            .scaled(std::f64::consts::FRAC_1_SQRT_2);
        assert!(h.is_unitary(1e-12));
        let shear = ComplexMatrix::from_real(2, &[1.0, 1.0, 0.0, 1.0]).unwrap();
        assert!(!shear.is_unitary(1e-12));
    }

    #[test]
    fn identity_digraph_is_loops() {
        let d = ComplexMatrix::identity(4).unwrap().digraph(DEFAULT_TOL);
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 0), (1, 1), (2, 2), (3, 3)]);
    }

    #[test]
    fn tolerance_filters_junk() {
        let m = ComplexMatrix::from_real(2, &[1.0, 1e-16, 0.0, 1.0]).unwrap();
        assert!(!m.digraph(DEFAULT_TOL).has_arc(0, 1));
        assert!(m.digraph(0.0).has_arc(0, 1));
    }

    #[test]
    fn kronecker_of_identities() {
        let i2 = ComplexMatrix::identity(2).unwrap();
        assert_eq!(i2.kronecker(&i2).unwrap(), ComplexMatrix::identity(4).unwrap());
        let big = ComplexMatrix::identity(9).unwrap();
        assert!(big.kronecker(&big).is_err());
    }

    #[test]
    fn mul_and_adjoint() {
        let u = random_unitary(5, 3).unwrap();
        let p = u.mul(&u.adjoint()).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((p.get(i, j) - want).norm() < 1e-12);
            }
        }
    }
}
