//! Square integer matrices.
//!
//! Row `a` of an incidence matrix is the Parikh vector of the image of
//! letter `a`, so `parikh(s(w)) = parikh(w) * M(s)` as a row-vector product.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncidenceMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl std::fmt::Debug for IncidenceMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl IncidenceMatrix {
    pub fn new(dim: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch);
        }
        Ok(IncidenceMatrix { dim, data })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for r in rows {
            if r.len() != dim {
                return Err(Error::DimensionMismatch);
            }
            data.extend_from_slice(r);
        }
        Ok(IncidenceMatrix { dim, data })
    }

    pub fn identity(dim: usize) -> Self {
        let mut data = vec![0; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = 1;
        }
        IncidenceMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn mul(&self, other: &IncidenceMatrix) -> Result<IncidenceMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch);
        }
        let n = self.dim;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let term = (a as i128) * (other.get(k, j) as i128);
                    let cur = out[i * n + j] as i128 + term;
                    out[i * n + j] = i64::try_from(cur)
                        .map_err(|_| Error::Internal("matrix entry overflow".into()))?;
                }
            }
        }
        IncidenceMatrix::new(n, out)
    }

    pub fn pow(&self, k: u32) -> Result<IncidenceMatrix> {
        let mut acc = IncidenceMatrix::identity(self.dim);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Relabels: entry `(i, j)` of the result is entry `(perm[i], perm[j])`.
    pub fn permute(&self, perm: &[usize]) -> Result<IncidenceMatrix> {
        if perm.len() != self.dim {
            return Err(Error::DimensionMismatch);
        }
        let n = self.dim;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = self.get(perm[i], perm[j]);
            }
        }
        IncidenceMatrix::new(n, out)
    }

    /// Entrywise-positivity of some power, searched up to the Wielandt bound
    /// `(k-1)^2 + 1`. Runs over the boolean semiring with bit-packed rows.
    pub fn is_primitive(&self) -> bool {
        let n = self.dim;
        if n == 0 {
            return false;
        }
        if self.data.iter().any(|&v| v < 0) {
            return false;
        }
        let words = n.div_ceil(64);
        let to_bits = |m: &IncidenceMatrix| -> Vec<u64> {
            let mut b = vec![0u64; n * words];
            for i in 0..n {
                for j in 0..n {
                    if m.get(i, j) > 0 {
                        b[i * words + j / 64] |= 1u64 << (j % 64);
                    }
                }
            }
            b
        };
        let mul_bits = |a: &[u64], b: &[u64]| -> Vec<u64> {
            let mut out = vec![0u64; n * words];
            for i in 0..n {
                for j in 0..n {
                    if a[i * words + j / 64] >> (j % 64) & 1 == 1 {
                        for w in 0..words {
                            out[i * words + w] |= b[j * words + w];
                        }
                    }
                }
            }
            out
        };
        let all_ones = |b: &[u64]| -> bool {
            for i in 0..n {
                for j in 0..n {
                    if b[i * words + j / 64] >> (j % 64) & 1 == 0 {
                        return false;
                    }
                }
            }
            true
        };
        let base = to_bits(self);
        let mut exponent = (n as u64 - 1) * (n as u64 - 1) + 1;
        let mut sq = base;
        let mut acc: Option<Vec<u64>> = None;
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = Some(match acc {
                    None => sq.clone(),
                    Some(a) => mul_bits(&a, &sq),
                });
            }
            exponent >>= 1;
            if exponent > 0 {
                sq = mul_bits(&sq, &sq);
            }
        }
        all_ones(&acc.expect("exponent >= 1"))
    }

    /// Exact determinant (fraction-free Bareiss elimination over big integers).
    pub fn det(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::from(1);
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self.get(i, j))).collect())
            .collect();
        let mut sign = 1i64;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
                match swap {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Fast exact nonzero test for the determinant: a modular elimination
    /// certifies nonzero; a zero residue falls back to the full determinant.
    pub fn det_is_nonzero(&self) -> bool {
        const P: u64 = 0x3fff_ffff_ffff_ffc7; // largest prime below 2^62
        if self.modular_det(P) != 0 {
            return true;
        }
        !self.det().is_zero()
    }

    fn modular_det(&self, p: u64) -> u64 {
        let n = self.dim;
        if n == 0 {
            return 1;
        }
        let reduce = |v: i64| -> u64 {
            let r = (v as i128).rem_euclid(p as i128);
            r as u64
        };
        let mulmod = |a: u64, b: u64| -> u64 { ((a as u128 * b as u128) % p as u128) as u64 };
        let powmod = |mut b: u64, mut e: u64| -> u64 {
            let mut acc = 1u64;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(acc, b);
                }
                b = mulmod(b, b);
                e >>= 1;
            }
            acc
        };
        let mut m: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| reduce(self.get(i, j))).collect())
            .collect();
        let mut det = 1u64;
        for k in 0..n {
            let pivot = (k..n).find(|&r| m[r][k] != 0);
            let Some(r) = pivot else { return 0 };
            if r != k {
                m.swap(k, r);
                det = p - det;
                if det == p {
                    det = 0;
                }
            }
            det = mulmod(det, m[k][k]);
            let inv = powmod(m[k][k], p - 2);
            for i in k + 1..n {
                if m[i][k] == 0 {
                    continue;
                }
                let f = mulmod(m[i][k], inv);
                for j in k..n {
                    let sub = mulmod(f, m[k][j]);
                    m[i][j] = (m[i][j] + p - sub) % p;
                }
            }
        }
        det
    }

    /// Characteristic polynomial of `det(uI - A)`, coefficients lowest degree
    /// first, monic. Faddeev-LeVerrier; exact for the dimensions used here.
    pub fn char_poly(&self) -> Vec<i128> {
        let n = self.dim;
        let mut coeffs = vec![0i128; n + 1];
        coeffs[n] = 1;
        if n == 0 {
            return coeffs;
        }
        let a: Vec<i128> = self.data.iter().map(|&v| v as i128).collect();
        let mat_mul = |x: &[i128], y: &[i128]| -> Vec<i128> {
            let mut out = vec![0i128; n * n];
            for i in 0..n {
                for k in 0..n {
                    let v = x[i * n + k];
                    if v == 0 {
                        continue;
                    }
                    for j in 0..n {
                        out[i * n + j] += v * y[k * n + j];
                    }
                }
            }
            out
        };
        let trace = |x: &[i128]| -> i128 { (0..n).map(|i| x[i * n + i]).sum() };
        // M_1 = A; c_{n-k} = -tr(M_k)/k; M_k = A(M_{k-1} + c_{n-k+1} I)
        let mut mk = a.clone();
        coeffs[n - 1] = -trace(&mk);
        for k in 2..=n {
            let mut shifted = mk;
            for i in 0..n {
                shifted[i * n + i] += coeffs[n - k + 1];
            }
            mk = mat_mul(&a, &shifted);
            let tr = trace(&mk);
            debug_assert_eq!(tr % (k as i128), 0);
            coeffs[n - k] = -tr / (k as i128);
        }
        coeffs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IncidenceMatrix {
        IncidenceMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn multiply_and_power() {
        let fib = m(&[&[1, 1], &[1, 0]]);
        let sq = fib.pow(2).unwrap();
        assert_eq!(sq.rows(), vec![vec![2, 1], vec![1, 1]]);
        assert_eq!(fib.pow(0).unwrap(), IncidenceMatrix::identity(2));
    }

    #[test]
    fn primitivity() {
        assert!(m(&[&[1, 1], &[1, 0]]).is_primitive());
        // reducible: letters {2,3} never reach {0,1}
        assert!(!m(&[
            &[1, 1, 0, 0],
            &[1, 0, 1, 0],
            &[0, 0, 0, 1],
            &[0, 0, 1, 0]
        ])
        .is_primitive());
        // irreducible but periodic
        assert!(!m(&[&[0, 1], &[1, 0]]).is_primitive());
        assert!(m(&[&[1]]).is_primitive());
        assert!(!m(&[&[0]]).is_primitive());
    }

    #[test]
    fn determinants() {
        assert_eq!(m(&[&[1, 1], &[1, 0]]).det(), BigInt::from(-1));
        let singular = m(&[
            &[1, 1, 0, 0, 0],
            &[0, 0, 1, 0, 0],
            &[0, 0, 0, 1, 1],
            &[1, 0, 0, 0, 0],
            &[0, 1, 1, 0, 0],
        ]);
        assert_eq!(singular.det(), BigInt::from(0));
        assert!(!singular.det_is_nonzero());
        assert!(m(&[&[1, 1], &[1, 0]]).det_is_nonzero());
        // equal rows must register as singular on the modular fast path too
        assert!(!m(&[&[2, 1], &[2, 1]]).det_is_nonzero());
    }

    #[test]
    fn characteristic_polynomials() {
        // golden mean: u^2 - u - 1
        assert_eq!(m(&[&[1, 1], &[1, 0]]).char_poly(), vec![-1, -1, 1]);
        // u^3 - 2u^2 - ... for a known 3x3
        let a = m(&[&[0, 1, 0], &[1, 0, 1], &[1, 1, 0]]);
        // trace 0, so coefficient of u^2 is 0
        let p = a.char_poly();
        assert_eq!(p.len(), 4);
        assert_eq!(p[3], 1);
        assert_eq!(p[2], -a.trace() as i128);
        // identity: (u-1)^3 = u^3 - 3u^2 + 3u - 1
        assert_eq!(
            IncidenceMatrix::identity(3).char_poly(),
            vec![-1, 3, -3, 1]
        );
    }

    #[test]
    fn permutation_conjugation() {
        let a = m(&[&[0, 1, 0], &[0, 0, 1], &[1, 2, 0]]);
        let b = a.permute(&[1, 2, 0]).unwrap();
        assert_eq!(b.rows(), vec![vec![0, 1, 0], vec![2, 0, 1], vec![1, 0, 0]]);
        assert_eq!(b.trace(), a.trace());
        assert_eq!(b.det(), a.det());
    }
}
