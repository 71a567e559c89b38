//! Matrices whose dominant eigenvalue is the golden ratio: the divisibility
//! certificate, exhaustive small-entry enumeration, permutation classes, and
//! the one-parameter row-sum family with left eigenvector (1, phi, ..., phi).

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::matrix::IncidenceMatrix;
use crate::quadint::QuadInt;

/// Outcome of [`golden_pf_check`]: the characteristic-polynomial data and the
/// individual verdicts. `passes` means the golden ratio is provably the
/// dominant eigenvalue of a primitive matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenCertificate {
    pub dim: usize,
    pub trace: i64,
    /// Coefficient of `u` in the characteristic polynomial.
    pub f: i64,
    pub det: i64,
    /// Characteristic polynomial, lowest degree first, monic.
    pub char_poly: Vec<i128>,
    /// Whether `u^2 - u - 1` divides the characteristic polynomial.
    pub divisible: bool,
    /// Quotient by `u^2 - u - 1` when divisible, lowest degree first.
    pub quotient: Vec<i128>,
    pub primitive: bool,
    /// Exact test that the eigenspace at the golden ratio holds a strictly
    /// positive vector, which pins it as the dominant eigenvalue.
    pub golden_eigenvector: bool,
    /// Root of a linear quotient, when there is one.
    pub third_eigenvalue: Option<i64>,
    pub passes: bool,
}

/// Divides a monic polynomial (lowest degree first) by `u^2 - u - 1`.
/// Returns the quotient and the degree-<=1 remainder.
fn divide_by_golden(poly: &[i128]) -> (Vec<i128>, [i128; 2]) {
    let mut c = poly.to_vec();
    if c.len() < 3 {
        return (Vec::new(), [*c.first().unwrap_or(&0), *c.get(1).unwrap_or(&0)]);
    }
    let mut quotient = vec![0i128; c.len() - 2];
    for i in (2..c.len()).rev() {
        let q = c[i];
        quotient[i - 2] = q;
        c[i] = 0;
        c[i - 1] += q;
        c[i - 2] += q;
    }
    (quotient, [c[0], c[1]])
}

/// Exact rational element of the golden field, stored as `p + q*g` with
/// `g` the small golden mean.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
struct GoldenRat {
    p: Ratio<i128>,
    q: Ratio<i128>,
}

impl GoldenRat {
    const ZERO: GoldenRat = GoldenRat {
        p: Ratio::new_raw(0, 1),
        q: Ratio::new_raw(0, 1),
    };

    fn from_int(n: i64) -> Self {
        GoldenRat {
            p: Ratio::from_integer(n as i128),
            q: Ratio::from_integer(0),
        }
    }

    fn phi() -> Self {
        GoldenRat {
            p: Ratio::from_integer(1),
            q: Ratio::from_integer(1),
        }
    }

    fn is_zero(self) -> bool {
        self.p.numer() == &0 && self.q.numer() == &0
    }

    fn sub(self, o: Self) -> Self {
        GoldenRat {
            p: self.p - o.p,
            q: self.q - o.q,
        }
    }

    fn mul(self, o: Self) -> Self {
        // (p + qg)(r + sg) with g^2 = 1 - g
        let cross = self.q * o.q;
        GoldenRat {
            p: self.p * o.p + cross,
            q: self.p * o.q + self.q * o.p - cross,
        }
    }

    fn inv(self) -> Self {
        // conjugate (p - q) - q*g over the norm p^2 - p*q - q^2
        let norm = self.p * self.p - self.p * self.q - self.q * self.q;
        GoldenRat {
            p: (self.p - self.q) / norm,
            q: -self.q / norm,
        }
    }

    /// Sign of the real value, computed in big integers to dodge overflow.
    fn signum(self) -> i32 {
        use std::cmp::Ordering::*;
        // clear denominators (both positive in Ratio's normal form), then
        // read the sign off (2p - q) + q*sqrt(5)
        let p = BigInt::from(*self.p.numer()) * BigInt::from(*self.q.denom());
        let q = BigInt::from(*self.q.numer()) * BigInt::from(*self.p.denom());
        let a: BigInt = 2 * &p - &q;
        let zero = BigInt::from(0);
        let to_sign = |o| match o {
            Less => -1,
            Equal => 0,
            Greater => 1,
        };
        let (sa, sq) = (a.cmp(&zero), q.cmp(&zero));
        match (sa, sq) {
            (_, Equal) => to_sign(sa),
            (Equal, _) => to_sign(sq),
            (x, y) if x == y => to_sign(x),
            // opposite sides: the larger square wins
            _ => match (&a * &a).cmp(&(5 * &q * &q)) {
                Less => to_sign(sq),
                Greater => to_sign(sa),
                Equal => 0,
            },
        }
    }
}

/// Basis of the kernel of `M - phi*I` over the golden field.
fn phi_kernel(m: &IncidenceMatrix) -> Vec<Vec<GoldenRat>> {
    let n = m.dim();
    let phi = GoldenRat::phi();
    let mut a: Vec<Vec<GoldenRat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = GoldenRat::from_int(m.get(i, j));
                    if i == j {
                        e = e.sub(phi);
                    }
                    e
                })
                .collect()
        })
        .collect();
    // reduced row echelon form
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(pivot) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, pivot);
        let inv = a[row][col].inv();
        for j in col..n {
            a[row][j] = a[row][j].mul(inv);
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col];
                for j in col..n {
                    let delta = factor.mul(a[row][j]);
                    a[r][j] = a[r][j].sub(delta);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![GoldenRat::ZERO; n];
            v[fc] = GoldenRat::from_int(1);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = GoldenRat::ZERO.sub(a[r][fc]);
            }
            v
        })
        .collect()
}

/// Certifies whether the golden ratio is the dominant eigenvalue: the
/// characteristic polynomial must be divisible by `u^2 - u - 1`, the matrix
/// primitive, and the eigenspace at the golden ratio spanned by a strictly
/// positive vector (for a primitive matrix only the dominant eigenvalue has
/// one, so no root bounds on the quotient are needed).
pub fn golden_pf_check(m: &IncidenceMatrix) -> GoldenCertificate {
    let dim = m.dim();
    let char_poly = m.char_poly();
    let (quotient, remainder) = divide_by_golden(&char_poly);
    let divisible = dim >= 2 && remainder == [0, 0];
    let primitive = m.is_primitive();
    let golden_eigenvector = divisible && primitive && {
        let kernel = phi_kernel(m);
        kernel.len() == 1 && {
            let signs: Vec<i32> = kernel[0].iter().map(|e| e.signum()).collect();
            signs.iter().all(|&s| s == 1) || signs.iter().all(|&s| s == -1)
        }
    };
    let trace = m.trace();
    let f = *char_poly.get(1).unwrap_or(&0) as i64;
    let sign = if dim % 2 == 0 { 1 } else { -1 };
    let det = sign * *char_poly.first().unwrap_or(&1) as i64;
    let third_eigenvalue = if divisible && quotient.len() == 2 {
        Some(-quotient[0] as i64)
    } else {
        None
    };
    GoldenCertificate {
        dim,
        trace,
        f,
        det,
        char_poly,
        divisible,
        quotient: if divisible { quotient } else { Vec::new() },
        primitive,
        golden_eigenvector,
        third_eigenvalue,
        passes: golden_eigenvector,
    }
}

/// All r-by-r matrices with entries bounded by `entry_bound` that pass
/// [`golden_pf_check`], sorted row-major. The search skips matrices with a
/// zero row and those whose smallest row sum exceeds 1, both impossible for
/// a dominant eigenvalue below 2.
pub fn enumerate_golden(r: usize, entry_bound: i64) -> Result<Vec<IncidenceMatrix>> {
    if !(2..=3).contains(&r) {
        return Err(Error::UnsupportedDimension { dim: r });
    }
    if entry_bound < 2 {
        return Err(Error::TooSmall {
            name: "entry_bound",
            min: 2,
            value: entry_bound,
        });
    }
    let mut rows: Vec<(Vec<i64>, i64)> = Vec::new();
    let count = (entry_bound + 1).pow(r as u32);
    for mut code in 0..count {
        let mut row = Vec::with_capacity(r);
        for _ in 0..r {
            row.push(code % (entry_bound + 1));
            code /= entry_bound + 1;
        }
        let sum: i64 = row.iter().sum();
        if sum > 0 {
            rows.push((row, sum));
        }
    }
    let mut found = Vec::new();
    let mut pick = vec![0usize; r];
    // iterate all row index tuples
    let total = rows.len().pow(r as u32);
    for mut code in 0..total {
        for slot in pick.iter_mut() {
            *slot = code % rows.len();
            code /= rows.len();
        }
        if pick.iter().map(|&i| rows[i].1).min() != Some(1) {
            continue;
        }
        let data: Vec<i64> = pick.iter().flat_map(|&i| rows[i].0.clone()).collect();
        let m = IncidenceMatrix::new(r, data)?;
        if golden_pf_check(&m).passes {
            found.push(m);
        }
    }
    found.sort_by(|a, b| a.entries().cmp(b.entries()));
    Ok(found)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for sub in permutations(n - 1) {
        for slot in 0..n {
            let mut p = sub.clone();
            p.insert(slot, n - 1);
            out.push(p);
        }
    }
    out
}

/// Groups matrices by simultaneous row/column permutation. Classes come back
/// sorted by their smallest member, each class sorted row-major, duplicates
/// collapsed.
pub fn permutation_classes(ms: &[IncidenceMatrix]) -> Result<Vec<Vec<IncidenceMatrix>>> {
    let Some(first) = ms.first() else {
        return Ok(Vec::new());
    };
    let dim = first.dim();
    if ms.iter().any(|m| m.dim() != dim) {
        return Err(Error::DimensionMismatch);
    }
    let perms = permutations(dim);
    let mut classes: BTreeMap<Vec<i64>, BTreeSet<Vec<i64>>> = BTreeMap::new();
    for m in ms {
        let key = perms
            .iter()
            .map(|p| m.permute(p).map(|pm| pm.entries().to_vec()))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .min()
            .unwrap();
        classes.entry(key).or_default().insert(m.entries().to_vec());
    }
    classes
        .into_values()
        .map(|set| {
            set.into_iter()
                .map(|data| IncidenceMatrix::new(dim, data))
                .collect()
        })
        .collect()
}

/// Picks a display representative for a permutation class: the smallest
/// orbit member whose first row is the unit row (0,1,0,...), so the first
/// letter maps to a single second letter. Every primitive class with a unit
/// row somewhere has such a member, since a unit row cannot sit on its own
/// diagonal; classes without one fall back to the smallest orbit member.
pub fn unit_leading_representative(class: &[IncidenceMatrix]) -> Option<IncidenceMatrix> {
    let first = class.first()?;
    let dim = first.dim();
    let mut unit = vec![0i64; dim];
    if dim > 1 {
        unit[1] = 1;
    }
    let mut best: Option<Vec<i64>> = None;
    let mut fallback: Option<Vec<i64>> = None;
    for m in class {
        for p in permutations(dim) {
            let entries = m.permute(&p).ok()?.entries().to_vec();
            if entries[..dim] == unit[..] && best.as_ref().map_or(true, |b| entries < *b) {
                best = Some(entries.clone());
            }
            if fallback.as_ref().map_or(true, |b| entries < *b) {
                fallback = Some(entries);
            }
        }
    }
    best.or(fallback)
        .map(|data| IncidenceMatrix::new(dim, data).expect("entries came from a valid matrix"))
}

/// The r-letter family with first row (0,1,...,1), a unit upper diagonal
/// from the second row on, a 1 in position (2,2), and a 1 returning from the
/// last row to the first column.
pub fn remark_matrix(r: usize) -> Result<IncidenceMatrix> {
    if r < 3 {
        return Err(Error::TooSmall {
            name: "r",
            min: 3,
            value: r as i64,
        });
    }
    let mut m = IncidenceMatrix::new(r, vec![0; r * r])?;
    for j in 1..r {
        m.set(0, j, 1);
    }
    m.set(1, 1, 1);
    for i in 1..r - 1 {
        m.set(i, i + 1, 1);
    }
    m.set(r - 1, 0, 1);
    Ok(m)
}

/// Exact check that (1, phi, ..., phi) is a left eigenvector with eigenvalue
/// phi.
pub fn left_eigenvector_check(m: &IncidenceMatrix) -> bool {
    let n = m.dim();
    let phi = QuadInt::PHI;
    let v: Vec<QuadInt> = (0..n)
        .map(|i| if i == 0 { QuadInt::ONE } else { phi })
        .collect();
    (0..n).all(|j| {
        let mut acc = QuadInt::ZERO;
        for (i, &vi) in v.iter().enumerate() {
            acc = acc + vi.scale(m.get(i, j));
        }
        acc == phi * v[j]
    })
}
