//! Language-preserving rebuilds of a substitution: repartitioning the images
//! of two generating blocks, and the deterministic eta family those cuts
//! produce on Fibonacci-many letters.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::fib::fib;
use crate::subst::Substitution;
use crate::word::{Letter, Word};

/// A repartition of the images of two letter-disjoint blocks `b0`, `b1` that
/// jointly cover the alphabet: the image word of each block is re-cut into
/// `|b|` pieces with the given lengths, and letter `b[i]` is remapped to the
/// i-th piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReshapeSpec {
    pub b0: Word,
    pub b1: Word,
    pub cuts0: Vec<usize>,
    pub cuts1: Vec<usize>,
}

/// Rebuilds `s` by re-cutting the images of the two blocks in `spec`.
pub fn partition_reshape(s: &Substitution, spec: &ReshapeSpec) -> Result<Substitution> {
    let k = s.alphabet_size();
    let mut seen = vec![0usize; k];
    for &a in spec.b0.iter().chain(spec.b1.iter()) {
        if a >= k {
            return Err(Error::LetterOutOfRange {
                letter: a,
                alphabet: k,
            });
        }
        seen[a] += 1;
    }
    for (letter, &count) in seen.iter().enumerate() {
        if count != 1 {
            return Err(Error::BlockCoverage { letter, count });
        }
    }
    let mut images: Vec<Word> = vec![Word::new(); k];
    for (which, (block, cuts)) in [(&spec.b0, &spec.cuts0), (&spec.b1, &spec.cuts1)]
        .into_iter()
        .enumerate()
    {
        if cuts.len() != block.len() {
            return Err(Error::BadLengthProfile {
                reason: "need exactly one cut length per letter of the block",
            });
        }
        if cuts.iter().any(|&c| c == 0) {
            return Err(Error::ZeroCut);
        }
        let expanded = s.apply(block)?;
        let total: usize = cuts.iter().sum();
        if total != expanded.len() {
            return Err(Error::CutLengthMismatch {
                block: which,
                expected: expanded.len(),
                got: total,
            });
        }
        let mut pos = 0;
        for (&letter, &len) in block.iter().zip(cuts.iter()) {
            images[letter] = expanded[pos..pos + len].to_vec();
            pos += len;
        }
    }
    Substitution::new(images)
}

/// Moves the first letter of `w` to the back.
pub fn rotate_word(w: &[Letter]) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut out = w[1..].to_vec();
    out.push(w[0]);
    Ok(out)
}

/// A member of the eta family: a substitution on `F_n` letters whose alphabet
/// splits into three species by how their images grow.
#[derive(Clone, Debug)]
pub struct EtaFamilyMember {
    pub n: usize,
    pub substitution: Substitution,
    /// Letters with two- or three-letter images filling the short interval.
    pub small: Range<Letter>,
    /// Letters shifted forward; the anchor `medium.start` maps to two letters.
    pub medium: Range<Letter>,
    /// Letters whose images tile the long interval with pieces of length 1-2.
    pub large: Range<Letter>,
}

impl EtaFamilyMember {
    /// The exceptional medium letter with a two-letter image.
    pub fn medium_anchor(&self) -> Letter {
        self.medium.start
    }

    /// The first letter of the large species.
    pub fn large_anchor(&self) -> Letter {
        self.large.start
    }
}

/// Builds the n-th eta substitution with the standard length profile
/// `rotate_word` of the (n-4)-th Fibonacci iterate.
pub fn eta_family(n: usize) -> Result<EtaFamilyMember> {
    if n < 5 {
        return Err(Error::TooSmall {
            name: "n",
            min: 5,
            value: n as i64,
        });
    }
    let phi = Substitution::fibonacci();
    let v = rotate_word(&phi.power((n - 4) as u32)?.image(0)?.clone())?;
    eta_family_with_profile(n, &v)
}

/// Expert entry point: builds eta_n from a custom binary length profile `v`.
/// `v` must have length `F_{n-2}`, start with 1, end with 0, and avoid "11";
/// the standard profile satisfies these, and any such profile yields a
/// well-formed member (validity beyond the shape checks is up to the caller).
pub fn eta_family_with_profile(n: usize, v: &[Letter]) -> Result<EtaFamilyMember> {
    if n < 5 {
        return Err(Error::TooSmall {
            name: "n",
            min: 5,
            value: n as i64,
        });
    }
    let fn3 = fib(n - 3) as usize;
    let fn2 = fib(n - 2) as usize;
    let fn1 = fib(n - 1) as usize;
    let fnn = fib(n) as usize;
    if v.len() != fn2 {
        return Err(Error::BadLengthProfile {
            reason: "profile length must be the block count of the large species",
        });
    }
    if v.iter().any(|&b| b > 1) {
        return Err(Error::BadLengthProfile {
            reason: "profile must be binary",
        });
    }
    if v[0] != 1 || v[fn2 - 1] != 0 {
        return Err(Error::BadLengthProfile {
            reason: "profile must start with 1 and end with 0",
        });
    }
    if v.windows(2).any(|w| w == [1, 1]) {
        return Err(Error::BadLengthProfile {
            reason: "profile must not contain 11",
        });
    }

    let mut images: Vec<Word> = vec![Word::new(); fnn];

    // Large species: images of lengths 2 - v[k] tile the interval 0..fn1.
    let mut interior_cuts = vec![false; fn1]; // interior_cuts[c]: boundary after c letters
    let mut pos = 0usize;
    for (k, &bit) in v.iter().enumerate() {
        let len = 2 - bit;
        images[fn1 + k] = (pos..pos + len).collect();
        pos += len;
        if pos < fn1 {
            interior_cuts[pos] = true;
        }
    }
    debug_assert_eq!(pos, fn1);

    // Small species: tile the interval 0..fn1-1, cutting exactly where the
    // large species does not.
    let mut start = 0usize;
    let mut small_images = Vec::with_capacity(fn3);
    for c in 1..fn1 - 1 {
        if !interior_cuts[c] {
            small_images.push((start..c).collect::<Word>());
            start = c;
        }
    }
    small_images.push((start..fn1 - 1).collect());
    if small_images.len() != fn3 {
        return Err(Error::Internal(format!(
            "complement cut rule produced {} small images, expected {fn3}",
            small_images.len()
        )));
    }
    images[..fn3].clone_from_slice(&small_images);

    // Medium species: shift forward, except the anchor which restarts the
    // long interval.
    images[fn3] = vec![fn1 - 1, fn1];
    for a in fn3 + 1..fn1 {
        images[a] = vec![a + fn2];
    }

    Ok(EtaFamilyMember {
        n,
        substitution: Substitution::new(images)?,
        small: 0..fn3,
        medium: fn3..fn1,
        large: fn1..fnn,
    })
}

/// The map sending each letter to the first letter of `s^k` applied to it.
pub fn first_letter_map(s: &Substitution, k: usize) -> Result<Vec<Letter>> {
    let size = s.alphabet_size();
    let step: Vec<Letter> = (0..size)
        .map(|a| s.image(a).map(|img| img[0]))
        .collect::<Result<_>>()?;
    let mut out: Vec<Letter> = (0..size).collect();
    for _ in 0..k {
        for slot in out.iter_mut() {
            *slot = step[*slot];
        }
    }
    Ok(out)
}

/// Certificate that an eta member is primitive with linearly independent
/// image counts, carried by finitary checks only.
#[derive(Clone, Debug)]
pub struct EtaCertificate {
    pub n: usize,
    pub primitive: bool,
    pub full_rank: bool,
    /// First letters of squared images strictly decrease on the large species
    /// and the non-anchor medium letters.
    pub decreasing_on_tail: bool,
    /// Odd powers grow: the (2m+1)-st image of every small letter has at
    /// least m+2 letters, for m up to the alphabet size.
    pub growth_ok: bool,
    /// Largest k needed for letter 0 to appear in the k-th image of a letter.
    pub letter_zero_reach: usize,
    /// The allowed bound for that reach, twice the alphabet size.
    pub reach_bound: usize,
}

/// Runs every certificate check on eta_n, failing with the list of violated
/// clauses if any check does not hold.
pub fn certify_eta(n: usize) -> Result<EtaCertificate> {
    let member = eta_family(n)?;
    let eta = &member.substitution;
    let size = eta.alphabet_size();
    let mut failed: Vec<&str> = Vec::new();

    let primitive = eta.is_primitive();
    if !primitive {
        failed.push("primitivity");
    }
    let full_rank = eta.has_full_rank();
    if !full_rank {
        failed.push("full rank");
    }

    let f = first_letter_map(eta, 2)?;
    let anchor = member.medium_anchor();
    let decreasing_on_tail = (member.medium.start..member.large.end)
        .filter(|&a| a != anchor)
        .all(|a| f[a] < a);
    if !decreasing_on_tail {
        failed.push("squared first letters decrease past the small species");
    }

    // Lengths of iterated images, saturating far above any threshold used.
    let mut lens: Vec<u64> = vec![1; size];
    let advance = |lens: &[u64]| -> Result<Vec<u64>> {
        (0..size)
            .map(|a| {
                Ok(eta
                    .image(a)?
                    .iter()
                    .fold(0u64, |acc, &b| acc.saturating_add(lens[b])))
            })
            .collect()
    };
    let mut growth_ok = true;
    lens = advance(&lens)?; // power 1
    for m in 0..=size as u64 {
        // lens currently holds the lengths for power 2m+1
        if member.small.clone().any(|a| lens[a] < m + 2) {
            growth_ok = false;
            break;
        }
        lens = advance(&advance(&lens)?)?;
    }
    if !growth_ok {
        failed.push("odd powers of small letters grow too slowly");
    }

    // Letters reachable in the k-th image, as bitsets; find for every letter
    // the first k whose image contains letter 0.
    let reach_bound = 2 * size;
    let words = size.div_ceil(64);
    let mut reach: Vec<Vec<u64>> = (0..size)
        .map(|a| {
            let mut row = vec![0u64; words];
            for &b in eta.image(a).unwrap() {
                row[b / 64] |= 1 << (b % 64);
            }
            row
        })
        .collect();
    let mut first_zero = vec![usize::MAX; size];
    let mut k = 1;
    loop {
        for a in 0..size {
            if first_zero[a] == usize::MAX && reach[a][0] & 1 == 1 {
                first_zero[a] = k;
            }
        }
        if first_zero.iter().all(|&v| v != usize::MAX) || k > reach_bound {
            break;
        }
        reach = (0..size)
            .map(|a| {
                let mut row = vec![0u64; words];
                for &b in eta.image(a).unwrap() {
                    for (slot, &bits) in row.iter_mut().zip(&reach[b]) {
                        *slot |= bits;
                    }
                }
                row
            })
            .collect();
        k += 1;
    }
    let letter_zero_reach = first_zero.iter().copied().max().unwrap_or(0);
    if letter_zero_reach > reach_bound || first_zero.contains(&usize::MAX) {
        failed.push("letter 0 not reached within the bound");
    }

    if failed.is_empty() {
        Ok(EtaCertificate {
            n,
            primitive,
            full_rank,
            decreasing_on_tail,
            growth_ok,
            letter_zero_reach,
            reach_bound,
        })
    } else {
        Err(Error::CertificateFailure {
            clauses: failed.join("; "),
        })
    }
}
