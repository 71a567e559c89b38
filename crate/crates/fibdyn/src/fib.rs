//! Fibonacci-specific machinery: singular and return words, the two-block
//! decomposition of the coded system, exact circle-rotation codings, and the
//! zero-doubled word.

use crate::error::{Error, Result};
use crate::nblock::{nblock_substitution, BlockCode};
use crate::quadint::{floor_mul, QuadInt};
use crate::subst::Substitution;
use crate::word::{Letter, Word};

/// `F_1 = F_2 = 1`; `fib(0) = 0` for convenience. Panics on u64 overflow
/// (first at n = 94, far beyond anything the rest of the crate asks for).
pub fn fib(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        let next = a.checked_add(b).expect("fibonacci overflow");
        a = b;
        b = next;
    }
    a
}

/// The n-th singular word: w1 = 1, w2 = 00, w3 = 101, and
/// w_n = w_{n-2} w_{n-3} w_{n-2} afterwards. `|w_n| = F_{n+1}`.
pub fn singular_word(n: usize) -> Result<Word> {
    if n < 1 {
        return Err(Error::TooSmall {
            name: "n",
            min: 1,
            value: n as i64,
        });
    }
    let mut last3: [Word; 3] = [vec![1], vec![0, 0], vec![1, 0, 1]];
    if n <= 3 {
        return Ok(last3[n - 1].clone());
    }
    for _ in 4..=n {
        let mut w = last3[1].clone();
        w.extend_from_slice(&last3[0]);
        w.extend_from_slice(&last3[1]);
        last3 = [
            std::mem::take(&mut last3[1]),
            std::mem::take(&mut last3[2]),
            w,
        ];
    }
    Ok(last3[2].clone())
}

/// The return words of w_n: `u_n = w_n w_{n+1}` and `v_n = w_n w_{n-1}`,
/// of lengths `F_{n+3}` and `F_{n+2}`.
pub fn return_words(n: usize) -> Result<(Word, Word)> {
    if n < 2 {
        return Err(Error::TooSmall {
            name: "n",
            min: 2,
            value: n as i64,
        });
    }
    let w = singular_word(n)?;
    let mut u = w.clone();
    u.extend(singular_word(n + 1)?);
    let mut v = w;
    v.extend(singular_word(n - 1)?);
    Ok((u, v))
}

/// The canonical `n`-block coding of the Fibonacci subshift.
pub fn fibonacci_block_code(n: usize) -> Result<BlockCode> {
    let (_, code) = nblock_substitution(&Substitution::fibonacci(), n, 0)?;
    Ok(code)
}

/// The two words over the `F_{n-2}`-block alphabet whose concatenations make
/// up the coded Fibonacci system, lengths `F_n` and `F_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionBlocks {
    pub n: usize,
    /// The window length of the block coding, `F_{n-2}`.
    pub block_len: usize,
    pub b0: Word,
    pub b1: Word,
}

/// Builds the decomposition blocks for `n >= 5`: the block codings of
/// `u_{n-3} w-_{n-3}` and `v_{n-3} w-_{n-3}`, where `w-` drops the last
/// letter of the singular word.
pub fn decomposition_blocks(n: usize) -> Result<DecompositionBlocks> {
    if n < 5 {
        return Err(Error::TooSmall {
            name: "n",
            min: 5,
            value: n as i64,
        });
    }
    let block_len = fib(n - 2) as usize;
    let code = fibonacci_block_code(block_len)?;
    let (u, v) = return_words(n - 3)?;
    let mut tail = singular_word(n - 3)?;
    tail.pop();
    let encode = |head: Word| -> Result<Word> {
        let mut w = head;
        w.extend_from_slice(&tail);
        crate::nblock::block_encode(&code, &w)
    };
    Ok(DecompositionBlocks {
        n,
        block_len,
        b0: encode(u)?,
        b1: encode(v)?,
    })
}

/// One way of reading `w` as `(suffix of a block) (full blocks)* (prefix of a
/// block)`: `head` letters of leading slack, the sequence of complete blocks
/// (0 for `b0`, 1 for `b1`), and `tail` letters of trailing slack.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockParse {
    pub head: usize,
    pub induced: Word,
    pub tail: usize,
}

/// All parses of a word as block concatenations, up to [`MAX_PARSES`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseOutcome {
    pub parses: Vec<BlockParse>,
    /// True if the enumeration stopped at the cap.
    pub truncated: bool,
}

/// Cap on the number of parses [`parse_concatenation`] reports.
pub const MAX_PARSES: usize = 64;

/// Parses `w` as a concatenation of `b0` and `b1` with proper partial blocks
/// allowed at both ends. Every parse is reported (up to [`MAX_PARSES`]); if
/// none exists the error carries the longest prefix of `w` that any partial
/// parse can cover.
pub fn parse_concatenation(w: &[Letter], b0: &[Letter], b1: &[Letter]) -> Result<ParseOutcome> {
    if b0.is_empty() || b1.is_empty() {
        return Err(Error::EmptyWord);
    }
    let need = b0.len() + b1.len();
    if w.len() < need {
        return Err(Error::WordTooShort {
            need,
            got: w.len(),
        });
    }
    let blocks: [&[Letter]; 2] = [b0, b1];

    // Start positions: empty head, or any proper block suffix matching a
    // prefix of w.
    let mut starts: Vec<usize> = vec![0];
    for b in blocks {
        for head in 1..b.len() {
            if head <= w.len() && w[..head] == b[b.len() - head..] {
                starts.push(head);
            }
        }
    }
    starts.sort_unstable();
    starts.dedup();

    let mut parses = Vec::new();
    let mut truncated = false;
    let mut furthest = 0usize;
    // Depth-first over full-block choices; the state is (position, blocks so
    // far). Block counts stay small because positions only increase.
    for &head in &starts {
        let mut stack: Vec<(usize, Word)> = vec![(head, Word::new())];
        while let Some((pos, induced)) = stack.pop() {
            furthest = furthest.max(pos + longest_block_prefix(&w[pos..], b0, b1));
            // Accept: remainder empty or a proper prefix of a block.
            let rest = &w[pos..];
            let ok_tail = rest.is_empty()
                || blocks
                    .iter()
                    .any(|b| rest.len() < b.len() && &b[..rest.len()] == rest);
            if ok_tail {
                if parses.len() == MAX_PARSES {
                    truncated = true;
                } else {
                    parses.push(BlockParse {
                        head,
                        induced: induced.clone(),
                        tail: rest.len(),
                    });
                }
            }
            for (digit, b) in blocks.iter().enumerate() {
                if rest.len() >= b.len() && &rest[..b.len()] == *b {
                    let mut next = induced.clone();
                    next.push(digit);
                    stack.push((pos + b.len(), next));
                }
            }
            if truncated {
                break;
            }
        }
        if truncated {
            break;
        }
    }
    if parses.is_empty() {
        return Err(Error::NotDecomposable {
            longest_prefix: furthest,
        });
    }
    parses.sort_by(|a, b| (a.head, &a.induced).cmp(&(b.head, &b.induced)));
    Ok(ParseOutcome { parses, truncated })
}

fn longest_block_prefix(rest: &[Letter], b0: &[Letter], b1: &[Letter]) -> usize {
    let lcp = |b: &[Letter]| {
        rest.iter()
            .zip(b.iter())
            .take_while(|(x, y)| x == y)
            .count()
    };
    lcp(b0).max(lcp(b1))
}

/// Doubles every 0 of a binary word and keeps the 1s.
pub fn double_zeros(w: &[Letter]) -> Result<Word> {
    let mut out = Word::with_capacity(2 * w.len());
    for &a in w {
        match a {
            0 => out.extend_from_slice(&[0, 0]),
            1 => out.push(1),
            other => return Err(Error::NonBinaryLetter { letter: other }),
        }
    }
    Ok(out)
}

/// The n-th letter of the zero-doubled Fibonacci word by the closed floor
/// formula `[(n+2)*phi] - [n*phi] - [2*phi]` with `phi` the golden ratio.
pub fn doubled_letter(n: u64) -> Result<Letter> {
    if n < 1 {
        return Err(Error::TooSmall {
            name: "n",
            min: 1,
            value: n as i64,
        });
    }
    let n = n as i64;
    let val = floor_mul(QuadInt::PHI, n + 2) - floor_mul(QuadInt::PHI, n) - 3;
    match val {
        0 => Ok(0),
        1 => Ok(1),
        other => Err(Error::Internal(format!(
            "doubled letter {other} at {n} is not binary"
        ))),
    }
}

/// All fourth powers `vvvv` in `w` with `1 <= |v| <= max_period`, reported as
/// `(offset, |v|)` pairs sorted by offset then period.
pub fn find_fourth_powers(w: &[Letter], max_period: usize) -> Vec<(usize, usize)> {
    let mut hits = Vec::new();
    for p in 1..=max_period {
        if 4 * p > w.len() {
            break;
        }
        // run[i] counts how far w[i..] agrees with w[i+p..]; a fourth power
        // of period p at offset i needs agreement for 3p letters.
        let m = w.len() - p;
        let mut run = 0usize;
        let mut runs = vec![0usize; m];
        for i in (0..m).rev() {
            run = if w[i] == w[i + p] { run + 1 } else { 0 };
            runs[i] = run;
        }
        for (i, &r) in runs.iter().enumerate() {
            if r >= 3 * p {
                hits.push((i, p));
            }
        }
    }
    hits.sort_unstable();
    hits
}

/// A coding of the rotation orbit `{z + n*g}` by the two intervals `[0, g)`
/// and `(g, 1)`: exact when the orbit misses both endpoints on the window,
/// otherwise the left and right codes with the indices that hit an endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RotationCode {
    Exact(Word),
    Ambiguous {
        hits: Vec<i64>,
        left: Word,
        right: Word,
    },
}

/// Codes the rotation orbit of `z` (reduced mod 1) over indices
/// `from..=to`. Landing exactly on 0 or on the interval break `g` yields the
/// two one-sided codes instead of a single word.
pub fn rotation_code(z: QuadInt, from: i64, to: i64) -> RotationCode {
    let z = z.frac();
    let mut hits = Vec::new();
    let mut left = Word::new();
    let mut right = Word::new();
    let mut n = from;
    while n <= to {
        let point = (z + QuadInt::GAMMA.scale(n)).frac();
        if point.is_zero() {
            hits.push(n);
            left.push(1);
            right.push(0);
        } else if point == QuadInt::GAMMA {
            hits.push(n);
            left.push(0);
            right.push(1);
        } else {
            let letter = if point < QuadInt::GAMMA { 0 } else { 1 };
            left.push(letter);
            right.push(letter);
        }
        n += 1;
    }
    if hits.is_empty() {
        RotationCode::Exact(left)
    } else {
        RotationCode::Ambiguous { hits, left, right }
    }
}
