//! N-block presentations of substitution subshifts.
//!
//! The sliding coding sends a sequence `x` to the sequence of its length-`n`
//! windows, each window replaced by its canonical number: blocks are numbered
//! by first occurrence in the one-sided fixed point. The induced block
//! substitution sends block `B` to the codes of the first `|s(first(B))|`
//! windows of `s(B)`, and projecting every block to its first letter
//! intertwines the block substitution with the original one.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::subst::Substitution;
use crate::word::{format_word, AlphabetStyle, Letter, Word};

/// Canonical numbering of the length-`n` blocks of a substitution subshift.
#[derive(Clone, Debug)]
pub struct BlockCode {
    block_len: usize,
    source_alphabet: usize,
    blocks: Vec<Word>,
    index: HashMap<Word, Letter>,
}

impl BlockCode {
    pub fn block_len(&self) -> usize {
        self.block_len
    }

    pub fn source_alphabet(&self) -> usize {
        self.source_alphabet
    }

    /// Number of blocks, i.e. the coded alphabet size.
    pub fn letter_count(&self) -> usize {
        self.blocks.len()
    }

    /// The block numbered `a`.
    pub fn block(&self, a: Letter) -> Result<&Word> {
        self.blocks.get(a).ok_or(Error::LetterOutOfRange {
            letter: a,
            alphabet: self.blocks.len(),
        })
    }

    pub fn blocks(&self) -> &[Word] {
        &self.blocks
    }

    /// First letter of the block numbered `a`.
    pub fn first_letter(&self, a: Letter) -> Result<Letter> {
        Ok(self.block(a)?[0])
    }

    fn code_of(&self, window: &[Letter], offset: usize) -> Result<Letter> {
        self.index.get(window).copied().ok_or_else(|| {
            Error::WindowNotInLanguage {
                offset,
                window: format_word(window, self.source_alphabet, AlphabetStyle::ZeroBased),
            }
        })
    }
}

/// Codes every length-`n` window of `w`; the result is `|w| - n + 1` letters.
pub fn block_encode(code: &BlockCode, w: &[Letter]) -> Result<Word> {
    let n = code.block_len;
    if w.len() < n {
        return Err(Error::WordTooShort {
            need: n,
            got: w.len(),
        });
    }
    w.windows(n)
        .enumerate()
        .map(|(i, win)| code.code_of(win, i))
        .collect()
}

/// Replaces every coded letter by the first letter of its block.
pub fn project_first(code: &BlockCode, w: &[Letter]) -> Result<Word> {
    w.iter().map(|&a| code.first_letter(a)).collect()
}

/// The `n`-block presentation of the subshift of `s`, grown from the fixed
/// point of `seed`. Returns the block substitution over the canonical block
/// alphabet together with the coding table.
pub fn nblock_substitution(
    s: &Substitution,
    n: usize,
    seed: Letter,
) -> Result<(Substitution, BlockCode)> {
    if n == 0 {
        return Err(Error::TooSmall {
            name: "n",
            min: 1,
            value: 0,
        });
    }
    let block_count = s.complexity(n)?;
    // Enumerate blocks by first occurrence in the fixed point. Every block
    // occurs there because the subshift is minimal.
    let mut blocks: Vec<Word> = Vec::with_capacity(block_count);
    let mut index: HashMap<Word, Letter> = HashMap::new();
    let mut len = (2 * n).max(16);
    loop {
        let prefix = s.fixed_point_prefix(seed, len)?;
        for win in prefix.windows(n) {
            if !index.contains_key(win) {
                index.insert(win.to_vec(), blocks.len());
                blocks.push(win.to_vec());
                if blocks.len() == block_count {
                    break;
                }
            }
        }
        if blocks.len() == block_count {
            break;
        }
        len = len
            .checked_mul(2)
            .ok_or_else(|| Error::Internal("fixed point prefix overflow".into()))?;
    }
    let code = BlockCode {
        block_len: n,
        source_alphabet: s.alphabet_size(),
        blocks,
        index,
    };
    let mut images = Vec::with_capacity(block_count);
    for b in 0..block_count {
        let block = code.block(b)?.clone();
        let image_len = s.image(block[0])?.len();
        let expanded = s.apply(&block)?;
        // |s(B)| >= image_len + n - 1, so the windows below always exist
        let mut img = Word::with_capacity(image_len);
        for i in 0..image_len {
            img.push(code.code_of(&expanded[i..i + n], i)?);
        }
        images.push(img);
    }
    Ok((Substitution::new(images)?, code))
}

/// Checks the intertwining law for the `n`-block presentation: projecting the
/// block substitution letterwise onto first letters agrees with the original
/// substitution, both on every block letter and on fixed-point prefixes of
/// length `depth`.
pub fn verify_key_equation(s: &Substitution, n: usize, depth: usize) -> Result<bool> {
    let seed = (0..s.alphabet_size())
        .find(|&a| {
            s.image(a)
                .map(|img| img.len() >= 2 && img[0] == a)
                .unwrap_or(false)
        })
        .ok_or(Error::NotASeed { letter: 0 })?;
    let (block_sub, code) = nblock_substitution(s, n, seed)?;
    for b in 0..block_sub.alphabet_size() {
        let lhs = project_first(&code, block_sub.image(b)?)?;
        let rhs = s.apply(&[code.first_letter(b)?])?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    if depth > 0 {
        // block letter 0 codes the window at the origin, so it seeds the
        // block fixed point
        let coded_prefix = block_sub.fixed_point_prefix(0, depth)?;
        let projected = project_first(&code, &coded_prefix)?;
        if projected != s.fixed_point_prefix(seed, depth)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> Substitution {
        Substitution::fibonacci()
    }

    #[test]
    fn two_block_presentation() {
        let (t, code) = nblock_substitution(&fib(), 2, 0).unwrap();
        assert_eq!(t.images(), &[vec![0, 1], vec![2], vec![0, 1]]);
        assert_eq!(
            code.blocks(),
            &[vec![0, 1], vec![1, 0], vec![0, 0]]
        );
    }

    #[test]
    fn four_block_presentation_and_square() {
        let (t, code) = nblock_substitution(&fib(), 4, 0).unwrap();
        assert_eq!(
            t.images(),
            &[vec![0, 1], vec![2], vec![3, 4], vec![0, 1], vec![2]]
        );
        assert_eq!(
            code.blocks(),
            &[
                vec![0, 1, 0, 0],
                vec![1, 0, 0, 1],
                vec![0, 0, 1, 0],
                vec![0, 1, 0, 1],
                vec![1, 0, 1, 0]
            ]
        );
        let sq = t.power(2).unwrap();
        assert_eq!(
            sq.images(),
            &[
                vec![0, 1, 2],
                vec![3, 4],
                vec![0, 1, 2],
                vec![0, 1, 2],
                vec![3, 4]
            ]
        );
    }

    #[test]
    fn one_block_presentation_is_the_substitution() {
        let (t, _) = nblock_substitution(&fib(), 1, 0).unwrap();
        assert_eq!(t, fib());
    }

    #[test]
    fn block_alphabet_grows_by_one() {
        for n in 1..=12 {
            let (t, _) = nblock_substitution(&fib(), n, 0).unwrap();
            assert_eq!(t.alphabet_size(), n + 1);
        }
    }

    #[test]
    fn encode_and_project() {
        let (_, code) = nblock_substitution(&fib(), 2, 0).unwrap();
        let coded = block_encode(&code, &[0, 1, 0, 0, 1, 0]).unwrap();
        assert_eq!(coded, vec![0, 1, 2, 0, 1]);
        assert_eq!(
            project_first(&code, &coded).unwrap(),
            vec![0, 1, 0, 0, 1]
        );
        let err = block_encode(&code, &[0, 1, 1, 0]);
        assert!(matches!(
            err,
            Err(Error::WindowNotInLanguage { offset: 1, .. })
        ));
    }

    #[test]
    fn key_equation_holds() {
        for n in 1..=8 {
            assert!(verify_key_equation(&fib(), n, 300).unwrap(), "n={n}");
        }
    }

    #[test]
    fn encoding_bijects_languages() {
        let s = fib();
        for n in 1..=4 {
            let (t, code) = nblock_substitution(&s, n, 0).unwrap();
            for l in 1..=5 {
                let source = s.language(n + l - 1).unwrap();
                let target = t.language(l).unwrap();
                let encoded: std::collections::BTreeSet<Word> = source
                    .words
                    .iter()
                    .map(|w| block_encode(&code, w).unwrap())
                    .collect();
                assert_eq!(encoded, target.words, "n={n} l={l}");
                assert_eq!(source.count(), target.count());
            }
        }
    }
}
