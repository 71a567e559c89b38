//! Substitutions on finite alphabets and their basic combinatorics.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matrix::IncidenceMatrix;
use crate::word::{
    format_letter, format_word, infer_style, parse_symbol, word_tokens, AlphabetStyle, Letter,
    Word,
};

/// A substitution `s`: every letter of `0..alphabet_size` has a nonempty
/// image word over the same alphabet.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Substitution {
    images: Vec<Word>,
}

/// The set of all length-`n` factors of the subshift of a primitive
/// substitution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorLanguage {
    pub len: usize,
    pub words: BTreeSet<Word>,
}

impl FactorLanguage {
    pub fn contains(&self, w: &[Letter]) -> bool {
        w.len() == self.len && self.words.contains(w)
    }

    pub fn count(&self) -> usize {
        self.words.len()
    }
}

impl Substitution {
    pub fn new(images: Vec<Word>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let k = images.len();
        for (a, img) in images.iter().enumerate() {
            if img.is_empty() {
                return Err(Error::EmptyImage { letter: a });
            }
            for &b in img {
                if b >= k {
                    return Err(Error::LetterOutOfRange {
                        letter: b,
                        alphabet: k,
                    });
                }
            }
        }
        Ok(Substitution { images })
    }

    /// `0 -> 01, 1 -> 0`.
    pub fn fibonacci() -> Self {
        Substitution {
            images: vec![vec![0, 1], vec![0]],
        }
    }

    /// `0 -> 10, 1 -> 0` (every image of the Fibonacci substitution reversed).
    pub fn reverse_fibonacci() -> Self {
        Substitution {
            images: vec![vec![1, 0], vec![0]],
        }
    }

    pub fn alphabet_size(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, a: Letter) -> Result<&Word> {
        self.images.get(a).ok_or(Error::LetterOutOfRange {
            letter: a,
            alphabet: self.images.len(),
        })
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn apply(&self, w: &[Letter]) -> Result<Word> {
        let mut out = Vec::new();
        for &a in w {
            out.extend_from_slice(self.image(a)?);
        }
        Ok(out)
    }

    /// `s^k` for `k >= 1`.
    pub fn power(&self, k: u32) -> Result<Substitution> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let mut images = self.images.clone();
        for _ in 1..k {
            images = images
                .iter()
                .map(|w| self.apply(w))
                .collect::<Result<Vec<_>>>()?;
        }
        Ok(Substitution { images })
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let k = self.alphabet_size();
        let mut m = IncidenceMatrix::new(k, vec![0; k * k]).expect("square");
        for (a, img) in self.images.iter().enumerate() {
            for &b in img {
                m.set(a, b, m.get(a, b) + 1);
            }
        }
        m
    }

    pub fn is_primitive(&self) -> bool {
        self.incidence_matrix().is_primitive()
    }

    /// Pairwise distinct images.
    pub fn is_injective(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.images.iter().all(|img| seen.insert(img.clone()))
    }

    /// Nonzero determinant of the incidence matrix (exact integer test).
    /// Full rank forces every power to stay injective.
    pub fn has_full_rank(&self) -> bool {
        self.incidence_matrix().det_is_nonzero()
    }

    fn check_seed(&self, a: Letter) -> Result<()> {
        let img = self.image(a)?;
        if img.len() < 2 || img[0] != a {
            return Err(Error::NotASeed { letter: a });
        }
        Ok(())
    }

    /// First `len` letters of the one-sided fixed point grown from `seed`.
    /// Requires `s(seed)` to start with `seed` and have length at least 2.
    pub fn fixed_point_prefix(&self, seed: Letter, len: usize) -> Result<Word> {
        if len == 0 {
            return Err(Error::TooSmall {
                name: "len",
                min: 1,
                value: 0,
            });
        }
        self.check_seed(seed)?;
        let mut w = vec![seed];
        while w.len() < len {
            w = self.apply(&w)?;
        }
        w.truncate(len);
        Ok(w)
    }

    /// Letters that occur somewhere in `s^k(seed)` for some `k`.
    fn reachable_letters(&self, seed: Letter) -> Vec<bool> {
        let k = self.alphabet_size();
        let mut seen = vec![false; k];
        let mut stack = vec![seed];
        seen[seed] = true;
        while let Some(a) = stack.pop() {
            for &b in &self.images[a] {
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen
    }

    /// Renumbers letters by first occurrence in the one-sided fixed point from
    /// `seed`. Returns the renumbered substitution and the permutation
    /// (`perm[old] = new`).
    pub fn canonical_relabel(&self, seed: Letter) -> Result<(Substitution, Vec<Letter>)> {
        self.check_seed(seed)?;
        let k = self.alphabet_size();
        let reach = self.reachable_letters(seed);
        if let Some(a) = reach.iter().position(|&r| !r) {
            return Err(Error::UnreachableLetter { letter: a });
        }
        let mut order: Vec<Letter> = Vec::with_capacity(k);
        let mut seen = vec![false; k];
        let mut len = 2 * k.max(2);
        loop {
            let prefix = self.fixed_point_prefix(seed, len)?;
            for &a in &prefix {
                if !seen[a] {
                    seen[a] = true;
                    order.push(a);
                    if order.len() == k {
                        break;
                    }
                }
            }
            if order.len() == k {
                break;
            }
            len *= 2;
        }
        let mut perm = vec![0usize; k];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        let mut images = vec![Word::new(); k];
        for old in 0..k {
            images[perm[old]] = self.images[old].iter().map(|&b| perm[b]).collect();
        }
        Ok((Substitution { images }, perm))
    }

    /// All length-2 factors of the subshift: the closure of the length-2
    /// factors of the images under "apply `s`, take length-2 factors".
    fn two_factors(&self) -> Result<BTreeSet<Word>> {
        let mut set: BTreeSet<Word> = BTreeSet::new();
        let mut queue: Vec<Word> = Vec::new();
        for img in &self.images {
            for win in img.windows(2) {
                if set.insert(win.to_vec()) {
                    queue.push(win.to_vec());
                }
            }
        }
        while let Some(w) = queue.pop() {
            let img = self.apply(&w)?;
            for win in img.windows(2) {
                if set.insert(win.to_vec()) {
                    queue.push(win.to_vec());
                }
            }
        }
        Ok(set)
    }

    /// The length-`n` factor language. Requires primitivity (so that every
    /// letter occurs and factors of images are factors of the subshift) and
    /// at least one growing image.
    pub fn language(&self, n: usize) -> Result<FactorLanguage> {
        if n == 0 {
            return Err(Error::TooSmall {
                name: "n",
                min: 1,
                value: 0,
            });
        }
        if !self.is_primitive() {
            return Err(Error::PrimitivityRequired);
        }
        if self.images.iter().all(|img| img.len() < 2) {
            return Err(Error::NotExpanding);
        }
        if n == 1 {
            return Ok(FactorLanguage {
                len: 1,
                words: (0..self.alphabet_size()).map(|a| vec![a]).collect(),
            });
        }
        let mut current: BTreeSet<Word> = self.two_factors()?;
        if n == 2 {
            return Ok(FactorLanguage {
                len: 2,
                words: current,
            });
        }
        // Pump the length-2 factors with s until every single letter expands
        // to at least n letters; then any length-n factor of the subshift
        // spans at most two adjacent letter images, hence shows up as a
        // window of some pumped 2-factor.
        // letter_lens[a] = |s^j(a)| where j counts pump rounds applied so far
        let mut letter_lens: Vec<usize> = vec![1; self.alphabet_size()];
        while letter_lens.iter().copied().min().unwrap_or(0) < n {
            letter_lens = self
                .images
                .iter()
                .map(|img| img.iter().map(|&b| letter_lens[b]).sum())
                .collect();
            current = current
                .iter()
                .map(|w| self.apply(w))
                .collect::<Result<BTreeSet<_>>>()?;
        }
        let mut words = BTreeSet::new();
        for w in &current {
            for win in w.windows(n) {
                words.insert(win.to_vec());
            }
        }
        Ok(FactorLanguage { len: n, words })
    }

    /// Number of length-`n` factors.
    pub fn complexity(&self, n: usize) -> Result<usize> {
        Ok(self.language(n)?.count())
    }

    /// Parses `0->01;1->0`, `a->b;b->ca;c->ba`, or comma-list rules like
    /// `1->1,2;2->3`. The style (zero-based digits, one-based digits,
    /// letters) is inferred from the symbols and returned alongside.
    pub fn parse(input: &str) -> Result<(Substitution, AlphabetStyle)> {
        let mut rules: Vec<(String, String)> = Vec::new();
        for (idx, rule) in input.split(';').enumerate() {
            let rule = rule.trim();
            if rule.is_empty() {
                if idx > 0 && input.split(';').skip(idx + 1).all(|r| r.trim().is_empty()) {
                    continue; // trailing semicolon
                }
                return Err(Error::Parse {
                    pos: idx,
                    msg: "empty rule".into(),
                });
            }
            let Some((lhs, rhs)) = rule.split_once("->") else {
                return Err(Error::Parse {
                    pos: idx,
                    msg: format!("rule {rule:?} has no '->'"),
                });
            };
            rules.push((lhs.trim().to_string(), rhs.trim().to_string()));
        }
        if rules.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "no rules".into(),
            });
        }
        let mut symbols = Vec::new();
        for (lhs, rhs) in &rules {
            symbols.extend(word_tokens(lhs));
            symbols.extend(word_tokens(rhs));
        }
        let style = infer_style(&symbols)?;
        let k = rules.len();
        let mut images: Vec<Option<Word>> = vec![None; k];
        for (pos, (lhs, rhs)) in rules.iter().enumerate() {
            let lhs_tokens = word_tokens(lhs);
            if lhs_tokens.len() != 1 {
                return Err(Error::Parse {
                    pos,
                    msg: format!("left side {lhs:?} must be a single letter"),
                });
            }
            let a = parse_symbol(&lhs_tokens[0], style)?;
            if a >= k {
                return Err(Error::Parse {
                    pos,
                    msg: format!("letter {lhs:?} out of range for {k} rules"),
                });
            }
            if images[a].is_some() {
                return Err(Error::Parse {
                    pos,
                    msg: format!("duplicate rule for {lhs:?}"),
                });
            }
            let img = word_tokens(rhs)
                .iter()
                .map(|t| parse_symbol(t, style))
                .collect::<Result<Word>>()?;
            images[a] = Some(img);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(a, img)| {
                img.ok_or(Error::Parse {
                    pos: a,
                    msg: format!("missing rule for letter {}", format_letter(a, style)),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((Substitution::new(images)?, style))
    }

    /// Inverse of `parse` for the given style.
    pub fn format(&self, style: AlphabetStyle) -> String {
        let k = self.alphabet_size();
        self.images
            .iter()
            .enumerate()
            .map(|(a, img)| {
                format!(
                    "{}->{}",
                    format_word(&[a], k, style),
                    format_word(img, k, style)
                )
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> Substitution {
        Substitution::fibonacci()
    }

    #[test]
    fn apply_and_power() {
        let s = fib();
        assert_eq!(s.apply(&[0, 1]).unwrap(), vec![0, 1, 0]);
        let sq = s.power(2).unwrap();
        assert_eq!(sq.images(), &[vec![0, 1, 0], vec![0, 1]]);
        assert!(matches!(s.power(0), Err(Error::ZeroPower)));
        assert!(s.apply(&[7]).is_err());
    }

    #[test]
    fn fixed_point_prefixes() {
        let s = fib();
        assert_eq!(
            s.fixed_point_prefix(0, 13).unwrap(),
            vec![0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1]
        );
        assert!(matches!(
            s.fixed_point_prefix(1, 5),
            Err(Error::NotASeed { letter: 1 })
        ));
        // standard-coded 2-block substitution, seed letter 0, length 8
        let t = Substitution::new(vec![vec![0, 1], vec![2], vec![0, 1]]).unwrap();
        assert_eq!(
            t.fixed_point_prefix(0, 8).unwrap(),
            vec![0, 1, 2, 0, 1, 0, 1, 2]
        );
    }

    #[test]
    fn language_of_fibonacci() {
        let s = fib();
        let l1 = s.language(1).unwrap();
        assert_eq!(l1.count(), 2);
        let l2 = s.language(2).unwrap();
        let expect: BTreeSet<Word> =
            [vec![0, 0], vec![0, 1], vec![1, 0]].into_iter().collect();
        assert_eq!(l2.words, expect);
        for n in 1..=30 {
            assert_eq!(s.complexity(n).unwrap(), n + 1, "complexity at {n}");
        }
        let l5 = s.language(5).unwrap();
        assert!(l5.contains(&[0, 0, 1, 0, 0]));
        assert!(!l5.contains(&[1, 1, 0, 0, 1]));
    }

    #[test]
    fn language_requires_primitivity() {
        let s = Substitution::new(vec![vec![0, 1], vec![1]]).unwrap();
        assert!(!s.is_primitive());
        assert!(matches!(s.language(2), Err(Error::PrimitivityRequired)));
    }

    #[test]
    fn primitivity_examples() {
        assert!(fib().is_primitive());
        // 1->12, 2->31, 3->4, 4->3 in one-based symbols
        let (s, _) = Substitution::parse("1->12;2->31;3->4;4->3").unwrap();
        assert!(!s.is_primitive());
    }

    #[test]
    fn injectivity_and_rank() {
        assert!(fib().is_injective());
        // block presentation with a repeated image is non-injective
        let (s, _) = Substitution::parse("1->12;2->3;3->12").unwrap();
        assert!(!s.is_injective());
        assert!(!s.has_full_rank());
        // 1->12;2->3;3->45;4->1;5->23 has determinant 0
        let (z, _) = Substitution::parse("1->12;2->3;3->45;4->1;5->23").unwrap();
        assert!(!z.has_full_rank());
        assert!(z.is_injective());
        // 1->12;2->34;3->5;4->1;5->23 has full rank
        let (e, _) = Substitution::parse("1->12;2->34;3->5;4->1;5->23").unwrap();
        assert!(e.has_full_rank());
        assert!(fib().has_full_rank());
    }

    #[test]
    fn parse_and_format_roundtrip() {
        let (s, style) = Substitution::parse("0->01;1->0").unwrap();
        assert_eq!(style, AlphabetStyle::ZeroBased);
        assert_eq!(s, fib());
        assert_eq!(s.format(style), "0->01;1->0");

        let (t, style) = Substitution::parse("a->b;b->ca;c->ba").unwrap();
        assert_eq!(style, AlphabetStyle::Letters);
        assert_eq!(t.images(), &[vec![1], vec![2, 0], vec![1, 0]]);
        assert_eq!(t.format(style), "a->b;b->ca;c->ba");

        let (u, style) = Substitution::parse("1->1,2;2->3;3->1,2").unwrap();
        assert_eq!(style, AlphabetStyle::OneBased);
        assert_eq!(u.images(), &[vec![0, 1], vec![2], vec![0, 1]]);
        assert_eq!(u.format(style), "1->12;2->3;3->12");

        assert!(Substitution::parse("1->12;1->3").is_err());
        assert!(Substitution::parse("1->12").is_err()); // missing rule for 2
        assert!(Substitution::parse("garbage").is_err());
    }

    #[test]
    fn canonical_relabel_examples() {
        let (s, perm) = fib().canonical_relabel(0).unwrap();
        assert_eq!(s, fib());
        assert_eq!(perm, vec![0, 1]);

        // raw 2-block substitution with blocks ordered [00],[01],[10]
        let raw = Substitution::new(vec![vec![1, 2], vec![1, 2], vec![0]]).unwrap();
        let (std_form, perm) = raw.canonical_relabel(1).unwrap();
        assert_eq!(
            std_form.images(),
            &[vec![0, 1], vec![2], vec![0, 1]]
        );
        assert_eq!(perm, vec![2, 0, 1]);

        let unreachable = Substitution::new(vec![vec![0, 0], vec![1]]).unwrap();
        assert!(matches!(
            unreachable.canonical_relabel(0),
            Err(Error::UnreachableLetter { letter: 1 })
        ));
    }

    #[test]
    fn incidence_orientation() {
        // row a counts the letters of the image of a
        let (s, _) = Substitution::parse("a->b;b->ca;c->ba").unwrap();
        assert_eq!(
            s.incidence_matrix().rows(),
            vec![vec![0, 1, 0], vec![1, 0, 1], vec![1, 1, 0]]
        );
    }
}
