//! Letters, words, and the text conventions used for them.
//!
//! Letters are `0..k` internally. On input and output three styles exist:
//! zero-based digit strings (`0100`), one-based digit strings (`61234`, the
//! convention for canonically numbered block alphabets), and lowercase
//! letters (`ba`). Alphabets too large for single symbols use comma-separated
//! integers (`10,2,11`).

use crate::error::{Error, Result};

pub type Letter = usize;
pub type Word = Vec<Letter>;

/// Occurrence counts per letter, indexed by letter.
pub fn parikh(w: &[Letter], alphabet: usize) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; alphabet];
    for &a in w {
        if a >= alphabet {
            return Err(Error::LetterOutOfRange {
                letter: a,
                alphabet,
            });
        }
        counts[a] += 1;
    }
    Ok(counts)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum AlphabetStyle {
    ZeroBased,
    OneBased,
    Letters,
}

impl AlphabetStyle {
    fn offset(self) -> usize {
        match self {
            AlphabetStyle::ZeroBased => 0,
            AlphabetStyle::OneBased => 1,
            AlphabetStyle::Letters => 0,
        }
    }
}

pub fn format_letter(a: Letter, style: AlphabetStyle) -> String {
    match style {
        AlphabetStyle::Letters if a < 26 => ((b'a' + a as u8) as char).to_string(),
        _ => (a + style.offset()).to_string(),
    }
}

/// Renders a word compactly: single symbols when they cannot collide,
/// otherwise a comma-separated integer list.
pub fn format_word(w: &[Letter], alphabet: usize, style: AlphabetStyle) -> String {
    let compact = match style {
        AlphabetStyle::ZeroBased => alphabet <= 10,
        AlphabetStyle::OneBased => alphabet <= 9,
        AlphabetStyle::Letters => alphabet <= 26,
    };
    if compact {
        w.iter().map(|&a| format_letter(a, style)).collect()
    } else {
        w.iter()
            .map(|&a| (a + style.offset()).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Splits a raw word token into symbol strings without interpreting them.
fn tokens(s: &str) -> Vec<String> {
    if s.contains(',') {
        s.split(',').map(|t| t.trim().to_string()).collect()
    } else if s.chars().all(|c| c.is_ascii_digit()) {
        s.chars().map(|c| c.to_string()).collect()
    } else {
        s.chars().map(|c| c.to_string()).collect()
    }
}

/// True if the token set forces comma-separated integer reading
/// (some multi-digit number present).
fn scan_symbols(raw: &str, out: &mut Vec<String>) {
    out.extend(tokens(raw));
}

/// Determines the style from the full set of symbols appearing in some input.
pub fn infer_style(symbols: &[String]) -> Result<AlphabetStyle> {
    let mut any_alpha = false;
    let mut any_zero = false;
    for s in symbols {
        if s.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "empty symbol".into(),
            });
        }
        if s.chars().all(|c| c.is_ascii_lowercase()) && s.len() == 1 {
            any_alpha = true;
        } else if s.chars().all(|c| c.is_ascii_digit()) {
            if s.parse::<usize>().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad number {s:?}"),
            })? == 0
            {
                any_zero = true;
            }
        } else {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("bad symbol {s:?}"),
            });
        }
    }
    if any_alpha {
        Ok(AlphabetStyle::Letters)
    } else if any_zero {
        Ok(AlphabetStyle::ZeroBased)
    } else {
        Ok(AlphabetStyle::OneBased)
    }
}

pub fn parse_symbol(s: &str, style: AlphabetStyle) -> Result<Letter> {
    let bad = |msg: String| Error::Parse { pos: 0, msg };
    if s.len() == 1 && s.chars().all(|c| c.is_ascii_lowercase()) {
        if style != AlphabetStyle::Letters {
            return Err(bad(format!("unexpected letter symbol {s:?}")));
        }
        return Ok((s.as_bytes()[0] - b'a') as usize);
    }
    let n: usize = s
        .parse()
        .map_err(|_| bad(format!("bad symbol {s:?}")))?;
    match style {
        AlphabetStyle::ZeroBased => Ok(n),
        AlphabetStyle::OneBased => {
            if n == 0 {
                Err(bad("symbol 0 in a one-based word".into()))
            } else {
                Ok(n - 1)
            }
        }
        AlphabetStyle::Letters => Err(bad(format!("unexpected number {s:?}"))),
    }
}

/// Parses a standalone word with a known style.
pub fn parse_word(s: &str, style: AlphabetStyle) -> Result<Word> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty word".into(),
        });
    }
    tokens(s).iter().map(|t| parse_symbol(t, style)).collect()
}

/// Parses a standalone word, inferring the style from its symbols.
pub fn parse_word_auto(s: &str) -> Result<(Word, AlphabetStyle)> {
    let mut symbols = Vec::new();
    scan_symbols(s.trim(), &mut symbols);
    let style = infer_style(&symbols)?;
    Ok((parse_word(s, style)?, style))
}

pub(crate) fn word_tokens(s: &str) -> Vec<String> {
    tokens(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_styles() {
        let w = vec![0usize, 1, 2];
        assert_eq!(format_word(&w, 3, AlphabetStyle::OneBased), "123");
        assert_eq!(format_word(&w, 3, AlphabetStyle::ZeroBased), "012");
        assert_eq!(format_word(&w, 3, AlphabetStyle::Letters), "abc");
        assert_eq!(
            parse_word("123", AlphabetStyle::OneBased).unwrap(),
            vec![0, 1, 2]
        );
        assert_eq!(
            parse_word("0,1,2", AlphabetStyle::ZeroBased).unwrap(),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn large_alphabets_use_comma_lists() {
        let w = vec![9usize, 10, 0];
        assert_eq!(format_word(&w, 13, AlphabetStyle::OneBased), "10,11,1");
        let (back, style) = parse_word_auto("10,11,1").unwrap();
        assert_eq!(style, AlphabetStyle::OneBased);
        assert_eq!(back, w);
    }

    #[test]
    fn zero_forces_zero_based() {
        let (w, style) = parse_word_auto("0100").unwrap();
        assert_eq!(style, AlphabetStyle::ZeroBased);
        assert_eq!(w, vec![0, 1, 0, 0]);
    }

    #[test]
    fn parikh_counts() {
        assert_eq!(parikh(&[0, 1, 0, 0], 2).unwrap(), vec![3, 1]);
        assert!(parikh(&[5], 2).is_err());
    }
}
