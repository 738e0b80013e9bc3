use std::fmt;

use crate::error::{Error, Result};

/// A word in the simple reflections, stored as printed: `s_{a_0} s_{a_1} ⋯`
/// with 0-based letters.
///
/// For a reduced word `w = s_{i_r} ⋯ s_{i_1}` the positions are counted from
/// the right, so position `k` (1-based) is `letters[r - k]`. [`Word::at`] does
/// that translation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    /// Parses whitespace-separated tokens `s1 s2 ...` (1-based). The empty
    /// string is the identity.
    pub fn parse(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let digits = tok
                .strip_prefix('s')
                .or_else(|| tok.strip_prefix('S'))
                .ok_or_else(|| Error::Parse(format!("bad letter {tok:?}, expected s<i>")))?;
            let i: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad letter {tok:?}, expected s<i>")))?;
            if i == 0 {
                return Err(Error::Parse("letters are numbered from 1".into()));
            }
            letters.push(i - 1);
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The letter `i_k` for a 1-based position `k` counted from the right.
    pub fn at(&self, k: usize) -> usize {
        assert!(k >= 1 && k <= self.len());
        self.0[self.len() - k]
    }

    /// Letters in application order `(i_1, i_2, …, i_r)`.
    pub fn positions(&self) -> Vec<usize> {
        self.0.iter().rev().copied().collect()
    }

    pub fn reversed(&self) -> Word {
        Word(self.positions())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| format!("s{}", i + 1)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let w = Word::parse(" s1 s2  s10 ").unwrap();
        assert_eq!(w.letters(), &[0, 1, 9]);
        assert_eq!(w.to_string(), "s1 s2 s10");
        assert!(Word::parse("").unwrap().is_empty());
        assert!(Word::parse("s0").is_err());
        assert!(Word::parse("t1").is_err());
        assert!(Word::parse("sx").is_err());
    }

    #[test]
    fn positions_count_from_the_right() {
        let w = Word::parse("s3 s1 s2").unwrap();
        assert_eq!(w.at(1), 1);
        assert_eq!(w.at(3), 2);
        assert_eq!(w.positions(), vec![1, 0, 2]);
    }
}
