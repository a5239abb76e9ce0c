use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// A generator `w_i` (1-based) raised to `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inv(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

/// A freely reduced word in the free group on `w_1, w_2, ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(i: usize) -> Self {
        assert!(i >= 1, "generators are numbered from 1");
        Word {
            letters: vec![Letter {
                generator: i,
                inverse: false,
            }],
        }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Word::identity(), |acc, _| acc.mul(&base))
    }

    /// `g^{-1} self g`.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.inverse().mul(self).mul(g)
    }

    /// The group commutator `[a, b] = a^{-1} b^{-1} a b`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    pub fn product<'a>(words: impl IntoIterator<Item = &'a Word>) -> Word {
        words.into_iter().fold(Word::identity(), |acc, w| acc.mul(w))
    }

    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|l| l.generator).max().unwrap_or(0)
    }

    /// Image in `H = Z^n`.
    pub fn exponent_sums(&self, n: usize) -> Vec<BigInt> {
        let mut v = vec![0i64; n];
        for l in &self.letters {
            v[l.generator - 1] += if l.inverse { -1 } else { 1 };
        }
        v.into_iter().map(BigInt::from).collect()
    }

    /// Splits a conjugate `g^{-1} w_i g` of a generator into `(i, g)`.
    pub fn as_conjugate_of_generator(&self) -> Option<(usize, Word)> {
        let len = self.letters.len();
        if len % 2 == 0 {
            return None;
        }
        let mid = len / 2;
        let centre = self.letters[mid];
        if centre.inverse {
            return None;
        }
        let prefix = Word {
            letters: self.letters[..mid].to_vec(),
        };
        let suffix = Word {
            letters: self.letters[mid + 1..].to_vec(),
        };
        (prefix == suffix.inverse()).then_some((centre.generator, suffix))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "w{}", l.generator)?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Parses `"w6^-1 w3^-1"`; whitespace between factors is optional and `"1"`
/// or the empty string denote the identity.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let bad = |msg: &str| Error::Parse(format!("word {s:?}: {msg}"));
        let t = s.trim();
        if t.is_empty() || t == "1" {
            return Ok(Word::identity());
        }
        let chars: Vec<char> = t.chars().collect();
        let mut pos = 0;
        let mut letters = Vec::new();
        let number = |pos: &mut usize, allow_sign: bool| -> Option<i64> {
            let start = *pos;
            if allow_sign && *pos < chars.len() && (chars[*pos] == '-' || chars[*pos] == '+') {
                *pos += 1;
            }
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            chars[start..*pos].iter().collect::<String>().parse().ok()
        };
        while pos < chars.len() {
            if chars[pos].is_whitespace() || chars[pos] == '*' {
                pos += 1;
                continue;
            }
            if chars[pos] != 'w' {
                return Err(bad("expected a generator w<i>"));
            }
            pos += 1;
            let gen = number(&mut pos, false).ok_or_else(|| bad("missing generator index"))?;
            if gen < 1 {
                return Err(bad("generator indices start at 1"));
            }
            let mut exp = 1;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let braced = pos < chars.len() && chars[pos] == '{';
                if braced {
                    pos += 1;
                }
                exp = number(&mut pos, true).ok_or_else(|| bad("bad exponent"))?;
                if braced {
                    if pos >= chars.len() || chars[pos] != '}' {
                        return Err(bad("unclosed exponent"));
                    }
                    pos += 1;
                }
            }
            let letter = Letter {
                generator: gen as usize,
                inverse: exp < 0,
            };
            letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        }
        Ok(Word::from_letters(letters))
    }
}
