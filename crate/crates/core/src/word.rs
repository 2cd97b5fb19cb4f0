//! Freely reduced words.
//!
//! A [`Word`] is a sequence of signed letters with no adjacent
//! letter/inverse pair. Every constructor reduces, so arithmetic on words is
//! arithmetic on group elements; the identity is the empty word.
//!
//! The text form writes a positive letter as its (single-character) lowercase
//! name and an inverted letter as the uppercase form, so `daD` spells
//! `d a d^-1` and the empty string spells the identity.

use std::fmt;

use crate::alphabet::{Alphabet, SignedLetter};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<SignedLetter>,
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    /// Builds a word from signed letters, cancelling as it goes.
    pub fn from_letters<I: IntoIterator<Item = SignedLetter>>(letters: I) -> Word {
        let mut word = Word::empty();
        for s in letters {
            word.push(s);
        }
        word
    }

    /// Appends one signed letter, cancelling it against the current last
    /// letter when they are mutually inverse.
    pub fn push(&mut self, s: SignedLetter) {
        if self.letters.last() == Some(&s.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(s);
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.letters
    }

    /// The product `self * other` as a freely reduced word.
    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for &s in &other.letters {
            out.push(s);
        }
        out
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    /// The conjugate `self * inner * self^-1`.
    pub fn conjugate(&self, inner: &Word) -> Word {
        self.concat(inner).concat(&self.inverse())
    }

    /// Parses the lowercase/uppercase text form. Only alphabets whose letter
    /// names are single lowercase ASCII characters can be parsed; positions
    /// in errors are 1-based.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Word> {
        let mut word = Word::empty();
        for (i, ch) in text.chars().enumerate() {
            let lower = ch.to_ascii_lowercase();
            let letter = alphabet.get(&lower.to_string()).ok_or(Error::UnknownLetter {
                letter: ch,
                position: i + 1,
            })?;
            word.push(if ch.is_ascii_uppercase() {
                letter.inverse()
            } else {
                letter.positive()
            });
        }
        Ok(word)
    }

    /// Renders the lowercase/uppercase text form; the empty word renders as
    /// the empty string. Errors when a letter's name is not a single
    /// lowercase ASCII character.
    pub fn render(&self, alphabet: &Alphabet) -> Result<String> {
        let mut out = String::with_capacity(self.letters.len());
        for &s in &self.letters {
            let name = alphabet.name(s.letter());
            let mut chars = name.chars();
            let ch = match (chars.next(), chars.next()) {
                (Some(c), None) if c.is_ascii_lowercase() => c,
                _ => {
                    return Err(Error::Serialize(format!(
                        "letter name {name:?} is not a single lowercase ASCII character"
                    )))
                }
            };
            out.push(if s.is_positive() {
                ch
            } else {
                ch.to_ascii_uppercase()
            });
        }
        Ok(out)
    }
}

impl fmt::Display for Word {
    /// Alphabet-free debugging form: signed letter indices separated by dots.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|s| s.index().to_string()).collect();
        write!(f, "{}", parts.join("."))
    }
}
