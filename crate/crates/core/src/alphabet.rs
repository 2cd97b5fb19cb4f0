//! Alphabets and signed letters.
//!
//! A free group is presented by an ordered alphabet of letter names. Graph
//! edges and word entries carry *signed* letters: a letter together with an
//! orientation. Signed letters are densely encoded so they can index arrays,
//! and their derived order — `(a,+) < (a,-) < (b,+) < (b,-) < ...` — is the
//! canonical order used by breadth-first traversals throughout the crate.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a letter within its [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub(crate) u16);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// The positively oriented dart label for this letter.
    pub fn positive(self) -> SignedLetter {
        SignedLetter(self.0 << 1)
    }

    /// The inversely oriented dart label for this letter.
    pub fn inverse(self) -> SignedLetter {
        SignedLetter(self.0 << 1 | 1)
    }
}

/// A letter with an orientation: `x` or `x^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedLetter(u16);

impl SignedLetter {
    pub fn letter(self) -> Letter {
        Letter(self.0 >> 1)
    }

    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    /// The label of the reversed dart. The involution is fixed-point-free:
    /// `s.inverse() != s` for every signed letter.
    pub fn inverse(self) -> SignedLetter {
        SignedLetter(self.0 ^ 1)
    }

    /// Dense index in `0..2 * alphabet.len()`, compatible with `Ord`.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(index: usize) -> SignedLetter {
        SignedLetter(index as u16)
    }
}

/// An ordered set of distinct letter names.
///
/// Names are usually single ASCII letters (`a`, `b`, ...), the only form the
/// text formats in [`crate::io`] accept, but internally constructed alphabets
/// (e.g. a basis `g0, g1, ...` during index computations) may use longer
/// names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    by_name: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Alphabet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut by_name = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyLetter);
            }
            if by_name.insert(name.clone(), Letter(i as u16)).is_some() {
                return Err(Error::DuplicateLetter(name.clone()));
            }
        }
        Ok(Alphabet { names, by_name })
    }

    /// Alphabet with one single-character name per character of `chars`.
    pub fn from_chars(chars: &str) -> Result<Alphabet> {
        Alphabet::new(chars.chars().map(|c| c.to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len()).map(|i| Letter(i as u16))
    }

    /// All signed letters in canonical order.
    pub fn signed_letters(&self) -> impl Iterator<Item = SignedLetter> + '_ {
        (0..2 * self.names.len()).map(SignedLetter::from_index)
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter.index()]
    }

    pub fn get(&self, name: &str) -> Option<Letter> {
        self.by_name.get(name).copied()
    }

    pub fn letter(&self, index: usize) -> Option<Letter> {
        (index < self.names.len()).then(|| Letter(index as u16))
    }

    /// Whether `other` lists the same letters in the same order.
    pub fn same_as(&self, other: &Alphabet) -> bool {
        self.names == other.names
    }

    /// Errors with both letter lists unless the alphabets agree.
    pub fn expect_same(&self, other: &Alphabet) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(
                self.names.join(" "),
                other.names.join(" "),
            ))
        }
    }

    /// Whether `self` is an initial segment of `larger`.
    pub fn prefix_of(&self, larger: &Alphabet) -> bool {
        self.names.len() <= larger.names.len()
            && self.names == larger.names[..self.names.len()]
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(" "))
    }
}
