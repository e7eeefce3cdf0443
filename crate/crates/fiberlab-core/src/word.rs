//! Free-group words over an indexed generating set.

use alloc::vec::Vec;
use num_bigint::BigInt;

use crate::{Error, Result};

/// Exponent sign of a single letter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// One letter `g^{±1}` of a word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub gen: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(gen: usize, sign: Sign) -> Letter {
        Letter { gen, sign }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            sign: self.sign.flip(),
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.sign != other.sign
    }
}

/// Cap on `|exponent|` when expanding `g^k` into letters.
pub const MAX_EXPONENT: i64 = 10_000;

/// A word in a free group, stored as its letter sequence. Construction does
/// not reduce; see [`Word::free_reduce`] and [`Word::cyclic_reduce`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn empty() -> Word {
        Word {
            letters: Vec::new(),
        }
    }

    /// Builds a word from `(generator, exponent)` pairs, expanding each
    /// exponent into `|exponent|` letters.
    pub fn from_pairs(pairs: &[(usize, i64)]) -> Result<Word> {
        let mut letters = Vec::new();
        for &(gen, exp) in pairs {
            if exp.abs() > MAX_EXPONENT {
                return Err(Error::ExponentTooLarge(exp));
            }
            let sign = if exp >= 0 { Sign::Plus } else { Sign::Minus };
            for _ in 0..exp.unsigned_abs() {
                letters.push(Letter::new(gen, sign));
            }
        }
        Ok(Word { letters })
    }

    /// Single-letter word `g^{+1}`.
    pub fn gen(gen: usize) -> Word {
        Word {
            letters: alloc::vec![Letter::new(gen, Sign::Plus)],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used, if any.
    pub fn max_gen(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Errors unless every letter's generator index is below `count`.
    pub fn check_range(&self, count: usize) -> Result<()> {
        match self.max_gen() {
            Some(index) if index >= count => Err(Error::GeneratorOutOfRange { index, count }),
            _ => Ok(()),
        }
    }

    /// Cancels adjacent `g g^{-1}` pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &letter in &self.letters {
            match stack.last() {
                Some(&top) if top.cancels(letter) => {
                    stack.pop();
                }
                _ => stack.push(letter),
            }
        }
        Word { letters: stack }
    }

    /// Freely reduces, then strips mutually inverse first/last letters.
    pub fn cyclic_reduce(&self) -> Word {
        let reduced = self.free_reduce();
        let mut letters = reduced.letters;
        let mut lo = 0;
        let mut hi = letters.len();
        while hi - lo >= 2 && letters[lo].cancels(letters[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        letters.truncate(hi);
        letters.drain(..lo);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation `self · other` (no reduction).
    pub fn then(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Conjugate `by · self · by^{-1}` (no reduction).
    pub fn conjugated_by(&self, by: &Word) -> Word {
        by.then(self).then(&by.inverse())
    }

    /// Net exponent of each of the first `gen_count` generators.
    pub fn exponent_sums(&self, gen_count: usize) -> Vec<BigInt> {
        let mut sums = alloc::vec![BigInt::ZERO; gen_count];
        for letter in &self.letters {
            sums[letter.gen] += letter.sign.as_i64();
        }
        sums
    }
}
