//! Finite group presentations: parsing, printing, and abelianized homology.
//!
//! Presentation text follows the grammar
//! `'<' name (',' name)* '|' [word (',' word)*] '>'` with
//! `word = term ('*' term)*` and `term = name ['^' signed-integer]`.
//! Whitespace is insignificant; names match `[A-Za-z][A-Za-z0-9_]*`.
//! An empty generator list (`< | >`) denotes the trivial group.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::intmat::IntegerMatrix;
use crate::word::{Sign, Word, MAX_EXPONENT};
use crate::{Error, Result};

/// A finitely presented group. Relators are stored freely and cyclically
/// reduced; relators that reduce to the empty word are dropped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinitePresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FinitePresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<FinitePresentation> {
        let mut seen = alloc::collections::BTreeSet::new();
        for name in &generators {
            if !valid_name(name) {
                return Err(Error::BadGeneratorName(name.clone()));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        let mut reduced = Vec::with_capacity(relators.len());
        for relator in relators {
            relator.check_range(generators.len())?;
            let relator = relator.cyclic_reduce();
            if !relator.is_empty() {
                reduced.push(relator);
            }
        }
        Ok(FinitePresentation {
            generators,
            relators: reduced,
        })
    }

    /// Free group on the given generator names.
    pub fn free(generators: Vec<String>) -> Result<FinitePresentation> {
        FinitePresentation::new(generators, Vec::new())
    }

    /// Free group on `rank` generators named `x0, x1, …`.
    pub fn free_of_rank(rank: usize) -> FinitePresentation {
        let names = (0..rank).map(|i| alloc::format!("x{i}")).collect();
        FinitePresentation::new(names, Vec::new()).expect("generated names are valid")
    }

    /// Orientable surface group of the given genus:
    /// `< a1,b1,…,ag,bg | [a1,b1]…[ag,bg] >`.
    pub fn surface(genus: usize) -> FinitePresentation {
        let mut names = Vec::new();
        for i in 1..=genus {
            names.push(alloc::format!("a{i}"));
            names.push(alloc::format!("b{i}"));
        }
        let mut pairs = Vec::new();
        for i in 0..genus {
            let (a, b) = (2 * i, 2 * i + 1);
            pairs.extend_from_slice(&[(a, 1), (b, 1), (a, -1), (b, -1)]);
        }
        let relator = Word::from_pairs(&pairs).expect("small exponents");
        let relators = if genus == 0 {
            Vec::new()
        } else {
            alloc::vec![relator]
        };
        FinitePresentation::new(names, relators).expect("generated names are valid")
    }

    /// The trivial group `< | >`.
    pub fn trivial() -> FinitePresentation {
        FinitePresentation {
            generators: Vec::new(),
            relators: Vec::new(),
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Parses presentation text; see the module docs for the grammar.
    pub fn parse(text: &str) -> Result<FinitePresentation> {
        let mut p = Parser::new(text);
        p.skip_ws();
        p.expect(b'<')?;
        p.skip_ws();
        let mut generators = Vec::new();
        if p.peek() != Some(b'|') {
            loop {
                generators.push(p.name()?);
                p.skip_ws();
                match p.peek() {
                    Some(b',') => {
                        p.pos += 1;
                        p.skip_ws();
                    }
                    Some(b'|') => break,
                    _ => {
                        return Err(p.error("expected `,` or `|` after generator name"));
                    }
                }
            }
        }
        p.expect(b'|')?;
        p.skip_ws();
        let index: BTreeMap<&str, usize> = generators
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut relators = Vec::new();
        if p.peek() != Some(b'>') {
            loop {
                relators.push(p.word(&index)?);
                p.skip_ws();
                match p.peek() {
                    Some(b',') => {
                        p.pos += 1;
                        p.skip_ws();
                    }
                    Some(b'>') => break,
                    _ => return Err(p.error("expected `,` or `>` after relator")),
                }
            }
        }
        p.expect(b'>')?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(p.error("trailing input after `>`"));
        }
        FinitePresentation::new(generators, relators)
    }

    /// Parses a single word over this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let index: BTreeMap<&str, usize> = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut p = Parser::new(text);
        p.skip_ws();
        let word = p.word(&index)?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(p.error("trailing input after word"));
        }
        Ok(word)
    }

    /// Renders a word over this presentation's generators, collapsing runs
    /// of a letter into powers.
    pub fn word_to_text(&self, word: &Word) -> String {
        if word.is_empty() {
            return String::new();
        }
        let mut out = String::new();
        let letters = word.letters();
        let mut i = 0;
        while i < letters.len() {
            let mut j = i + 1;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            let run = (j - i) as i64;
            let exp = match letters[i].sign {
                Sign::Plus => run,
                Sign::Minus => -run,
            };
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&self.generators[letters[i].gen]);
            if exp != 1 {
                out.push('^');
                out.push_str(&exp.to_string());
            }
            i = j;
        }
        out
    }

    /// Renders the presentation in the input grammar; `parse ∘ print = id`
    /// on normalized presentations.
    pub fn to_text(&self) -> String {
        let mut out = String::from("< ");
        out.push_str(&self.generators.join(", "));
        out.push_str(" | ");
        let rendered: Vec<String> = self.relators.iter().map(|r| self.word_to_text(r)).collect();
        out.push_str(&rendered.join(", "));
        out.push_str(" >");
        out
    }

    /// Matrix of relator exponent sums: one row per relator, one column per
    /// generator.
    pub fn exponent_matrix(&self) -> IntegerMatrix {
        let rows = self
            .relators
            .iter()
            .map(|r| r.exponent_sums(self.generators.len()))
            .collect::<Vec<_>>();
        IntegerMatrix::from_rows(rows, self.generators.len()).expect("rows are uniform")
    }

    /// First homology of the presented group: invariants of the cokernel of
    /// the transposed exponent matrix.
    pub fn h1(&self) -> AbelianInvariants {
        let snf = self.exponent_matrix().transpose().smith_normal_form();
        let nonzero = snf.diagonal.iter().filter(|d| !d.is_zero()).count();
        let torsion = snf
            .diagonal
            .into_iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .collect();
        AbelianInvariants {
            free_rank: self.generators.len() - nonzero,
            torsion,
        }
    }
}

impl fmt::Display for FinitePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Invariant factors of a finitely generated abelian group:
/// `Z^free_rank ⊕ Z/t_1 ⊕ … ⊕ Z/t_k` with `t_1 | t_2 | … | t_k`, each > 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn free(rank: usize) -> AbelianInvariants {
        AbelianInvariants {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z^{}", self.free_rank)?;
        for t in &self.torsion {
            write!(f, " + Z/{t}")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Parser<'a> {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&alloc::format!("expected `{}`", byte as char)))
        }
    }

    fn name(&mut self) -> Result<String> {
        let start = self.pos;
        match self.peek() {
            Some(b) if b.is_ascii_alphabetic() => self.pos += 1,
            _ => return Err(self.error("expected a generator name")),
        }
        while matches!(self.peek(), Some(b) if b.is_ascii_alphanumeric() || b == b'_') {
            self.pos += 1;
        }
        Ok(core::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ASCII name bytes")
            .to_string())
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some(b'-') || self.peek() == Some(b'+') {
            self.pos += 1;
        }
        let digits_from = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_from {
            return Err(self.error("expected an integer"));
        }
        let text = core::str::from_utf8(&self.bytes[start..self.pos]).expect("ASCII digits");
        text.parse::<i64>().map_err(|_| Error::Parse {
            offset: start,
            message: alloc::format!("integer `{text}` out of range"),
        })
    }

    fn word(&mut self, index: &BTreeMap<&str, usize>) -> Result<Word> {
        let mut pairs = Vec::new();
        loop {
            let at = self.pos;
            let name = self.name()?;
            let Some(&gen) = index.get(name.as_str()) else {
                return Err(Error::Parse {
                    offset: at,
                    message: alloc::format!("unknown generator name `{name}`"),
                });
            };
            let mut exp = 1i64;
            self.skip_ws();
            if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                exp = self.integer()?;
                if exp.abs() > MAX_EXPONENT {
                    return Err(Error::ExponentTooLarge(exp));
                }
            }
            pairs.push((gen, exp));
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            } else {
                break;
            }
        }
        Word::from_pairs(&pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_one_relator_example() {
        let p = FinitePresentation::parse("< x, y | x*y*x^2*y*x*y^2 >").unwrap();
        assert_eq!(p.generator_count(), 2);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].len(), 8);
    }

    #[test]
    fn parses_free_and_commutator() {
        let free = FinitePresentation::parse("< x | >").unwrap();
        assert_eq!((free.generator_count(), free.relators().len()), (1, 0));
        let z2 = FinitePresentation::parse("< a, b | a*b*a^-1*b^-1 >").unwrap();
        assert_eq!(z2.relators()[0].len(), 4);
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(
            FinitePresentation::parse("<x,y|x*y^-1>").unwrap(),
            FinitePresentation::parse("  < x , y |\n x * y ^ -1 >  ").unwrap()
        );
    }

    #[test]
    fn trivial_group_parses() {
        let t = FinitePresentation::parse("< | >").unwrap();
        assert_eq!(t.generator_count(), 0);
        assert_eq!(t, FinitePresentation::trivial());
    }

    #[test]
    fn reports_error_positions() {
        match FinitePresentation::parse("< x | z >") {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 6);
                assert!(message.contains("unknown generator"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            FinitePresentation::parse("x | y"),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            FinitePresentation::parse("< x, x | >"),
            Err(Error::DuplicateGenerator(_))
        ));
        assert!(matches!(
            FinitePresentation::parse("< x | x^99999 >"),
            Err(Error::ExponentTooLarge(99999))
        ));
    }

    #[test]
    fn relators_are_normalized() {
        // x·y·y⁻¹·x is stored as x², and a trivial relator is dropped
        let p = FinitePresentation::parse("< x, y | x*y*y^-1*x, y*y^-1 >").unwrap();
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.word_to_text(&p.relators()[0]), "x^2");
        // conjugates are cyclically reduced
        let q = FinitePresentation::parse("< x, y | y*x*y^-1 >").unwrap();
        assert_eq!(q.word_to_text(&q.relators()[0]), "x");
    }

    #[test]
    fn print_parse_round_trip() {
        for text in [
            "< x, y | x*y*x^2*y*x*y^2 >",
            "< x | >",
            "< | >",
            "< a, b, c | a*b*a^-1*b^-1, c^3 >",
            "< a1, b1, a2, b2 | a1*b1*a1^-1*b1^-1*a2*b2*a2^-1*b2^-1 >",
        ] {
            let p = FinitePresentation::parse(text).unwrap();
            assert_eq!(FinitePresentation::parse(&p.to_text()).unwrap(), p);
        }
    }

    #[test]
    fn exponent_matrix_rows_are_exponent_sums() {
        let k2 = FinitePresentation::parse("< x, y | x*y*x^2*y*x*y^2 >").unwrap();
        let m = k2.exponent_matrix();
        assert_eq!((m.rows(), m.cols()), (1, 2));
        assert_eq!(
            (m.entry(0, 0), m.entry(0, 1)),
            (&BigInt::from(4), &BigInt::from(4))
        );

        let genus2 = FinitePresentation::surface(2);
        assert!(genus2.exponent_matrix().row(0).iter().all(|e| e.is_zero()));

        let free = FinitePresentation::free_of_rank(3);
        assert_eq!(free.exponent_matrix().rows(), 0);
    }

    #[test]
    fn h1_of_known_groups() {
        let k2 = FinitePresentation::parse("< x, y | x*y*x^2*y*x*y^2 >").unwrap();
        assert_eq!(
            k2.h1(),
            AbelianInvariants {
                free_rank: 1,
                torsion: vec![BigInt::from(4)]
            }
        );

        let klein = FinitePresentation::parse("< a, t | t*a*t^-1*a >").unwrap();
        assert_eq!(
            klein.h1(),
            AbelianInvariants {
                free_rank: 1,
                torsion: vec![BigInt::from(2)]
            }
        );

        assert_eq!(
            FinitePresentation::free_of_rank(5).h1(),
            AbelianInvariants::free(5)
        );
        assert_eq!(
            FinitePresentation::surface(2).h1(),
            AbelianInvariants::free(4)
        );
        assert_eq!(
            FinitePresentation::trivial().h1(),
            AbelianInvariants::free(0)
        );

        let z2 = FinitePresentation::parse("< a, b | a*b*a^-1*b^-1 >").unwrap();
        assert_eq!(z2.h1(), AbelianInvariants::free(2));
    }

    fn arb_presentation() -> impl Strategy<Value = FinitePresentation> {
        let word = proptest::collection::vec((0usize..3, -3i64..=3), 0..6)
            .prop_map(|pairs| Word::from_pairs(&pairs).unwrap());
        proptest::collection::vec(word, 0..4).prop_map(|relators| {
            FinitePresentation::new(alloc::vec!["a".into(), "b".into(), "c".into()], relators)
                .unwrap()
        })
    }

    proptest! {
        #[test]
        fn free_rank_is_corank_of_exponent_matrix(p in arb_presentation()) {
            prop_assert_eq!(
                p.h1().free_rank,
                p.generator_count() - p.exponent_matrix().rank()
            );
        }

        #[test]
        fn round_trip_on_random_presentations(p in arb_presentation()) {
            prop_assert_eq!(FinitePresentation::parse(&p.to_text()).unwrap(), p);
        }
    }
}
