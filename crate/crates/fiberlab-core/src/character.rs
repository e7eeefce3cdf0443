//! Characters `χ : G → Q`, the character sphere, and homomorphisms between
//! presented groups.
//!
//! A character is determined by its values on generators and must vanish on
//! every relator. The zero vector is representable (it shows up as the
//! degenerate result of pull-backs) but every consumer that needs a genuine
//! character rejects it.

use alloc::sync::Arc;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::intmat::IntegerMatrix;
use crate::presentation::FinitePresentation;
use crate::ratmat::RationalMatrix;
use crate::word::Word;
use crate::{Error, Result};

pub(crate) fn same_presentation(a: &Arc<FinitePresentation>, b: &Arc<FinitePresentation>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Rescales a nonzero rational vector by a positive rational so the entries
/// become coprime integers.
pub(crate) fn primitive_integral_values(values: &[BigRational]) -> Result<Vec<BigRational>> {
    if values.iter().all(|v| v.is_zero()) {
        return Err(Error::ZeroCharacter);
    }
    let denom_lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scaled: Vec<BigInt> = values
        .iter()
        .map(|v| (v * BigRational::from(denom_lcm.clone())).to_integer())
        .collect();
    let gcd = scaled.iter().fold(BigInt::ZERO, |acc, v| acc.gcd(v));
    Ok(scaled
        .into_iter()
        .map(|v| BigRational::from(v / &gcd))
        .collect())
}

/// A homomorphism `G → Q` given by its values on generators.
#[derive(Clone, Debug)]
pub struct Character {
    ambient: Arc<FinitePresentation>,
    values: Vec<BigRational>,
}

impl Character {
    /// Checks that `values` kill every relator, i.e. genuinely define a
    /// homomorphism of the presented group (zero values are admitted).
    pub fn new(ambient: Arc<FinitePresentation>, values: Vec<BigRational>) -> Result<Character> {
        if values.len() != ambient.generator_count() {
            return Err(Error::ValueCountMismatch {
                generators: ambient.generator_count(),
                values: values.len(),
            });
        }
        for (i, relator) in ambient.relators().iter().enumerate() {
            let sums = relator.exponent_sums(values.len());
            let pairing: BigRational = sums
                .iter()
                .zip(&values)
                .map(|(s, v)| v * BigRational::from(s.clone()))
                .sum();
            if !pairing.is_zero() {
                return Err(Error::NotACharacter { relator: i });
            }
        }
        Ok(Character { ambient, values })
    }

    pub fn zero(ambient: Arc<FinitePresentation>) -> Character {
        let values = alloc::vec![BigRational::zero(); ambient.generator_count()];
        Character { ambient, values }
    }

    /// Convenience constructor from integer values.
    pub fn from_integers(ambient: Arc<FinitePresentation>, values: &[i64]) -> Result<Character> {
        Character::new(
            ambient,
            values
                .iter()
                .map(|&v| BigRational::from(BigInt::from(v)))
                .collect(),
        )
    }

    pub fn ambient(&self) -> &Arc<FinitePresentation> {
        &self.ambient
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Value on a word: the signed sum of generator values along its letters.
    pub fn evaluate(&self, word: &Word) -> Result<BigRational> {
        word.check_range(self.values.len())?;
        let mut total = BigRational::zero();
        for letter in word.letters() {
            match letter.sign.as_i64() {
                1 => total += &self.values[letter.gen],
                _ => total -= &self.values[letter.gen],
            }
        }
        Ok(total)
    }

    /// The positive rescaling with coprime integer entries. Idempotent;
    /// rejects the zero vector.
    pub fn primitive_integral(&self) -> Result<Character> {
        Ok(Character {
            ambient: self.ambient.clone(),
            values: primitive_integral_values(&self.values)?,
        })
    }

    /// `self + other` (ambients must agree).
    pub fn plus(&self, other: &Character) -> Result<Character> {
        if !same_presentation(&self.ambient, &other.ambient) {
            return Err(Error::AmbientMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Character {
            ambient: self.ambient.clone(),
            values,
        })
    }

    /// `r · self` for any rational `r`.
    pub fn scaled(&self, r: &BigRational) -> Character {
        Character {
            ambient: self.ambient.clone(),
            values: self.values.iter().map(|v| v * r).collect(),
        }
    }

    pub fn negated(&self) -> Character {
        self.scaled(&-BigRational::one())
    }
}

impl PartialEq for Character {
    fn eq(&self, other: &Character) -> bool {
        same_presentation(&self.ambient, &other.ambient) && self.values == other.values
    }
}

impl Eq for Character {}

/// A point of the character sphere `S(G)`: a nonzero character up to
/// positive rational rescaling.
#[derive(Clone, Debug)]
pub struct SphereClass {
    rep: Character,
}

impl SphereClass {
    pub fn new(rep: Character) -> Result<SphereClass> {
        if rep.is_zero() {
            return Err(Error::ZeroCharacter);
        }
        Ok(SphereClass { rep })
    }

    pub fn representative(&self) -> &Character {
        &self.rep
    }

    /// The canonical (primitive integral) representative.
    pub fn primitive(&self) -> Character {
        self.rep
            .primitive_integral()
            .expect("representative is nonzero")
    }

    pub fn antipode(&self) -> SphereClass {
        SphereClass {
            rep: self.rep.negated(),
        }
    }

    pub fn ambient(&self) -> &Arc<FinitePresentation> {
        self.rep.ambient()
    }
}

impl PartialEq for SphereClass {
    fn eq(&self, other: &SphereClass) -> bool {
        same_presentation(self.ambient(), other.ambient())
            && self.primitive().values() == other.primitive().values()
    }
}

impl Eq for SphereClass {}

/// Basis over `Q` of the character space `Hom(G, Q)`: the null space of the
/// exponent matrix, normalized to primitive integral vectors. The basis
/// order is canonical (ascending free column of the reduced echelon form).
pub fn character_space_basis(ambient: &Arc<FinitePresentation>) -> Vec<Character> {
    RationalMatrix::from_integer(&ambient.exponent_matrix())
        .null_space_basis()
        .into_iter()
        .map(|v| {
            let values = primitive_integral_values(&v).expect("null basis vectors are nonzero");
            Character::new(ambient.clone(), values).expect("null space vectors kill relators")
        })
        .collect()
}

/// A map between presented groups, given by a target word per source
/// generator. Validation checks that every source relator maps to a word
/// that dies in the target abelianization (the full word problem is not
/// attempted).
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: Arc<FinitePresentation>,
    target: Arc<FinitePresentation>,
    images: Vec<Word>,
}

impl GroupHom {
    pub fn new(
        source: Arc<FinitePresentation>,
        target: Arc<FinitePresentation>,
        images: Vec<Word>,
    ) -> Result<GroupHom> {
        if images.len() != source.generator_count() {
            return Err(Error::ValueCountMismatch {
                generators: source.generator_count(),
                values: images.len(),
            });
        }
        for image in &images {
            image.check_range(target.generator_count())?;
        }
        let hom = GroupHom {
            source,
            target,
            images,
        };
        let relator_span = hom.target.exponent_matrix().transpose();
        for (i, relator) in hom.source.relators().iter().enumerate() {
            let image_sums = hom.abelianized_image(relator);
            let killed = if relator_span.cols() == 0 {
                image_sums.iter().all(|v| v.is_zero())
            } else {
                relator_span.solve(&image_sums)?.is_some()
            };
            if !killed {
                return Err(Error::RelatorNotKilled { relator: i });
            }
        }
        Ok(hom)
    }

    pub fn identity(p: &Arc<FinitePresentation>) -> GroupHom {
        let images = (0..p.generator_count()).map(Word::gen).collect();
        GroupHom {
            source: p.clone(),
            target: p.clone(),
            images,
        }
    }

    pub fn source(&self) -> &Arc<FinitePresentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinitePresentation> {
        &self.target
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of a word under generator substitution, freely reduced.
    pub fn apply(&self, word: &Word) -> Result<Word> {
        word.check_range(self.images.len())?;
        let mut out = Word::empty();
        for letter in word.letters() {
            let image = &self.images[letter.gen];
            out = match letter.sign.as_i64() {
                1 => out.then(image),
                _ => out.then(&image.inverse()),
            };
        }
        Ok(out.free_reduce())
    }

    /// `then ∘ self` (first `self`, then `then`).
    pub fn and_then(&self, then: &GroupHom) -> Result<GroupHom> {
        if !same_presentation(&self.target, &then.source) {
            return Err(Error::AmbientMismatch);
        }
        let images = self
            .images
            .iter()
            .map(|w| then.apply(w))
            .collect::<Result<Vec<_>>>()?;
        GroupHom::new(self.source.clone(), then.target.clone(), images)
    }

    /// Exponent vector in the target of the image of a source word.
    fn abelianized_image(&self, word: &Word) -> Vec<BigInt> {
        let mut sums = alloc::vec![BigInt::ZERO; self.target.generator_count()];
        for letter in word.letters() {
            let image_sums = self.images[letter.gen].exponent_sums(self.target.generator_count());
            for (s, add) in sums.iter_mut().zip(image_sums) {
                match letter.sign.as_i64() {
                    1 => *s += add,
                    _ => *s -= add,
                }
            }
        }
        sums
    }

    /// Matrix of the induced map on abelianizations: one row per source
    /// generator, one column per target generator.
    pub fn abelianized_matrix(&self) -> IntegerMatrix {
        let cols = self.target.generator_count();
        let rows = self.images.iter().map(|w| w.exponent_sums(cols)).collect();
        IntegerMatrix::from_rows(rows, cols).expect("rows are uniform")
    }

    /// Precomposition: a character of the target pulls back to the source.
    /// The result can be zero (flagged by [`Character::is_zero`]).
    pub fn pull_back(&self, c: &Character) -> Result<Character> {
        if !same_presentation(&self.target, c.ambient()) {
            return Err(Error::AmbientMismatch);
        }
        let values = self
            .images
            .iter()
            .map(|w| c.evaluate(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(Character::new(self.source.clone(), values)
            .expect("pull-back kills source relators by hom validity"))
    }

    /// Dimension of the kernel of the induced map `H1(source;Q) → H1(target;Q)`,
    /// which must be surjective (checked): the difference of first Betti
    /// numbers.
    pub fn excessive_dim(&self) -> Result<usize> {
        let n_t = self.target.generator_count();
        let mut stacked: Vec<Vec<BigInt>> =
            self.images.iter().map(|w| w.exponent_sums(n_t)).collect();
        for relator in self.target.relators() {
            stacked.push(relator.exponent_sums(n_t));
        }
        let stack = IntegerMatrix::from_rows(stacked, n_t).expect("rows are uniform");
        if RationalMatrix::from_integer(&stack).rank() != n_t {
            return Err(Error::NotSurjectiveOnH1);
        }
        Ok(self.source.h1().free_rank - self.target.h1().free_rank)
    }
}

impl PartialEq for GroupHom {
    fn eq(&self, other: &GroupHom) -> bool {
        same_presentation(&self.source, &other.source)
            && same_presentation(&self.target, &other.target)
            && self.images == other.images
    }
}

impl Eq for GroupHom {}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arc(text: &str) -> Arc<FinitePresentation> {
        Arc::new(FinitePresentation::parse(text).unwrap())
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn basis_of_one_relator_group() {
        let k2 = arc("< x, y | x*y*x^2*y*x*y^2 >");
        let basis = character_space_basis(&k2);
        assert_eq!(basis.len(), 1);
        let class = SphereClass::new(basis[0].clone()).unwrap();
        let reference =
            SphereClass::new(Character::from_integers(k2.clone(), &[1, -1]).unwrap()).unwrap();
        assert!(class == reference || class == reference.antipode());
    }

    #[test]
    fn basis_dimensions() {
        assert_eq!(
            character_space_basis(&arc("< a, b | a*b*a^-1*b^-1 >")).len(),
            2
        );
        assert_eq!(
            character_space_basis(&Arc::new(FinitePresentation::surface(2))).len(),
            4
        );
        // torsion kills the only direction
        assert_eq!(character_space_basis(&arc("< x | x^2 >")).len(), 0);
    }

    #[test]
    fn character_must_kill_relators() {
        let k2 = arc("< x, y | x*y*x^2*y*x*y^2 >");
        assert!(Character::from_integers(k2.clone(), &[1, -1]).is_ok());
        assert!(matches!(
            Character::from_integers(k2, &[1, 1]),
            Err(Error::NotACharacter { relator: 0 })
        ));
    }

    #[test]
    fn evaluate_examples() {
        let k2 = arc("< x, y | x*y*x^2*y*x*y^2 >");
        let chi = Character::from_integers(k2.clone(), &[1, -1]).unwrap();
        assert_eq!(chi.evaluate(&k2.relators()[0]).unwrap(), q(0, 1));
        assert_eq!(chi.evaluate(&Word::empty()).unwrap(), q(0, 1));
        assert_eq!(
            chi.evaluate(&Word::from_pairs(&[(0, 3)]).unwrap()).unwrap(),
            q(3, 1)
        );
    }

    #[test]
    fn primitive_integral_examples() {
        let f2 = arc("< x, y | >");
        let halves = Character::new(f2.clone(), alloc::vec![q(1, 2), q(-1, 2)]).unwrap();
        assert_eq!(
            halves.primitive_integral().unwrap().values(),
            &[q(1, 1), q(-1, 1)]
        );
        let doubled = Character::from_integers(f2.clone(), &[2, 4]).unwrap();
        assert_eq!(
            doubled.primitive_integral().unwrap().values(),
            &[q(1, 1), q(2, 1)]
        );
        assert!(matches!(
            Character::zero(f2).primitive_integral(),
            Err(Error::ZeroCharacter)
        ));
    }

    #[test]
    fn sphere_classes_identify_positive_rays() {
        let f2 = arc("< x, y | >");
        let chi = Character::from_integers(f2.clone(), &[3, -6]).unwrap();
        let class = SphereClass::new(chi.clone()).unwrap();
        assert_eq!(class, SphereClass::new(chi.scaled(&q(7, 5))).unwrap());
        assert_ne!(class, class.antipode());
    }

    #[test]
    fn pull_back_examples() {
        let f2 = arc("< x, y | >");
        let z = arc("< t | >");
        let both_to_t = GroupHom::new(
            f2.clone(),
            z.clone(),
            alloc::vec![Word::gen(0), Word::gen(0)],
        )
        .unwrap();
        let chi = Character::from_integers(z.clone(), &[1]).unwrap();
        assert_eq!(
            both_to_t.pull_back(&chi).unwrap().values(),
            &[q(1, 1), q(1, 1)]
        );

        let id = GroupHom::identity(&f2);
        let psi = Character::from_integers(f2.clone(), &[2, 5]).unwrap();
        assert_eq!(id.pull_back(&psi).unwrap(), psi);

        let killing =
            GroupHom::new(f2.clone(), z, alloc::vec![Word::empty(), Word::empty()]).unwrap();
        assert!(killing.pull_back(&chi).unwrap().is_zero());
    }

    #[test]
    fn hom_validation_checks_abelianized_relators() {
        let torsion = arc("< x | x^2 >");
        let z = arc("< t | >");
        let z2 = arc("< t | t^2 >");
        assert!(matches!(
            GroupHom::new(torsion.clone(), z, alloc::vec![Word::gen(0)]),
            Err(Error::RelatorNotKilled { relator: 0 })
        ));
        assert!(GroupHom::new(torsion, z2, alloc::vec![Word::gen(0)]).is_ok());
    }

    #[test]
    fn excessive_dim_of_product_projection() {
        let prod =
            arc("< a, b, c, d | a*c*a^-1*c^-1, a*d*a^-1*d^-1, b*c*b^-1*c^-1, b*d*b^-1*d^-1 >");
        let f2 = arc("< c, d | >");
        let proj = GroupHom::new(
            prod,
            f2,
            alloc::vec![Word::empty(), Word::empty(), Word::gen(0), Word::gen(1)],
        )
        .unwrap();
        assert_eq!(proj.excessive_dim().unwrap(), 2);
    }

    #[test]
    fn excessive_dim_of_klein_bottle_fibration() {
        let klein = arc("< a, t | t*a*t^-1*a >");
        let z = arc("< t | >");
        let fib = GroupHom::new(klein, z, alloc::vec![Word::empty(), Word::gen(0)]).unwrap();
        assert_eq!(fib.excessive_dim().unwrap(), 0);
    }

    #[test]
    fn excessive_dim_rejects_non_surjections() {
        let f2 = arc("< x, y | >");
        let diag = GroupHom::new(
            f2.clone(),
            f2.clone(),
            alloc::vec![Word::gen(0), Word::gen(0)],
        )
        .unwrap();
        assert!(matches!(
            diag.excessive_dim(),
            Err(Error::NotSurjectiveOnH1)
        ));
    }

    #[test]
    fn excessive_dim_adds_along_compositions() {
        let f4 = Arc::new(FinitePresentation::free_of_rank(4));
        let f2 = Arc::new(FinitePresentation::free_of_rank(2));
        let f1 = Arc::new(FinitePresentation::free_of_rank(1));
        let first = GroupHom::new(
            f4.clone(),
            f2.clone(),
            alloc::vec![Word::gen(0), Word::gen(1), Word::empty(), Word::empty()],
        )
        .unwrap();
        let second = GroupHom::new(f2, f1, alloc::vec![Word::gen(0), Word::empty()]).unwrap();
        let composite = first.and_then(&second).unwrap();
        assert_eq!(
            composite.excessive_dim().unwrap(),
            first.excessive_dim().unwrap() + second.excessive_dim().unwrap()
        );
    }

    fn arb_values() -> impl Strategy<Value = Vec<BigRational>> {
        proptest::collection::vec((-9i64..=9, 1i64..=5).prop_map(|(n, d)| q(n, d)), 2)
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec((0usize..2, -3i64..=3), 0..8)
            .prop_map(|pairs| Word::from_pairs(&pairs).unwrap())
    }

    proptest! {
        #[test]
        fn evaluation_is_additive(values in arb_values(), w1 in arb_word(), w2 in arb_word()) {
            let f2 = Arc::new(FinitePresentation::free_of_rank(2));
            let chi = Character::new(f2, values).unwrap();
            prop_assert_eq!(
                chi.evaluate(&w1.then(&w2)).unwrap(),
                chi.evaluate(&w1).unwrap() + chi.evaluate(&w2).unwrap()
            );
        }

        #[test]
        fn primitive_integral_is_idempotent_and_scale_invariant(
            values in arb_values(),
            num in 1i64..=7,
            den in 1i64..=7,
        ) {
            let f2 = Arc::new(FinitePresentation::free_of_rank(2));
            let chi = Character::new(f2, values).unwrap();
            prop_assume!(!chi.is_zero());
            let prim = chi.primitive_integral().unwrap();
            let twice = prim.primitive_integral().unwrap();
            prop_assert_eq!(twice.values(), prim.values());
            let rescaled = chi.scaled(&q(num, den)).primitive_integral().unwrap();
            prop_assert_eq!(rescaled.values(), prim.values());
        }
    }
}
