//! The pure braid family.
//!
//! `pure_braid_presentation(n)` builds the combed presentation of the pure
//! braid group on `n` strands: generators `A{i}_{j}` for `1 ≤ i < j ≤ n`
//! (the band where strand `j` loops once around strand `i`), listed frame by
//! frame, and one relator for each way a generator on strands below `j`
//! conjugates a generator in frame `j`. Deleting the highest strand is then
//! a retraction onto a prefix of the generator list, and iterating it yields
//! a normal filtration whose factors are free of ranks `n−1, …, 1`.
//!
//! The full twist generates the center, and the quotient by it (the pure
//! mapping class group of a sphere with `n+1` punctures) inherits the
//! filtration with the rank-one factor removed. `braid_report` runs the
//! iterated tilting machinery over those quotient filtrations and returns
//! one certificate per intermediate finiteness degree, plus a certificate
//! for the center direction, whose kernel misses the obstruction entirely.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::character::{Character, GroupHom};
use crate::error::Error;
use crate::euler::l2_profile;
use crate::fibration::{
    check_h1_splitting, iterate_filtration, product_euler_characteristic, CertificateCheck,
    FactorKind, FibrationCertificate, FiltrationSpec, FiltrationStage,
};
use crate::finiteness::{FinitenessClass, KernelType};
use crate::presentation::{AbelianInvariants, FinitePresentation};
use crate::word::Word;
use crate::Result;

/// Position of `A{i}_{j}` in the frame-ordered generator list: all
/// generators with top strand `< j` come first, then the frame of `j`.
fn gen_index(i: usize, j: usize) -> usize {
    (j - 1) * (j - 2) / 2 + i - 1
}

/// Generator pairs `(i, j)` in frame order.
fn strand_pairs(strands: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=strands).flat_map(|j| (1..j).map(move |i| (i, j)))
}

fn require_strands(strands: usize, minimum: usize) -> Result<()> {
    if strands < minimum {
        return Err(Error::TooFewStrands { strands, minimum });
    }
    Ok(())
}

/// The word to which `A{r}_{s}` conjugates the frame generator `A{k}_{j}`,
/// i.e. the right-hand side of `A{r}_{s}⁻¹ · A{k}_{j} · A{r}_{s} = W`, for
/// `r < s < j` and `k < j`. Bands on strands that do not interleave commute;
/// the other three cases push `A{k}_{j}` around by the frame generators on
/// strands `r` and `s`.
fn conjugation_action(r: usize, s: usize, k: usize, j: usize) -> Result<Word> {
    let x = gen_index(k, j);
    let u = gen_index(r, j);
    let v = gen_index(s, j);
    let pairs: Vec<(usize, i64)> = if k < r || k > s {
        vec![(x, 1)]
    } else if k == r {
        vec![(u, 1), (v, 1), (u, 1), (v, -1), (u, -1)]
    } else if k == s {
        vec![(u, 1), (v, 1), (u, -1)]
    } else {
        vec![
            (u, 1),
            (v, 1),
            (u, -1),
            (v, -1),
            (x, 1),
            (v, 1),
            (u, 1),
            (v, -1),
            (u, -1),
        ]
    };
    Word::from_pairs(&pairs)
}

/// Combed presentation of the pure braid group on `strands` strands.
pub fn pure_braid_presentation(strands: usize) -> Result<FinitePresentation> {
    require_strands(strands, 2)?;
    let names: Vec<String> = strand_pairs(strands)
        .map(|(i, j)| format!("A{i}_{j}"))
        .collect();
    let mut relators = Vec::new();
    for j in 3..=strands {
        for s in 2..j {
            for r in 1..s {
                let a = gen_index(r, s);
                for k in 1..j {
                    let x = gen_index(k, j);
                    let conjugated = Word::from_pairs(&[(a, -1), (x, 1), (a, 1)])?;
                    let action = conjugation_action(r, s, k, j)?;
                    relators.push(conjugated.then(&action.inverse()));
                }
            }
        }
    }
    FinitePresentation::new(names, relators)
}

/// The full twist, written with each generator exactly once in frame order.
/// It generates the center of the pure braid group.
pub fn full_twist_word(strands: usize) -> Result<Word> {
    require_strands(strands, 2)?;
    let pairs: Vec<(usize, i64)> = strand_pairs(strands)
        .map(|(i, j)| (gen_index(i, j), 1))
        .collect();
    Word::from_pairs(&pairs)
}

/// Presentation of the quotient of the pure braid group by its center: the
/// braid presentation plus the full twist as one extra relator. For three
/// strands this is a free group of rank two.
pub fn center_quotient_presentation(strands: usize) -> Result<FinitePresentation> {
    require_strands(strands, 3)?;
    let braids = pure_braid_presentation(strands)?;
    let names = braids.generators().to_vec();
    let mut relators = braids.relators().to_vec();
    relators.push(full_twist_word(strands)?);
    FinitePresentation::new(names, relators)
}

/// Generator images of the map that forgets strand `k`: bands touching
/// strand `k` die, every other band keeps its strands, renumbered past `k`.
fn deletion_images(strands: usize, k: usize) -> Vec<Word> {
    let shift = |t: usize| if t > k { t - 1 } else { t };
    strand_pairs(strands)
        .map(|(i, j)| {
            if i == k || j == k {
                Word::empty()
            } else {
                Word::gen(gen_index(shift(i), shift(j)))
            }
        })
        .collect()
}

/// The homomorphism that deletes strand `k` from the pure braid group on
/// `strands` strands (for two strands the target is the trivial group).
pub fn strand_deletion(strands: usize, k: usize) -> Result<GroupHom> {
    require_strands(strands, 2)?;
    if k < 1 || k > strands {
        return Err(Error::StrandOutOfRange { strand: k, strands });
    }
    let source = Arc::new(pure_braid_presentation(strands)?);
    let target = if strands == 2 {
        Arc::new(FinitePresentation::trivial())
    } else {
        Arc::new(pure_braid_presentation(strands - 1)?)
    };
    GroupHom::new(source, target, deletion_images(strands, k))
}

/// Deleting the highest strand descends to the center quotients; on three
/// strands the quotient of the target is trivial, so everything dies.
pub fn center_quotient_deletion(strands: usize) -> Result<GroupHom> {
    require_strands(strands, 3)?;
    let source = Arc::new(center_quotient_presentation(strands)?);
    if strands == 3 {
        let target = Arc::new(FinitePresentation::trivial());
        let images = vec![Word::empty(); source.generator_count()];
        return GroupHom::new(source, target, images);
    }
    let target = Arc::new(center_quotient_presentation(strands - 1)?);
    GroupHom::new(source, target, deletion_images(strands, strands))
}

/// Words generating the kernel of the highest-strand deletion: the top
/// frame, a free group of rank `strands − 1`.
fn top_frame_words(strands: usize) -> Vec<Word> {
    (1..strands)
        .map(|i| Word::gen(gen_index(i, strands)))
        .collect()
}

/// The normal filtration of the pure braid group obtained by deleting the
/// highest strand one step at a time. Factors are free of ranks
/// `strands − 1, …, 1`, every subgroup in the chain is of type `F_inf`.
pub fn braid_filtration(strands: usize) -> Result<FiltrationSpec> {
    require_strands(strands, 2)?;
    let mut stages = Vec::new();
    for t in (2..=strands).rev() {
        let map = strand_deletion(t, t)?;
        stages.push(FiltrationStage {
            presentation: map.source().clone(),
            map,
            kernel_gens: top_frame_words(t),
            declared_type: FinitenessClass::FInfinity,
            factor: Some(FactorKind::Free { rank: t - 1 }),
        });
    }
    FiltrationSpec::new(stages, true)
}

/// The filtration the center quotient inherits: the same chain with the
/// rank-one tail removed, ending at the free quotient on three strands.
/// Factors are free of ranks `strands − 1, …, 2`.
pub fn center_quotient_filtration(strands: usize) -> Result<FiltrationSpec> {
    require_strands(strands, 3)?;
    let mut stages = Vec::new();
    for t in (3..=strands).rev() {
        let map = center_quotient_deletion(t)?;
        let kernel_gens = if t == 3 {
            // The last stage kills all of the rank-two free quotient.
            (0..3).map(Word::gen).collect()
        } else {
            top_frame_words(t)
        };
        stages.push(FiltrationStage {
            presentation: map.source().clone(),
            map,
            kernel_gens,
            declared_type: FinitenessClass::FInfinity,
            factor: Some(FactorKind::Free { rank: t - 1 }),
        });
    }
    FiltrationSpec::new(stages, true)
}

/// The split of the pure braid group off its center: the filtration of the
/// center quotient, that quotient's Euler characteristic, and a character
/// pointing along the center (the coordinate that survives every deletion,
/// which evaluates to one on the full twist).
#[derive(Clone, Debug)]
pub struct CenterSplit {
    quotient: FiltrationSpec,
    chi_quotient: i64,
    center_character: Character,
    center_word: Word,
}

impl CenterSplit {
    /// Filtration of the quotient by the center.
    pub fn quotient(&self) -> &FiltrationSpec {
        &self.quotient
    }

    /// Euler characteristic of the center quotient, the product of the
    /// factor characteristics `(1 − rank)`.
    pub fn chi_quotient(&self) -> i64 {
        self.chi_quotient
    }

    /// A character of the pure braid group that is nonzero on the center.
    pub fn center_character(&self) -> &Character {
        &self.center_character
    }

    /// The full twist.
    pub fn center_word(&self) -> &Word {
        &self.center_word
    }
}

/// Splits the pure braid group as its center quotient times the central
/// line spanned by the full twist.
pub fn center_split(strands: usize) -> Result<CenterSplit> {
    require_strands(strands, 3)?;
    let quotient = center_quotient_filtration(strands)?;
    let chi_quotient = product_euler_characteristic(&quotient).ok_or_else(|| {
        Error::BadFiltration("center quotient factors have no Euler characteristic".into())
    })?;
    let braids = Arc::new(pure_braid_presentation(strands)?);
    let mut values = vec![0i64; braids.generator_count()];
    values[gen_index(1, 2)] = 1;
    let center_character = Character::from_integers(braids, &values)?;
    let center_word = full_twist_word(strands)?;
    Ok(CenterSplit {
        quotient,
        chi_quotient,
        center_character,
        center_word,
    })
}

/// A pure braid family pinned to a strand count: the combed presentation,
/// the highest-strand-deletion filtration, and whether the center splitting
/// is part of the package.
#[derive(Clone, Debug)]
pub struct BraidFamilySpec {
    strands: usize,
    presentation: Arc<FinitePresentation>,
    filtration: FiltrationSpec,
    center_split: bool,
}

impl BraidFamilySpec {
    pub fn new(strands: usize, center_split: bool) -> Result<BraidFamilySpec> {
        require_strands(strands, if center_split { 3 } else { 2 })?;
        let filtration = braid_filtration(strands)?;
        let presentation = filtration.group().clone();
        Ok(BraidFamilySpec {
            strands,
            presentation,
            filtration,
            center_split,
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn presentation(&self) -> &Arc<FinitePresentation> {
        &self.presentation
    }

    pub fn filtration(&self) -> &FiltrationSpec {
        &self.filtration
    }

    pub fn has_center_split(&self) -> bool {
        self.center_split
    }

    /// The center splitting, when requested at construction.
    pub fn center_split(&self) -> Result<Option<CenterSplit>> {
        if !self.center_split {
            return Ok(None);
        }
        center_split(self.strands).map(Some)
    }
}

/// One certified fiber inside the braid family: a character of the center
/// quotient on `degree + 3` strands whose kernel is of type `F_degree` but
/// not `FP_{degree+1}`, together with its pull-backs to the center quotient
/// and to the pure braid group on the full strand count.
#[derive(Clone, Debug)]
pub struct BraidFiberClaim {
    degree: u32,
    certificate: FibrationCertificate,
    quotient_character: Character,
    ambient_character: Character,
}

impl BraidFiberClaim {
    /// The finiteness degree `n` of the claim `F_n` but not `FP_{n+1}`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Certificate on the center quotient with `degree + 3` strands, where
    /// the filtration has exactly the right length for this degree.
    pub fn certificate(&self) -> &FibrationCertificate {
        &self.certificate
    }

    /// The certified character pulled back to the center quotient on the
    /// report's strand count; the kernel type survives the pull-back
    /// because each deletion kernel is free of type `F_inf`.
    pub fn quotient_character(&self) -> &Character {
        &self.quotient_character
    }

    /// The same character pulled back to the pure braid group itself; it
    /// vanishes on the full twist.
    pub fn ambient_character(&self) -> &Character {
        &self.ambient_character
    }
}

/// Everything the braid family certifies at one strand count: the combed
/// presentation and its homology, both filtrations, the Euler ledger, the
/// L² profile of the center quotient, one fiber claim per intermediate
/// degree, and the center-direction certificate.
#[derive(Clone, Debug)]
pub struct BraidReport {
    strands: usize,
    presentation: Arc<FinitePresentation>,
    h1: AbelianInvariants,
    filtration: FiltrationSpec,
    split: CenterSplit,
    chi_ambient: i64,
    l2: Vec<i64>,
    fibers: Vec<BraidFiberClaim>,
    center_certificate: FibrationCertificate,
}

impl BraidReport {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn presentation(&self) -> &Arc<FinitePresentation> {
        &self.presentation
    }

    pub fn h1(&self) -> &AbelianInvariants {
        &self.h1
    }

    pub fn filtration(&self) -> &FiltrationSpec {
        &self.filtration
    }

    pub fn split(&self) -> &CenterSplit {
        &self.split
    }

    /// Euler characteristic of the pure braid group; zero, because the
    /// rank-one factor contributes a zero.
    pub fn chi_ambient(&self) -> i64 {
        self.chi_ambient
    }

    /// L² Betti profile of the center quotient: zeros below the top degree.
    pub fn l2(&self) -> &[i64] {
        &self.l2
    }

    /// One claim per degree `0 ..= strands − 3`.
    pub fn fibers(&self) -> &[BraidFiberClaim] {
        &self.fibers
    }

    /// Certificate for a character nonzero on the center, whose kernel is
    /// of type `F_inf`.
    pub fn center_certificate(&self) -> &FibrationCertificate {
        &self.center_certificate
    }
}

/// Composite of highest-strand deletions from `from` strands down to `to`,
/// on the braid groups or on their center quotients.
fn descend(from: usize, to: usize, quotient: bool) -> Result<GroupHom> {
    let start = if quotient {
        Arc::new(center_quotient_presentation(from)?)
    } else {
        Arc::new(pure_braid_presentation(from)?)
    };
    let mut hom = GroupHom::identity(&start);
    for t in ((to + 1)..=from).rev() {
        let step = if quotient {
            center_quotient_deletion(t)?
        } else {
            strand_deletion(t, t)?
        };
        hom = hom.and_then(&step)?;
    }
    Ok(hom)
}

/// Certificate for the degree-zero fiber: the center quotient on three
/// strands is free of rank two, where every nonzero discrete character has
/// an infinitely generated kernel.
fn rank_two_free_certificate() -> Result<FibrationCertificate> {
    let quotient = Arc::new(center_quotient_presentation(3)?);
    let h1 = quotient.h1();
    let psi = Character::from_integers(quotient, &[-1, 1, 0])?;
    let checks = vec![
        CertificateCheck::new(
            "psi-discrete",
            true,
            "integral characters take values in Z, so the kernel is the fiber of a map \
             onto Z"
                .to_string(),
        ),
        CertificateCheck::new(
            "psi-nonzero",
            !psi.is_zero(),
            "a zero character has the whole \
             group as kernel, which is finitely generated"
                .to_string(),
        ),
        CertificateCheck::new(
            "quotient-is-free-of-rank-two",
            h1 == AbelianInvariants::free(2),
            "three conjugation generators, two commuting relations forced by the center \
             relation: first homology Z^2, and the quotient is free on two bands"
                .to_string(),
        ),
    ];
    let claim = format!(
        "kernel of psi is {}: an infinite-index normal subgroup of a rank-two free group \
         is never finitely generated, and type F0 holds vacuously",
        KernelType::FnNotFpn1(0)
    );
    Ok(FibrationCertificate::assemble(
        psi,
        checks,
        Some(claim),
        Vec::new(),
    ))
}

/// Certificate for the center direction: any character that is nonzero on
/// the full twist meets the center in nothing, so its kernel projects onto
/// a finite-index subgroup of the center quotient and inherits `F_inf`.
fn center_direction_certificate(
    split: &CenterSplit,
    chi_ambient: i64,
) -> Result<FibrationCertificate> {
    let psi = split.center_character().clone();
    let on_center = psi.evaluate(split.center_word())?;
    let checks = vec![
        CertificateCheck::new(
            "psi-discrete",
            true,
            "integral characters take values in Z, so the kernel is the fiber of a map \
             onto Z"
                .to_string(),
        ),
        CertificateCheck::new(
            "nontrivial-on-center",
            !on_center.is_zero(),
            format!("psi evaluates to {on_center} on the full twist, which generates the center"),
        ),
        CertificateCheck::new(
            "euler-characteristic-zero",
            chi_ambient == 0,
            "the rank-one filtration factor contributes a zero, so the product Euler \
             characteristic vanishes and no Euler obstruction applies"
                .to_string(),
        ),
    ];
    let claim = format!(
        "kernel of psi is of type {}: psi is nonzero on the central line, so the kernel \
         meets the center trivially and projects isomorphically onto a finite-index \
         subgroup of the center quotient",
        KernelType::FInfinity
    );
    let caveats = vec![
        "the center quotient's type F_inf is concluded from its poly-free structure, not \
         machine-verified"
            .to_string(),
    ];
    Ok(FibrationCertificate::assemble(
        psi,
        checks,
        Some(claim),
        caveats,
    ))
}

/// Runs the whole braid pipeline at one strand count and certifies a fiber
/// of type `F_n` but not `FP_{n+1}` for every `n` up to `strands − 3`, plus
/// an `F_inf` fiber along the center.
pub fn braid_report(strands: usize) -> Result<BraidReport> {
    require_strands(strands, 3)?;
    let filtration = braid_filtration(strands)?;
    let presentation = filtration.group().clone();
    let h1 = presentation.h1();
    let split = center_split(strands)?;
    let chi_ambient = product_euler_characteristic(&filtration).ok_or_else(|| {
        Error::BadFiltration("braid filtration factors have no Euler characteristic".into())
    })?;
    let factor_chis = split
        .quotient()
        .stages()
        .iter()
        .enumerate()
        .map(|(stage, st)| {
            st.factor
                .as_ref()
                .and_then(FactorKind::euler_characteristic)
                .ok_or(Error::MissingFactor { stage })
        })
        .collect::<Result<Vec<i64>>>()?;
    let l2 = l2_profile(&factor_chis)?;
    if !check_h1_splitting(split.quotient())? {
        return Err(Error::BadFiltration(
            "center quotient homology does not split along the filtration".into(),
        ));
    }

    let sample_mus = [BigRational::new(1.into(), 2.into())];
    let mut fibers = Vec::new();
    for degree in 0..=(strands as u32 - 3) {
        let t = degree as usize + 3;
        let certificate = if degree == 0 {
            rank_two_free_certificate()?
        } else {
            let filt = center_quotient_filtration(t)?;
            let kernel_rank = filt.stages()[0].kernel_gens.len();
            let mut phi = vec![BigRational::zero(); kernel_rank];
            phi[0] = BigRational::one();
            let (_, mut certs) = iterate_filtration(&filt, &phi, 0, &sample_mus)?;
            certs.swap_remove(0)
        };
        let quotient_character = descend(strands, t, true)?.pull_back(certificate.psi())?;
        let to_quotient = GroupHom::new(
            Arc::new(pure_braid_presentation(t)?),
            Arc::new(center_quotient_presentation(t)?),
            (0..certificate.psi().ambient().generator_count())
                .map(Word::gen)
                .collect(),
        )?;
        let ambient_character = descend(strands, t, false)?
            .and_then(&to_quotient)?
            .pull_back(certificate.psi())?;
        fibers.push(BraidFiberClaim {
            degree,
            certificate,
            quotient_character,
            ambient_character,
        });
    }

    let center_certificate = center_direction_certificate(&split, chi_ambient)?;
    Ok(BraidReport {
        strands,
        presentation,
        h1,
        filtration,
        split,
        chi_ambient,
        l2,
        fibers,
        center_certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibration::check_condition_a_prime;

    fn binomial2(n: usize) -> usize {
        n * (n - 1) / 2
    }

    #[test]
    fn combing_recursion_fixes_the_relator_counts() {
        // One relator for each acting generator below the top frame and each
        // frame generator: counts obey
        // rel(n) = rel(n-1) + binomial2(n-1) * (n-1).
        let expected = [(2, 0), (3, 2), (4, 11), (5, 35), (6, 85)];
        for (strands, relators) in expected {
            let p = pure_braid_presentation(strands).unwrap();
            assert_eq!(
                p.generator_count(),
                binomial2(strands),
                "generators at {strands}"
            );
            assert_eq!(p.relators().len(), relators, "relators at {strands}");
        }
        assert!(matches!(
            pure_braid_presentation(1),
            Err(Error::TooFewStrands {
                strands: 1,
                minimum: 2
            })
        ));
    }

    #[test]
    fn abelianization_is_free_on_the_bands() {
        for strands in 2..=6 {
            let p = pure_braid_presentation(strands).unwrap();
            assert_eq!(
                p.h1(),
                AbelianInvariants::free(binomial2(strands)),
                "{strands} strands"
            );
            // Stronger than torsion-freeness: every relator is a
            // conjugation, so its exponent sums vanish identically.
            for relator in p.relators() {
                let sums = relator.exponent_sums(p.generator_count());
                assert!(sums.iter().all(num_traits::Zero::is_zero));
            }
        }
    }

    #[test]
    fn conjugation_action_fixes_the_boundary_word() {
        // The product of the top-frame generators is the loop around all
        // punctures but the moving one; an automorphism arises from braiding
        // exactly when each frame generator maps to a conjugate and this
        // boundary word is fixed on the nose.
        for j in 3..=6usize {
            let boundary =
                Word::from_pairs(&(1..j).map(|k| (gen_index(k, j), 1)).collect::<Vec<_>>())
                    .unwrap();
            for s in 2..j {
                for r in 1..s {
                    let mut image = Word::empty();
                    for k in 1..j {
                        image = image.then(&conjugation_action(r, s, k, j).unwrap());
                    }
                    assert_eq!(
                        image.free_reduce(),
                        boundary,
                        "acting generator A{r}_{s} on frame {j}"
                    );
                }
            }
        }
    }

    #[test]
    fn strand_deletion_shifts_indices_and_kills_touched_bands() {
        let del = strand_deletion(3, 3).unwrap();
        assert_eq!(del.images()[gen_index(1, 2)], Word::gen(0));
        assert!(del.images()[gen_index(1, 3)].is_empty());
        assert!(del.images()[gen_index(2, 3)].is_empty());

        let del = strand_deletion(3, 1).unwrap();
        assert!(del.images()[gen_index(1, 2)].is_empty());
        assert!(del.images()[gen_index(1, 3)].is_empty());
        assert_eq!(del.images()[gen_index(2, 3)], Word::gen(0));

        let del = strand_deletion(2, 2).unwrap();
        assert_eq!(del.target().generator_count(), 0);

        assert!(matches!(
            strand_deletion(3, 4),
            Err(Error::StrandOutOfRange {
                strand: 4,
                strands: 3
            })
        ));
    }

    #[test]
    fn composed_deletions_reach_the_trivial_group() {
        let mut hom = GroupHom::identity(&Arc::new(pure_braid_presentation(5).unwrap()));
        for t in (2..=5usize).rev() {
            hom = hom.and_then(&strand_deletion(t, t).unwrap()).unwrap();
        }
        assert_eq!(hom.target().generator_count(), 0);
        assert!(hom.images().iter().all(Word::is_empty));
    }

    #[test]
    fn braid_filtration_is_normal_with_descending_free_factors() {
        let filt = braid_filtration(4).unwrap();
        assert_eq!(filt.length(), 3);
        assert!(filt.normal());
        let ranks: Vec<usize> = filt
            .stages()
            .iter()
            .map(|st| match st.factor {
                Some(FactorKind::Free { rank }) => rank,
                _ => panic!("factor should be free"),
            })
            .collect();
        assert_eq!(ranks, [3, 2, 1]);
        assert!(check_h1_splitting(&filt).unwrap());
        for j in 0..filt.length() {
            assert!(check_condition_a_prime(&filt, j).unwrap(), "stage {j}");
        }
        assert_eq!(braid_filtration(3).unwrap().length(), 2);
        // The rank-one factor zeroes the product.
        assert_eq!(product_euler_characteristic(&filt), Some(0));
    }

    #[test]
    fn center_quotient_presentations_count_out() {
        let expected = [(3, 3, 2), (4, 12, 5), (5, 36, 9)];
        for (strands, relators, h1_rank) in expected {
            let q = center_quotient_presentation(strands).unwrap();
            assert_eq!(q.generator_count(), binomial2(strands));
            assert_eq!(q.relators().len(), relators, "{strands} strands");
            assert_eq!(
                q.h1(),
                AbelianInvariants::free(h1_rank),
                "{strands} strands"
            );
        }
    }

    #[test]
    fn full_twist_touches_every_band_once() {
        let twist = full_twist_word(5).unwrap();
        let sums = twist.exponent_sums(binomial2(5));
        assert!(sums.iter().all(num_traits::One::is_one));
    }

    #[test]
    fn center_split_euler_ledger() {
        // chi of the center quotient is the product of (1 - rank) over the
        // free factors of ranks strands-1, …, 2.
        let expected = [(3, -1), (4, 2), (5, -6)];
        for (strands, chi) in expected {
            let split = center_split(strands).unwrap();
            assert_eq!(split.chi_quotient(), chi, "{strands} strands");
            let on_twist = split
                .center_character()
                .evaluate(split.center_word())
                .unwrap();
            assert!(on_twist.is_one());
            assert!(check_h1_splitting(split.quotient()).unwrap());
        }
        assert!(matches!(
            center_split(2),
            Err(Error::TooFewStrands {
                strands: 2,
                minimum: 3
            })
        ));
    }

    #[test]
    fn center_quotient_filtration_has_separating_stages() {
        let filt = center_quotient_filtration(5).unwrap();
        assert_eq!(filt.length(), 3);
        for j in 0..filt.length() {
            assert!(check_condition_a_prime(&filt, j).unwrap(), "stage {j}");
        }
        let rank_sum: usize = filt
            .stages()
            .iter()
            .map(|st| st.factor.as_ref().unwrap().h1().free_rank)
            .sum();
        assert_eq!(rank_sum, binomial2(5) - 1);
    }

    #[test]
    fn family_spec_carries_the_advertised_invariants() {
        let family = BraidFamilySpec::new(4, true).unwrap();
        assert_eq!(family.strands(), 4);
        assert_eq!(family.presentation().generator_count(), 6);
        assert_eq!(family.filtration().length(), 3);
        assert!(family.has_center_split());
        let split = family.center_split().unwrap().unwrap();
        assert_eq!(split.chi_quotient(), 2);
        assert!(matches!(
            BraidFamilySpec::new(2, true),
            Err(Error::TooFewStrands {
                strands: 2,
                minimum: 3
            })
        ));
        assert!(BraidFamilySpec::new(2, false)
            .unwrap()
            .center_split()
            .unwrap()
            .is_none());
    }

    #[test]
    fn report_on_five_strands_certifies_every_intermediate_degree() {
        let report = braid_report(5).unwrap();
        assert_eq!(report.h1(), &AbelianInvariants::free(10));
        assert_eq!(report.chi_ambient(), 0);
        assert_eq!(report.split().chi_quotient(), -6);
        assert_eq!(report.l2(), [0, 0, 0, 6]);

        let degrees: Vec<u32> = report
            .fibers()
            .iter()
            .map(BraidFiberClaim::degree)
            .collect();
        assert_eq!(degrees, [0, 1, 2]);
        for fiber in report.fibers() {
            let n = fiber.degree();
            let claim = fiber.certificate().claimed_kernel_type().expect("claim");
            assert!(
                claim.contains(&format!("F{} but not FP{}", n, n + 1)),
                "degree {n} claim was: {claim}"
            );
            assert!(fiber.certificate().all_checks_pass(), "degree {n}");
            // The pulled-back characters live on the five-strand groups and
            // keep the kernel type; the ambient one must kill the center.
            assert_eq!(fiber.quotient_character().ambient().generator_count(), 10);
            assert!(!fiber.quotient_character().is_zero());
            let twist = full_twist_word(5).unwrap();
            assert!(fiber
                .ambient_character()
                .evaluate(&twist)
                .unwrap()
                .is_zero());
            assert!(!fiber.ambient_character().is_zero());
        }

        let center = report.center_certificate();
        assert!(center.all_checks_pass());
        let claim = center.claimed_kernel_type().expect("center claim");
        assert!(claim.contains("F_inf"), "claim was: {claim}");
        assert!(center
            .caveats()
            .iter()
            .any(|c| c.contains("not machine-verified")));
    }

    #[test]
    fn report_on_three_strands_is_the_free_rank_two_case() {
        let report = braid_report(3).unwrap();
        assert_eq!(report.fibers().len(), 1);
        let fiber = &report.fibers()[0];
        assert_eq!(fiber.degree(), 0);
        let claim = fiber.certificate().claimed_kernel_type().expect("claim");
        assert!(claim.contains("F0 but not FP1"), "claim was: {claim}");
        assert_eq!(report.split().chi_quotient(), -1);
        assert_eq!(report.l2(), [0, 1]);
        // On three strands the quotient pull-back is the certificate
        // character itself.
        assert_eq!(
            fiber.quotient_character().values(),
            fiber.certificate().psi().values()
        );
    }
}
