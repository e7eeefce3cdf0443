//! Brown's fibering criterion for one-relator groups.
//!
//! For `G = < x_1, …, x_n | r >` with `r` cyclically reduced and a character
//! `χ` vanishing on `r`, walk the relator and record the value of `χ` on
//! each proper prefix. The kernel of `χ` is finitely generated exactly when
//! both the minimum and the maximum of that profile are attained once.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_rational::BigRational;
use num_traits::Zero;

use crate::character::Character;
use crate::finiteness::{FinitenessVerdict, KernelType};
use crate::word::Word;
use crate::{Error, Result};

/// Prefix values of a character along a cyclically reduced relator, plus the
/// multiplicities of the extreme values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrownProfile {
    pub values: Vec<BigRational>,
    pub min_multiplicity: usize,
    pub max_multiplicity: usize,
}

/// Values of `χ` on the proper prefixes of `r` (the empty prefix included,
/// so the profile has exactly `len(r)` entries and starts with 0).
pub fn brown_profile(relator: &Word, c: &Character) -> Result<BrownProfile> {
    let reduced = relator.cyclic_reduce();
    if reduced.is_empty() {
        return Err(Error::EmptyRelator);
    }
    if c.is_zero() {
        return Err(Error::ZeroCharacter);
    }
    if !c.evaluate(&reduced)?.is_zero() {
        return Err(Error::CharacterNotOnRelator);
    }
    let mut values = Vec::with_capacity(reduced.len());
    let mut running = BigRational::zero();
    for letter in reduced.letters() {
        values.push(running.clone());
        match letter.sign.as_i64() {
            1 => running += &c.values()[letter.gen],
            _ => running -= &c.values()[letter.gen],
        }
    }
    let min = values.iter().min().expect("profile is nonempty").clone();
    let max = values.iter().max().expect("profile is nonempty").clone();
    let min_multiplicity = values.iter().filter(|v| **v == min).count();
    let max_multiplicity = values.iter().filter(|v| **v == max).count();
    Ok(BrownProfile {
        values,
        min_multiplicity,
        max_multiplicity,
    })
}

/// Applies the criterion and packages the verdict with its profile. The
/// criterion settles finite generation only, so a fibering verdict carries
/// kernel type `Unknown`.
pub fn brown_fibers(relator: &Word, c: &Character) -> Result<(FinitenessVerdict, BrownProfile)> {
    let profile = brown_profile(relator, c)?;
    let kernel_fg = profile.min_multiplicity == 1 && profile.max_multiplicity == 1;
    let verdict = if kernel_fg {
        FinitenessVerdict {
            kernel_fg: Some(true),
            kernel_type: KernelType::Unknown,
            justification: String::from(
                "Brown's criterion for one-relator groups: both extreme prefix values are \
                 attained once, so the kernel is finitely generated",
            ),
        }
    } else {
        FinitenessVerdict {
            kernel_fg: Some(false),
            kernel_type: KernelType::NotFinitelyGenerated,
            justification: format!(
                "Brown's criterion for one-relator groups: extreme prefix values attained {} \
                 and {} times, so the kernel is not finitely generated",
                profile.min_multiplicity, profile.max_multiplicity
            ),
        }
    };
    Ok((verdict, profile))
}
