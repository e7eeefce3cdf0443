//! Kernel-type classification for characters of the generalized Thompson
//! groups `F_{n,∞}`.
//!
//! The classification rests on three input facts about the Sigma-invariants
//! of `F_{n,∞}` (taken as given, not recomputed): the degree-1 complement is
//! a pair of non-antipodal points `[χ₁], [χ₂]`, and for every degree ≥ 2 the
//! complement is the closed arc between them. Consequently the kernel `N`
//! of a character `c` is
//!
//! * not finitely generated iff `[c]` is one of `[±χ₁], [±χ₂]`,
//! * of type `F_∞` iff both `[c]` and `[−c]` avoid the arc,
//! * finitely generated but not `FP₂` otherwise.
//!
//! The coordinates of `χ₁, χ₂` in the `x₀,…,x_{n−1}` basis of the rank-`n`
//! abelianization are configuration, not computed values; the defaults
//! below are placeholders and every certificate records the pair in use.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::character::{Character, SphereClass};
use crate::finiteness::{FinitenessVerdict, KernelType};
use crate::presentation::FinitePresentation;
use crate::sphere::SphereSubset;
use crate::{Error, Result};

/// Character-sphere model of `F_{n,∞}`: the rank of the abelianization and
/// the two exceptional classes.
#[derive(Clone, Debug)]
pub struct ThompsonModel {
    n: usize,
    ambient: Arc<FinitePresentation>,
    chi1: SphereClass,
    chi2: SphereClass,
}

impl ThompsonModel {
    /// A model with explicit exceptional characters. They must be nonzero,
    /// distinct as sphere classes, and non-antipodal.
    pub fn new(n: usize, chi1: Vec<BigRational>, chi2: Vec<BigRational>) -> Result<ThompsonModel> {
        if n < 2 {
            return Err(Error::BadThompsonModel(format!(
                "abelianization rank must be at least 2, got {n}"
            )));
        }
        let ambient = Arc::new(FinitePresentation::free_of_rank(n));
        let chi1 = SphereClass::new(Character::new(ambient.clone(), chi1)?)
            .map_err(|_| Error::BadThompsonModel("chi1 is zero".into()))?;
        let chi2 = SphereClass::new(Character::new(ambient.clone(), chi2)?)
            .map_err(|_| Error::BadThompsonModel("chi2 is zero".into()))?;
        if chi1 == chi2 {
            return Err(Error::BadThompsonModel(
                "chi1 and chi2 are positive multiples of each other".into(),
            ));
        }
        if chi1.antipode() == chi2 {
            return Err(Error::BadThompsonModel(
                "chi1 and chi2 are antipodal".into(),
            ));
        }
        Ok(ThompsonModel {
            n,
            ambient,
            chi1,
            chi2,
        })
    }

    /// Placeholder coordinates `χ₁ = (1, 0, …, 0)`, `χ₂ = (1, 1, …, 1)` —
    /// overridable configuration, not computed values.
    pub fn with_default_characters(n: usize) -> Result<ThompsonModel> {
        let one = BigRational::from(BigInt::from(1));
        let zero = BigRational::from(BigInt::from(0));
        let mut chi1 = alloc::vec![zero; n];
        if let Some(first) = chi1.first_mut() {
            *first = one.clone();
        }
        let chi2 = alloc::vec![one; n];
        ThompsonModel::new(n, chi1, chi2)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn abelianization_rank(&self) -> usize {
        self.n
    }

    pub fn ambient(&self) -> &Arc<FinitePresentation> {
        &self.ambient
    }

    pub fn chi1(&self) -> &SphereClass {
        &self.chi1
    }

    pub fn chi2(&self) -> &SphereClass {
        &self.chi2
    }

    /// The four classes whose kernels fail to be finitely generated.
    pub fn exceptional_points(&self) -> [SphereClass; 4] {
        [
            self.chi1.clone(),
            self.chi2.clone(),
            self.chi1.antipode(),
            self.chi2.antipode(),
        ]
    }

    /// The closed arc between `[χ₁]` and `[χ₂]`: the complement of every
    /// Sigma-invariant of degree ≥ 2.
    pub fn higher_complement_arc(&self) -> SphereSubset {
        SphereSubset::arc(self.chi1.clone(), self.chi2.clone())
            .expect("model endpoints are valid arc endpoints")
    }
}

/// A finiteness query: is the kernel of type `F_m`, or of type `F_∞`?
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MQuery {
    M(u32),
    Infinity,
}

impl MQuery {
    fn as_option(self) -> Option<u32> {
        match self {
            MQuery::M(m) => Some(m),
            MQuery::Infinity => None,
        }
    }
}

impl core::fmt::Display for MQuery {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MQuery::M(m) => write!(f, "F{m}"),
            MQuery::Infinity => write!(f, "F_inf"),
        }
    }
}

/// Classifies the kernel of the character with the given values, answering
/// the `F_m` query in the justification.
pub fn thompson_kernel_type(
    model: &ThompsonModel,
    values: Vec<BigRational>,
    query: MQuery,
) -> Result<FinitenessVerdict> {
    let c = Character::new(model.ambient().clone(), values)?;
    let class = SphereClass::new(c)?;
    let kernel_type = if model.exceptional_points().contains(&class) {
        KernelType::NotFinitelyGenerated
    } else {
        let arc = model.higher_complement_arc();
        if !arc.contains(&class)? && !arc.contains(&class.antipode())? {
            KernelType::FInfinity
        } else {
            KernelType::FinitelyGeneratedNotFp2
        }
    };
    let reason = match kernel_type {
        KernelType::NotFinitelyGenerated => {
            "the class is one of the four exceptional points of the degree-1 complement"
        }
        KernelType::FInfinity => {
            "the class and its antipode both avoid the arc between the exceptional points"
        }
        _ => "the class or its antipode lies on the arc between the exceptional points",
    };
    let query_answer = match kernel_type.is_of_type_f(query.as_option()) {
        Some(true) => format!("the kernel is of type {query}"),
        Some(false) => format!("the kernel is not of type {query}"),
        None => format!("the {query} query is undecided"),
    };
    Ok(FinitenessVerdict::from_type(
        kernel_type,
        format!("{reason}; {query_answer}"),
    ))
}

/// Which hypothesis of the Thompson-kernel extension theorem holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionCase {
    /// excessive homology at least 2
    A,
    /// excessive homology exactly 1, ambient finiteness parameter ≥ 2, and
    /// the residual character's kernel is of type `F_∞`
    B,
    /// excessive homology exactly 1, ambient finiteness parameter 1, and
    /// the residual character's kernel is finitely generated
    C,
    NotApplicable,
}

impl core::fmt::Display for ExtensionCase {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ExtensionCase::A => write!(f, "a"),
            ExtensionCase::B => write!(f, "b"),
            ExtensionCase::C => write!(f, "c"),
            ExtensionCase::NotApplicable => write!(f, "none"),
        }
    }
}

/// Decides which sufficient condition applies to an extension of `F_{n,∞}`
/// with the given excessive homology, where the ambient group is of type
/// `F_{n0}` and `residual` classifies the kernel of the residual character
/// (the one vanishing on the intersection with the commutator-cover kernel;
/// pass `None` when the excessive homology is not exactly 1).
pub fn thompson_extension_case(
    excessive: usize,
    n0: u32,
    residual: Option<&FinitenessVerdict>,
) -> ExtensionCase {
    if excessive >= 2 {
        return ExtensionCase::A;
    }
    if excessive != 1 {
        return ExtensionCase::NotApplicable;
    }
    match residual {
        Some(verdict) if n0 >= 2 && verdict.kernel_type == KernelType::FInfinity => {
            ExtensionCase::B
        }
        Some(verdict) if n0 == 1 && verdict.kernel_fg == Some(true) => ExtensionCase::C,
        _ => ExtensionCase::NotApplicable,
    }
}
