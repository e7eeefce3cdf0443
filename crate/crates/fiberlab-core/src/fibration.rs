//! Fibered character cones over extensions and subnormal filtrations.
//!
//! Given an extension `1 → K → G → Γ → 1` with a fiber character `φ` on `K`
//! that extends to `G`, every small positive tilt `μ⁻¹·α + c` of an extension
//! `c` along a direction `α` vanishing on `K` is again fibered, with kernel
//! finiteness one degree better than the declared type of `Ker(φ)`. Iterating
//! the tilt along a subnormal filtration staircases the gain, one degree per
//! stage. Everything here works with exact rational data and reports its
//! conclusions as certificates that separate machine-checked facts from
//! declared (trusted) finiteness types.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::character::{character_space_basis, same_presentation, Character, GroupHom};
use crate::error::Error;
use crate::finiteness::{FinitenessClass, KernelType};
use crate::presentation::{AbelianInvariants, FinitePresentation};
use crate::ratmat::RationalMatrix;
use crate::word::Word;
use crate::Result;

/// The one caveat no certificate can drop: the tilting parameter must be
/// sufficiently small, and the admissible threshold is not computable from
/// presentation data.
pub const MU_CAVEAT: &str = "valid only for sufficiently small mu: the \
admissible threshold exists by openness of the fibered cone but is not \
computable from presentation data, and the sampled mu values are not \
certified to lie below it";

const DECLARATION_CAVEAT: &str =
    "finiteness declarations are trusted inputs, not verified from the presentations";

/// Declared finiteness data accompanying an extension and a fiber character:
/// the types of the kernel `K`, the whole group `G`, and `Ker(φ)`.
#[derive(Clone, Copy, Debug)]
pub struct ExtensionDeclarations {
    pub kernel: FinitenessClass,
    pub total: FinitenessClass,
    pub phi_kernel: FinitenessClass,
}

/// An extension `1 → K → G → Γ → 1` presented by the quotient map together
/// with words generating `K` and the declared finiteness types.
#[derive(Clone, Debug)]
pub struct Extension {
    hom: GroupHom,
    kernel_gens: Vec<Word>,
    declarations: ExtensionDeclarations,
}

impl Extension {
    /// Wraps the quotient map after checking that every declared kernel
    /// generator dies in the target (verified on abelianizations; the word
    /// problem itself is out of reach).
    pub fn new(
        hom: GroupHom,
        kernel_gens: Vec<Word>,
        declarations: ExtensionDeclarations,
    ) -> Result<Extension> {
        for word in &kernel_gens {
            word.check_range(hom.source().generator_count())?;
            if !dies_abelianized(&hom, word)? {
                return Err(Error::NotInKernel);
            }
        }
        Ok(Extension {
            hom,
            kernel_gens,
            declarations,
        })
    }

    pub fn hom(&self) -> &GroupHom {
        &self.hom
    }

    pub fn kernel_gens(&self) -> &[Word] {
        &self.kernel_gens
    }

    pub fn declarations(&self) -> &ExtensionDeclarations {
        &self.declarations
    }

    /// The ambient group `G`.
    pub fn group(&self) -> &Arc<FinitePresentation> {
        self.hom.source()
    }
}

/// Whether the image of `word` is trivial in the abelianization of the
/// target of `map` (a necessary condition for lying in its kernel).
fn dies_abelianized(map: &GroupHom, word: &Word) -> Result<bool> {
    let image = map.apply(word)?;
    let sums = image.exponent_sums(map.target().generator_count());
    let relator_span = map.target().exponent_matrix().transpose();
    if relator_span.cols() == 0 {
        return Ok(sums.iter().all(|v| v.is_zero()));
    }
    Ok(relator_span.solve(&sums)?.is_some())
}

/// Describes the factor `G_{j+1}/G_j` of a filtration stage, as far as the
/// homology-splitting and Euler-characteristic bookkeeping needs it.
#[derive(Clone, Debug)]
pub enum FactorKind {
    Free { rank: usize },
    Surface { genus: usize },
    Other(FinitePresentation),
}

impl FactorKind {
    /// First homology of the factor.
    pub fn h1(&self) -> AbelianInvariants {
        match self {
            FactorKind::Free { rank } => AbelianInvariants::free(*rank),
            FactorKind::Surface { genus } => AbelianInvariants::free(2 * genus),
            FactorKind::Other(p) => p.h1(),
        }
    }

    /// Euler characteristic of the factor, when its kind defines one.
    pub fn euler_characteristic(&self) -> Option<i64> {
        match self {
            FactorKind::Free { rank } => Some(1 - *rank as i64),
            FactorKind::Surface { genus } => Some(2 - 2 * (*genus as i64)),
            FactorKind::Other(_) => None,
        }
    }
}

/// One stage of a subnormal filtration `1 = G_0 ≤ G_1 ≤ … ≤ G_m = G`:
/// stage `j` presents the quotient `G/G_j`, maps it onto `G/G_{j+1}`, and
/// carries words generating the kernel `G_{j+1}/G_j` of that map, the
/// declared finiteness type of the subgroup `G_{j+1}`, and optionally the
/// shape of the factor `G_{j+1}/G_j`.
#[derive(Clone, Debug)]
pub struct FiltrationStage {
    pub presentation: Arc<FinitePresentation>,
    pub map: GroupHom,
    pub kernel_gens: Vec<Word>,
    pub declared_type: FinitenessClass,
    pub factor: Option<FactorKind>,
}

/// A validated subnormal filtration: stage quotients chain down to the
/// trivial presentation and every declared kernel generator dies (on
/// abelianizations) in the next stage.
#[derive(Clone, Debug)]
pub struct FiltrationSpec {
    stages: Vec<FiltrationStage>,
    normal: bool,
}

impl FiltrationSpec {
    pub fn new(stages: Vec<FiltrationStage>, normal: bool) -> Result<FiltrationSpec> {
        if stages.is_empty() {
            return Err(Error::BadFiltration(
                "a filtration needs at least one stage".into(),
            ));
        }
        for j in 0..stages.len() {
            let stage = &stages[j];
            if !same_presentation(&stage.presentation, stage.map.source()) {
                return Err(Error::BadFiltration(format!(
                    "stage {j} map does not start at the stage presentation"
                )));
            }
            if j + 1 < stages.len() {
                if !same_presentation(stage.map.target(), &stages[j + 1].presentation) {
                    return Err(Error::BadFiltration(format!(
                        "stage {j} map does not land in the stage {} presentation",
                        j + 1
                    )));
                }
            } else if stage.map.target().generator_count() != 0 {
                return Err(Error::BadFiltration(
                    "the last stage must map onto the trivial presentation".into(),
                ));
            }
            if stage.kernel_gens.is_empty() {
                return Err(Error::BadFiltration(format!(
                    "stage {j} has no kernel generators"
                )));
            }
            for (i, word) in stage.kernel_gens.iter().enumerate() {
                word.check_range(stage.presentation.generator_count())?;
                if !dies_abelianized(&stage.map, word)? {
                    return Err(Error::BadFiltration(format!(
                        "stage {j} kernel generator {i} does not die in the next stage"
                    )));
                }
            }
        }
        Ok(FiltrationSpec { stages, normal })
    }

    pub fn stages(&self) -> &[FiltrationStage] {
        &self.stages
    }

    pub fn normal(&self) -> bool {
        self.normal
    }

    /// Number of stages `m`, the length of the filtration.
    pub fn length(&self) -> usize {
        self.stages.len()
    }

    /// The ambient group `G`, presented by stage 0.
    pub fn group(&self) -> &Arc<FinitePresentation> {
        &self.stages[0].presentation
    }

    /// The composed projection `G → G/G_j` (identity for `j = 0`).
    fn projection(&self, j: usize) -> Result<GroupHom> {
        let mut hom = GroupHom::identity(self.group());
        for stage in &self.stages[..j] {
            hom = hom.and_then(&stage.map)?;
        }
        Ok(hom)
    }
}

/// Finds a character of the whole group restricting to the prescribed
/// values on the kernel generators, if any does. Values inconsistent on the
/// generators alone (before relators enter) are an error; a well-posed
/// system with no solution yields `None`.
pub fn check_extension_of_char(ext: &Extension, phi: &[BigRational]) -> Result<Option<Character>> {
    extend_values(ext.group(), &ext.kernel_gens, phi)
}

fn extend_values(
    group: &Arc<FinitePresentation>,
    kernel_gens: &[Word],
    phi: &[BigRational],
) -> Result<Option<Character>> {
    if phi.len() != kernel_gens.len() {
        return Err(Error::ValueCountMismatch {
            generators: kernel_gens.len(),
            values: phi.len(),
        });
    }
    if phi.iter().all(|v| v.is_zero()) {
        return Err(Error::ZeroCharacter);
    }
    let n = group.generator_count();
    let mut gen_rows = Vec::with_capacity(kernel_gens.len());
    for word in kernel_gens {
        word.check_range(n)?;
        let row: Vec<BigRational> = word
            .exponent_sums(n)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        gen_rows.push(row);
    }
    let gens_only = RationalMatrix::from_rows(gen_rows.clone(), n)?;
    if gens_only.solve(phi)?.is_none() {
        return Err(Error::InconsistentBoundaryValues);
    }
    let mut rows = gen_rows;
    let mut rhs = phi.to_vec();
    for relator in group.relators() {
        rows.push(
            relator
                .exponent_sums(n)
                .into_iter()
                .map(BigRational::from_integer)
                .collect(),
        );
        rhs.push(BigRational::zero());
    }
    let full = RationalMatrix::from_rows(rows, n)?;
    match full.solve(&rhs)? {
        None => Ok(None),
        Some(values) => Ok(Some(Character::new(Arc::clone(group), values)?)),
    }
}

/// Searches the canonical character basis of stage `j` for one that is
/// nonzero on some stage-`j` kernel generator and pulls it back to the
/// ambient group. Such a character vanishes on `G_j` and not on `G_{j+1}`;
/// `None` means every character of the stage quotient kills the next
/// subgroup, so no separating direction exists.
pub fn find_alpha(filt: &FiltrationSpec, j: usize) -> Result<Option<Character>> {
    let stage = filt
        .stages
        .get(j)
        .ok_or_else(|| Error::BadFiltration(format!("no stage {j} in the filtration")))?;
    for candidate in character_space_basis(&stage.presentation) {
        let mut hits = false;
        for word in &stage.kernel_gens {
            if !candidate.evaluate(word)?.is_zero() {
                hits = true;
                break;
            }
        }
        if hits {
            let projection = filt.projection(j)?;
            return Ok(Some(projection.pull_back(&candidate)?));
        }
    }
    Ok(None)
}

/// For a normal filtration, whether the sequence
/// `1 → G_{j+1}/G_j → G/G_j → G/G_{j+1} → 1` has excessive rational first
/// homology, i.e. whether the stage quotient map kills some of it.
pub fn check_condition_a_prime(filt: &FiltrationSpec, j: usize) -> Result<bool> {
    if !filt.normal {
        return Err(Error::BadFiltration(
            "the excessive-homology test applies to normal filtrations only".into(),
        ));
    }
    let stage = filt
        .stages
        .get(j)
        .ok_or_else(|| Error::BadFiltration(format!("no stage {j} in the filtration")))?;
    Ok(stage.map.excessive_dim()? > 0)
}

/// Whether integral first homology of the whole group is the direct sum of
/// the factor homologies: free ranks add up and the torsion agrees as a
/// multiset of primary parts. Needs a factor description on every stage.
pub fn check_h1_splitting(filt: &FiltrationSpec) -> Result<bool> {
    let mut free = 0usize;
    let mut torsion: Vec<BigInt> = Vec::new();
    for (j, stage) in filt.stages.iter().enumerate() {
        let factor = stage
            .factor
            .as_ref()
            .ok_or(Error::MissingFactor { stage: j })?;
        let invariants = factor.h1();
        free += invariants.free_rank;
        torsion.extend(invariants.torsion.iter().cloned());
    }
    let whole = filt.group().h1();
    Ok(whole.free_rank == free && primary_parts(&whole.torsion) == primary_parts(&torsion))
}

/// Splits invariant factors into prime powers, sorted, so that torsion can
/// be compared across different direct-sum decompositions.
fn primary_parts(torsion: &[BigInt]) -> Vec<BigInt> {
    let mut parts = Vec::new();
    for d in torsion {
        let mut rest = d.abs();
        let mut p = BigInt::from(2);
        while &p * &p <= rest {
            if (&rest % &p).is_zero() {
                let mut power = BigInt::one();
                while (&rest % &p).is_zero() {
                    rest /= &p;
                    power *= &p;
                }
                parts.push(power);
            }
            p += 1;
        }
        if rest > BigInt::one() {
            parts.push(rest);
        }
    }
    parts.sort();
    parts
}

/// Product of the declared factor Euler characteristics; `None` when some
/// stage has no factor or a factor kind with no defined one.
pub fn product_euler_characteristic(filt: &FiltrationSpec) -> Option<i64> {
    let mut product: i64 = 1;
    for stage in filt.stages() {
        let chi = stage.factor.as_ref()?.euler_characteristic()?;
        product = product.checked_mul(chi)?;
    }
    Some(product)
}

/// A one-parameter family of fibered characters `μ⁻¹·direction + base`,
/// valid for all sufficiently small positive `μ`, together with the sampled
/// parameter values the caller asked to certify.
#[derive(Clone, Debug)]
pub struct CharacterCone {
    base: Character,
    direction: Character,
    threshold_note: String,
    sample_mus: Vec<BigRational>,
}

impl CharacterCone {
    pub fn base(&self) -> &Character {
        &self.base
    }

    pub fn direction(&self) -> &Character {
        &self.direction
    }

    pub fn threshold_note(&self) -> &str {
        &self.threshold_note
    }

    pub fn sample_mus(&self) -> &[BigRational] {
        &self.sample_mus
    }
}

/// One verified or declared fact inside a certificate.
#[derive(Clone, Debug)]
pub struct CertificateCheck {
    pub name: String,
    pub passed: bool,
    pub citation: String,
}

impl CertificateCheck {
    pub(crate) fn new(name: &str, passed: bool, citation: String) -> CertificateCheck {
        CertificateCheck {
            name: name.to_string(),
            passed,
            citation,
        }
    }
}

/// A machine-checkable record of one fibered character: the character
/// itself, the list of checks that went into it, the claimed kernel type
/// (present only when every check passed), and the caveats that always
/// accompany the claim.
#[derive(Clone, Debug)]
pub struct FibrationCertificate {
    psi: Character,
    checks: Vec<CertificateCheck>,
    claimed_kernel_type: Option<String>,
    caveats: Vec<String>,
}

impl FibrationCertificate {
    /// Builds the certificate, dropping the claim unless every check passed.
    pub(crate) fn assemble(
        psi: Character,
        checks: Vec<CertificateCheck>,
        claim: Option<String>,
        caveats: Vec<String>,
    ) -> FibrationCertificate {
        let all_pass = checks.iter().all(|c| c.passed);
        FibrationCertificate {
            psi,
            checks,
            claimed_kernel_type: if all_pass { claim } else { None },
            caveats,
        }
    }

    /// The certified character, in primitive integral form.
    pub fn psi(&self) -> &Character {
        &self.psi
    }

    pub fn checks(&self) -> &[CertificateCheck] {
        &self.checks
    }

    pub fn claimed_kernel_type(&self) -> Option<&str> {
        self.claimed_kernel_type.as_deref()
    }

    pub fn caveats(&self) -> &[String] {
        &self.caveats
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Largest degree the declared types support in the one-stage fibering
/// criterion: the kernel and total group enter at their own level, the
/// fiber-character kernel one below. `None` means unbounded.
fn fibering_degree(d: &ExtensionDeclarations) -> Option<u32> {
    let shifted = d.phi_kernel.fp_ceiling().map(|k| k.saturating_add(1));
    [d.kernel.fp_ceiling(), d.total.fp_ceiling(), shifted]
        .into_iter()
        .fold(None, |acc, x| match (acc, x) {
            (None, v) => v,
            (v, None) => v,
            (Some(a), Some(b)) => Some(a.min(b)),
        })
}

/// Whether `psi` restricted to the kernel generators is one positive
/// rational multiple of the prescribed fiber values — the exact form of
/// "`psi` extends `phi` up to the rescaling that made it integral".
fn restriction_is_positive_multiple(
    psi: &Character,
    kernel_gens: &[Word],
    phi: &[BigRational],
) -> Result<bool> {
    let mut ratio: Option<BigRational> = None;
    for (word, expected) in kernel_gens.iter().zip(phi) {
        let got = psi.evaluate(word)?;
        if expected.is_zero() {
            if !got.is_zero() {
                return Ok(false);
            }
            continue;
        }
        let r = &got / expected;
        match &ratio {
            None => {
                if !r.is_positive() {
                    return Ok(false);
                }
                ratio = Some(r);
            }
            Some(previous) => {
                if *previous != r {
                    return Ok(false);
                }
            }
        }
    }
    Ok(ratio.is_some())
}

/// Certifies the sampled points of the cone `μ⁻¹·alpha + c` over an
/// extension: `c` must restrict to `phi` exactly, `alpha` must vanish on
/// the kernel generators, and every sampled `μ` must be positive. Each
/// sample yields one certificate whose claim (kernel type `F`/`FP` at the
/// declared degree) is present only when every check passes.
pub fn construct_cone(
    ext: &Extension,
    phi: &[BigRational],
    c: &Character,
    alpha: &Character,
    sample_mus: &[BigRational],
) -> Result<(CharacterCone, Vec<FibrationCertificate>)> {
    if !same_presentation(c.ambient(), ext.group())
        || !same_presentation(alpha.ambient(), ext.group())
    {
        return Err(Error::AmbientMismatch);
    }
    if phi.len() != ext.kernel_gens.len() {
        return Err(Error::ValueCountMismatch {
            generators: ext.kernel_gens.len(),
            values: phi.len(),
        });
    }
    if phi.iter().all(|v| v.is_zero()) || alpha.is_zero() {
        return Err(Error::ZeroCharacter);
    }
    for (i, word) in ext.kernel_gens.iter().enumerate() {
        if !alpha.evaluate(word)?.is_zero() {
            return Err(Error::DirectionDoesNotVanish { generator: i });
        }
    }
    for (word, expected) in ext.kernel_gens.iter().zip(phi) {
        if &c.evaluate(word)? != expected {
            return Err(Error::InconsistentBoundaryValues);
        }
    }
    for mu in sample_mus {
        if !mu.is_positive() {
            return Err(Error::NonPositiveMu);
        }
    }

    let d = &ext.declarations;
    let degree = fibering_degree(d);
    let homotopical =
        d.kernel.is_homotopical() && d.total.is_homotopical() && d.phi_kernel.is_homotopical();
    let declared_ok = degree.is_none_or(|k| k >= 1);
    let claim = declared_ok.then(|| {
        let ty = match degree {
            None if homotopical => "F_inf".to_string(),
            None => "FP_inf".to_string(),
            Some(k) if homotopical => format!("F{k}"),
            Some(k) => format!("FP{k}"),
        };
        format!(
            "kernel of psi is of type {ty} for all sufficiently small positive mu, \
             by the one-stage fibering criterion for extensions with infinite \
             quotient abelianization"
        )
    });
    let quotient_b1 = ext.hom.target().h1().free_rank;

    let cone = CharacterCone {
        base: c.clone(),
        direction: alpha.clone(),
        threshold_note: MU_CAVEAT.to_string(),
        sample_mus: sample_mus.to_vec(),
    };
    let mut certificates = Vec::with_capacity(sample_mus.len());
    for mu in sample_mus {
        let psi = c.plus(&alpha.scaled(&mu.recip()))?.primitive_integral()?;
        let restricts = restriction_is_positive_multiple(&psi, &ext.kernel_gens, phi)?;
        let checks = vec![
            CertificateCheck::new(
                "restriction-is-positive-multiple",
                restricts,
                "exact evaluation on the declared kernel generators agrees with the \
                 fiber character up to one positive rational factor"
                    .to_string(),
            ),
            CertificateCheck::new(
                "psi-discrete",
                true,
                "coprime integer values give a character onto the integers, hence discrete"
                    .to_string(),
            ),
            CertificateCheck::new(
                "quotient-abelianization-infinite",
                quotient_b1 >= 1,
                format!(
                    "rational first homology of the quotient presentation has rank {quotient_b1}"
                ),
            ),
            CertificateCheck::new(
                "finiteness-declarations",
                declared_ok,
                format!(
                    "declared types: kernel {}, total group {}, fiber-character kernel {}; \
                     taken on trust",
                    d.kernel, d.total, d.phi_kernel
                ),
            ),
        ];
        certificates.push(FibrationCertificate::assemble(
            psi,
            checks,
            claim.clone(),
            vec![MU_CAVEAT.to_string(), DECLARATION_CAVEAT.to_string()],
        ));
    }
    Ok((cone, certificates))
}

/// Runs the iterated tilt over a whole filtration: finds a separating
/// character at every stage, extends the fiber character, telescopes the
/// tilts into `ψ_μ = μ⁻¹·(α_1 + … + α_{m-1}) + c`, and certifies each
/// sampled `μ`. `s` is the declared type (`FP_s`, or `F_s` when the stage
/// declarations are homotopical) of the kernel of the fiber character.
///
/// The positive claim is kernel type `F`/`FP` at degree `s + m − 1`; when
/// `s = 0`, every stage factor is described, first homology splits along
/// the factors and their Euler characteristics multiply to something
/// nonzero, the claim sharpens to "`F_{m-1}` but not `FP_m`".
pub fn iterate_filtration(
    filt: &FiltrationSpec,
    phi: &[BigRational],
    s: u32,
    sample_mus: &[BigRational],
) -> Result<(CharacterCone, Vec<FibrationCertificate>)> {
    let m = filt.length();
    if m < 2 {
        return Err(Error::BadFiltration(
            "the iterated tilt needs a filtration of length at least two".into(),
        ));
    }
    for mu in sample_mus {
        if !mu.is_positive() {
            return Err(Error::NonPositiveMu);
        }
    }

    let mut alphas = Vec::with_capacity(m);
    for j in 0..m {
        match find_alpha(filt, j)? {
            Some(alpha) => alphas.push(alpha),
            None => {
                return Err(Error::BadFiltration(format!(
                    "condition (a) fails at stage {j}: every character of the stage \
                     quotient kills the next filtration subgroup"
                )))
            }
        }
    }
    let stage0 = &filt.stages[0];
    let c = extend_values(filt.group(), &stage0.kernel_gens, phi)?.ok_or_else(|| {
        Error::BadFiltration("the fiber character does not extend to the ambient group".into())
    })?;

    let mut ladder_fp = true;
    let mut ladder_f = true;
    let mut required = Vec::with_capacity(m);
    for (j, stage) in filt.stages.iter().enumerate() {
        let need = if j + 1 < m {
            s + j as u32 + 1
        } else {
            s + m as u32 - 1
        };
        required.push(need);
        ladder_fp &= stage.declared_type.implies_fp(need);
        ladder_f &= stage.declared_type.implies_f(need);
    }
    let declared: Vec<String> = filt
        .stages
        .iter()
        .map(|st| st.declared_type.to_string())
        .collect();
    let required_text: Vec<String> = required.iter().map(|k| format!("FP{k}")).collect();

    let mut direction = Character::zero(Arc::clone(filt.group()));
    for alpha in &alphas[1..] {
        direction = direction.plus(alpha)?;
    }

    let mut extra_caveats: Vec<String> = Vec::new();
    let mut negative_chi: Option<i64> = None;
    if s == 0 {
        if filt.stages.iter().any(|st| st.factor.is_none()) {
            extra_caveats
                .push("factor data incomplete; negative conclusion not attempted".to_string());
        } else {
            let splits = check_h1_splitting(filt)?;
            let chi = product_euler_characteristic(filt);
            match (splits, chi) {
                (true, Some(chi)) if chi != 0 => negative_chi = Some(chi),
                (true, Some(_)) => extra_caveats.push(
                    "product Euler characteristic is zero; negative conclusion not available"
                        .to_string(),
                ),
                (true, None) => extra_caveats.push(
                    "a factor has no defined Euler characteristic; negative conclusion \
                     not attempted"
                        .to_string(),
                ),
                (false, _) => extra_caveats.push(
                    "first homology does not split along the filtration factors; negative \
                     conclusion not available"
                        .to_string(),
                ),
            }
        }
    }

    let k = s + m as u32 - 1;
    let claim = ladder_fp.then(|| match negative_chi {
        Some(chi) => {
            let core = if ladder_f {
                KernelType::FnNotFpn1(k).to_string()
            } else {
                format!("FP{k} but not FP{m}")
            };
            format!(
                "kernel of psi is {core} for all sufficiently small positive mu: positive \
                 part by iterated tilting along the filtration; negative part because first \
                 homology splits along the filtration factors and the product Euler \
                 characteristic {chi} is nonzero"
            )
        }
        None => {
            let ty = if ladder_f {
                format!("F{k}")
            } else {
                format!("FP{k}")
            };
            format!(
                "kernel of psi is of type {ty} for all sufficiently small positive mu, \
                 by iterated tilting along the filtration"
            )
        }
    });

    let mut base_checks = vec![
        CertificateCheck::new(
            "filtration-separating-characters",
            true,
            "every stage admits a character killing the stage subgroup and not the next \
             one, found by exact rational solve"
                .to_string(),
        ),
        CertificateCheck::new(
            "fiber-character-extends",
            true,
            "the fiber character extends to the ambient group, found by exact rational solve"
                .to_string(),
        ),
        CertificateCheck::new(
            "finiteness-ladder",
            ladder_fp,
            format!(
                "declared stage types [{}] against the required ladder [{}]; taken on trust",
                declared.join(", "),
                required_text.join(", ")
            ),
        ),
    ];
    if let Some(chi) = negative_chi {
        base_checks.push(CertificateCheck::new(
            "h1-splits-along-filtration",
            true,
            "free ranks add up and torsion agrees as a multiset of primary parts".to_string(),
        ));
        base_checks.push(CertificateCheck::new(
            "euler-characteristic-nonzero",
            true,
            format!("product of the factor Euler characteristics is {chi}"),
        ));
    }

    let mut caveats = vec![MU_CAVEAT.to_string(), DECLARATION_CAVEAT.to_string()];
    caveats.extend(extra_caveats);

    let cone = CharacterCone {
        base: c.clone(),
        direction: direction.clone(),
        threshold_note: MU_CAVEAT.to_string(),
        sample_mus: sample_mus.to_vec(),
    };
    let mut certificates = Vec::with_capacity(sample_mus.len());
    for mu in sample_mus {
        let psi = c
            .plus(&direction.scaled(&mu.recip()))?
            .primitive_integral()?;
        let restricts = restriction_is_positive_multiple(&psi, &stage0.kernel_gens, phi)?;
        let mut checks = base_checks.clone();
        checks.push(CertificateCheck::new(
            "restriction-is-positive-multiple",
            restricts,
            "exact evaluation on the declared kernel generators agrees with the fiber \
             character up to one positive rational factor"
                .to_string(),
        ));
        checks.push(CertificateCheck::new(
            "psi-discrete",
            true,
            "coprime integer values give a character onto the integers, hence discrete".to_string(),
        ));
        certificates.push(FibrationCertificate::assemble(
            psi,
            checks,
            claim.clone(),
            caveats.clone(),
        ));
    }
    Ok((cone, certificates))
}
