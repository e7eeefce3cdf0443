//! Cell-count arithmetic for classifying spaces: products, Euler
//! characteristics, the degree-3 truncated characteristic, the Novikov rank
//! inequality, incoherence certificates, and L² Betti profiles of iterated
//! fibrations by free and surface groups.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Number of cells in each dimension of a classifying space, with a label
/// for certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellCounts {
    alpha: Vec<u64>,
    name: String,
}

impl CellCounts {
    /// Counts must start with at least one 0-cell; trailing zeros are kept
    /// as given.
    pub fn new(alpha: Vec<u64>, name: String) -> Result<CellCounts> {
        match alpha.first() {
            Some(&a0) if a0 >= 1 => Ok(CellCounts { alpha, name }),
            _ => Err(Error::BadCellCounts(
                "a classifying space needs at least one 0-cell".into(),
            )),
        }
    }

    /// A point: the classifying space of the trivial group.
    pub fn point() -> CellCounts {
        CellCounts {
            alpha: alloc::vec![1],
            name: "point".into(),
        }
    }

    /// Rose with `rank` petals: classifying space of a free group.
    pub fn free(rank: u64) -> CellCounts {
        if rank == 0 {
            return CellCounts::point();
        }
        CellCounts {
            alpha: alloc::vec![1, rank],
            name: format!("free:{rank}"),
        }
    }

    /// Closed orientable surface of the given genus (genus ≥ 1: one 0-cell,
    /// 2g loops, one 2-cell).
    pub fn surface(genus: u64) -> Result<CellCounts> {
        if genus == 0 {
            return Err(Error::BadCellCounts(
                "genus-0 surface is not aspherical".into(),
            ));
        }
        Ok(CellCounts {
            alpha: alloc::vec![1, 2 * genus, 1],
            name: format!("surface:{genus}"),
        })
    }

    pub fn counts(&self) -> &[u64] {
        &self.alpha
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Count in one dimension, zero beyond the listed range.
    pub fn count(&self, dim: usize) -> u64 {
        self.alpha.get(dim).copied().unwrap_or(0)
    }
}

/// Cell counts of a product complex: the convolution of the two sequences.
pub fn wall_product(c: &CellCounts, e: &CellCounts) -> CellCounts {
    let len = c.alpha.len() + e.alpha.len() - 1;
    let mut alpha = alloc::vec![0u64; len];
    for (i, &ci) in c.alpha.iter().enumerate() {
        for (j, &ej) in e.alpha.iter().enumerate() {
            alpha[i + j] += ci * ej;
        }
    }
    CellCounts {
        alpha,
        name: format!("{} x {}", c.name, e.name),
    }
}

/// Alternating sum of the cell counts.
pub fn euler_char(c: &CellCounts) -> i64 {
    c.alpha
        .iter()
        .enumerate()
        .map(|(i, &a)| if i % 2 == 0 { a as i64 } else { -(a as i64) })
        .sum()
}

/// `k₀ − k₁ + k₂ − k₃` for this resolution: a witness lower bound for the
/// maximum over all resolutions (which is not computable from one).
pub fn chi3_lower_bound(c: &CellCounts) -> i64 {
    (0..4)
        .map(|i| {
            let a = c.count(i) as i64;
            if i % 2 == 0 {
                a
            } else {
                -a
            }
        })
        .sum()
}

/// Outcome of the Novikov rank inequality `k₁ + k₃ ≥ k₀ + k₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionVerdict {
    pub obstructed: bool,
    /// `k₁ + k₃`
    pub lhs: i64,
    /// `k₀ + k₂`
    pub rhs: i64,
    pub conclusion: String,
}

/// Tests the rank inequality a free resolution must satisfy whenever some
/// character class lies in the degree-2 homological Sigma-invariant. When
/// it fails, no class does, so no algebraic fiber is `FP₂`.
pub fn novikov_obstruction(c: &CellCounts) -> ObstructionVerdict {
    let lhs = c.count(1) as i64 + c.count(3) as i64;
    let rhs = c.count(0) as i64 + c.count(2) as i64;
    let obstructed = lhs < rhs;
    let conclusion = if obstructed {
        format!(
            "Novikov rank inequality fails ({lhs} < {rhs}): no character class lies in \
             Sigma^2(G;Z) for this resolution, so no algebraic fiber of G is FP2"
        )
    } else {
        format!(
            "Novikov rank inequality holds ({lhs} >= {rhs}); no obstruction from this resolution"
        )
    };
    ObstructionVerdict {
        obstructed,
        lhs,
        rhs,
        conclusion,
    }
}

/// What the caller certifies about the extension `1 → K → G → Γ → 1`
/// feeding the incoherence test.
#[derive(Clone, Debug)]
pub struct IncoherenceInput {
    pub counts: CellCounts,
    /// dimension of the kernel of `H1(G;Q) → H1(Γ;Q)`
    pub excessive: usize,
    /// the caller certifies that K is finitely generated
    pub kernel_fg_certified: bool,
    /// the caller certifies that `Γ^{ab}` is infinite
    pub abelianization_infinite_certified: bool,
}

/// One-directional incoherence verdict: either a certificate or silence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IncoherenceVerdict {
    Incoherent { chi3_witness: i64, citation: String },
    Inconclusive { reason: String },
}

/// A group of type `FP₃` with positive truncated characteristic and
/// excessive homology fibers with a non-`FP₂` kernel, hence is incoherent.
/// The converse direction is not a theorem, so this never claims coherence.
pub fn incoherence_test(input: &IncoherenceInput) -> IncoherenceVerdict {
    if input.excessive == 0 {
        return IncoherenceVerdict::Inconclusive {
            reason: "no excessive homology; the fibering hypothesis fails".into(),
        };
    }
    if !input.kernel_fg_certified {
        return IncoherenceVerdict::Inconclusive {
            reason: "kernel finite generation not certified".into(),
        };
    }
    if !input.abelianization_infinite_certified {
        return IncoherenceVerdict::Inconclusive {
            reason: "infinite abelianization of the quotient not certified".into(),
        };
    }
    let witness = chi3_lower_bound(&input.counts);
    if witness <= 0 {
        return IncoherenceVerdict::Inconclusive {
            reason: format!(
                "truncated characteristic witness {witness} is not positive; the maximum over \
                 resolutions could still be"
            ),
        };
    }
    IncoherenceVerdict::Incoherent {
        chi3_witness: witness,
        citation: format!(
            "incoherence from excessive homology {} and positive truncated characteristic \
             (witness {witness}): some finitely generated subgroup is not finitely presented",
            input.excessive
        ),
    }
}

/// L² Betti profile `(b₀, …, b_m)` of a group admitting a filtration with
/// `m` factors, each a finitely generated free or surface group encoded by
/// its Euler characteristic: all entries vanish below the top, and
/// `b_m = (−1)^m ∏ χᵢ`.
pub fn l2_profile(factor_chis: &[i64]) -> Result<Vec<i64>> {
    for &chi in factor_chis {
        if chi > 1 {
            return Err(Error::BadFactorChi(chi));
        }
    }
    let m = factor_chis.len();
    let product: i64 = factor_chis.iter().product();
    let sign = if m.is_multiple_of(2) { 1 } else { -1 };
    let mut profile = alloc::vec![0i64; m + 1];
    profile[m] = sign * product;
    Ok(profile)
}
