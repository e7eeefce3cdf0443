//! Vocabulary for homological and homotopical finiteness properties.

use alloc::string::String;
use core::fmt;

/// Declared finiteness type of a group: `F_k`, `FP_k`, or their limits.
/// `F_k` implies `FP_k`, and both families are monotone downwards in `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FinitenessClass {
    F(u32),
    Fp(u32),
    FInfinity,
    FpInfinity,
}

impl FinitenessClass {
    /// Whether a group of this class is known to be of type `FP_k`.
    pub fn implies_fp(&self, k: u32) -> bool {
        match self {
            FinitenessClass::F(m) | FinitenessClass::Fp(m) => *m >= k,
            FinitenessClass::FInfinity | FinitenessClass::FpInfinity => true,
        }
    }

    /// Whether a group of this class is known to be of type `F_k`.
    pub fn implies_f(&self, k: u32) -> bool {
        match self {
            FinitenessClass::F(m) => *m >= k,
            FinitenessClass::FInfinity => true,
            FinitenessClass::Fp(_) | FinitenessClass::FpInfinity => false,
        }
    }

    /// Largest `k` with `FP_k` known, or `None` when every `k` is.
    pub fn fp_ceiling(&self) -> Option<u32> {
        match self {
            FinitenessClass::F(m) | FinitenessClass::Fp(m) => Some(*m),
            FinitenessClass::FInfinity | FinitenessClass::FpInfinity => None,
        }
    }

    /// Whether the class carries homotopical (`F`-side) information.
    pub fn is_homotopical(&self) -> bool {
        matches!(self, FinitenessClass::F(_) | FinitenessClass::FInfinity)
    }

    /// Whether this class is at least as strong as `other`.
    pub fn implies(&self, other: &FinitenessClass) -> bool {
        match (self, other) {
            (FinitenessClass::FInfinity, _) => true,
            (FinitenessClass::FpInfinity, FinitenessClass::FpInfinity) => true,
            (FinitenessClass::FpInfinity, FinitenessClass::Fp(_)) => true,
            (FinitenessClass::F(m), FinitenessClass::F(k)) => m >= k,
            (FinitenessClass::F(m), FinitenessClass::Fp(k)) => m >= k,
            (FinitenessClass::Fp(m), FinitenessClass::Fp(k)) => m >= k,
            _ => false,
        }
    }
}

impl fmt::Display for FinitenessClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FinitenessClass::F(k) => write!(f, "F{k}"),
            FinitenessClass::Fp(k) => write!(f, "FP{k}"),
            FinitenessClass::FInfinity => write!(f, "F_inf"),
            FinitenessClass::FpInfinity => write!(f, "FP_inf"),
        }
    }
}

impl FinitenessClass {
    /// Parses the same forms `Display` produces.
    pub fn parse(text: &str) -> Option<FinitenessClass> {
        match text {
            "F_inf" => Some(FinitenessClass::FInfinity),
            "FP_inf" => Some(FinitenessClass::FpInfinity),
            _ => {
                if let Some(k) = text.strip_prefix("FP") {
                    k.parse().ok().map(FinitenessClass::Fp)
                } else if let Some(k) = text.strip_prefix('F') {
                    k.parse().ok().map(FinitenessClass::F)
                } else {
                    None
                }
            }
        }
    }
}

/// Exact finiteness type of a fibration kernel, as far as the library's
/// criteria can pin it down.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelType {
    NotFinitelyGenerated,
    FinitelyGeneratedNotFp2,
    /// Of type `F_n` but not `FP_{n+1}`.
    FnNotFpn1(u32),
    FInfinity,
    /// The criterion at hand says nothing beyond the `kernel_fg` flag.
    Unknown,
}

impl KernelType {
    /// What the type alone says about finite generation.
    pub fn implies_kernel_fg(&self) -> Option<bool> {
        match self {
            KernelType::NotFinitelyGenerated => Some(false),
            KernelType::FinitelyGeneratedNotFp2 | KernelType::FInfinity => Some(true),
            KernelType::FnNotFpn1(n) => Some(*n >= 1),
            KernelType::Unknown => None,
        }
    }

    /// Whether a kernel of this type is of type `F_m` (`None` = `F_inf`
    /// query, or the type does not decide).
    pub fn is_of_type_f(&self, m: Option<u32>) -> Option<bool> {
        match (self, m) {
            (KernelType::Unknown, _) => None,
            (_, Some(0)) => Some(true),
            (KernelType::FInfinity, _) => Some(true),
            (KernelType::NotFinitelyGenerated, _) => Some(false),
            (KernelType::FinitelyGeneratedNotFp2, Some(1)) => Some(true),
            (KernelType::FinitelyGeneratedNotFp2, _) => Some(false),
            (KernelType::FnNotFpn1(n), Some(m)) => Some(m <= *n),
            (KernelType::FnNotFpn1(_), None) => Some(false),
        }
    }
}

impl fmt::Display for KernelType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelType::NotFinitelyGenerated => write!(f, "not finitely generated"),
            KernelType::FinitelyGeneratedNotFp2 => {
                write!(f, "finitely generated but not FP2")
            }
            KernelType::FnNotFpn1(n) => write!(f, "F{} but not FP{}", n, n + 1),
            KernelType::FInfinity => write!(f, "F_inf"),
            KernelType::Unknown => write!(f, "unknown"),
        }
    }
}

/// Outcome of a fibering test: is the kernel of the character finitely
/// generated, how far up the finiteness ladder does it go, and why.
/// `kernel_fg` may carry strictly more than `kernel_type` (a criterion can
/// settle finite generation while leaving the exact type open).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitenessVerdict {
    pub kernel_fg: Option<bool>,
    pub kernel_type: KernelType,
    pub justification: String,
}

impl FinitenessVerdict {
    /// A verdict whose `kernel_fg` flag is exactly what the type implies.
    pub fn from_type(kernel_type: KernelType, justification: String) -> FinitenessVerdict {
        FinitenessVerdict {
            kernel_fg: kernel_type.implies_kernel_fg(),
            kernel_type,
            justification,
        }
    }

    /// The flag must never contradict the type.
    pub fn is_consistent(&self) -> bool {
        match self.kernel_type.implies_kernel_fg() {
            Some(implied) => self.kernel_fg == Some(implied),
            None => true,
        }
    }
}
