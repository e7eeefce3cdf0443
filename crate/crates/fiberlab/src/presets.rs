//! Named inputs the CLI can load without a file on disk.
//!
//! Resolution order for `-p NAME` style arguments: an existing path wins;
//! then `$FIBERLAB_PRESET_DIR/NAME`; then the builtin table below.

use std::env;
use std::fs;
use std::path::Path;

use fiberlab_core::braid::{center_quotient_presentation, pure_braid_presentation};
use fiberlab_core::presentation::FinitePresentation;

use crate::{CliError, CliResult};

/// Two-generator group with one length-eight relator whose kernel profile
/// under (1,-1) is the standard not-finitely-generated example.
const K2: &str = "< x, y | x*y*x^2*y*x*y^2 >";

/// Thompson's group on two generators.
const THOMPSON2: &str =
    "< a, b | a*b^-1*a^-1*b*a*b*a^-2*b^-1*a, a*b^-1*a^-2*b*a^2*b*a^-3*b^-1*a^2 >";

/// Product of two rank-two free groups written as a single presentation,
/// filtered by the projection onto the second factor.
const F2XF2_FILTRATION: &str = r#"{
  "stages": [
    {
      "presentation": "< a, b, x, y | a*x*a^-1*x^-1, a*y*a^-1*y^-1, b*x*b^-1*x^-1, b*y*b^-1*y^-1 >",
      "map": { "images": ["", "", "x", "y"] },
      "kernel_gens": ["a", "b"],
      "type": "F_inf",
      "factor": "free:2"
    },
    {
      "presentation": "< x, y | >",
      "map": { "images": ["", ""] },
      "kernel_gens": ["x", "y"],
      "type": "F_inf",
      "factor": "free:2"
    }
  ],
  "normal": true
}"#;

/// Order-two quotient of a two-generator group, both generators mapping
/// onto the nontrivial element.
const Z2_QUOTIENT: &str = r#"{
  "order": 2,
  "table": [[0, 1], [1, 0]],
  "images": [1, 1]
}"#;

/// Klein four-group quotient of a two-generator group, the generators
/// mapping onto the two standard involutions.
const Z2Z2_QUOTIENT: &str = r#"{
  "order": 4,
  "table": [
    [0, 1, 2, 3],
    [1, 0, 3, 2],
    [2, 3, 0, 1],
    [3, 2, 1, 0]
  ],
  "images": [1, 2]
}"#;

/// Cone input over the same product: tilt the first-factor projection
/// against a character of the second factor.
const STALLINGS_CONE: &str = r#"{
  "extension": {
    "hom": {
      "source": "< a, b, x, y | a*x*a^-1*x^-1, a*y*a^-1*y^-1, b*x*b^-1*x^-1, b*y*b^-1*y^-1 >",
      "target": "< x, y | >",
      "images": ["", "", "x", "y"]
    },
    "kernel_gens": ["a", "b"],
    "declarations": { "kernel": "F_inf", "total": "F_inf", "phi_kernel": "FP0" }
  },
  "phi": ["1", "0"],
  "c": ["1", "0", "0", "0"],
  "alpha": ["0", "0", "1", "0"],
  "mus": ["1/5", "1/7"]
}"#;

/// Builtin preset names, for `--list-presets` style discovery and tests.
pub fn builtin_names() -> Vec<&'static str> {
    vec![
        "k2.pres",
        "free2.pres",
        "free3.pres",
        "surface2.pres",
        "thompson2.pres",
        "p2.pres",
        "p3.pres",
        "p4.pres",
        "p5.pres",
        "p6.pres",
        "q3.pres",
        "q4.pres",
        "q5.pres",
        "q6.pres",
        "f2xf2.json",
        "stallings-cone.json",
        "z2.json",
        "z2z2.json",
    ]
}

fn builtin(name: &str) -> Option<String> {
    let braid = |n: usize| Some(pure_braid_presentation(n).expect("n >= 2").to_text());
    let quotient = |n: usize| Some(center_quotient_presentation(n).expect("n >= 3").to_text());
    match name {
        "k2.pres" => Some(K2.to_string()),
        "free2.pres" => Some(FinitePresentation::free_of_rank(2).to_text()),
        "free3.pres" => Some(FinitePresentation::free_of_rank(3).to_text()),
        "surface2.pres" => Some(FinitePresentation::surface(2).to_text()),
        "thompson2.pres" => Some(THOMPSON2.to_string()),
        "p2.pres" => braid(2),
        "p3.pres" => braid(3),
        "p4.pres" => braid(4),
        "p5.pres" => braid(5),
        "p6.pres" => braid(6),
        "q3.pres" => quotient(3),
        "q4.pres" => quotient(4),
        "q5.pres" => quotient(5),
        "q6.pres" => quotient(6),
        "f2xf2.json" => Some(F2XF2_FILTRATION.to_string()),
        "stallings-cone.json" => Some(STALLINGS_CONE.to_string()),
        "z2.json" => Some(Z2_QUOTIENT.to_string()),
        "z2z2.json" => Some(Z2Z2_QUOTIENT.to_string()),
        _ => None,
    }
}

/// Resolves a name to text content: path, preset directory, builtin.
pub fn resolve(name: &str) -> CliResult<String> {
    let direct = Path::new(name);
    if direct.is_file() {
        return Ok(fs::read_to_string(direct)?);
    }
    if let Ok(dir) = env::var("FIBERLAB_PRESET_DIR") {
        let candidate = Path::new(&dir).join(name);
        if candidate.is_file() {
            return Ok(fs::read_to_string(candidate)?);
        }
    }
    builtin(name).ok_or_else(|| CliError(format!("no such file or preset: '{name}'")))
}

pub fn load_presentation(name: &str) -> CliResult<FinitePresentation> {
    Ok(FinitePresentation::parse(&resolve(name)?)?)
}
