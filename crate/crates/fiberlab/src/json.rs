//! JSON bridge: exact values in, exact values out.
//!
//! Rationals travel as strings ("3/4") so nothing is rounded; words and
//! presentations travel in the same text grammar the parser accepts, so
//! every payload round-trips.

use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use fiberlab_core::braid::BraidReport;
use fiberlab_core::character::{Character, GroupHom};
use fiberlab_core::euler::{CellCounts, ObstructionVerdict};
use fiberlab_core::fibration::{
    CharacterCone, Extension, ExtensionDeclarations, FactorKind, FibrationCertificate,
    FiltrationSpec, FiltrationStage,
};
use fiberlab_core::finiteness::{FinitenessClass, FinitenessVerdict};
use fiberlab_core::presentation::{AbelianInvariants, FinitePresentation};
use fiberlab_core::schreier::{
    EigensplitReport, ExcessiveHypothesisReport, FiniteQuotientMap, QaModuleReport,
};
use fiberlab_core::sphere::{SphereSubset, SphereSubsetKind};
use fiberlab_core::word::Word;

use crate::{CliError, CliResult};

pub fn parse_rational(text: &str) -> CliResult<BigRational> {
    BigRational::from_str(text.trim()).map_err(|e| CliError(format!("bad rational '{text}': {e}")))
}

/// Comma-separated exact rationals, e.g. `1,-1` or `1/5,1/7`.
pub fn parse_rational_list(text: &str) -> CliResult<Vec<BigRational>> {
    text.split(',').map(parse_rational).collect()
}

pub fn rationals_json(values: &[BigRational]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|v| Value::String(v.to_string()))
            .collect(),
    )
}

pub fn rationals_from_json(v: &Value) -> CliResult<Vec<BigRational>> {
    v.as_array()
        .ok_or_else(|| CliError("expected an array of rational strings".into()))?
        .iter()
        .map(|s| {
            s.as_str()
                .ok_or_else(|| CliError("rationals must be strings".into()))
                .and_then(parse_rational)
        })
        .collect()
}

pub fn character_json(c: &Character) -> Value {
    rationals_json(c.values())
}

pub fn invariants_json(h: &AbelianInvariants) -> Value {
    json!({
        "free_rank": h.free_rank,
        "torsion": h.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
    })
}

pub fn presentation_json(p: &FinitePresentation) -> Value {
    json!({
        "generators": p.generators(),
        "relators": p.relators().iter().map(|r| p.word_to_text(r)).collect::<Vec<_>>(),
        "text": p.to_text(),
    })
}

/// A word in the grammar of `p`; the empty string denotes the identity.
pub fn parse_word_text(p: &FinitePresentation, text: &str) -> CliResult<Word> {
    if text.trim().is_empty() {
        return Ok(Word::empty());
    }
    Ok(p.parse_word(text)?)
}

fn string_field<'v>(v: &'v Value, field: &str) -> CliResult<&'v str> {
    v.get(field)
        .and_then(Value::as_str)
        .ok_or_else(|| CliError(format!("missing string field '{field}'")))
}

fn array_field<'v>(v: &'v Value, field: &str) -> CliResult<&'v [Value]> {
    v.get(field)
        .and_then(Value::as_array)
        .map(Vec::as_slice)
        .ok_or_else(|| CliError(format!("missing array field '{field}'")))
}

fn word_list(p: &FinitePresentation, items: &[Value]) -> CliResult<Vec<Word>> {
    items
        .iter()
        .map(|w| {
            w.as_str()
                .ok_or_else(|| CliError("words must be strings".into()))
                .and_then(|t| parse_word_text(p, t))
        })
        .collect()
}

/// `{"source": "<presentation>", "target": "<presentation>", "images": ["<word>", ...]}`
pub fn parse_hom(v: &Value) -> CliResult<GroupHom> {
    let source = Arc::new(FinitePresentation::parse(string_field(v, "source")?)?);
    let target = Arc::new(FinitePresentation::parse(string_field(v, "target")?)?);
    let images = word_list(&target, array_field(v, "images")?)?;
    Ok(GroupHom::new(source, target, images)?)
}

pub fn hom_json(h: &GroupHom) -> Value {
    json!({
        "source": h.source().to_text(),
        "target": h.target().to_text(),
        "images": h.images().iter().map(|w| h.target().word_to_text(w)).collect::<Vec<_>>(),
    })
}

pub fn finiteness_from_str(text: &str) -> CliResult<FinitenessClass> {
    let t = text.trim();
    match t {
        "F_inf" => return Ok(FinitenessClass::FInfinity),
        "FP_inf" => return Ok(FinitenessClass::FpInfinity),
        _ => {}
    }
    let (head, digits) = if let Some(d) = t.strip_prefix("FP") {
        ("FP", d)
    } else if let Some(d) = t.strip_prefix('F') {
        ("F", d)
    } else {
        return Err(CliError(format!("bad finiteness class '{text}'")));
    };
    let k: u32 = digits
        .parse()
        .map_err(|_| CliError(format!("bad finiteness class '{text}'")))?;
    Ok(if head == "FP" {
        FinitenessClass::Fp(k)
    } else {
        FinitenessClass::F(k)
    })
}

/// `"free:3"`, `"surface:2"`, or `{"presentation": "<text>"}`.
pub fn parse_factor(v: &Value) -> CliResult<FactorKind> {
    if let Some(text) = v.as_str() {
        let (kind, param) = text
            .split_once(':')
            .ok_or_else(|| CliError(format!("bad factor '{text}': expected kind:parameter")))?;
        let n: usize = param
            .parse()
            .map_err(|_| CliError(format!("bad factor parameter in '{text}'")))?;
        return match kind {
            "free" => Ok(FactorKind::Free { rank: n }),
            "surface" => Ok(FactorKind::Surface { genus: n }),
            _ => Err(CliError(format!("unknown factor kind '{kind}'"))),
        };
    }
    if let Some(text) = v.get("presentation").and_then(Value::as_str) {
        return Ok(FactorKind::Other(FinitePresentation::parse(text)?));
    }
    Err(CliError(
        "bad factor: expected \"kind:parameter\" or {\"presentation\": ...}".into(),
    ))
}

pub fn factor_json(f: &FactorKind) -> Value {
    match f {
        FactorKind::Free { rank } => Value::String(format!("free:{rank}")),
        FactorKind::Surface { genus } => Value::String(format!("surface:{genus}")),
        FactorKind::Other(p) => json!({ "presentation": p.to_text() }),
    }
}

/// Filtration schema:
/// `{"stages": [{"presentation": "...", "map": {"images": [...]},
///   "kernel_gens": ["..."], "type": "F_inf", "factor": "free:3"}],
///   "normal": true}`.
/// Stage maps land in the next stage's presentation (the trivial group
/// after the last), so only the images are needed.
pub fn parse_filtration(v: &Value) -> CliResult<FiltrationSpec> {
    let stage_values = array_field(v, "stages")?;
    let normal = v.get("normal").and_then(Value::as_bool).unwrap_or(false);
    let presentations: Vec<Arc<FinitePresentation>> = stage_values
        .iter()
        .map(|st| {
            Ok(Arc::new(FinitePresentation::parse(string_field(
                st,
                "presentation",
            )?)?))
        })
        .collect::<CliResult<_>>()?;
    let mut stages = Vec::new();
    for (i, st) in stage_values.iter().enumerate() {
        let presentation = presentations[i].clone();
        let target = presentations
            .get(i + 1)
            .cloned()
            .unwrap_or_else(|| Arc::new(FinitePresentation::trivial()));
        let map_v = st
            .get("map")
            .ok_or_else(|| CliError(format!("stage {i}: missing field 'map'")))?;
        let images = word_list(&target, array_field(map_v, "images")?)?;
        let map = GroupHom::new(presentation.clone(), target, images)?;
        let kernel_gens = word_list(&presentation, array_field(st, "kernel_gens")?)?;
        let declared_type = finiteness_from_str(string_field(st, "type")?)?;
        let factor = match st.get("factor") {
            None | Some(Value::Null) => None,
            Some(f) => Some(parse_factor(f)?),
        };
        stages.push(FiltrationStage {
            presentation,
            map,
            kernel_gens,
            declared_type,
            factor,
        });
    }
    Ok(FiltrationSpec::new(stages, normal)?)
}

pub fn filtration_json(f: &FiltrationSpec) -> Value {
    let stages: Vec<Value> = f
        .stages()
        .iter()
        .map(|st| {
            let mut obj = Map::new();
            obj.insert(
                "presentation".into(),
                Value::String(st.presentation.to_text()),
            );
            obj.insert(
                "map".into(),
                json!({
                    "images": st
                        .map
                        .images()
                        .iter()
                        .map(|w| st.map.target().word_to_text(w))
                        .collect::<Vec<_>>(),
                }),
            );
            obj.insert(
                "kernel_gens".into(),
                Value::Array(
                    st.kernel_gens
                        .iter()
                        .map(|w| Value::String(st.presentation.word_to_text(w)))
                        .collect(),
                ),
            );
            obj.insert("type".into(), Value::String(st.declared_type.to_string()));
            if let Some(factor) = &st.factor {
                obj.insert("factor".into(), factor_json(factor));
            }
            Value::Object(obj)
        })
        .collect();
    json!({ "stages": stages, "normal": f.normal() })
}

/// `{"order": d, "table": [[...]], "images": [...]}` over a source
/// presentation supplied separately.
pub fn parse_quotient(source: Arc<FinitePresentation>, v: &Value) -> CliResult<FiniteQuotientMap> {
    let table: Vec<Vec<usize>> = array_field(v, "table")?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| CliError("table rows must be arrays".into()))?
                .iter()
                .map(|e| {
                    e.as_u64()
                        .map(|n| n as usize)
                        .ok_or_else(|| CliError("table entries must be indices".into()))
                })
                .collect()
        })
        .collect::<CliResult<_>>()?;
    if let Some(order) = v.get("order").and_then(Value::as_u64) {
        if order as usize != table.len() {
            return Err(CliError(format!(
                "declared order {order} does not match table size {}",
                table.len()
            )));
        }
    }
    let images: Vec<usize> = array_field(v, "images")?
        .iter()
        .map(|e| {
            e.as_u64()
                .map(|n| n as usize)
                .ok_or_else(|| CliError("images must be element indices".into()))
        })
        .collect::<CliResult<_>>()?;
    Ok(FiniteQuotientMap::new(source, table, images)?)
}

pub fn quotient_json(q: &FiniteQuotientMap) -> Value {
    json!({ "order": q.order(), "table": q.table(), "images": q.images() })
}

/// Cone specification:
/// `{"extension": {"hom": {...}, "kernel_gens": [...],
///    "declarations": {"kernel": "F_inf", "total": "F_inf", "phi_kernel": "FP_0"}},
///   "phi": [...], "c": [...], "alpha": [...], "mus": [...]}`.
pub struct ConeSpec {
    pub extension: Extension,
    pub phi: Vec<BigRational>,
    pub c: Character,
    pub alpha: Character,
    pub mus: Vec<BigRational>,
}

pub fn parse_cone_spec(v: &Value) -> CliResult<ConeSpec> {
    let ext_v = v
        .get("extension")
        .ok_or_else(|| CliError("missing field 'extension'".into()))?;
    let hom = parse_hom(
        ext_v
            .get("hom")
            .ok_or_else(|| CliError("missing field 'extension.hom'".into()))?,
    )?;
    let kernel_gens = word_list(hom.source(), array_field(ext_v, "kernel_gens")?)?;
    let decl_v = ext_v
        .get("declarations")
        .ok_or_else(|| CliError("missing field 'extension.declarations'".into()))?;
    let declarations = ExtensionDeclarations {
        kernel: finiteness_from_str(string_field(decl_v, "kernel")?)?,
        total: finiteness_from_str(string_field(decl_v, "total")?)?,
        phi_kernel: finiteness_from_str(string_field(decl_v, "phi_kernel")?)?,
    };
    let group = hom.source().clone();
    let extension = Extension::new(hom, kernel_gens, declarations)?;
    let phi = rationals_from_json(
        v.get("phi")
            .ok_or_else(|| CliError("missing field 'phi'".into()))?,
    )?;
    let c = Character::new(
        group.clone(),
        rationals_from_json(
            v.get("c")
                .ok_or_else(|| CliError("missing field 'c'".into()))?,
        )?,
    )?;
    let alpha = Character::new(
        group,
        rationals_from_json(
            v.get("alpha")
                .ok_or_else(|| CliError("missing field 'alpha'".into()))?,
        )?,
    )?;
    let mus = rationals_from_json(
        v.get("mus")
            .ok_or_else(|| CliError("missing field 'mus'".into()))?,
    )?;
    Ok(ConeSpec {
        extension,
        phi,
        c,
        alpha,
        mus,
    })
}

pub fn cone_json(cone: &CharacterCone) -> Value {
    json!({
        "base": character_json(cone.base()),
        "direction": character_json(cone.direction()),
        "threshold_note": cone.threshold_note(),
        "sample_mus": rationals_json(cone.sample_mus()),
    })
}

pub fn certificate_json(cert: &FibrationCertificate) -> Value {
    json!({
        "psi": character_json(cert.psi()),
        "checks": cert
            .checks()
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "citation": c.citation }))
            .collect::<Vec<_>>(),
        "claimed_kernel_type": cert.claimed_kernel_type(),
        "caveats": cert.caveats(),
    })
}

pub fn verdict_json(v: &FinitenessVerdict) -> Value {
    json!({
        "kernel_fg": v.kernel_fg,
        "kernel_type": v.kernel_type.to_string(),
        "justification": v.justification,
    })
}

pub fn subset_json(s: &SphereSubset) -> Value {
    let class_values = |c: &fiberlab_core::character::SphereClass| character_json(&c.primitive());
    match s.kind() {
        SphereSubsetKind::Empty => json!({ "kind": "empty" }),
        SphereSubsetKind::All => json!({ "kind": "all" }),
        SphereSubsetKind::Points(points) => json!({
            "kind": "points",
            "points": points.iter().map(class_values).collect::<Vec<_>>(),
        }),
        SphereSubsetKind::Arc { e1, e2 } => json!({
            "kind": "arc",
            "endpoints": [class_values(e1), class_values(e2)],
        }),
        SphereSubsetKind::JoinUnion { split_at, pairs } => json!({
            "kind": "join_union",
            "split_at": split_at,
            "pairs": pairs
                .iter()
                .map(|(a, b)| json!([subset_json(a), subset_json(b)]))
                .collect::<Vec<_>>(),
        }),
    }
}

pub fn cell_counts_json(c: &CellCounts) -> Value {
    json!({ "name": c.name(), "counts": c.counts() })
}

pub fn obstruction_json(o: &ObstructionVerdict) -> Value {
    json!({
        "obstructed": o.obstructed,
        "lhs": o.lhs,
        "rhs": o.rhs,
        "conclusion": o.conclusion,
    })
}

pub fn eigensplit_json(r: &EigensplitReport) -> Value {
    json!({ "dim_plus": r.dim_plus, "dim_minus": r.dim_minus, "total": r.total })
}

pub fn qa_report_json(r: &QaModuleReport) -> Value {
    json!({
        "acting_generators": r.acting_generators,
        "multiplicities": r
            .multiplicities
            .iter()
            .map(|(signs, m)| json!({ "signs": signs, "multiplicity": m }))
            .collect::<Vec<_>>(),
        "total_dimension": r.total_dimension(),
    })
}

pub fn excessive_hypothesis_json(r: &ExcessiveHypothesisReport) -> Value {
    json!({ "holds": r.holds, "fixed_dimension": r.t })
}

pub fn braid_report_json(r: &BraidReport) -> Value {
    let split = r.split();
    json!({
        "strands": r.strands(),
        "presentation": r.presentation().to_text(),
        "generator_count": r.presentation().generator_count(),
        "h1": invariants_json(r.h1()),
        "filtration": filtration_json(r.filtration()),
        "quotient_filtration": filtration_json(split.quotient()),
        "chi_ambient": r.chi_ambient(),
        "chi_quotient": split.chi_quotient(),
        "l2_profile": r.l2(),
        "center_word": r.presentation().word_to_text(split.center_word()),
        "center_character": character_json(split.center_character()),
        "fibers": r
            .fibers()
            .iter()
            .map(|f| json!({
                "degree": f.degree(),
                "certificate": certificate_json(f.certificate()),
                "quotient_character": character_json(f.quotient_character()),
                "ambient_character": character_json(f.ambient_character()),
            }))
            .collect::<Vec<_>>(),
        "center_certificate": certificate_json(r.center_certificate()),
    })
}
