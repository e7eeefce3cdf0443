//! Subcommand grammar and dispatch.
//!
//! Every command prints one JSON envelope `{"status", "payload",
//! "citations"}` to stdout. `status` is `ok`, `inconclusive` (the input was
//! valid but the criterion at hand is silent), or `error`; errors also put
//! a message on stderr and exit nonzero. Usage errors exit 2.

use std::io::{BufRead, Write};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use fiberlab_core::braid;
use fiberlab_core::character::{character_space_basis, Character};
use fiberlab_core::euler::{
    chi3_lower_bound, euler_char, incoherence_test, l2_profile, novikov_obstruction, wall_product,
    CellCounts, IncoherenceInput, IncoherenceVerdict,
};
use fiberlab_core::fibration::{construct_cone, iterate_filtration};
use fiberlab_core::presentation::FinitePresentation;
use fiberlab_core::schreier::{eigensplit, excessive_hypothesis, qa_module_multiplicities};
use fiberlab_core::thompson::{thompson_kernel_type, MQuery, ThompsonModel};

use crate::json::{
    braid_report_json, certificate_json, character_json, cone_json, eigensplit_json,
    excessive_hypothesis_json, filtration_json, hom_json, invariants_json, obstruction_json,
    parse_cone_spec, parse_filtration, parse_hom, parse_quotient, parse_rational_list,
    parse_word_text, presentation_json, qa_report_json, subset_json, verdict_json,
};
use crate::{presets, CliError, CliResult};

#[derive(Debug, Parser)]
#[command(
    name = "fiberlab",
    version,
    about = "Exact fibering arithmetic for group presentations"
)]
pub struct Cli {
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct PresentationArg {
    /// Presentation text, file path, or preset name (e.g. `p4.pres`).
    #[arg(short, long)]
    pub presentation: String,
}

impl PresentationArg {
    fn load(&self) -> CliResult<Arc<FinitePresentation>> {
        let text = self.presentation.trim();
        if text.starts_with('<') {
            return Ok(Arc::new(FinitePresentation::parse(text)?));
        }
        Ok(Arc::new(presets::load_presentation(text)?))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a presentation and echo its normal form.
    Parse(PresentationArg),
    /// First homology: free rank and torsion coefficients.
    H1(PresentationArg),
    /// Basis of the rational character space.
    Chars(PresentationArg),
    /// Kernel profile of a discrete character on a one-relator presentation.
    Brown {
        #[command(flatten)]
        presentation: PresentationArg,
        /// Character values on the generators, e.g. `1,-1`.
        #[arg(short = 'c', long = "char", allow_hyphen_values = true)]
        character: String,
        /// Relator index when the presentation has more than one.
        #[arg(long)]
        relator: Option<usize>,
    },
    /// Classify the kernel of a character of a generalised Thompson group.
    Thompson {
        /// Abelianization rank of the model.
        #[arg(long)]
        n: usize,
        /// Character values on the generators.
        #[arg(short = 'c', long = "char", allow_hyphen_values = true)]
        character: String,
        /// First exceptional character (defaults to the standard pair).
        #[arg(long, requires = "chi2", allow_hyphen_values = true)]
        chi1: Option<String>,
        /// Second exceptional character.
        #[arg(long, requires = "chi1", allow_hyphen_values = true)]
        chi2: Option<String>,
        /// Finiteness degree to test: a number, or `inf`.
        #[arg(long, default_value = "inf")]
        query: String,
    },
    /// Excessive homology dimension of a homomorphism (JSON file or preset).
    Excessive {
        /// JSON with fields `source`, `target`, `images`.
        #[arg(long)]
        map: String,
    },
    /// Euler characteristic of a product of free/surface/point factors.
    Euler {
        /// Comma-separated factors, e.g. `free:3,free:2` or `surface:2`.
        #[arg(long)]
        factors: String,
    },
    /// Second-degree fibering obstruction for a product of two one-relator groups.
    Sigma2Obstruct {
        /// Generator count of the first factor.
        #[arg(long)]
        a1: u64,
        /// Relator count (0 or 1) of the first factor.
        #[arg(long)]
        r1: u64,
        /// Generator count of the second factor.
        #[arg(long)]
        a2: u64,
        /// Relator count (0 or 1) of the second factor.
        #[arg(long)]
        r2: u64,
    },
    /// Incoherence certificate from cell counts and certified hypotheses.
    Incoherent {
        /// Cell counts of a classifying complex, e.g. `1,4,5,2`.
        #[arg(long)]
        counts: String,
        /// Excessive homology dimension of the fibering extension.
        #[arg(long)]
        excessive: usize,
        /// Certify that the fiber kernel is finitely generated.
        #[arg(long)]
        kernel_fg: bool,
        /// Certify that the quotient has infinite abelianization.
        #[arg(long)]
        ab_infinite: bool,
    },
    /// Presentation of a finite-index kernel by transversal rewriting.
    Rs {
        #[command(flatten)]
        presentation: PresentationArg,
        /// Quotient JSON (`order`, `table`, `images`): file or preset.
        #[arg(long)]
        quotient: String,
    },
    /// Decompose the kernel's rational homology under the quotient action.
    Eigensplit {
        #[command(flatten)]
        presentation: PresentationArg,
        /// Quotient JSON (`order`, `table`, `images`): file or preset.
        #[arg(long)]
        quotient: String,
        /// Split under conjugation by this word instead of the full action.
        #[arg(long)]
        conjugate: Option<String>,
    },
    /// Fibered character cone of an extension with excessive homology.
    FiberCone {
        /// Cone spec JSON: file or preset.
        #[arg(long, default_value = "stallings-cone.json")]
        spec: String,
    },
    /// Iterate the cone construction along a subnormal filtration.
    Filtration {
        /// Filtration JSON: file or preset.
        #[arg(long)]
        spec: String,
        /// Character of the first filtration quotient, e.g. `1,1`.
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        /// Sample tilting parameters, e.g. `1/5,1/7`.
        #[arg(long, allow_hyphen_values = true)]
        mus: String,
        /// Stages already consumed before tilting starts.
        #[arg(long, default_value_t = 0)]
        s: u32,
    },
    /// Pure braid fibering bundle: filtration, homology, certificates.
    Braid {
        /// Number of strands (at least 3).
        #[arg(long)]
        strands: usize,
        /// Emit the full report (presentations, filtrations, homology tables).
        #[arg(long)]
        report: bool,
    },
    /// L2 Betti profile of a poly-(free/surface) filtration.
    L2 {
        /// Comma-separated factors, e.g. `free:3,surface:2`.
        #[arg(long)]
        factors: String,
    },
    /// Run newline-delimited JSON tasks from stdin, one result line each.
    Batch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Inconclusive,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// A finished command: everything needed to render the envelope.
#[derive(Debug)]
pub struct CommandOutput {
    pub status: Status,
    pub payload: Value,
    pub citations: Vec<String>,
}

impl CommandOutput {
    fn ok(payload: Value, citations: Vec<String>) -> CommandOutput {
        CommandOutput {
            status: Status::Ok,
            payload,
            citations,
        }
    }

    fn inconclusive(payload: Value, citations: Vec<String>) -> CommandOutput {
        CommandOutput {
            status: Status::Inconclusive,
            payload,
            citations,
        }
    }

    pub fn envelope(&self) -> Value {
        json!({
            "status": self.status.as_str(),
            "payload": self.payload,
            "citations": self.citations,
        })
    }
}

fn parse_character(p: &Arc<FinitePresentation>, text: &str) -> CliResult<Character> {
    Ok(Character::new(p.clone(), parse_rational_list(text)?)?)
}

fn parse_cell_factor(text: &str) -> CliResult<CellCounts> {
    let t = text.trim();
    if t == "point" {
        return Ok(CellCounts::point());
    }
    let (kind, param) = t.split_once(':').ok_or_else(|| {
        CliError(format!(
            "bad factor '{t}': expected `free:R`, `surface:G`, or `point`"
        ))
    })?;
    let n: u64 = param
        .parse()
        .map_err(|_| CliError(format!("bad factor parameter in '{t}'")))?;
    match kind {
        "free" => Ok(CellCounts::free(n)),
        "surface" => Ok(CellCounts::surface(n)?),
        _ => Err(CliError(format!("unknown factor kind '{kind}'"))),
    }
}

fn parse_cell_factors(text: &str) -> CliResult<Vec<CellCounts>> {
    text.split(',').map(parse_cell_factor).collect()
}

fn parse_query(text: &str) -> CliResult<MQuery> {
    match text.trim() {
        "inf" | "infinity" | "F_inf" => Ok(MQuery::Infinity),
        t => t
            .parse::<u32>()
            .map(MQuery::M)
            .map_err(|_| CliError(format!("bad query '{text}': expected a number or `inf`"))),
    }
}

fn load_json(name: &str) -> CliResult<Value> {
    let text = presets::resolve(name)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn execute(command: &Command) -> CliResult<CommandOutput> {
    match command {
        Command::Parse(arg) => {
            let p = arg.load()?;
            Ok(CommandOutput::ok(presentation_json(&p), Vec::new()))
        }
        Command::H1(arg) => {
            let p = arg.load()?;
            Ok(CommandOutput::ok(
                invariants_json(&p.h1()),
                vec!["Smith normal form of the relator exponent matrix".into()],
            ))
        }
        Command::Chars(arg) => {
            let p = arg.load()?;
            let basis = character_space_basis(&p);
            Ok(CommandOutput::ok(
                json!({
                    "dimension": basis.len(),
                    "basis": basis.iter().map(character_json).collect::<Vec<_>>(),
                }),
                vec!["rational null space of the relator exponent matrix".into()],
            ))
        }
        Command::Brown {
            presentation,
            character,
            relator,
        } => {
            let p = presentation.load()?;
            let c = parse_character(&p, character)?;
            let index = match (relator, p.relators().len()) {
                (Some(i), n) if *i < n => *i,
                (Some(i), n) => {
                    return Err(CliError(format!(
                        "relator index {i} out of range for {n} relators"
                    )))
                }
                (None, 1) => 0,
                (None, n) => {
                    return Err(CliError(format!(
                        "presentation has {n} relators; pass --relator to pick one"
                    )))
                }
            };
            let (verdict, profile) = fiberlab_core::brown::brown_fibers(&p.relators()[index], &c)?;
            let citations = vec![
                "kernel finite generation read off the extremal multiplicities of the \
                 relator's walk profile under the character"
                    .into(),
            ];
            let payload = json!({
                "profile": crate::json::rationals_json(&profile.values),
                "min_multiplicity": profile.min_multiplicity,
                "max_multiplicity": profile.max_multiplicity,
                "verdict": verdict_json(&verdict),
            });
            match verdict.kernel_fg {
                Some(_) => Ok(CommandOutput::ok(payload, citations)),
                None => Ok(CommandOutput::inconclusive(payload, citations)),
            }
        }
        Command::Thompson {
            n,
            character,
            chi1,
            chi2,
            query,
        } => {
            let model = match (chi1, chi2) {
                (Some(c1), Some(c2)) => {
                    ThompsonModel::new(*n, parse_rational_list(c1)?, parse_rational_list(c2)?)?
                }
                _ => ThompsonModel::with_default_characters(*n)?,
            };
            let values = parse_rational_list(character)?;
            let verdict = thompson_kernel_type(&model, values, parse_query(query)?)?;
            let payload = json!({
                "verdict": verdict_json(&verdict),
                "higher_complement_arc": subset_json(&model.higher_complement_arc()),
            });
            Ok(CommandOutput::ok(
                payload,
                vec![
                    "kernel finiteness of a character read off its position relative to the \
                     two exceptional sphere points"
                        .into(),
                ],
            ))
        }
        Command::Excessive { map } => {
            let hom = parse_hom(&load_json(map)?)?;
            let dim = hom.excessive_dim()?;
            Ok(CommandOutput::ok(
                json!({ "map": hom_json(&hom), "excessive_dim": dim }),
                vec![
                    "dimension of the kernel of the induced map on first rational homology".into(),
                ],
            ))
        }
        Command::Euler { factors } => {
            let counts = parse_cell_factors(factors)?;
            let product = counts
                .iter()
                .skip(1)
                .fold(counts[0].clone(), |acc, c| wall_product(&acc, c));
            Ok(CommandOutput::ok(
                json!({
                    "name": product.name(),
                    "counts": product.counts(),
                    "euler_characteristic": euler_char(&product),
                }),
                vec!["cell-count convolution of classifying complexes".into()],
            ))
        }
        Command::Sigma2Obstruct { a1, r1, a2, r2 } => {
            for (label, r) in [("r1", r1), ("r2", r2)] {
                if *r > 1 {
                    return Err(CliError(format!("{label} must be 0 or 1, got {r}")));
                }
            }
            let c1 = CellCounts::new(vec![1, *a1, *r1], format!("G1({a1},{r1})"))?;
            let c2 = CellCounts::new(vec![1, *a2, *r2], format!("G2({a2},{r2})"))?;
            let product = wall_product(&c1, &c2);
            let k = |i: usize| product.count(i) as i64;
            let lhs = k(1) + k(3) - k(0) - k(2);
            let rhs = (*r1 as i64) * (*r2 as i64)
                - (1 - *a1 as i64 + *r1 as i64) * (1 - *a2 as i64 + *r2 as i64);
            let verdict = novikov_obstruction(&product);
            let payload = json!({
                "product_counts": product.counts(),
                "identity": { "lhs": lhs, "rhs": rhs, "holds": lhs == rhs },
                "verdict": obstruction_json(&verdict),
            });
            Ok(CommandOutput::ok(
                payload,
                vec![
                    "closed form for the alternating cell-count defect of a product of two \
                     one-relator groups"
                        .into(),
                    "failure of the Novikov rank inequality rules out FP2 fibers in every \
                     character direction"
                        .into(),
                ],
            ))
        }
        Command::Incoherent {
            counts,
            excessive,
            kernel_fg,
            ab_infinite,
        } => {
            let alpha: Vec<u64> = counts
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|_| CliError(format!("bad cell count '{t}'")))
                })
                .collect::<CliResult<_>>()?;
            let cell_counts = CellCounts::new(alpha, "input".into())?;
            let witness = chi3_lower_bound(&cell_counts);
            let input = IncoherenceInput {
                counts: cell_counts,
                excessive: *excessive,
                kernel_fg_certified: *kernel_fg,
                abelianization_infinite_certified: *ab_infinite,
            };
            let citations = vec![
                "a finitely generated fiber kernel that is not finitely presented sits inside \
                 the group whenever the truncated characteristic is positive"
                    .into(),
            ];
            match incoherence_test(&input) {
                IncoherenceVerdict::Incoherent {
                    chi3_witness,
                    citation,
                } => Ok(CommandOutput::ok(
                    json!({
                        "incoherent": true,
                        "chi3_witness": chi3_witness,
                        "reason": citation,
                    }),
                    citations,
                )),
                IncoherenceVerdict::Inconclusive { reason } => Ok(CommandOutput::inconclusive(
                    json!({ "incoherent": Value::Null, "chi3_witness": witness, "reason": reason }),
                    citations,
                )),
            }
        }
        Command::Rs {
            presentation,
            quotient,
        } => {
            let p = presentation.load()?;
            let q = parse_quotient(p, &load_json(quotient)?)?;
            let system = q.kernel_presentation();
            let kernel = system.kernel();
            Ok(CommandOutput::ok(
                json!({
                    "kernel": presentation_json(kernel),
                    "kernel_rank": kernel.generator_count(),
                    "kernel_h1_dim": system.h1_dim(),
                    "transversal": system
                        .transversal()
                        .iter()
                        .map(|w| system.quotient().source().word_to_text(w))
                        .collect::<Vec<_>>(),
                }),
                vec!["transversal rewriting of a finite-index kernel".into()],
            ))
        }
        Command::Eigensplit {
            presentation,
            quotient,
            conjugate,
        } => {
            let p = presentation.load()?;
            let q = parse_quotient(p.clone(), &load_json(quotient)?)?;
            if let Some(word_text) = conjugate {
                let system = q.kernel_presentation();
                let word = parse_word_text(&p, word_text)?;
                let matrix = system.conjugation_matrix(&word)?;
                let report = eigensplit(&matrix)?;
                return Ok(CommandOutput::ok(
                    json!({ "conjugate": word_text, "split": eigensplit_json(&report) }),
                    vec!["eigenspace split of kernel homology under an involution".into()],
                ));
            }
            let qa = qa_module_multiplicities(&q)?;
            let mut payload = json!({ "qa_multiplicities": qa_report_json(&qa) });
            if q.order() == 2 {
                let hypothesis = excessive_hypothesis(&q)?;
                payload["excessive_hypothesis"] = excessive_hypothesis_json(&hypothesis);
            }
            Ok(CommandOutput::ok(
                payload,
                vec!["character decomposition of kernel homology over the finite quotient".into()],
            ))
        }
        Command::FiberCone { spec } => {
            let cone_spec = parse_cone_spec(&load_json(spec)?)?;
            let (cone, certificates) = construct_cone(
                &cone_spec.extension,
                &cone_spec.phi,
                &cone_spec.c,
                &cone_spec.alpha,
                &cone_spec.mus,
            )?;
            Ok(CommandOutput::ok(
                json!({
                    "cone": cone_json(&cone),
                    "certificates": certificates.iter().map(certificate_json).collect::<Vec<_>>(),
                }),
                vec!["tilting a lifted quotient character against an excessive direction".into()],
            ))
        }
        Command::Filtration { spec, phi, mus, s } => {
            let filt = parse_filtration(&load_json(spec)?)?;
            let phi_values = parse_rational_list(phi)?;
            let mu_values = parse_rational_list(mus)?;
            let (cone, certificates) = iterate_filtration(&filt, &phi_values, *s, &mu_values)?;
            Ok(CommandOutput::ok(
                json!({
                    "filtration": filtration_json(&filt),
                    "cone": cone_json(&cone),
                    "certificates": certificates.iter().map(certificate_json).collect::<Vec<_>>(),
                }),
                vec!["iterated tilting along a subnormal filtration".into()],
            ))
        }
        Command::Braid { strands, report } => {
            let full = braid::braid_report(*strands)?;
            let payload = if *report {
                braid_report_json(&full)
            } else {
                json!({
                    "strands": full.strands(),
                    "chi_ambient": full.chi_ambient(),
                    "chi_quotient": full.split().chi_quotient(),
                    "l2_profile": full.l2(),
                    "fibers": full
                        .fibers()
                        .iter()
                        .map(|f| json!({
                            "degree": f.degree(),
                            "certificate": certificate_json(f.certificate()),
                        }))
                        .collect::<Vec<_>>(),
                    "center_certificate": certificate_json(full.center_certificate()),
                })
            };
            Ok(CommandOutput::ok(
                payload,
                vec![
                    "strand-deletion filtration of the pure braid group".into(),
                    "center split into a rank-one factor and the central quotient".into(),
                ],
            ))
        }
        Command::L2 { factors } => {
            let counts = parse_cell_factors(factors)?;
            let chis: Vec<i64> = counts.iter().map(euler_char).collect();
            let profile = l2_profile(&chis)?;
            Ok(CommandOutput::ok(
                json!({ "factor_chis": chis, "profile": profile }),
                vec![
                    "vanishing below the top degree for poly-(free/surface) groups; the top \
                     entry is the signed product of factor Euler characteristics"
                        .into(),
                ],
            ))
        }
        Command::Batch => Err(CliError("batch tasks cannot nest another batch".into())),
    }
}

/// One result line per input line, `index` echoing the input position.
pub fn run_batch<R: BufRead, W: Write>(input: R, mut output: W) -> CliResult<()> {
    for (index, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let result = batch_line(&line);
        let rendered = match result {
            Ok(out) => json!({
                "index": index,
                "status": out.status.as_str(),
                "payload": out.payload,
                "citations": out.citations,
            }),
            Err(e) => json!({ "index": index, "status": "error", "error": e.to_string() }),
        };
        if let Err(e) = writeln!(output, "{rendered}") {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                return Ok(());
            }
            return Err(e.into());
        }
    }
    Ok(())
}

fn batch_line(line: &str) -> CliResult<CommandOutput> {
    let task: Value = serde_json::from_str(line)?;
    let argv_value = match &task {
        Value::Array(_) => &task,
        Value::Object(map) => map
            .get("argv")
            .ok_or_else(|| CliError("batch task object needs an 'argv' array".into()))?,
        _ => {
            return Err(CliError(
                "batch task must be an argv array or {\"argv\": [...]}".into(),
            ))
        }
    };
    let mut argv = vec!["fiberlab".to_string()];
    for item in argv_value
        .as_array()
        .ok_or_else(|| CliError("'argv' must be an array of strings".into()))?
    {
        argv.push(
            item.as_str()
                .ok_or_else(|| CliError("'argv' entries must be strings".into()))?
                .to_string(),
        );
    }
    let cli = Cli::try_parse_from(&argv).map_err(|e| CliError(e.to_string()))?;
    execute(&cli.command)
}
