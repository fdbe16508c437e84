//! Command pipelines: each CLI command maps a validated workspace to a
//! report.

use pearl_core::blowup::check_admissible;
use pearl_core::floer::{assemble_floer_complex, blowup_floer_complex, floer_homology};
use pearl_core::model::{morse_homology, LagrangianData};
use pearl_core::pearl::{assemble_pearl_complex, blowup_pearl_complex, quantum_homology};

use crate::document::Workspace;
use crate::report::{
    degree_rows, differential_rows, floer_differential_rows, AdmissibilitySection, BlowupSection,
    CorrectionRow, FloerSection, ManifoldSection, PearlSection, Report,
};
use crate::WorkbenchError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Qh,
    Blowup,
    Hf,
    HfBlowup,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Qh => "qh",
            Command::Blowup => "blowup",
            Command::Hf => "hf",
            Command::HfBlowup => "hf-blowup",
        }
    }
}

fn reference_betti(l: &LagrangianData) -> Result<Vec<usize>, WorkbenchError> {
    match &l.betti_mod2 {
        Some(b) => Ok(b.clone()),
        None => Ok(morse_homology(l)
            .map_err(|e| WorkbenchError::Pipeline(format!("lagrangian {}: {}", l.name, e)))?
            .free_ranks()),
    }
}

fn base_report(w: &Workspace, command: Command, source: &str) -> Report {
    Report {
        command: command.name().to_string(),
        source: source.to_string(),
        notes: w.notes.clone(),
        manifold: ManifoldSection {
            n: w.manifold.half_dim,
            lambda_pi: w.manifold.lambda_pi.to_string(),
            width_asserted: w.manifold.width_asserted,
        },
        admissibility: None,
        blowup: None,
        pearl: Vec::new(),
        floer: Vec::new(),
        diagnostics: Vec::new(),
        refused: false,
    }
}

/// Runs one command over the workspace and renders the outcome. Inadmissible
/// collections produce a refusing report, not an error; inconsistent counts
/// and malformed sections are errors.
pub fn run_report(
    w: &Workspace,
    command: Command,
    source: &str,
    verbose: bool,
) -> Result<Report, WorkbenchError> {
    let mut report = base_report(w, command, source);
    let lagrangian_refs: Vec<&LagrangianData> = w.lagrangians.iter().collect();
    let params = w.blowup_params();

    match command {
        Command::Check => {
            let verdict = check_admissible(&w.manifold, &lagrangian_refs);
            report.blowup = Some(BlowupSection {
                rho_sq: params.rho_sq.to_string(),
                exceptional_maslov: params.exceptional_line.maslov,
            });
            if !verdict.admissible {
                report.refused = true;
                report
                    .diagnostics
                    .push("collection is not admissible for the blow-up transfer".to_string());
            }
            report.admissibility = Some(AdmissibilitySection::from(&verdict));
        }
        Command::Qh => {
            if w.lagrangians.is_empty() {
                return Err(WorkbenchError::Pipeline(
                    "document has no lagrangians section".to_string(),
                ));
            }
            for l in &w.lagrangians {
                let complex = assemble_pearl_complex(&w.manifold, l).map_err(|e| {
                    WorkbenchError::Pipeline(format!("lagrangian {}: {}", l.name, e))
                })?;
                let betti = reference_betti(l)?;
                let homology = quantum_homology(&complex, &betti).map_err(|e| {
                    WorkbenchError::Pipeline(format!("lagrangian {}: {}", l.name, e))
                })?;
                report.pearl.push(PearlSection {
                    lagrangian: l.name.clone(),
                    ring_min_maslov: complex.ring_min_maslov(),
                    differential_zero: complex.is_zero_differential(),
                    differential: verbose.then(|| differential_rows(&complex)),
                    corrections: None,
                    homology: degree_rows(&homology),
                    reference_betti: betti,
                    verdict: homology.verdict.to_string(),
                });
            }
        }
        Command::Blowup => {
            if w.lagrangians.is_empty() {
                return Err(WorkbenchError::Pipeline(
                    "document has no lagrangians section".to_string(),
                ));
            }
            let verdict = check_admissible(&w.manifold, &lagrangian_refs);
            report.admissibility = Some(AdmissibilitySection::from(&verdict));
            report.blowup = Some(BlowupSection {
                rho_sq: params.rho_sq.to_string(),
                exceptional_maslov: params.exceptional_line.maslov,
            });
            if !verdict.admissible {
                report.refused = true;
                report
                    .diagnostics
                    .push("collection is not admissible: no blow-up homology computed".to_string());
                return Ok(report);
            }
            for l in &w.lagrangians {
                let (complex, corrections) = blowup_pearl_complex(&w.manifold, l, &params)
                    .map_err(|e| {
                        WorkbenchError::Pipeline(format!("lagrangian {}: {}", l.name, e))
                    })?;
                let betti = reference_betti(l)?;
                let homology = quantum_homology(&complex, &betti).map_err(|e| {
                    WorkbenchError::Pipeline(format!("lagrangian {}: {}", l.name, e))
                })?;
                report.pearl.push(PearlSection {
                    lagrangian: l.name.clone(),
                    ring_min_maslov: complex.ring_min_maslov(),
                    differential_zero: complex.is_zero_differential(),
                    differential: verbose.then(|| differential_rows(&complex)),
                    corrections: Some(corrections.iter().map(CorrectionRow::from).collect()),
                    homology: degree_rows(&homology),
                    reference_betti: betti,
                    verdict: homology.verdict.to_string(),
                });
            }
        }
        Command::Hf => {
            if w.floer_pairs.is_empty() {
                return Err(WorkbenchError::Pipeline(
                    "document has no floer_pairs section".to_string(),
                ));
            }
            for (i, pair) in w.floer_pairs.iter().enumerate() {
                let complex = assemble_floer_complex(pair, w.manifold.half_dim)
                    .map_err(|e| WorkbenchError::Pipeline(format!("floer pair #{}: {}", i, e)))?;
                report.floer.push(FloerSection {
                    pair: i,
                    points: complex.generators().to_vec(),
                    differential_zero: complex.differential().is_zero(),
                    differential: verbose.then(|| {
                        floer_differential_rows(complex.generators(), complex.differential())
                    }),
                    homology_rank: floer_homology(&complex),
                });
            }
        }
        Command::HfBlowup => {
            if w.floer_pairs.is_empty() {
                return Err(WorkbenchError::Pipeline(
                    "document has no floer_pairs section".to_string(),
                ));
            }
            let verdict = check_admissible(&w.manifold, &lagrangian_refs);
            report.admissibility = Some(AdmissibilitySection::from(&verdict));
            report.blowup = Some(BlowupSection {
                rho_sq: params.rho_sq.to_string(),
                exceptional_maslov: params.exceptional_line.maslov,
            });
            if !verdict.admissible {
                report.refused = true;
                report
                    .diagnostics
                    .push("collection is not admissible: no blow-up homology computed".to_string());
                return Ok(report);
            }
            for (i, pair) in w.floer_pairs.iter().enumerate() {
                let complex = blowup_floer_complex(pair, &params, &verdict)
                    .map_err(|e| WorkbenchError::Pipeline(format!("floer pair #{}: {}", i, e)))?;
                report.floer.push(FloerSection {
                    pair: i,
                    points: complex.generators().to_vec(),
                    differential_zero: complex.differential().is_zero(),
                    differential: verbose.then(|| {
                        floer_differential_rows(complex.generators(), complex.differential())
                    }),
                    homology_rank: floer_homology(&complex),
                });
            }
        }
    }
    Ok(report)
}
