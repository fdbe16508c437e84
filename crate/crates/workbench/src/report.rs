//! Report structure shared by the plain-text and JSON outputs. Rendering is
//! fully deterministic: the same workspace and command always produce
//! byte-identical output.

use serde::Serialize;

use pearl_core::algebra::ScalarMatrix;
use pearl_core::blowup::AdmissibilityVerdict;
use pearl_core::pearl::{BlowupCorrection, ChainComplex, HomologyResult};

#[derive(Clone, Debug, Serialize)]
pub struct ManifoldSection {
    pub n: u32,
    pub lambda_pi: String,
    pub width_asserted: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdmissibilitySection {
    pub monotone_ok: bool,
    pub same_lambda_ok: bool,
    pub width_asserted: bool,
    pub min_maslov_blowup: u32,
    pub admissible: bool,
    pub diagnostics: Vec<String>,
}

impl From<&AdmissibilityVerdict> for AdmissibilitySection {
    fn from(v: &AdmissibilityVerdict) -> Self {
        AdmissibilitySection {
            monotone_ok: v.monotone_ok,
            same_lambda_ok: v.same_lambda_ok,
            width_asserted: v.width_asserted,
            min_maslov_blowup: v.min_maslov_blowup,
            admissible: v.admissible,
            diagnostics: v.diagnostics.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BlowupSection {
    pub rho_sq: String,
    pub exceptional_maslov: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorrectionRow {
    pub from: String,
    pub to: String,
    pub classes: Vec<String>,
    pub k: usize,
}

impl From<&BlowupCorrection> for CorrectionRow {
    fn from(c: &BlowupCorrection) -> Self {
        CorrectionRow {
            from: c.from.clone(),
            to: c.to.clone(),
            classes: c.classes.clone(),
            k: c.k,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeRow {
    pub degree: i64,
    pub free_rank: usize,
    pub torsion: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PearlSection {
    pub lagrangian: String,
    pub ring_min_maslov: u32,
    pub differential_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub differential: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrections: Option<Vec<CorrectionRow>>,
    pub homology: Vec<DegreeRow>,
    pub reference_betti: Vec<usize>,
    pub verdict: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FloerSection {
    pub pair: usize,
    pub points: Vec<String>,
    pub differential_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub differential: Option<Vec<String>>,
    pub homology_rank: usize,
}

/// Everything a command run produces, ready to print as text or JSON.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub source: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub manifold: ManifoldSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub admissibility: Option<AdmissibilitySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blowup: Option<BlowupSection>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub pearl: Vec<PearlSection>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub floer: Vec<FloerSection>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
    /// Set when the command could not complete its pipeline (an inadmissible
    /// collection blocks homology computation); the CLI exits nonzero.
    pub refused: bool,
}

impl Report {
    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: &str| {
            out.push_str(line);
            out.push('\n');
        };
        push(&mut out, &format!("command: {}", self.command));
        push(&mut out, &format!("source: {}", self.source));
        for note in &self.notes {
            push(&mut out, &format!("note: {}", note));
        }
        push(
            &mut out,
            &format!(
                "manifold: dim {} (n = {}), lambda*pi = {}, width condition {}",
                2 * self.manifold.n,
                self.manifold.n,
                self.manifold.lambda_pi,
                if self.manifold.width_asserted {
                    "asserted"
                } else {
                    "NOT asserted"
                }
            ),
        );
        if let Some(adm) = &self.admissibility {
            push(
                &mut out,
                &format!(
                    "admissibility: {}",
                    if adm.admissible {
                        "ADMISSIBLE"
                    } else {
                        "NOT ADMISSIBLE"
                    }
                ),
            );
            push(
                &mut out,
                &format!("  monotone: {}", yes_no(adm.monotone_ok)),
            );
            push(
                &mut out,
                &format!("  shared constant: {}", yes_no(adm.same_lambda_ok)),
            );
            push(
                &mut out,
                &format!("  width asserted: {}", yes_no(adm.width_asserted)),
            );
            push(
                &mut out,
                &format!(
                    "  minimal Maslov number in the blow-up: {}",
                    adm.min_maslov_blowup
                ),
            );
            for d in &adm.diagnostics {
                push(&mut out, &format!("  ! {}", d));
            }
        }
        if let Some(b) = &self.blowup {
            push(
                &mut out,
                &format!(
                    "blow-up: rho^2 = {}, exceptional line Maslov index {}",
                    b.rho_sq, b.exceptional_maslov
                ),
            );
        }
        for section in &self.pearl {
            push(&mut out, &format!("lagrangian {}:", section.lagrangian));
            push(
                &mut out,
                &format!(
                    "  ring: Z2[t,t^-1] with deg t = -{}",
                    section.ring_min_maslov
                ),
            );
            if let Some(rows) = &section.corrections {
                push(
                    &mut out,
                    "  corrections (marked Maslov-4 classes through the blown-up point):",
                );
                if rows.is_empty() {
                    push(&mut out, "    none");
                }
                for row in rows {
                    push(
                        &mut out,
                        &format!(
                            "    {} -> {}: {} (k = {})",
                            row.from,
                            row.to,
                            row.classes.join(", "),
                            row.k
                        ),
                    );
                }
            }
            if section.differential_zero {
                push(&mut out, "  differential: identically zero");
            } else {
                push(&mut out, "  differential: nonzero");
            }
            if let Some(rows) = &section.differential {
                for row in rows {
                    push(&mut out, &format!("    {}", row));
                }
            }
            push(&mut out, "  quantum homology:");
            for row in &section.homology {
                if row.torsion.is_empty() {
                    push(
                        &mut out,
                        &format!("    degree {}: free rank {}", row.degree, row.free_rank),
                    );
                } else {
                    push(
                        &mut out,
                        &format!(
                            "    degree {}: free rank {}, torsion {}",
                            row.degree,
                            row.free_rank,
                            row.torsion.join(", ")
                        ),
                    );
                }
            }
            push(&mut out, &format!("  verdict: {}", section.verdict));
        }
        for section in &self.floer {
            push(
                &mut out,
                &format!(
                    "floer pair #{} ({}):",
                    section.pair,
                    section.points.join(", ")
                ),
            );
            if section.differential_zero {
                push(&mut out, "  differential: identically zero");
            }
            if let Some(rows) = &section.differential {
                for row in rows {
                    push(&mut out, &format!("    {}", row));
                }
            }
            push(
                &mut out,
                &format!(
                    "  homology rank over the Novikov field: {}",
                    section.homology_rank
                ),
            );
        }
        for d in &self.diagnostics {
            push(&mut out, &format!("! {}", d));
        }
        out
    }
}

pub fn degree_rows(h: &HomologyResult) -> Vec<DegreeRow> {
    h.entries
        .iter()
        .map(|e| DegreeRow {
            degree: e.degree,
            free_rank: e.free_rank,
            torsion: e.torsion.iter().map(|t| t.to_string()).collect(),
        })
        .collect()
}

/// Verbose dump of a pearl differential, one row per generator with a
/// nonzero image.
pub fn differential_rows(c: &ChainComplex) -> Vec<String> {
    let mut rows = Vec::new();
    for (j, (from, _)) in c.generators().iter().enumerate() {
        let mut terms = Vec::new();
        for (i, (to, _)) in c.generators().iter().enumerate() {
            let entry = c.differential().get(i, j);
            if !entry.is_zero() {
                terms.push(format!("({}) {}", entry, to));
            }
        }
        if !terms.is_empty() {
            rows.push(format!("d({}) = {}", from, terms.join(" + ")));
        }
    }
    rows
}

/// Verbose dump of a Floer differential over named generators.
pub fn floer_differential_rows(generators: &[String], d: &ScalarMatrix) -> Vec<String> {
    let mut rows = Vec::new();
    for (j, from) in generators.iter().enumerate() {
        let mut terms = Vec::new();
        for (i, to) in generators.iter().enumerate() {
            let entry = d.get(i, j);
            if !entry.is_zero() {
                terms.push(format!("({}) {}", entry.to_string().replace('t', "T"), to));
            }
        }
        if !terms.is_empty() {
            rows.push(format!("del({}) = {}", from, terms.join(" + ")));
        }
    }
    rows
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
