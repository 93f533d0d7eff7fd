//! Serializable output documents for the CLI.
//!
//! Big integers are serialized as decimal strings, polynomials as
//! coefficient lists (constant term first), and floating-point root
//! approximations only appear in fields whose name says so.

use crate::closed_forms::IntegralityClaim;
use crate::graph::GraphVariant;
use crate::group::GroupSpec;
use crate::matrix::MatrixKind;
use crate::poly::IntPolynomial;
use crate::spectrum::{approx_real_roots, ExactSpectrum};
use crate::verify::{VerificationReport, VerifyError};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: String,
    pub payload: Payload,
}

impl OutputDocument {
    pub fn new(command: String, payload: Payload) -> Self {
        OutputDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    Structure(StructureDoc),
    Spectrum(SpectrumCommandDoc),
    Report(ReportDoc),
    Sweep(SweepDoc),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureDoc {
    pub family: String,
    pub params: Vec<u64>,
    pub variant: String,
    /// Clique sizes of the centralizer graph; equally the multipartite part
    /// sizes of the co-centralizer graph.
    pub computed_parts: Vec<u64>,
    pub claimed_parts: Vec<u64>,
    pub matches: bool,
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumCommandDoc {
    pub family: String,
    pub params: Vec<u64>,
    pub variant: String,
    pub kind: String,
    pub source: String,
    pub spectrum: SpectrumDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumDoc {
    pub dimension: usize,
    pub eigenvalues: Vec<EigenvalueEntry>,
    pub residual_factors: Vec<ResidualEntry>,
    pub integral: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueEntry {
    pub value: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualEntry {
    /// Coefficients constant term first, as decimal strings.
    pub coefficients: Vec<String>,
    pub multiplicity: usize,
    /// Present only with --approx; values are approximations, never used in
    /// any verification.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx_real_roots: Option<Vec<f64>>,
}

impl SpectrumDoc {
    pub fn from_spectrum(s: &ExactSpectrum, include_approx: bool) -> Self {
        SpectrumDoc {
            dimension: s.dimension(),
            eigenvalues: s
                .eigenvalues()
                .iter()
                .map(|(v, m)| EigenvalueEntry {
                    value: v.to_string(),
                    multiplicity: *m,
                })
                .collect(),
            residual_factors: s
                .residual_factors()
                .iter()
                .map(|(p, m)| ResidualEntry {
                    coefficients: p.coeffs().iter().map(|c| c.to_string()).collect(),
                    multiplicity: *m,
                    approx_real_roots: include_approx.then(|| approx_real_roots(p)),
                })
                .collect(),
            integral: s.is_integral(),
        }
    }

    /// Parses the document back into the exact in-memory spectrum.
    pub fn to_spectrum(&self) -> Result<ExactSpectrum, String> {
        let eigs = self
            .eigenvalues
            .iter()
            .map(|e| {
                BigInt::from_str(&e.value)
                    .map(|v| (v, e.multiplicity))
                    .map_err(|err| format!("bad eigenvalue {:?}: {err}", e.value))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let residuals = self
            .residual_factors
            .iter()
            .map(|r| {
                r.coefficients
                    .iter()
                    .map(|c| BigInt::from_str(c).map_err(|err| format!("bad coefficient: {err}")))
                    .collect::<Result<Vec<_>, _>>()
                    .map(|cs| (IntPolynomial::new(cs), r.multiplicity))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ExactSpectrum::from_parts(self.dimension, eigs, residuals))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub family: String,
    pub params: Vec<u64>,
    pub group_order: usize,
    pub graph_order: usize,
    pub structure: StructureEntry,
    pub spectra: Vec<SpectrumEntry>,
    pub integrality: Vec<IntegralityEntry>,
    pub eigenbasis: Vec<EigenbasisEntry>,
    pub complement_transfer_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_divides: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate: Option<String>,
    pub all_match: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureEntry {
    pub computed: Vec<u64>,
    pub claimed: Vec<u64>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub variant: String,
    pub kind: String,
    pub oracle: SpectrumDoc,
    pub closed_form: SpectrumDoc,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntegralityEntry {
    pub variant: String,
    pub kind: String,
    pub claimed: IntegralityClaim,
    pub computed: bool,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenbasisEntry {
    pub variant: String,
    pub verified: bool,
    pub orthogonal: bool,
    pub count_ok: bool,
}

impl ReportDoc {
    pub fn from_report(r: &VerificationReport, include_approx: bool) -> Self {
        ReportDoc {
            family: r.spec.family_name().to_string(),
            params: r.spec.params(),
            group_order: r.group_order,
            graph_order: r.graph_order,
            structure: StructureEntry {
                computed: r.structure.computed.parts().to_vec(),
                claimed: r.structure.claimed.parts().to_vec(),
                matches: r.structure.matches,
            },
            spectra: r
                .spectra
                .iter()
                .map(|s| SpectrumEntry {
                    variant: s.variant.as_str().to_string(),
                    kind: s.kind.as_str().to_string(),
                    oracle: SpectrumDoc::from_spectrum(&s.oracle, include_approx),
                    closed_form: SpectrumDoc::from_spectrum(&s.closed_form, include_approx),
                    matches: s.matches,
                })
                .collect(),
            integrality: r
                .integrality
                .iter()
                .map(|c| IntegralityEntry {
                    variant: c.variant.as_str().to_string(),
                    kind: c.kind.as_str().to_string(),
                    claimed: c.claimed.clone(),
                    computed: c.computed,
                    matches: c.matches,
                })
                .collect(),
            eigenbasis: r
                .eigenbasis
                .iter()
                .map(|e| EigenbasisEntry {
                    variant: e.variant.as_str().to_string(),
                    verified: e.verified,
                    orthogonal: e.orthogonal,
                    count_ok: e.count_ok,
                })
                .collect(),
            complement_transfer_ok: r.complement_transfer_ok,
            quotient_divides: r.quotient_divides,
            degenerate: r.degenerate.clone(),
            all_match: r.all_match(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepDoc {
    pub entries: Vec<SweepEntry>,
    pub notes: Vec<String>,
    /// True when every entry either matches fully or is flagged degenerate.
    pub all_expected: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub family: String,
    pub params: Vec<u64>,
    #[serde(flatten)]
    pub outcome: SweepOutcome,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SweepOutcome {
    Report { report: ReportDoc },
    Error { message: String },
}

impl SweepDoc {
    pub fn from_results(
        results: &[(GroupSpec, Result<VerificationReport, VerifyError>)],
        include_approx: bool,
    ) -> Self {
        let entries: Vec<SweepEntry> = results
            .iter()
            .map(|(spec, res)| SweepEntry {
                family: spec.family_name().to_string(),
                params: spec.params(),
                outcome: match res {
                    Ok(r) => SweepOutcome::Report {
                        report: ReportDoc::from_report(r, include_approx),
                    },
                    Err(e) => SweepOutcome::Error {
                        message: e.to_string(),
                    },
                },
            })
            .collect();
        let all_expected = results
            .iter()
            .all(|(_, res)| res.as_ref().map(|r| r.is_expected()).unwrap_or(false));
        let notes = metacyclic_q_independence_notes(results);
        SweepDoc {
            entries,
            notes,
            all_expected,
        }
    }

    /// One CSV row per (instance, variant, kind), stable column order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "family,params,variant,kind,structure_computed,structure_claimed,structure_match,\
             spectrum_match,integrality_claimed,integrality_computed,integrality_match,\
             degenerate,error\n",
        );
        for entry in &self.entries {
            let params = join_semicolon(&entry.params);
            match &entry.outcome {
                SweepOutcome::Report { report } => {
                    for (s, c) in report.spectra.iter().zip(&report.integrality) {
                        let row = [
                            entry.family.clone(),
                            params.clone(),
                            s.variant.clone(),
                            s.kind.clone(),
                            join_semicolon(&report.structure.computed),
                            join_semicolon(&report.structure.claimed),
                            report.structure.matches.to_string(),
                            s.matches.to_string(),
                            c.claimed.holds().to_string(),
                            c.computed.to_string(),
                            c.matches.to_string(),
                            report.degenerate.is_some().to_string(),
                            String::new(),
                        ];
                        push_csv_row(&mut out, &row);
                    }
                }
                SweepOutcome::Error { message } => {
                    let row = [
                        entry.family.clone(),
                        params.clone(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        message.clone(),
                    ];
                    push_csv_row(&mut out, &row);
                }
            }
        }
        out
    }
}

fn join_semicolon(xs: &[u64]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

fn push_csv_row(out: &mut String, fields: &[String]) {
    let rendered: Vec<String> = fields
        .iter()
        .map(|f| {
            if f.contains(',') || f.contains('"') || f.contains('\n') {
                format!("\"{}\"", f.replace('"', "\"\""))
            } else {
                f.clone()
            }
        })
        .collect();
    out.push_str(&rendered.join(","));
    out.push('\n');
}

/// For metacyclic sweeps: note when reports agree across q for fixed p.
fn metacyclic_q_independence_notes(
    results: &[(GroupSpec, Result<VerificationReport, VerifyError>)],
) -> Vec<String> {
    use std::collections::BTreeMap;
    let mut by_p: BTreeMap<u64, Vec<(u64, &VerificationReport)>> = BTreeMap::new();
    for (spec, res) in results {
        if let (GroupSpec::Metacyclic { p, q }, Ok(report)) = (spec, res) {
            by_p.entry(*p).or_default().push((*q, report));
        }
    }
    let mut notes = Vec::new();
    for (p, reports) in by_p {
        if reports.len() < 2 {
            continue;
        }
        let (_, first) = reports[0];
        let identical = reports.iter().all(|(_, r)| {
            r.structure == first.structure
                && r.spectra == first.spectra
                && r.integrality == first.integrality
        });
        let qs: Vec<String> = reports.iter().map(|(q, _)| q.to_string()).collect();
        if identical {
            notes.push(format!(
                "metacyclic p={p}: structure and all six spectra identical across q in {{{}}}",
                qs.join(",")
            ));
        } else {
            notes.push(format!(
                "metacyclic p={p}: reports DIFFER across q in {{{}}}",
                qs.join(",")
            ));
        }
    }
    notes
}

/// Helper used by the structure command.
pub fn structure_doc(
    spec: GroupSpec,
    variant: GraphVariant,
    computed: &[u64],
    claimed: &[u64],
    degenerate: bool,
) -> StructureDoc {
    StructureDoc {
        family: spec.family_name().to_string(),
        params: spec.params(),
        variant: variant.as_str().to_string(),
        computed_parts: computed.to_vec(),
        claimed_parts: claimed.to_vec(),
        matches: computed == claimed,
        degenerate,
    }
}

/// Helper used by the spectrum command.
pub fn spectrum_doc(
    spec: GroupSpec,
    variant: GraphVariant,
    kind: MatrixKind,
    source: &str,
    spectrum: &ExactSpectrum,
    include_approx: bool,
) -> SpectrumCommandDoc {
    SpectrumCommandDoc {
        family: spec.family_name().to_string(),
        params: spec.params(),
        variant: variant.as_str().to_string(),
        kind: kind.as_str().to_string(),
        source: source.to_string(),
        spectrum: SpectrumDoc::from_spectrum(spectrum, include_approx),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::extract_spectrum;
    use crate::verify::{verify_instance, DEFAULT_BUDGET};

    #[test]
    fn spectrum_doc_round_trips() {
        let p = IntPolynomial::from_i64(&[0, 0, 0, 0, -18, -15, 0, 1]);
        let s = extract_spectrum(&p);
        let doc = SpectrumDoc::from_spectrum(&s, false);
        assert_eq!(doc.to_spectrum().unwrap(), s);
        let json = serde_json::to_string(&doc).unwrap();
        let back: SpectrumDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn document_round_trips_via_json() {
        let r = verify_instance(GroupSpec::GeneralizedQuaternion { n: 4 }, DEFAULT_BUDGET).unwrap();
        let doc = OutputDocument::new(
            "verify --family quaternion --n 4".into(),
            Payload::Report(ReportDoc::from_report(&r, false)),
        );
        let json = doc.to_json();
        let back: OutputDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn approx_fields_only_when_asked() {
        let p = IntPolynomial::from_i64(&[-2, 0, 1]);
        let s = extract_spectrum(&p);
        let plain = SpectrumDoc::from_spectrum(&s, false);
        assert!(plain.residual_factors[0].approx_real_roots.is_none());
        let with = SpectrumDoc::from_spectrum(&s, true);
        let roots = with.residual_factors[0].approx_real_roots.as_ref().unwrap();
        assert!((roots[1] - 2f64.sqrt()).abs() < 1e-10);
        assert!(!serde_json::to_string(&plain).unwrap().contains("approx"));
    }

    #[test]
    fn csv_has_stable_columns_and_one_row_per_kind() {
        let specs = vec![
            GroupSpec::Dihedral { n: 3 },
            GroupSpec::Dihedral { n: 1 }, // invalid, becomes an error row
        ];
        let results = crate::verify::sweep(&specs, DEFAULT_BUDGET);
        let doc = SweepDoc::from_results(&results, false);
        let csv = doc.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert!(lines[0].starts_with("family,params,variant,kind"));
        // 6 spectrum rows for D_6 plus 1 error row
        assert_eq!(lines.len(), 1 + 6 + 1);
        assert!(lines[7].contains("invalid parameters"));
    }

    #[test]
    fn metacyclic_notes_emitted() {
        let specs: Vec<GroupSpec> = (1..=3)
            .map(|q| GroupSpec::Metacyclic { p: 5, q })
            .collect();
        let results = crate::verify::sweep(&specs, DEFAULT_BUDGET);
        let doc = SweepDoc::from_results(&results, false);
        assert_eq!(doc.notes.len(), 1);
        assert!(doc.notes[0].contains("identical across q"));
    }
}
