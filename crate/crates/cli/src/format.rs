//! JSON documents emitted by the CLI, plus vector (de)serialization.
//!
//! Ambient vectors are arrays of 10 raw coefficients over `(h, e_1..e_9)`.
//! Picard classes are arrays of `n + 1` coefficients over `(h, e_1..e_n)`;
//! for `8b` they use the three coordinates `(h, e_1, e_2)`, or `[x, y]`
//! over `(f_1, f_2)` when the hyperbolic basis is requested.

use serde::Serialize;

use e8grade_core::delpezzo::{HelixReport, StructuralIssue};
use e8grade_core::lattice::{hyperbolic_pair, DIM};
use e8grade_core::weyl::ShapeCountRow;
use e8grade_core::{
    euler_characteristic, is_helical, Grading, GradingLabel, LatticeVector, PicardClass, Quiver,
};

use crate::error::CliError;

pub fn ambient(v: &LatticeVector) -> Vec<i64> {
    v.coeffs().to_vec()
}

pub fn picard(label: GradingLabel, v: &LatticeVector) -> Vec<i64> {
    v.coeffs()[..label.picard_coords()].to_vec()
}

/// Parse a Picard class given as `n + 1` standard coordinates (or all 10).
pub fn parse_picard(label: GradingLabel, coords: &[i64]) -> Result<LatticeVector, CliError> {
    let want = label.picard_coords();
    if coords.len() != want && coords.len() != DIM {
        return Err(CliError::Input(format!(
            "label {label} expects {want} coordinates (or {DIM}), got {}",
            coords.len()
        )));
    }
    let mut c = [0i64; DIM];
    c[..coords.len()].copy_from_slice(coords);
    Ok(PicardClass::new(label, LatticeVector(c))?.beta)
}

/// Parse `[x, y]` over `(f_1, f_2)`; only meaningful for `8b`.
pub fn parse_hyperbolic(label: GradingLabel, coords: &[i64]) -> Result<LatticeVector, CliError> {
    if !label.is_hyperbolic() {
        return Err(CliError::Input(format!(
            "hyperbolic coordinates need label 8b, not {label}"
        )));
    }
    match coords {
        [x, y] => Ok(hyperbolic_pair(*x, *y)),
        _ => Err(CliError::Input(format!(
            "hyperbolic vectors have 2 coordinates, got {}",
            coords.len()
        ))),
    }
}

#[derive(Serialize)]
pub struct RootEntry {
    pub rep: Vec<i64>,
    pub kind: &'static str,
    pub degree: i64,
}

pub fn roots_doc(grading: &Grading, m: Option<i64>) -> Vec<RootEntry> {
    grading
        .components
        .iter()
        .filter(|c| m.is_none_or(|m| c.m == m))
        .flat_map(|c| {
            c.roots.iter().map(|r| RootEntry {
                rep: ambient(&r.alpha),
                kind: r.kind.as_str(),
                degree: r.m,
            })
        })
        .collect()
}

#[derive(Serialize)]
pub struct GuDoc {
    pub name: &'static str,
    pub dim: usize,
}

#[derive(Serialize)]
pub struct ComponentDoc {
    pub m: i64,
    pub dimension: usize,
    pub gamma_count: usize,
    pub beta_weights: Vec<Vec<i64>>,
}

#[derive(Serialize)]
pub struct GradingDoc {
    pub label: String,
    pub gu: GuDoc,
    pub components: Vec<ComponentDoc>,
}

pub fn grading_doc(grading: &Grading) -> GradingDoc {
    let label = grading.label;
    GradingDoc {
        label: label.to_string(),
        gu: GuDoc {
            name: grading.gu.name,
            dim: grading.gu.dim,
        },
        components: grading
            .components
            .iter()
            .map(|c| ComponentDoc {
                m: c.m,
                dimension: c.dimension,
                gamma_count: c.gamma_count,
                beta_weights: c.beta_weights.iter().map(|b| picard(label, b)).collect(),
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct OrbitsDoc {
    pub label: String,
    pub m: i64,
    pub orbits: Vec<Vec<Vec<i64>>>,
}

#[derive(Serialize)]
pub struct CurvesDoc {
    pub label: String,
    pub m: i64,
    pub classes: Vec<Vec<i64>>,
}

pub fn curves_doc(label: GradingLabel, m: i64, classes: &[PicardClass]) -> CurvesDoc {
    CurvesDoc {
        label: label.to_string(),
        m,
        classes: classes.iter().map(|c| picard(label, &c.beta)).collect(),
    }
}

#[derive(Serialize)]
pub struct HelicalDoc {
    pub label: String,
    pub vector: Vec<i64>,
    pub helical: bool,
    pub m: i64,
    pub norm: i64,
    pub chi: i64,
    pub chi_dual: i64,
}

pub fn helical_doc(label: GradingLabel, beta: &LatticeVector) -> Result<HelicalDoc, CliError> {
    let h = is_helical(label, beta);
    Ok(HelicalDoc {
        label: label.to_string(),
        vector: picard(label, beta),
        helical: h.helical,
        m: h.m,
        norm: beta.norm(),
        chi: euler_characteristic(label, beta)?,
        chi_dual: euler_characteristic(label, &-*beta)?,
    })
}

#[derive(Serialize)]
pub struct PairFailureDoc {
    pub i: usize,
    pub j: usize,
    pub diff: Vec<i64>,
    pub m: i64,
    pub norm: i64,
}

#[derive(Serialize)]
pub struct HelixCheckDoc {
    pub label: String,
    pub valid: bool,
    pub structural: Vec<String>,
    pub failing_pairs: Vec<PairFailureDoc>,
}

fn describe(issue: &StructuralIssue) -> String {
    match issue {
        StructuralIssue::WrongLength { expected, found } => {
            format!("period has {found} classes, expected {expected}")
        }
        StructuralIssue::FirstNotTrivial => "first class is not O".into(),
        StructuralIssue::LastNotAnticanonical => "last class is not -K".into(),
        StructuralIssue::OutsidePicardLattice { index } => {
            format!("class {index} is outside the Picard lattice")
        }
    }
}

pub fn helix_check_doc(label: GradingLabel, report: &HelixReport) -> HelixCheckDoc {
    HelixCheckDoc {
        label: label.to_string(),
        valid: report.is_valid(),
        structural: report.structural.iter().map(describe).collect(),
        failing_pairs: report
            .failing_pairs
            .iter()
            .map(|f| PairFailureDoc {
                i: f.i,
                j: f.j,
                diff: picard(label, &f.diff),
                m: f.m,
                norm: f.norm,
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct VertexDoc {
    pub index: i64,
    pub class: Vec<i64>,
    pub m: i64,
}

#[derive(Serialize)]
pub struct ColumnDoc {
    pub m: i64,
    pub vertices: Vec<i64>,
}

#[derive(Serialize)]
pub struct ArrowDoc {
    pub from: i64,
    pub to: i64,
    pub multiplicity: i64,
}

#[derive(Serialize)]
pub struct QuiverDoc {
    pub label: String,
    pub vertices: Vec<VertexDoc>,
    pub columns: Vec<ColumnDoc>,
    pub arrows: Vec<ArrowDoc>,
    pub chi: Vec<Vec<i64>>,
}

pub fn quiver_doc(label: GradingLabel, q: &Quiver) -> QuiverDoc {
    QuiverDoc {
        label: label.to_string(),
        vertices: q
            .vertices
            .iter()
            .map(|v| VertexDoc {
                index: v.index,
                class: picard(label, &v.class),
                m: v.m,
            })
            .collect(),
        columns: q
            .columns
            .iter()
            .map(|c| ColumnDoc {
                m: c.m,
                vertices: c.vertices.clone(),
            })
            .collect(),
        arrows: q
            .arrows
            .iter()
            .map(|a| ArrowDoc {
                from: a.from,
                to: a.to,
                multiplicity: a.multiplicity,
            })
            .collect(),
        chi: q.chi.clone(),
    }
}

/// One digraph; vertices are helix indices, each arrow repeated
/// `multiplicity` times.
pub fn quiver_dot(q: &Quiver) -> String {
    let mut out = String::from("digraph helix {\n");
    for v in &q.vertices {
        out.push_str(&format!("  \"{}\" [label=\"{}\"];\n", v.index, v.index));
    }
    for a in &q.arrows {
        for _ in 0..a.multiplicity {
            out.push_str(&format!("  \"{}\" -> \"{}\";\n", a.from, a.to));
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
pub struct DimsRowDoc {
    pub label: String,
    pub dims: Vec<usize>,
}

pub fn dims_tsv(rows: &[e8grade_core::grading::DimsRow]) -> String {
    let width = rows.iter().map(|r| r.dims.len()).max().unwrap_or(0);
    let mut out = String::from("d");
    for m in 1..=width {
        out.push_str(&format!("\tm={m}"));
    }
    out.push('\n');
    for r in rows {
        out.push_str(r.label.as_str());
        for x in &r.dims {
            out.push_str(&format!("\t{x}"));
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
pub struct OrbitCountDoc {
    pub d: String,
    pub n: usize,
    pub m: i64,
    pub e: Option<usize>,
    pub h_minus_e: Option<usize>,
    pub two_h_minus_e: Option<usize>,
    pub omega_minus_e: Option<usize>,
    pub total: usize,
}

pub fn orbit_count_docs(label: GradingLabel, rows: &[ShapeCountRow]) -> Vec<OrbitCountDoc> {
    rows.iter()
        .map(|r| OrbitCountDoc {
            d: label.to_string(),
            n: label.n().unwrap_or(0),
            m: r.m,
            e: r.e,
            h_minus_e: r.h_minus_e,
            two_h_minus_e: r.two_h_minus_e,
            omega_minus_e: r.omega_minus_e,
            total: r.total,
        })
        .collect()
}

pub fn orbit_counts_tsv(docs: &[OrbitCountDoc]) -> String {
    let cell = |c: Option<usize>| c.map(|x| x.to_string()).unwrap_or_default();
    let mut out = String::from("d\tn\tm\te_i\th-e_J\t2h-e_J\tw-e_i\ttotal\n");
    for r in docs {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.d,
            r.n,
            r.m,
            cell(r.e),
            cell(r.h_minus_e),
            cell(r.two_h_minus_e),
            cell(r.omega_minus_e),
            r.total
        ));
    }
    out
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use GradingLabel::*;

    #[test]
    fn picard_round_trip() {
        let v = LatticeVector::h() - LatticeVector::e(2);
        assert_eq!(picard(D4, &v), [1, 0, -1, 0, 0, 0]);
        assert_eq!(parse_picard(D4, &picard(D4, &v)).unwrap(), v);
        assert_eq!(picard(D9, &(LatticeVector::h() * 3)), [3]);
    }

    #[test]
    fn parse_picard_rejects_bad_input() {
        assert!(parse_picard(D4, &[1, 0, 0]).is_err());
        // e_9 is outside I_X for dP_4
        assert!(parse_picard(D4, &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1]).is_err());
        // (h, e_1, e_2) = (1, 0, 0) is not in H
        assert!(parse_picard(D8b, &[1, 0, 0]).is_err());
        assert!(parse_picard(D8b, &[1, -1, 0]).is_ok());
    }

    #[test]
    fn hyperbolic_parse() {
        use e8grade_core::lattice::{f1, f2};
        assert_eq!(parse_hyperbolic(D8b, &[1, 1]).unwrap(), f1() + f2());
        assert!(parse_hyperbolic(D4, &[1, 1]).is_err());
        assert!(parse_hyperbolic(D8b, &[1]).is_err());
    }

    #[test]
    fn orbit_count_tsv_leaves_blanks() {
        let rows = e8grade_core::appendix_counts(D5).unwrap();
        let tsv = orbit_counts_tsv(&orbit_count_docs(D5, &rows));
        assert!(tsv.lines().any(|l| l == "5\t4\t3\t\t1\t4\t\t5"), "{tsv}");
    }
}
