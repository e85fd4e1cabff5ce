use std::fmt::Write;

use serde_json::{json, Value};
use skewalg::quasidet::{cr_quasideterminant, rc_inverse, rc_quasideterminant};
use skewalg::{cr_rank, example_matrix, rc_rank, Quaternion, Rational, RankReport, SkewMatrix, SolutionSet};

fn rational_json(r: &Rational) -> Value {
    json!({"num": r.numer().to_string(), "den": r.denom().to_string()})
}

pub fn quaternion_json(q: &Quaternion) -> Value {
    json!({
        "text": q.to_string(),
        "w": rational_json(&q.w),
        "x": rational_json(&q.x),
        "y": rational_json(&q.y),
        "z": rational_json(&q.z),
    })
}

pub fn matrix_json(m: &SkewMatrix<Quaternion>) -> Value {
    let entries: Vec<Vec<Value>> = m.row_iter().map(|row| row.iter().map(quaternion_json).collect()).collect();
    json!({
        "text": m.to_string(),
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries,
    })
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

fn index_set(indices: &[usize]) -> String {
    let parts: Vec<String> = indices.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn rank_json(report: &RankReport) -> Value {
    json!({
        "rank": report.rank,
        "rows": one_based(report.rows()),
        "cols": one_based(report.cols()),
    })
}

pub fn rank_text(report: &RankReport) -> String {
    if report.rank == 0 {
        return "0\n".to_owned();
    }
    format!(
        "{} rows={} cols={}\n",
        report.rank,
        index_set(report.rows()),
        index_set(report.cols())
    )
}

pub fn solution_text(sol: &SolutionSet<Quaternion>) -> String {
    let mut out = String::new();
    writeln!(out, "consistent: {}", sol.consistent).unwrap();
    writeln!(out, "rank: {}", sol.rank.rank).unwrap();
    if let Some(p) = &sol.particular {
        writeln!(out, "particular: {p}").unwrap();
    }
    writeln!(out, "free: {}", index_set(&sol.free_variables)).unwrap();
    for h in &sol.homogeneous_basis {
        writeln!(out, "homogeneous: {h}").unwrap();
    }
    out
}

pub fn solution_json(sol: &SolutionSet<Quaternion>) -> Value {
    json!({
        "consistent": sol.consistent,
        "rank": rank_json(&sol.rank),
        "particular": sol.particular.as_ref().map(matrix_json),
        "homogeneous_basis": sol.homogeneous_basis.iter().map(matrix_json).collect::<Vec<_>>(),
        "free_variables": one_based(&sol.free_variables),
    })
}

struct WorkedExample {
    matrix: SkewMatrix<Quaternion>,
    rc_qdet: Quaternion,
    cr_qdet: Quaternion,
    rc_singular: bool,
    rc: RankReport,
    cr: RankReport,
}

fn worked_example() -> WorkedExample {
    let matrix = example_matrix();
    let rc_qdet = rc_quasideterminant(&matrix, 1, 1).unwrap().into_value().unwrap();
    let cr_qdet = cr_quasideterminant(&matrix, 0, 0).unwrap().into_value().unwrap();
    WorkedExample {
        rc_singular: rc_inverse(&matrix).is_err(),
        rc: rc_rank(&matrix),
        cr: cr_rank(&matrix),
        matrix,
        rc_qdet,
        cr_qdet,
    }
}

pub fn worked_example_text() -> String {
    let ex = worked_example();
    let mut out = String::new();
    writeln!(out, "matrix (b = 1+k, c = j, d = k): {}", ex.matrix).unwrap();
    writeln!(out, "RC quasideterminant at (2,2): {}", ex.rc_qdet).unwrap();
    writeln!(out, "CR quasideterminant at (1,1): {}", ex.cr_qdet).unwrap();
    writeln!(out, "RC inverse: {}", if ex.rc_singular { "singular" } else { "exists" }).unwrap();
    write!(out, "RC rank: {}", rank_text(&ex.rc)).unwrap();
    write!(out, "CR rank: {}", rank_text(&ex.cr)).unwrap();
    out
}

pub fn worked_example_json() -> Value {
    let ex = worked_example();
    json!({
        "matrix": matrix_json(&ex.matrix),
        "rc_quasideterminant_2_2": quaternion_json(&ex.rc_qdet),
        "cr_quasideterminant_1_1": quaternion_json(&ex.cr_qdet),
        "rc_singular": ex.rc_singular,
        "rc_rank": rank_json(&ex.rc),
        "cr_rank": rank_json(&ex.cr),
    })
}
