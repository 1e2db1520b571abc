//! Output rendering for `solve` reports.

use serde::Serialize;
use transversal::{Certificate, SolveReport};

#[derive(Serialize)]
struct JsonReport<'a> {
    kind: &'a str,
    connected: bool,
    size: usize,
    /// 1-indexed, ascending.
    solution: Vec<usize>,
    certificate: &'a str,
    padding_used: usize,
    elapsed_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    bipartition: Option<[Vec<usize>; 2]>,
}

fn one_indexed(iter: impl Iterator<Item = usize>) -> Vec<usize> {
    iter.map(|v| v + 1).collect()
}

pub fn to_json(report: &SolveReport) -> String {
    let bipartition = match &report.certificate {
        Certificate::Bipartition { x, y } => Some([one_indexed(x.iter()), one_indexed(y.iter())]),
        _ => None,
    };
    let json = JsonReport {
        kind: report.kind.name(),
        connected: report.connected_required,
        size: report.size,
        solution: one_indexed(report.solution.iter()),
        certificate: report.certificate.kind_name(),
        padding_used: report.padding_used,
        elapsed_ms: report.elapsed.as_millis(),
        bipartition,
    };
    serde_json::to_string(&json).expect("report serialization cannot fail")
}

pub fn to_human(report: &SolveReport) -> String {
    let mut out = String::new();
    let connected = if report.connected_required {
        "connected "
    } else {
        ""
    };
    out.push_str(&format!(
        "minimum {}{}: size {}\n",
        connected,
        report.kind.name(),
        report.size
    ));
    let listed: Vec<String> = report
        .solution
        .iter()
        .map(|v| (v + 1).to_string())
        .collect();
    out.push_str(&format!("solution: {{{}}}\n", listed.join(", ")));
    out.push_str(&format!(
        "certificate: {}\n",
        report.certificate.kind_name()
    ));
    if let Certificate::Bipartition { x, y } = &report.certificate {
        let side = |s: &transversal::VertexSet| {
            s.iter()
                .map(|v| (v + 1).to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        out.push_str(&format!("  side 1: {{{}}}\n", side(x)));
        out.push_str(&format!("  side 2: {{{}}}\n", side(y)));
    }
    if report.connected_required {
        out.push_str(&format!("padding used: {}\n", report.padding_used));
    }
    out.push_str(&format!("elapsed: {:?}\n", report.elapsed));
    out
}
