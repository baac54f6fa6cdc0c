//! Suite report serialization.

use sectormeans::verify::SuiteReport;

pub const CSV_HEADER: [&str; 6] = ["check_id", "paper_anchor", "trials", "violations", "worst_margin", "worst_seed"];

pub fn to_json(report: &SuiteReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    text
}

/// One row per check.
pub fn to_csv(report: &SuiteReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for c in &report.checks {
        w.write_record([
            c.id.clone(),
            c.paper_anchor.clone(),
            c.trials.to_string(),
            c.violations.to_string(),
            c.worst_margin.map(|m| m.to_string()).unwrap_or_default(),
            c.worst_seed.map(|s| s.to_string()).unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}
