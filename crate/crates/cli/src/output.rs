use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crossed_kernel::crossed::{Report, Status};

/// Hex sha256 of the report lines, each followed by a newline.
pub fn digest(lines: &[String]) -> String {
    let mut h = Sha256::new();
    for l in lines {
        h.update(l.as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

/// JSON lines of `report` followed by a summary line.
pub fn report_text(command: &str, seed: u64, report: &Report, pretty: bool) -> String {
    let lines = report.to_json_lines();
    let failures = report.failures().count();
    let summary = json!({
        "summary": {
            "command": command,
            "digest": digest(&lines),
            "failures": failures,
            "lines": lines.len(),
            "seed": seed,
            "status": if failures == 0 { "pass" } else { "fail" },
        }
    });
    if pretty {
        let mut out = String::new();
        for l in report.lines() {
            let status = match &l.status {
                Status::Pass => "pass".to_string(),
                Status::Fail { witness, failures } => format!("FAIL ({failures} failures, first: {witness})"),
            };
            out.push_str(&format!("{:<12} dim {:<2} {:>6} checked  {status}\n", l.check, l.dim, l.count));
        }
        out.push_str(&format!(
            "{} ({} lines, seed {seed})\n",
            if failures == 0 { "all checks pass" } else { "checks failed" },
            lines.len()
        ));
        return out;
    }
    let mut out = String::new();
    for l in &lines {
        out.push_str(l);
        out.push('\n');
    }
    out.push_str(&summary.to_string());
    out.push('\n');
    out
}

pub fn value_line(v: &Value) -> String {
    format!("{v}\n")
}
