//! Sweep reports and their serializations.

use serde::Serialize;
use std::time::Duration;

/// One mismatch found by a sweep: the prime, the entry-specific parameters,
/// and the two values that were supposed to agree.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub p: u64,
    pub params: serde_json::Value,
    pub claimed: String,
    pub computed: String,
}

/// Outcome of one sweep. `checked + skipped` equals the number of primes in
/// the requested range; `failures` is empty exactly when `status` is PASS.
///
/// The JSON serialization carries only reproducible fields (elapsed time and
/// the asserted/audit classification are text-output extras), so reports for
/// identical inputs are byte-identical regardless of worker count.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub range: String,
    pub checked: u64,
    pub skipped: u64,
    pub failures: Vec<Failure>,
    pub status: String,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub audit: bool,
}

impl VerificationReport {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new(
        theorem: String,
        lo: u64,
        hi: u64,
        checked: u64,
        skipped: u64,
        failures: Vec<Failure>,
        elapsed: Duration,
        audit: bool,
    ) -> Self {
        let status = if failures.is_empty() { "PASS" } else { "FAIL" };
        VerificationReport {
            theorem,
            range: format!("{lo}..{hi}"),
            checked,
            skipped,
            failures,
            status: status.to_string(),
            elapsed,
            audit,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// True when a failing sweep should fail the run: audit-class entries
    /// report discrepancies without being fatal.
    pub fn fatal(&self) -> bool {
        !self.passed() && !self.audit
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// CSV rendering: header plus one failure per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theorem,p,params,claimed,computed\n");
        for f in &self.failures {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                csv_field(&self.theorem),
                f.p,
                csv_field(&f.params.to_string()),
                csv_field(&f.claimed),
                csv_field(&f.computed),
            ));
        }
        out
    }

    pub fn render_text(&self) -> String {
        let kind = if self.audit { "audit" } else { "asserted" };
        let mut out = format!(
            "{} [{}] primes {}: checked {}, skipped {}: {}\n",
            self.theorem, kind, self.range, self.checked, self.skipped, self.status
        );
        out.push_str(&format!("elapsed: {:.3}s\n", self.elapsed.as_secs_f64()));
        for f in &self.failures {
            out.push_str(&format!(
                "  p = {}: params {} claimed {} computed {}\n",
                f.p, f.params, f.claimed, f.computed
            ));
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_schema_fields() {
        let r = VerificationReport::new(
            "T4.3".into(),
            5,
            100,
            10,
            2,
            vec![Failure {
                p: 7,
                params: serde_json::json!({"s": 2}),
                claimed: "+1".into(),
                computed: "-1".into(),
            }],
            Duration::from_millis(5),
            false,
        );
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["theorem"], "T4.3");
        assert_eq!(v["range"], "5..100");
        assert_eq!(v["checked"], 10);
        assert_eq!(v["skipped"], 2);
        assert_eq!(v["status"], "FAIL");
        assert_eq!(v["failures"][0]["p"], 7);
        assert!(v.get("elapsed").is_none());
        assert!(r.fatal());
    }

    #[test]
    fn csv_escaping() {
        let r = VerificationReport::new(
            "X".into(),
            5,
            10,
            1,
            0,
            vec![Failure {
                p: 5,
                params: serde_json::json!({"a": 1, "b": 2}),
                claimed: "1,2".into(),
                computed: "\"q\"".into(),
            }],
            Duration::ZERO,
            true,
        );
        let csv = r.to_csv();
        assert!(csv.starts_with("theorem,p,params,claimed,computed\n"));
        assert!(csv.contains("\"{\"\"a\"\":1,\"\"b\"\":2}\""));
        assert!(!r.fatal()); // audit failures are not fatal
    }
}
