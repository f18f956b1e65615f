//! Structured suite outcomes.

use serde::{Deserialize, Serialize};

use crate::sample::SampleConfig;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    /// What the claim reproduces, in words.
    pub anchor: String,
    pub verdict: Verdict,
    /// Counts on success, the first counterexample on failure.
    pub witness: String,
}

impl Claim {
    pub fn new(
        id: impl Into<String>,
        anchor: impl Into<String>,
        ok: bool,
        witness: impl Into<String>,
    ) -> Self {
        Claim {
            id: id.into(),
            anchor: anchor.into(),
            verdict: Verdict::from_bool(ok),
            witness: witness.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Sampled,
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub suite: String,
    pub instance: String,
    pub field: String,
    pub cfg: SampleConfig,
    pub mode: Mode,
    /// Failed hypotheses; when nonempty no claims were evaluated.
    pub preflight: Vec<String>,
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn new(suite: &str, instance: &str, field: &str, cfg: SampleConfig, mode: Mode) -> Self {
        Report {
            version: REPORT_VERSION,
            suite: suite.into(),
            instance: instance.into(),
            field: field.into(),
            cfg,
            mode,
            preflight: Vec::new(),
            claims: Vec::new(),
        }
    }

    /// Sorts claims by id; call once all claims are in.
    pub fn finish(mut self) -> Self {
        self.claims.sort_by(|a, b| a.id.cmp(&b.id));
        self
    }

    pub fn preflight_failed(&self) -> bool {
        !self.preflight.is_empty()
    }

    pub fn passed(&self) -> bool {
        !self.preflight_failed() && self.claims.iter().all(Claim::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.passed())
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    /// `(id, verdict)` pairs in id order.
    pub fn verdicts(&self) -> Vec<(String, Verdict)> {
        self.claims
            .iter()
            .map(|c| (c.id.clone(), c.verdict))
            .collect()
    }

    /// Canonical JSON: keys sorted, two-space indent, trailing newline.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        let r: Report = serde_json::from_str(s)?;
        if r.version != REPORT_VERSION {
            return Err(serde::de::Error::custom(format!(
                "unsupported report version {}",
                r.version
            )));
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_byte_stable() {
        let mut r = Report::new("demo", "a2", "3", SampleConfig::default(), Mode::Sampled);
        r.claims.push(Claim::new("b", "second", true, "1 checked"));
        r.claims
            .push(Claim::new("a", "first", false, "counterexample"));
        let r = r.finish();
        assert_eq!(r.claims[0].id, "a");
        let s = r.to_json();
        let back = Report::from_json(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), s);
        assert!(s.contains("\"verdict\": \"fail\""));
        // keys come out sorted
        assert!(s.find("\"claims\"").unwrap() < s.find("\"version\"").unwrap());
        assert!(!r.passed());
    }
}
