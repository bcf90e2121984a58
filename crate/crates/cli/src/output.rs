//! Output rendering: JSON records (format_version "1"), CSV with a fixed
//! column order, and aligned human-readable tables.
//!
//! Exact integers are always emitted as decimal strings, never as JSON
//! numbers; ratios carry 15 significant digits.

use serde_json::{json, Value};

use mertens_ff::{IsogenyClass, Limsup, ThetaKind, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
    Csv,
}

/// 15 significant digits, scientific.
pub fn fmt_ratio(x: f64) -> String {
    format!("{:.14e}", x)
}

/// One machine-readable record; inputs echo the command line.
pub fn record(command: &str, inputs: Value, payload: Value) -> String {
    json!({
        "command": command,
        "format_version": "1",
        "inputs": inputs,
        "payload": payload,
    })
    .to_string()
}

/// The documented CSV column order for classification-shaped rows.
pub const CSV_HEADER: &str = "q,p,m,a,case,theta,holds,condition,limsup,first_violation";

/// A classification-shaped row; unfilled fields render as empty CSV cells
/// and are omitted from JSON payloads.
pub struct VerdictRow {
    pub q: u64,
    pub p: u64,
    pub m: u32,
    pub a: i64,
    pub case_tag: String,
    pub theta: String,
    pub theta_kind: &'static str,
    pub theta_radians: String,
    pub holds: Option<bool>,
    pub condition: Option<Option<String>>,
    pub limsup: Option<String>,
    pub limsup_exact: Option<Option<String>>,
    pub first_violation: Option<Option<u64>>,
}

impl VerdictRow {
    pub fn from_class(cls: &IsogenyClass) -> VerdictRow {
        let theta = match cls.case().theta_label() {
            Some(label) => label.to_string(),
            None => fmt_ratio(cls.theta()),
        };
        VerdictRow {
            q: cls.q().q(),
            p: cls.q().p(),
            m: cls.q().m(),
            a: cls.trace(),
            case_tag: cls.case().tag().to_string(),
            theta,
            theta_kind: match cls.case().theta_kind() {
                ThetaKind::Irrational => "irrational",
                ThetaKind::Rational { .. } => "rational",
            },
            theta_radians: fmt_ratio(cls.theta()),
            holds: None,
            condition: None,
            limsup: None,
            limsup_exact: None,
            first_violation: None,
        }
    }

    pub fn with_verdict(mut self, v: &Verdict) -> VerdictRow {
        self.holds = Some(v.holds());
        self.condition = Some(v.condition().map(|c| c.label().to_string()));
        self.limsup = Some(match v.limsup() {
            Limsup::Finite(value) => fmt_ratio(value),
            Limsup::Infinite => "infinite".to_string(),
        });
        self.limsup_exact = Some(
            mertens_ff::limsup_exact(v.class())
                .map(|e| e.to_string())
                .or_else(|| {
                    mertens_ff::amplitude_squared_exact(v.class())
                        .map(|sq| format!("sqrt({sq})"))
                }),
        );
        self
    }

    pub fn with_first_violation(mut self, first: Option<u64>) -> VerdictRow {
        self.first_violation = Some(first);
        self
    }

    pub fn csv(&self) -> String {
        let opt = |s: &Option<String>| s.clone().unwrap_or_default();
        [
            self.q.to_string(),
            self.p.to_string(),
            self.m.to_string(),
            self.a.to_string(),
            self.case_tag.clone(),
            self.theta.clone(),
            self.holds.map(|h| h.to_string()).unwrap_or_default(),
            opt(&self.condition.clone().flatten()),
            self.limsup.clone().unwrap_or_default(),
            self.first_violation
                .and_then(|f| f.map(|x| x.to_string()))
                .unwrap_or_default(),
        ]
        .join(",")
    }

    pub fn json_payload(&self) -> Value {
        let mut payload = serde_json::Map::new();
        payload.insert("q".into(), Value::String(self.q.to_string()));
        payload.insert("p".into(), Value::String(self.p.to_string()));
        payload.insert("m".into(), Value::String(self.m.to_string()));
        payload.insert("a".into(), Value::String(self.a.to_string()));
        payload.insert("case".into(), Value::String(self.case_tag.clone()));
        payload.insert("theta".into(), Value::String(self.theta.clone()));
        payload.insert("theta_kind".into(), Value::String(self.theta_kind.into()));
        payload.insert(
            "theta_radians".into(),
            Value::String(self.theta_radians.clone()),
        );
        if let Some(holds) = self.holds {
            payload.insert("holds".into(), Value::Bool(holds));
        }
        if let Some(condition) = &self.condition {
            payload.insert(
                "condition".into(),
                condition
                    .clone()
                    .map(Value::String)
                    .unwrap_or(Value::Null),
            );
        }
        if let Some(limsup) = &self.limsup {
            payload.insert("limsup".into(), Value::String(limsup.clone()));
        }
        if let Some(exact) = &self.limsup_exact {
            payload.insert(
                "limsup_exact".into(),
                exact.clone().map(Value::String).unwrap_or(Value::Null),
            );
        }
        if let Some(first) = self.first_violation {
            payload.insert(
                "first_violation".into(),
                first
                    .map(|x| Value::String(x.to_string()))
                    .unwrap_or(Value::Null),
            );
        }
        Value::Object(payload)
    }

    pub fn human(&self) -> String {
        let mut out = format!(
            "q = {} ({}^{}), a = {}\ncase {} with theta = {} ({})",
            self.q, self.p, self.m, self.a, self.case_tag, self.theta, self.theta_kind
        );
        if let Some(holds) = self.holds {
            out.push_str(&format!(
                "\nMertens bound holds: {holds}{}",
                match &self.condition {
                    Some(Some(c)) => format!(" (condition {c})"),
                    _ => String::new(),
                }
            ));
        }
        if let Some(limsup) = &self.limsup {
            out.push_str(&format!("\nlimsup |M(X)|/q^(X/2) = {limsup}"));
            if let Some(Some(exact)) = &self.limsup_exact {
                out.push_str(&format!(" = {exact}"));
            }
        }
        if let Some(first) = self.first_violation {
            match first {
                Some(x) => out.push_str(&format!("\nfirst violation at X = {x}")),
                None => out.push_str("\nno violation in the scanned range"),
            }
        }
        out
    }
}
