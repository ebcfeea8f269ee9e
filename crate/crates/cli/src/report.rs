//! Command reports: one schema-stable structured result per invocation,
//! printable as key/value lines or JSON.
//!
//! Exit codes: 0 success, 2 precondition/parse/budget failure,
//! 3 numerical non-convergence.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct CommandReport {
    pub command: String,
    pub input_digest: String,
    pub payload: Map<String, Value>,
    pub warnings: Vec<String>,
    pub exit_code: i32,
}

impl CommandReport {
    pub fn new(command: &str, digest: String) -> Self {
        Self {
            command: command.to_string(),
            input_digest: digest,
            payload: Map::new(),
            warnings: Vec::new(),
            exit_code: EXIT_OK,
        }
    }

    pub fn put(&mut self, key: &str, value: impl Into<Value>) {
        self.payload.insert(key.to_string(), value.into());
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.push(msg.into());
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            return serde_json::to_string_pretty(self).expect("report is plain data");
        }
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("input: {}\n", self.input_digest));
        for (k, v) in &self.payload {
            out.push_str(&format!("{k}: {}\n", render_value(v)));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(render_value).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(map) => {
            let parts: Vec<String> = map
                .iter()
                .map(|(k, v)| format!("{k}={}", render_value(v)))
                .collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

/// A failure that terminates the command with a specific exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn precondition(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_PRECONDITION,
            message: message.into(),
        }
    }

    pub fn numerical(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_NUMERICAL,
            message: message.into(),
        }
    }
}

pub fn digest_bytes(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    format!("sha256:{:x}", h.finalize())
}

/// 12 significant digits, stable across platforms.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let s = format!("{:.11e}", x);
    // trim trailing zeros in the mantissa for readability
    if let Some(epos) = s.find('e') {
        let (mant, exp) = s.split_at(epos);
        let mant = mant.trim_end_matches('0').trim_end_matches('.');
        let e: i32 = exp[1..].parse().unwrap_or(0);
        if (-4..=10).contains(&e) {
            // re-render small exponents in plain notation
            let plain = format!("{:.*}", (11 - e).max(0) as usize, x);
            let plain = plain.trim_end_matches('0').trim_end_matches('.');
            return plain.to_string();
        }
        return format!("{mant}e{e}");
    }
    s
}

/// `re+im i` / `re-im i`, 12 significant digits each; pure reals drop
/// the imaginary half.
pub fn fmt_c64(z: Complex64) -> String {
    if z.im == 0.0 {
        return fmt_f64(z.re);
    }
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{}{}{} i", fmt_f64(z.re), sign, fmt_f64(z.im.abs()))
}
