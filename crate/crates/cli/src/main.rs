use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

mod commands;
mod input;

use commands::Cli;

/// Failure reported as `{code, message, detail}`.
#[derive(Debug)]
pub struct Failure {
    pub code: &'static str,
    pub message: String,
    pub detail: serde_json::Value,
}

impl Failure {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        Failure { code, message: message.into(), detail: serde_json::Value::Null }
    }

    pub fn with_detail(mut self, detail: serde_json::Value) -> Self {
        self.detail = detail;
        self
    }
}

impl From<bsarr::Error> for Failure {
    fn from(e: bsarr::Error) -> Self {
        use bsarr::Error::*;
        match &e {
            Structural(m) => Failure::new("structural", m.clone()),
            Domain(m) => Failure::new("domain", m.clone()),
            CapExceeded { cap, degree } => {
                Failure::new("cap_exceeded", e.to_string()).with_detail(json!({ "cap": cap, "degree": degree, "env": "BSARR_DEGREE_CAP" }))
            }
            Parse { position, message } => Failure::new("parse", message.clone()).with_detail(json!({ "position": position })),
        }
    }
}

fn emit(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(raw) = std::env::var("BSARR_DEGREE_CAP") {
        match raw.trim().parse::<u32>() {
            Ok(cap) if cap > 0 => bsarr::groebner::set_degree_cap(cap),
            _ => {
                emit(&json!({ "code": "environment", "message": format!("BSARR_DEGREE_CAP must be a positive integer, got {raw:?}"), "detail": null }));
                return ExitCode::from(2);
            }
        }
    }
    std::panic::set_hook(Box::new(|_| {}));
    match catch_unwind(AssertUnwindSafe(|| commands::run(cli))) {
        Ok(Ok(out)) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Ok(Err(f)) => {
            emit(&json!({ "code": f.code, "message": f.message, "detail": f.detail }));
            ExitCode::from(2)
        }
        Err(p) => {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default();
            emit(&json!({ "code": "internal", "message": msg, "detail": null }));
            ExitCode::from(1)
        }
    }
}
