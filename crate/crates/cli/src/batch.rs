//! One semigroup per input line; reports come out in input order.

use rayon::prelude::*;
use serde::Serialize;

use crate::report::{analyze, parse_generators, PipelineError, PipelineOptions};

#[derive(Debug, Serialize)]
struct ErrorRecord<'a> {
    schema: u32,
    line: usize,
    input: &'a str,
    error: &'a str,
    kind: &'static str,
}

/// Result of a batch run: JSON lines plus the worst failure seen.
pub struct BatchOutput {
    pub lines: Vec<String>,
    pub bad_input: bool,
    pub internal_error: bool,
}

pub fn run(text: &str, options: &PipelineOptions) -> BatchOutput {
    let entries: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let results: Vec<(usize, &str, Result<String, PipelineError>)> = entries
        .par_iter()
        .map(|&(n, line)| {
            let result = parse_generators(line)
                .and_then(|gens| analyze(&gens, options))
                .map(|doc| serde_json::to_string(&doc).expect("report serializes"));
            (n, line, result)
        })
        .collect();

    let mut output = BatchOutput {
        lines: Vec::with_capacity(results.len()),
        bad_input: false,
        internal_error: false,
    };
    for (n, line, result) in results {
        match result {
            Ok(json) => output.lines.push(json),
            Err(err) => {
                let kind = match err {
                    PipelineError::BadInput(_) => {
                        output.bad_input = true;
                        "bad_input"
                    }
                    PipelineError::Internal(_) => {
                        output.internal_error = true;
                        "internal"
                    }
                };
                let record = ErrorRecord {
                    schema: crate::report::SCHEMA_VERSION,
                    line: n,
                    input: line,
                    error: err.message(),
                    kind,
                };
                output
                    .lines
                    .push(serde_json::to_string(&record).expect("record serializes"));
            }
        }
    }
    output
}
