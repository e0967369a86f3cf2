//! Reproduction table for the worked examples: expected vs computed.

use serde::{Deserialize, Serialize};
use teter_core::teter::Verdict;

use crate::report::{analyze, strongly_text, verdict_text, PipelineError, PipelineOptions};

struct Example {
    generators: &'static [i64],
    expected: &'static str,
}

const EXAMPLES: [Example; 4] = [
    Example {
        generators: &[3, 4, 5],
        expected: "teter (s = 6, g = 3, c = 3); e(B) = 4; B gorenstein",
    },
    Example {
        generators: &[4, 5, 11],
        expected: "teter (s = 11, g = 11, c = 2); tangent cone not CM; \
                   strongly no (tangent_cone_not_cm); e(B) = 5; B gorenstein",
    },
    Example {
        generators: &[5, 6, 7, 9],
        expected: "not_teter (type_bound); mu = 4; type = 2",
    },
    Example {
        generators: &[3, 4],
        expected: "gorenstein",
    },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub semigroup: Vec<i64>,
    pub expected: String,
    pub computed: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub schema: u32,
    pub rows: Vec<Row>,
    pub all_match: bool,
}

/// The computed facts, phrased like the expectations for that example.
fn describe(generators: &[i64], options: &PipelineOptions) -> Result<String, PipelineError> {
    let doc = analyze(generators, options)?;
    let mut parts = vec![verdict_text(&doc.verdict)];
    match &doc.verdict {
        Verdict::Teter { .. } => {
            if !doc.tangent_cone_cm {
                parts.push("tangent cone not CM".into());
                parts.push(format!("strongly {}", strongly_text(&doc.strongly_teter)));
            }
            if let Some(a) = &doc.approximation {
                parts.push(format!("e(B) = {}", a.multiplicity));
                parts.push(
                    if a.is_gorenstein {
                        "B gorenstein"
                    } else {
                        "B not gorenstein"
                    }
                    .into(),
                );
            }
        }
        Verdict::NotTeter { .. } => {
            parts.push(format!("mu = {}", doc.invariants.embedding_dimension));
            parts.push(format!("type = {}", doc.invariants.cm_type));
        }
        Verdict::Gorenstein | Verdict::Unknown => {}
    }
    Ok(parts.join("; "))
}

/// `inject_mismatch` corrupts the first expectation, to exercise the
/// failure path.
pub fn run(options: &PipelineOptions, inject_mismatch: bool) -> Result<Table, PipelineError> {
    let options = PipelineOptions {
        approximate: true,
        ..options.clone()
    };
    let rows = EXAMPLES
        .iter()
        .enumerate()
        .map(|(i, ex)| {
            let computed = describe(ex.generators, &options)?;
            let mut expected = ex.expected.split_whitespace().collect::<Vec<_>>().join(" ");
            if inject_mismatch && i == 0 {
                expected = expected.replace("s = 6", "s = 5");
            }
            Ok(Row {
                semigroup: ex.generators.to_vec(),
                matches: computed == expected,
                expected,
                computed,
            })
        })
        .collect::<Result<Vec<_>, PipelineError>>()?;
    Ok(Table {
        schema: crate::report::SCHEMA_VERSION,
        all_match: rows.iter().all(|r| r.matches),
        rows,
    })
}

pub fn render_text(table: &Table) -> String {
    let mut out = String::new();
    for row in &table.rows {
        let name = row
            .semigroup
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&format!(
            "<{name}>  {}\n  expected  {}\n  computed  {}\n",
            if row.matches { "MATCH" } else { "MISMATCH" },
            row.expected,
            row.computed
        ));
    }
    let matched = table.rows.iter().filter(|r| r.matches).count();
    out.push_str(&format!("{matched}/{} rows match\n", table.rows.len()));
    out
}
