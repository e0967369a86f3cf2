//! The analysis pipeline and its report document.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use teter_core::approximation::{ApproximationError, VerificationError};
use teter_core::teter::{
    teter_check_with, NotTeterReason, StrongFailure, StronglyTeter, TeterError, TeterOptions,
    Verdict,
};
use teter_core::{
    verify_approximation, ApproximationOptions, ApproximationSummary, NumericalSemigroup,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsBlock {
    pub multiplicity: i64,
    pub embedding_dimension: usize,
    pub cm_type: usize,
    pub frobenius: i64,
    pub genus: usize,
    pub gaps: Vec<i64>,
    pub pseudo_frobenius: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub teter_micros: u64,
    pub approximation_micros: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub input: Vec<i64>,
    pub generators: Vec<i64>,
    pub invariants: InvariantsBlock,
    pub verdict: Verdict,
    pub type_condition_holds: bool,
    pub tangent_cone_cm: bool,
    pub strongly_teter: StronglyTeter,
    pub witness_shifts: Vec<i64>,
    pub approximation: Option<ApproximationSummary>,
    pub timings: Option<Timings>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineOptions {
    pub approximate: bool,
    pub teter: TeterOptions,
    pub approximation: ApproximationOptions,
    pub timings: bool,
}

/// Failures, split by the exit code they map to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PipelineError {
    BadInput(String),
    Internal(String),
}

impl PipelineError {
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::BadInput(_) => 2,
            PipelineError::Internal(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            PipelineError::BadInput(m) | PipelineError::Internal(m) => m,
        }
    }
}

/// Parses `"3,4,5"` (spaces allowed around entries).
pub fn parse_generators(text: &str) -> Result<Vec<i64>, PipelineError> {
    let parsed: Result<Vec<i64>, _> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse::<i64>)
        .collect();
    match parsed {
        Ok(v) if !v.is_empty() => Ok(v),
        Ok(_) => Err(PipelineError::BadInput("no generators given".into())),
        Err(e) => Err(PipelineError::BadInput(format!(
            "cannot parse {text:?}: {e}"
        ))),
    }
}

fn classify_verification(err: VerificationError) -> PipelineError {
    use ApproximationError as A;
    match err {
        VerificationError::NoPrimes
        | VerificationError::Approximation(A::NotPrime(_))
        | VerificationError::Approximation(A::PrecisionTooSmall { .. })
        | VerificationError::Approximation(A::NonStabilized { .. }) => {
            PipelineError::BadInput(err.to_string())
        }
        other => PipelineError::Internal(other.to_string()),
    }
}

pub fn analyze(input: &[i64], options: &PipelineOptions) -> Result<ReportDocument, PipelineError> {
    let h = NumericalSemigroup::from_generators(input)
        .map_err(|e| PipelineError::BadInput(e.to_string()))?;

    let start = Instant::now();
    let report = teter_check_with(&h, &options.teter).map_err(|e| match e {
        TeterError::GorensteinInput => PipelineError::BadInput(e.to_string()),
        other => PipelineError::Internal(other.to_string()),
    })?;
    let teter_micros = start.elapsed().as_micros() as u64;

    let start = Instant::now();
    let approximation = match (&report.verdict, options.approximate) {
        (Verdict::Teter { witness }, true) => Some(
            verify_approximation(&h, witness.shift, &options.approximation)
                .map_err(classify_verification)?,
        ),
        _ => None,
    };
    let approximation_micros = start.elapsed().as_micros() as u64;

    Ok(ReportDocument {
        schema: SCHEMA_VERSION,
        input: input.to_vec(),
        generators: h.generators().to_vec(),
        invariants: InvariantsBlock {
            multiplicity: report.invariants.multiplicity,
            embedding_dimension: report.invariants.embedding_dimension,
            cm_type: report.invariants.cm_type,
            frobenius: report.invariants.frobenius,
            genus: report.invariants.genus,
            gaps: h.gaps().to_vec(),
            pseudo_frobenius: h.pseudo_frobenius().unwrap_or_default(),
        },
        verdict: report.verdict,
        type_condition_holds: report.type_condition_holds,
        tangent_cone_cm: report.tangent_cone_cm,
        strongly_teter: report.strongly_teter,
        witness_shifts: report.witness_shifts,
        approximation,
        timings: options.timings.then_some(Timings {
            teter_micros,
            approximation_micros,
        }),
    })
}

fn list(values: &[impl ToString]) -> String {
    if values.is_empty() {
        "(none)".into()
    } else {
        values
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn generator_text(g: Option<i64>) -> String {
    g.map_or_else(|| "none".into(), |g| g.to_string())
}

pub fn verdict_text(verdict: &Verdict) -> String {
    match verdict {
        Verdict::Gorenstein => "gorenstein".into(),
        Verdict::Teter { witness } => format!(
            "teter (s = {}, g = {}, c = {})",
            witness.shift,
            generator_text(witness.quotient.generator),
            witness.quotient.length
        ),
        Verdict::NotTeter {
            reason: NotTeterReason::TypeBound,
        } => "not_teter (type_bound)".into(),
        Verdict::Unknown => "unknown".into(),
    }
}

pub fn strongly_text(s: &StronglyTeter) -> String {
    match s {
        StronglyTeter::Yes { shift, socle_dim } => {
            format!("yes (certified by shift {shift}, socle dim {socle_dim})")
        }
        StronglyTeter::No {
            reason: StrongFailure::TangentConeNotCm,
        } => "no (tangent_cone_not_cm)".into(),
        StronglyTeter::No {
            reason: StrongFailure::SocleDim { dim },
        } => format!("no (socle_dim {dim})"),
        StronglyTeter::NotApplicable => "not_applicable".into(),
    }
}

/// Human-readable rendering carrying the same facts as the JSON form.
pub fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let inv = &doc.invariants;
    let _ = writeln!(
        out,
        "semigroup <{}>  (schema {}, input {})",
        list(&doc.generators),
        doc.schema,
        list(&doc.input)
    );
    let _ = writeln!(out, "  multiplicity e         {}", inv.multiplicity);
    let _ = writeln!(out, "  embedding dimension    {}", inv.embedding_dimension);
    let _ = writeln!(out, "  type                   {}", inv.cm_type);
    let _ = writeln!(out, "  Frobenius number       {}", inv.frobenius);
    let _ = writeln!(out, "  genus                  {}", inv.genus);
    let _ = writeln!(out, "  gaps                   {}", list(&inv.gaps));
    let _ = writeln!(
        out,
        "  pseudo-Frobenius       {}",
        list(&inv.pseudo_frobenius)
    );
    let _ = writeln!(
        out,
        "verdict                  {}",
        verdict_text(&doc.verdict)
    );
    if let Verdict::Teter { witness } = &doc.verdict {
        let _ = writeln!(
            out,
            "  J = t^{} ω generators   {}",
            witness.shift,
            list(&witness.ideal_generators)
        );
    }
    let _ = writeln!(
        out,
        "  witness shifts         {}",
        list(&doc.witness_shifts)
    );
    let _ = writeln!(out, "  type condition holds   {}", doc.type_condition_holds);
    let _ = writeln!(out, "  tangent cone CM        {}", doc.tangent_cone_cm);
    let _ = writeln!(
        out,
        "strongly Teter           {}",
        strongly_text(&doc.strongly_teter)
    );
    match &doc.approximation {
        None => {
            let _ = writeln!(out, "approximation            none");
        }
        Some(a) => {
            let _ = writeln!(out, "approximation B = A ×_(A/J) k[[u]]  ({})", a.status);
            let _ = writeln!(out, "  witness shift          {}", a.shift);
            let _ = writeln!(
                out,
                "  quotient (g, c)        ({}, {})",
                generator_text(a.quotient.generator),
                a.quotient.length
            );
            let _ = writeln!(out, "  e(B)                   {}", a.multiplicity);
            let _ = writeln!(out, "  e(A)                   {}", a.base_multiplicity);
            let _ = writeln!(
                out,
                "  e(B) = e(A) + 1        {}",
                a.multiplicity_increase_is_one
            );
            let _ = writeln!(out, "  l(B/n)                 {}", a.residue_length);
            let _ = writeln!(out, "  l(B/n^(k+1)), k >= 0   {}", list(&a.hilbert_samuel));
            let _ = writeln!(out, "  l(B/yB)                {}", a.reduction_length);
            let _ = writeln!(out, "  socle dim of B/yB      {}", a.socle_dim);
            let _ = writeln!(out, "  B Gorenstein           {}", a.is_gorenstein);
            let _ = writeln!(
                out,
                "  Hilbert fn of G(B/yB)  {}",
                list(&a.graded_reduction_hilbert)
            );
            let _ = writeln!(out, "  socle dim of G(B/yB)   {}", a.graded_socle_dim);
            let _ = writeln!(out, "  G(B) CM                {}", a.tangent_cone_cm);
            let _ = writeln!(
                out,
                "  G(B) Gorenstein        {}",
                a.tangent_cone_gorenstein
            );
            let _ = writeln!(out, "  precision N            {}", a.precision);
            let _ = writeln!(
                out,
                "  checked precisions     {}",
                list(&a.checked_precisions)
            );
            let _ = writeln!(out, "  primes                 {}", list(&a.primes));
        }
    }
    if let Some(t) = &doc.timings {
        let _ = writeln!(
            out,
            "timings                  teter {} µs, approximation {} µs",
            t.teter_micros, t.approximation_micros
        );
    }
    out
}
