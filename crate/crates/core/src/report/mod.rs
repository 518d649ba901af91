//! Parsing, the named-pair registry, the summary table, and JSON/CSV output.

mod emit;
mod parse;
mod registry;
mod summary;

pub use emit::{
    emit_report, emit_value, format_sig, round_reals, OutputFormat, SIGNIFICANT_DIGITS,
};
pub use parse::{parse_matrix_spec, parse_word};
pub use registry::{registry_entry, ClosedForm, PairSpec, RegistryEntry, REGISTRY};
pub use summary::{run_summary, GrowthReport, SmaxProvenance, SummaryConfig, SummaryRow};

use serde::Serializer;

use crate::algebra::{Rational, Word};

// Rationals travel as "p/q" strings (or "p" when integral).

pub(crate) fn ser_rational<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub(crate) fn ser_opt_rational<S: Serializer>(
    value: &Option<Rational>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match value {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

pub(crate) fn ser_word<S: Serializer>(value: &Word, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub(crate) fn ser_words<S: Serializer>(value: &[Word], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(value.iter().map(ToString::to_string))
}
