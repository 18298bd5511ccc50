//! Parsing of coefficient lists and the alphabet/bicharacter JSON document.

use std::io::Read;
use std::path::Path;

use num_bigint::BigInt;
use serde::Deserialize;

use colorlie::oracle::bicharacter::{BicharacterTable, FiniteAbelianGroup};
use colorlie::{Generator, GradedAlphabet, TruncatedSeries};

use crate::CliError;

/// Parses a whitespace/comma-separated integer list, e.g. `0,2,1` or `0 2 1`.
pub fn parse_coeff_list(text: &str) -> Result<Vec<BigInt>, CliError> {
    let mut coeffs = Vec::new();
    for token in text.split(|c: char| c.is_whitespace() || c == ',') {
        if token.is_empty() {
            continue;
        }
        let value = token
            .parse::<BigInt>()
            .map_err(|_| CliError::invalid(format!("`{token}` is not an integer")))?;
        coeffs.push(value);
    }
    if coeffs.is_empty() {
        return Err(CliError::invalid("no coefficients given"));
    }
    Ok(coeffs)
}

/// Reads a coefficient list from `--coeffs` or, when absent, from stdin.
pub fn coeffs_or_stdin(coeffs: &Option<String>) -> Result<Vec<BigInt>, CliError> {
    match coeffs {
        Some(text) => parse_coeff_list(text),
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::invalid(format!("cannot read stdin: {e}")))?;
            parse_coeff_list(&text)
        }
    }
}

/// Builds a series of the exact truncation order `order`, zero-extending or
/// truncating the given coefficients.
pub fn series_at_order(coeffs: Vec<BigInt>, order: usize) -> TruncatedSeries {
    let mut coeffs = coeffs;
    coeffs.resize(order + 1, BigInt::from(0));
    TruncatedSeries::from_coeffs(coeffs)
}

/// Parses a `start,end` window.
pub fn parse_window(text: &str) -> Result<(usize, usize), CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::invalid("window must be `start,end`"));
    }
    let a = parts[0]
        .trim()
        .parse::<usize>()
        .map_err(|_| CliError::invalid("window start is not a natural number"))?;
    let b = parts[1]
        .trim()
        .parse::<usize>()
        .map_err(|_| CliError::invalid("window end is not a natural number"))?;
    Ok((a, b))
}

/// JSON document describing an alphabet and its bicharacter:
///
/// ```json
/// {
///   "group": [2],
///   "gamma_on_generators": [[-1]],
///   "generators": [
///     {"label": "x", "weight": 1, "degree": [0]},
///     {"label": "y", "weight": 1, "degree": [1]}
///   ]
/// }
/// ```
///
/// An empty `group` list is the trivial group; degrees are then `[]`.
#[derive(Debug, Deserialize)]
pub struct AlphabetDocument {
    #[serde(default)]
    pub group: Vec<u64>,
    #[serde(default)]
    pub gamma_on_generators: Vec<Vec<i8>>,
    pub generators: Vec<GeneratorSpec>,
}

#[derive(Debug, Deserialize)]
pub struct GeneratorSpec {
    pub label: String,
    pub weight: usize,
    #[serde(default)]
    pub degree: Vec<u64>,
}

pub fn load_alphabet(path: &Path) -> Result<GradedAlphabet, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))?;
    let doc: AlphabetDocument = serde_json::from_str(&text)
        .map_err(|e| CliError::invalid(format!("bad alphabet document: {e}")))?;
    alphabet_from_document(doc)
}

pub fn alphabet_from_document(doc: AlphabetDocument) -> Result<GradedAlphabet, CliError> {
    let group = FiniteAbelianGroup::new(doc.group).map_err(CliError::from)?;
    let table = if doc.gamma_on_generators.is_empty() {
        BicharacterTable::trivial(group)
    } else {
        BicharacterTable::from_generator_signs(group, doc.gamma_on_generators)
            .map_err(CliError::from)?
    };
    let generators = doc
        .generators
        .into_iter()
        .map(|g| {
            let degree = table
                .group()
                .element_from_residues(g.degree)
                .map_err(CliError::from)?;
            Ok(Generator {
                label: g.label,
                weight: g.weight,
                degree,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    GradedAlphabet::new(table, generators).map_err(CliError::from)
}
