//! Shared text normalization and tokenization.
//!
//! Every keyword, query term, and metric token in the toolkit goes through
//! this module, so the store, the indexes, and the metrics all agree on what
//! a term is. Normalization is NFC + lowercase; term boundaries are
//! whitespace; surrounding punctuation is stripped, except that a leading
//! hyphen survives so suffix forms like `-kuna` stay distinct from bare
//! stems.

use unicode_normalization::UnicodeNormalization;

fn fold(raw: &str) -> String {
    raw.to_lowercase().nfc().collect()
}

/// Normalize a single term: NFC, lowercase, surrounding punctuation stripped.
///
/// Idempotent: `normalize_term(normalize_term(s)) == normalize_term(s)`.
pub fn normalize_term(raw: &str) -> String {
    let folded = fold(raw);
    let stripped = folded
        .trim_end_matches(|c: char| !c.is_alphanumeric())
        .trim_start_matches(|c: char| !c.is_alphanumeric() && c != '-');
    if stripped.chars().all(|c| c == '-') {
        return String::new();
    }
    stripped.to_string()
}

/// Whitespace-split tokens of a sentence, each normalized, empties dropped.
pub fn source_tokens(text: &str) -> Vec<String> {
    text.split_whitespace()
        .map(normalize_term)
        .filter(|t| !t.is_empty())
        .collect()
}

/// Query terms for keyword retrieval: the normalized tokens of the sentence
/// plus each hyphenated token's morpheme candidates. `wasi-kuna` yields
/// `wasi-kuna`, `wasi`, and `-kuna`; an unhyphenated `wasikuna` yields only
/// itself.
pub fn query_terms(text: &str) -> Vec<String> {
    let mut terms: Vec<String> = Vec::new();
    let mut push_unique = |terms: &mut Vec<String>, t: String| {
        if !t.is_empty() && !terms.contains(&t) {
            terms.push(t);
        }
    };
    for tok in source_tokens(text) {
        push_unique(&mut terms, tok.clone());
        if tok.contains('-') {
            for (i, part) in tok.split('-').enumerate() {
                if part.is_empty() {
                    continue;
                }
                let candidate = if i == 0 {
                    normalize_term(part)
                } else {
                    normalize_term(&format!("-{part}"))
                };
                push_unique(&mut terms, candidate);
            }
        }
    }
    terms
}

/// Metric tokenizer: NFC + lowercase, alphanumeric runs become tokens, and
/// every punctuation character becomes its own token.
pub fn tokenize(text: &str) -> Vec<String> {
    let folded = fold(text);
    let mut tokens = Vec::new();
    let mut current = String::new();
    for ch in folded.chars() {
        if ch.is_alphanumeric() {
            current.push(ch);
        } else {
            if !current.is_empty() {
                tokens.push(std::mem::take(&mut current));
            }
            if !ch.is_whitespace() {
                tokens.push(ch.to_string());
            }
        }
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    tokens
}

/// Embedding-side normalization: NFC + lowercase with whitespace runs
/// collapsed to single spaces.
pub fn normalize_for_embedding(text: &str) -> String {
    fold(text).split_whitespace().collect::<Vec<_>>().join(" ")
}
