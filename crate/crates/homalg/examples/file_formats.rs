//! The JSON file formats and canonical emission.
//!
//! Algebras, representations, bimodules, operators, and matrices all have
//! JSON file forms (the same ones the `homalg` binary reads and writes).
//! Emission is canonical — sorted keys, sorted product entries, zeros
//! omitted, canonical scalar strings, trailing newline — so identical
//! objects produce byte-identical files, and parsing is validating: every
//! dimension, index, and scalar is checked up front with a field path in
//! the error.
//!
//! ```text
//! cargo run --example file_formats
//! ```

use homalg::corpus::{load_example, CorpusObject};
use homalg::json::{
    algebra_from_value, algebra_to_value, corpus_object_to_value, read_algebra,
    to_canonical_string,
};
use homalg::Error;

fn main() -> Result<(), Error> {
    // A minimal algebra file: dimension plus products. Everything else
    // defaults (kind "generic", rational scalars, identity twist).
    let minimal: serde_json::Value =
        serde_json::from_str(r#"{"dim": 2, "products": {"mul": [[0, 0, 1, "1"]]}}"#)
            .expect("literal JSON");
    let tiny = algebra_from_value(&minimal)?;
    println!(
        "minimal file parses to: dim {}, kind {:?}, identity twist {}",
        tiny.dim(),
        tiny.kind,
        tiny.alpha.is_identity()
    );

    // Canonical emission of a corpus algebra.
    let CorpusObject::Algebra(alg) = load_example("nil2_hom", &[])? else {
        unreachable!("nil2_hom is an algebra entry");
    };
    let text = to_canonical_string(&algebra_to_value(&alg));
    println!("\nnil2_hom as a canonical algebra file:\n{text}");

    // Round trip through the filesystem.
    let dir = std::env::temp_dir().join("homalg-file-formats-example");
    std::fs::create_dir_all(&dir).map_err(|e| Error::Io {
        path: dir.display().to_string(),
        source: e,
    })?;
    let path = dir.join("nil2.json");
    std::fs::write(&path, &text).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    let back = read_algebra(&path)?;
    assert_eq!(back, alg);
    let re_emitted = to_canonical_string(&algebra_to_value(&back));
    assert_eq!(re_emitted, text);
    println!("parse ∘ serialize is the identity (bytes and values)");

    // Operator files carry their context inline (or as a relative path).
    let operator = load_example("nil2_hom.rb", &[])?;
    let text = to_canonical_string(&corpus_object_to_value(&operator));
    println!("\nnil2_hom.rb as an operator file:\n{text}");

    // Parsing is validating: a bad scalar or a stray index is rejected
    // with the offending field named.
    for (broken, label) in [
        (r#"{"dim": 1, "products": {"mul": [[0, 0, 0, "1/0"]]}}"#, "zero denominator"),
        (r#"{"dim": 2, "products": {"mul": [[0, 0, 5, "1"]]}}"#, "index out of range"),
        (
            r#"{"dim": 1, "products": {"mul": [[0, 0, 0, "1"], [0, 0, 0, "2"]]}}"#,
            "duplicate entry",
        ),
    ] {
        let value: serde_json::Value = serde_json::from_str(broken).expect("literal JSON");
        let err = algebra_from_value(&value).expect_err(label);
        println!("rejected ({label}): {err}");
    }
    Ok(())
}
