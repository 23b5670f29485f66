use kanforge::corpus;
use kanforge::io::{parse_document, parse_sset, parse_two_group, roundtrip, Document};
use kanforge::standard::circle;
use kanforge::Error;
use proptest::prelude::*;
use serde_json::Value;

fn canonical(id: &str) -> String {
    corpus::get(id).unwrap().to_canonical().unwrap()
}

/// Prints `v` with the keys of every object rotated by `shift` and `pad`
/// spaces around each separator.
fn print_permuted(v: &Value, shift: usize, pad: usize, out: &mut String) {
    let sp = " ".repeat(pad);
    match v {
        Value::Object(map) => {
            let keys: Vec<&String> = map.keys().collect();
            let n = keys.len();
            out.push('{');
            for i in 0..n {
                let k = keys[(i + shift) % n];
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&sp);
                out.push_str(&serde_json::to_string(k).unwrap());
                out.push_str(&sp);
                out.push(':');
                out.push_str(&sp);
                print_permuted(&map[k], shift, pad, out);
            }
            out.push_str(&sp);
            out.push('}');
        }
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                    out.push_str(&sp);
                }
                print_permuted(item, shift, pad, out);
            }
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn permuted(text: &str, shift: usize, pad: usize) -> String {
    let v: Value = serde_json::from_str(text).unwrap();
    let mut out = String::new();
    print_permuted(&v, shift, pad, &mut out);
    out
}

fn with_field(text: &str, key: &str, value: Value) -> String {
    let mut v: Value = serde_json::from_str(text).unwrap();
    v.as_object_mut().unwrap().insert(key.into(), value);
    v.to_string()
}

#[test]
fn every_corpus_entry_round_trips() {
    for (id, _) in corpus::ENTRIES {
        let text = canonical(id);
        assert_eq!(roundtrip(&text).unwrap().as_deref(), Some(text.as_str()), "{id}");
    }
}

#[test]
fn corpus_entries_have_the_expected_kinds() {
    let kinds = [
        ("group_z2", "group"),
        ("indiscrete2", "category"),
        ("twogroup_oneobj_z2", "2-group"),
        ("circle", "simplicial set"),
        ("segal_circle", "bisimplicial set"),
    ];
    for (id, kind) in kinds {
        assert_eq!(corpus::get(id).unwrap().kind(), kind, "{id}");
    }
    assert!(matches!(corpus::get("no_such_entry"), Err(Error::Parse(_))));
}

#[test]
fn reordered_keys_give_identical_canonical_output() {
    for id in ["circle", "twogroup_oneobj_z2", "indiscrete3", "group_s3", "segal_circle"] {
        let text = canonical(id);
        for shift in 1..4 {
            let again = parse_document(&permuted(&text, shift, 1)).unwrap().to_canonical().unwrap();
            assert_eq!(again, text, "{id}, shift {shift}");
        }
    }
}

#[test]
fn unknown_keys_are_rejected() {
    for id in ["circle", "twogroup_oneobj_z2", "indiscrete2", "segal_circle"] {
        let text = with_field(&canonical(id), "colour", Value::from("blue"));
        assert!(matches!(parse_document(&text), Err(Error::Parse(_))), "{id}");
    }
}

#[test]
fn wrong_format_is_rejected() {
    for id in ["circle", "group_z2", "twogroup_oneobj_z2", "indiscrete2", "segal_circle"] {
        let text = with_field(&canonical(id), "format", Value::from(2));
        assert!(matches!(parse_document(&text), Err(Error::Parse(_))), "{id}");
    }
}

#[test]
fn unrecognised_documents_are_rejected() {
    assert!(matches!(parse_document("[1, 2]"), Err(Error::Parse(_))));
    assert!(matches!(parse_document("{\"format\": 1}"), Err(Error::Parse(_))));
    assert!(matches!(parse_document("{"), Err(Error::Parse(_))));
}

#[test]
fn typed_parsers_check_the_kind() {
    assert!(parse_sset(&canonical("circle")).is_ok());
    assert!(matches!(parse_sset(&canonical("group_z2")), Err(Error::Parse(_))));
    assert!(matches!(parse_two_group(&canonical("circle")), Err(Error::Parse(_))));
}

#[test]
fn broken_face_table_is_rejected() {
    // Point the second face of the nondegenerate edge of the circle at a
    // missing vertex.
    let mut v: Value = serde_json::from_str(&canonical("circle")).unwrap();
    let edges = v["face"]["1.0"].as_array_mut().unwrap();
    edges[1] = Value::from("nowhere");
    assert!(parse_document(&v.to_string()).is_err());
}

#[test]
fn invalid_two_group_is_rejected() {
    // Send every associator component to the unit's identity: the target
    // 2-group has a nontrivial tensor, so the components have wrong endpoints.
    let mut v: Value = serde_json::from_str(&canonical("twogroup_disc_z3")).unwrap();
    let unit = v["unit_object"].clone();
    let assoc = v["assoc"].as_array_mut().unwrap();
    let id_of_unit = Value::from(format!("id:{}", unit.as_str().unwrap()));
    for entry in assoc.iter_mut() {
        *entry.as_array_mut().unwrap().last_mut().unwrap() = id_of_unit.clone();
    }
    assert!(parse_document(&v.to_string()).is_err());
}

#[test]
fn canonical_output_is_stable_for_generated_sets() {
    let text = Document::SSet(circle(4)).to_canonical().unwrap();
    assert_eq!(roundtrip(&text).unwrap(), Some(text.clone()));
    assert_eq!(parse_sset(&text).unwrap().len(4), circle(4).len(4));
}

proptest! {
    #[test]
    fn whitespace_and_key_order_do_not_matter(entry in 0usize..corpus::ENTRIES.len(), shift in 0usize..5, pad in 0usize..3) {
        let id = corpus::ENTRIES[entry].0;
        let text = canonical(id);
        let again = parse_document(&permuted(&text, shift, pad)).unwrap().to_canonical().unwrap();
        prop_assert_eq!(again, text);
    }
}
