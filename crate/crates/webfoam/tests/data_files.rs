use std::path::Path;

use serde_json::Value;

use webfoam::catalogue::ENTRIES;
use webfoam::tait::tait_count;
use webfoam::web_core::{parse_diagram, parse_web};

fn read(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Strand order and the order of a strand's two ends carry no meaning.
fn normalized(mut v: Value) -> Value {
    if let Some(strands) = v.get_mut("strands").and_then(Value::as_array_mut) {
        for s in strands.iter_mut() {
            if let Some(d) = s.get_mut("darts").and_then(Value::as_array_mut) {
                d.sort_by_key(|x| x.to_string());
            }
        }
        strands.sort_by_key(|s| s.to_string());
    }
    v
}

#[test]
fn catalogue_files_match_builders() {
    for e in ENTRIES {
        let parsed = parse_diagram(&read(e.file)).unwrap();
        assert_eq!(
            normalized(parsed.to_json()),
            normalized(e.diagram().to_json()),
            "{}",
            e.name
        );
    }
}

#[test]
fn serialization_round_trips() {
    for e in ENTRIES {
        let d = e.diagram();
        let back = parse_diagram(&d.serialize()).unwrap();
        assert_eq!(
            normalized(back.to_json()),
            normalized(d.to_json()),
            "{}",
            e.name
        );
    }
}

#[test]
fn theta_web_file() {
    let w = parse_web(&read("theta_web.json")).unwrap();
    assert_eq!(tait_count(&w), 6);
    assert_eq!(parse_web(&w.serialize()).unwrap().to_json(), w.to_json());
}

#[test]
fn malformed_files_are_rejected() {
    assert!(parse_diagram("{").is_err());
    assert!(parse_web(r#"{"vertices": ["a"], "edges": [["a", "b"]]}"#).is_err());
}
