//! Bundled example webs with their expected invariants.

pub mod diagrams;

use serde::Serialize;
use serde_json::{json, Value};

use crate::module_algebra::known_module;
use crate::skein::euler_char;
use crate::tait::{planar_lsharp_dim, tait_count};
use crate::web_core::Diagram;

/// Over dart angles at c1, c2, d1, d2, d3 of [`diagrams::twist_theta`].
///
/// With these choices deleting any one edge leaves an unknot (trivial bracket).
pub const KINOSHITA_OVERS: [i32; 5] = [45, 45, 45, 135, 135];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub tait: u64,
    pub dim: u64,
    pub chi: i64,
}

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub name: &'static str,
    pub description: &'static str,
    /// File name under `data/`.
    pub file: &'static str,
    /// Known module name, used for the dimension of non-planar entries.
    pub module: &'static str,
    pub planar: bool,
    pub expected: Expected,
    pub build: fn() -> Diagram,
}

impl Entry {
    pub fn diagram(&self) -> Diagram {
        (self.build)()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "description": self.description,
            "file": format!("data/{}", self.file),
            "planar": self.planar,
            "expected": self.expected,
        })
    }
}

fn unknot() -> Diagram {
    Diagram::unlink(1)
}

fn unlink2() -> Diagram {
    Diagram::unlink(2)
}

fn unlink3() -> Diagram {
    Diagram::unlink(3)
}

const fn ex(tait: u64, dim: u64, chi: i64) -> Expected {
    Expected { tait, dim, chi }
}

pub const ENTRIES: [Entry; 14] = [
    Entry {
        name: "unknot",
        description: "single circle",
        file: "unknot.json",
        module: "unknot",
        planar: true,
        expected: ex(3, 3, 3),
        build: unknot,
    },
    Entry {
        name: "unlink_2",
        description: "two unlinked circles",
        file: "unlink_2.json",
        module: "unlink_2",
        planar: true,
        expected: ex(9, 9, 9),
        build: unlink2,
    },
    Entry {
        name: "unlink_3",
        description: "three unlinked circles",
        file: "unlink_3.json",
        module: "unlink_3",
        planar: true,
        expected: ex(27, 27, 27),
        build: unlink3,
    },
    Entry {
        name: "theta",
        description: "two vertices, three parallel edges",
        file: "theta.json",
        module: "theta",
        planar: true,
        expected: ex(6, 6, 6),
        build: diagrams::theta,
    },
    Entry {
        name: "tetrahedron",
        description: "planar K4",
        file: "tetrahedron.json",
        module: "tetrahedron",
        planar: true,
        expected: ex(6, 6, 6),
        build: diagrams::tetrahedron,
    },
    Entry {
        name: "cube",
        description: "1-skeleton of the cube",
        file: "cube.json",
        module: "",
        planar: true,
        expected: ex(24, 24, 24),
        build: diagrams::cube,
    },
    Entry {
        name: "handcuffs",
        description: "two loops joined by a bar",
        file: "handcuffs.json",
        module: "",
        planar: true,
        expected: ex(0, 0, 0),
        build: diagrams::handcuffs,
    },
    Entry {
        name: "kink",
        description: "unknot with one kink",
        file: "kink.json",
        module: "unknot",
        planar: false,
        expected: ex(3, 3, 3),
        build: diagrams::kink,
    },
    Entry {
        name: "hopf",
        description: "Hopf link",
        file: "hopf.json",
        module: "hopf",
        planar: false,
        expected: ex(9, 9, 9),
        build: diagrams::hopf,
    },
    Entry {
        name: "lhc",
        description: "linked handcuffs: Hopf link with a bar between the components",
        file: "lhc.json",
        module: "lhc",
        planar: false,
        expected: ex(0, 4, 0),
        build: diagrams::linked_handcuffs,
    },
    Entry {
        name: "trefoil",
        description: "trefoil knot",
        file: "trefoil.json",
        module: "trefoil",
        planar: false,
        expected: ex(3, 7, 3),
        build: diagrams::trefoil,
    },
    Entry {
        name: "tangled_handcuffs",
        description: "handcuffs with loops clasping each other and the bar",
        file: "tangled_handcuffs.json",
        module: "tangled_handcuffs",
        planar: false,
        expected: ex(0, 0, 0),
        build: diagrams::tangled_handcuffs,
    },
    Entry {
        name: "k33",
        description: "K3,3 with one crossing",
        file: "k33.json",
        module: "k33",
        planar: false,
        expected: ex(12, 12, 0),
        build: diagrams::k33,
    },
    Entry {
        name: "kinoshita_theta",
        description: "Brunnian theta curve",
        file: "kinoshita_theta.json",
        module: "kinoshita_theta",
        planar: false,
        expected: ex(6, 6, 6),
        build: diagrams::kinoshita_theta,
    },
];

pub fn entry(name: &str) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.name == name)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub quantity: &'static str,
    pub expected: i64,
    pub actual: i64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub name: &'static str,
    pub checks: Vec<Check>,
}

impl EntryReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

fn check(quantity: &'static str, expected: i64, actual: i64) -> Check {
    Check {
        quantity,
        expected,
        actual,
        ok: expected == actual,
    }
}

/// Recompute every stored expectation of an entry.
pub fn verify_entry(e: &Entry) -> EntryReport {
    let d = e.diagram();
    let web = d.underlying_web();
    let mut checks = vec![
        check("tait", e.expected.tait as i64, tait_count(&web) as i64),
        check("chi", e.expected.chi, euler_char(&d).chi),
    ];
    let planar_now = d.crossing_count() == 0;
    if planar_now {
        checks.push(check(
            "planar_dim",
            e.expected.dim as i64,
            planar_lsharp_dim(&web) as i64,
        ));
    }
    if !e.module.is_empty() {
        let m = known_module(e.module).expect("catalogue module names are known");
        checks.push(check("dim", e.expected.dim as i64, m.dim() as i64));
        if let Some(chi) = m.euler_characteristic() {
            checks.push(check("module_chi", e.expected.chi, chi));
        }
    }
    EntryReport {
        name: e.name,
        checks,
    }
}

pub fn verify_all() -> Vec<EntryReport> {
    ENTRIES.iter().map(verify_entry).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_verify() {
        for r in verify_all() {
            assert!(r.ok(), "{r:?}");
        }
    }

    #[test]
    fn names_unique() {
        let mut names: Vec<&str> = ENTRIES.iter().map(|e| e.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), ENTRIES.len());
        assert!(ENTRIES.len() >= 12);
        assert_eq!(entry("cube").unwrap().expected.tait, 24);
    }
}
