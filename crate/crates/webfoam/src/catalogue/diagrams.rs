use crate::web_core::{Diagram, DiagramBuilder};

fn done(b: &DiagramBuilder) -> Diagram {
    b.build().expect("catalogue diagram is valid")
}

pub fn theta() -> Diagram {
    let mut b = DiagramBuilder::new();
    b.vertex("u", [0, 60, 300])
        .vertex("v", [120, 180, 240])
        .join_labeled(("u", 60), ("v", 120), "a")
        .join_labeled(("u", 0), ("v", 180), "b")
        .join_labeled(("u", 300), ("v", 240), "c");
    done(&b)
}

pub fn tetrahedron() -> Diagram {
    let mut b = DiagramBuilder::new();
    b.vertex("a", [243, 270, 297])
        .vertex("b", [0, 45, 63])
        .vertex("c", [117, 135, 180])
        .vertex("d", [90, 225, 315])
        .join_labeled(("a", 243), ("b", 63), "ab")
        .join_labeled(("a", 270), ("d", 90), "ad")
        .join_labeled(("a", 297), ("c", 117), "ac")
        .join_labeled(("b", 0), ("c", 180), "bc")
        .join_labeled(("b", 45), ("d", 225), "bd")
        .join_labeled(("c", 135), ("d", 315), "cd");
    done(&b)
}

pub fn cube() -> Diagram {
    let mut b = DiagramBuilder::new();
    let phi = |k: i32| 45 + 90 * k;
    for k in 0..4 {
        let p = phi(k);
        b.vertex(&format!("a{k}"), [p + 135, p + 225, p + 180]);
        b.vertex(&format!("b{k}"), [p + 135, p + 225, p]);
    }
    for k in 0..4 {
        let (p, q) = (phi(k), phi(k + 1));
        let k1 = (k + 1) % 4;
        for ring in ["a", "b"] {
            b.join(
                (&format!("{ring}{k}"), p + 135),
                (&format!("{ring}{k1}"), q + 225),
            );
        }
        b.join((&format!("a{k}"), p + 180), (&format!("b{k}"), p));
    }
    done(&b)
}

pub fn handcuffs() -> Diagram {
    let mut b = DiagramBuilder::new();
    b.vertex("u", [0, 135, 225])
        .vertex("v", [45, 180, 315])
        .join_labeled(("u", 135), ("u", 225), "left")
        .join_labeled(("v", 45), ("v", 315), "right")
        .join_labeled(("u", 0), ("v", 180), "bar");
    done(&b)
}

pub fn kink() -> Diagram {
    let mut b = DiagramBuilder::new();
    b.crossing("x", [45, 135, 225, 315], 135)
        .join(("x", 45), ("x", 135))
        .join(("x", 225), ("x", 315));
    done(&b)
}

fn hopf_crossings(b: &mut DiagramBuilder) {
    // L runs through P at 135/315 and Q at 45/225; R through P at 45/225 and Q at 135/315.
    b.crossing("P", [45, 135, 225, 315], 135)
        .crossing("Q", [45, 135, 225, 315], 135)
        .join(("P", 135), ("Q", 225))
        .join(("P", 45), ("Q", 315));
}

pub fn hopf() -> Diagram {
    let mut b = DiagramBuilder::new();
    hopf_crossings(&mut b);
    b.join(("P", 315), ("Q", 45)).join(("P", 225), ("Q", 135));
    done(&b)
}

/// Hopf link with a bar between the two components across the central region.
pub fn linked_handcuffs() -> Diagram {
    let mut b = DiagramBuilder::new();
    hopf_crossings(&mut b);
    b.vertex("u", [0, 90, 270])
        .vertex("v", [90, 180, 270])
        .join(("P", 225), ("u", 90))
        .join(("u", 270), ("Q", 135))
        .join(("P", 315), ("v", 90))
        .join(("v", 270), ("Q", 45))
        .join_labeled(("u", 0), ("v", 180), "bar");
    done(&b)
}

pub fn trefoil() -> Diagram {
    let mut b = DiagramBuilder::new();
    for c in ["c1", "c2", "c3"] {
        b.crossing(c, [45, 135, 225, 315], 45);
    }
    b.join(("c1", 225), ("c2", 135))
        .join(("c1", 315), ("c2", 45))
        .join(("c2", 225), ("c3", 135))
        .join(("c2", 315), ("c3", 45))
        .join(("c1", 45), ("c3", 315))
        .join(("c1", 135), ("c3", 225));
    done(&b)
}

/// Handcuffs whose loops are clasped around the bar and each other.
pub fn tangled_handcuffs() -> Diagram {
    let mut b = DiagramBuilder::new();
    b.crossing("T", [30, 150, 210, 330], 150)
        .crossing("Bt", [30, 150, 210, 330], 30)
        .crossing("X1", [0, 90, 180, 270], 0)
        .crossing("X2", [0, 90, 180, 270], 90)
        .vertex("u", [0, 45, 315])
        .vertex("v", [135, 180, 225])
        .join(("u", 45), ("T", 150))
        .join(("T", 330), ("X2", 90))
        .join(("X2", 270), ("Bt", 30))
        .join(("Bt", 210), ("u", 315))
        .join(("v", 135), ("T", 30))
        .join(("T", 210), ("X1", 90))
        .join(("X1", 270), ("Bt", 150))
        .join(("Bt", 330), ("v", 225))
        .join(("u", 0), ("X1", 180))
        .join(("X1", 0), ("X2", 180))
        .join(("X2", 0), ("v", 180));
    done(&b)
}

/// Hexagon with its three long diagonals; two diagonals cross at the center.
pub fn k33() -> Diagram {
    let mut b = DiagramBuilder::new();
    for k in 0..6 {
        let a = 60 * k;
        let diagonal = if k == 2 || k == 5 { a } else { a + 180 };
        b.vertex(&format!("p{k}"), [a + 120, a + 240, diagonal]);
    }
    b.crossing("C", [0, 60, 180, 240], 0);
    for k in 0..6 {
        let k1 = (k + 1) % 6;
        b.join(
            (&format!("p{k}"), 60 * k + 120),
            (&format!("p{k1}"), 60 * k1 + 240),
        );
    }
    b.join(("C", 0), ("p0", 180))
        .join(("C", 60), ("p1", 240))
        .join(("C", 180), ("p3", 0))
        .join(("C", 240), ("p4", 60))
        .join(("p2", 120), ("p5", 300));
    done(&b)
}

/// Vertex closure of a two-crossing and a three-crossing twist tangle.
///
/// `overs` lists the over dart angle at c1, c2, d1, d2, d3.
pub fn twist_theta(overs: [i32; 5]) -> Diagram {
    let mut b = DiagramBuilder::new();
    for (c, o) in ["c1", "c2", "d1", "d2", "d3"].iter().zip(overs) {
        b.crossing(c, [45, 135, 225, 315], o);
    }
    b.vertex("u", [90, 225, 315])
        .vertex("v", [45, 135, 270])
        .join(("c1", 225), ("c2", 135))
        .join(("c1", 315), ("c2", 45))
        .join(("d1", 225), ("d2", 135))
        .join(("d1", 315), ("d2", 45))
        .join(("d2", 225), ("d3", 135))
        .join(("d2", 315), ("d3", 45))
        .join(("c1", 45), ("d1", 135))
        .join(("c2", 315), ("d3", 225))
        .join(("u", 225), ("c1", 135))
        .join(("u", 315), ("d1", 45))
        .join(("v", 135), ("c2", 225))
        .join(("v", 45), ("d3", 315))
        .join_labeled(("u", 90), ("v", 270), "outer");
    done(&b)
}

pub fn kinoshita_theta() -> Diagram {
    twist_theta(super::KINOSHITA_OVERS)
}
