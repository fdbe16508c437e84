//! Built-in example workspaces.
//!
//! `clifford-cp2` is the flagship: the Clifford torus in the projective
//! plane with the Fubini-Study form normalized so the line has area π. Its
//! trajectory data records two pearly trajectories on each of the four
//! index-gap −1 pairs and marks the two Maslov-4 classes containing disks
//! through the blown-up point on every index-gap −2 pair.

use pearl_core::model::{
    CriticalPoint, DiskClass, FloerPairData, LagrangianData, ManifoldData, TrajectoryCount,
};
use pearl_core::{rat, ratio};

use crate::document::Workspace;
use crate::WorkbenchError;

pub fn builtin_names() -> Vec<&'static str> {
    vec![
        "clifford-cp2",
        "rp2-cp2",
        "acyclic-pair",
        "point-lagrangian",
    ]
}

/// Returns the named fixture, or `UnknownExample`.
pub fn builtin_example(name: &str) -> Result<Workspace, WorkbenchError> {
    match name {
        "clifford-cp2" => Ok(clifford_cp2()),
        "rp2-cp2" => Ok(rp2_cp2()),
        "acyclic-pair" => Ok(acyclic_pair()),
        "point-lagrangian" => Ok(point_lagrangian()),
        other => Err(WorkbenchError::UnknownExample(other.to_string())),
    }
}

fn clifford_cp2() -> Workspace {
    let third = ratio(1, 3);
    let two_thirds = ratio(2, 3);

    let mut classes = vec![
        DiskClass::base("A0", 2, third, false),
        DiskClass::base("A1", 2, third, false),
        DiskClass::base("A2", 2, third, false),
    ];
    // All six Maslov-4 disk classes; only A0+A2 and A1+A2 contain disks
    // through the chosen blown-up point.
    for (name, parts, through) in [
        ("2A0", vec![("A0", 2u32)], false),
        ("2A1", vec![("A1", 2)], false),
        ("2A2", vec![("A2", 2)], false),
        ("A0+A1", vec![("A0", 1), ("A1", 1)], false),
        ("A0+A2", vec![("A0", 1), ("A2", 1)], true),
        ("A1+A2", vec![("A1", 1), ("A2", 1)], true),
    ] {
        classes.push(DiskClass::composite(name, 4, two_thirds, through, parts));
    }

    // Two pearly trajectories per contributing pair, each carrying a single
    // Maslov-2 disk. The attribution on (p0, p1a) pins the first homology
    // generator to the unstable manifold of p1a; the remaining pairs follow
    // the torus symmetry swapping (p1a, A1) with (p1b, A2).
    let per_pair = [
        ("p0", "p1a", ["A0", "A1"]),
        ("p0", "p1b", ["A0", "A2"]),
        ("p1a", "p2", ["A0", "A2"]),
        ("p1b", "p2", ["A0", "A1"]),
    ];
    let mut quantum = Vec::new();
    for (from, to, pair_classes) in per_pair {
        for class in pair_classes {
            quantum.push(TrajectoryCount::quantum(from, to, class, 1));
        }
    }
    // Uniruled marks: nonempty trajectory spaces for the through-point
    // Maslov-4 classes on every index-gap −2 pair.
    for (from, to) in [("p0", "p1a"), ("p0", "p1b"), ("p1a", "p2"), ("p1b", "p2")] {
        quantum.push(TrajectoryCount::quantum(from, to, "A0+A2", 1));
        quantum.push(TrajectoryCount::quantum(from, to, "A1+A2", 1));
    }

    Workspace {
        notes: vec![
            "blown-up point: a generic point [1:a:b] with 0 < |a| < |b| < 1, off the torus".to_string(),
            "per-pair class attribution beyond (p0, p1a) is a modeling choice following the torus symmetry; the total of two trajectories per pair is geometric".to_string(),
        ],
        manifold: ManifoldData::new(2, rat(6), true).expect("fixture manifold"),
        lagrangians: vec![LagrangianData {
            name: "clifford-torus".to_string(),
            dim: 2,
            critical_points: vec![
                CriticalPoint::new("p0", 0),
                CriticalPoint::new("p1a", 1),
                CriticalPoint::new("p1b", 1),
                CriticalPoint::new("p2", 2),
            ],
            classes,
            morse_counts: vec![
                TrajectoryCount::morse("p1a", "p0", 2),
                TrajectoryCount::morse("p1b", "p0", 2),
                TrajectoryCount::morse("p2", "p1a", 2),
                TrajectoryCount::morse("p2", "p1b", 2),
            ],
            quantum_counts: quantum,
            betti_mod2: None,
        }],
        floer_pairs: Vec::new(),
    }
}

fn rp2_cp2() -> Workspace {
    Workspace {
        notes: vec![
            "real projective plane in the projective plane: minimal Maslov number 3, blow-up minimal Maslov number 1".to_string(),
        ],
        manifold: ManifoldData::new(2, rat(6), true).expect("fixture manifold"),
        lagrangians: vec![LagrangianData {
            name: "rp2".to_string(),
            dim: 2,
            critical_points: vec![
                CriticalPoint::new("p0", 0),
                CriticalPoint::new("p1", 1),
                CriticalPoint::new("p2", 2),
            ],
            classes: vec![DiskClass::base("G", 3, ratio(1, 2), false)],
            morse_counts: vec![
                TrajectoryCount::morse("p1", "p0", 2),
                TrajectoryCount::morse("p2", "p1", 2),
            ],
            quantum_counts: Vec::new(),
            betti_mod2: Some(vec![1, 1, 1]),
        }],
        floer_pairs: Vec::new(),
    }
}

fn acyclic_pair() -> Workspace {
    Workspace {
        notes: vec![
            "trivial fixture: an acyclic Morse pair and a displaceable two-point intersection pattern".to_string(),
        ],
        manifold: ManifoldData::new(2, rat(2), true).expect("fixture manifold"),
        lagrangians: vec![LagrangianData {
            name: "acyclic".to_string(),
            dim: 2,
            critical_points: vec![CriticalPoint::new("a", 0), CriticalPoint::new("b", 1)],
            classes: Vec::new(),
            morse_counts: vec![TrajectoryCount::morse("b", "a", 1)],
            quantum_counts: Vec::new(),
            betti_mod2: None,
        }],
        floer_pairs: vec![FloerPairData {
            intersection_points: vec!["x".to_string(), "y".to_string()],
            strip_classes: vec![
                DiskClass::base("S1", 1, ratio(1, 2), false),
                DiskClass::base("S2", 1, ratio(3, 2), false),
            ],
            strip_counts: vec![
                TrajectoryCount::quantum("x", "y", "S1", 1),
                TrajectoryCount::quantum("x", "y", "S2", 1),
            ],
            min_maslov_assertion: true,
        }],
    }
}

fn point_lagrangian() -> Workspace {
    Workspace {
        notes: vec!["trivial fixture: one critical point, no disk classes".to_string()],
        manifold: ManifoldData::new(2, rat(2), true).expect("fixture manifold"),
        lagrangians: vec![LagrangianData {
            name: "point".to_string(),
            dim: 2,
            critical_points: vec![CriticalPoint::new("p0", 0)],
            classes: Vec::new(),
            morse_counts: Vec::new(),
            quantum_counts: Vec::new(),
            betti_mod2: None,
        }],
        floer_pairs: Vec::new(),
    }
}
