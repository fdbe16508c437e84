//! Monotone one-point blow-up bookkeeping: the unique weight keeping the
//! blow-up monotone, proper transforms of relative classes, the minimal
//! Maslov number of the proper transform, and admissibility verdicts.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::model::{DiskClass, LagrangianData, ManifoldData};
use crate::{rat, Rat};

/// Parameters of the monotone one-point blow-up: the weight ρ² (the
/// exceptional line has area ρ²·π) and the exceptional line class itself,
/// of Maslov index 2(n−1) and self-intersection −1 with the divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupParams {
    pub half_dim: u32,
    pub rho_sq: Rat,
    pub exceptional_line: DiskClass,
}

impl BlowupParams {
    /// The unique monotone parameters for `m`: ρ² = 2(n−1)/(λπ).
    pub fn monotone(m: &ManifoldData) -> Self {
        let rho_sq = monotone_weight(m);
        let shift = 2 * (i64::from(m.half_dim) - 1);
        BlowupParams {
            half_dim: m.half_dim,
            rho_sq,
            exceptional_line: DiskClass {
                name: "L_E".to_string(),
                maslov: shift,
                area_over_pi: rho_sq,
                exc_mult: -1,
                through_point: false,
                components: None,
            },
        }
    }

    /// Maslov index drop per intersection with the exceptional divisor.
    pub fn maslov_shift(&self) -> i64 {
        2 * (i64::from(self.half_dim) - 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlowupError {
    /// Proper transforms are defined for nonnegative exceptional
    /// multiplicities only.
    NegativeMultiplicity,
    /// The input class already carries exceptional data.
    NotABaseClass(String),
}

impl fmt::Display for BlowupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlowupError::NegativeMultiplicity => {
                write!(f, "exceptional multiplicity must be nonnegative")
            }
            BlowupError::NotABaseClass(name) => {
                write!(f, "class '{}' is not a base-manifold class", name)
            }
        }
    }
}

/// The blow-up weight ρ² = 2(n−1)/(λπ) that keeps the blow-up monotone with
/// the same constant.
pub fn monotone_weight(m: &ManifoldData) -> Rat {
    rat(2 * (i64::from(m.half_dim) - 1)) / m.lambda_pi
}

/// Proper transform `Ã − ℓ·L_E` of a base class `A`: the Maslov index drops
/// by 2(n−1)ℓ and the area by ℓρ². The through-point mark survives only at
/// ℓ = 0; a transformed class meets the exceptional divisor instead of the
/// blown-up point.
pub fn proper_transform_class(
    a: &DiskClass,
    mult: i64,
    params: &BlowupParams,
) -> Result<DiskClass, BlowupError> {
    if mult < 0 {
        return Err(BlowupError::NegativeMultiplicity);
    }
    if a.exc_mult != 0 {
        return Err(BlowupError::NotABaseClass(a.name.clone()));
    }
    let name = match mult {
        0 => alloc::format!("~{}", a.name),
        1 => alloc::format!("~{}-L_E", a.name),
        k => alloc::format!("~{}-{}L_E", a.name, k),
    };
    Ok(DiskClass {
        name,
        maslov: a.maslov - params.maslov_shift() * mult,
        area_over_pi: a.area_over_pi - rat(mult) * params.rho_sq,
        exc_mult: mult,
        through_point: if mult == 0 { a.through_point } else { false },
        components: None,
    })
}

/// Minimal Maslov number of the proper transform: the image of the index
/// morphism upstairs is generated by the base image together with the
/// exceptional shift 2(n−1), because every class upstairs splits as a base
/// class plus a multiple of the exceptional line.
pub fn blowup_min_maslov(l: &LagrangianData, params: &BlowupParams) -> u32 {
    let mut g = params.maslov_shift().unsigned_abs();
    for class in &l.classes {
        g = g.gcd(&class.maslov.unsigned_abs());
    }
    g as u32
}

/// Outcome of the admissibility check for a collection of Lagrangians.
/// `admissible` holds exactly when all of: every Lagrangian is monotone, all
/// share the manifold's constant, the width condition is asserted, and the
/// blow-up minimal Maslov number is at least 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityVerdict {
    pub monotone_ok: bool,
    pub same_lambda_ok: bool,
    pub width_asserted: bool,
    pub min_maslov_blowup: u32,
    pub admissible: bool,
    pub diagnostics: Vec<String>,
}

/// Admissibility of a collection in the sense used for the blow-up transfer.
/// Failures never error; they land in the verdict's diagnostics.
pub fn check_admissible(m: &ManifoldData, lagrangians: &[&LagrangianData]) -> AdmissibilityVerdict {
    let params = BlowupParams::monotone(m);
    let mut diagnostics = Vec::new();

    // Each Lagrangian must be monotone for some positive constant of its own.
    let mut monotone_ok = true;
    let mut same_lambda_ok = true;
    for l in lagrangians {
        let mut own_lambda: Option<Rat> = None;
        for class in &l.classes {
            if class.area_over_pi == rat(0) {
                if class.maslov != 0 {
                    monotone_ok = false;
                    diagnostics.push(alloc::format!(
                        "{}: class {} has zero area but Maslov index {}",
                        l.name,
                        class.name,
                        class.maslov
                    ));
                }
                continue;
            }
            let candidate = rat(class.maslov) / class.area_over_pi;
            if candidate <= rat(0) {
                monotone_ok = false;
                diagnostics.push(alloc::format!(
                    "{}: class {} forces a nonpositive monotonicity constant",
                    l.name,
                    class.name
                ));
                continue;
            }
            match own_lambda {
                None => own_lambda = Some(candidate),
                Some(previous) if previous != candidate => {
                    monotone_ok = false;
                    diagnostics.push(alloc::format!(
                        "{}: classes {} determine conflicting constants",
                        l.name,
                        class.name
                    ));
                }
                Some(_) => {}
            }
        }
        if let Some(lambda) = own_lambda {
            if lambda != m.lambda_pi {
                same_lambda_ok = false;
                diagnostics.push(alloc::format!(
                    "{}: monotonicity constant {} differs from the manifold's {}",
                    l.name,
                    lambda,
                    m.lambda_pi
                ));
            }
        }
    }

    let width_asserted = m.width_asserted;
    if !width_asserted {
        diagnostics.push("Gromov width condition not asserted".to_string());
    }

    let min_maslov_blowup = lagrangians
        .iter()
        .map(|l| blowup_min_maslov(l, &params))
        .min()
        .unwrap_or(params.maslov_shift().unsigned_abs() as u32);
    if min_maslov_blowup < 2 {
        diagnostics.push(alloc::format!(
            "minimal Maslov in blow-up = {} < 2",
            min_maslov_blowup
        ));
    }

    let admissible = monotone_ok && same_lambda_ok && width_asserted && min_maslov_blowup >= 2;
    AdmissibilityVerdict {
        monotone_ok,
        same_lambda_ok,
        width_asserted,
        min_maslov_blowup,
        admissible,
        diagnostics,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::CriticalPoint;
    use crate::ratio;

    fn manifold(n: u32, lambda_pi: Rat, width: bool) -> ManifoldData {
        ManifoldData::new(n, lambda_pi, width).unwrap()
    }

    fn lagrangian(name: &str, n: u32, classes: Vec<DiskClass>) -> LagrangianData {
        LagrangianData {
            name: name.to_string(),
            dim: n,
            critical_points: alloc::vec![CriticalPoint::new("p0", 0)],
            classes,
            morse_counts: Vec::new(),
            quantum_counts: Vec::new(),
            betti_mod2: None,
        }
    }

    #[test]
    fn clifford_weight_is_one_third() {
        assert_eq!(monotone_weight(&manifold(2, rat(6), true)), ratio(1, 3));
    }

    #[test]
    fn projective_space_weights() {
        for n in 2..=10 {
            let m = manifold(n, rat(2 * (i64::from(n) + 1)), true);
            assert_eq!(
                monotone_weight(&m),
                ratio(i64::from(n) - 1, i64::from(n) + 1)
            );
        }
    }

    #[test]
    fn direct_weight_formula() {
        assert_eq!(monotone_weight(&manifold(2, rat(2), true)), rat(1));
    }

    #[test]
    fn exceptional_line_is_monotone() {
        let m = manifold(3, ratio(8, 3), true);
        let p = BlowupParams::monotone(&m);
        let line = &p.exceptional_line;
        assert_eq!(rat(line.maslov), m.lambda_pi * line.area_over_pi);
        assert_eq!(line.exc_mult, -1);
    }

    #[test]
    fn transform_at_multiplicity_zero_is_identity() {
        let m = manifold(2, rat(6), true);
        let p = BlowupParams::monotone(&m);
        let a = DiskClass::base("A", 2, ratio(1, 3), true);
        let t = proper_transform_class(&a, 0, &p).unwrap();
        assert_eq!(t.maslov, 2);
        assert_eq!(t.area_over_pi, ratio(1, 3));
        assert!(t.through_point);
        assert_eq!(t.exc_mult, 0);
    }

    #[test]
    fn projective_plane_generator_drops_to_one() {
        let m = manifold(2, rat(6), true);
        let p = BlowupParams::monotone(&m);
        let g = DiskClass::base("G", 3, ratio(1, 2), false);
        let t = proper_transform_class(&g, 1, &p).unwrap();
        assert_eq!(t.maslov, 1);
    }

    #[test]
    fn clifford_maslov_four_class_transforms_to_two() {
        let m = manifold(2, rat(6), true);
        let p = BlowupParams::monotone(&m);
        let a = DiskClass::base("A1+A2", 4, ratio(2, 3), true);
        let t = proper_transform_class(&a, 1, &p).unwrap();
        assert_eq!(t.maslov, 2);
        assert_eq!(t.area_over_pi, ratio(1, 3));
        assert!(!t.through_point);
        assert_eq!(t.exc_mult, 1);
    }

    #[test]
    fn negative_multiplicity_is_refused() {
        let m = manifold(2, rat(6), true);
        let p = BlowupParams::monotone(&m);
        let a = DiskClass::base("A", 2, ratio(1, 3), false);
        assert_eq!(
            proper_transform_class(&a, -1, &p).unwrap_err(),
            BlowupError::NegativeMultiplicity
        );
    }

    #[test]
    fn min_maslov_after_blowup() {
        let m2 = manifold(2, rat(6), true);
        let p2 = BlowupParams::monotone(&m2);
        let rp2 = lagrangian(
            "rp2",
            2,
            alloc::vec![DiskClass::base("G", 3, ratio(1, 2), false)],
        );
        assert_eq!(blowup_min_maslov(&rp2, &p2), 1);

        let cliff = lagrangian(
            "cliff",
            2,
            alloc::vec![DiskClass::base("A0", 2, ratio(1, 3), false)],
        );
        assert_eq!(blowup_min_maslov(&cliff, &p2), 2);

        let m3 = manifold(3, rat(2), true);
        let p3 = BlowupParams::monotone(&m3);
        let l = lagrangian("l", 3, alloc::vec![DiskClass::base("A", 4, rat(2), false)]);
        assert_eq!(blowup_min_maslov(&l, &p3), 4);
    }

    #[test]
    fn monotonicity_is_preserved_by_transforms() {
        // Random exact samples of the base relation mu = lambda * area.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let n = rng.gen_range(2..=6u32);
            let lambda = ratio(rng.gen_range(1..=12), rng.gen_range(1..=4));
            let m = manifold(n, lambda, true);
            let p = BlowupParams::monotone(&m);
            let mu = rng.gen_range(1..=20i64) * 2;
            let a = DiskClass::base("A", mu, rat(mu) / lambda, false);
            let mult = rng.gen_range(0..=4i64);
            let t = proper_transform_class(&a, mult, &p).unwrap();
            assert_eq!(rat(t.maslov), lambda * t.area_over_pi);
        }
    }

    #[test]
    fn blowup_min_maslov_divides_both_generators() {
        let m = manifold(2, rat(6), true);
        let p = BlowupParams::monotone(&m);
        let l = lagrangian(
            "l",
            2,
            alloc::vec![
                DiskClass::base("A", 6, rat(1), false),
                DiskClass::base("B", 4, ratio(2, 3), false),
            ],
        );
        let g = blowup_min_maslov(&l, &p);
        assert_eq!(6 % g, 0);
        assert_eq!(4 % g, 0);
        assert_eq!(p.maslov_shift() % i64::from(g), 0);
    }

    #[test]
    fn weight_identity_is_exact() {
        for (n, lam) in [(2u32, ratio(7, 2)), (4, rat(5)), (6, ratio(13, 3))] {
            let m = manifold(n, lam, true);
            let rho_sq = monotone_weight(&m);
            assert_eq!(rat(2 * (i64::from(n) - 1)) - lam * rho_sq, rat(0));
        }
    }

    #[test]
    fn clifford_collection_is_admissible() {
        let m = manifold(2, rat(6), true);
        let cliff = lagrangian(
            "cliff",
            2,
            alloc::vec![
                DiskClass::base("A0", 2, ratio(1, 3), false),
                DiskClass::base("A1", 2, ratio(1, 3), false),
            ],
        );
        let verdict = check_admissible(&m, &[&cliff]);
        assert!(verdict.admissible);
        assert_eq!(verdict.min_maslov_blowup, 2);
    }

    #[test]
    fn projective_plane_is_inadmissible() {
        let m = manifold(2, rat(6), true);
        let rp2 = lagrangian(
            "rp2",
            2,
            alloc::vec![DiskClass::base("G", 3, ratio(1, 2), false)],
        );
        let verdict = check_admissible(&m, &[&rp2]);
        assert!(!verdict.admissible);
        assert_eq!(verdict.min_maslov_blowup, 1);
        assert!(verdict
            .diagnostics
            .iter()
            .any(|d| d == "minimal Maslov in blow-up = 1 < 2"));
    }

    #[test]
    fn unasserted_width_blocks_admissibility() {
        let m = manifold(2, rat(6), false);
        let cliff = lagrangian(
            "cliff",
            2,
            alloc::vec![DiskClass::base("A0", 2, ratio(1, 3), false)],
        );
        let verdict = check_admissible(&m, &[&cliff]);
        assert!(!verdict.admissible);
        assert!(!verdict.width_asserted);
    }

    #[test]
    fn foreign_constants_are_flagged() {
        let m = manifold(2, rat(6), true);
        // Internally monotone with constant 4, not the manifold's 6.
        let other = lagrangian(
            "other",
            2,
            alloc::vec![DiskClass::base("B", 2, ratio(1, 2), false)],
        );
        let verdict = check_admissible(&m, &[&other]);
        assert!(verdict.monotone_ok);
        assert!(!verdict.same_lambda_ok);
        assert!(!verdict.admissible);
    }
}
