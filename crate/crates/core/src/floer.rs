//! Two-Lagrangian Floer complexes over Novikov coefficients with rational
//! area exponents, and the blow-up transfer for strips.
//!
//! Generators are intersection points, kept ungraded; only the total rank of
//! the homology is reported. The differential counts index-1 strips weighted
//! by `T^{ω/π}`. Strips of Maslov–Viterbo index 2n−1 marked through the
//! blown-up point are the only ones that can change the differential after
//! the blow-up: each descends to an index-1 strip with area reduced by ρ².

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{rank_over_fraction_field, NovikovScalar, ScalarMatrix};
use crate::blowup::{AdmissibilityVerdict, BlowupParams};
use crate::model::{DiskClass, FloerPairData, TrajectoryCount};
use crate::rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FloerError {
    /// The assembled differential does not square to zero.
    NotAComplex(String),
    /// A strip count references a class whose index is neither 1 nor the
    /// transfer index 2n−1.
    BadIndex(String),
    /// The collection fails the admissibility conditions for the blow-up.
    NotAdmissible(Vec<String>),
    /// Data violating a positivity or assertion requirement.
    InputError(String),
    /// Markings inconsistent with a generic blown-up point.
    InvalidMarking(String),
}

impl fmt::Display for FloerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FloerError::NotAComplex(w) => write!(f, "not a complex: {}", w),
            FloerError::BadIndex(w) => write!(f, "bad strip index: {}", w),
            FloerError::NotAdmissible(ds) => {
                write!(f, "not admissible")?;
                for d in ds {
                    write!(f, "; {}", d)?;
                }
                Ok(())
            }
            FloerError::InputError(w) => write!(f, "input error: {}", w),
            FloerError::InvalidMarking(w) => write!(f, "invalid marking: {}", w),
        }
    }
}

/// Ungraded Floer complex: named intersection points and a differential over
/// Novikov scalars with rational exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloerComplex {
    generators: Vec<String>,
    differential: ScalarMatrix,
}

impl FloerComplex {
    pub fn new(generators: Vec<String>, differential: ScalarMatrix) -> Result<Self, FloerError> {
        let n = generators.len();
        assert_eq!(differential.rows(), n, "differential must be square");
        assert_eq!(differential.cols(), n, "differential must be square");
        if !differential.mul(&differential).is_zero() {
            return Err(FloerError::NotAComplex(
                "differential squared is nonzero".to_string(),
            ));
        }
        Ok(FloerComplex {
            generators,
            differential,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn differential(&self) -> &ScalarMatrix {
        &self.differential
    }

    /// ⟨∂(from), to⟩.
    pub fn entry(&self, from: &str, to: &str) -> &NovikovScalar {
        let j = self.position(from).expect("unknown generator");
        let i = self.position(to).expect("unknown generator");
        self.differential.get(i, j)
    }

    fn position(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }
}

fn point_index(pair: &FloerPairData, name: &str) -> Result<usize, FloerError> {
    pair.intersection_points
        .iter()
        .position(|p| p == name)
        .ok_or_else(|| {
            FloerError::InputError(alloc::format!("unknown intersection point '{}'", name))
        })
}

fn strip_class<'a>(
    pair: &'a FloerPairData,
    count: &TrajectoryCount,
) -> Result<&'a DiskClass, FloerError> {
    let name = count
        .class_name
        .as_deref()
        .ok_or_else(|| FloerError::InputError("strip count without a class".to_string()))?;
    pair.strip_classes
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| FloerError::InputError(alloc::format!("unknown strip class '{}'", name)))
}

/// Assembles the Floer complex of a transverse pair. Index-1 strip counts
/// feed the differential at exponent ω/π mod 2; counts on classes of index
/// 2n−1 are transfer marks consumed only by [`blowup_floer_complex`]; any
/// other index is rejected.
pub fn assemble_floer_complex(
    pair: &FloerPairData,
    half_dim: u32,
) -> Result<FloerComplex, FloerError> {
    if !pair.min_maslov_assertion {
        return Err(FloerError::InputError(
            "minimal Maslov assertion not set for the pair".to_string(),
        ));
    }
    let transfer_index = 2 * i64::from(half_dim) - 1;
    let n = pair.intersection_points.len();
    let mut matrix = ScalarMatrix::zero(n, n);
    for count in &pair.strip_counts {
        let class = strip_class(pair, count)?;
        if class.maslov == transfer_index && transfer_index != 1 {
            continue;
        }
        if class.maslov != 1 {
            return Err(FloerError::BadIndex(alloc::format!(
                "strip class '{}' has Maslov-Viterbo index {}",
                class.name,
                class.maslov
            )));
        }
        if count.count % 2 == 0 {
            continue;
        }
        let from = point_index(pair, &count.from)?;
        let to = point_index(pair, &count.to)?;
        let term = NovikovScalar::monomial(class.area_over_pi);
        let sum = matrix.get(to, from).add(&term);
        matrix.set(to, from, sum);
    }
    FloerComplex::new(pair.intersection_points.clone(), matrix)
}

/// Total homology rank: generators minus twice the rank of the differential,
/// over the fraction field of the exponent group ring.
pub fn floer_homology(c: &FloerComplex) -> usize {
    c.generators.len() - 2 * rank_over_fraction_field(c.differential())
}

/// Transfers the Floer complex to the monotone one-point blow-up. Base
/// index-1 strips persist unchanged; every marked strip class of index 2n−1
/// contributes its counts again at index 1 with area reduced by ρ², which
/// must stay strictly positive.
pub fn blowup_floer_complex(
    pair: &FloerPairData,
    params: &BlowupParams,
    verdict: &AdmissibilityVerdict,
) -> Result<FloerComplex, FloerError> {
    if !verdict.admissible {
        return Err(FloerError::NotAdmissible(verdict.diagnostics.clone()));
    }
    let transfer_index = 2 * i64::from(params.half_dim) - 1;

    for class in &pair.strip_classes {
        if !class.through_point || class.maslov == transfer_index {
            continue;
        }
        let carries_counts = pair
            .strip_counts
            .iter()
            .any(|c| c.class_name.as_deref() == Some(class.name.as_str()) && c.count % 2 == 1);
        if carries_counts {
            return Err(FloerError::InvalidMarking(alloc::format!(
                "strip class '{}' of index {} is marked through the blown-up point but feeds the differential",
                class.name,
                class.maslov
            )));
        }
    }

    let base = assemble_floer_complex(pair, params.half_dim)?;
    let n = pair.intersection_points.len();
    let mut matrix = base.differential().clone();
    for count in &pair.strip_counts {
        let class = strip_class(pair, count)?;
        if class.maslov != transfer_index || !class.through_point {
            continue;
        }
        if count.count % 2 == 0 {
            continue;
        }
        let transformed_area = class.area_over_pi - params.rho_sq;
        if transformed_area <= rat(0) {
            return Err(FloerError::InputError(alloc::format!(
                "strip class '{}' would transform to area {} <= 0",
                class.name,
                transformed_area
            )));
        }
        let from = point_index(pair, &count.from)?;
        let to = point_index(pair, &count.to)?;
        let term = NovikovScalar::monomial(transformed_area);
        let sum = matrix.get(to, from).add(&term);
        matrix.set(to, from, sum);
    }
    let _ = n;
    FloerComplex::new(pair.intersection_points.clone(), matrix)
}
