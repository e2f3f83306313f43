//! Standard small example algebras.
//!
//! These are the instances used throughout the test suites and bundled as
//! the example corpus: scalar families over the Heisenberg bracket, sl2, a
//! two-dimensional non-commutative Leibniz product, a (1|1)-dimensional
//! graded instance, and sl2 with identity twists as a third-kind structure.

use crate::algebra::{BracketTensor, EndoSets, Grading, Kind, LabelSet, MultiAlgebra};
use crate::field::FieldSpec;

/// Labels "h", "k", ... for small label counts.
pub fn standard_labels(count: usize) -> LabelSet {
    let names = ["h", "k", "m", "n"];
    LabelSet::new(names[..count].iter().map(|s| s.to_string()).collect())
        .expect("nonempty distinct names")
}

/// Heisenberg bracket on basis (e0, e1, e2): e0 * e1 = e2.
pub fn heisenberg_tensor(field: FieldSpec, scale: i64) -> BracketTensor {
    let mut t = BracketTensor::zero(3, field);
    t.set(0, 1, 2, field.from_i64(scale));
    t.set(1, 0, 2, field.from_i64(-scale));
    t
}

/// One Heisenberg bracket per scale, labels "h", "k", ...
pub fn heisenberg_scaled(field: FieldSpec, scales: &[i64]) -> MultiAlgebra {
    let brackets = scales.iter().map(|&s| heisenberg_tensor(field, s)).collect();
    MultiAlgebra::new(
        field,
        3,
        standard_labels(scales.len()),
        Kind::First,
        brackets,
        None,
        None,
    )
    .expect("well-formed instance")
}

/// sl2 bracket on basis (e, h, f): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
pub fn sl2_tensor(field: FieldSpec, scale: i64) -> BracketTensor {
    let mut t = BracketTensor::zero(3, field);
    t.set(0, 2, 1, field.from_i64(scale));
    t.set(2, 0, 1, field.from_i64(-scale));
    t.set(1, 0, 0, field.from_i64(2 * scale));
    t.set(0, 1, 0, field.from_i64(-2 * scale));
    t.set(1, 2, 2, field.from_i64(-2 * scale));
    t.set(2, 1, 2, field.from_i64(2 * scale));
    t
}

pub fn sl2_scaled(field: FieldSpec, scales: &[i64]) -> MultiAlgebra {
    let brackets = scales.iter().map(|&s| sl2_tensor(field, s)).collect();
    MultiAlgebra::new(
        field,
        3,
        standard_labels(scales.len()),
        Kind::First,
        brackets,
        None,
        None,
    )
    .expect("well-formed instance")
}

/// Two-dimensional Leibniz product on basis (a, b): a * a = b.
pub fn leibniz2_tensor(field: FieldSpec, scale: i64) -> BracketTensor {
    let mut t = BracketTensor::zero(2, field);
    t.set(0, 0, 1, field.from_i64(scale));
    t
}

pub fn leibniz2_scaled(field: FieldSpec, scales: &[i64]) -> MultiAlgebra {
    let brackets = scales.iter().map(|&s| leibniz2_tensor(field, s)).collect();
    MultiAlgebra::new(
        field,
        2,
        standard_labels(scales.len()),
        Kind::Second,
        brackets,
        None,
        None,
    )
    .expect("well-formed instance")
}

/// (1|1)-dimensional graded instance on basis (e0 even, e1 odd):
/// e1 * e1 = e0. The odd square is allowed by the graded sign rule.
pub fn super11_tensor(field: FieldSpec, scale: i64) -> BracketTensor {
    let mut t = BracketTensor::zero(2, field);
    t.set(1, 1, 0, field.from_i64(scale));
    t
}

pub fn super11_scaled(field: FieldSpec, scales: &[i64]) -> MultiAlgebra {
    let brackets = scales.iter().map(|&s| super11_tensor(field, s)).collect();
    MultiAlgebra::new(
        field,
        2,
        standard_labels(scales.len()),
        Kind::SuperFirst,
        brackets,
        Some(Grading::from_bits(&[0, 1]).expect("bits")),
        None,
    )
    .expect("well-formed instance")
}

/// sl2 as a third-kind structure with a single label and all three
/// endomorphism sets equal to the identity; the twisted identity then
/// reduces to the derivation form of the classical cyclic identity.
pub fn sl2_identity_twisted(field: FieldSpec) -> MultiAlgebra {
    MultiAlgebra::new(
        field,
        3,
        standard_labels(1),
        Kind::Third,
        vec![sl2_tensor(field, 1)],
        None,
        Some(EndoSets::identity(3, field)),
    )
    .expect("well-formed instance")
}
