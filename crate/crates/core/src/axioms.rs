//! Verifiers for the defining identities of all six structure kinds.
//!
//! Every check sweeps basis tuples and ordered label pairs — multilinearity
//! makes basis sweeps complete — and reports the lexicographically least
//! failing tuple as a witness. A report never stops at the first failing
//! check; the full suite always runs.

use crate::algebra::{is_even_matrix, Element, Grading, Kind, MultiAlgebra, Parity};
use crate::error::Error;
use crate::field::Scalar;
use crate::linear::Matrix;
use crate::Result;

/// Names of the identity checks, as they appear in reports.
pub mod names {
    pub const GRADING: &str = "grading";
    pub const ANTI_SYMMETRY: &str = "anti_symmetry";
    pub const ALTERNATING: &str = "alternating";
    pub const JACOBI: &str = "jacobi";
    pub const LABEL_FLIP: &str = "label_flip";
    pub const JACOBI_LONG: &str = "jacobi_long";
    pub const ENDOS_EVEN: &str = "endos_even";
}

/// A concrete counterexample: the failing tuple together with both sides of
/// the violated identity, so it can be re-evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub labels: Vec<usize>,
    pub basis: Vec<usize>,
    pub endos: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl CheckResult {
    fn passed(name: &'static str) -> CheckResult {
        CheckResult {
            name,
            pass: true,
            witness: None,
        }
    }

    fn failed(name: &'static str, witness: Witness) -> CheckResult {
        CheckResult {
            name,
            pass: false,
            witness: Some(witness),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Also require zero diagonal products (even-diagonal for graded
    /// algebras). Over characteristic 2 plain anti-symmetry cannot see the
    /// difference; this opt-in check restores the stronger condition.
    pub strict_alternating: bool,
}

/// Runs the full identity suite for the algebra's kind.
pub fn verify(a: &MultiAlgebra) -> VerificationReport {
    verify_with(a, VerifyOptions::default())
}

pub fn verify_with(a: &MultiAlgebra, opts: VerifyOptions) -> VerificationReport {
    let mut checks = Vec::new();
    if a.kind().is_super() {
        checks.push(check_grading(a).expect("super kinds are graded by construction"));
    }
    if a.kind().is_first() {
        checks.push(check_antisymmetry(a));
        if opts.strict_alternating {
            checks.push(check_alternating(a));
        }
    }
    if a.kind() == Kind::SuperThird {
        checks.push(check_endos_even(a).expect("third kinds carry endo sets by construction"));
    }
    match a.kind() {
        Kind::First => {
            checks.push(check_jacobi_first(a));
            checks.push(check_long_jacobi_first(a));
        }
        Kind::SuperFirst => {
            checks.push(check_super_jacobi_first(a));
            checks.push(check_long_jacobi_first(a));
        }
        Kind::Second | Kind::SuperSecond => {
            let (main, flip) = check_jacobi_second(a);
            checks.push(main);
            checks.push(flip);
        }
        Kind::Third | Kind::SuperThird => {
            checks.push(check_jacobi_third(a).expect("third kinds carry endo sets by construction"));
        }
    }
    VerificationReport { checks }
}

fn sign_of(g: &Grading, b: usize, c: usize) -> bool {
    Grading::sign_flip(g.parity(b), g.parity(c))
}

fn apply_sign(e: Element, flip: bool) -> Element {
    if flip {
        e.neg()
    } else {
        e
    }
}

// --- per-instance evaluators -------------------------------------------------
// Each returns (lhs, rhs) of one identity instance; a check passes when the
// two sides agree on every swept tuple. Witness re-evaluation reuses these.

fn grading_instance(a: &MultiAlgebra, k: usize, i: usize, j: usize) -> (Element, Element) {
    let g = a.grading().expect("grading instance on graded algebra");
    let out = a.basis_product(k, i, j);
    let want = g.parity(i) + g.parity(j);
    // rhs = the part of the product inside the allowed parity block
    let rhs = Element::new(
        out.coeffs()
            .iter()
            .enumerate()
            .map(|(l, c)| {
                if g.parity(l) == want {
                    c.clone()
                } else {
                    c.field().zero()
                }
            })
            .collect(),
    );
    (out, rhs)
}

fn antisym_instance(a: &MultiAlgebra, k: usize, i: usize, j: usize) -> (Element, Element) {
    let lhs = a.basis_product(k, i, j);
    let swapped = a.basis_product(k, j, i);
    let rhs = match a.grading() {
        None => swapped.neg(),
        Some(g) => apply_sign(swapped.neg(), sign_of(g, i, j)),
    };
    (lhs, rhs)
}

fn alternating_instance(a: &MultiAlgebra, k: usize, i: usize) -> (Element, Element) {
    (a.basis_product(k, i, i), a.zero_element())
}

/// Cyclic mixed-label identity of the first kind:
/// [[x,y]_h, z]_k + [[y,z]_k, x]_h + [[z,x]_h, y]_k = 0.
fn jacobi_first_instance(
    a: &MultiAlgebra,
    h: usize,
    k: usize,
    i: usize,
    j: usize,
    m: usize,
) -> (Element, Element) {
    let (ei, ej, em) = (a.basis_element(i), a.basis_element(j), a.basis_element(m));
    let t1 = a.bracket_eval(k, &a.bracket_eval(h, &ei, &ej), &em);
    let t2 = a.bracket_eval(h, &a.bracket_eval(k, &ej, &em), &ei);
    let t3 = a.bracket_eval(k, &a.bracket_eval(h, &em, &ei), &ej);
    (t1.add(&t2).add(&t3), a.zero_element())
}

/// Graded first-kind identity:
/// [[x,y]_h, z]_k = [x, [y,z]_k]_h + (-1)^{bc} [[x,z]_h, y]_k.
fn super_jacobi_first_instance(
    a: &MultiAlgebra,
    h: usize,
    k: usize,
    i: usize,
    j: usize,
    m: usize,
) -> (Element, Element) {
    let g = a.grading().expect("graded kind");
    let (ei, ej, em) = (a.basis_element(i), a.basis_element(j), a.basis_element(m));
    let lhs = a.bracket_eval(k, &a.bracket_eval(h, &ei, &ej), &em);
    let r1 = a.bracket_eval(h, &ei, &a.bracket_eval(k, &ej, &em));
    let r2 = a.bracket_eval(k, &a.bracket_eval(h, &ei, &em), &ej);
    (lhs, r1.add(&apply_sign(r2, sign_of(g, j, m))))
}

/// Six-term symmetrized identity of the first kind; the graded form carries
/// the parity prefactors on the three cyclic rotations.
fn long_jacobi_instance(
    a: &MultiAlgebra,
    h: usize,
    k: usize,
    i: usize,
    j: usize,
    m: usize,
) -> (Element, Element) {
    let (ei, ej, em) = (a.basis_element(i), a.basis_element(j), a.basis_element(m));
    let rot = |inner: usize, outer: usize, x: &Element, y: &Element, z: &Element| {
        a.bracket_eval(outer, &a.bracket_eval(inner, x, y), z)
    };
    let (s_ga, s_ab, s_bg) = match a.grading() {
        None => (false, false, false),
        Some(g) => (sign_of(g, m, i), sign_of(g, i, j), sign_of(g, j, m)),
    };
    let mut acc = apply_sign(rot(h, k, &ei, &ej, &em), s_ga);
    acc = acc.add(&apply_sign(rot(h, k, &ej, &em, &ei), s_ab));
    acc = acc.add(&apply_sign(rot(h, k, &em, &ei, &ej), s_bg));
    acc = acc.add(&apply_sign(rot(k, h, &ei, &ej, &em), s_ga));
    acc = acc.add(&apply_sign(rot(k, h, &ej, &em, &ei), s_ab));
    acc = acc.add(&apply_sign(rot(k, h, &em, &ei, &ej), s_bg));
    (acc, a.zero_element())
}

/// Second-kind identity. Ungraded:
/// <<x,y>_k, z>_h = <x, <y,z>_h>_k + <<x,z>_h, y>_k.
/// Graded: <<x,y>_h, z>_k = <x, <y,z>_k>_h + (-1)^{bc} <<x,z>_k, y>_h.
fn jacobi_second_instance(
    a: &MultiAlgebra,
    h: usize,
    k: usize,
    i: usize,
    j: usize,
    m: usize,
) -> (Element, Element) {
    let (ei, ej, em) = (a.basis_element(i), a.basis_element(j), a.basis_element(m));
    match a.grading() {
        None => {
            let lhs = a.bracket_eval(h, &a.bracket_eval(k, &ei, &ej), &em);
            let r1 = a.bracket_eval(k, &ei, &a.bracket_eval(h, &ej, &em));
            let r2 = a.bracket_eval(k, &a.bracket_eval(h, &ei, &em), &ej);
            (lhs, r1.add(&r2))
        }
        Some(g) => {
            let lhs = a.bracket_eval(k, &a.bracket_eval(h, &ei, &ej), &em);
            let r1 = a.bracket_eval(h, &ei, &a.bracket_eval(k, &ej, &em));
            let r2 = a.bracket_eval(h, &a.bracket_eval(k, &ei, &em), &ej);
            (lhs, r1.add(&apply_sign(r2, sign_of(g, j, m))))
        }
    }
}

/// Label-flip identity: <<x,y>_k, z>_h = <<x,y>_h, z>_k.
fn flip_instance(
    a: &MultiAlgebra,
    h: usize,
    k: usize,
    i: usize,
    j: usize,
    m: usize,
) -> (Element, Element) {
    let (ei, ej, em) = (a.basis_element(i), a.basis_element(j), a.basis_element(m));
    let lhs = a.bracket_eval(h, &a.bracket_eval(k, &ei, &ej), &em);
    let rhs = a.bracket_eval(k, &a.bracket_eval(h, &ei, &ej), &em);
    (lhs, rhs)
}

/// Endomorphism-twisted identity of the third kind:
/// (x o_h y) o_k s(z) = so(x) o_h (y o_k z) + (x o_k z) o_h sv(y),
/// with the graded form inserting (-1)^{bc} on the last term.
fn jacobi_third_instance(
    a: &MultiAlgebra,
    h: usize,
    k: usize,
    i: usize,
    j: usize,
    m: usize,
    es: usize,
    er: usize,
    ec: usize,
) -> (Element, Element) {
    let endos = a.endos().expect("third kinds carry endo sets");
    let (ei, ej, em) = (a.basis_element(i), a.basis_element(j), a.basis_element(m));
    let s = &endos.sigma[es];
    let so = &endos.sigma_ring[er];
    let sv = &endos.sigma_check[ec];
    let sz = Element::new(s.apply(em.coeffs()));
    let sox = Element::new(so.apply(ei.coeffs()));
    let svy = Element::new(sv.apply(ej.coeffs()));
    let lhs = a.bracket_eval(k, &a.bracket_eval(h, &ei, &ej), &sz);
    let r1 = a.bracket_eval(h, &sox, &a.bracket_eval(k, &ej, &em));
    let mut r2 = a.bracket_eval(h, &a.bracket_eval(k, &ei, &em), &svy);
    if let Some(g) = a.grading() {
        r2 = apply_sign(r2, sign_of(g, j, m));
    }
    (lhs, r1.add(&r2))
}

// --- sweeps ------------------------------------------------------------------

fn sweep_labels_triples<F>(a: &MultiAlgebra, name: &'static str, eval: F) -> CheckResult
where
    F: Fn(usize, usize, usize, usize, usize) -> (Element, Element),
{
    let s = a.labels().len();
    let n = a.dim();
    for h in 0..s {
        for k in 0..s {
            for i in 0..n {
                for j in 0..n {
                    for m in 0..n {
                        let (lhs, rhs) = eval(h, k, i, j, m);
                        if lhs != rhs {
                            return CheckResult::failed(
                                name,
                                Witness {
                                    labels: vec![h, k],
                                    basis: vec![i, j, m],
                                    endos: vec![],
                                    lhs: lhs.into_coeffs(),
                                    rhs: rhs.into_coeffs(),
                                },
                            );
                        }
                    }
                }
            }
        }
    }
    CheckResult::passed(name)
}

/// Grading closure of every bracket: products of homogeneous basis vectors
/// land in the parity-sum block.
pub fn check_grading(a: &MultiAlgebra) -> Result<CheckResult> {
    if a.grading().is_none() {
        return Err(Error::NotGraded);
    }
    let n = a.dim();
    for k in 0..a.labels().len() {
        for i in 0..n {
            for j in 0..n {
                let (lhs, rhs) = grading_instance(a, k, i, j);
                if lhs != rhs {
                    return Ok(CheckResult::failed(
                        names::GRADING,
                        Witness {
                            labels: vec![k],
                            basis: vec![i, j],
                            endos: vec![],
                            lhs: lhs.into_coeffs(),
                            rhs: rhs.into_coeffs(),
                        },
                    ));
                }
            }
        }
    }
    Ok(CheckResult::passed(names::GRADING))
}

/// Anti-symmetry of every bracket; graded algebras use the parity sign.
pub fn check_antisymmetry(a: &MultiAlgebra) -> CheckResult {
    let n = a.dim();
    for k in 0..a.labels().len() {
        for i in 0..n {
            for j in i..n {
                let (lhs, rhs) = antisym_instance(a, k, i, j);
                if lhs != rhs {
                    return CheckResult::failed(
                        names::ANTI_SYMMETRY,
                        Witness {
                            labels: vec![k],
                            basis: vec![i, j],
                            endos: vec![],
                            lhs: lhs.into_coeffs(),
                            rhs: rhs.into_coeffs(),
                        },
                    );
                }
            }
        }
    }
    CheckResult::passed(names::ANTI_SYMMETRY)
}

/// Strict alternating condition x*x = 0 on basis vectors; for graded
/// algebras only even basis vectors are constrained (odd squares are
/// genuinely allowed).
pub fn check_alternating(a: &MultiAlgebra) -> CheckResult {
    let n = a.dim();
    for k in 0..a.labels().len() {
        for i in 0..n {
            if let Some(g) = a.grading() {
                if g.parity(i) == Parity::Odd {
                    continue;
                }
            }
            let (lhs, rhs) = alternating_instance(a, k, i);
            if lhs != rhs {
                return CheckResult::failed(
                    names::ALTERNATING,
                    Witness {
                        labels: vec![k],
                        basis: vec![i],
                        endos: vec![],
                        lhs: lhs.into_coeffs(),
                        rhs: rhs.into_coeffs(),
                    },
                );
            }
        }
    }
    CheckResult::passed(names::ALTERNATING)
}

/// First-kind mixed-label cyclic identity over all ordered label pairs.
pub fn check_jacobi_first(a: &MultiAlgebra) -> CheckResult {
    sweep_labels_triples(a, names::JACOBI, |h, k, i, j, m| {
        jacobi_first_instance(a, h, k, i, j, m)
    })
}

/// Graded first-kind identity over all ordered label pairs.
pub fn check_super_jacobi_first(a: &MultiAlgebra) -> CheckResult {
    sweep_labels_triples(a, names::JACOBI, |h, k, i, j, m| {
        super_jacobi_first_instance(a, h, k, i, j, m)
    })
}

/// Six-term symmetrized first-kind identity, swept over unordered label
/// pairs (it is symmetric in the pair).
pub fn check_long_jacobi_first(a: &MultiAlgebra) -> CheckResult {
    let s = a.labels().len();
    let n = a.dim();
    for h in 0..s {
        for k in h..s {
            for i in 0..n {
                for j in 0..n {
                    for m in 0..n {
                        let (lhs, rhs) = long_jacobi_instance(a, h, k, i, j, m);
                        if lhs != rhs {
                            return CheckResult::failed(
                                names::JACOBI_LONG,
                                Witness {
                                    labels: vec![h, k],
                                    basis: vec![i, j, m],
                                    endos: vec![],
                                    lhs: lhs.into_coeffs(),
                                    rhs: rhs.into_coeffs(),
                                },
                            );
                        }
                    }
                }
            }
        }
    }
    CheckResult::passed(names::JACOBI_LONG)
}

/// Second-kind identity plus the label-flip identity, each swept over all
/// ordered label pairs. With a single label the first entry is exactly the
/// Leibniz identity of the lone bracket.
pub fn check_jacobi_second(a: &MultiAlgebra) -> (CheckResult, CheckResult) {
    let main = sweep_labels_triples(a, names::JACOBI, |h, k, i, j, m| {
        jacobi_second_instance(a, h, k, i, j, m)
    });
    let flip = sweep_labels_triples(a, names::LABEL_FLIP, |h, k, i, j, m| {
        flip_instance(a, h, k, i, j, m)
    });
    (main, flip)
}

/// Twisted third-kind identity over all ordered label pairs and all
/// endomorphism triples.
pub fn check_jacobi_third(a: &MultiAlgebra) -> Result<CheckResult> {
    let endos = a.endos().ok_or(Error::MissingEndoSets)?;
    let s = a.labels().len();
    let n = a.dim();
    for h in 0..s {
        for k in 0..s {
            for i in 0..n {
                for j in 0..n {
                    for m in 0..n {
                        for es in 0..endos.sigma.len() {
                            for er in 0..endos.sigma_ring.len() {
                                for ec in 0..endos.sigma_check.len() {
                                    let (lhs, rhs) =
                                        jacobi_third_instance(a, h, k, i, j, m, es, er, ec);
                                    if lhs != rhs {
                                        return Ok(CheckResult::failed(
                                            names::JACOBI,
                                            Witness {
                                                labels: vec![h, k],
                                                basis: vec![i, j, m],
                                                endos: vec![es, er, ec],
                                                lhs: lhs.into_coeffs(),
                                                rhs: rhs.into_coeffs(),
                                            },
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(CheckResult::passed(names::JACOBI))
}

/// Every endomorphism of a graded third-kind algebra must preserve parity.
pub fn check_endos_even(a: &MultiAlgebra) -> Result<CheckResult> {
    let endos = a.endos().ok_or(Error::MissingEndoSets)?;
    let g = a.grading().ok_or(Error::NotGraded)?;
    for (set_idx, set) in [&endos.sigma, &endos.sigma_ring, &endos.sigma_check]
        .into_iter()
        .enumerate()
    {
        for (m_idx, m) in set.iter().enumerate() {
            if !is_even_matrix(m, g) {
                // first violating entry, for the witness
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        if g.parity(r) != g.parity(c) && !m.get(r, c).is_zero() {
                            return Ok(CheckResult::failed(
                                names::ENDOS_EVEN,
                                Witness {
                                    labels: vec![],
                                    basis: vec![r, c],
                                    endos: vec![set_idx, m_idx],
                                    lhs: vec![m.get(r, c).clone()],
                                    rhs: vec![a.field().zero()],
                                },
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(CheckResult::passed(names::ENDOS_EVEN))
}

/// Cyclic sigma-twisted identity for a single anti-symmetric bracket:
/// [[x,y], s(z)] + [[y,z], s(x)] + [[z,x], s(y)] = 0.
pub fn check_hom_lie(a: &MultiAlgebra, sigma: &Matrix) -> Result<CheckResult> {
    if a.labels().len() != 1 || a.grading().is_some() {
        return Err(Error::KindMismatch(
            "the twisted cyclic check needs a single-label ungraded algebra".into(),
        ));
    }
    if sigma.rows() != a.dim() || sigma.cols() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} twist on a dim-{} algebra",
            sigma.rows(),
            sigma.cols(),
            a.dim()
        )));
    }
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                let (ei, ej, em) = (a.basis_element(i), a.basis_element(j), a.basis_element(m));
                let tw = |x: &Element| Element::new(sigma.apply(x.coeffs()));
                let t1 = a.bracket_eval(0, &a.bracket_eval(0, &ei, &ej), &tw(&em));
                let t2 = a.bracket_eval(0, &a.bracket_eval(0, &ej, &em), &tw(&ei));
                let t3 = a.bracket_eval(0, &a.bracket_eval(0, &em, &ei), &tw(&ej));
                let lhs = t1.add(&t2).add(&t3);
                if !lhs.is_zero() {
                    return Ok(CheckResult::failed(
                        names::JACOBI,
                        Witness {
                            labels: vec![0, 0],
                            basis: vec![i, j, m],
                            endos: vec![],
                            lhs: lhs.into_coeffs(),
                            rhs: a.zero_element().into_coeffs(),
                        },
                    ));
                }
            }
        }
    }
    Ok(CheckResult::passed(names::JACOBI))
}

/// Re-evaluates the identity instance named by a witness. Returns true when
/// the recomputed sides match the stored ones and still disagree, i.e. the
/// witness is sound.
pub fn recheck_witness(a: &MultiAlgebra, name: &str, w: &Witness) -> bool {
    let (lhs, rhs): (Vec<Scalar>, Vec<Scalar>) = match name {
        names::GRADING => {
            let (l, r) = grading_instance(a, w.labels[0], w.basis[0], w.basis[1]);
            (l.into_coeffs(), r.into_coeffs())
        }
        names::ANTI_SYMMETRY => {
            let (l, r) = antisym_instance(a, w.labels[0], w.basis[0], w.basis[1]);
            (l.into_coeffs(), r.into_coeffs())
        }
        names::ALTERNATING => {
            let (l, r) = alternating_instance(a, w.labels[0], w.basis[0]);
            (l.into_coeffs(), r.into_coeffs())
        }
        names::JACOBI => {
            let (h, k) = (w.labels[0], w.labels[1]);
            let (i, j, m) = (w.basis[0], w.basis[1], w.basis[2]);
            let (l, r) = match a.kind() {
                Kind::First => jacobi_first_instance(a, h, k, i, j, m),
                Kind::SuperFirst => super_jacobi_first_instance(a, h, k, i, j, m),
                Kind::Second | Kind::SuperSecond => jacobi_second_instance(a, h, k, i, j, m),
                Kind::Third | Kind::SuperThird => {
                    jacobi_third_instance(a, h, k, i, j, m, w.endos[0], w.endos[1], w.endos[2])
                }
            };
            (l.into_coeffs(), r.into_coeffs())
        }
        names::LABEL_FLIP => {
            let (l, r) = flip_instance(a, w.labels[0], w.labels[1], w.basis[0], w.basis[1], w.basis[2]);
            (l.into_coeffs(), r.into_coeffs())
        }
        names::JACOBI_LONG => {
            let (l, r) = long_jacobi_instance(a, w.labels[0], w.labels[1], w.basis[0], w.basis[1], w.basis[2]);
            (l.into_coeffs(), r.into_coeffs())
        }
        names::ENDOS_EVEN => {
            let endos = match a.endos() {
                Some(e) => e,
                None => return false,
            };
            let set = match w.endos[0] {
                0 => &endos.sigma,
                1 => &endos.sigma_ring,
                _ => &endos.sigma_check,
            };
            let entry = set[w.endos[1]].get(w.basis[0], w.basis[1]).clone();
            (vec![entry], vec![a.field().zero()])
        }
        _ => return false,
    };
    lhs == w.lhs && rhs == w.rhs && lhs != rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BracketTensor, EndoSets, LabelSet};
    use crate::field::FieldSpec;
    use crate::instances::{
        heisenberg_scaled as h3, leibniz2_scaled as leibniz2, sl2_identity_twisted as sl2_third,
        sl2_scaled, sl2_tensor as sl2, super11_scaled as super11,
    };

    fn labels(names: &[&str]) -> LabelSet {
        LabelSet::new(names.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    #[test]
    fn zero_algebras_pass_everything() {
        let q = FieldSpec::Rationals;
        let g = || Some(Grading::from_bits(&[0, 1]).unwrap());
        for kind in Kind::ALL {
            let grading = kind.is_super().then(|| g().unwrap());
            let a = MultiAlgebra::zero_algebra(q, 2, labels(&["h", "k"]), kind, grading).unwrap();
            let report = verify(&a);
            assert!(report.all_pass(), "{kind}: {:?}", report.first_failure());
        }
    }

    #[test]
    fn hand_built_instances_pass() {
        let q = FieldSpec::Rationals;
        let f5 = FieldSpec::prime(5).unwrap();
        assert!(verify(&h3(q, &[1, 2])).all_pass());
        assert!(verify(&sl2_scaled(f5, &[1, 2])).all_pass());
        assert!(verify(&leibniz2(q, &[1, 2])).all_pass());
        assert!(verify(&super11(q, &[1, 2])).all_pass());
        assert!(verify(&sl2_third(f5)).all_pass());
    }

    #[test]
    fn corrupted_first_kind_fails_with_sound_witness() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = sl2_scaled(f5, &[1, 2]);
        // corrupt the k-tensor: e*f = e instead of the Cartan element
        let mut bad = a.bracket(1).clone();
        bad.set(0, 2, 0, f5.one());
        let corrupted = a.with_bracket(1, bad).unwrap();
        let report = verify(&corrupted);
        assert!(!report.all_pass());
        for c in &report.checks {
            if let Some(w) = &c.witness {
                assert!(recheck_witness(&corrupted, c.name, w), "{}", c.name);
                assert!(!recheck_witness(&a, c.name, w), "witness must not re-fail on the clean algebra");
            }
        }
    }

    #[test]
    fn grading_violation_is_caught() {
        let q = FieldSpec::Rationals;
        let a = super11(q, &[1, 2]);
        // inject e0 * e1 = e0: parity 0+1 = 1 but the output is even
        let mut bad = a.bracket(0).clone();
        bad.set(0, 1, 0, q.one());
        let corrupted = a.with_bracket(0, bad).unwrap();
        let report = verify(&corrupted);
        let grading = report.check(names::GRADING).unwrap();
        assert!(!grading.pass);
        let w = grading.witness.as_ref().unwrap();
        assert_eq!(w.basis, vec![0, 1]);
        assert!(recheck_witness(&corrupted, names::GRADING, w));
    }

    #[test]
    fn super_anti_symmetry_allows_odd_squares() {
        let q = FieldSpec::Rationals;
        let a = super11(q, &[1, 2]);
        assert!(check_antisymmetry(&a).pass);
        // and the strict alternating check does not constrain odd vectors
        assert!(check_alternating(&a).pass);
    }

    #[test]
    fn strict_alternating_over_char_two() {
        let f2 = FieldSpec::prime(2).unwrap();
        // x*x = x is symmetric, hence anti-symmetric over F_2, but not alternating
        let mut t = BracketTensor::zero(1, f2);
        t.set(0, 0, 0, f2.one());
        let a = MultiAlgebra::new(f2, 1, labels(&["h"]), Kind::First, vec![t], None, None).unwrap();
        assert!(check_antisymmetry(&a).pass);
        let alt = check_alternating(&a);
        assert!(!alt.pass);
        assert!(recheck_witness(&a, names::ALTERNATING, alt.witness.as_ref().unwrap()));
        // the full suite with the option on reports the failure
        let report = verify_with(&a, VerifyOptions { strict_alternating: true });
        assert!(!report.all_pass());
    }

    #[test]
    fn second_kind_flip_and_main_identities() {
        let q = FieldSpec::Rationals;
        let a = leibniz2(q, &[1, 2]);
        let (main, flip) = check_jacobi_second(&a);
        assert!(main.pass && flip.pass);
        // corrupt: a*a = a breaks the identity
        let mut bad = a.bracket(1).clone();
        bad.set(0, 0, 0, q.one());
        bad.set(0, 0, 1, q.zero());
        let corrupted = a.with_bracket(1, bad).unwrap();
        let (main, _) = check_jacobi_second(&corrupted);
        assert!(!main.pass);
        assert!(recheck_witness(&corrupted, names::JACOBI, main.witness.as_ref().unwrap()));
    }

    #[test]
    fn long_identity_subsumed_by_cyclic_identity() {
        let q = FieldSpec::Rationals;
        let f5 = FieldSpec::prime(5).unwrap();
        for a in [h3(q, &[1, 2]), h3(q, &[3, -4]), sl2_scaled(f5, &[1, 2]), sl2_scaled(f5, &[2, 3])] {
            assert!(check_jacobi_first(&a).pass);
            assert!(check_long_jacobi_first(&a).pass);
        }
        // graded form too
        let s = super11(q, &[1, 2]);
        assert!(check_super_jacobi_first(&s).pass);
        assert!(check_long_jacobi_first(&s).pass);
    }

    #[test]
    fn third_kind_scaling_one_endo_set_breaks_the_identity() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = sl2_third(f5);
        assert!(check_jacobi_third(&a).unwrap().pass);
        let two = Matrix::identity(3, f5).scale(&f5.from_i64(2));
        let endos = EndoSets {
            sigma: vec![two],
            sigma_ring: vec![Matrix::identity(3, f5)],
            sigma_check: vec![Matrix::identity(3, f5)],
        };
        let scaled = MultiAlgebra::new(
            f5,
            3,
            labels(&["h"]),
            Kind::Third,
            vec![sl2(f5, 1)],
            None,
            Some(endos),
        )
        .unwrap();
        let res = check_jacobi_third(&scaled).unwrap();
        assert!(!res.pass);
        assert!(recheck_witness(&scaled, names::JACOBI, res.witness.as_ref().unwrap()));
    }

    #[test]
    fn hom_lie_reduces_to_jacobi_with_identity_twist() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = MultiAlgebra::new(f5, 3, labels(&["h"]), Kind::First, vec![sl2(f5, 1)], None, None)
            .unwrap();
        assert!(check_hom_lie(&a, &Matrix::identity(3, f5)).unwrap().pass);
        // zero algebra passes with arbitrary twists
        let zero = MultiAlgebra::zero_algebra(f5, 2, labels(&["h"]), Kind::First, None).unwrap();
        let mut arb = Matrix::zeros(2, 2, f5);
        arb.set(0, 1, f5.from_i64(3));
        arb.set(1, 0, f5.from_i64(2));
        assert!(check_hom_lie(&zero, &arb).unwrap().pass);
    }

    #[test]
    fn hom_lie_on_abelian_algebra_passes_any_twist() {
        let f3 = FieldSpec::prime(3).unwrap();
        let abelian = MultiAlgebra::zero_algebra(f3, 2, labels(&["h"]), Kind::First, None).unwrap();
        let mut state = 0x5151u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 3) as i64
        };
        for _ in 0..20 {
            let mut sigma = Matrix::zeros(2, 2, f3);
            for r in 0..2 {
                for c in 0..2 {
                    sigma.set(r, c, f3.from_i64(next()));
                }
            }
            assert!(check_hom_lie(&abelian, &sigma).unwrap().pass);
        }
    }

    #[test]
    fn hom_lie_equivalent_to_identity_twisted_third_kind() {
        // For a single anti-symmetric bracket, the cyclic twisted identity and
        // the third-kind identity with all three endo sets equal to {sigma}
        // agree; exhaustive over all dim-2 alternating tensors over F_3 and
        // all 81 twists.
        let f3 = FieldSpec::prime(3).unwrap();
        for c0 in 0..3i64 {
            for c1 in 0..3i64 {
                let mut t = BracketTensor::zero(2, f3);
                t.set(0, 1, 0, f3.from_i64(c0));
                t.set(0, 1, 1, f3.from_i64(c1));
                t.set(1, 0, 0, f3.from_i64(-c0));
                t.set(1, 0, 1, f3.from_i64(-c1));
                let lie_side =
                    MultiAlgebra::new(f3, 2, labels(&["h"]), Kind::First, vec![t.clone()], None, None)
                        .unwrap();
                for m0 in 0..3i64 {
                    for m1 in 0..3i64 {
                        for m2 in 0..3i64 {
                            for m3 in 0..3i64 {
                                let mut sigma = Matrix::zeros(2, 2, f3);
                                sigma.set(0, 0, f3.from_i64(m0));
                                sigma.set(0, 1, f3.from_i64(m1));
                                sigma.set(1, 0, f3.from_i64(m2));
                                sigma.set(1, 1, f3.from_i64(m3));
                                let endos = EndoSets {
                                    sigma: vec![sigma.clone()],
                                    sigma_ring: vec![sigma.clone()],
                                    sigma_check: vec![sigma.clone()],
                                };
                                let third = MultiAlgebra::new(
                                    f3,
                                    2,
                                    labels(&["h"]),
                                    Kind::Third,
                                    vec![t.clone()],
                                    None,
                                    Some(endos),
                                )
                                .unwrap();
                                let via_cyclic = check_hom_lie(&lie_side, &sigma).unwrap().pass;
                                let via_third = check_jacobi_third(&third).unwrap().pass;
                                assert_eq!(via_cyclic, via_third);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let q = FieldSpec::Rationals;
        let a = h3(q, &[1, 2]);
        // corrupt both tensors so multiple tuples fail; the reported witness
        // must be the least failing (k, i, j) for anti-symmetry
        let mut bad0 = a.bracket(0).clone();
        bad0.set(2, 2, 0, q.one());
        let mut badalg = a.with_bracket(0, bad0).unwrap();
        let mut bad1 = badalg.bracket(1).clone();
        bad1.set(0, 0, 0, q.one());
        badalg = badalg.with_bracket(1, bad1).unwrap();
        let res = check_antisymmetry(&badalg);
        let w = res.witness.unwrap();
        assert_eq!((w.labels[0], w.basis[0], w.basis[1]), (0, 2, 2));
    }

    #[test]
    fn verify_is_deterministic() {
        let q = FieldSpec::Rationals;
        let a = h3(q, &[1, 2]);
        assert_eq!(verify(&a), verify(&a));
    }
}
