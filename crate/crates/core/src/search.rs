//! Instance factories (scalar-family construction, direct sums), the
//! (non-)triviality decision, and certified exhaustive censuses over small
//! prime fields.
//!
//! A census enumerates every structure-constant family in a bounded
//! candidate space, runs the full identity suite on each, and certifies its
//! own output: every positive is re-verified and every negative's witness is
//! re-evaluated. Two-label spaces are enumerated in two stages — per-label
//! tensors first, then pairs of single-label survivors — which is
//! count-exact because the full suite contains every single-label identity
//! as its equal-labels instances.

use std::collections::BTreeMap;
use std::thread;

use crate::algebra::{BracketTensor, EndoSets, Grading, Kind, LabelSet, MultiAlgebra, Parity};
use crate::axioms::{recheck_witness, verify, VerificationReport};
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::ideals::{annihilator, AnnihilatorKind};
use crate::modules::{adjoint_module, check_module};
use crate::Result;

/// Builds the family `c_k = phi(k) * base` and verifies first that the base
/// passes its single-bracket axioms; the scaled family then provably passes
/// the kind's full suite because both scalar prefactors factor out of every
/// two-bracket identity.
pub fn trivial_from_base(
    base: &BracketTensor,
    grading: Option<Grading>,
    labels: &LabelSet,
    phi: &[Scalar],
    kind: Kind,
) -> Result<MultiAlgebra> {
    if kind.is_third() {
        return Err(Error::KindMismatch(
            "the scalar-family construction applies to the first and second kinds".into(),
        ));
    }
    if phi.len() != labels.len() {
        return Err(Error::Mismatch(format!(
            "{} labels but {} scalars",
            labels.len(),
            phi.len()
        )));
    }
    let single = MultiAlgebra::new(
        base.field(),
        base.dim(),
        LabelSet::new(vec!["base".into()])?,
        kind,
        vec![base.clone()],
        grading.clone(),
        None,
    )?;
    let report = verify(&single);
    if !report.all_pass() {
        return Err(Error::BaseNotAdmissible(
            report
                .first_failure()
                .map(|c| c.name.to_string())
                .unwrap_or_default(),
        ));
    }
    let brackets = phi.iter().map(|s| base.scale(s)).collect();
    MultiAlgebra::new(
        base.field(),
        base.dim(),
        labels.clone(),
        kind,
        brackets,
        grading,
        None,
    )
}

/// Result of the triviality decision. When trivial, the recovered base and
/// scalar family reproduce every tensor exactly: `c_k = phi[k] * base`.
#[derive(Debug, Clone)]
pub struct TrivialityResult {
    pub trivial: bool,
    pub base: Option<BracketTensor>,
    pub phi: Option<Vec<Scalar>>,
}

/// Decides whether the bracket family is a scalar family of one bracket.
/// This is exactly proportionality of the tensors: pick the first label with
/// a nonzero tensor as the base, solve each label's scalar from the base's
/// first nonzero entry, and check all entries. Exact and complete for a
/// finite label set.
pub fn triviality_test(a: &MultiAlgebra) -> TrivialityResult {
    let field = a.field();
    let base_idx = (0..a.labels().len()).find(|&k| !a.bracket(k).is_zero());
    let Some(base_idx) = base_idx else {
        return TrivialityResult {
            trivial: true,
            base: Some(BracketTensor::zero(a.dim(), field)),
            phi: Some(vec![field.zero(); a.labels().len()]),
        };
    };
    let base = a.bracket(base_idx);
    let pivot = base
        .entries()
        .iter()
        .position(|e| !e.is_zero())
        .expect("base tensor is nonzero");
    let pivot_inv = base.entries()[pivot]
        .inverse()
        .expect("pivot entry is nonzero");
    let mut phi = Vec::with_capacity(a.labels().len());
    for k in 0..a.labels().len() {
        let t = a.bracket(k);
        let lambda = t.entries()[pivot].mul(&pivot_inv);
        for (te, be) in t.entries().iter().zip(base.entries()) {
            if *te != lambda.mul(be) {
                return TrivialityResult {
                    trivial: false,
                    base: None,
                    phi: None,
                };
            }
        }
        phi.push(lambda);
    }
    TrivialityResult {
        trivial: true,
        base: Some(base.clone()),
        phi: Some(phi),
    }
}

/// Block-diagonal direct sum. Gradings concatenate; for the twisted kinds
/// the endomorphism sets combine as block diagonals of all pairs, so the
/// summed structure satisfies its identity exactly when both summands do.
pub fn direct_sum(a: &MultiAlgebra, b: &MultiAlgebra) -> Result<MultiAlgebra> {
    if a.field() != b.field() {
        return Err(Error::Mismatch("direct sum needs one field".into()));
    }
    if a.kind() != b.kind() {
        return Err(Error::Mismatch("direct sum needs one kind".into()));
    }
    if a.labels() != b.labels() {
        return Err(Error::Mismatch("direct sum needs one label set".into()));
    }
    let field = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let n = na + nb;
    let mut brackets = Vec::with_capacity(a.labels().len());
    for label in 0..a.labels().len() {
        let mut t = BracketTensor::zero(n, field);
        for i in 0..na {
            for j in 0..na {
                for l in 0..na {
                    t.set(i, j, l, a.bracket(label).get(i, j, l).clone());
                }
            }
        }
        for i in 0..nb {
            for j in 0..nb {
                for l in 0..nb {
                    t.set(na + i, na + j, na + l, b.bracket(label).get(i, j, l).clone());
                }
            }
        }
        brackets.push(t);
    }
    let grading = match (a.grading(), b.grading()) {
        (Some(ga), Some(gb)) => {
            let mut bits = ga.bits();
            bits.extend(gb.bits());
            Some(Grading::from_bits(&bits)?)
        }
        (None, None) => None,
        _ => return Err(Error::Mismatch("direct sum needs matching gradings".into())),
    };
    let endos = match (a.endos(), b.endos()) {
        (Some(ea), Some(eb)) => {
            let block = |ma: &crate::linear::Matrix, mb: &crate::linear::Matrix| {
                let mut m = crate::linear::Matrix::zeros(n, n, field);
                for r in 0..na {
                    for c in 0..na {
                        m.set(r, c, ma.get(r, c).clone());
                    }
                }
                for r in 0..nb {
                    for c in 0..nb {
                        m.set(na + r, na + c, mb.get(r, c).clone());
                    }
                }
                m
            };
            let pairs = |sa: &[crate::linear::Matrix], sb: &[crate::linear::Matrix]| {
                let mut out = Vec::new();
                for ma in sa {
                    for mb in sb {
                        out.push(block(ma, mb));
                    }
                }
                out
            };
            Some(EndoSets {
                sigma: pairs(&ea.sigma, &eb.sigma),
                sigma_ring: pairs(&ea.sigma_ring, &eb.sigma_ring),
                sigma_check: pairs(&ea.sigma_check, &eb.sigma_check),
            })
        }
        (None, None) => None,
        _ => return Err(Error::Mismatch("direct sum needs matching endo sets".into())),
    };
    MultiAlgebra::new(field, n, a.labels().clone(), a.kind(), brackets, grading, endos)
}

/// Hard cap on enumerated work per census stage.
pub const SEARCH_WORK_CAP: u64 = 1 << 24;

/// Parameters of an exhaustive census.
#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub kind: Kind,
    pub dim: usize,
    pub p: u32,
    pub labels: usize,
    /// Restrict to the (super) alternating representation: entries above the
    /// diagonal are free, the transposed entries are sign-determined, and
    /// diagonal slots vanish except for odd basis vectors of graded kinds.
    pub alternating: bool,
    pub grading: Option<Grading>,
}

/// Default grading for graded censuses: even block first, odd block second,
/// split as evenly as possible.
pub fn default_search_grading(dim: usize) -> Grading {
    let half = dim.div_ceil(2);
    Grading::from_bits(&(0..dim).map(|i| u8::from(i >= half)).collect::<Vec<_>>())
        .expect("bits are 0/1")
}

impl SearchSpec {
    pub fn field(&self) -> Result<FieldSpec> {
        FieldSpec::prime(self.p)
    }

    fn validate(&self) -> Result<()> {
        if !matches!(self.p, 2 | 3) {
            return Err(Error::BoundsExceeded(format!(
                "census fields are F_2 and F_3; got p = {}",
                self.p
            )));
        }
        if !matches!(self.labels, 1 | 2) {
            return Err(Error::BoundsExceeded(format!(
                "census label count must be 1 or 2; got {}",
                self.labels
            )));
        }
        let constrained = self.alternating || self.grading.is_some();
        if self.dim > 3 || (self.dim == 3 && !constrained) {
            return Err(Error::BoundsExceeded(format!(
                "census dimension caps at 2 (unconstrained) or 3 (alternating/graded); got {}",
                self.dim
            )));
        }
        if self.kind.is_super() {
            match &self.grading {
                None => {
                    return Err(Error::SchemaError(
                        "graded census kinds need a grading".into(),
                    ))
                }
                Some(g) if g.len() != self.dim => {
                    return Err(Error::SchemaError(format!(
                        "grading length {} vs census dim {}",
                        g.len(),
                        self.dim
                    )))
                }
                _ => {}
            }
        } else if self.grading.is_some() {
            return Err(Error::SchemaError(
                "ungraded census kinds take no grading".into(),
            ));
        }
        Ok(())
    }
}

/// The free tensor slots of the census representation, in lexicographic
/// (i, j, l) order, together with the rule deriving the dependent entries.
#[derive(Debug, Clone)]
struct Representation {
    dim: usize,
    field: FieldSpec,
    free: Vec<(usize, usize, usize)>,
    alternating: bool,
    grading: Option<Grading>,
}

impl Representation {
    fn new(spec: &SearchSpec) -> Result<Representation> {
        let field = spec.field()?;
        let n = spec.dim;
        let allowed = |i: usize, j: usize, l: usize| -> bool {
            match &spec.grading {
                Some(g) => g.parity(l) == g.parity(i) + g.parity(j),
                None => true,
            }
        };
        let mut free = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    if !allowed(i, j, l) {
                        continue;
                    }
                    if spec.alternating {
                        if i < j {
                            free.push((i, j, l));
                        } else if i == j {
                            // odd squares stay free in the graded form
                            let odd = spec
                                .grading
                                .as_ref()
                                .map(|g| g.parity(i) == Parity::Odd)
                                .unwrap_or(false);
                            if odd {
                                free.push((i, j, l));
                            }
                        }
                    } else {
                        free.push((i, j, l));
                    }
                }
            }
        }
        Ok(Representation {
            dim: n,
            field,
            free,
            alternating: spec.alternating,
            grading: spec.grading.clone(),
        })
    }

    fn space_size(&self) -> u64 {
        let p = self.field.characteristic() as u64;
        p.pow(self.free.len() as u32)
    }

    /// Tensor for one per-label candidate index, digits in slot order with
    /// the first slot most significant.
    fn tensor(&self, index: u64) -> BracketTensor {
        let p = self.field.characteristic() as u64;
        let mut t = BracketTensor::zero(self.dim, self.field);
        let mut rem = index;
        for slot in (0..self.free.len()).rev() {
            let digit = (rem % p) as i64;
            rem /= p;
            let (i, j, l) = self.free[slot];
            let v = self.field.from_i64(digit);
            if self.alternating && i < j {
                let flip = self
                    .grading
                    .as_ref()
                    .map(|g| Grading::sign_flip(g.parity(i), g.parity(j)))
                    .unwrap_or(false);
                let mirrored = if flip { v.clone() } else { v.neg() };
                t.set(j, i, l, mirrored);
            }
            t.set(i, j, l, v);
        }
        t
    }
}

fn label_names(count: usize) -> LabelSet {
    let names = ["h", "k"];
    LabelSet::new(names[..count].iter().map(|s| s.to_string()).collect()).expect("nonempty")
}

fn assemble(spec: &SearchSpec, rep: &Representation, tensors: Vec<BracketTensor>) -> MultiAlgebra {
    let endos = spec
        .kind
        .is_third()
        .then(|| EndoSets::identity(spec.dim, rep.field));
    MultiAlgebra::new(
        rep.field,
        spec.dim,
        label_names(tensors.len()),
        spec.kind,
        tensors,
        spec.grading.clone(),
        endos,
    )
    .expect("census candidates are well-formed")
}

/// The candidate algebra at a census index; indices order the full product
/// space lexicographically (label h outermost).
pub fn candidate_algebra(spec: &SearchSpec, index: u64) -> Result<MultiAlgebra> {
    spec.validate()?;
    let rep = Representation::new(spec)?;
    let per = rep.space_size();
    let tensors = match spec.labels {
        1 => vec![rep.tensor(index)],
        _ => vec![rep.tensor(index / per), rep.tensor(index % per)],
    };
    Ok(assemble(spec, &rep, tensors))
}

/// Census output. Counts are over the full product space; exemplar indices
/// address it via `candidate_algebra`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub kind: Kind,
    pub dim: usize,
    pub p: u32,
    pub labels: usize,
    pub alternating: bool,
    pub grading: Option<Vec<u8>>,
    pub per_label_candidates: u64,
    pub total_candidates: u64,
    pub single_label_survivors: u64,
    pub passing: u64,
    pub passing_nontrivial: u64,
    /// Annihilator dimension histogram over passing candidates: key "d" for
    /// the first kinds, "minus,plus" for the second kinds; empty for third
    /// kinds, which have no annihilator theory.
    pub annihilator_dim_histogram: BTreeMap<String, u64>,
    /// Adjoint measurement: how many passing candidates fail the module
    /// identity suite under their own adjoint representation.
    pub adjoint_checked: bool,
    pub adjoint_check_failures: u64,
    pub adjoint_check_failures_nontrivial: u64,
    pub adjoint_failure_indices: Vec<u64>,
    /// Certification: every positive re-verified, every negative's witness
    /// re-evaluated (stage-one failures certified once per tensor).
    pub positives_reverified: u64,
    pub negatives_certified: u64,
    pub witnesses_sound: bool,
    pub first_passing_index: Option<u64>,
    pub first_nontrivial_index: Option<u64>,
}

#[derive(Default)]
struct Partial {
    passing: u64,
    nontrivial: u64,
    hist: BTreeMap<String, u64>,
    adjoint_failures: u64,
    adjoint_failures_nontrivial: u64,
    adjoint_failure_indices: Vec<u64>,
    positives_reverified: u64,
    negatives_certified: u64,
    witnesses_sound: bool,
    first_passing: Option<u64>,
    first_nontrivial: Option<u64>,
}

impl Partial {
    fn new() -> Partial {
        Partial {
            witnesses_sound: true,
            ..Partial::default()
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.passing += other.passing;
        self.nontrivial += other.nontrivial;
        for (k, v) in other.hist {
            *self.hist.entry(k).or_insert(0) += v;
        }
        self.adjoint_failures += other.adjoint_failures;
        self.adjoint_failures_nontrivial += other.adjoint_failures_nontrivial;
        self.adjoint_failure_indices.extend(other.adjoint_failure_indices);
        self.positives_reverified += other.positives_reverified;
        self.negatives_certified += other.negatives_certified;
        self.witnesses_sound &= other.witnesses_sound;
        self.first_passing = match (self.first_passing, other.first_passing) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.first_nontrivial = match (self.first_nontrivial, other.first_nontrivial) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }
}

fn certify_negative(a: &MultiAlgebra, report: &VerificationReport, acc: &mut Partial) {
    let failure = report
        .first_failure()
        .expect("negative candidates have a failing check");
    let witness = failure
        .witness
        .as_ref()
        .expect("failing checks carry a witness");
    if !recheck_witness(a, failure.name, witness) {
        acc.witnesses_sound = false;
    }
    acc.negatives_certified += 1;
}

fn process_positive(spec: &SearchSpec, a: &MultiAlgebra, index: u64, acc: &mut Partial) {
    acc.passing += 1;
    acc.first_passing = Some(acc.first_passing.map_or(index, |c| c.min(index)));
    // certification pass: an independent re-verification of the candidate
    if verify(a).all_pass() {
        acc.positives_reverified += 1;
    } else {
        acc.witnesses_sound = false;
    }
    let trivial = triviality_test(a).trivial;
    if !trivial {
        acc.nontrivial += 1;
        acc.first_nontrivial = Some(acc.first_nontrivial.map_or(index, |c| c.min(index)));
    }
    match spec.kind {
        Kind::First | Kind::SuperFirst => {
            let which = if spec.kind == Kind::First {
                AnnihilatorKind::First
            } else {
                AnnihilatorKind::SuperFirst
            };
            let dim = annihilator(a, which).expect("closure holds on verified instances").dim();
            *acc.hist.entry(dim.to_string()).or_insert(0) += 1;
        }
        Kind::Second | Kind::SuperSecond => {
            let (minus, plus) = if spec.kind == Kind::Second {
                (AnnihilatorKind::SecondMinus, AnnihilatorKind::SecondPlus)
            } else {
                (AnnihilatorKind::SuperSecondMinus, AnnihilatorKind::SuperSecondPlus)
            };
            let dm = annihilator(a, minus).expect("closure holds on verified instances").dim();
            let dp = annihilator(a, plus).expect("closure holds on verified instances").dim();
            *acc.hist.entry(format!("{dm},{dp}")).or_insert(0) += 1;
        }
        Kind::Third | Kind::SuperThird => {}
    }
    if !spec.kind.is_third() {
        let rep = adjoint_module(a).expect("adjoint exists for non-third kinds");
        let ok = check_module(&rep).expect("module checks run").all_pass();
        if !ok {
            acc.adjoint_failures += 1;
            acc.adjoint_failure_indices.push(index);
            if !trivial {
                acc.adjoint_failures_nontrivial += 1;
            }
        }
    }
}

/// Runs a census. The work is split across `threads` index ranges with a
/// deterministic merge, so the report is identical for every thread count.
pub fn exhaustive_search(spec: &SearchSpec, threads: usize) -> Result<CensusReport> {
    spec.validate()?;
    let threads = threads.max(1);
    let rep = Representation::new(spec)?;
    let per = rep.space_size();
    if per > SEARCH_WORK_CAP {
        return Err(Error::BoundsExceeded(format!(
            "per-label space {per} exceeds the work cap {SEARCH_WORK_CAP}"
        )));
    }

    // stage one: single-label sweep
    let mut survivors: Vec<u64> = Vec::new();
    let mut stage1 = Partial::new();
    let single_spec = SearchSpec {
        labels: 1,
        ..spec.clone()
    };
    for idx in 0..per {
        let a = assemble(&single_spec, &rep, vec![rep.tensor(idx)]);
        let report = verify(&a);
        if report.all_pass() {
            survivors.push(idx);
        } else {
            certify_negative(&a, &report, &mut stage1);
        }
    }
    let n_surv = survivors.len() as u64;

    if spec.labels == 1 {
        let mut acc = Partial::new();
        for &idx in &survivors {
            let a = assemble(spec, &rep, vec![rep.tensor(idx)]);
            process_positive(spec, &a, idx, &mut acc);
        }
        let acc = acc.merge(stage1);
        return Ok(finish(spec, &rep, per, per, n_surv, acc));
    }

    let pair_count = n_surv * n_surv;
    if pair_count > SEARCH_WORK_CAP {
        return Err(Error::BoundsExceeded(format!(
            "survivor pair space {pair_count} exceeds the work cap {SEARCH_WORK_CAP}"
        )));
    }
    let total = per * per;

    // stage two: survivor pairs, partitioned by rank range
    let chunk = pair_count.div_ceil(threads as u64).max(1);
    let partials: Vec<Partial> = thread::scope(|scope| {
        let mut handles = Vec::new();
        for t in 0..threads as u64 {
            let lo = (t * chunk).min(pair_count);
            let hi = ((t + 1) * chunk).min(pair_count);
            let survivors = &survivors;
            let rep = &rep;
            let spec_ref = spec;
            handles.push(scope.spawn(move || {
                let mut acc = Partial::new();
                for rank in lo..hi {
                    let ih = survivors[(rank / n_surv) as usize];
                    let ik = survivors[(rank % n_surv) as usize];
                    let index = ih * per + ik;
                    let a = assemble(spec_ref, rep, vec![rep.tensor(ih), rep.tensor(ik)]);
                    let report = verify(&a);
                    if report.all_pass() {
                        process_positive(spec_ref, &a, index, &mut acc);
                    } else {
                        certify_negative(&a, &report, &mut acc);
                    }
                }
                acc
            }));
        }
        handles.into_iter().map(|h| h.join().expect("census worker")).collect()
    });
    let mut acc = stage1;
    for p in partials {
        acc = acc.merge(p);
    }
    Ok(finish(spec, &rep, total, per, n_surv, acc))
}

fn finish(
    spec: &SearchSpec,
    _rep: &Representation,
    total: u64,
    per: u64,
    survivors: u64,
    acc: Partial,
) -> CensusReport {
    CensusReport {
        kind: spec.kind,
        dim: spec.dim,
        p: spec.p,
        labels: spec.labels,
        alternating: spec.alternating,
        grading: spec.grading.as_ref().map(Grading::bits),
        per_label_candidates: per,
        total_candidates: total,
        single_label_survivors: survivors,
        passing: acc.passing,
        passing_nontrivial: acc.nontrivial,
        annihilator_dim_histogram: acc.hist,
        adjoint_checked: !spec.kind.is_third(),
        adjoint_check_failures: acc.adjoint_failures,
        adjoint_check_failures_nontrivial: acc.adjoint_failures_nontrivial,
        adjoint_failure_indices: {
            let mut v = acc.adjoint_failure_indices;
            v.sort_unstable();
            v
        },
        positives_reverified: acc.positives_reverified,
        negatives_certified: acc.negatives_certified,
        witnesses_sound: acc.witnesses_sound,
        first_passing_index: acc.first_passing,
        first_nontrivial_index: acc.first_nontrivial,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Element;

    fn f(p: u32) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn labels2() -> LabelSet {
        LabelSet::new(vec!["h".into(), "k".into()]).unwrap()
    }

    fn sl2(field: FieldSpec) -> BracketTensor {
        let mut t = BracketTensor::zero(3, field);
        t.set(0, 2, 1, field.from_i64(1));
        t.set(2, 0, 1, field.from_i64(-1));
        t.set(1, 0, 0, field.from_i64(2));
        t.set(0, 1, 0, field.from_i64(-2));
        t.set(1, 2, 2, field.from_i64(-2));
        t.set(2, 1, 2, field.from_i64(2));
        t
    }

    fn h3_base(field: FieldSpec) -> BracketTensor {
        let mut t = BracketTensor::zero(3, field);
        t.set(0, 1, 2, field.one());
        t.set(1, 0, 2, field.from_i64(-1));
        t
    }

    fn leibniz_base(field: FieldSpec) -> BracketTensor {
        let mut t = BracketTensor::zero(2, field);
        t.set(0, 0, 1, field.one());
        t
    }

    #[test]
    fn scalar_family_from_zero_base() {
        let q = FieldSpec::Rationals;
        let base = BracketTensor::zero(2, q);
        let a = trivial_from_base(&base, None, &labels2(), &[q.one(), q.from_i64(2)], Kind::First)
            .unwrap();
        assert!(verify(&a).all_pass());
        assert!(triviality_test(&a).trivial);
    }

    #[test]
    fn scalar_family_from_sl2_passes_first_kind_suite() {
        let f5 = f(5);
        let a = trivial_from_base(
            &sl2(f5),
            None,
            &labels2(),
            &[f5.one(), f5.from_i64(2)],
            Kind::First,
        )
        .unwrap();
        assert!(verify(&a).all_pass());
        let t = triviality_test(&a);
        assert!(t.trivial);
        // recovered data reproduces the tensors exactly
        let base = t.base.unwrap();
        let phi = t.phi.unwrap();
        for k in 0..2 {
            assert_eq!(&base.scale(&phi[k]), a.bracket(k));
        }
    }

    #[test]
    fn scalar_family_from_leibniz_passes_second_kind_suite() {
        let q = FieldSpec::Rationals;
        let a = trivial_from_base(
            &leibniz_base(q),
            None,
            &labels2(),
            &[q.one(), q.from_i64(2)],
            Kind::Second,
        )
        .unwrap();
        assert!(verify(&a).all_pass());
    }

    #[test]
    fn inadmissible_base_is_rejected() {
        let q = FieldSpec::Rationals;
        // not anti-symmetric, so no first-kind family can be built on it
        let mut t = BracketTensor::zero(2, q);
        t.set(0, 1, 0, q.one());
        assert!(matches!(
            trivial_from_base(&t, None, &labels2(), &[q.one(), q.one()], Kind::First),
            Err(Error::BaseNotAdmissible(_))
        ));
        // the same tensor is fine as a second-kind base only if it satisfies
        // the single-bracket identity; this one does not
        let mut bad = BracketTensor::zero(2, q);
        bad.set(0, 1, 0, q.one());
        bad.set(0, 0, 1, q.one());
        assert!(matches!(
            trivial_from_base(&bad, None, &labels2(), &[q.one(), q.one()], Kind::Second),
            Err(Error::BaseNotAdmissible(_))
        ));
    }

    #[test]
    fn block_disjoint_families_are_nontrivial() {
        // label h acts on the first block, label k on the second: every
        // double product dies, both identities hold, and the tensors are
        // not proportional
        let q = FieldSpec::Rationals;
        let mut th = BracketTensor::zero(6, q);
        th.set(0, 1, 2, q.one());
        th.set(1, 0, 2, q.from_i64(-1));
        let mut tk = BracketTensor::zero(6, q);
        tk.set(3, 4, 5, q.one());
        tk.set(4, 3, 5, q.from_i64(-1));
        let a = MultiAlgebra::new(q, 6, labels2(), Kind::First, vec![th, tk], None, None).unwrap();
        assert!(verify(&a).all_pass());
        assert!(!triviality_test(&a).trivial);
    }

    #[test]
    fn direct_sum_blocks_and_annihilator() {
        let q = FieldSpec::Rationals;
        let h3 = trivial_from_base(
            &h3_base(q),
            None,
            &labels2(),
            &[q.one(), q.from_i64(2)],
            Kind::First,
        )
        .unwrap();
        let sum = direct_sum(&h3, &h3).unwrap();
        assert_eq!(sum.dim(), 6);
        assert!(verify(&sum).all_pass());
        let ann = annihilator(&sum, AnnihilatorKind::First).unwrap();
        assert_eq!(ann.dim(), 2);
        let e2 = Element::basis(6, 2, q).into_coeffs();
        let e5 = Element::basis(6, 5, q).into_coeffs();
        assert!(ann.member(&e2) && ann.member(&e5));
        // padding with a zero algebra keeps the suite green
        let zero = MultiAlgebra::zero_algebra(q, 2, labels2(), Kind::First, None).unwrap();
        let padded = direct_sum(&h3, &zero).unwrap();
        assert!(verify(&padded).all_pass());
    }

    #[test]
    fn direct_sum_passes_iff_both_summands_do() {
        let f3 = f(3);
        // valid summands: alternating dim-2 tensors (all satisfy the cyclic
        // identity); invalid: a tensor breaking anti-symmetry
        let mut valid = Vec::new();
        for c0 in 0..3i64 {
            for c1 in 0..3i64 {
                let mut t = BracketTensor::zero(2, f3);
                t.set(0, 1, 0, f3.from_i64(c0));
                t.set(0, 1, 1, f3.from_i64(c1));
                t.set(1, 0, 0, f3.from_i64(-c0));
                t.set(1, 0, 1, f3.from_i64(-c1));
                valid.push(t);
            }
        }
        let mut broken = BracketTensor::zero(2, f3);
        broken.set(0, 1, 0, f3.one());
        let algebra = |t: &BracketTensor| {
            MultiAlgebra::new(
                f3,
                2,
                labels2(),
                Kind::First,
                vec![t.clone(), t.clone()],
                None,
                None,
            )
            .unwrap()
        };
        let mut state = 0x1234u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        for _ in 0..50 {
            let pick_a_valid = next() % 2 == 0;
            let pick_b_valid = next() % 2 == 0;
            let a = if pick_a_valid {
                algebra(&valid[next() % valid.len()])
            } else {
                algebra(&broken)
            };
            let b = if pick_b_valid {
                algebra(&valid[next() % valid.len()])
            } else {
                algebra(&broken)
            };
            let sum = direct_sum(&a, &b).unwrap();
            assert_eq!(
                verify(&sum).all_pass(),
                verify(&a).all_pass() && verify(&b).all_pass()
            );
        }
    }

    #[test]
    fn dim1_f2_census_counts() {
        // one free entry per label; anti-symmetry is vacuous over F_2 but
        // the equal-labels cyclic instance reads 3c^2 = c^2 = 0, so only the
        // all-zero pair survives
        let spec = SearchSpec {
            kind: Kind::First,
            dim: 1,
            p: 2,
            labels: 2,
            alternating: false,
            grading: None,
        };
        let report = exhaustive_search(&spec, 1).unwrap();
        assert_eq!(report.total_candidates, 4);
        assert_eq!(report.passing, 1);
        assert_eq!(report.positives_reverified, 1);
        assert_eq!(report.negatives_certified, 1); // one failing tensor, certified once
        assert!(report.witnesses_sound);
        // with the alternating representation the square is pinned to zero
        let alt = SearchSpec {
            alternating: true,
            ..spec
        };
        let report = exhaustive_search(&alt, 1).unwrap();
        assert_eq!(report.total_candidates, 1);
        assert_eq!(report.passing, 1);
    }

    #[test]
    fn first_kind_f3_alternating_census_matches_frozen_counts() {
        let spec = SearchSpec {
            kind: Kind::First,
            dim: 2,
            p: 3,
            labels: 2,
            alternating: true,
            grading: None,
        };
        let report = exhaustive_search(&spec, 1).unwrap();
        assert_eq!(report.per_label_candidates, 9);
        assert_eq!(report.total_candidates, 81);
        assert_eq!(report.single_label_survivors, 9);
        assert_eq!(report.passing, 33);
        assert_eq!(report.passing_nontrivial, 0);
        assert_eq!(report.adjoint_check_failures, 0);
        let hist: Vec<(String, u64)> = report
            .annihilator_dim_histogram
            .iter()
            .map(|(k, v)| (k.clone(), *v))
            .collect();
        assert_eq!(hist, vec![("0".into(), 9), ("1".into(), 24)]);
        assert_eq!(report.positives_reverified, 33);
        assert_eq!(report.negatives_certified, 81 - 33);
        assert!(report.witnesses_sound);
    }

    #[test]
    fn census_is_deterministic_across_thread_counts() {
        let spec = SearchSpec {
            kind: Kind::First,
            dim: 2,
            p: 3,
            labels: 2,
            alternating: true,
            grading: None,
        };
        let one = exhaustive_search(&spec, 1).unwrap();
        let four = exhaustive_search(&spec, 4).unwrap();
        let eight = exhaustive_search(&spec, 8).unwrap();
        assert_eq!(one, four);
        assert_eq!(one, eight);
    }

    #[test]
    fn staged_census_agrees_with_direct_product_enumeration() {
        // second kind, dim 2, two labels over F_2: small enough to sweep the
        // full 65536-pair product space directly as an oracle
        let spec = SearchSpec {
            kind: Kind::Second,
            dim: 2,
            p: 2,
            labels: 2,
            alternating: false,
            grading: None,
        };
        let report = exhaustive_search(&spec, 2).unwrap();
        assert_eq!(report.total_candidates, 65536);
        let mut direct_passing = 0u64;
        let mut direct_first = None;
        for index in 0..65536u64 {
            let a = candidate_algebra(&spec, index).unwrap();
            if verify(&a).all_pass() {
                direct_passing += 1;
                direct_first = direct_first.or(Some(index));
            }
        }
        assert_eq!(report.passing, direct_passing);
        assert_eq!(report.first_passing_index, direct_first);
        assert_eq!(report.single_label_survivors, 13);
        assert_eq!(report.passing, 37);
        assert_eq!(report.passing_nontrivial, 0);
        assert_eq!(report.adjoint_check_failures, 0);
    }

    #[test]
    fn super_censuses_match_frozen_counts() {
        let g = Grading::from_bits(&[0, 1]).unwrap();
        let first = SearchSpec {
            kind: Kind::SuperFirst,
            dim: 2,
            p: 3,
            labels: 2,
            alternating: true,
            grading: Some(g.clone()),
        };
        let report = exhaustive_search(&first, 1).unwrap();
        assert_eq!(report.total_candidates, 81);
        assert_eq!(report.passing, 17);
        assert_eq!(report.passing_nontrivial, 0);

        let second = SearchSpec {
            kind: Kind::SuperSecond,
            dim: 2,
            p: 3,
            labels: 2,
            alternating: false,
            grading: Some(g),
        };
        let report = exhaustive_search(&second, 1).unwrap();
        assert_eq!(report.per_label_candidates, 81);
        assert_eq!(report.total_candidates, 6561);
        assert_eq!(report.single_label_survivors, 7);
        assert_eq!(report.passing, 25);
        assert_eq!(report.passing_nontrivial, 0);
    }

    #[test]
    fn second_kind_f3_censuses() {
        let single = SearchSpec {
            kind: Kind::Second,
            dim: 2,
            p: 3,
            labels: 1,
            alternating: false,
            grading: None,
        };
        let report = exhaustive_search(&single, 1).unwrap();
        assert_eq!(report.total_candidates, 6561);
        assert_eq!(report.passing, 41);
        // all single-label families are scalar families by definition
        assert_eq!(report.passing_nontrivial, 0);

        let pair = SearchSpec {
            labels: 2,
            ..single
        };
        let report = exhaustive_search(&pair, 3).unwrap();
        assert_eq!(report.total_candidates, 43046721);
        assert_eq!(report.single_label_survivors, 41);
        assert_eq!(report.passing, 161);
        assert_eq!(report.passing_nontrivial, 0);
        assert_eq!(report.adjoint_check_failures, 0);
    }

    #[test]
    fn bounds_are_enforced() {
        let too_big = SearchSpec {
            kind: Kind::First,
            dim: 3,
            p: 3,
            labels: 2,
            alternating: false,
            grading: None,
        };
        assert!(matches!(
            exhaustive_search(&too_big, 1),
            Err(Error::BoundsExceeded(_))
        ));
        let bad_p = SearchSpec {
            kind: Kind::First,
            dim: 2,
            p: 5,
            labels: 2,
            alternating: true,
            grading: None,
        };
        assert!(matches!(
            exhaustive_search(&bad_p, 1),
            Err(Error::BoundsExceeded(_))
        ));
    }

    #[test]
    fn third_kind_census_with_identity_twists() {
        // dim 1 over F_3: x o x = c x; the twisted identity with identity
        // endomorphisms reads c^2 = 2 c^2, i.e. c = 0
        let spec = SearchSpec {
            kind: Kind::Third,
            dim: 1,
            p: 3,
            labels: 1,
            alternating: false,
            grading: None,
        };
        let report = exhaustive_search(&spec, 1).unwrap();
        assert_eq!(report.total_candidates, 3);
        assert_eq!(report.passing, 1);
        assert!(!report.adjoint_checked);
    }

    #[test]
    fn default_grading_splits_blocks() {
        assert_eq!(default_search_grading(2).bits(), vec![0, 1]);
        assert_eq!(default_search_grading(3).bits(), vec![0, 0, 1]);
    }
}
