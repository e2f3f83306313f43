//! Ideals, annihilators, factor algebras, and simplicity classification.
//!
//! Ideal theory exists for the first- and second-kind structures (and their
//! graded counterparts); the twisted third kind carries none and is rejected.

use crate::algebra::{Element, Grading, Kind, MultiAlgebra, Parity};
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::linear::{enumerate_subspaces, QuotientMap, Subspace};
use crate::Result;

/// Which annihilator to compute; must agree with the algebra's kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnnihilatorKind {
    First,
    SecondPlus,
    SecondMinus,
    SuperFirst,
    SuperSecondPlus,
    SuperSecondMinus,
}

impl AnnihilatorKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            AnnihilatorKind::First => "first",
            AnnihilatorKind::SecondPlus => "second_plus",
            AnnihilatorKind::SecondMinus => "second_minus",
            AnnihilatorKind::SuperFirst => "super_first",
            AnnihilatorKind::SuperSecondPlus => "super_second_plus",
            AnnihilatorKind::SuperSecondMinus => "super_second_minus",
        }
    }

    fn algebra_kind(&self) -> Kind {
        match self {
            AnnihilatorKind::First => Kind::First,
            AnnihilatorKind::SecondPlus | AnnihilatorKind::SecondMinus => Kind::Second,
            AnnihilatorKind::SuperFirst => Kind::SuperFirst,
            AnnihilatorKind::SuperSecondPlus | AnnihilatorKind::SuperSecondMinus => {
                Kind::SuperSecond
            }
        }
    }

    /// The annihilator kinds applicable to an algebra kind, minus before plus.
    pub fn for_kind(kind: Kind) -> Vec<AnnihilatorKind> {
        match kind {
            Kind::First => vec![AnnihilatorKind::First],
            Kind::Second => vec![AnnihilatorKind::SecondMinus, AnnihilatorKind::SecondPlus],
            Kind::SuperFirst => vec![AnnihilatorKind::SuperFirst],
            Kind::SuperSecond => vec![
                AnnihilatorKind::SuperSecondMinus,
                AnnihilatorKind::SuperSecondPlus,
            ],
            Kind::Third | Kind::SuperThird => vec![],
        }
    }
}

/// Which sides of the product were closed when testing an ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Outcome of an ideal test, recording what was actually verified.
#[derive(Debug, Clone)]
pub struct IdealCheck {
    pub holds: bool,
    /// True when the subspace splits across the parity blocks (always true
    /// for ungraded algebras).
    pub is_graded: bool,
    pub closure_checked: Vec<(Side, String)>,
    /// (side, label, algebra basis index, subspace basis row) of the first
    /// failing closure product, when one exists.
    pub violation: Option<(Side, usize, usize, usize)>,
}

fn ensure_ideal_theory(a: &MultiAlgebra) -> Result<()> {
    if a.kind().is_third() {
        return Err(Error::KindMismatch(format!(
            "no ideal theory for kind {}",
            a.kind()
        )));
    }
    Ok(())
}

/// True when the subspace is spanned by its parity-homogeneous components.
pub fn is_graded_subspace(s: &Subspace, grading: &Grading) -> bool {
    for row in s.basis_rows() {
        let mut even = vec![s.field().zero(); s.ambient_dim()];
        let mut odd = vec![s.field().zero(); s.ambient_dim()];
        for (i, c) in row.iter().enumerate() {
            match grading.parity(i) {
                Parity::Even => even[i] = c.clone(),
                Parity::Odd => odd[i] = c.clone(),
            }
        }
        if !s.member(&even) || !s.member(&odd) {
            return false;
        }
    }
    true
}

/// Tests the ideal property by closing the subspace basis against the
/// algebra basis under every label. First kinds close one side (the other
/// follows from anti-symmetry); second kinds close both. Graded kinds
/// additionally require a graded subspace.
pub fn is_ideal(a: &MultiAlgebra, s: &Subspace) -> Result<IdealCheck> {
    ensure_ideal_theory(a)?;
    if s.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "subspace ambient {} vs algebra dim {}",
            s.ambient_dim(),
            a.dim()
        )));
    }
    if s.field() != a.field() {
        return Err(Error::FieldMismatch(format!("{} vs {}", s.field(), a.field())));
    }
    let sides: &[Side] = if a.kind().is_second() {
        &[Side::Left, Side::Right]
    } else {
        &[Side::Left]
    };
    let mut closure_checked = Vec::new();
    for label in 0..a.labels().len() {
        for &side in sides {
            closure_checked.push((side, a.labels().name(label).to_string()));
        }
    }
    let is_graded = match a.grading() {
        Some(g) => is_graded_subspace(s, g),
        None => true,
    };
    if a.kind().is_super() && !is_graded {
        return Ok(IdealCheck {
            holds: false,
            is_graded,
            closure_checked: vec![],
            violation: None,
        });
    }
    let rows = s.basis_rows();
    for label in 0..a.labels().len() {
        for &side in sides {
            for i in 0..a.dim() {
                let ei = a.basis_element(i);
                for (r, row) in rows.iter().enumerate() {
                    let v = Element::new(row.clone());
                    let prod = match side {
                        Side::Left => a.bracket_eval(label, &ei, &v),
                        Side::Right => a.bracket_eval(label, &v, &ei),
                    };
                    if !s.member(prod.coeffs()) {
                        return Ok(IdealCheck {
                            holds: false,
                            is_graded,
                            closure_checked,
                            violation: Some((side, label, i, r)),
                        });
                    }
                }
            }
        }
    }
    Ok(IdealCheck {
        holds: true,
        is_graded,
        closure_checked,
        violation: None,
    })
}

/// The generating family of an annihilator, evaluated over all basis pairs
/// and all ordered label pairs. Every generator expression is bilinear in
/// the pair, so basis pairs generate the full span.
pub fn annihilator_generators(a: &MultiAlgebra, which: AnnihilatorKind) -> Result<Vec<Vec<Scalar>>> {
    if a.kind() != which.algebra_kind() {
        return Err(Error::KindMismatch(format!(
            "annihilator {} on an algebra of kind {}",
            which.as_str(),
            a.kind()
        )));
    }
    let s = a.labels().len();
    let n = a.dim();
    let mut gens = Vec::new();
    for h in 0..s {
        for k in 0..s {
            for i in 0..n {
                for j in 0..n {
                    let gen = match which {
                        AnnihilatorKind::First
                        | AnnihilatorKind::SuperFirst
                        | AnnihilatorKind::SecondMinus
                        | AnnihilatorKind::SuperSecondMinus => {
                            a.basis_product(h, i, j).sub(&a.basis_product(k, i, j))
                        }
                        AnnihilatorKind::SecondPlus => {
                            a.basis_product(h, i, j).add(&a.basis_product(k, j, i))
                        }
                        AnnihilatorKind::SuperSecondPlus => {
                            let g = a.grading().expect("graded kind");
                            let swapped = a.basis_product(k, j, i);
                            let signed = if Grading::sign_flip(g.parity(i), g.parity(j)) {
                                swapped.neg()
                            } else {
                                swapped
                            };
                            a.basis_product(h, i, j).add(&signed)
                        }
                    };
                    gens.push(gen.into_coeffs());
                }
            }
        }
    }
    Ok(gens)
}

/// Computes an annihilator ideal and verifies its closure property before
/// returning it. First kinds require one-sided closure, second kinds
/// two-sided, graded kinds a graded result; a violation means the structure
/// does not satisfy the claimed property on this instance, which is reported
/// as an error rather than silently accepted.
pub fn annihilator(a: &MultiAlgebra, which: AnnihilatorKind) -> Result<Subspace> {
    let gens = annihilator_generators(a, which)?;
    let span = Subspace::span(&gens, a.dim(), a.field())?;
    if let Some(g) = a.grading() {
        if !is_graded_subspace(&span, g) {
            return Err(Error::InternalClosureFailure(format!(
                "{} annihilator is not a graded subspace",
                which.as_str()
            )));
        }
    }
    let check = is_ideal(a, &span)?;
    if !check.holds {
        return Err(Error::InternalClosureFailure(format!(
            "{} annihilator failed closure at {:?}",
            which.as_str(),
            check.violation
        )));
    }
    Ok(span)
}

/// A factor algebra together with the data of the projection.
#[derive(Debug, Clone)]
pub struct FactorResult {
    pub algebra: MultiAlgebra,
    /// True when the induced products of all labels coincide on the
    /// quotient, i.e. the factor is a single-bracket algebra in disguise.
    pub label_independent: bool,
    pub map: QuotientMap,
}

impl FactorResult {
    /// Collapses a label-independent factor to a single-label algebra
    /// carrying the first label's induced bracket.
    pub fn collapse(&self) -> Result<MultiAlgebra> {
        if !self.label_independent {
            return Err(Error::NotWellDefined(
                "cannot collapse a label-dependent factor".into(),
            ));
        }
        let a = &self.algebra;
        MultiAlgebra::new(
            a.field(),
            a.dim(),
            crate::algebra::LabelSet::new(vec![a.labels().name(0).to_string()])?,
            a.kind(),
            vec![a.bracket(0).clone()],
            a.grading().cloned(),
            None,
        )
    }
}

/// Quotient of an algebra by an ideal: structure constants on quotient
/// representatives, with representative-independence asserted and
/// label-independence measured.
pub fn factor_algebra(a: &MultiAlgebra, ideal: &Subspace) -> Result<FactorResult> {
    ensure_ideal_theory(a)?;
    let check = is_ideal(a, ideal)?;
    if !check.holds {
        return Err(Error::NotAnIdeal);
    }
    let map = QuotientMap::new(a.dim(), ideal)?;
    let reps: Vec<Element> = map
        .representatives()
        .into_iter()
        .map(Element::new)
        .collect();
    let qdim = reps.len();
    // representative independence: products against the ideal must die in
    // the quotient (implied by ideality; asserted anyway)
    for label in 0..a.labels().len() {
        for w in ideal.basis_rows() {
            let w = Element::new(w);
            for rep in &reps {
                for (x, y) in [(&w, rep), (rep, &w)] {
                    let image = map.project(a.bracket_eval(label, x, y).coeffs());
                    if image.iter().any(|c| !c.is_zero()) {
                        return Err(Error::NotWellDefined(format!(
                            "ideal product escapes the ideal under label {}",
                            a.labels().name(label)
                        )));
                    }
                }
            }
            let self_image = map.project(a.bracket_eval(label, &w, &w).coeffs());
            if self_image.iter().any(|c| !c.is_zero()) {
                return Err(Error::NotWellDefined("ideal is not product-closed".into()));
            }
        }
    }
    let field = a.field();
    let mut brackets = Vec::with_capacity(a.labels().len());
    for label in 0..a.labels().len() {
        let mut t = crate::algebra::BracketTensor::zero(qdim, field);
        for (r, er) in reps.iter().enumerate() {
            for (s, es) in reps.iter().enumerate() {
                let coords = map.project(a.bracket_eval(label, er, es).coeffs());
                for (l, c) in coords.into_iter().enumerate() {
                    t.set(r, s, l, c);
                }
            }
        }
        brackets.push(t);
    }
    let label_independent = brackets.windows(2).all(|w| w[0] == w[1]);
    // representatives are standard basis vectors, so they are homogeneous
    // and the quotient inherits their parities
    let grading = a.grading().map(|g| {
        Grading::new(
            map.representatives()
                .iter()
                .map(|rep| {
                    let c = rep.iter().position(|v| !v.is_zero()).expect("unit vector");
                    g.parity(c)
                })
                .collect(),
        )
    });
    let algebra = MultiAlgebra::new(
        field,
        qdim,
        a.labels().clone(),
        a.kind(),
        brackets,
        grading,
        None,
    )?;
    Ok(FactorResult {
        algebra,
        label_independent,
        map,
    })
}

/// Verdict of a distinguished-set classification (simplicity of an algebra
/// or irreducibility of a module).
#[derive(Debug, Clone)]
pub struct ClassificationVerdict {
    /// The distinct members of the distinguished set, in canonical order.
    pub distinguished: Vec<Subspace>,
    /// Number of distinct distinguished members.
    pub i: usize,
    /// `Some(true)` / `Some(false)` when decided; `None` when the
    /// sound-incomplete mode found no counterexample.
    pub simple: Option<bool>,
    /// A non-distinguished ideal (or submodule), least in the canonical
    /// enumeration order, when one was found.
    pub offending: Option<Subspace>,
    /// True when every subspace was enumerated.
    pub exhaustive: bool,
}

pub type SimplicityVerdict = ClassificationVerdict;

pub(crate) fn dedup_distinguished(mut members: Vec<Subspace>) -> Vec<Subspace> {
    let mut out: Vec<Subspace> = Vec::new();
    for m in members.drain(..) {
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

fn distinguished_set(a: &MultiAlgebra) -> Result<Vec<Subspace>> {
    let mut members = vec![Subspace::zero(a.dim(), a.field())];
    for which in AnnihilatorKind::for_kind(a.kind()) {
        members.push(annihilator(a, which)?);
    }
    members.push(Subspace::full(a.dim(), a.field()));
    Ok(dedup_distinguished(members))
}

/// All graded subspaces for a grading: block-wise products of the per-parity
/// subspace lattices, in the canonical (dimension, then lexicographic) order.
pub fn enumerate_graded_subspaces(grading: &Grading, field: FieldSpec) -> Result<Vec<Subspace>> {
    let n = grading.len();
    let even = grading.block(Parity::Even);
    let odd = grading.block(Parity::Odd);
    if n > 4 {
        return Err(Error::BoundsExceeded(format!(
            "graded subspace enumeration is capped at ambient dim 4; got {n}"
        )));
    }
    let evens = enumerate_subspaces(even.len(), field)?;
    let odds = enumerate_subspaces(odd.len(), field)?;
    let embed = |rows: Vec<Vec<Scalar>>, idx: &[usize]| -> Vec<Vec<Scalar>> {
        rows.into_iter()
            .map(|row| {
                let mut v = vec![field.zero(); n];
                for (c, val) in row.into_iter().enumerate() {
                    v[idx[c]] = val;
                }
                v
            })
            .collect()
    };
    let mut out = Vec::with_capacity(evens.len() * odds.len());
    for u0 in &evens {
        for u1 in &odds {
            let mut rows = embed(u0.basis_rows(), &even);
            rows.extend(embed(u1.basis_rows(), &odd));
            out.push(Subspace::span(&rows, n, field)?);
        }
    }
    out.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
    Ok(out)
}

fn subspace_universe(a: &MultiAlgebra) -> Result<Vec<Subspace>> {
    match a.grading() {
        Some(g) => enumerate_graded_subspaces(g, a.field()),
        None => enumerate_subspaces(a.dim(), a.field()),
    }
}

/// Exhaustive simplicity classification: enumerate every (graded) subspace,
/// filter the ideals, and compare with the distinguished set. Requires a
/// small prime field and dim <= 4.
pub fn classify_simplicity(a: &MultiAlgebra) -> Result<SimplicityVerdict> {
    ensure_ideal_theory(a)?;
    let distinguished = distinguished_set(a)?;
    let universe = subspace_universe(a).map_err(|e| match e {
        Error::BoundsExceeded(msg) => Error::BoundsExceeded(format!(
            "exhaustive simplicity classification unavailable: {msg}"
        )),
        other => other,
    })?;
    let mut offending = None;
    for s in universe {
        if distinguished.contains(&s) {
            continue;
        }
        if is_ideal(a, &s)?.holds {
            offending = Some(s);
            break;
        }
    }
    Ok(SimplicityVerdict {
        i: distinguished.len(),
        simple: Some(offending.is_none()),
        offending,
        distinguished,
        exhaustive: true,
    })
}

/// The smallest (graded) ideal containing `seed`: close under left and (for
/// second kinds) right multiplication by every basis vector under every
/// label, and under parity projection for graded kinds.
pub fn generated_ideal(a: &MultiAlgebra, seed: &[Scalar]) -> Result<Subspace> {
    ensure_ideal_theory(a)?;
    let n = a.dim();
    let field = a.field();
    let parity_split = |v: &[Scalar], rows: &mut Vec<Vec<Scalar>>| match a.grading() {
        Some(g) => {
            for p in [Parity::Even, Parity::Odd] {
                let mut comp = vec![field.zero(); n];
                for (i, c) in v.iter().enumerate() {
                    if g.parity(i) == p {
                        comp[i] = c.clone();
                    }
                }
                rows.push(comp);
            }
        }
        None => rows.push(v.to_vec()),
    };
    let mut seed_rows = Vec::new();
    parity_split(seed, &mut seed_rows);
    let mut current = Subspace::span(&seed_rows, n, field)?;
    let both_sides = a.kind().is_second();
    loop {
        let before = current.dim();
        let mut new_rows = current.basis_rows();
        for row in current.basis_rows() {
            let v = Element::new(row);
            for label in 0..a.labels().len() {
                for i in 0..n {
                    let ei = a.basis_element(i);
                    let mut products = vec![a.bracket_eval(label, &ei, &v)];
                    if both_sides {
                        products.push(a.bracket_eval(label, &v, &ei));
                    }
                    for prod in products {
                        parity_split(prod.coeffs(), &mut new_rows);
                    }
                }
            }
        }
        let next = Subspace::span(&new_rows, n, field)?;
        if next.dim() == before {
            return Ok(next);
        }
        current = next;
    }
}

/// Sound-incomplete simplicity check for fields where exhaustive subspace
/// enumeration is impossible: generate the smallest ideal around every basis
/// vector and every annihilator generator; any generated ideal outside the
/// distinguished set proves non-simplicity, otherwise the verdict is
/// inconclusive.
pub fn classify_simplicity_generated(a: &MultiAlgebra) -> Result<SimplicityVerdict> {
    ensure_ideal_theory(a)?;
    let distinguished = distinguished_set(a)?;
    let mut seeds: Vec<Vec<Scalar>> = (0..a.dim())
        .map(|i| a.basis_element(i).into_coeffs())
        .collect();
    for which in AnnihilatorKind::for_kind(a.kind()) {
        seeds.extend(annihilator_generators(a, which)?);
    }
    let mut offending: Option<Subspace> = None;
    for seed in seeds {
        if seed.iter().all(Scalar::is_zero) {
            continue;
        }
        let ideal = generated_ideal(a, &seed)?;
        if !distinguished.contains(&ideal) {
            let better = match &offending {
                None => true,
                Some(cur) => ideal.order_key() < cur.order_key(),
            };
            if better {
                offending = Some(ideal);
            }
        }
    }
    Ok(SimplicityVerdict {
        i: distinguished.len(),
        simple: if offending.is_some() { Some(false) } else { None },
        offending,
        distinguished,
        exhaustive: false,
    })
}

/// Exhaustive classification when the field allows it, otherwise the
/// generated-ideal mode.
pub fn classify_simplicity_auto(a: &MultiAlgebra) -> Result<SimplicityVerdict> {
    match classify_simplicity(a) {
        Err(Error::BoundsExceeded(_)) => classify_simplicity_generated(a),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LabelSet;
    use crate::axioms::verify;
    use crate::field::FieldSpec;
    use crate::instances::{
        heisenberg_scaled as h3, leibniz2_scaled as leibniz2, sl2_scaled,
        super11_scaled as super11,
    };
    use crate::linear::Matrix;

    fn labels(names: &[&str]) -> LabelSet {
        LabelSet::new(names.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    fn axis(field: FieldSpec, dim: usize, i: usize) -> Subspace {
        Subspace::span(&[Element::basis(dim, i, field).into_coeffs()], dim, field).unwrap()
    }

    #[test]
    fn zero_and_full_are_ideals_everywhere() {
        let q = FieldSpec::Rationals;
        for a in [h3(q, &[1, 2]), leibniz2(q, &[1, 2]), super11(q, &[1, 2])] {
            assert!(is_ideal(&a, &Subspace::zero(a.dim(), q)).unwrap().holds);
            assert!(is_ideal(&a, &Subspace::full(a.dim(), q)).unwrap().holds);
        }
    }

    #[test]
    fn h3_center_is_an_ideal_and_an_axis_is_not() {
        let q = FieldSpec::Rationals;
        let a = h3(q, &[1, 2]);
        assert!(is_ideal(&a, &axis(q, 3, 2)).unwrap().holds);
        let check = is_ideal(&a, &axis(q, 3, 0)).unwrap();
        assert!(!check.holds);
        assert!(check.violation.is_some());
    }

    #[test]
    fn graded_kinds_reject_nongraded_subspaces() {
        let q = FieldSpec::Rationals;
        let a = super11(q, &[1, 2]);
        // the diagonal line e0 + e1 is not a graded subspace
        let diag = Subspace::span(&[vec![q.one(), q.one()]], 2, q).unwrap();
        let check = is_ideal(&a, &diag).unwrap();
        assert!(!check.holds);
        assert!(!check.is_graded);
    }

    #[test]
    fn single_label_first_annihilator_vanishes() {
        let q = FieldSpec::Rationals;
        let a = h3(q, &[1]);
        let ann = annihilator(&a, AnnihilatorKind::First).unwrap();
        assert_eq!(ann.dim(), 0);
    }

    #[test]
    fn h3_scaled_annihilator_is_the_center() {
        let q = FieldSpec::Rationals;
        let a = h3(q, &[1, 2]);
        let ann = annihilator(&a, AnnihilatorKind::First).unwrap();
        assert_eq!(ann, axis(q, 3, 2));
    }

    #[test]
    fn sl2_scaled_annihilator_is_everything() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = sl2_scaled(f5, &[1, 2]);
        let ann = annihilator(&a, AnnihilatorKind::First).unwrap();
        assert_eq!(ann.dim(), 3);
        assert!(ann.is_full());
    }

    #[test]
    fn leibniz_plus_and_minus_annihilators() {
        let q = FieldSpec::Rationals;
        let a = leibniz2(q, &[1, 2]);
        let plus = annihilator(&a, AnnihilatorKind::SecondPlus).unwrap();
        let minus = annihilator(&a, AnnihilatorKind::SecondMinus).unwrap();
        assert_eq!(plus, axis(q, 2, 1));
        assert_eq!(minus, axis(q, 2, 1));
        assert!(plus.contains(&minus).unwrap());
    }

    #[test]
    fn annihilator_kind_mismatch_is_rejected() {
        let q = FieldSpec::Rationals;
        let a = h3(q, &[1, 2]);
        assert!(matches!(
            annihilator(&a, AnnihilatorKind::SecondPlus),
            Err(Error::KindMismatch(_))
        ));
    }

    #[test]
    fn factor_by_zero_of_unscaled_family_is_a_copy() {
        let q = FieldSpec::Rationals;
        let a = h3(q, &[1, 1]);
        let res = factor_algebra(&a, &Subspace::zero(3, q)).unwrap();
        assert!(res.label_independent);
        assert_eq!(res.algebra.dim(), 3);
        assert_eq!(res.algebra.bracket(0), a.bracket(0));
        // a genuinely scaled family quotiented by zero stays label-dependent
        let scaled = h3(q, &[1, 2]);
        let res = factor_algebra(&scaled, &Subspace::zero(3, q)).unwrap();
        assert!(!res.label_independent);
    }

    #[test]
    fn h3_factor_by_annihilator_is_abelian_lie_algebra() {
        let q = FieldSpec::Rationals;
        let a = h3(q, &[1, 2]);
        let ann = annihilator(&a, AnnihilatorKind::First).unwrap();
        let res = factor_algebra(&a, &ann).unwrap();
        assert!(res.label_independent);
        assert_eq!(res.algebra.dim(), 2);
        assert!(res.algebra.bracket(0).is_zero());
        let collapsed = res.collapse().unwrap();
        assert!(verify(&collapsed).all_pass());
    }

    #[test]
    fn leibniz_factor_by_minus_annihilator_is_zero_algebra() {
        let q = FieldSpec::Rationals;
        let a = leibniz2(q, &[1, 2]);
        let minus = annihilator(&a, AnnihilatorKind::SecondMinus).unwrap();
        let res = factor_algebra(&a, &minus).unwrap();
        assert!(res.label_independent);
        assert_eq!(res.algebra.dim(), 1);
        assert!(res.algebra.bracket(0).is_zero());
        assert!(verify(&res.collapse().unwrap()).all_pass());
    }

    #[test]
    fn factor_by_non_ideal_is_rejected() {
        let q = FieldSpec::Rationals;
        let a = h3(q, &[1, 2]);
        assert!(matches!(
            factor_algebra(&a, &axis(q, 3, 0)),
            Err(Error::NotAnIdeal)
        ));
    }

    #[test]
    fn sl2_over_f5_is_2_simple() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = sl2_scaled(f5, &[1, 2]);
        let v = classify_simplicity(&a).unwrap();
        assert_eq!(v.i, 2);
        assert_eq!(v.simple, Some(true));
        assert!(v.offending.is_none());
        assert!(v.exhaustive);
    }

    #[test]
    fn h3_over_f5_is_not_simple_with_least_offending_ideal() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = h3(f5, &[1, 2]);
        let v = classify_simplicity(&a).unwrap();
        assert_eq!(v.i, 3);
        assert_eq!(v.simple, Some(false));
        let off = v.offending.unwrap();
        // least non-distinguished ideal in (dimension, lexicographic) order:
        // the span of e1 and e2
        let expect = Subspace::span(
            &[
                vec![f5.zero(), f5.one(), f5.zero()],
                vec![f5.zero(), f5.zero(), f5.one()],
            ],
            3,
            f5,
        )
        .unwrap();
        assert_eq!(off, expect);
    }

    #[test]
    fn leibniz_over_f5_is_3_simple() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = leibniz2(f5, &[1, 2]);
        let v = classify_simplicity(&a).unwrap();
        assert_eq!(v.i, 3);
        assert_eq!(v.simple, Some(true));
    }

    #[test]
    fn generated_mode_over_q_finds_nonsimplicity_or_stays_inconclusive() {
        let q = FieldSpec::Rationals;
        let a = h3(q, &[1, 2]);
        let v = classify_simplicity_generated(&a).unwrap();
        // the generated ideal around e1 is span{e1, e3}, not distinguished
        assert_eq!(v.simple, Some(false));
        assert!(v.offending.is_some());
        // exhaustive mode over Q is a bounds error
        assert!(matches!(
            classify_simplicity(&a),
            Err(Error::BoundsExceeded(_))
        ));
        // the Leibniz example over Q has only distinguished generated ideals
        let b = leibniz2(q, &[1, 2]);
        let v = classify_simplicity_generated(&b).unwrap();
        assert_eq!(v.simple, None);
        assert!(!v.exhaustive);
    }

    #[test]
    fn simplicity_verdict_invariant_under_basis_change() {
        let f5 = FieldSpec::prime(5).unwrap();
        for a in [h3(f5, &[1, 2]), sl2_scaled(f5, &[1, 2])] {
            let before = classify_simplicity(&a).unwrap();
            let mut p = Matrix::zeros(3, 3, f5);
            for (r, c, v) in [
                (0, 0, 1),
                (0, 1, 2),
                (0, 2, 0),
                (1, 0, 0),
                (1, 1, 1),
                (1, 2, 3),
                (2, 0, 1),
                (2, 1, 0),
                (2, 2, 1),
            ] {
                p.set(r, c, f5.from_i64(v));
            }
            assert!(p.inverse().is_some());
            let b = a.change_basis(&p).unwrap();
            assert!(verify(&b).all_pass());
            let after = classify_simplicity(&b).unwrap();
            assert_eq!(before.i, after.i);
            assert_eq!(before.simple, after.simple);
        }
    }

    #[test]
    fn graded_subspace_enumeration_counts() {
        let f3 = FieldSpec::prime(3).unwrap();
        let g = Grading::from_bits(&[0, 1]).unwrap();
        // each block is a line: 2 subspaces per block, 4 graded subspaces
        assert_eq!(enumerate_graded_subspaces(&g, f3).unwrap().len(), 4);
        let g2 = Grading::from_bits(&[0, 0, 1]).unwrap();
        // even block F_3^2 has 6 subspaces, odd block 2: 12 graded subspaces
        assert_eq!(enumerate_graded_subspaces(&g2, f3).unwrap().len(), 12);
    }

    #[test]
    fn super_simplicity_uses_graded_ideals_only() {
        let f3 = FieldSpec::prime(3).unwrap();
        let a = super11(f3, &[1, 2]);
        let v = classify_simplicity(&a).unwrap();
        // annihilator = span{e0}; graded ideals are {0}, span{e0}, L
        assert_eq!(v.i, 3);
        assert_eq!(v.simple, Some(true), "offending: {:?}", v.offending);
    }

    #[test]
    fn third_kind_has_no_ideal_theory() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = MultiAlgebra::zero_algebra(f5, 2, labels(&["h"]), Kind::Third, None).unwrap();
        assert!(matches!(
            classify_simplicity(&a),
            Err(Error::KindMismatch(_))
        ));
        assert!(matches!(
            is_ideal(&a, &Subspace::zero(2, f5)),
            Err(Error::KindMismatch(_))
        ));
    }
}
