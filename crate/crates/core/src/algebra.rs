//! Representation of multi-bracket algebras and superalgebras: one structure
//! constant tensor per label, an optional Z2 grading, and optional
//! endomorphism sets for the twisted-identity kinds.

use std::fmt;
use std::ops::Add;

use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::linear::Matrix;
use crate::Result;

/// The six structure kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    First,
    Second,
    Third,
    SuperFirst,
    SuperSecond,
    SuperThird,
}

impl Kind {
    pub fn is_super(&self) -> bool {
        matches!(self, Kind::SuperFirst | Kind::SuperSecond | Kind::SuperThird)
    }

    pub fn is_first(&self) -> bool {
        matches!(self, Kind::First | Kind::SuperFirst)
    }

    pub fn is_second(&self) -> bool {
        matches!(self, Kind::Second | Kind::SuperSecond)
    }

    pub fn is_third(&self) -> bool {
        matches!(self, Kind::Third | Kind::SuperThird)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::First => "first",
            Kind::Second => "second",
            Kind::Third => "third",
            Kind::SuperFirst => "super_first",
            Kind::SuperSecond => "super_second",
            Kind::SuperThird => "super_third",
        }
    }

    pub fn from_str(s: &str) -> Result<Kind> {
        Ok(match s {
            "first" => Kind::First,
            "second" => Kind::Second,
            "third" => Kind::Third,
            "super_first" => Kind::SuperFirst,
            "super_second" => Kind::SuperSecond,
            "super_third" => Kind::SuperThird,
            other => return Err(Error::SchemaError(format!("unknown kind {other:?}"))),
        })
    }

    pub const ALL: [Kind; 6] = [
        Kind::First,
        Kind::Second,
        Kind::Third,
        Kind::SuperFirst,
        Kind::SuperSecond,
        Kind::SuperThird,
    ];
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Z2 parity of a basis vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u8) -> Result<Parity> {
        match b {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            other => Err(Error::SchemaError(format!("parity must be 0 or 1, got {other}"))),
        }
    }

    pub fn bit(&self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(&self) -> bool {
        matches!(self, Parity::Odd)
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Z2 grading of the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading(Vec<Parity>);

impl Grading {
    pub fn new(parities: Vec<Parity>) -> Grading {
        Grading(parities)
    }

    pub fn from_bits(bits: &[u8]) -> Result<Grading> {
        Ok(Grading(bits.iter().map(|&b| Parity::from_bit(b)).collect::<Result<_>>()?))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.0[i]
    }

    pub fn bits(&self) -> Vec<u8> {
        self.0.iter().map(Parity::bit).collect()
    }

    /// Basis indices of one parity block, in order.
    pub fn block(&self, p: Parity) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.0[i] == p).collect()
    }

    /// The sign (-1)^{ab} as a boolean: true when both parities are odd.
    pub fn sign_flip(a: Parity, b: Parity) -> bool {
        a.is_odd() && b.is_odd()
    }
}

/// The finite ordered index set S of bracket labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSet(Vec<String>);

impl LabelSet {
    pub fn new(labels: Vec<String>) -> Result<LabelSet> {
        if labels.is_empty() {
            return Err(Error::SchemaError("label set must be nonempty".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::SchemaError(format!("duplicate label {l:?}")));
            }
        }
        Ok(LabelSet(labels))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }
}

/// Structure constants of one bilinear product on a fixed basis:
/// `c[i][j][l]` is the coefficient of `e_l` in `e_i * e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketTensor {
    dim: usize,
    field: FieldSpec,
    entries: Vec<Scalar>, // n^3, index i*n*n + j*n + l
}

impl BracketTensor {
    pub fn zero(dim: usize, field: FieldSpec) -> BracketTensor {
        BracketTensor {
            dim,
            field,
            entries: vec![field.zero(); dim * dim * dim],
        }
    }

    pub fn from_entries(dim: usize, field: FieldSpec, entries: Vec<Scalar>) -> Result<BracketTensor> {
        if entries.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "tensor needs {} entries, got {}",
                dim * dim * dim,
                entries.len()
            )));
        }
        for e in &entries {
            if e.field() != field {
                return Err(Error::FieldMismatch(format!("{} vs {}", e.field(), field)));
            }
        }
        Ok(BracketTensor { dim, field, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize, l: usize) -> &Scalar {
        &self.entries[(i * self.dim + j) * self.dim + l]
    }

    pub fn set(&mut self, i: usize, j: usize, l: usize, v: Scalar) {
        assert_eq!(v.field(), self.field);
        self.entries[(i * self.dim + j) * self.dim + l] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// The product of two basis vectors as a coefficient vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        Element::new(
            (0..self.dim).map(|l| self.get(i, j, l).clone()).collect(),
        )
    }

    pub fn scale(&self, s: &Scalar) -> BracketTensor {
        BracketTensor {
            dim: self.dim,
            field: self.field,
            entries: self.entries.iter().map(|e| e.mul(s)).collect(),
        }
    }
}

/// Sets of endomorphisms for the twisted-identity kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoSets {
    pub sigma: Vec<Matrix>,
    pub sigma_ring: Vec<Matrix>,
    pub sigma_check: Vec<Matrix>,
}

impl EndoSets {
    pub fn identity(dim: usize, field: FieldSpec) -> EndoSets {
        let id = Matrix::identity(dim, field);
        EndoSets {
            sigma: vec![id.clone()],
            sigma_ring: vec![id.clone()],
            sigma_check: vec![id],
        }
    }

    fn validate(&self, dim: usize, field: FieldSpec) -> Result<()> {
        for (name, set) in [
            ("sigma", &self.sigma),
            ("sigma_ring", &self.sigma_ring),
            ("sigma_check", &self.sigma_check),
        ] {
            if set.is_empty() {
                return Err(Error::SchemaError(format!("endo set {name} is empty")));
            }
            for m in set {
                if m.rows() != dim || m.cols() != dim {
                    return Err(Error::DimensionMismatch(format!(
                        "endomorphism in {name} is {}x{}, expected {dim}x{dim}",
                        m.rows(),
                        m.cols()
                    )));
                }
                if m.field() != field {
                    return Err(Error::FieldMismatch(format!("{} vs {}", m.field(), field)));
                }
            }
        }
        Ok(())
    }
}

/// An element of the algebra as a coefficient vector on the fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element(Vec<Scalar>);

impl Element {
    pub fn new(coeffs: Vec<Scalar>) -> Element {
        Element(coeffs)
    }

    pub fn zero(dim: usize, field: FieldSpec) -> Element {
        Element(vec![field.zero(); dim])
    }

    pub fn basis(dim: usize, i: usize, field: FieldSpec) -> Element {
        let mut v = vec![field.zero(); dim];
        v[i] = field.one();
        Element(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.dim(), other.dim());
        Element(self.0.iter().zip(&other.0).map(|(a, b)| a.add(b)).collect())
    }

    pub fn sub(&self, other: &Element) -> Element {
        assert_eq!(self.dim(), other.dim());
        Element(self.0.iter().zip(&other.0).map(|(a, b)| a.sub(b)).collect())
    }

    pub fn neg(&self) -> Element {
        Element(self.0.iter().map(Scalar::neg).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element(self.0.iter().map(|a| a.mul(s)).collect())
    }
}

/// Parity classification of an element of a graded algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityClass {
    Even,
    Odd,
    Mixed,
    Zero,
}

/// A finite-dimensional multi-bracket algebra: one structure tensor per
/// label, plus grading and endomorphism data where the kind demands it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiAlgebra {
    field: FieldSpec,
    dim: usize,
    labels: LabelSet,
    kind: Kind,
    brackets: Vec<BracketTensor>, // aligned with label order
    grading: Option<Grading>,
    endos: Option<EndoSets>,
}

impl MultiAlgebra {
    pub fn new(
        field: FieldSpec,
        dim: usize,
        labels: LabelSet,
        kind: Kind,
        brackets: Vec<BracketTensor>,
        grading: Option<Grading>,
        endos: Option<EndoSets>,
    ) -> Result<MultiAlgebra> {
        if brackets.len() != labels.len() {
            return Err(Error::SchemaError(format!(
                "{} labels but {} bracket tensors",
                labels.len(),
                brackets.len()
            )));
        }
        for t in &brackets {
            if t.dim() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "tensor dim {} vs algebra dim {dim}",
                    t.dim()
                )));
            }
            if t.field() != field {
                return Err(Error::FieldMismatch(format!("{} vs {}", t.field(), field)));
            }
        }
        match &grading {
            Some(g) => {
                if !kind.is_super() {
                    return Err(Error::SchemaError(format!(
                        "kind {kind} takes no grading"
                    )));
                }
                if g.len() != dim {
                    return Err(Error::SchemaError(format!(
                        "grading length {} vs dim {dim}",
                        g.len()
                    )));
                }
            }
            None => {
                if kind.is_super() {
                    return Err(Error::SchemaError(format!(
                        "kind {kind} requires a grading"
                    )));
                }
            }
        }
        match &endos {
            Some(e) => {
                if !kind.is_third() {
                    return Err(Error::SchemaError(format!(
                        "kind {kind} takes no endomorphism sets"
                    )));
                }
                e.validate(dim, field)?;
            }
            None => {
                if kind.is_third() {
                    return Err(Error::MissingEndoSets);
                }
            }
        }
        Ok(MultiAlgebra {
            field,
            dim,
            labels,
            kind,
            brackets,
            grading,
            endos,
        })
    }

    /// Zero algebra of a kind; super kinds get the requested grading and
    /// third kinds identity endomorphism sets.
    pub fn zero_algebra(
        field: FieldSpec,
        dim: usize,
        labels: LabelSet,
        kind: Kind,
        grading: Option<Grading>,
    ) -> Result<MultiAlgebra> {
        let brackets = vec![BracketTensor::zero(dim, field); labels.len()];
        let endos = kind.is_third().then(|| EndoSets::identity(dim, field));
        MultiAlgebra::new(field, dim, labels, kind, brackets, grading, endos)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &LabelSet {
        &self.labels
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    pub fn endos(&self) -> Option<&EndoSets> {
        self.endos.as_ref()
    }

    pub fn bracket(&self, label: usize) -> &BracketTensor {
        &self.brackets[label]
    }

    pub fn brackets(&self) -> &[BracketTensor] {
        &self.brackets
    }

    /// Replaces one structure tensor; used by mutation tests and the census.
    pub fn with_bracket(&self, label: usize, tensor: BracketTensor) -> Result<MultiAlgebra> {
        let mut brackets = self.brackets.clone();
        brackets[label] = tensor;
        MultiAlgebra::new(
            self.field,
            self.dim,
            self.labels.clone(),
            self.kind,
            brackets,
            self.grading.clone(),
            self.endos.clone(),
        )
    }

    /// Bilinear extension of the structure constants of one label.
    pub fn bracket_eval(&self, label: usize, x: &Element, y: &Element) -> Element {
        assert!(label < self.labels.len(), "label index out of range");
        assert_eq!(x.dim(), self.dim, "left operand dimension mismatch");
        assert_eq!(y.dim(), self.dim, "right operand dimension mismatch");
        let t = &self.brackets[label];
        let mut out = vec![self.field.zero(); self.dim];
        for i in 0..self.dim {
            let xi = &x.coeffs()[i];
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                let yj = &y.coeffs()[j];
                if yj.is_zero() {
                    continue;
                }
                let xy = xi.mul(yj);
                for (l, slot) in out.iter_mut().enumerate() {
                    let c = t.get(i, j, l);
                    if !c.is_zero() {
                        *slot = slot.add(&xy.mul(c));
                    }
                }
            }
        }
        Element::new(out)
    }

    /// `bracket_eval` addressed by label name.
    pub fn bracket_eval_named(&self, label: &str, x: &Element, y: &Element) -> Result<Element> {
        if x.dim() != self.dim || y.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "operands of dim {}/{} in a dim-{} algebra",
                x.dim(),
                y.dim(),
                self.dim
            )));
        }
        Ok(self.bracket_eval(self.labels.index(label)?, x, y))
    }

    /// Product of two basis vectors under one label, read off the tensor.
    pub fn basis_product(&self, label: usize, i: usize, j: usize) -> Element {
        self.brackets[label].basis_product(i, j)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim, i, self.field)
    }

    pub fn zero_element(&self) -> Element {
        Element::zero(self.dim, self.field)
    }

    /// Homogeneity classification of an element; errors on ungraded algebras.
    pub fn parity_of(&self, x: &Element) -> Result<ParityClass> {
        let g = self.grading.as_ref().ok_or(Error::NotGraded)?;
        let mut even = false;
        let mut odd = false;
        for (i, c) in x.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match g.parity(i) {
                Parity::Even => even = true,
                Parity::Odd => odd = true,
            }
        }
        Ok(match (even, odd) {
            (false, false) => ParityClass::Zero,
            (true, false) => ParityClass::Even,
            (false, true) => ParityClass::Odd,
            (true, true) => ParityClass::Mixed,
        })
    }
}

impl MultiAlgebra {
    /// Rewrites the structure constants in the basis whose vectors are the
    /// columns of `p`. For graded algebras `p` must preserve the parity
    /// blocks so the grading carries over unchanged.
    pub fn change_basis(&self, p: &Matrix) -> Result<MultiAlgebra> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} basis change on a dim-{} algebra",
                p.rows(),
                p.cols(),
                self.dim
            )));
        }
        let q = p
            .inverse()
            .ok_or_else(|| Error::Mismatch("basis change matrix is singular".into()))?;
        if let Some(g) = &self.grading {
            if !is_even_matrix(p, g) {
                return Err(Error::Mismatch(
                    "basis change of a graded algebra must preserve the parity blocks".into(),
                ));
            }
        }
        let n = self.dim;
        let cols: Vec<Element> = (0..n)
            .map(|i| Element::new((0..n).map(|r| p.get(r, i).clone()).collect()))
            .collect();
        let brackets = self
            .brackets
            .iter()
            .enumerate()
            .map(|(label, _)| {
                let mut t = BracketTensor::zero(n, self.field);
                for i in 0..n {
                    for j in 0..n {
                        let prod = self.bracket_eval(label, &cols[i], &cols[j]);
                        let coords = q.apply(prod.coeffs());
                        for (l, c) in coords.into_iter().enumerate() {
                            t.set(i, j, l, c);
                        }
                    }
                }
                t
            })
            .collect();
        let endos = self.endos.as_ref().map(|e| EndoSets {
            sigma: e.sigma.iter().map(|m| q.mul(&m.mul(p))).collect(),
            sigma_ring: e.sigma_ring.iter().map(|m| q.mul(&m.mul(p))).collect(),
            sigma_check: e.sigma_check.iter().map(|m| q.mul(&m.mul(p))).collect(),
        });
        MultiAlgebra::new(
            self.field,
            self.dim,
            self.labels.clone(),
            self.kind,
            brackets,
            self.grading.clone(),
            endos,
        )
    }
}

/// Matrix-vector action of an endomorphism on an element.
pub fn apply_endo(m: &Matrix, x: &Element) -> Result<Element> {
    if m.rows() != x.dim() || m.cols() != x.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} endomorphism on a dim-{} element",
            m.rows(),
            m.cols(),
            x.dim()
        )));
    }
    Ok(Element::new(m.apply(x.coeffs())))
}

/// True when the matrix maps each parity block into itself.
pub fn is_even_matrix(m: &Matrix, grading: &Grading) -> bool {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if grading.parity(r) != grading.parity(c) && !m.get(r, c).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn labels(names: &[&str]) -> LabelSet {
        LabelSet::new(names.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    /// Heisenberg bracket scaled per label: e0 * e1 = s * e2.
    fn h3(field: FieldSpec, scales: &[i64]) -> MultiAlgebra {
        let brackets = scales
            .iter()
            .map(|&s| {
                let mut t = BracketTensor::zero(3, field);
                t.set(0, 1, 2, field.from_i64(s));
                t.set(1, 0, 2, field.from_i64(-s));
                t
            })
            .collect();
        MultiAlgebra::new(field, 3, labels(&["h", "k"]), Kind::First, brackets, None, None).unwrap()
    }

    #[test]
    fn bracket_of_basis_vectors_reads_tensor_column() {
        let q = FieldSpec::Rationals;
        let a = h3(q, &[1, 2]);
        for label in 0..2 {
            for i in 0..3 {
                for j in 0..3 {
                    let val = a.bracket_eval(label, &a.basis_element(i), &a.basis_element(j));
                    assert_eq!(val, a.basis_product(label, i, j));
                }
            }
        }
        let e3 = a.basis_element(2);
        assert_eq!(
            a.bracket_eval_named("h", &a.basis_element(0), &a.basis_element(1)).unwrap(),
            e3
        );
    }

    #[test]
    fn bracket_with_zero_vanishes() {
        let q = FieldSpec::Rationals;
        let a = h3(q, &[1, 2]);
        let x = Element::new(vec![q.from_i64(3), q.from_i64(-1), q.from_i64(5)]);
        assert!(a.bracket_eval(0, &x, &a.zero_element()).is_zero());
        assert!(a.bracket_eval(0, &a.zero_element(), &x).is_zero());
    }

    #[test]
    fn bracket_is_additive_in_left_argument() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = h3(f5, &[1, 2]);
        let mut state = 0x42u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 5) as i64
        };
        for _ in 0..100 {
            let rand_el = |next: &mut dyn FnMut() -> i64| {
                Element::new((0..3).map(|_| f5.from_i64(next())).collect())
            };
            let x1 = rand_el(&mut next);
            let x2 = rand_el(&mut next);
            let y = rand_el(&mut next);
            let lhs = a.bracket_eval(1, &x1.add(&x2), &y);
            let rhs = a.bracket_eval(1, &x1, &y).add(&a.bracket_eval(1, &x2, &y));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn unknown_label_is_reported() {
        let a = h3(FieldSpec::Rationals, &[1, 2]);
        let e = a.basis_element(0);
        assert!(matches!(
            a.bracket_eval_named("zz", &e, &e),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn parity_classification() {
        let q = FieldSpec::Rationals;
        let g = Grading::from_bits(&[0, 1]).unwrap();
        let a = MultiAlgebra::zero_algebra(q, 2, labels(&["h"]), Kind::SuperFirst, Some(g)).unwrap();
        assert_eq!(a.parity_of(&a.zero_element()).unwrap(), ParityClass::Zero);
        assert_eq!(a.parity_of(&a.basis_element(0)).unwrap(), ParityClass::Even);
        assert_eq!(a.parity_of(&a.basis_element(1)).unwrap(), ParityClass::Odd);
        let mixed = a.basis_element(0).add(&a.basis_element(1));
        assert_eq!(a.parity_of(&mixed).unwrap(), ParityClass::Mixed);

        let ungraded = h3(q, &[1, 2]);
        assert!(matches!(
            ungraded.parity_of(&ungraded.basis_element(0)),
            Err(Error::NotGraded)
        ));
    }

    #[test]
    fn apply_endo_identity_and_zero() {
        let q = FieldSpec::Rationals;
        let x = Element::new(vec![q.from_i64(2), q.from_i64(-3)]);
        let id = Matrix::identity(2, q);
        assert_eq!(apply_endo(&id, &x).unwrap(), x);
        let z = Matrix::zeros(2, 2, q);
        assert!(apply_endo(&z, &x).unwrap().is_zero());
    }

    #[test]
    fn apply_endo_respects_composition() {
        let f3 = FieldSpec::prime(3).unwrap();
        let mut state = 0x31u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 3) as i64
        };
        for _ in 0..100 {
            let mut m1 = Matrix::zeros(3, 3, f3);
            let mut m2 = Matrix::zeros(3, 3, f3);
            for r in 0..3 {
                for c in 0..3 {
                    m1.set(r, c, f3.from_i64(next()));
                    m2.set(r, c, f3.from_i64(next()));
                }
            }
            let x = Element::new((0..3).map(|_| f3.from_i64(next())).collect());
            let lhs = apply_endo(&m1.mul(&m2), &x).unwrap();
            let rhs = apply_endo(&m1, &apply_endo(&m2, &x).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn construction_validations() {
        let q = FieldSpec::Rationals;
        // super kind without grading
        assert!(MultiAlgebra::zero_algebra(q, 2, labels(&["h"]), Kind::SuperFirst, None).is_err());
        // third kind without endos
        assert!(matches!(
            MultiAlgebra::new(
                q,
                2,
                labels(&["h"]),
                Kind::Third,
                vec![BracketTensor::zero(2, q)],
                None,
                None
            ),
            Err(Error::MissingEndoSets)
        ));
        // empty label set
        assert!(LabelSet::new(vec![]).is_err());
        assert!(LabelSet::new(vec!["h".into(), "h".into()]).is_err());
    }

    #[test]
    fn even_matrix_detection() {
        let q = FieldSpec::Rationals;
        let g = Grading::from_bits(&[0, 1]).unwrap();
        assert!(is_even_matrix(&Matrix::identity(2, q), &g));
        let mut m = Matrix::zeros(2, 2, q);
        m.set(0, 1, q.one());
        assert!(!is_even_matrix(&m, &g));
    }
}
