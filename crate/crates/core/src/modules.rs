//! Ordinary modules over first- and second-kind (super)algebras: axiom
//! verification, adjoint modules, submodules, module annihilators, and
//! irreducibility classification.
//!
//! A representation is stored as one carrier matrix per (label, algebra
//! basis vector); evaluation at arbitrary algebra elements is by linearity.

use crate::algebra::{Element, Grading, Kind, MultiAlgebra, Parity};
use crate::axioms::{CheckResult, VerificationReport, Witness};
use crate::error::Error;
use crate::field::Scalar;
use crate::ideals::{dedup_distinguished, enumerate_graded_subspaces, is_graded_subspace, AnnihilatorKind, ClassificationVerdict};
use crate::linear::{enumerate_subspaces, Matrix, Subspace};
use crate::Result;

/// Names of the module identity checks.
pub mod names {
    pub const PARITY: &str = "module_parity";
    pub const BRACKET_ACTION_F: &str = "module_bracket_action";
    pub const BRACKET_ACTION_G: &str = "module_bracket_action_g";
    pub const ACTION_SWAP_FF: &str = "module_action_swap";
    pub const ACTION_SWAP_FG: &str = "module_action_swap_fg";
    pub const G_CHAIN_A: &str = "module_action_g_chain_a";
    pub const G_CHAIN_B: &str = "module_action_g_chain_b";
}

pub type SubmoduleVerdict = ClassificationVerdict;

/// A family of representation maps acting on a carrier space.
#[derive(Debug, Clone)]
pub struct ModuleRep {
    algebra: MultiAlgebra,
    carrier_dim: usize,
    carrier_grading: Option<Grading>,
    f: Vec<Vec<Matrix>>, // [label][algebra basis index]
    g: Option<Vec<Vec<Matrix>>>,
}

fn validate_family(
    name: &str,
    fam: &[Vec<Matrix>],
    algebra: &MultiAlgebra,
    carrier_dim: usize,
) -> Result<()> {
    if fam.len() != algebra.labels().len() {
        return Err(Error::SchemaError(format!(
            "{name} has {} label entries, algebra has {}",
            fam.len(),
            algebra.labels().len()
        )));
    }
    for per_label in fam {
        if per_label.len() != algebra.dim() {
            return Err(Error::SchemaError(format!(
                "{name} needs one matrix per algebra basis vector ({}), got {}",
                algebra.dim(),
                per_label.len()
            )));
        }
        for m in per_label {
            if m.rows() != carrier_dim || m.cols() != carrier_dim {
                return Err(Error::DimensionMismatch(format!(
                    "{name} matrix is {}x{}, carrier dim is {carrier_dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::FieldMismatch(format!(
                    "{} vs {}",
                    m.field(),
                    algebra.field()
                )));
            }
        }
    }
    Ok(())
}

impl ModuleRep {
    pub fn new(
        algebra: MultiAlgebra,
        carrier_dim: usize,
        carrier_grading: Option<Grading>,
        f: Vec<Vec<Matrix>>,
        g: Option<Vec<Vec<Matrix>>>,
    ) -> Result<ModuleRep> {
        if algebra.kind().is_third() {
            return Err(Error::KindMismatch(format!(
                "no module theory for kind {}",
                algebra.kind()
            )));
        }
        validate_family("f", &f, &algebra, carrier_dim)?;
        match &g {
            Some(g) => {
                if !algebra.kind().is_second() {
                    return Err(Error::SchemaError(
                        "only second-kind modules carry a g family".into(),
                    ));
                }
                validate_family("g", g, &algebra, carrier_dim)?;
            }
            None => {
                if algebra.kind().is_second() {
                    return Err(Error::MissingG);
                }
            }
        }
        match &carrier_grading {
            Some(cg) => {
                if !algebra.kind().is_super() {
                    return Err(Error::SchemaError(
                        "modules over ungraded kinds take no carrier grading".into(),
                    ));
                }
                if cg.len() != carrier_dim {
                    return Err(Error::SchemaError(format!(
                        "carrier grading length {} vs carrier dim {carrier_dim}",
                        cg.len()
                    )));
                }
            }
            None => {
                if algebra.kind().is_super() {
                    return Err(Error::SchemaError(
                        "modules over graded kinds need a carrier grading".into(),
                    ));
                }
            }
        }
        Ok(ModuleRep {
            algebra,
            carrier_dim,
            carrier_grading,
            f,
            g,
        })
    }

    pub fn algebra(&self) -> &MultiAlgebra {
        &self.algebra
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn carrier_grading(&self) -> Option<&Grading> {
        self.carrier_grading.as_ref()
    }

    pub fn has_g(&self) -> bool {
        self.g.is_some()
    }

    pub fn f_basis(&self, label: usize, i: usize) -> &Matrix {
        &self.f[label][i]
    }

    pub fn g_basis(&self, label: usize, i: usize) -> &Matrix {
        &self.g.as_ref().expect("g family present")[label][i]
    }

    pub fn f_family(&self) -> &[Vec<Matrix>] {
        &self.f
    }

    pub fn g_family(&self) -> Option<&[Vec<Matrix>]> {
        self.g.as_deref()
    }

    /// Linear extension of the f family at an algebra element.
    pub fn f_at(&self, label: usize, x: &Element) -> Matrix {
        linear_extension(&self.f[label], x, self.carrier_dim)
    }

    pub fn g_at(&self, label: usize, x: &Element) -> Matrix {
        linear_extension(self.g.as_ref().expect("g family present")[label].as_slice(), x, self.carrier_dim)
    }

    /// Perturbs one entry of one f matrix; mutation-testing support.
    pub fn with_f_entry(&self, label: usize, i: usize, r: usize, c: usize, v: Scalar) -> ModuleRep {
        let mut out = self.clone();
        out.f[label][i].set(r, c, v);
        out
    }
}

fn linear_extension(per_basis: &[Matrix], x: &Element, carrier_dim: usize) -> Matrix {
    let field = per_basis[0].field();
    let mut acc = Matrix::zeros(carrier_dim, carrier_dim, field);
    for (i, c) in x.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&per_basis[i].scale(c));
        }
    }
    acc
}

fn matrix_witness(
    name: &'static str,
    labels: Vec<usize>,
    basis: Vec<usize>,
    lhs: &Matrix,
    rhs: &Matrix,
) -> CheckResult {
    CheckResult {
        name,
        pass: false,
        witness: Some(Witness {
            labels,
            basis,
            endos: vec![],
            lhs: lhs.entries().to_vec(),
            rhs: rhs.entries().to_vec(),
        }),
    }
}

fn passed(name: &'static str) -> CheckResult {
    CheckResult {
        name,
        pass: true,
        witness: None,
    }
}

// (lhs, rhs) of one module identity instance at basis pair (i, j) and
// ordered label pair (h, k); `which` selects the identity by name.
fn module_instance(rep: &ModuleRep, which: &str, h: usize, k: usize, i: usize, j: usize) -> (Matrix, Matrix) {
    let a = &rep.algebra;
    let sign = |x: usize, y: usize| -> bool {
        match a.grading() {
            Some(g) => Grading::sign_flip(g.parity(x), g.parity(y)),
            None => false,
        }
    };
    let msign = |m: Matrix, flip: bool| if flip { m.neg() } else { m };
    match which {
        names::BRACKET_ACTION_F => {
            let prod = a.basis_product(k, i, j);
            let lhs = rep.f_at(h, &prod);
            let fh_i = rep.f_basis(h, i);
            let fk_j = rep.f_basis(k, j);
            let rhs = if a.kind().is_second() {
                // f_h(<x,y>_k) = [sign] f_h(x) f_k(y) - f_k(y) f_h(x)
                msign(fh_i.mul(fk_j), sign(i, j)).sub(&fk_j.mul(fh_i))
            } else {
                // f_h([x,y]_k) = f_h(x) f_k(y) - [sign] f_h(y) f_k(x)
                let fh_j = rep.f_basis(h, j);
                let fk_i = rep.f_basis(k, i);
                fh_i.mul(fk_j).sub(&msign(fh_j.mul(fk_i), sign(i, j)))
            };
            (lhs, rhs)
        }
        names::BRACKET_ACTION_G => {
            let prod = a.basis_product(k, i, j);
            let lhs = rep.g_at(h, &prod);
            let gh_i = rep.g_basis(h, i);
            let fk_j = rep.f_basis(k, j);
            // g_h(<x,y>_k) = [sign] g_h(x) f_k(y) - f_k(y) g_h(x)
            let rhs = msign(gh_i.mul(fk_j), sign(i, j)).sub(&fk_j.mul(gh_i));
            (lhs, rhs)
        }
        names::ACTION_SWAP_FF => {
            // f_k(x) f_h(y) = f_h(x) f_k(y)
            let lhs = rep.f_basis(k, i).mul(rep.f_basis(h, j));
            let rhs = rep.f_basis(h, i).mul(rep.f_basis(k, j));
            (lhs, rhs)
        }
        names::ACTION_SWAP_FG => {
            // f_k(x) g_h(y) = f_h(x) g_k(y)
            let lhs = rep.f_basis(k, i).mul(rep.g_basis(h, j));
            let rhs = rep.f_basis(h, i).mul(rep.g_basis(k, j));
            (lhs, rhs)
        }
        names::G_CHAIN_A => {
            // g_k(x) g_h(y) = g_h(x) f_k(y)
            let lhs = rep.g_basis(k, i).mul(rep.g_basis(h, j));
            let rhs = rep.g_basis(h, i).mul(rep.f_basis(k, j));
            (lhs, rhs)
        }
        names::G_CHAIN_B => {
            // g_h(x) f_k(y) = g_k(x) f_h(y)
            let lhs = rep.g_basis(h, i).mul(rep.f_basis(k, j));
            let rhs = rep.g_basis(k, i).mul(rep.f_basis(h, j));
            (lhs, rhs)
        }
        other => panic!("unknown module identity {other}"),
    }
}

fn sweep_module_identity(rep: &ModuleRep, which: &'static str) -> CheckResult {
    let s = rep.algebra.labels().len();
    let n = rep.algebra.dim();
    for h in 0..s {
        for k in 0..s {
            for i in 0..n {
                for j in 0..n {
                    let (lhs, rhs) = module_instance(rep, which, h, k, i, j);
                    if lhs != rhs {
                        return matrix_witness(which, vec![h, k], vec![i, j], &lhs, &rhs);
                    }
                }
            }
        }
    }
    passed(which)
}

/// For graded kinds every representation matrix of a basis vector must be a
/// parity-homogeneous map of that vector's parity.
fn check_module_parity(rep: &ModuleRep) -> CheckResult {
    let (Some(ag), Some(cg)) = (rep.algebra.grading(), rep.carrier_grading()) else {
        return passed(names::PARITY);
    };
    let fams: Vec<(usize, &Vec<Vec<Matrix>>)> = match &rep.g {
        Some(g) => vec![(0, &rep.f), (1, g)],
        None => vec![(0, &rep.f)],
    };
    for (fam_idx, fam) in fams {
        for (label, per_basis) in fam.iter().enumerate() {
            for (i, m) in per_basis.iter().enumerate() {
                let want = ag.parity(i);
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        let homogeneous = cg.parity(r) == cg.parity(c) + want;
                        if !homogeneous && !m.get(r, c).is_zero() {
                            return CheckResult {
                                name: names::PARITY,
                                pass: false,
                                witness: Some(Witness {
                                    labels: vec![label],
                                    basis: vec![i, r, c],
                                    endos: vec![fam_idx],
                                    lhs: vec![m.get(r, c).clone()],
                                    rhs: vec![m.field().zero()],
                                }),
                            };
                        }
                    }
                }
            }
        }
    }
    passed(names::PARITY)
}

/// Verifies every module identity applicable to the algebra's kind on all
/// basis pairs and ordered label pairs.
pub fn check_module(rep: &ModuleRep) -> Result<VerificationReport> {
    let kind = rep.algebra.kind();
    if kind.is_third() {
        return Err(Error::KindMismatch(format!("no module theory for kind {kind}")));
    }
    if kind.is_second() && rep.g.is_none() {
        return Err(Error::MissingG);
    }
    let mut checks = Vec::new();
    if kind.is_super() {
        checks.push(check_module_parity(rep));
    }
    checks.push(sweep_module_identity(rep, names::BRACKET_ACTION_F));
    if kind.is_second() {
        checks.push(sweep_module_identity(rep, names::BRACKET_ACTION_G));
        checks.push(sweep_module_identity(rep, names::G_CHAIN_A));
        checks.push(sweep_module_identity(rep, names::G_CHAIN_B));
        checks.push(sweep_module_identity(rep, names::ACTION_SWAP_FF));
        checks.push(sweep_module_identity(rep, names::ACTION_SWAP_FG));
    } else {
        checks.push(sweep_module_identity(rep, names::ACTION_SWAP_FF));
    }
    Ok(VerificationReport { checks })
}

/// Re-evaluates a module identity witness; true when it reproduces exactly.
pub fn recheck_module_witness(rep: &ModuleRep, name: &str, w: &Witness) -> bool {
    if name == names::PARITY {
        let fam = if w.endos[0] == 0 {
            &rep.f
        } else {
            match &rep.g {
                Some(g) => g,
                None => return false,
            }
        };
        let m = &fam[w.labels[0]][w.basis[0]];
        let entry = m.get(w.basis[1], w.basis[2]).clone();
        return vec![entry] == w.lhs && !w.lhs.iter().all(Scalar::is_zero);
    }
    let statics = [
        names::BRACKET_ACTION_F,
        names::BRACKET_ACTION_G,
        names::ACTION_SWAP_FF,
        names::ACTION_SWAP_FG,
        names::G_CHAIN_A,
        names::G_CHAIN_B,
    ];
    let Some(which) = statics.iter().find(|&&s| s == name) else {
        return false;
    };
    let (lhs, rhs) = module_instance(rep, which, w.labels[0], w.labels[1], w.basis[0], w.basis[1]);
    lhs.entries() == w.lhs.as_slice() && rhs.entries() == w.rhs.as_slice() && lhs != rhs
}

/// The algebra acting on itself. First kinds act by left bracket
/// multiplication; second kinds by the pair (negated right multiplication,
/// left multiplication). The result is returned unverified: whether it
/// satisfies the module identities is measured by `check_module`, not
/// assumed.
pub fn adjoint_module(a: &MultiAlgebra) -> Result<ModuleRep> {
    if a.kind().is_third() {
        return Err(Error::KindMismatch(format!(
            "no module theory for kind {}",
            a.kind()
        )));
    }
    let n = a.dim();
    let field = a.field();
    let column_matrix = |cols: Vec<Element>| {
        let mut m = Matrix::zeros(n, n, field);
        for (j, col) in cols.iter().enumerate() {
            for (r, v) in col.coeffs().iter().enumerate() {
                m.set(r, j, v.clone());
            }
        }
        m
    };
    let mut f = Vec::new();
    let mut g = Vec::new();
    for label in 0..a.labels().len() {
        let mut f_label = Vec::new();
        let mut g_label = Vec::new();
        for i in 0..n {
            if a.kind().is_second() {
                // f = -(right multiplication), g = left multiplication
                let f_cols = (0..n)
                    .map(|j| a.basis_product(label, j, i).neg())
                    .collect();
                let g_cols = (0..n).map(|j| a.basis_product(label, i, j)).collect();
                f_label.push(column_matrix(f_cols));
                g_label.push(column_matrix(g_cols));
            } else {
                let f_cols = (0..n).map(|j| a.basis_product(label, i, j)).collect();
                f_label.push(column_matrix(f_cols));
            }
        }
        f.push(f_label);
        if a.kind().is_second() {
            g.push(g_label);
        }
    }
    ModuleRep::new(
        a.clone(),
        n,
        a.grading().cloned(),
        f,
        a.kind().is_second().then_some(g),
    )
}

/// Closure of a carrier subspace under every representation matrix; graded
/// kinds require a graded subspace.
pub fn is_submodule(rep: &ModuleRep, u: &Subspace) -> Result<bool> {
    if u.ambient_dim() != rep.carrier_dim {
        return Err(Error::DimensionMismatch(format!(
            "subspace ambient {} vs carrier dim {}",
            u.ambient_dim(),
            rep.carrier_dim
        )));
    }
    if let Some(cg) = rep.carrier_grading() {
        if !is_graded_subspace(u, cg) {
            return Ok(false);
        }
    }
    let fams: Vec<&Vec<Vec<Matrix>>> = match &rep.g {
        Some(g) => vec![&rep.f, g],
        None => vec![&rep.f],
    };
    for fam in fams {
        for per_basis in fam {
            for m in per_basis {
                for row in u.basis_rows() {
                    if !u.member(&m.apply(&row)) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

fn ann_kind_matches(kind: Kind, which: AnnihilatorKind) -> bool {
    matches!(
        (kind, which),
        (Kind::First, AnnihilatorKind::First)
            | (Kind::SuperFirst, AnnihilatorKind::SuperFirst)
            | (Kind::Second, AnnihilatorKind::SecondPlus)
            | (Kind::Second, AnnihilatorKind::SecondMinus)
            | (Kind::SuperSecond, AnnihilatorKind::SuperSecondPlus)
            | (Kind::SuperSecond, AnnihilatorKind::SuperSecondMinus)
    )
}

/// Generator vectors of a module annihilator: difference maps applied to
/// every carrier basis vector, over all algebra basis vectors and ordered
/// label pairs.
pub fn module_annihilator_generators(
    rep: &ModuleRep,
    which: AnnihilatorKind,
) -> Result<Vec<Vec<Scalar>>> {
    if !ann_kind_matches(rep.algebra.kind(), which) {
        return Err(Error::KindMismatch(format!(
            "module annihilator {} over an algebra of kind {}",
            which.as_str(),
            rep.algebra.kind()
        )));
    }
    let s = rep.algebra.labels().len();
    let n = rep.algebra.dim();
    let m = rep.carrier_dim;
    let field = rep.algebra.field();
    let mut gens = Vec::new();
    let push_diff = |a: &Matrix, b: &Matrix, gens: &mut Vec<Vec<Scalar>>| {
        let diff = a.sub(b);
        for v in 0..m {
            let col = Element::basis(m, v, field);
            gens.push(diff.apply(col.coeffs()));
        }
    };
    for h in 0..s {
        for k in 0..s {
            for i in 0..n {
                match which {
                    AnnihilatorKind::First | AnnihilatorKind::SuperFirst => {
                        push_diff(rep.f_basis(h, i), rep.f_basis(k, i), &mut gens);
                    }
                    AnnihilatorKind::SecondPlus | AnnihilatorKind::SuperSecondPlus => {
                        push_diff(rep.g_basis(h, i), rep.f_basis(k, i), &mut gens);
                    }
                    AnnihilatorKind::SecondMinus | AnnihilatorKind::SuperSecondMinus => {
                        push_diff(rep.f_basis(h, i), rep.f_basis(k, i), &mut gens);
                        push_diff(rep.g_basis(h, i), rep.g_basis(k, i), &mut gens);
                    }
                }
            }
        }
    }
    Ok(gens)
}

/// The span of the annihilator generators, asserted to be a submodule (and
/// graded where applicable) before it is returned.
pub fn module_annihilator(rep: &ModuleRep, which: AnnihilatorKind) -> Result<Subspace> {
    let gens = module_annihilator_generators(rep, which)?;
    let span = Subspace::span(&gens, rep.carrier_dim, rep.algebra.field())?;
    if let Some(cg) = rep.carrier_grading() {
        if !is_graded_subspace(&span, cg) {
            return Err(Error::InternalClosureFailure(format!(
                "module annihilator {} is not graded",
                which.as_str()
            )));
        }
    }
    if !is_submodule(rep, &span)? {
        return Err(Error::InternalClosureFailure(format!(
            "module annihilator {} is not a submodule",
            which.as_str()
        )));
    }
    Ok(span)
}

fn module_distinguished(rep: &ModuleRep) -> Result<Vec<Subspace>> {
    let field = rep.algebra.field();
    let mut members = vec![Subspace::zero(rep.carrier_dim, field)];
    for which in AnnihilatorKind::for_kind(rep.algebra.kind()) {
        members.push(module_annihilator(rep, which)?);
    }
    members.push(Subspace::full(rep.carrier_dim, field));
    Ok(dedup_distinguished(members))
}

/// Exhaustive irreducibility classification over small prime fields:
/// enumerate the (graded) subspaces of the carrier, filter submodules,
/// compare with the distinguished set.
pub fn classify_irreducibility(rep: &ModuleRep) -> Result<SubmoduleVerdict> {
    let distinguished = module_distinguished(rep)?;
    let universe = match rep.carrier_grading() {
        Some(cg) => enumerate_graded_subspaces(cg, rep.algebra.field()),
        None => enumerate_subspaces(rep.carrier_dim, rep.algebra.field()),
    }
    .map_err(|e| match e {
        Error::BoundsExceeded(msg) => Error::BoundsExceeded(format!(
            "exhaustive irreducibility classification unavailable: {msg}"
        )),
        other => other,
    })?;
    let mut offending = None;
    for s in universe {
        if distinguished.contains(&s) {
            continue;
        }
        if is_submodule(rep, &s)? {
            offending = Some(s);
            break;
        }
    }
    Ok(SubmoduleVerdict {
        i: distinguished.len(),
        simple: Some(offending.is_none()),
        offending,
        distinguished,
        exhaustive: true,
    })
}

/// The smallest (graded) submodule containing `seed`.
pub fn generated_submodule(rep: &ModuleRep, seed: &[Scalar]) -> Result<Subspace> {
    let m = rep.carrier_dim;
    let field = rep.algebra.field();
    let parity_split = |v: &[Scalar], rows: &mut Vec<Vec<Scalar>>| match rep.carrier_grading() {
        Some(cg) => {
            for p in [Parity::Even, Parity::Odd] {
                let mut comp = vec![field.zero(); m];
                for (i, c) in v.iter().enumerate() {
                    if cg.parity(i) == p {
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
    let mut current = Subspace::span(&seed_rows, m, field)?;
    let fams: Vec<Vec<Vec<Matrix>>> = match &rep.g {
        Some(g) => vec![rep.f.clone(), g.clone()],
        None => vec![rep.f.clone()],
    };
    loop {
        let before = current.dim();
        let mut rows = current.basis_rows();
        for row in current.basis_rows() {
            for fam in &fams {
                for per_basis in fam {
                    for mat in per_basis {
                        parity_split(&mat.apply(&row), &mut rows);
                    }
                }
            }
        }
        let next = Subspace::span(&rows, m, field)?;
        if next.dim() == before {
            return Ok(next);
        }
        current = next;
    }
}

/// Sound-incomplete counterpart of `classify_irreducibility` for fields
/// where subspace enumeration is impossible.
pub fn classify_irreducibility_generated(rep: &ModuleRep) -> Result<SubmoduleVerdict> {
    let distinguished = module_distinguished(rep)?;
    let field = rep.algebra.field();
    let mut seeds: Vec<Vec<Scalar>> = (0..rep.carrier_dim)
        .map(|v| Element::basis(rep.carrier_dim, v, field).into_coeffs())
        .collect();
    for which in AnnihilatorKind::for_kind(rep.algebra.kind()) {
        seeds.extend(module_annihilator_generators(rep, which)?);
    }
    let mut offending: Option<Subspace> = None;
    for seed in seeds {
        if seed.iter().all(Scalar::is_zero) {
            continue;
        }
        let sub = generated_submodule(rep, &seed)?;
        if !distinguished.contains(&sub) {
            let better = match &offending {
                None => true,
                Some(cur) => sub.order_key() < cur.order_key(),
            };
            if better {
                offending = Some(sub);
            }
        }
    }
    Ok(SubmoduleVerdict {
        i: distinguished.len(),
        simple: if offending.is_some() { Some(false) } else { None },
        offending,
        distinguished,
        exhaustive: false,
    })
}

/// Exhaustive classification when possible, generated mode otherwise.
pub fn classify_irreducibility_auto(rep: &ModuleRep) -> Result<SubmoduleVerdict> {
    match classify_irreducibility(rep) {
        Err(Error::BoundsExceeded(_)) => classify_irreducibility_generated(rep),
        other => other,
    }
}
