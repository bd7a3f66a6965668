//! Strict monoidal structures on finite categories, lax/strong monoidal
//! functors, monoidal natural transformations, and their coherence
//! validators.
//!
//! Only *strict* monoidal categories are representable: associators and
//! unitors are identities, so every coherence condition is a table
//! equality. Two functor flavors exist side by side: [`MonoidalFunctor`]
//! between finite monoidal categories (the "reindexing" side, required
//! to be strong where inverses are needed), and [`LaxMonoidalFunctor`]
//! from a finite monoidal category into skeletal sets with its strict
//! cartesian tensor (the "value" side).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{
    product_category, same_category, FinCategory, FunctorData,
};
use crate::graded::FiniteMonoid;
use crate::report::ValidationReport;
use crate::setskel::{
    is_bijective, swap_map, tensor_of_set_functors, SetFunctor, SetMap, SetNatTrans,
};

/// A strict monoidal structure on a finite category: a unit object and
/// total tensor tables on objects and morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalStructure {
    pub base: Arc<FinCategory>,
    pub unit_object: usize,
    /// Row-major `|obj| x |obj|` table.
    pub tensor_obj: Vec<usize>,
    /// Row-major `|mor| x |mor|` table.
    pub tensor_mor: Vec<usize>,
}

impl MonoidalStructure {
    pub fn tensor_objects(&self, a: usize, b: usize) -> usize {
        self.tensor_obj[a * self.base.num_objects + b]
    }

    pub fn tensor_morphisms(&self, f: usize, g: usize) -> usize {
        self.tensor_mor[f * self.base.num_morphisms() + g]
    }
}

/// A finite monoid as a strict monoidal category with only identity
/// morphisms: the multiplication becomes the tensor on objects and on
/// identities alike.
pub fn monoidal_from_monoid(m: &FiniteMonoid) -> Result<MonoidalStructure> {
    let base = Arc::new(crate::fincat::discrete_from_monoid(m)?);
    Ok(MonoidalStructure {
        base,
        unit_object: m.unit,
        tensor_obj: m.mult.clone(),
        tensor_mor: m.mult.clone(),
    })
}

/// The product of two strict monoidal categories, on the row-major
/// product category.
pub fn product_monoidal(a: &MonoidalStructure, b: &MonoidalStructure) -> MonoidalStructure {
    let base = Arc::new(product_category(&a.base, &b.base));
    let nb = b.base.num_objects;
    let mb = b.base.num_morphisms();
    let n = base.num_objects;
    let mut tensor_obj = vec![0; n * n];
    for p in 0..n {
        for q in 0..n {
            tensor_obj[p * n + q] =
                a.tensor_objects(p / nb, q / nb) * nb + b.tensor_objects(p % nb, q % nb);
        }
    }
    let m = base.num_morphisms();
    let mut tensor_mor = vec![0; m * m];
    for p in 0..m {
        for q in 0..m {
            tensor_mor[p * m + q] =
                a.tensor_morphisms(p / mb, q / mb) * mb + b.tensor_morphisms(p % mb, q % mb);
        }
    }
    MonoidalStructure {
        base,
        unit_object: a.unit_object * nb + b.unit_object,
        tensor_obj,
        tensor_mor,
    }
}

/// The tensor as an ordinary functor `base x base -> base`, for
/// whiskering constructions. `product_base` must be the row-major
/// product of `ms.base` with itself.
pub fn tensor_as_functor(
    ms: &MonoidalStructure,
    product_base: &Arc<FinCategory>,
) -> Result<FunctorData> {
    let n = ms.base.num_objects;
    let m = ms.base.num_morphisms();
    if product_base.num_objects != n * n || product_base.num_morphisms() != m * m {
        return Err(Error::FrameMismatch(
            "tensor_as_functor: product category has unexpected size".into(),
        ));
    }
    Ok(FunctorData {
        source: Arc::clone(product_base),
        target: Arc::clone(&ms.base),
        object_map: ms.tensor_obj.clone(),
        morphism_map: ms.tensor_mor.clone(),
    })
}

/// Exhaustive validation: bifunctoriality plus strict associativity and
/// units on objects *and* morphisms, every violation located.
pub fn validate_monoidal(ms: &MonoidalStructure) -> Result<ValidationReport> {
    let subject = "monoidal-structure";
    let n = ms.base.num_objects;
    let m = ms.base.num_morphisms();
    if ms.tensor_obj.len() != n * n || ms.tensor_mor.len() != m * m {
        return Err(Error::structure(subject, "tensor tables have wrong lengths"));
    }
    if ms.unit_object >= n {
        return Err(Error::structure(subject, "unit object out of range"));
    }
    if let Some(&v) = ms.tensor_obj.iter().find(|&&v| v >= n) {
        return Err(Error::structure(subject, format!("object tensor value {v} out of range")));
    }
    if let Some(&v) = ms.tensor_mor.iter().find(|&&v| v >= m) {
        return Err(Error::structure(subject, format!("morphism tensor value {v} out of range")));
    }

    let mut report = ValidationReport::new(subject);
    let cat = &ms.base;
    for f in 0..m {
        for g in 0..m {
            let fg = ms.tensor_morphisms(f, g);
            let (fs, ft) = cat.morphisms[f];
            let (gs, gt) = cat.morphisms[g];
            if cat.morphisms[fg] != (ms.tensor_objects(fs, gs), ms.tensor_objects(ft, gt)) {
                report.push(
                    "tensor-endpoints",
                    vec![f, g],
                    format!("tensor of morphisms ({f}, {g}) has wrong endpoints"),
                );
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if ms.tensor_morphisms(cat.id(a), cat.id(b)) != cat.id(ms.tensor_objects(a, b)) {
                report.push(
                    "tensor-identity",
                    vec![a, b],
                    format!("id_{a} (x) id_{b} is not the identity of the tensor object"),
                );
            }
        }
    }
    for f1 in 0..m {
        for f2 in 0..m {
            let Some(f) = cat.then(f1, f2) else { continue };
            for g1 in 0..m {
                for g2 in 0..m {
                    let Some(g) = cat.then(g1, g2) else { continue };
                    let lhs = cat.then(ms.tensor_morphisms(f1, g1), ms.tensor_morphisms(f2, g2));
                    if lhs != Some(ms.tensor_morphisms(f, g)) {
                        report.push(
                            "tensor-composition",
                            vec![f1, g1, f2, g2],
                            "tensor does not preserve composition".to_string(),
                        );
                    }
                }
            }
        }
    }
    let e = ms.unit_object;
    for a in 0..n {
        if ms.tensor_objects(a, e) != a {
            report.push("right-unit-object", vec![a], format!("{a} (x) 1 != {a}"));
        }
        if ms.tensor_objects(e, a) != a {
            report.push("left-unit-object", vec![a], format!("1 (x) {a} != {a}"));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if ms.tensor_objects(ms.tensor_objects(a, b), c)
                    != ms.tensor_objects(a, ms.tensor_objects(b, c))
                {
                    report.push(
                        "associativity-object",
                        vec![a, b, c],
                        "object tensor is not strictly associative".to_string(),
                    );
                }
            }
        }
    }
    let ie = cat.id(e);
    for f in 0..m {
        if ms.tensor_morphisms(f, ie) != f {
            report.push("right-unit-morphism", vec![f], format!("{f} (x) id_1 != {f}"));
        }
        if ms.tensor_morphisms(ie, f) != f {
            report.push("left-unit-morphism", vec![f], format!("id_1 (x) {f} != {f}"));
        }
    }
    for f in 0..m {
        for g in 0..m {
            for h in 0..m {
                if ms.tensor_morphisms(ms.tensor_morphisms(f, g), h)
                    != ms.tensor_morphisms(f, ms.tensor_morphisms(g, h))
                {
                    report.push(
                        "associativity-morphism",
                        vec![f, g, h],
                        "morphism tensor is not strictly associative".to_string(),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// A lax monoidal functor between strict monoidal finite categories:
/// an underlying functor with a unit morphism `eta: 1 -> F(1)` and a
/// multiplication family `mu_{a,b}: F(a) (x) F(b) -> F(a (x) b)`, both
/// morphisms of the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalFunctor {
    pub source: MonoidalStructure,
    pub target: MonoidalStructure,
    pub functor: FunctorData,
    pub eta: usize,
    /// Row-major over source object pairs.
    pub mu: Vec<usize>,
}

impl MonoidalFunctor {
    pub fn mu_at(&self, a: usize, b: usize) -> usize {
        self.mu[a * self.source.base.num_objects + b]
    }

    pub fn identity(ms: &MonoidalStructure) -> Self {
        let n = ms.base.num_objects;
        let mut mu = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mu.push(ms.base.id(ms.tensor_objects(a, b)));
            }
        }
        MonoidalFunctor {
            source: ms.clone(),
            target: ms.clone(),
            functor: FunctorData::identity(&ms.base),
            eta: ms.base.id(ms.unit_object),
            mu,
        }
    }
}

pub fn validate_monoidal_functor(f: &MonoidalFunctor) -> Result<ValidationReport> {
    let subject = "monoidal-functor";
    if !same_category(&f.functor.source, &f.source.base)
        || !same_category(&f.functor.target, &f.target.base)
    {
        return Err(Error::FrameMismatch(
            "monoidal functor frames do not match its monoidal structures".into(),
        ));
    }
    let n = f.source.base.num_objects;
    if f.mu.len() != n * n {
        return Err(Error::structure(subject, "mu family has wrong length"));
    }
    let tgt = &f.target.base;
    if f.eta >= tgt.num_morphisms()
        || tgt.morphisms[f.eta]
            != (
                f.target.unit_object,
                f.functor.on_object(f.source.unit_object),
            )
    {
        return Err(Error::structure(subject, "eta has wrong endpoints"));
    }
    for a in 0..n {
        for b in 0..n {
            let mu = f.mu_at(a, b);
            if mu >= tgt.num_morphisms() {
                return Err(Error::structure(subject, format!("mu[{a},{b}] out of range")));
            }
            let expect = (
                f.target
                    .tensor_objects(f.functor.on_object(a), f.functor.on_object(b)),
                f.functor.on_object(f.source.tensor_objects(a, b)),
            );
            if tgt.morphisms[mu] != expect {
                return Err(Error::structure(
                    subject,
                    format!("mu[{a},{b}] has wrong endpoints"),
                ));
            }
        }
    }

    let mut report = ValidationReport::new(subject);
    report.absorb(crate::fincat::validate_functor(&f.functor)?);

    let src = &f.source.base;
    for m1 in 0..src.num_morphisms() {
        for m2 in 0..src.num_morphisms() {
            let (a, a2) = src.morphisms[m1];
            let (b, b2) = src.morphisms[m2];
            let lhs = tgt.then(
                f.target
                    .tensor_morphisms(f.functor.on_morphism(m1), f.functor.on_morphism(m2)),
                f.mu_at(a2, b2),
            );
            let rhs = tgt.then(
                f.mu_at(a, b),
                f.functor
                    .on_morphism(f.source.tensor_morphisms(m1, m2)),
            );
            if lhs != rhs || lhs.is_none() {
                report.push(
                    "mu-naturality",
                    vec![m1, m2],
                    format!("mu is not natural at morphisms ({m1}, {m2})"),
                );
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = tgt.then(
                    f.target
                        .tensor_morphisms(f.mu_at(a, b), tgt.id(f.functor.on_object(c))),
                    f.mu_at(f.source.tensor_objects(a, b), c),
                );
                let rhs = tgt.then(
                    f.target
                        .tensor_morphisms(tgt.id(f.functor.on_object(a)), f.mu_at(b, c)),
                    f.mu_at(a, f.source.tensor_objects(b, c)),
                );
                if lhs != rhs || lhs.is_none() {
                    report.push(
                        "mu-associativity",
                        vec![a, b, c],
                        format!("mu associativity fails at ({a}, {b}, {c})"),
                    );
                }
            }
        }
    }
    let e = f.source.unit_object;
    for a in 0..n {
        let fa_id = tgt.id(f.functor.on_object(a));
        let right = tgt.then(f.target.tensor_morphisms(fa_id, f.eta), f.mu_at(a, e));
        if right != Some(fa_id) {
            report.push("right-unit", vec![a], format!("right unit law fails at {a}"));
        }
        let left = tgt.then(f.target.tensor_morphisms(f.eta, fa_id), f.mu_at(e, a));
        if left != Some(fa_id) {
            report.push("left-unit", vec![a], format!("left unit law fails at {a}"));
        }
    }
    Ok(report)
}

/// Inverses of a strong monoidal functor's structure morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalFunctorInverses {
    pub eta_inv: usize,
    pub mu_inv: Vec<usize>,
}

fn find_inverse(cat: &FinCategory, m: usize) -> Option<usize> {
    let (s, t) = cat.morphisms[m];
    (0..cat.num_morphisms()).find(|&c| {
        cat.morphisms[c] == (t, s)
            && cat.then(m, c) == Some(cat.id(s))
            && cat.then(c, m) == Some(cat.id(t))
    })
}

/// True (with inverses) iff `eta` and every `mu` component is
/// invertible, found by table search in the target category.
pub fn is_strong(f: &MonoidalFunctor) -> Option<MonoidalFunctorInverses> {
    let cat = &f.target.base;
    let eta_inv = find_inverse(cat, f.eta)?;
    let mu_inv = f
        .mu
        .iter()
        .map(|&m| find_inverse(cat, m))
        .collect::<Option<Vec<_>>>()?;
    Some(MonoidalFunctorInverses { eta_inv, mu_inv })
}

/// A lax monoidal set-valued functor: a functor into skeletal sets with
/// a unit element pick `eta: 1 -> F(1)` and multiplication tables
/// `mu_{a,b}: F(a) (x) F(b) -> F(a (x) b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxMonoidalFunctor {
    pub source: MonoidalStructure,
    pub functor: SetFunctor,
    pub eta: SetMap,
    /// Row-major over source object pairs.
    pub mu: Vec<SetMap>,
}

impl LaxMonoidalFunctor {
    pub fn mu_at(&self, a: usize, b: usize) -> &SetMap {
        &self.mu[a * self.source.base.num_objects + b]
    }
}

pub fn validate_lax_monoidal(f: &LaxMonoidalFunctor) -> Result<ValidationReport> {
    let subject = "lax-monoidal-functor";
    if !same_category(&f.functor.source, &f.source.base) {
        return Err(Error::FrameMismatch(
            "lax functor does not live on its monoidal base".into(),
        ));
    }
    let n = f.source.base.num_objects;
    if f.mu.len() != n * n {
        return Err(Error::structure(subject, "mu family has wrong length"));
    }
    if f.eta.source != crate::setskel::SetObj::UNIT
        || f.eta.target != f.functor.on_object(f.source.unit_object)
        || !f.eta.is_valid()
    {
        return Err(Error::structure(subject, "eta has wrong endpoints"));
    }
    for a in 0..n {
        for b in 0..n {
            let mu = f.mu_at(a, b);
            let expect_src = f.functor.on_object(a).tensor(f.functor.on_object(b));
            let expect_tgt = f.functor.on_object(f.source.tensor_objects(a, b));
            if mu.source != expect_src || mu.target != expect_tgt || !mu.is_valid() {
                return Err(Error::structure(
                    subject,
                    format!("mu[{a},{b}] has wrong endpoints"),
                ));
            }
        }
    }

    let mut report = ValidationReport::new(subject);
    report.absorb(crate::setskel::validate_set_functor(&f.functor)?);

    let src = &f.source.base;
    for m1 in 0..src.num_morphisms() {
        for m2 in 0..src.num_morphisms() {
            let (a, a2) = src.morphisms[m1];
            let (b, b2) = src.morphisms[m2];
            let lhs = f
                .functor
                .on_morphism(m1)
                .tensor(f.functor.on_morphism(m2))
                .then(f.mu_at(a2, b2))?;
            let rhs = f
                .mu_at(a, b)
                .then(f.functor.on_morphism(f.source.tensor_morphisms(m1, m2)))?;
            if lhs != rhs {
                report.push(
                    "mu-naturality",
                    vec![m1, m2],
                    format!("mu is not natural at morphisms ({m1}, {m2})"),
                );
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let id_fc = SetMap::identity(f.functor.on_object(c));
                let id_fa = SetMap::identity(f.functor.on_object(a));
                let lhs = f
                    .mu_at(a, b)
                    .tensor(&id_fc)
                    .then(f.mu_at(f.source.tensor_objects(a, b), c))?;
                let rhs = id_fa
                    .tensor(f.mu_at(b, c))
                    .then(f.mu_at(a, f.source.tensor_objects(b, c)))?;
                if lhs != rhs {
                    report.push(
                        "mu-associativity",
                        vec![a, b, c],
                        format!("mu associativity fails at ({a}, {b}, {c})"),
                    );
                }
            }
        }
    }
    let e = f.source.unit_object;
    for a in 0..n {
        let id_fa = SetMap::identity(f.functor.on_object(a));
        let right = id_fa.tensor(&f.eta).then(f.mu_at(a, e))?;
        if right != id_fa {
            report.push("right-unit", vec![a], format!("right unit law fails at {a}"));
        }
        let left = f.eta.tensor(&id_fa).then(f.mu_at(e, a))?;
        if left != id_fa {
            report.push("left-unit", vec![a], format!("left unit law fails at {a}"));
        }
    }
    Ok(report)
}

/// Inverses of a strong lax structure on a set-valued functor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxInverses {
    pub eta_inv: SetMap,
    pub mu_inv: Vec<SetMap>,
}

/// True (with inverse tables) iff `eta` and every `mu` table is a
/// bijection.
pub fn is_strong_lax(f: &LaxMonoidalFunctor) -> Option<LaxInverses> {
    let eta_inv = is_bijective(&f.eta)?;
    let mu_inv = f.mu.iter().map(is_bijective).collect::<Option<Vec<_>>>()?;
    Some(LaxInverses { eta_inv, mu_inv })
}

/// `F (x) G` on the product monoidal category: objects map to
/// `F(a) (x) G(b)`, lax data uses the middle-four swap
/// `F a (x) G b (x) F c (x) G d -> F a (x) F c (x) G b (x) G d`.
pub fn tensor_of_functors(
    f: &LaxMonoidalFunctor,
    g: &LaxMonoidalFunctor,
) -> Result<LaxMonoidalFunctor> {
    let source = product_monoidal(&f.source, &g.source);
    let functor = tensor_of_set_functors(&f.functor, &g.functor, &source.base)?;
    let eta = f.eta.tensor(&g.eta);
    let nb = g.source.base.num_objects;
    let n = source.base.num_objects;
    let mut mu = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            let (a, b) = (p / nb, p % nb);
            let (c, d) = (q / nb, q % nb);
            let id_fa = SetMap::identity(f.functor.on_object(a));
            let id_gd = SetMap::identity(g.functor.on_object(d));
            let mid = swap_map(g.functor.on_object(b), f.functor.on_object(c));
            let rearrange = id_fa.tensor(&mid).tensor(&id_gd);
            let multiply = f.mu_at(a, c).tensor(g.mu_at(b, d));
            mu.push(rearrange.then(&multiply)?);
        }
    }
    Ok(LaxMonoidalFunctor {
        source,
        functor,
        eta,
        mu,
    })
}

/// The composite lax structure on `outer . inner` for a set-valued
/// `outer` after a monoidal `inner`: unit `eta_outer then
/// outer(eta_inner)`, multiplication `mu_outer then outer(mu_inner)`.
pub fn compose_lax_over_mon(
    outer: &LaxMonoidalFunctor,
    inner: &MonoidalFunctor,
) -> Result<LaxMonoidalFunctor> {
    if inner.target != outer.source {
        return Err(Error::FrameMismatch(
            "compose_lax_over_mon: inner target differs from outer source".into(),
        ));
    }
    let functor = outer.functor.precompose(&inner.functor)?;
    let eta = outer
        .eta
        .then(outer.functor.on_morphism(inner.eta))?;
    let n = inner.source.base.num_objects;
    let mut mu = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let ga = inner.functor.on_object(a);
            let gb = inner.functor.on_object(b);
            mu.push(
                outer
                    .mu_at(ga, gb)
                    .then(outer.functor.on_morphism(inner.mu_at(a, b)))?,
            );
        }
    }
    Ok(LaxMonoidalFunctor {
        source: inner.source.clone(),
        functor,
        eta,
        mu,
    })
}

/// A natural transformation between lax monoidal set-valued functors on
/// the same monoidal base, required to commute with units and
/// multiplications.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalNatTrans {
    pub source: LaxMonoidalFunctor,
    pub target: LaxMonoidalFunctor,
    pub components: Vec<SetMap>,
}

impl MonoidalNatTrans {
    pub fn component(&self, o: usize) -> &SetMap {
        &self.components[o]
    }

    pub fn underlying(&self) -> SetNatTrans {
        SetNatTrans {
            source: self.source.functor.clone(),
            target: self.target.functor.clone(),
            components: self.components.clone(),
        }
    }

    pub fn identity(f: &LaxMonoidalFunctor) -> Self {
        MonoidalNatTrans {
            source: f.clone(),
            target: f.clone(),
            components: f
                .functor
                .obj
                .iter()
                .map(|&o| SetMap::identity(o))
                .collect(),
        }
    }
}

/// Checks naturality plus the two monoidality equations: unit
/// compatibility `eta_P then t_1 == eta_Q` and multiplication
/// compatibility `mu_P then t_{a(x)b} == (t_a (x) t_b) then mu_Q`
/// per object pair.
pub fn validate_monoidal_nat_trans(t: &MonoidalNatTrans) -> Result<ValidationReport> {
    if t.source.source != t.target.source {
        return Err(Error::FrameMismatch(
            "monoidal nat trans frames live on different monoidal bases".into(),
        ));
    }
    let mut report = ValidationReport::new("monoidal-nat-trans");
    report.absorb(crate::setskel::validate_set_nat_trans(&t.underlying())?);

    let ms = &t.source.source;
    let e = ms.unit_object;
    if t.source.eta.then(&t.components[e])? != t.target.eta {
        report.push(
            "unit-compatibility",
            vec![e],
            "component at the unit does not carry eta to eta".to_string(),
        );
    }
    let n = ms.base.num_objects;
    for a in 0..n {
        for b in 0..n {
            let ab = ms.tensor_objects(a, b);
            let lhs = t.source.mu_at(a, b).then(&t.components[ab])?;
            let rhs = t.components[a]
                .tensor(&t.components[b])
                .then(t.target.mu_at(a, b))?;
            if lhs != rhs {
                report.push(
                    "multiplication-compatibility",
                    vec![a, b],
                    format!("multiplication square fails at objects ({a}, {b})"),
                );
            }
        }
    }
    Ok(report)
}

/// "s then t" vertically on monoidal transformations.
pub fn vertical_compose_monoidal(
    s: &MonoidalNatTrans,
    t: &MonoidalNatTrans,
) -> Result<MonoidalNatTrans> {
    if s.target != t.source {
        return Err(Error::FrameMismatch(
            "vertical_compose_monoidal: middle functors differ".into(),
        ));
    }
    let components = s
        .components
        .iter()
        .zip(&t.components)
        .map(|(a, b)| a.then(b))
        .collect::<Result<Vec<_>>>()?;
    Ok(MonoidalNatTrans {
        source: s.source.clone(),
        target: t.target.clone(),
        components,
    })
}
