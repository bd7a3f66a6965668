//! Monoid-graded monoids in finite sets with regrading along monoid
//! homomorphisms, and graded rings over finite abelian groups with
//! direct-sum collapse.
//!
//! A graded monoid is a family of carriers `A_m` indexed by a finite
//! monoid `M`, with a unit in `A_1` and multiplications
//! `A_m x A_n -> A_{mn}` — equivalently, a lax monoidal functor out of
//! `M` viewed as a discrete monoidal category, and the two views
//! round-trip exactly. Regrading along `h: M -> M'` coproducts fibers
//! (`regrade_direct`) and is cross-checked against the full Kan-engine
//! pipeline (`regrade_oracle_check`), which must produce an isomorphic
//! graded monoid.
//!
//! Graded rings are collapsed by the direct-sum formula only; they are
//! not routed through the Kan engine, which targets sets rather than
//! abelian groups.
//!
//! The strict index pairing makes iterated carriers literally equal at
//! fixed finite sizes: for a carrier `A` of size 2, a length-6 tuple
//! read as a pair of length-3 tuples lands on the same index either
//! way, so the currying bijection `(A^3)^2 ~ A^6` degenerates to an
//! equality of 64-element tables rather than a mere isomorphism.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::report::ValidationReport;
use crate::setskel::{is_bijective, SetMap, SetObj};

/// A finite monoid: elements `0..size`, a unit index, and a total
/// multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    pub size: usize,
    pub unit: usize,
    /// Row-major `size x size` table: `mult[a * size + b] = a * b`.
    pub mult: Vec<usize>,
}

impl FiniteMonoid {
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.size + b]
    }

    pub fn trivial() -> Self {
        FiniteMonoid {
            size: 1,
            unit: 0,
            mult: vec![0],
        }
    }

    /// The cyclic group of order `n` under addition.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let mult = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        FiniteMonoid {
            size: n,
            unit: 0,
            mult,
        }
    }

    /// The two-element monoid `{1, a}` with `a * a = a`.
    pub fn idempotent2() -> Self {
        FiniteMonoid {
            size: 2,
            unit: 0,
            mult: vec![0, 1, 1, 1],
        }
    }

    pub fn direct_product(a: &FiniteMonoid, b: &FiniteMonoid) -> Self {
        let size = a.size * b.size;
        let mut mult = vec![0; size * size];
        for a1 in 0..a.size {
            for b1 in 0..b.size {
                for a2 in 0..a.size {
                    for b2 in 0..b.size {
                        let x = a1 * b.size + b1;
                        let y = a2 * b.size + b2;
                        mult[x * size + y] = a.mul(a1, a2) * b.size + b.mul(b1, b2);
                    }
                }
            }
        }
        FiniteMonoid {
            size,
            unit: a.unit * b.size + b.unit,
            mult,
        }
    }

    /// Structural check plus exhaustive associativity/unit laws.
    pub fn validate(&self) -> Result<ValidationReport> {
        let subject = "monoid";
        if self.mult.len() != self.size * self.size {
            return Err(Error::structure(
                subject,
                format!(
                    "multiplication table has length {}, expected {}",
                    self.mult.len(),
                    self.size * self.size
                ),
            ));
        }
        if self.unit >= self.size {
            return Err(Error::structure(subject, "unit index out of range"));
        }
        if let Some(&v) = self.mult.iter().find(|&&v| v >= self.size) {
            return Err(Error::structure(subject, format!("table value {v} out of range")));
        }
        let mut report = ValidationReport::new(subject);
        for a in 0..self.size {
            if self.mul(self.unit, a) != a {
                report.push("left-unit", vec![a], format!("1 * {a} != {a}"));
            }
            if self.mul(a, self.unit) != a {
                report.push("right-unit", vec![a], format!("{a} * 1 != {a}"));
            }
        }
        for a in 0..self.size {
            for b in 0..self.size {
                for c in 0..self.size {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        report.push(
                            "associativity",
                            vec![a, b, c],
                            format!("({a} * {b}) * {c} != {a} * ({b} * {c})"),
                        );
                    }
                }
            }
        }
        Ok(report)
    }
}

/// A monoid homomorphism given by its value table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidHom {
    pub source: FiniteMonoid,
    pub target: FiniteMonoid,
    pub map: Vec<usize>,
}

impl MonoidHom {
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn identity(m: &FiniteMonoid) -> Self {
        MonoidHom {
            source: m.clone(),
            target: m.clone(),
            map: (0..m.size).collect(),
        }
    }

    /// The unique homomorphism to the trivial monoid.
    pub fn collapse(m: &FiniteMonoid) -> Self {
        MonoidHom {
            source: m.clone(),
            target: FiniteMonoid::trivial(),
            map: vec![0; m.size],
        }
    }

    /// "self then other".
    pub fn then(&self, other: &MonoidHom) -> Result<MonoidHom> {
        if self.target != other.source {
            return Err(Error::FrameMismatch(
                "monoid hom composition: target != source".into(),
            ));
        }
        Ok(MonoidHom {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&a| other.apply(a)).collect(),
        })
    }

    pub fn validate(&self) -> Result<ValidationReport> {
        let subject = "monoid-hom";
        if self.map.len() != self.source.size {
            return Err(Error::structure(
                subject,
                format!(
                    "map has length {}, expected {}",
                    self.map.len(),
                    self.source.size
                ),
            ));
        }
        if let Some(&v) = self.map.iter().find(|&&v| v >= self.target.size) {
            return Err(Error::structure(subject, format!("map value {v} out of range")));
        }
        let mut report = ValidationReport::new(subject);
        if self.apply(self.source.unit) != self.target.unit {
            report.push("unit", vec![self.source.unit], "unit is not preserved");
        }
        for a in 0..self.source.size {
            for b in 0..self.source.size {
                if self.apply(self.source.mul(a, b)) != self.target.mul(self.apply(a), self.apply(b))
                {
                    report.push(
                        "multiplicativity",
                        vec![a, b],
                        format!("h({a} * {b}) != h({a}) * h({b})"),
                    );
                }
            }
        }
        Ok(report)
    }
}

/// All homomorphisms `source -> target`, enumerated by brute force over
/// value tables in lexicographic order.
pub fn enumerate_homs(source: &FiniteMonoid, target: &FiniteMonoid) -> Vec<MonoidHom> {
    let mut out = Vec::new();
    let mut table = vec![0usize; source.size];
    loop {
        let candidate = MonoidHom {
            source: source.clone(),
            target: target.clone(),
            map: table.clone(),
        };
        if candidate
            .validate()
            .map(|r| r.is_clean())
            .unwrap_or(false)
        {
            out.push(candidate);
        }
        // odometer increment
        let mut pos = source.size;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            table[pos] += 1;
            if table[pos] < target.size {
                break;
            }
            table[pos] = 0;
        }
    }
}

/// A monoid-graded monoid in finite sets: carriers per grade, a unit
/// element in the unit-grade carrier, and a multiplication table per
/// grade pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMonoid {
    pub grading: FiniteMonoid,
    pub components: Vec<SetObj>,
    /// Element of `components[grading.unit]`.
    pub unit_elem: usize,
    /// `mult[m * |M| + n]` is the table `A_m x A_n -> A_{mn}`, entry
    /// `(a, b)` stored at `a * |A_n| + b`.
    pub mult: Vec<Vec<usize>>,
}

impl GradedMonoid {
    pub fn mult_at(&self, m: usize, n: usize) -> &[usize] {
        &self.mult[m * self.grading.size + n]
    }

    pub fn apply_mult(&self, m: usize, n: usize, a: usize, b: usize) -> usize {
        self.mult_at(m, n)[a * self.components[n].size + b]
    }

    /// The tautological grading of `m` by itself: `A_g = {g}`.
    pub fn tautological(m: &FiniteMonoid) -> Self {
        GradedMonoid {
            grading: m.clone(),
            components: vec![SetObj::UNIT; m.size],
            unit_elem: 0,
            mult: vec![vec![0]; m.size * m.size],
        }
    }

    /// A monoid `k` concentrated in the trivial grading, or more
    /// generally `k x m` graded by projection to `m`: each grade
    /// carries a copy of `k` and multiplication is componentwise.
    pub fn product_graded(k: &FiniteMonoid, m: &FiniteMonoid) -> Self {
        let mut mult = Vec::with_capacity(m.size * m.size);
        for _g in 0..m.size * m.size {
            mult.push(k.mult.clone());
        }
        GradedMonoid {
            grading: m.clone(),
            components: vec![SetObj::new(k.size); m.size],
            unit_elem: k.unit,
            mult,
        }
    }
}

pub fn validate_graded_monoid(gm: &GradedMonoid) -> Result<ValidationReport> {
    let subject = "graded-monoid";
    let grading_report = gm.grading.validate()?;
    if !grading_report.is_clean() {
        return Err(Error::Precondition(
            "grading monoid does not satisfy monoid laws".into(),
        ));
    }
    let k = gm.grading.size;
    if gm.components.len() != k {
        return Err(Error::structure(subject, "component list has wrong length"));
    }
    if gm.mult.len() != k * k {
        return Err(Error::structure(subject, "multiplication family has wrong length"));
    }
    if gm.unit_elem >= gm.components[gm.grading.unit].size {
        return Err(Error::structure(subject, "unit element out of range"));
    }
    for m in 0..k {
        for n in 0..k {
            let table = gm.mult_at(m, n);
            let expect = gm.components[m].size * gm.components[n].size;
            if table.len() != expect {
                return Err(Error::structure(
                    subject,
                    format!("table at grades ({m}, {n}) has wrong length"),
                ));
            }
            let bound = gm.components[gm.grading.mul(m, n)].size;
            if let Some(&v) = table.iter().find(|&&v| v >= bound) {
                return Err(Error::structure(
                    subject,
                    format!("table at grades ({m}, {n}) has value {v} out of range"),
                ));
            }
        }
    }

    let mut report = ValidationReport::new(subject);
    let e = gm.grading.unit;
    for m in 0..k {
        for a in 0..gm.components[m].size {
            if gm.apply_mult(e, m, gm.unit_elem, a) != a {
                report.push("left-unit", vec![m, a], format!("1 * a fails at grade {m}, element {a}"));
            }
            if gm.apply_mult(m, e, a, gm.unit_elem) != a {
                report.push("right-unit", vec![m, a], format!("a * 1 fails at grade {m}, element {a}"));
            }
        }
    }
    for m in 0..k {
        for n in 0..k {
            for p in 0..k {
                let mn = gm.grading.mul(m, n);
                let np = gm.grading.mul(n, p);
                for a in 0..gm.components[m].size {
                    for b in 0..gm.components[n].size {
                        for c in 0..gm.components[p].size {
                            let lhs = gm.apply_mult(mn, p, gm.apply_mult(m, n, a, b), c);
                            let rhs = gm.apply_mult(m, np, a, gm.apply_mult(n, p, b, c));
                            if lhs != rhs {
                                report.push(
                                    "associativity",
                                    vec![m, n, p, a, b, c],
                                    format!(
                                        "associativity fails at grades ({m}, {n}, {p}), \
                                         elements ({a}, {b}, {c})"
                                    ),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// View a graded monoid as a lax monoidal functor out of its grading
/// as a discrete monoidal category.
pub fn graded_to_lax_functor(
    gm: &GradedMonoid,
) -> Result<crate::monoidal::LaxMonoidalFunctor> {
    let ms = crate::monoidal::monoidal_from_monoid(&gm.grading)?;
    let functor = crate::setskel::SetFunctor {
        source: std::sync::Arc::clone(&ms.base),
        obj: gm.components.clone(),
        mor: gm.components.iter().map(|&o| SetMap::identity(o)).collect(),
    };
    let eta = SetMap::new(
        SetObj::UNIT,
        gm.components[gm.grading.unit],
        vec![gm.unit_elem],
    )?;
    let k = gm.grading.size;
    let mut mu = Vec::with_capacity(k * k);
    for m in 0..k {
        for n in 0..k {
            mu.push(SetMap::new(
                gm.components[m].tensor(gm.components[n]),
                gm.components[gm.grading.mul(m, n)],
                gm.mult_at(m, n).to_vec(),
            )?);
        }
    }
    Ok(crate::monoidal::LaxMonoidalFunctor {
        source: ms,
        functor,
        eta,
        mu,
    })
}

/// Recover a graded monoid from a lax monoidal functor, which must live
/// over a discrete monoidal base (identities only).
pub fn lax_functor_to_graded(
    f: &crate::monoidal::LaxMonoidalFunctor,
) -> Result<GradedMonoid> {
    let cat = &f.source.base;
    let discrete = cat.num_morphisms() == cat.num_objects
        && (0..cat.num_objects).all(|o| cat.id(o) == o && cat.morphisms[o] == (o, o));
    if !discrete {
        return Err(Error::Precondition(
            "lax functor is not over a discrete-monoid source".into(),
        ));
    }
    let grading = FiniteMonoid {
        size: cat.num_objects,
        unit: f.source.unit_object,
        mult: f.source.tensor_obj.clone(),
    };
    let report = grading.validate()?;
    if !report.is_clean() {
        return Err(Error::Precondition(
            "discrete base's tensor is not a monoid".into(),
        ));
    }
    Ok(GradedMonoid {
        grading,
        components: f.functor.obj.clone(),
        unit_elem: f.eta.apply(0),
        mult: f.mu.iter().map(|m| m.table.clone()).collect(),
    })
}

/// A monoid homomorphism as a strict (strong) monoidal functor of
/// discrete monoidal categories.
pub fn monoidal_functor_from_hom(h: &MonoidHom) -> Result<crate::monoidal::MonoidalFunctor> {
    let report = h.validate()?;
    if !report.is_clean() {
        return Err(Error::Precondition("map is not a monoid homomorphism".into()));
    }
    let source = crate::monoidal::monoidal_from_monoid(&h.source)?;
    let target = crate::monoidal::monoidal_from_monoid(&h.target)?;
    let functor = crate::fincat::FunctorData {
        source: std::sync::Arc::clone(&source.base),
        target: std::sync::Arc::clone(&target.base),
        object_map: h.map.clone(),
        morphism_map: h.map.clone(),
    };
    let n = h.source.size;
    let mut mu = Vec::with_capacity(n * n);
    for m in 0..n {
        for p in 0..n {
            // h(m) h(p) = h(m p) in the discrete target: identity morphism
            mu.push(h.target.mul(h.apply(m), h.apply(p)));
        }
    }
    Ok(crate::monoidal::MonoidalFunctor {
        eta: h.target.unit,
        mu,
        functor,
        source,
        target,
    })
}

/// Result of a direct regrading: the regraded monoid plus provenance of
/// each new element.
#[derive(Debug, Clone)]
pub struct RegradeOutcome {
    pub graded: GradedMonoid,
    /// `origin[m'][offset] = (m, a)`: new element at `offset` in grade
    /// `m'` came from element `a` of old grade `m`. Fibers are laid out
    /// in increasing `m` order.
    pub origin: Vec<Vec<(usize, usize)>>,
}

/// Regrade along `h: M -> M'` by the direct formula: the new carrier at
/// `m'` is the disjoint union of `A_m` over `h(m) = m'`, in `m` order,
/// with unit and multiplication induced elementwise.
pub fn regrade_direct(gm: &GradedMonoid, h: &MonoidHom) -> Result<RegradeOutcome> {
    let report = h.validate()?;
    if !report.is_clean() {
        return Err(Error::Precondition("map is not a monoid homomorphism".into()));
    }
    if h.source != gm.grading {
        return Err(Error::FrameMismatch(
            "regrade: homomorphism source differs from the grading".into(),
        ));
    }
    let report = validate_graded_monoid(gm)?;
    if !report.is_clean() {
        return Err(Error::Precondition("graded monoid does not validate".into()));
    }

    let kp = h.target.size;
    let mut origin: Vec<Vec<(usize, usize)>> = vec![Vec::new(); kp];
    // offset_of[m] = (new grade, offset of A_m's block)
    let mut offset_of = Vec::with_capacity(gm.grading.size);
    for m in 0..gm.grading.size {
        let mp = h.apply(m);
        offset_of.push((mp, origin[mp].len()));
        for a in 0..gm.components[m].size {
            origin[mp].push((m, a));
        }
    }
    let components: Vec<SetObj> = origin.iter().map(|o| SetObj::new(o.len())).collect();
    let unit_elem = offset_of[gm.grading.unit].1 + gm.unit_elem;

    let mut mult = Vec::with_capacity(kp * kp);
    for mp in 0..kp {
        for np in 0..kp {
            let mut table = Vec::with_capacity(origin[mp].len() * origin[np].len());
            for &(m, a) in &origin[mp] {
                for &(n, b) in &origin[np] {
                    let mn = gm.grading.mul(m, n);
                    let value = gm.apply_mult(m, n, a, b);
                    debug_assert_eq!(offset_of[mn].0, h.target.mul(mp, np));
                    table.push(offset_of[mn].1 + value);
                }
            }
            mult.push(table);
        }
    }
    let graded = GradedMonoid {
        grading: h.target.clone(),
        components,
        unit_elem,
        mult,
    };
    let report = validate_graded_monoid(&graded)?;
    if !report.is_clean() {
        return Err(Error::Internal("regraded monoid does not validate".into()));
    }
    Ok(RegradeOutcome { graded, origin })
}

/// Outcome of cross-checking the direct regrading against the full
/// Kan-engine pipeline.
#[derive(Debug, Clone, Serialize)]
pub struct RegradeOracleReport {
    /// Grade-indexed bijections from the direct result to the engine's
    /// extension carriers.
    pub bijections: Vec<Vec<usize>>,
    pub bijective: bool,
    pub unit_preserved: bool,
    pub mult_preserved: bool,
    pub certificates_clean: bool,
    pub isomorphic: bool,
}

/// Run the full pipeline — discrete categories, Kan engine, monoidal
/// extension — and exhibit grade-indexed bijections between the direct
/// regrading and the engine's extension, commuting with units and
/// multiplications. A valid input must come out isomorphic; anything
/// else indicates an engine bug.
pub fn regrade_oracle_check(
    gm: &GradedMonoid,
    h: &MonoidHom,
    limits: &Limits,
) -> Result<RegradeOracleReport> {
    let direct = regrade_direct(gm, h)?;
    let f = graded_to_lax_functor(gm)?;
    let g = monoidal_functor_from_hom(h)?;
    let mk = crate::monkan::extend_lax_monoidal(&f, &g, limits)?;

    let kp = h.target.size;
    let mut bijections = Vec::with_capacity(kp);
    let mut bijective = true;
    for mp in 0..kp {
        let table: Vec<usize> = direct.origin[mp]
            .iter()
            .map(|&(m, a)| mk.kan.lambda.components[m].apply(a))
            .collect();
        let map = SetMap::new(
            direct.graded.components[mp],
            mk.l_lax.functor.on_object(mp),
            table.clone(),
        )?;
        if is_bijective(&map).is_none() {
            bijective = false;
        }
        bijections.push(table);
    }
    let unit_preserved = bijective
        && bijections[h.target.unit][direct.graded.unit_elem] == mk.l_lax.eta.apply(0);
    let mut mult_preserved = bijective;
    if bijective {
        'outer: for mp in 0..kp {
            for np in 0..kp {
                let mnp = h.target.mul(mp, np);
                for x in 0..direct.graded.components[mp].size {
                    for y in 0..direct.graded.components[np].size {
                        let direct_product = direct.graded.apply_mult(mp, np, x, y);
                        let engine_product = mk.l_lax.mu_at(mp, np).apply(
                            bijections[mp][x] * mk.l_lax.functor.on_object(np).size
                                + bijections[np][y],
                        );
                        if bijections[mnp][direct_product] != engine_product {
                            mult_preserved = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    let certificates_clean = mk.certificates.all_clean();
    let isomorphic = bijective && unit_preserved && mult_preserved && certificates_clean;
    Ok(RegradeOracleReport {
        bijections,
        bijective,
        unit_preserved,
        mult_preserved,
        certificates_clean,
        isomorphic,
    })
}

/// A finite abelian group in canonical form `Z/d1 x ... x Z/dk`, with
/// elements encoded as mixed-radix indices over residue tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinAbGroup {
    pub cyclic_orders: Vec<usize>,
}

impl FinAbGroup {
    pub fn new(cyclic_orders: Vec<usize>) -> Result<Self> {
        if cyclic_orders.contains(&0) {
            return Err(Error::structure("abelian-group", "cyclic order zero"));
        }
        Ok(FinAbGroup { cyclic_orders })
    }

    pub fn order(&self) -> usize {
        self.cyclic_orders.iter().product()
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let mut result = 0;
        let mut stride = 1;
        let mut a = a;
        let mut b = b;
        // digits from least significant (last cyclic factor)
        for &d in self.cyclic_orders.iter().rev() {
            let ra = a % d;
            let rb = b % d;
            result += ((ra + rb) % d) * stride;
            stride *= d;
            a /= d;
            b /= d;
        }
        result
    }

    pub fn neg(&self, a: usize) -> usize {
        let mut result = 0;
        let mut stride = 1;
        let mut a = a;
        for &d in self.cyclic_orders.iter().rev() {
            let ra = a % d;
            result += ((d - ra) % d) * stride;
            stride *= d;
            a /= d;
        }
        result
    }
}

/// A monoid-graded ring: abelian-group components with a unit in the
/// unit grade and biadditive multiplications per grade pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRing {
    pub grading: FiniteMonoid,
    pub components: Vec<FinAbGroup>,
    /// Element of `components[grading.unit]`.
    pub unit: usize,
    /// Same layout as [`GradedMonoid::mult`].
    pub mult: Vec<Vec<usize>>,
}

impl GradedRing {
    pub fn mult_at(&self, m: usize, n: usize) -> &[usize] {
        &self.mult[m * self.grading.size + n]
    }

    pub fn apply_mult(&self, m: usize, n: usize, a: usize, b: usize) -> usize {
        self.mult_at(m, n)[a * self.components[n].order() + b]
    }
}

pub fn validate_graded_ring(gr: &GradedRing) -> Result<ValidationReport> {
    let subject = "graded-ring";
    let grading_report = gr.grading.validate()?;
    if !grading_report.is_clean() {
        return Err(Error::Precondition("grading monoid does not validate".into()));
    }
    let k = gr.grading.size;
    if gr.components.len() != k || gr.mult.len() != k * k {
        return Err(Error::structure(subject, "component or table lists have wrong length"));
    }
    if gr.unit >= gr.components[gr.grading.unit].order() {
        return Err(Error::structure(subject, "unit element out of range"));
    }
    for m in 0..k {
        for n in 0..k {
            let table = gr.mult_at(m, n);
            if table.len() != gr.components[m].order() * gr.components[n].order() {
                return Err(Error::structure(
                    subject,
                    format!("table at grades ({m}, {n}) has wrong length"),
                ));
            }
            let bound = gr.components[gr.grading.mul(m, n)].order();
            if let Some(&v) = table.iter().find(|&&v| v >= bound) {
                return Err(Error::structure(
                    subject,
                    format!("table at grades ({m}, {n}) has value {v} out of range"),
                ));
            }
        }
    }

    let mut report = ValidationReport::new(subject);
    for m in 0..k {
        for n in 0..k {
            let mn = gr.grading.mul(m, n);
            let target = &gr.components[mn];
            for a in 0..gr.components[m].order() {
                for a2 in 0..gr.components[m].order() {
                    for b in 0..gr.components[n].order() {
                        let lhs = gr.apply_mult(m, n, gr.components[m].add(a, a2), b);
                        let rhs =
                            target.add(gr.apply_mult(m, n, a, b), gr.apply_mult(m, n, a2, b));
                        if lhs != rhs {
                            report.push(
                                "left-biadditivity",
                                vec![m, n, a, a2, b],
                                "multiplication is not additive in the left argument".to_string(),
                            );
                        }
                    }
                }
                for b in 0..gr.components[n].order() {
                    for b2 in 0..gr.components[n].order() {
                        let lhs = gr.apply_mult(m, n, a, gr.components[n].add(b, b2));
                        let rhs =
                            target.add(gr.apply_mult(m, n, a, b), gr.apply_mult(m, n, a, b2));
                        if lhs != rhs {
                            report.push(
                                "right-biadditivity",
                                vec![m, n, a, b, b2],
                                "multiplication is not additive in the right argument".to_string(),
                            );
                        }
                    }
                }
            }
        }
    }
    let e = gr.grading.unit;
    for m in 0..k {
        for a in 0..gr.components[m].order() {
            if gr.apply_mult(e, m, gr.unit, a) != a {
                report.push("left-unit", vec![m, a], "1 * a fails".to_string());
            }
            if gr.apply_mult(m, e, a, gr.unit) != a {
                report.push("right-unit", vec![m, a], "a * 1 fails".to_string());
            }
        }
    }
    for m in 0..k {
        for n in 0..k {
            for p in 0..k {
                let mn = gr.grading.mul(m, n);
                let np = gr.grading.mul(n, p);
                for a in 0..gr.components[m].order() {
                    for b in 0..gr.components[n].order() {
                        for c in 0..gr.components[p].order() {
                            let lhs = gr.apply_mult(mn, p, gr.apply_mult(m, n, a, b), c);
                            let rhs = gr.apply_mult(m, np, a, gr.apply_mult(n, p, b, c));
                            if lhs != rhs {
                                report.push(
                                    "associativity",
                                    vec![m, n, p, a, b, c],
                                    "multiplication is not associative".to_string(),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// A plain finite ring as total tables, for the collapse output and its
/// standalone axiom check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ring {
    pub size: usize,
    pub zero: usize,
    pub one: usize,
    /// Row-major addition table.
    pub add: Vec<usize>,
    pub neg: Vec<usize>,
    /// Row-major multiplication table.
    pub mul: Vec<usize>,
}

impl Ring {
    pub fn add_at(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    pub fn mul_at(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }
}

/// Exhaustive check of all ring axioms: abelian group under addition,
/// associative unital multiplication, distributivity on both sides.
pub fn validate_ring(r: &Ring) -> Result<ValidationReport> {
    let subject = "ring";
    let n = r.size;
    if r.add.len() != n * n || r.mul.len() != n * n || r.neg.len() != n {
        return Err(Error::structure(subject, "tables have wrong lengths"));
    }
    if r.zero >= n || r.one >= n {
        return Err(Error::structure(subject, "distinguished elements out of range"));
    }
    if let Some(&v) = r.add.iter().chain(&r.mul).chain(&r.neg).find(|&&v| v >= n) {
        return Err(Error::structure(subject, format!("table value {v} out of range")));
    }
    let mut report = ValidationReport::new(subject);
    for a in 0..n {
        if r.add_at(r.zero, a) != a || r.add_at(a, r.zero) != a {
            report.push("additive-zero", vec![a], "zero is not an additive unit".to_string());
        }
        if r.add_at(a, r.neg[a]) != r.zero {
            report.push("additive-inverse", vec![a], "negation fails".to_string());
        }
        if r.mul_at(r.one, a) != a || r.mul_at(a, r.one) != a {
            report.push("multiplicative-unit", vec![a], "one is not a unit".to_string());
        }
        for b in 0..n {
            if r.add_at(a, b) != r.add_at(b, a) {
                report.push("additive-commutativity", vec![a, b], "a + b != b + a".to_string());
            }
            for c in 0..n {
                if r.add_at(r.add_at(a, b), c) != r.add_at(a, r.add_at(b, c)) {
                    report.push("additive-associativity", vec![a, b, c], "(a+b)+c != a+(b+c)".to_string());
                }
                if r.mul_at(r.mul_at(a, b), c) != r.mul_at(a, r.mul_at(b, c)) {
                    report.push("multiplicative-associativity", vec![a, b, c], "(ab)c != a(bc)".to_string());
                }
                if r.mul_at(a, r.add_at(b, c)) != r.add_at(r.mul_at(a, b), r.mul_at(a, c)) {
                    report.push("left-distributivity", vec![a, b, c], "a(b+c) != ab+ac".to_string());
                }
                if r.mul_at(r.add_at(a, b), c) != r.add_at(r.mul_at(a, c), r.mul_at(b, c)) {
                    report.push("right-distributivity", vec![a, b, c], "(a+b)c != ac+bc".to_string());
                }
            }
        }
    }
    Ok(report)
}

/// The collapse of a graded ring with its grade injections.
#[derive(Debug, Clone)]
pub struct CollapseOutcome {
    pub ring: Ring,
    /// `injections[m][a]` is the carrier index of the tuple with `a` in
    /// slot `m` and zero elsewhere.
    pub injections: Vec<Vec<usize>>,
}

/// Collapse a graded ring to an ungraded ring on the direct sum: the
/// carrier is the set of tuples of component elements, addition is
/// componentwise, and the product of two tuples sums the pairwise
/// products routed to grade `m n`. Ring axioms on the result and
/// multiplicativity of the grade injections are verified before
/// returning.
pub fn collapse_graded_ring(gr: &GradedRing, limits: &Limits) -> Result<CollapseOutcome> {
    let report = validate_graded_ring(gr)?;
    if !report.is_clean() {
        return Err(Error::Precondition(format!(
            "graded ring violates {} law instances",
            report.violations.len()
        )));
    }
    let k = gr.grading.size;
    let orders: Vec<usize> = gr.components.iter().map(|g| g.order()).collect();
    let size = orders.iter().try_fold(1usize, |acc, &o| {
        acc.checked_mul(o).filter(|&s| s <= limits.max_set_size)
    });
    let Some(size) = size else {
        return Err(Error::SizeGuard {
            what: "collapsed ring carrier".into(),
            size: usize::MAX,
            limit: limits.max_set_size,
        });
    };

    // tuple encoding: grade 0 most significant, last grade least
    let decode = |idx: usize| -> Vec<usize> {
        let mut digits = vec![0; k];
        let mut rest = idx;
        for m in (0..k).rev() {
            digits[m] = rest % orders[m];
            rest /= orders[m];
        }
        digits
    };
    let encode = |digits: &[usize]| -> usize {
        let mut acc = 0;
        for m in 0..k {
            acc = acc * orders[m] + digits[m];
        }
        acc
    };

    let mut add = vec![0usize; size * size];
    let mut neg = vec![0usize; size];
    for x in 0..size {
        let dx = decode(x);
        let ndx: Vec<usize> = (0..k).map(|m| gr.components[m].neg(dx[m])).collect();
        neg[x] = encode(&ndx);
        for y in 0..size {
            let dy = decode(y);
            let sum: Vec<usize> = (0..k).map(|m| gr.components[m].add(dx[m], dy[m])).collect();
            add[x * size + y] = encode(&sum);
        }
    }
    let mut mul = vec![0usize; size * size];
    for x in 0..size {
        let dx = decode(x);
        for y in 0..size {
            let dy = decode(y);
            let mut acc = vec![0usize; k]; // zero tuple
            for (m, &xm) in dx.iter().enumerate() {
                for (n, &yn) in dy.iter().enumerate() {
                    let g = gr.grading.mul(m, n);
                    let term = gr.apply_mult(m, n, xm, yn);
                    acc[g] = gr.components[g].add(acc[g], term);
                }
            }
            mul[x * size + y] = encode(&acc);
        }
    }
    let zero = 0;
    let mut one_digits = vec![0usize; k];
    one_digits[gr.grading.unit] = gr.unit;
    let one = encode(&one_digits);
    let ring = Ring {
        size,
        zero,
        one,
        add,
        neg,
        mul,
    };
    let report = validate_ring(&ring)?;
    if !report.is_clean() {
        return Err(Error::Internal(format!(
            "collapsed ring violates {} axiom instances",
            report.violations.len()
        )));
    }

    let mut injections = Vec::with_capacity(k);
    for m in 0..k {
        let mut table = Vec::with_capacity(orders[m]);
        for a in 0..orders[m] {
            let mut digits = vec![0usize; k];
            digits[m] = a;
            table.push(encode(&digits));
        }
        injections.push(table);
    }
    // injections must be multiplicative: i(a) i(b) = i(ab)
    for m in 0..k {
        for n in 0..k {
            let g = gr.grading.mul(m, n);
            for a in 0..orders[m] {
                for b in 0..orders[n] {
                    let via_ring = ring.mul_at(injections[m][a], injections[n][b]);
                    let via_graded = injections[g][gr.apply_mult(m, n, a, b)];
                    if via_ring != via_graded {
                        return Err(Error::Internal(
                            "grade injections are not multiplicative".into(),
                        ));
                    }
                }
            }
        }
    }
    Ok(CollapseOutcome { ring, injections })
}
