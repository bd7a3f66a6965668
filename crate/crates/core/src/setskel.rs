//! The skeletal category of finite sets `{0..n-1}` with a strictly
//! associative, strictly unital cartesian tensor, plus a colimit engine
//! (coproducts, coequalizers, general finite colimits via union-find).
//!
//! The tensor on objects is `n (x) m = n * m`; an element pair `(i, j)`
//! lives at index `i * m + j`. Under this index arithmetic the tensor is
//! associative and unital as an *equality* of objects and tables, e.g.
//! `2 (x) 3 = 6` and the pair `(1, 2)` sits at index `5`, just as the
//! nesting `(a, (b, c))` of sizes `(2, 3, 4)` and the nesting
//! `((a, b), c)` both put the triple at `a * 12 + b * 4 + c`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{same_category, FinCategory, FunctorData};
use crate::limits::Limits;
use crate::report::ValidationReport;

/// A skeletal finite set, i.e. just its size `n`, denoting `{0..n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SetObj {
    pub size: usize,
}

impl SetObj {
    pub const EMPTY: SetObj = SetObj { size: 0 };
    /// The tensor unit: the one-element set.
    pub const UNIT: SetObj = SetObj { size: 1 };

    pub fn new(size: usize) -> Self {
        SetObj { size }
    }

    pub fn tensor(self, other: SetObj) -> SetObj {
        SetObj {
            size: self
                .size
                .checked_mul(other.size)
                .expect("set tensor overflow"),
        }
    }
}

/// A total function between skeletal sets, as a value table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetMap {
    pub source: SetObj,
    pub target: SetObj,
    pub table: Vec<usize>,
}

impl SetMap {
    pub fn new(source: SetObj, target: SetObj, table: Vec<usize>) -> Result<Self> {
        let m = SetMap {
            source,
            target,
            table,
        };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<()> {
        if self.table.len() != self.source.size {
            return Err(Error::structure(
                "set-map",
                format!(
                    "table has length {}, expected {}",
                    self.table.len(),
                    self.source.size
                ),
            ));
        }
        if let Some(&v) = self.table.iter().find(|&&v| v >= self.target.size) {
            return Err(Error::structure(
                "set-map",
                format!("value {v} out of codomain bound {}", self.target.size),
            ));
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    pub fn identity(o: SetObj) -> Self {
        SetMap {
            source: o,
            target: o,
            table: (0..o.size).collect(),
        }
    }

    pub fn constant(source: SetObj, target: SetObj, value: usize) -> Result<Self> {
        SetMap::new(source, target, vec![value; source.size])
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    /// "self then other" (diagrammatic composition).
    pub fn then(&self, other: &SetMap) -> Result<SetMap> {
        if self.target != other.source {
            return Err(Error::FrameMismatch(format!(
                "set map composition: target {} != source {}",
                self.target.size, other.source.size
            )));
        }
        Ok(SetMap {
            source: self.source,
            target: other.target,
            table: self.table.iter().map(|&i| other.apply(i)).collect(),
        })
    }

    /// `f (x) g` under the index pairing `(i, j) -> i * m + j`.
    pub fn tensor(&self, other: &SetMap) -> SetMap {
        let m = other.source.size;
        let m_prime = other.target.size;
        let mut table = Vec::with_capacity(self.source.size * m);
        for i in 0..self.source.size {
            for j in 0..m {
                table.push(self.apply(i) * m_prime + other.apply(j));
            }
        }
        SetMap {
            source: self.source.tensor(other.source),
            target: self.target.tensor(other.target),
            table,
        }
    }
}

/// The symmetry `n (x) m -> m (x) n`, `(i, j) -> (j, i)`. Not the
/// identity in general, but always a bijection.
pub fn swap_map(n: SetObj, m: SetObj) -> SetMap {
    let mut table = Vec::with_capacity(n.size * m.size);
    for i in 0..n.size {
        for j in 0..m.size {
            table.push(j * n.size + i);
        }
    }
    SetMap {
        source: n.tensor(m),
        target: m.tensor(n),
        table,
    }
}

/// Bijectivity test; returns the inverse table when bijective.
pub fn is_bijective(m: &SetMap) -> Option<SetMap> {
    if m.source.size != m.target.size {
        return None;
    }
    let mut inverse = vec![usize::MAX; m.target.size];
    for (i, &v) in m.table.iter().enumerate() {
        if inverse[v] != usize::MAX {
            return None;
        }
        inverse[v] = i;
    }
    Some(SetMap {
        source: m.target,
        target: m.source,
        table: inverse,
    })
}

/// A colimit cocone with bookkeeping: per-diagram-object injections into
/// the apex, and a section picking a canonical preimage for every apex
/// element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColimitWitness {
    pub apex: SetObj,
    pub injections: Vec<SetMap>,
    /// `representative[e] = (diagram object, element)` with
    /// `injections[obj].apply(elem) == e`.
    pub representative: Vec<(usize, usize)>,
}

impl ColimitWitness {
    /// Cheap internal consistency: the representative is a section of
    /// the injection family and every apex element is hit.
    pub fn check_section(&self) -> Result<()> {
        if self.representative.len() != self.apex.size {
            return Err(Error::Internal(
                "witness representative has wrong length".into(),
            ));
        }
        for (e, &(obj, elem)) in self.representative.iter().enumerate() {
            let inj = self
                .injections
                .get(obj)
                .ok_or_else(|| Error::Internal("representative names a missing object".into()))?;
            if elem >= inj.source.size || inj.apply(elem) != e {
                return Err(Error::Internal(format!(
                    "representative of apex element {e} is not a section"
                )));
            }
        }
        Ok(())
    }
}

/// Finite coproduct: apex is the size sum, injections are offset shifts.
pub fn coproduct(parts: &[SetObj]) -> ColimitWitness {
    let total: usize = parts.iter().map(|p| p.size).sum();
    let apex = SetObj::new(total);
    let mut injections = Vec::with_capacity(parts.len());
    let mut representative = Vec::with_capacity(total);
    let mut offset = 0;
    for (i, part) in parts.iter().enumerate() {
        injections.push(SetMap {
            source: *part,
            target: apex,
            table: (offset..offset + part.size).collect(),
        });
        for j in 0..part.size {
            representative.push((i, j));
        }
        offset += part.size;
    }
    ColimitWitness {
        apex,
        injections,
        representative,
    }
}

/// Union-find with canonical renumbering: classes are numbered by their
/// least element, in increasing order of that least element, so the
/// quotient is bit-reproducible.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            // keep the smaller root so canonical numbering is stable
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// `(class table, class count)`: classes numbered by least element.
    fn quotient(mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut class = vec![usize::MAX; n];
        let mut next = 0;
        for x in 0..n {
            let r = self.find(x);
            if class[r] == usize::MAX {
                class[r] = next;
                next += 1;
            }
            class[x] = class[r];
        }
        (class, next)
    }
}

/// Coequalizer of a parallel pair: the quotient of the target by the
/// equivalence generated by `f(x) ~ g(x)`.
///
/// The witness treats the parallel pair as a two-object diagram: the
/// injection at object 0 (the common source) is `f` followed by the
/// quotient map, the injection at object 1 is the quotient map itself.
pub fn coequalizer(f: &SetMap, g: &SetMap) -> Result<ColimitWitness> {
    if f.source != g.source || f.target != g.target {
        return Err(Error::Precondition(
            "coequalizer requires a parallel pair".into(),
        ));
    }
    let mut uf = UnionFind::new(f.target.size);
    for x in 0..f.source.size {
        uf.union(f.apply(x), g.apply(x));
    }
    let (class, count) = uf.quotient();
    let apex = SetObj::new(count);
    let quotient = SetMap {
        source: f.target,
        target: apex,
        table: class,
    };
    let mut representative = vec![(0usize, 0usize); count];
    let mut seen = vec![false; count];
    for y in 0..f.target.size {
        let c = quotient.apply(y);
        if !seen[c] {
            seen[c] = true;
            representative[c] = (1, y);
        }
    }
    let through_source = f.then(&quotient)?;
    Ok(ColimitWitness {
        apex,
        injections: vec![through_source, quotient],
        representative,
    })
}

/// A functor from a finite category into skeletal finite sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFunctor {
    pub source: Arc<FinCategory>,
    pub obj: Vec<SetObj>,
    pub mor: Vec<SetMap>,
}

impl SetFunctor {
    pub fn on_object(&self, o: usize) -> SetObj {
        self.obj[o]
    }

    pub fn on_morphism(&self, m: usize) -> &SetMap {
        &self.mor[m]
    }

    /// Precompose with a functor between finite categories:
    /// `self: B -> Set`, `f: A -> B` gives `A -> Set`.
    pub fn precompose(&self, f: &FunctorData) -> Result<SetFunctor> {
        if !same_category(&f.target, &self.source) {
            return Err(Error::FrameMismatch(
                "precompose: functor target differs from set functor source".into(),
            ));
        }
        Ok(SetFunctor {
            source: Arc::clone(&f.source),
            obj: f.object_map.iter().map(|&o| self.obj[o]).collect(),
            mor: f.morphism_map.iter().map(|&m| self.mor[m].clone()).collect(),
        })
    }
}

pub fn validate_set_functor(f: &SetFunctor) -> Result<ValidationReport> {
    let subject = "set-functor";
    if f.obj.len() != f.source.num_objects || f.mor.len() != f.source.num_morphisms() {
        return Err(Error::structure(subject, "table lengths do not match the category"));
    }
    for (m, map) in f.mor.iter().enumerate() {
        map.check()?;
        let (s, t) = f.source.morphisms[m];
        if map.source != f.obj[s] || map.target != f.obj[t] {
            return Err(Error::structure(
                subject,
                format!("image of morphism {m} has wrong endpoints"),
            ));
        }
    }
    let mut report = ValidationReport::new(subject);
    for o in 0..f.source.num_objects {
        if f.mor[f.source.id(o)] != SetMap::identity(f.obj[o]) {
            report.push("identity", vec![o], format!("identity at {o} not preserved"));
        }
    }
    for m1 in 0..f.source.num_morphisms() {
        for m2 in 0..f.source.num_morphisms() {
            if let Some(c) = f.source.then(m1, m2) {
                let composite = f.mor[m1].then(&f.mor[m2])?;
                if composite != f.mor[c] {
                    report.push(
                        "composition",
                        vec![m1, m2],
                        format!("composition of ({m1}, {m2}) not preserved"),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// `P (x) Q` on the product category: `(a, b) -> P(a) (x) Q(b)`.
pub fn tensor_of_set_functors(
    p: &SetFunctor,
    q: &SetFunctor,
    product_source: &Arc<FinCategory>,
) -> Result<SetFunctor> {
    let ob = q.source.num_objects;
    let mb = q.source.num_morphisms();
    if product_source.num_objects != p.source.num_objects * ob
        || product_source.num_morphisms() != p.source.num_morphisms() * mb
    {
        return Err(Error::FrameMismatch(
            "tensor_of_set_functors: product category has unexpected size".into(),
        ));
    }
    let obj = (0..product_source.num_objects)
        .map(|x| p.obj[x / ob].tensor(q.obj[x % ob]))
        .collect();
    let mor = (0..product_source.num_morphisms())
        .map(|x| p.mor[x / mb].tensor(&q.mor[x % mb]))
        .collect();
    Ok(SetFunctor {
        source: Arc::clone(product_source),
        obj,
        mor,
    })
}

/// A natural transformation between set-valued functors on the same
/// finite category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetNatTrans {
    pub source: SetFunctor,
    pub target: SetFunctor,
    pub components: Vec<SetMap>,
}

impl SetNatTrans {
    pub fn identity(f: &SetFunctor) -> Self {
        SetNatTrans {
            source: f.clone(),
            target: f.clone(),
            components: f.obj.iter().map(|&o| SetMap::identity(o)).collect(),
        }
    }

    pub fn component(&self, o: usize) -> &SetMap {
        &self.components[o]
    }
}

pub fn validate_set_nat_trans(t: &SetNatTrans) -> Result<ValidationReport> {
    let subject = "set-nat-trans";
    if !same_category(&t.source.source, &t.target.source) {
        return Err(Error::FrameMismatch(
            "set nat trans frames live on different categories".into(),
        ));
    }
    let cat = &t.source.source;
    if t.components.len() != cat.num_objects {
        return Err(Error::structure(subject, "component table has wrong length"));
    }
    for (o, c) in t.components.iter().enumerate() {
        c.check()?;
        if c.source != t.source.obj[o] || c.target != t.target.obj[o] {
            return Err(Error::structure(
                subject,
                format!("component at {o} has wrong endpoints"),
            ));
        }
    }
    let mut report = ValidationReport::new(subject);
    for m in 0..cat.num_morphisms() {
        let (s, e) = cat.morphisms[m];
        let lhs = t.source.mor[m].then(&t.components[e])?;
        let rhs = t.components[s].then(&t.target.mor[m])?;
        if lhs != rhs {
            report.push(
                "naturality",
                vec![m],
                format!("naturality square at morphism {m} does not commute"),
            );
        }
    }
    Ok(report)
}

/// "s then t" vertically.
pub fn vertical_compose_set(s: &SetNatTrans, t: &SetNatTrans) -> Result<SetNatTrans> {
    if s.target != t.source {
        return Err(Error::FrameMismatch(
            "vertical_compose_set: middle functors differ".into(),
        ));
    }
    let components = s
        .components
        .iter()
        .zip(&t.components)
        .map(|(a, b)| a.then(b))
        .collect::<Result<Vec<_>>>()?;
    Ok(SetNatTrans {
        source: s.source.clone(),
        target: t.target.clone(),
        components,
    })
}

/// Whisker with a functor on the source side: `t: P => Q` on `C`,
/// `pre: B -> C` gives `P pre => Q pre` on `B`.
pub fn whisker_set(t: &SetNatTrans, pre: &FunctorData) -> Result<SetNatTrans> {
    Ok(SetNatTrans {
        source: t.source.precompose(pre)?,
        target: t.target.precompose(pre)?,
        components: pre
            .object_map
            .iter()
            .map(|&c| t.components[c].clone())
            .collect(),
    })
}

/// `s (x) t` between tensored functors on the product category:
/// components `(s (x) t)_{(a,b)} = s_a (x) t_b`.
pub fn tensor_set_nat_trans(
    s: &SetNatTrans,
    t: &SetNatTrans,
    product_source: &Arc<FinCategory>,
) -> Result<SetNatTrans> {
    let source = tensor_of_set_functors(&s.source, &t.source, product_source)?;
    let target = tensor_of_set_functors(&s.target, &t.target, product_source)?;
    let ob = t.source.source.num_objects;
    let components = (0..product_source.num_objects)
        .map(|x| s.components[x / ob].tensor(&t.components[x % ob]))
        .collect();
    Ok(SetNatTrans {
        source,
        target,
        components,
    })
}

/// General finite colimit: the coequalizer of the two canonical maps
/// from the coproduct over morphisms to the coproduct over objects.
pub fn colimit_of_diagram(diagram: &SetFunctor, limits: &Limits) -> Result<ColimitWitness> {
    let cat = &diagram.source;
    let total: usize = diagram.obj.iter().map(|o| o.size).sum();
    if total > limits.max_set_size {
        return Err(Error::SizeGuard {
            what: "colimit coproduct".into(),
            size: total,
            limit: limits.max_set_size,
        });
    }
    let over_objects = coproduct(&diagram.obj);
    let mut uf = UnionFind::new(total);
    for m in 0..cat.num_morphisms() {
        let (s, t) = cat.morphisms[m];
        let map = &diagram.mor[m];
        for x in 0..map.source.size {
            uf.union(
                over_objects.injections[s].apply(x),
                over_objects.injections[t].apply(map.apply(x)),
            );
        }
    }
    let (class, count) = uf.quotient();
    let apex = SetObj::new(count);
    let injections = (0..cat.num_objects)
        .map(|j| SetMap {
            source: diagram.obj[j],
            target: apex,
            table: over_objects.injections[j]
                .table
                .iter()
                .map(|&e| class[e])
                .collect(),
        })
        .collect::<Vec<_>>();
    let mut representative = vec![(0usize, 0usize); count];
    let mut seen = vec![false; count];
    for (e, &c) in class.iter().enumerate() {
        if !seen[c] {
            seen[c] = true;
            representative[c] = over_objects.representative[e];
        }
    }
    let witness = ColimitWitness {
        apex,
        injections,
        representative,
    };
    check_cocone(diagram, &witness)?;
    witness.check_section()?;
    Ok(witness)
}

/// Injections commute with every diagram morphism.
pub fn check_cocone(diagram: &SetFunctor, witness: &ColimitWitness) -> Result<()> {
    let cat = &diagram.source;
    if witness.injections.len() != cat.num_objects {
        return Err(Error::Internal("witness has wrong injection count".into()));
    }
    for m in 0..cat.num_morphisms() {
        let (s, t) = cat.morphisms[m];
        let via = diagram.mor[m].then(&witness.injections[t])?;
        if via != witness.injections[s] {
            return Err(Error::Internal(format!(
                "cocone does not commute with diagram morphism {m}"
            )));
        }
    }
    Ok(())
}

/// Factor a commuting cocone `legs` through a computed witness: the
/// mediating map sends each apex class, via its representative, to the
/// corresponding leg value, then the result is checked to mediate on
/// *every* element (well-definedness across the whole class).
pub fn factor_cocone(
    witness: &ColimitWitness,
    legs: &[SetMap],
    apex_target: SetObj,
) -> Result<SetMap> {
    if legs.len() != witness.injections.len() {
        return Err(Error::Precondition("cocone has wrong number of legs".into()));
    }
    let mut table = Vec::with_capacity(witness.apex.size);
    for &(obj, elem) in &witness.representative {
        table.push(legs[obj].apply(elem));
    }
    let mediating = SetMap::new(witness.apex, apex_target, table)?;
    for (j, leg) in legs.iter().enumerate() {
        let via = witness.injections[j].then(&mediating)?;
        if via != *leg {
            return Err(Error::WellDefined(format!(
                "mediating map disagrees with cocone leg at diagram object {j}"
            )));
        }
    }
    Ok(mediating)
}
