//! Fixture files: one JSON document per fixture, with explicit integer
//! tables and no implicit defaults. Schema validation happens here;
//! semantic validation is the engine's job.

use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use thiserror::Error;

use kanext_core::fincat::{FinCategory, FunctorData, NatTransData};
use kanext_core::graded::{FinAbGroup, FiniteMonoid, GradedMonoid, GradedRing, MonoidHom};
use kanext_core::monoidal::{LaxMonoidalFunctor, MonoidalStructure};
use kanext_core::setskel::{SetFunctor, SetMap, SetObj};

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error in {path} at line {line}, column {column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error in fixture '{fixture}': {message}")]
    Schema { fixture: String, message: String },
    #[error("unknown reference in fixture '{fixture}': no monoid named '{name}'")]
    UnknownReference { fixture: String, name: String },
}

/// A parsed fixture: a name and a kind-tagged body. Unknown fields
/// (such as a free-text `description`) are tolerated, so fixtures can
/// carry annotations.
#[derive(Debug, Clone, Deserialize)]
pub struct FixtureSpec {
    pub name: String,
    #[serde(flatten)]
    pub body: FixtureBody,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", content = "body", rename_all = "kebab-case")]
pub enum FixtureBody {
    Category(CategoryDef),
    Functor(FunctorDef),
    NatTrans(NatTransDef),
    Monoidal(MonoidalDef),
    LaxFunctor(LaxFunctorDef),
    GradedMonoid(GradedMonoidDef),
    GradedRing(GradedRingDef),
    MonoidHom(MonoidHomDef),
    Pipeline(PipelineDef),
}

impl FixtureBody {
    pub fn kind(&self) -> &'static str {
        match self {
            FixtureBody::Category(_) => "category",
            FixtureBody::Functor(_) => "functor",
            FixtureBody::NatTrans(_) => "nat-trans",
            FixtureBody::Monoidal(_) => "monoidal",
            FixtureBody::LaxFunctor(_) => "lax-functor",
            FixtureBody::GradedMonoid(_) => "graded-monoid",
            FixtureBody::GradedRing(_) => "graded-ring",
            FixtureBody::MonoidHom(_) => "monoid-hom",
            FixtureBody::Pipeline(_) => "pipeline",
        }
    }
}

/// Either the name of a curated monoid or an inline table.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum MonoidRef {
    Named(String),
    Inline(MonoidDef),
}

#[derive(Debug, Clone, Deserialize)]
pub struct MonoidDef {
    /// Optional element names, for documentation only.
    #[serde(default)]
    pub elements: Option<Vec<String>>,
    pub unit: usize,
    /// Square multiplication table, one row per element.
    pub mult: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct MorphismDef {
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, Deserialize)]
pub struct CategoryDef {
    pub objects: usize,
    pub morphisms: Vec<MorphismDef>,
    pub identity: Vec<usize>,
    /// `compose[f][g]` is "f then g", or null when not composable.
    pub compose: Vec<Vec<Option<usize>>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct FunctorDef {
    pub source: CategoryDef,
    pub target: CategoryDef,
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct MapsDef {
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct NatTransDef {
    pub source: CategoryDef,
    pub target: CategoryDef,
    pub source_functor: MapsDef,
    pub target_functor: MapsDef,
    pub components: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct MonoidalDef {
    pub category: CategoryDef,
    pub unit_object: usize,
    pub tensor_obj: Vec<Vec<usize>>,
    pub tensor_mor: Vec<Vec<usize>>,
}

/// A lax monoidal set-valued functor presented over a discrete monoid
/// base: carrier sizes, a one-entry unit table, and a flattened-free
/// multiplication table per grade pair.
#[derive(Debug, Clone, Deserialize)]
pub struct LaxFunctorDef {
    pub grading: MonoidRef,
    pub components: Vec<usize>,
    pub eta: Vec<usize>,
    /// `mu[m * |M| + n][a][b]`.
    pub mu: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GradedMonoidDef {
    pub grading: MonoidRef,
    pub components: Vec<usize>,
    pub unit_elem: usize,
    /// `mult[m * |M| + n][a][b]`.
    pub mult: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GradedRingDef {
    pub grading: MonoidRef,
    /// Cyclic orders of each component group.
    pub components: Vec<Vec<usize>>,
    pub unit: usize,
    /// Tables over mixed-radix element indices, `mult[m * |M| + n][a][b]`.
    pub mult: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct MonoidHomDef {
    pub source: MonoidRef,
    pub target: MonoidRef,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct PipelineDef {
    pub graded: GradedMonoidDef,
    pub hom: MonoidHomDef,
}

pub fn parse_fixture(path: &Path) -> Result<FixtureSpec, FixtureError> {
    let text = std::fs::read_to_string(path).map_err(|source| FixtureError::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| FixtureError::Parse {
        path: path.display().to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn schema_err(fixture: &str, message: impl Into<String>) -> FixtureError {
    FixtureError::Schema {
        fixture: fixture.into(),
        message: message.into(),
    }
}

pub fn resolve_monoid(fixture: &str, r: &MonoidRef) -> Result<FiniteMonoid, FixtureError> {
    match r {
        MonoidRef::Named(name) => kanext_core::corpus::monoid_by_name(name).ok_or_else(|| {
            FixtureError::UnknownReference {
                fixture: fixture.into(),
                name: name.clone(),
            }
        }),
        MonoidRef::Inline(def) => {
            let size = def.mult.len();
            if def.mult.iter().any(|row| row.len() != size) {
                return Err(schema_err(fixture, "monoid multiplication table is not square"));
            }
            if let Some(names) = &def.elements {
                if names.len() != size {
                    return Err(schema_err(fixture, "element name list length differs from table"));
                }
            }
            Ok(FiniteMonoid {
                size,
                unit: def.unit,
                mult: def.mult.iter().flatten().copied().collect(),
            })
        }
    }
}

pub fn build_category(fixture: &str, def: &CategoryDef) -> Result<FinCategory, FixtureError> {
    let nm = def.morphisms.len();
    if def.compose.len() != nm || def.compose.iter().any(|row| row.len() != nm) {
        return Err(schema_err(fixture, "compose table is not |mor| x |mor|"));
    }
    Ok(FinCategory {
        num_objects: def.objects,
        morphisms: def.morphisms.iter().map(|m| (m.source, m.target)).collect(),
        identity: def.identity.clone(),
        compose: def.compose.iter().flatten().copied().collect(),
    })
}

pub fn build_functor(fixture: &str, def: &FunctorDef) -> Result<FunctorData, FixtureError> {
    let source = Arc::new(build_category(fixture, &def.source)?);
    let target = Arc::new(build_category(fixture, &def.target)?);
    Ok(FunctorData {
        source,
        target,
        object_map: def.object_map.clone(),
        morphism_map: def.morphism_map.clone(),
    })
}

pub fn build_nat_trans(fixture: &str, def: &NatTransDef) -> Result<NatTransData, FixtureError> {
    let source = Arc::new(build_category(fixture, &def.source)?);
    let target = Arc::new(build_category(fixture, &def.target)?);
    let mk = |maps: &MapsDef| FunctorData {
        source: Arc::clone(&source),
        target: Arc::clone(&target),
        object_map: maps.object_map.clone(),
        morphism_map: maps.morphism_map.clone(),
    };
    Ok(NatTransData {
        source_functor: mk(&def.source_functor),
        target_functor: mk(&def.target_functor),
        components: def.components.clone(),
    })
}

pub fn build_monoidal(fixture: &str, def: &MonoidalDef) -> Result<MonoidalStructure, FixtureError> {
    let base = Arc::new(build_category(fixture, &def.category)?);
    let n = base.num_objects;
    let m = base.num_morphisms();
    if def.tensor_obj.len() != n || def.tensor_obj.iter().any(|row| row.len() != n) {
        return Err(schema_err(fixture, "tensor_obj table is not |obj| x |obj|"));
    }
    if def.tensor_mor.len() != m || def.tensor_mor.iter().any(|row| row.len() != m) {
        return Err(schema_err(fixture, "tensor_mor table is not |mor| x |mor|"));
    }
    Ok(MonoidalStructure {
        base,
        unit_object: def.unit_object,
        tensor_obj: def.tensor_obj.iter().flatten().copied().collect(),
        tensor_mor: def.tensor_mor.iter().flatten().copied().collect(),
    })
}

fn flatten_tables(
    fixture: &str,
    what: &str,
    grading: &FiniteMonoid,
    components: &[usize],
    tables: &[Vec<Vec<usize>>],
) -> Result<Vec<Vec<usize>>, FixtureError> {
    let k = grading.size;
    if components.len() != k {
        return Err(schema_err(fixture, format!("{what}: component list length differs from grading")));
    }
    if tables.len() != k * k {
        return Err(schema_err(
            fixture,
            format!("{what}: expected {} tables, found {}", k * k, tables.len()),
        ));
    }
    let mut out = Vec::with_capacity(k * k);
    for (p, table) in tables.iter().enumerate() {
        let (m, n) = (p / k, p % k);
        if table.len() != components[m] || table.iter().any(|row| row.len() != components[n]) {
            return Err(schema_err(
                fixture,
                format!("{what}: table at grades ({m}, {n}) is not |A_{m}| x |A_{n}|"),
            ));
        }
        out.push(table.iter().flatten().copied().collect());
    }
    Ok(out)
}

pub fn build_graded_monoid(
    fixture: &str,
    def: &GradedMonoidDef,
) -> Result<GradedMonoid, FixtureError> {
    let grading = resolve_monoid(fixture, &def.grading)?;
    let mult = flatten_tables(fixture, "mult", &grading, &def.components, &def.mult)?;
    Ok(GradedMonoid {
        grading,
        components: def.components.iter().map(|&s| SetObj::new(s)).collect(),
        unit_elem: def.unit_elem,
        mult,
    })
}

pub fn build_lax_functor(
    fixture: &str,
    def: &LaxFunctorDef,
) -> Result<LaxMonoidalFunctor, FixtureError> {
    let grading = resolve_monoid(fixture, &def.grading)?;
    if def.eta.len() != 1 {
        return Err(schema_err(fixture, "eta must be a one-entry table"));
    }
    let mu = flatten_tables(fixture, "mu", &grading, &def.components, &def.mu)?;
    let ms = kanext_core::monoidal::monoidal_from_monoid(&grading)
        .map_err(|e| schema_err(fixture, e.to_string()))?;
    let obj: Vec<SetObj> = def.components.iter().map(|&s| SetObj::new(s)).collect();
    let functor = SetFunctor {
        source: Arc::clone(&ms.base),
        obj: obj.clone(),
        mor: obj.iter().map(|&o| SetMap::identity(o)).collect(),
    };
    let eta = SetMap::new(SetObj::UNIT, obj[grading.unit], def.eta.clone())
        .map_err(|e| schema_err(fixture, e.to_string()))?;
    let mu = mu
        .into_iter()
        .enumerate()
        .map(|(p, table)| {
            let (m, n) = (p / grading.size, p % grading.size);
            SetMap::new(obj[m].tensor(obj[n]), obj[grading.mul(m, n)], table)
                .map_err(|e| schema_err(fixture, e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LaxMonoidalFunctor {
        source: ms,
        functor,
        eta,
        mu,
    })
}

pub fn build_graded_ring(fixture: &str, def: &GradedRingDef) -> Result<GradedRing, FixtureError> {
    let grading = resolve_monoid(fixture, &def.grading)?;
    let components = def
        .components
        .iter()
        .map(|orders| FinAbGroup::new(orders.clone()).map_err(|e| schema_err(fixture, e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let orders: Vec<usize> = components.iter().map(|c| c.order()).collect();
    let mult = flatten_tables(fixture, "mult", &grading, &orders, &def.mult)?;
    Ok(GradedRing {
        grading,
        components,
        unit: def.unit,
        mult,
    })
}

pub fn build_monoid_hom(fixture: &str, def: &MonoidHomDef) -> Result<MonoidHom, FixtureError> {
    Ok(MonoidHom {
        source: resolve_monoid(fixture, &def.source)?,
        target: resolve_monoid(fixture, &def.target)?,
        map: def.map.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_graded_monoid_with_named_grading() {
        let text = r#"{
            "name": "z2_graded_monoid",
            "kind": "graded-monoid",
            "body": {
                "grading": "z2",
                "components": [1, 1],
                "unit_elem": 0,
                "mult": [[[0]], [[0]], [[0]], [[0]]]
            }
        }"#;
        let spec: FixtureSpec = serde_json::from_str(text).unwrap();
        assert_eq!(spec.name, "z2_graded_monoid");
        let FixtureBody::GradedMonoid(def) = &spec.body else {
            panic!("wrong kind")
        };
        let gm = build_graded_monoid(&spec.name, def).unwrap();
        assert!(kanext_core::graded::validate_graded_monoid(&gm)
            .unwrap()
            .is_clean());
    }

    #[test]
    fn unknown_monoid_reference_is_named() {
        let def = GradedMonoidDef {
            grading: MonoidRef::Named("z17".into()),
            components: vec![],
            unit_elem: 0,
            mult: vec![],
        };
        match build_graded_monoid("f", &def) {
            Err(FixtureError::UnknownReference { name, .. }) => assert_eq!(name, "z17"),
            other => panic!("expected unknown reference, got {other:?}"),
        }
    }

    #[test]
    fn truncated_file_reports_position() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("broken.json");
        std::fs::write(&path, "{\"name\": \"x\",\n  \"kind\":").unwrap();
        match parse_fixture(&path) {
            Err(FixtureError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
