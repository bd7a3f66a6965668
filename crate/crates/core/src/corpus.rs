//! The standard verification corpus: curated small monoids, exhaustive
//! families of homomorphisms and graded monoids, and seeded random
//! fixtures. Everything is deterministic — the same seed always yields
//! byte-identical fixtures.

use crate::enumerate::{family_count, for_each_family};
use crate::error::{Error, Result};
use crate::graded::{
    enumerate_homs, validate_graded_monoid, FiniteMonoid, GradedMonoid, MonoidHom,
};
use crate::setskel::SetObj;

/// A named regrading problem: a graded monoid and a homomorphism out of
/// its grading.
#[derive(Debug, Clone)]
pub struct CorpusFixture {
    pub name: String,
    pub graded: GradedMonoid,
    pub hom: MonoidHom,
}

/// The curated monoid list: trivial, the cyclic groups of order 2..4,
/// the Klein four-group, and the two-element idempotent monoid.
pub fn curated_monoids() -> Vec<(&'static str, FiniteMonoid)> {
    let z2 = FiniteMonoid::cyclic(2);
    vec![
        ("trivial", FiniteMonoid::trivial()),
        ("z2", z2.clone()),
        ("z3", FiniteMonoid::cyclic(3)),
        ("z4", FiniteMonoid::cyclic(4)),
        ("z2xz2", FiniteMonoid::direct_product(&z2, &z2)),
        ("idem2", FiniteMonoid::idempotent2()),
    ]
}

pub fn monoid_by_name(name: &str) -> Option<FiniteMonoid> {
    curated_monoids()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, m)| m)
}

/// All labeled monoid structures of size up to `max_size`, enumerated
/// by brute force over unit choices and multiplication tables.
pub fn enumerate_monoids(max_size: usize) -> Vec<FiniteMonoid> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        for unit in 0..size {
            for_each_family(&[(size * size, size)], |tables| {
                let candidate = FiniteMonoid {
                    size,
                    unit,
                    mult: tables[0].clone(),
                };
                if candidate.validate().map(|r| r.is_clean()).unwrap_or(false) {
                    out.push(candidate);
                }
            });
        }
    }
    out
}

/// All graded monoids over `grading` with every component of size at
/// most `max_component`, enumerated by brute force and filtered by the
/// graded laws. Guarded by `max_enumeration` raw candidates.
pub fn enumerate_graded_monoids(
    grading: &FiniteMonoid,
    max_component: usize,
    max_enumeration: u128,
) -> Result<Vec<GradedMonoid>> {
    let report = grading.validate()?;
    if !report.is_clean() {
        return Err(Error::Precondition("grading does not validate".into()));
    }
    let k = grading.size;
    let mut out = Vec::new();
    let mut sizes = vec![0usize; k];
    loop {
        if sizes[grading.unit] > 0 {
            let shapes: Vec<(usize, usize)> = (0..k)
                .flat_map(|m| (0..k).map(move |n| (m, n)))
                .map(|(m, n)| (sizes[m] * sizes[n], sizes[grading.mul(m, n)]))
                .collect();
            let unit_choices = sizes[grading.unit] as u128;
            let candidates = family_count(&shapes).saturating_mul(unit_choices);
            if candidates > max_enumeration {
                return Err(Error::EnumerationGuard {
                    what: "graded monoid enumeration".into(),
                    candidates,
                    limit: max_enumeration,
                });
            }
            for unit_elem in 0..sizes[grading.unit] {
                for_each_family(&shapes, |tables| {
                    let candidate = GradedMonoid {
                        grading: grading.clone(),
                        components: sizes.iter().map(|&s| SetObj::new(s)).collect(),
                        unit_elem,
                        mult: tables.to_vec(),
                    };
                    if validate_graded_monoid(&candidate)
                        .map(|r| r.is_clean())
                        .unwrap_or(false)
                    {
                        out.push(candidate);
                    }
                });
            }
        }
        // odometer over component sizes
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            sizes[pos] += 1;
            if sizes[pos] <= max_component {
                break;
            }
            sizes[pos] = 0;
        }
    }
}

/// SplitMix64: a tiny deterministic generator, stable across platforms
/// and versions, so seeded fixtures never drift.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            p.swap(i, self.below(i + 1));
        }
        p
    }
}

/// Relabel every component by a permutation, conjugating the tables.
/// The result is isomorphic to the input, hence still valid, but its
/// tables are scrambled.
fn relabel(gm: &GradedMonoid, rng: &mut SplitMix64) -> GradedMonoid {
    let k = gm.grading.size;
    let perms: Vec<Vec<usize>> = gm.components.iter().map(|c| rng.permutation(c.size)).collect();
    let mut inv = Vec::with_capacity(k);
    for p in &perms {
        let mut q = vec![0; p.len()];
        for (i, &v) in p.iter().enumerate() {
            q[v] = i;
        }
        inv.push(q);
    }
    let mut mult = Vec::with_capacity(k * k);
    for m in 0..k {
        for n in 0..k {
            let mn = gm.grading.mul(m, n);
            let sn = gm.components[n].size;
            let mut table = vec![0; gm.components[m].size * sn];
            for a in 0..gm.components[m].size {
                for b in 0..sn {
                    table[a * sn + b] = perms[mn][gm.apply_mult(m, n, inv[m][a], inv[n][b])];
                }
            }
            mult.push(table);
        }
    }
    GradedMonoid {
        grading: gm.grading.clone(),
        components: gm.components.clone(),
        unit_elem: perms[gm.grading.unit][gm.unit_elem],
        mult,
    }
}

/// `count` seeded random fixtures with grading and component sizes at
/// most 3: a random valid monoid `K` of size at most 3, graded over a
/// random curated monoid `M` of size at most 3 by projection, with all
/// component carriers scrambled by random permutations, paired with a
/// random homomorphism out of `M` into a curated target of size at
/// most 3.
pub fn random_fixtures(seed: u64, count: usize) -> Vec<CorpusFixture> {
    let mut rng = SplitMix64(seed);
    let small_monoids = enumerate_monoids(3);
    let curated: Vec<(&str, FiniteMonoid)> = curated_monoids()
        .into_iter()
        .filter(|(_, m)| m.size <= 3)
        .collect();
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let component = &small_monoids[rng.below(small_monoids.len())];
        let (gname, grading) = &curated[rng.below(curated.len())];
        let (tname, target) = &curated[rng.below(curated.len())];
        let homs = enumerate_homs(grading, target);
        let hom = homs[rng.below(homs.len())].clone();
        let graded = relabel(&GradedMonoid::product_graded(component, grading), &mut rng);
        out.push(CorpusFixture {
            name: format!("rand-{i:02}-{gname}-to-{tname}"),
            graded,
            hom,
        });
    }
    out
}

/// The standard corpus, in three deterministic families:
///
/// 1. every homomorphism between curated monoids, paired with the
///    tautological grading of its source and with a two-element-fiber
///    product grading;
/// 2. every graded monoid with component sizes at most 2 over the
///    gradings of size at most 2 (trivial, z2, idem2), paired with the
///    collapse to the trivial monoid;
/// 3. `random_count` seeded random fixtures with sizes at most 3.
pub fn standard_corpus(seed: u64, random_count: usize) -> Result<Vec<CorpusFixture>> {
    let mut out = Vec::new();
    let z2 = FiniteMonoid::cyclic(2);
    for (sname, source) in curated_monoids() {
        for (tname, target) in curated_monoids() {
            for (i, hom) in enumerate_homs(&source, &target).into_iter().enumerate() {
                out.push(CorpusFixture {
                    name: format!("hom-{sname}-to-{tname}-{i}-taut"),
                    graded: GradedMonoid::tautological(&source),
                    hom: hom.clone(),
                });
                out.push(CorpusFixture {
                    name: format!("hom-{sname}-to-{tname}-{i}-z2fib"),
                    graded: GradedMonoid::product_graded(&z2, &source),
                    hom,
                });
            }
        }
    }
    for (gname, grading) in curated_monoids() {
        if grading.size > 2 {
            continue;
        }
        for (j, graded) in enumerate_graded_monoids(&grading, 2, 10_000_000)?
            .into_iter()
            .enumerate()
        {
            out.push(CorpusFixture {
                name: format!("all-{gname}-{j}-collapse"),
                graded,
                hom: MonoidHom::collapse(&grading),
            });
        }
    }
    out.extend(random_fixtures(seed, random_count));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curated_monoids_all_validate() {
        for (name, m) in curated_monoids() {
            assert!(m.validate().unwrap().is_clean(), "{name}");
        }
        assert!(monoid_by_name("z4").is_some());
        assert!(monoid_by_name("z5").is_none());
    }

    #[test]
    fn small_monoid_enumeration_counts() {
        // labeled monoids: size 1 -> 1; size 2 -> 4 (2 unit labels x
        // {group, idempotent}); this is a frozen exhaustive count.
        let monoids = enumerate_monoids(2);
        assert_eq!(monoids.len(), 1 + 4);
        for m in &monoids {
            assert!(m.validate().unwrap().is_clean());
        }
    }

    #[test]
    fn graded_enumeration_over_z2_matches_hand_counts() {
        let z2 = FiniteMonoid::cyclic(2);
        let all = enumerate_graded_monoids(&z2, 1, 1_000_000).unwrap();
        // component sizes (1,0) and (1,1), each admitting exactly one
        // structure: the empty odd part, and {e | x} with x*x = e.
        assert_eq!(all.len(), 2);
        for gm in &all {
            assert!(validate_graded_monoid(gm).unwrap().is_clean());
        }
    }

    #[test]
    fn graded_enumeration_guard_trips() {
        let z2 = FiniteMonoid::cyclic(2);
        assert!(matches!(
            enumerate_graded_monoids(&z2, 2, 10),
            Err(Error::EnumerationGuard { .. })
        ));
    }

    #[test]
    fn random_fixtures_are_valid_and_deterministic() {
        let a = random_fixtures(42, 10);
        let b = random_fixtures(42, 10);
        assert_eq!(a.len(), 10);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.graded, y.graded);
            assert_eq!(x.hom, y.hom);
            assert!(validate_graded_monoid(&x.graded).unwrap().is_clean());
            assert!(x.hom.validate().unwrap().is_clean());
            assert_eq!(x.hom.source, x.graded.grading);
        }
        let c = random_fixtures(43, 10);
        assert!(a.iter().zip(&c).any(|(x, y)| x.graded != y.graded || x.hom != y.hom));
    }

    #[test]
    fn standard_corpus_is_well_formed() {
        let corpus = standard_corpus(7, 10).unwrap();
        assert!(corpus.len() > 100, "corpus has {} fixtures", corpus.len());
        let mut names = std::collections::BTreeSet::new();
        for fixture in &corpus {
            assert!(names.insert(fixture.name.clone()), "duplicate {}", fixture.name);
            assert_eq!(fixture.hom.source, fixture.graded.grading);
        }
    }
}
