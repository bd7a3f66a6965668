//! Independent oracles for the acceptance suite. Nothing here calls the
//! engine's union-find or factorization paths: partitions are computed
//! by transitive closure over a boolean matrix, and mediating maps are
//! derived from preimage consistency.

use kanext_core::setskel::{ColimitWitness, SetFunctor, SetMap};

/// Partition-refinement oracle: the same quotient the colimit engine is
/// supposed to compute, via Warshall closure of the seed relation on the
/// total coproduct, with the same canonical numbering rule (classes by
/// least element).
pub fn partition_oracle(diagram: &SetFunctor) -> (Vec<usize>, usize) {
    let sizes: Vec<usize> = diagram.obj.iter().map(|o| o.size).collect();
    let total: usize = sizes.iter().sum();
    let mut offset = vec![0usize; sizes.len()];
    for j in 1..sizes.len() {
        offset[j] = offset[j - 1] + sizes[j - 1];
    }
    let mut rel = vec![false; total * total];
    for i in 0..total {
        rel[i * total + i] = true;
    }
    let cat = &diagram.source;
    for m in 0..cat.num_morphisms() {
        let (s, t) = cat.morphisms[m];
        let map = &diagram.mor[m];
        for x in 0..map.source.size {
            let a = offset[s] + x;
            let b = offset[t] + map.apply(x);
            rel[a * total + b] = true;
            rel[b * total + a] = true;
        }
    }
    for k in 0..total {
        for i in 0..total {
            if rel[i * total + k] {
                for j in 0..total {
                    if rel[k * total + j] {
                        rel[i * total + j] = true;
                    }
                }
            }
        }
    }
    let mut label = vec![usize::MAX; total];
    let mut classes = 0;
    for i in 0..total {
        if label[i] == usize::MAX {
            for j in 0..total {
                if rel[i * total + j] {
                    label[j] = classes;
                }
            }
            classes += 1;
        }
    }
    (label, classes)
}

/// Compare a computed witness against the oracle partition: same apex
/// size, and the injection tables realize exactly the oracle labels.
pub fn witness_matches_oracle(diagram: &SetFunctor, witness: &ColimitWitness) -> bool {
    let (label, classes) = partition_oracle(diagram);
    if witness.apex.size != classes {
        return false;
    }
    let mut offset = 0usize;
    for (j, inj) in witness.injections.iter().enumerate() {
        for x in 0..diagram.obj[j].size {
            if inj.apply(x) != label[offset + x] {
                return false;
            }
        }
        offset += diagram.obj[j].size;
    }
    true
}

/// Enumerate every cocone on `diagram` with targets of size up to
/// `max_target` (subject to `budget` families per target size) and check
/// that exactly one mediating map out of the witness exists for each.
/// The mediating map is found independently: its value on every apex
/// element is forced by preimage consistency, since the partition oracle
/// already certified that every apex element is hit.
///
/// Returns `(cocones_checked, all_unique)`.
pub fn universality_by_enumeration(
    diagram: &SetFunctor,
    witness: &ColimitWitness,
    max_target: usize,
    budget: u128,
) -> (u64, bool) {
    let sizes: Vec<usize> = diagram.obj.iter().map(|o| o.size).collect();
    let cat = &diagram.source;
    let mut checked = 0u64;
    for t in 0..=max_target {
        if t == 0 && sizes.iter().any(|&s| s > 0) {
            // no maps into the empty set from a nonempty source
            continue;
        }
        let families: u128 = sizes
            .iter()
            .map(|&s| (t as u128).saturating_pow(s as u32))
            .fold(1u128, u128::saturating_mul);
        if families > budget {
            continue;
        }
        let mut legs: Vec<Vec<usize>> = sizes.iter().map(|&s| vec![0usize; s]).collect();
        'families: loop {
            // is this family a cocone?
            let mut is_cocone = true;
            'cocone: for m in 0..cat.num_morphisms() {
                let (s, tt) = cat.morphisms[m];
                let map = &diagram.mor[m];
                for x in 0..map.source.size {
                    if legs[s][x] != legs[tt][map.apply(x)] {
                        is_cocone = false;
                        break 'cocone;
                    }
                }
            }
            if is_cocone {
                // forced mediating map by preimage consistency
                let mut value = vec![usize::MAX; witness.apex.size];
                let mut consistent = true;
                'forced: for (j, inj) in witness.injections.iter().enumerate() {
                    for (x, &leg_value) in legs[j].iter().enumerate() {
                        let e = inj.apply(x);
                        if value[e] == usize::MAX {
                            value[e] = leg_value;
                        } else if value[e] != leg_value {
                            consistent = false;
                            break 'forced;
                        }
                    }
                }
                let exactly_one = consistent && value.iter().all(|&v| v != usize::MAX);
                if !exactly_one {
                    return (checked, false);
                }
                // the forced candidate must actually mediate
                for (j, inj) in witness.injections.iter().enumerate() {
                    for x in 0..sizes[j] {
                        if value[inj.apply(x)] != legs[j][x] {
                            return (checked, false);
                        }
                    }
                }
                checked += 1;
            }
            // odometer over leg families
            if t == 0 {
                if sizes.iter().all(|&s| s == 0) && is_cocone {
                    // single empty family already handled
                }
                break 'families;
            }
            let mut j = legs.len();
            loop {
                if j == 0 {
                    break 'families;
                }
                j -= 1;
                let mut pos = sizes[j];
                let mut carried = true;
                while pos > 0 {
                    pos -= 1;
                    legs[j][pos] += 1;
                    if legs[j][pos] < t {
                        carried = false;
                        break;
                    }
                    legs[j][pos] = 0;
                }
                if !carried {
                    break;
                }
            }
        }
    }
    (checked, true)
}

/// Tensor every injection of a witness on the right by `id_k`, yielding
/// the candidate cocone for the tensored diagram.
pub fn tensor_witness_legs(witness: &ColimitWitness, k: usize, on_left: bool) -> Vec<SetMap> {
    let id_k = SetMap::identity(kanext_core::setskel::SetObj::new(k));
    witness
        .injections
        .iter()
        .map(|inj| if on_left { id_k.tensor(inj) } else { inj.tensor(&id_k) })
        .collect()
}

/// SplitMix64, duplicated here so the oracle side stays independent of
/// the engine's corpus generator.
pub struct TestRng(pub u64);

impl TestRng {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n.max(1) as u64) as usize
    }
}
