//! Odometer-style enumeration of table families, shared by the
//! brute-force verifiers. All enumerations are in lexicographic order,
//! so counts and early exits are deterministic.

/// Number of families of tables with the given `(domain, codomain)`
/// sizes, saturating at `u128::MAX`.
pub(crate) fn family_count(shapes: &[(usize, usize)]) -> u128 {
    let mut total: u128 = 1;
    for &(dom, cod) in shapes {
        if dom == 0 {
            continue;
        }
        if cod == 0 {
            return 0;
        }
        for _ in 0..dom {
            total = total.saturating_mul(cod as u128);
        }
    }
    total
}

/// Visit every family of tables with the given shapes. The visitor may
/// inspect but not keep the slice.
pub(crate) fn for_each_family(shapes: &[(usize, usize)], mut visit: impl FnMut(&[Vec<usize>])) {
    if shapes.iter().any(|&(dom, cod)| cod == 0 && dom > 0) {
        return;
    }
    let mut tables: Vec<Vec<usize>> = shapes.iter().map(|&(dom, _)| vec![0; dom]).collect();
    loop {
        visit(&tables);
        let mut ti = shapes.len();
        loop {
            if ti == 0 {
                return;
            }
            ti -= 1;
            let (dom, cod) = shapes[ti];
            let mut pos = dom;
            let mut carried = true;
            while pos > 0 {
                pos -= 1;
                tables[ti][pos] += 1;
                if tables[ti][pos] < cod {
                    carried = false;
                    break;
                }
                tables[ti][pos] = 0;
            }
            if !carried {
                break;
            }
        }
    }
}

/// Visit every selection of one index per slot, where slot `i` has
/// `sizes[i]` choices.
pub(crate) fn for_each_choice(sizes: &[usize], mut visit: impl FnMut(&[usize])) {
    if sizes.contains(&0) {
        return;
    }
    let mut choice = vec![0usize; sizes.len()];
    loop {
        visit(&choice);
        let mut pos = sizes.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < sizes[pos] {
                break;
            }
            choice[pos] = 0;
        }
    }
}

pub(crate) fn choice_count(sizes: &[usize]) -> u128 {
    sizes
        .iter()
        .fold(1u128, |acc, &s| acc.saturating_mul(s as u128))
}
