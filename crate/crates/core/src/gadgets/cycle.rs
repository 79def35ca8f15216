//! The 6-cycle with two long lists.

use super::{color_edge, color_p5, greedy, pick, reduce, trim, union_all, Frame, GadgetError, Pin, Shape};
use crate::colorset::ColorSet;
use crate::engine::SetColoring;

const E: ColorSet = ColorSet::EMPTY;

/// Colors the cycle `v1..v6` whose lists have size at least 5, and at least 8
/// on the two vertices in `long`, given that the cycle minus `long` is
/// colorable.
pub fn color_c6(lists: &[ColorSet], long: [usize; 2]) -> Result<SetColoring, GadgetError> {
    if lists.len() != 6 {
        return Err(GadgetError::WrongVertexCount { expected: 6, got: lists.len() });
    }
    let [a, b] = long;
    if a >= 6 || b >= 6 || a == b {
        return Err(GadgetError::Hypothesis(format!("long-list vertices {a} and {b} are not two distinct cycle vertices")));
    }
    // walk from `a` in the direction that reaches `b` first
    let fwd = (b + 6 - a) % 6;
    let perm: Vec<usize> = if fwd <= 3 { (0..6).map(|i| (a + i) % 6).collect() } else { (0..6).map(|i| (a + 6 - i) % 6).collect() };
    let t = fwd.min(6 - fwd) + 1;
    let local: Vec<ColorSet> = perm.iter().map(|&p| lists[p]).collect();

    let phi = color_normalized(&local, t)?;
    let mut out = vec![E; 6];
    for (i, &p) in perm.iter().enumerate() {
        out[p] = phi[i];
    }
    Ok(SetColoring::new(out))
}

fn color_normalized(lists: &[ColorSet], t: usize) -> Result<SetColoring, GadgetError> {
    let shape = Shape::C6 { t };
    let fr = Frame::new(shape, lists)?;
    let w = fr.witness(lists, &shape.required_colorable())?;
    let l = trim(lists, &shape.list_sizes(), w.as_slice());
    let phi = match t {
        2 => adjacent(&fr, &l)?,
        3 => distance_two(&l)?,
        _ => opposite(&fr, &l)?,
    };
    fr.finish(lists, &[], phi)
}

/// Long lists on `v1 v2`.
fn adjacent(fr: &Frame, l: &[ColorSet]) -> Result<SetColoring, GadgetError> {
    let beta = pick(
        l[3].difference(l[2]).iter().filter(|&c| !l[4].difference(l[5]).without(c).is_empty()).collect(),
        "c6: beta",
    )?;
    let gamma = pick(l[4].difference(l[5]).without(beta), "c6: gamma")?;
    let beta2 = if l[4].contains(beta) {
        pick(l[3].difference(l[4]), "c6: beta' outside L(v5)")?
    } else {
        pick(l[3].without(beta).without(gamma), "c6: beta'")?
    };
    let gamma2 = if l[3].contains(gamma) {
        pick(l[4].difference(l[3]), "c6: gamma' outside L(v4)")?
    } else {
        pick(l[4].without(beta).without(beta2).without(gamma), "c6: gamma'")?
    };
    let alpha = pick(l[2].difference(l[3]), "c6: alpha")?;
    let eps = pick(l[5].difference(l[4]), "c6: epsilon")?;
    let psi = [
        E,
        E,
        ColorSet::singleton(alpha),
        ColorSet::from([beta, beta2]),
        ColorSet::from([gamma, gamma2]),
        ColorSet::singleton(eps),
    ];
    let (l1, f1) = reduce(&fr.graph, l, &[3; 6], &psi, &[7, 7, 3, 2, 2, 3], "c6: first reduction")?;

    let alpha2 = pick(l1[2].difference(l1[3]), "c6: alpha''")?;
    let eps2 = pick(l1[5].difference(l1[4]), "c6: epsilon''")?;
    let psi2 = [E, E, ColorSet::singleton(alpha2), E, E, ColorSet::singleton(eps2)];
    let (l2, _) = reduce(&fr.graph, &l1, &f1, &psi2, &[6, 6, 2, 2, 2, 2], "c6: second reduction")?;

    // one color on each of v3..v6
    let path = if l2[0] != l2[1] {
        let kappa = pick(l2[0].difference(l2[1]), "c6: kappa")?;
        let c6 = pick(l2[5].without(kappa), "c6: v6")?;
        let c5 = pick(l2[4].without(c6), "c6: v5")?;
        let c4 = pick(l2[3].without(c5), "c6: v4")?;
        let c3 = pick(l2[2].without(c4), "c6: v3")?;
        [c3, c4, c5, c6]
    } else {
        #[cfg(test)]
        tests::FOUR_CYCLE_HITS.with(|h| h.set(h.get() + 1));
        four_cycle(&l2[2..6]).ok_or_else(|| GadgetError::Internal("c6: 4-cycle with 2-lists".into()))?
    };
    let (p1, p2) = color_edge(l2[0].without(path[3]), l2[1].without(path[0]), "c6: v1 v2")?;
    let mut rest = vec![p1, p2];
    rest.extend(path.iter().map(|&c| ColorSet::singleton(c)));
    Ok(union_all(&[&psi, &psi2, &rest]))
}

/// One color per vertex of the 4-cycle `x0 x1 x2 x3`.
fn four_cycle(lists: &[ColorSet]) -> Option<[u32; 4]> {
    for c0 in lists[0].iter() {
        for c1 in lists[1].iter().filter(|&c| c != c0) {
            for c2 in lists[2].iter().filter(|&c| c != c1) {
                if let Some(c3) = lists[3].iter().find(|&c| c != c2 && c != c0) {
                    return Some([c0, c1, c2, c3]);
                }
            }
        }
    }
    None
}

/// Long lists on `v1 v3`.
fn distance_two(l: &[ColorSet]) -> Result<SetColoring, GadgetError> {
    let diff54 = l[4].difference(l[3]);
    let allowed = |c: u32| diff54 != ColorSet::singleton(c);
    let (alpha, beta) = if !l[1].is_subset(l[0]) {
        let alpha = pick(l[1].difference(l[0]), "c6: alpha")?;
        let beta = pick(l[5].iter().filter(|&c| allowed(c)).collect(), "c6: beta")?;
        (alpha, beta)
    } else {
        let beta = pick(l[5].difference(l[0].difference(l[1])).iter().filter(|&c| allowed(c)).collect(), "c6: beta")?;
        let alpha = if l[1].contains(beta) { beta } else { pick(l[1], "c6: alpha")? };
        (alpha, beta)
    };
    let path = color_p5(&l[1..6], &[Pin::new(0, alpha), Pin::new(4, beta)])
        .map_err(|e| GadgetError::Internal(format!("c6: path v2..v6: {e}")))?;
    let first = super::take(l[0].difference(path[0].union(path[4])), 3, "c6: v1")?;
    let mut phi = vec![first];
    phi.extend(path.into_inner());
    Ok(SetColoring::new(phi))
}

/// Symmetries of the cycle fixing `{v1, v4}`; each is an involution.
const SYMMETRIES: [[usize; 6]; 4] = [[0, 1, 2, 3, 4, 5], [0, 5, 4, 3, 2, 1], [3, 2, 1, 0, 5, 4], [3, 4, 5, 0, 1, 2]];

fn permute<T: Copy>(items: &[T], p: &[usize; 6]) -> Vec<T> {
    p.iter().map(|&i| items[i]).collect()
}

/// Long lists on `v1 v4`.
fn opposite(fr: &Frame, l: &[ColorSet]) -> Result<SetColoring, GadgetError> {
    let alpha = pick(l[1].difference(l[2]), "c6: alpha")?;
    let beta = pick(l[2].difference(l[1]), "c6: beta")?;
    let gamma = pick(l[4].difference(l[5]), "c6: gamma")?;
    let eps = pick(l[5].difference(l[4]), "c6: epsilon")?;
    let psi = [E, ColorSet::singleton(alpha), ColorSet::singleton(beta), E, ColorSet::singleton(gamma), ColorSet::singleton(eps)];
    let (l1, f1) = reduce(&fr.graph, l, &[3; 6], &psi, &[6, 4, 4, 6, 4, 4], "c6: first reduction")?;

    let order = [1, 2, 4, 5, 0, 3];
    for sym in &SYMMETRIES {
        let m = permute(&l1, sym);
        let Some(alpha2) = m[1].difference(m[0]).min() else { continue };
        let b3 = m[2].without(alpha2);
        let (beta2, gamma2) = if let Some(c) = b3.intersection(m[4]).min() {
            (c, c)
        } else if let Some(c) = b3.difference(m[3]).min() {
            (c, pick(m[4], "c6: gamma''")?)
        } else {
            (pick(b3, "c6: beta''")?, pick(m[4].difference(m[3]), "c6: gamma'' outside L(v4)")?)
        };
        let psi2 = [E, ColorSet::singleton(alpha2), ColorSet::singleton(beta2), E, ColorSet::singleton(gamma2), E];
        let f = permute(&f1, sym);
        let (l2, f2) = reduce(&fr.graph, &m, &f, &psi2, &[6, 2, 2, 5, 3, 3], "c6: second reduction")?;
        let rest = greedy(&fr.graph, &l2, &f2, &order, "c6: greedy")?;
        let phi = union_all(&[&permute(&psi, sym), &psi2, &rest]);
        return Ok(SetColoring::new(permute(phi.as_slice(), sym)));
    }

    // every short list sits inside its long neighbor's list
    let mut choice = None;
    'outer: for a2 in l1[1].intersection(l1[5]).iter() {
        for b2 in l1[2].intersection(l1[4]).iter() {
            if a2 != b2 {
                choice = Some((a2, b2));
                break 'outer;
            }
        }
    }
    let (a2, b2) = choice.ok_or_else(|| GadgetError::Internal("c6: alpha'', beta''".into()))?;
    let psi2 = [E, ColorSet::singleton(a2), ColorSet::singleton(b2), E, ColorSet::singleton(b2), ColorSet::singleton(a2)];
    let (l2, f2) = reduce(&fr.graph, &l1, &f1, &psi2, &[5, 2, 2, 5, 2, 2], "c6: second reduction")?;
    let rest = greedy(&fr.graph, &l2, &f2, &order, "c6: greedy")?;
    Ok(union_all(&[&psi, &psi2, &rest]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(lo: u32, hi: u32) -> ColorSet {
        ColorSet::range(lo, hi)
    }

    #[test]
    fn every_placement_of_long_lists() {
        for a in 0..6 {
            for b in 0..6 {
                if a == b {
                    continue;
                }
                let mut lists: Vec<ColorSet> = (0..6).map(|i| cs(1 + i as u32, 5 + i as u32)).collect();
                lists[a] = cs(1, 8);
                lists[b] = cs(3, 10);
                let phi = color_c6(&lists, [a, b]).unwrap_or_else(|e| panic!("{a} {b}: {e}"));
                assert_eq!(phi.len(), 6);
            }
        }
    }

    thread_local! {
        pub(super) static FOUR_CYCLE_HITS: std::cell::Cell<usize> = const { std::cell::Cell::new(0) };
    }

    #[test]
    fn equal_long_lists_use_four_cycle() {
        // v1 and v2 share a list and lose the same colors in both reductions
        let lists = [cs(1, 8), cs(1, 8), cs(1, 5), cs(2, 6), cs(1, 5), cs(2, 6)];
        FOUR_CYCLE_HITS.with(|h| h.set(0));
        let mut found = false;
        for shift in 0..12u32 {
            let rot: Vec<ColorSet> = lists.iter().map(|l| l.iter().map(|c| (c + shift) % 13 + 1).collect()).collect();
            let mut l = rot.clone();
            l[1] = l[0];
            assert!(color_c6(&l, [0, 1]).is_ok());
            found |= FOUR_CYCLE_HITS.with(|h| h.get()) > 0;
        }
        let mut l: Vec<ColorSet> = vec![cs(1, 8), cs(1, 8), cs(9, 13), cs(8, 12), cs(9, 13), cs(8, 12)];
        l[0] = l[0].with(9).without(1);
        l[1] = l[0];
        assert!(color_c6(&l, [0, 1]).is_ok());
        found |= FOUR_CYCLE_HITS.with(|h| h.get()) > 0;
        assert!(found, "the equal-list branch was never reached");
    }

    #[test]
    fn rejects_uncolorable_rest() {
        let lists = [cs(1, 8), cs(1, 8), cs(1, 5), cs(1, 5), cs(2, 6), cs(3, 7)];
        assert!(matches!(color_c6(&lists, [0, 1]), Err(GadgetError::Hypothesis(_))));
        assert!(color_c6(&lists, [0, 0]).is_err());
    }

    #[test]
    fn four_cycle_two_lists() {
        let l = [ColorSet::from([1, 2]); 4];
        let c = four_cycle(&l).unwrap();
        assert!(c[0] != c[1] && c[1] != c[2] && c[2] != c[3] && c[3] != c[0]);
    }
}
