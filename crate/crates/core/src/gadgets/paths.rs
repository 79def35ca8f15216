//! Paths whose second (or third) vertex has a long list.

use super::{greedy, pick, reduce, take, take_with, trim, union_all, Frame, GadgetError, Pin, Shape};
use crate::colorset::ColorSet;
use crate::engine::SetColoring;

const E: ColorSet = ColorSet::EMPTY;

/// Path `v1 v2 v3` with lists of sizes 5, 8, 5. Up to two pins on `v1` and
/// one on `v3` are honored.
pub fn color_p3(lists: &[ColorSet], pins: &[Pin]) -> Result<SetColoring, GadgetError> {
    let fr = Frame::new(Shape::P3, lists)?;
    fr.check_pin_slots(Shape::P3, pins)?;
    let alphas = fr.pins_on(lists, pins, 0)?;
    let betas = fr.pins_on(lists, pins, 2)?;
    let alpha_keep: ColorSet = alphas.iter().copied().collect();
    let beta_keep: ColorSet = betas.iter().copied().collect();
    let l = trim(lists, &[5, 8, 5], &[alpha_keep, E, beta_keep]);

    let a = take_with(l[0], alpha_keep, 2, "p3: pins on v1")?;
    let b = take_with(l[2], beta_keep, 1, "p3: pin on v3")?;
    let (l1, f1) = reduce(&fr.graph, &l, &[3, 3, 3], &[a, E, b], &[3, 5, 4], "p3: first reduction")?;

    let g1 = pick(l1[1].difference(l1[2]), "p3: gamma1")?;
    let g2 = pick(l1[1].difference(l1[0]).without(g1), "p3: gamma2")?;
    let mid = take_with(l1[1], ColorSet::from([g1, g2]), f1[1] as usize, "p3: v2")?;
    let left = take(l1[0].difference(mid), f1[0] as usize, "p3: v1")?;
    let right = take(l1[2].difference(mid), f1[2] as usize, "p3: v3")?;

    let phi = union_all(&[&[a, E, b], &[left, mid, right]]);
    fr.finish(lists, pins, phi)
}

/// Path `v1..v4` with lists of sizes 5, 8, 5, 5 where `v3 v4` is colorable.
/// Honors one pin on `v1` and one on `v4`.
pub fn color_p4(lists: &[ColorSet], pins: &[Pin]) -> Result<SetColoring, GadgetError> {
    let fr = Frame::new(Shape::P4, lists)?;
    fr.check_pin_slots(Shape::P4, pins)?;
    let alpha = fr.pins_on(lists, pins, 0)?.first().copied();
    let beta = fr.pins_on(lists, pins, 3)?.first().copied();
    let w = fr.witness(lists, &Shape::P4.required_colorable())?;
    let opt = |c: Option<u32>| c.map(ColorSet::singleton).unwrap_or(E);
    let l = trim(lists, &[5, 8, 5, 5], &[opt(alpha), E, w[2], w[3].union(opt(beta))]);

    let alpha = alpha.unwrap_or_else(|| l[0].min().unwrap());
    let beta = beta.unwrap_or_else(|| l[3].min().unwrap());
    let beta2 = if l[2].contains(beta) {
        pick(l[3].difference(l[2]), "p4: beta' outside L(v3)")?
    } else {
        pick(l[3].without(beta), "p4: beta'")?
    };
    let psi = [ColorSet::singleton(alpha), E, E, ColorSet::from([beta, beta2])];
    let (l1, f1) = reduce(&fr.graph, &l, &[3, 3, 3, 3], &psi, &[4, 7, 4, 3], "p4: first reduction")?;

    let g3 = pick(l1[2].difference(l1[3]), "p4: gamma3")?;
    let g2 = pick(l1[1].difference(l1[0]).without(g3), "p4: gamma2")?;
    let psi2 = [E, ColorSet::singleton(g2), ColorSet::singleton(g3), E];
    let (l2, f2) = reduce(&fr.graph, &l1, &f1, &psi2, &[4, 5, 2, 3], "p4: second reduction")?;
    let rest = greedy(&fr.graph, &l2, &f2, &[2, 3, 1, 0], "p4: greedy")?;

    let phi = union_all(&[&psi, &psi2, &rest]);
    fr.finish(lists, pins, phi)
}

/// Path `v1..v5` with lists of sizes 5, 8, 5, 5, 5 where `v3 v4 v5` is
/// colorable. Honors one pin on `v1` and a pin `β` on `v5` provided
/// `{β} != L(v4) \ L(v3)`.
pub fn color_p5(lists: &[ColorSet], pins: &[Pin]) -> Result<SetColoring, GadgetError> {
    let fr = Frame::new(Shape::P5, lists)?;
    fr.check_pin_slots(Shape::P5, pins)?;
    let alpha = fr.pins_on(lists, pins, 0)?.first().copied();
    let beta = fr.pins_on(lists, pins, 4)?.first().copied();
    if let Some(b) = beta {
        if lists[3].difference(lists[2]) == ColorSet::singleton(b) {
            return Err(GadgetError::PinCondition(format!("{{{b}}} = L(v4) \\ L(v3)")));
        }
    }
    let w = fr.witness(lists, &Shape::P5.required_colorable())?;
    let opt = |c: Option<u32>| c.map(ColorSet::singleton).unwrap_or(E);

    // Trimming must not turn L(v4) \ L(v3) into {β}: keep β in L(v3), and keep
    // one other color of L(v4) \ L(v3) in L(v4).
    let l3 = lists[2].truncate_keeping(5, w[2].union(opt(beta).intersection(lists[2])));
    let spare = lists[3].difference(l3).difference(opt(beta)).min();
    let l4 = lists[3].truncate_keeping(5, w[3].union(opt(spare)));
    let mut l = trim(lists, &[5, 8, 5, 5, 5], &[opt(alpha), E, E, E, w[4].union(opt(beta))]);
    l[2] = l3;
    l[3] = l4;

    let alpha = alpha.unwrap_or_else(|| l[0].min().unwrap());
    let diff43 = l[3].difference(l[2]);
    let beta = match beta {
        Some(b) => b,
        None => pick(l[4].iter().filter(|&c| diff43 != ColorSet::singleton(c)).collect(), "p5: default beta")?,
    };
    if diff43 == ColorSet::singleton(beta) {
        return Err(GadgetError::Internal("p5: trimming broke the pin condition".into()));
    }

    let eps = pick(l[2].difference(l[3]), "p5: epsilon")?;
    let gamma = pick(diff43.without(beta), "p5: gamma")?;
    let beta2 = if l[3].contains(beta) {
        pick(l[4].difference(l[3]), "p5: beta' outside L(v4)")?
    } else {
        pick(l[4].without(beta).without(gamma), "p5: beta'")?
    };
    let psi = [
        ColorSet::singleton(alpha),
        E,
        ColorSet::singleton(eps),
        ColorSet::singleton(gamma),
        ColorSet::from([beta, beta2]),
    ];
    let (l1, f1) = reduce(&fr.graph, &l, &[3; 5], &psi, &[4, 6, 4, 3, 2], "p5: first reduction")?;

    let k3 = pick(l1[2].difference(l1[3]), "p5: kappa3")?;
    let k4 = pick(l1[3].difference(l1[4]), "p5: kappa4")?;
    let k2 = pick(l1[1].difference(l1[0]).without(k3), "p5: kappa2")?;
    let psi2 = [E, ColorSet::singleton(k2), ColorSet::singleton(k3), ColorSet::singleton(k4), E];
    let (l2, f2) = reduce(&fr.graph, &l1, &f1, &psi2, &[4, 4, 1, 2, 2], "p5: second reduction")?;
    let rest = greedy(&fr.graph, &l2, &f2, &[2, 3, 4, 1, 0], "p5: greedy")?;

    let phi = union_all(&[&psi, &psi2, &rest]);
    fr.finish(lists, pins, phi)
}

/// Path `v1..v6` with lists of sizes 5, 8, 5, 5, 5, 5 where `v3..v6` is
/// colorable. Honors one pin on `v1`.
pub fn color_p6(lists: &[ColorSet], pins: &[Pin]) -> Result<SetColoring, GadgetError> {
    let fr = Frame::new(Shape::P6, lists)?;
    fr.check_pin_slots(Shape::P6, pins)?;
    let alpha = fr.pins_on(lists, pins, 0)?.first().copied();
    let w = fr.witness(lists, &Shape::P6.required_colorable())?;
    let opt = |c: Option<u32>| c.map(ColorSet::singleton).unwrap_or(E);
    let l = trim(lists, &[5, 8, 5, 5, 5, 5], &[opt(alpha), E, w[2], w[3], w[4], w[5]]);

    let diff43 = l[3].difference(l[2]);
    let beta = if diff43.len() == 1 {
        let gamma = diff43.min().unwrap();
        pick(l[4].difference(l[5]).without(gamma), "p6: beta avoiding gamma")?
    } else {
        pick(l[4].difference(l[5]), "p6: beta")?
    };
    let mut sub_pins = vec![Pin::new(4, beta)];
    if let Some(a) = alpha {
        sub_pins.push(Pin::new(0, a));
    }
    let head = color_p5(&l[..5], &sub_pins).map_err(|e| GadgetError::Internal(format!("p6: inner path: {e}")))?;
    let last = take(l[5].difference(head[4]), 3, "p6: v6")?;
    let mut phi = head.into_inner();
    phi.push(last);
    fr.finish(lists, pins, SetColoring::new(phi))
}

/// Path `v1..vk` (`5 <= k <= 7`) with lists of size 5 except `|L(v3)| = 8`,
/// where the path minus `v3` is colorable.
pub fn color_path_v3big(lists: &[ColorSet]) -> Result<SetColoring, GadgetError> {
    let k = lists.len();
    if !(5..=7).contains(&k) {
        return Err(GadgetError::WrongVertexCount { expected: 5, got: k });
    }
    let shape = Shape::PathV3Big(k);
    let fr = Frame::new(shape, lists)?;
    let w = fr.witness(lists, &shape.required_colorable())?;
    let sizes = shape.list_sizes();
    let l = trim(lists, &sizes, w.as_slice());

    let alpha = pick(l[1].difference(l[0]), "path-v3big: alpha")?;
    let tail_pins = [Pin::new(0, alpha)];
    let tail = match k {
        5 => color_p4(&l[1..], &tail_pins),
        6 => color_p5(&l[1..], &tail_pins),
        _ => color_p6(&l[1..], &tail_pins),
    }
    .map_err(|e| GadgetError::Internal(format!("path-v3big: tail: {e}")))?;
    let first = take(l[0].difference(tail[0]), 3, "path-v3big: v1")?;
    let mut phi = vec![first];
    phi.extend(tail.into_inner());
    fr.finish(lists, &[], SetColoring::new(phi))
}
