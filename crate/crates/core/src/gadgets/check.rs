//! Soundness sweeps: run a construction and judge its output independently.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GadgetError, Pin, Shape};
use crate::colorset::ColorSet;
use crate::engine::{self, DemandFunction, ListAssignment, SetColoring};
use crate::venn;

/// Verdict on one gadget instance.
#[derive(Debug, Clone)]
pub enum Outcome {
    /// The construction returned a coloring that is valid and honors the pins.
    Colored(SetColoring),
    /// The construction refused, and the refusal was confirmed independently.
    Rejected(GadgetError),
    /// A bad coloring, an internal failure, or an unjustified refusal.
    Violation(String),
}

impl Outcome {
    pub fn is_violation(&self) -> bool {
        matches!(self, Outcome::Violation(_))
    }
}

#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    pub instances: u64,
    pub colored: u64,
    pub rejected: u64,
    pub violations: u64,
    pub first_counterexample: Option<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    fn record(&mut self, shape: Shape, lists: &[ColorSet], pins: &[Pin], outcome: Outcome) {
        self.instances += 1;
        match outcome {
            Outcome::Colored(_) => self.colored += 1,
            Outcome::Rejected(_) => self.rejected += 1,
            Outcome::Violation(msg) => {
                self.violations += 1;
                if self.first_counterexample.is_none() {
                    self.first_counterexample = Some(describe(shape, lists, pins, &msg));
                }
            }
        }
    }
}

/// The instance in the list text format, vertex names and pins as comments.
fn describe(shape: Shape, lists: &[ColorSet], pins: &[Pin], msg: &str) -> String {
    let names = shape.names();
    let mut out = format!("# {shape}: {msg}\n");
    for (i, l) in lists.iter().enumerate() {
        out.push_str(&format!("L {i}: {l}   # {}\n", names.get(i).copied().unwrap_or("?")));
    }
    for p in pins {
        out.push_str(&format!("# pin {} on {}\n", p.color, names.get(p.vertex).copied().unwrap_or("?")));
    }
    out
}

/// Runs the construction for `shape` and checks the result.
pub fn check_instance(shape: Shape, lists: &[ColorSet], pins: &[Pin]) -> Outcome {
    match shape.color(lists, pins) {
        Ok(phi) => {
            let g = shape.graph();
            let l = ListAssignment::new(lists.to_vec());
            let f = DemandFunction::uniform(lists.len(), 3);
            if let Err(v) = engine::is_valid_coloring(&g, &l, &f, &phi) {
                return Outcome::Violation(format!("invalid coloring: {v}"));
            }
            if let Some(p) = pins.iter().find(|p| !phi[p.vertex].contains(p.color)) {
                return Outcome::Violation(format!("pin {} not honored on vertex {}", p.color, p.vertex));
            }
            Outcome::Colored(phi)
        }
        Err(GadgetError::Internal(step)) => Outcome::Violation(format!("construction failed at `{step}`")),
        Err(e) => match justify(shape, lists, pins, &e) {
            Ok(()) => Outcome::Rejected(e),
            Err(why) => Outcome::Violation(format!("unjustified rejection `{e}`: {why}")),
        },
    }
}

/// Confirms a refusal without looking at the construction.
fn justify(shape: Shape, lists: &[ColorSet], pins: &[Pin], err: &GadgetError) -> Result<(), String> {
    let sizes = shape.list_sizes();
    let holds = match err {
        GadgetError::WrongVertexCount { .. } => lists.len() != sizes.len(),
        GadgetError::ListSize { .. } => lists.len() == sizes.len() && lists.iter().zip(&sizes).any(|(l, &s)| l.len() < s),
        GadgetError::PinNotInList { .. } => pins.iter().any(|p| p.vertex >= lists.len() || !lists[p.vertex].contains(p.color)),
        GadgetError::PinNotAllowed(_) => {
            let slots = shape.pin_slots();
            pins.iter().any(|p| {
                let cap = slots.iter().find(|(v, _)| *v == p.vertex).map_or(0, |(_, c)| *c);
                pins.iter().filter(|q| q.vertex == p.vertex).count() > cap
            })
        }
        GadgetError::PinCondition(_) => {
            shape == Shape::P5
                && pins.iter().any(|p| p.vertex == 4 && lists[3].difference(lists[2]) == ColorSet::singleton(p.color))
        }
        GadgetError::Hypothesis(_) => !hypothesis_holds(shape, lists),
        GadgetError::Internal(_) => false,
    };
    if holds {
        Ok(())
    } else {
        Err("the stated reason does not apply".into())
    }
}

/// Whether the required subgraph of `shape` is (L:3)-colorable, decided by
/// the exact solver.
pub(crate) fn hypothesis_holds(shape: Shape, lists: &[ColorSet]) -> bool {
    let subset = shape.required_colorable();
    if subset.is_empty() {
        return true;
    }
    let (sub, map) = shape.graph().induced(&subset);
    let l: ListAssignment = map.iter().map(|&v| lists[v]).collect();
    let f = DemandFunction::uniform(map.len(), 3);
    matches!(engine::solve(&sub, &l, &f), Ok(Some(_)))
}

/// Every list pattern at the construction's list sizes, up to renaming, with
/// every pin placement up to renaming. The triangle, which has no fixed
/// sizes, is swept over all patterns with lists of at most 8 colors.
pub fn exhaustive(shape: Shape) -> SweepReport {
    let mut report = SweepReport::default();
    let k = shape.names().len();
    let mut visit = |cells: &[usize]| {
        let lists = venn::materialize(k, cells);
        for pins in pin_choices(shape, &lists) {
            let outcome = check_instance(shape, &lists, &pins);
            report.record(shape, &lists, &pins, outcome);
        }
    };
    if shape == Shape::Triangle {
        venn::for_each_bounded(&[8, 8, 8], 24, &mut visit);
    } else {
        venn::for_each_fixed(&shape.list_sizes(), &mut visit);
    }
    report
}

/// All pin sets the shape accepts, each color taken from a set of cell
/// representatives.
fn pin_choices(shape: Shape, lists: &[ColorSet]) -> Vec<Vec<Pin>> {
    let slots = shape.pin_slots();
    let total: usize = slots.iter().map(|(_, c)| c).sum();
    let mut choices = vec![Vec::new()];
    for &(v, cap) in &slots {
        let cands: Vec<u32> = venn::pin_candidates(lists, v, total).iter().collect();
        let mut per_vertex: Vec<Vec<u32>> = vec![vec![]];
        for c in &cands {
            per_vertex.push(vec![*c]);
        }
        if cap >= 2 {
            for (i, a) in cands.iter().enumerate() {
                for b in &cands[i + 1..] {
                    per_vertex.push(vec![*a, *b]);
                }
            }
        }
        let mut next = Vec::new();
        for base in &choices {
            for extra in &per_vertex {
                let mut pins = base.clone();
                pins.extend(extra.iter().map(|&c| Pin::new(v, c)));
                next.push(pins);
            }
        }
        choices = next;
    }
    // pins the construction is not obliged to honor
    choices.retain(|pins| {
        shape != Shape::P5 || pins.iter().all(|p| p.vertex != 4 || lists[3].difference(lists[2]) != ColorSet::singleton(p.color))
    });
    choices
}

/// `n` random instances that satisfy the hypothesis, with random admissible
/// pins. Lists are drawn from small universes so they overlap heavily, and
/// are sometimes longer than required.
pub fn random(shape: Shape, n: u64, seed: u64) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SweepReport::default();
    let sizes = shape.list_sizes();
    let longest = *sizes.iter().max().unwrap();
    let mut accepted = 0;
    while accepted < n {
        let universe = rng.gen_range(longest + 1..=longest + 8) as u32;
        let colors: Vec<u32> = (1..=universe).collect();
        let lists: Vec<ColorSet> = sizes
            .iter()
            .map(|&s| {
                let extra = if rng.gen_bool(0.2) { rng.gen_range(1..=2) } else { 0 };
                colors.choose_multiple(&mut rng, (s + extra).min(colors.len())).copied().collect()
            })
            .collect();
        if !hypothesis_holds(shape, &lists) {
            continue;
        }
        let pins = random_pins(shape, &lists, &mut rng);
        accepted += 1;
        let outcome = check_instance(shape, &lists, &pins);
        report.record(shape, &lists, &pins, outcome);
    }
    report
}

fn random_pins(shape: Shape, lists: &[ColorSet], rng: &mut ChaCha8Rng) -> Vec<Pin> {
    let mut pins = Vec::new();
    for (v, cap) in shape.pin_slots() {
        let count = rng.gen_range(0..=cap);
        let mut avail: Vec<u32> = lists[v].iter().collect();
        if shape == Shape::P5 && v == 4 {
            avail.retain(|&c| lists[3].difference(lists[2]) != ColorSet::singleton(c));
        }
        for &c in avail.choose_multiple(rng, count) {
            pins.push(Pin::new(v, c));
        }
    }
    pins
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bad_refusal_is_a_violation() {
        let lists = [ColorSet::range(1, 5), ColorSet::range(1, 8), ColorSet::range(1, 5)];
        let err = GadgetError::Hypothesis("made up".into());
        assert!(justify(Shape::P3, &lists, &[], &err).is_err());
        assert!(matches!(check_instance(Shape::P3, &lists, &[]), Outcome::Colored(_)));
    }

    #[test]
    fn genuine_refusal_is_accepted() {
        let same = [ColorSet::range(1, 5), ColorSet::range(1, 8), ColorSet::range(1, 5), ColorSet::range(1, 5)];
        assert!(matches!(check_instance(Shape::P4, &same, &[]), Outcome::Rejected(GadgetError::Hypothesis(_))));
    }

    #[test]
    fn small_random_sweeps() {
        for shape in Shape::all() {
            let report = random(shape, 30, 7);
            assert_eq!(report.instances, 30);
            assert!(report.passed(), "{:?}", report.first_counterexample);
        }
    }

    #[test]
    fn exhaustive_p3() {
        let report = exhaustive(Shape::P3);
        assert!(report.passed(), "{:?}", report.first_counterexample);
        assert!(report.colored > 0);
    }
}
