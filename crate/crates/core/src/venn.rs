//! List patterns up to color renaming.
//!
//! Whether a small graph is (L:f)-colorable depends only on how many colors lie
//! in each cell of the Venn diagram of its lists: the cell of a nonempty vertex
//! subset `S` holds the colors that belong to exactly the lists of `S`.
//! Enumerating cell-size vectors therefore covers every list assignment up to
//! renaming.

use crate::colorset::{ColorSet, MAX_COLOR};

/// Size of each Venn cell, indexed by the vertex-subset bitmask minus one.
pub type CellSizes = Vec<usize>;

/// Number of cells for `k` lists.
pub fn cell_count(k: usize) -> usize {
    (1usize << k) - 1
}

/// Turns cell sizes into concrete lists. Colors are handed out consecutively
/// from `1`, cell by cell in mask order.
pub fn materialize(k: usize, cells: &[usize]) -> Vec<ColorSet> {
    assert_eq!(cells.len(), cell_count(k));
    let total: usize = cells.iter().sum();
    assert!(total <= MAX_COLOR as usize, "pattern needs {total} colors");
    let mut lists = vec![ColorSet::EMPTY; k];
    let mut next = 1u32;
    for (idx, &size) in cells.iter().enumerate() {
        let mask = idx + 1;
        for _ in 0..size {
            for (v, list) in lists.iter_mut().enumerate() {
                if mask & (1 << v) != 0 {
                    list.insert(next);
                }
            }
            next += 1;
        }
    }
    lists
}

/// Cell sizes of concrete lists (inverse of [`materialize`] up to renaming).
pub fn cells_of(lists: &[ColorSet]) -> CellSizes {
    let k = lists.len();
    let mut cells = vec![0; cell_count(k)];
    let all = lists.iter().fold(ColorSet::EMPTY, |a, l| a.union(*l));
    for c in all.iter() {
        let mask: usize = lists.iter().enumerate().filter(|(_, l)| l.contains(c)).map(|(v, _)| 1 << v).sum();
        cells[mask - 1] += 1;
    }
    cells
}

/// Visits every cell vector whose per-vertex list sizes equal `sizes`.
pub fn for_each_fixed(sizes: &[usize], mut visit: impl FnMut(&[usize])) {
    let k = sizes.len();
    let mut cells = vec![0; cell_count(k)];
    let mut remaining = sizes.to_vec();
    fixed_rec(k, 0, &mut cells, &mut remaining, &mut visit);
}

fn fixed_rec(k: usize, idx: usize, cells: &mut Vec<usize>, remaining: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    let mask = idx + 1;
    if idx + 1 == cells.len() {
        // the full cell meets every list, so it must absorb all that is left
        let r = remaining[0];
        if remaining.iter().all(|&x| x == r) {
            cells[idx] = r;
            visit(cells);
            cells[idx] = 0;
        }
        return;
    }
    let members: Vec<usize> = (0..k).filter(|v| mask & (1 << v) != 0).collect();
    let cap = members.iter().map(|&v| remaining[v]).min().unwrap_or(0);
    for size in 0..=cap {
        for &v in &members {
            remaining[v] -= size;
        }
        cells[idx] = size;
        fixed_rec(k, idx + 1, cells, remaining, visit);
        for &v in &members {
            remaining[v] += size;
        }
    }
    cells[idx] = 0;
}

/// Visits every cell vector with list sizes at most `max_sizes[v]` and at most
/// `max_total` colors overall.
pub fn for_each_bounded(max_sizes: &[usize], max_total: usize, mut visit: impl FnMut(&[usize])) {
    let k = max_sizes.len();
    let mut cells = vec![0; cell_count(k)];
    let mut room = max_sizes.to_vec();
    bounded_rec(k, 0, max_total, &mut cells, &mut room, &mut visit);
}

fn bounded_rec(
    k: usize,
    idx: usize,
    total_left: usize,
    cells: &mut Vec<usize>,
    room: &mut [usize],
    visit: &mut impl FnMut(&[usize]),
) {
    if idx == cells.len() {
        visit(cells);
        return;
    }
    let mask = idx + 1;
    let members: Vec<usize> = (0..k).filter(|v| mask & (1 << v) != 0).collect();
    let cap = members.iter().map(|&v| room[v]).min().unwrap_or(0).min(total_left);
    for size in 0..=cap {
        for &v in &members {
            room[v] -= size;
        }
        cells[idx] = size;
        bounded_rec(k, idx + 1, total_left - size, cells, room, visit);
        for &v in &members {
            room[v] += size;
        }
    }
    cells[idx] = 0;
}

/// Colors of `list` that can stand for any pin choice on it when at most
/// `pins` pins are placed: the first `pins` colors of each cell it meets.
pub fn pin_candidates(lists: &[ColorSet], v: usize, pins: usize) -> ColorSet {
    let mut seen = vec![0usize; cell_count(lists.len())];
    let mut out = ColorSet::EMPTY;
    for c in lists[v].iter() {
        let mask: usize = lists.iter().enumerate().filter(|(_, l)| l.contains(c)).map(|(u, _)| 1 << u).sum();
        if seen[mask - 1] < pins {
            seen[mask - 1] += 1;
            out.insert(c);
        }
    }
    out
}
