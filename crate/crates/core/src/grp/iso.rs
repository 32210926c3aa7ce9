//! Backtracking isomorphism test, used as an oracle in tests and the harness.

use super::classes::conjugacy_classes;
use super::table::GroupTable;
use crate::error::{Error, Result};

/// Largest order accepted by [`brute_force_isomorphic`].
pub const ORACLE_LIMIT: usize = 500;

/// Tries every assignment of generator images (pruned by element order) and
/// checks that it extends to a bijective homomorphism.
pub fn brute_force_isomorphic(g: &GroupTable, h: &GroupTable) -> Result<bool> {
    if g.order() != h.order() {
        return Err(Error::OrderMismatch(g.order(), h.order()));
    }
    if g.order() > ORACLE_LIMIT {
        return Err(Error::OracleBoundExceeded {
            order: g.order(),
            limit: ORACLE_LIMIT,
        });
    }
    if g.is_abelian() != h.is_abelian() {
        return Ok(false);
    }
    let mut og = g.element_orders().to_vec();
    let mut oh = h.element_orders().to_vec();
    og.sort_unstable();
    oh.sort_unstable();
    if og != oh {
        return Ok(false);
    }
    if conjugacy_classes(g).sizes() != conjugacy_classes(h).sizes() {
        return Ok(false);
    }
    let gens = g.small_generating_set();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            (0..h.order())
                .filter(|&y| h.element_order(y) == g.element_order(x))
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    Ok(search(g, h, &gens, &candidates, &mut images))
}

fn search(
    g: &GroupTable,
    h: &GroupTable,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> bool {
    let k = images.len();
    if k == gens.len() {
        return extend(g, h, gens, images).is_some_and(|m| m.len() == g.order());
    }
    for &c in &candidates[k] {
        images.push(c);
        if extend(g, h, &gens[..=k], images).is_some() && search(g, h, gens, candidates, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Extends the generator assignment to `<gens>`; `None` on a conflict or a
/// collision. Returns the image list of the generated subgroup.
fn extend(g: &GroupTable, h: &GroupTable, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; h.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let img = h.mul(map[x], t);
            if map[y] == usize::MAX {
                if used[img] {
                    return None;
                }
                used[img] = true;
                map[y] = img;
                queue.push(y);
            } else if map[y] != img {
                return None;
            }
        }
    }
    Some(queue)
}
