//! Brute-force isomorphism testing and naming of small groups.

use crate::groups::GroupTable;

fn order_profile(t: &GroupTable) -> Vec<usize> {
    let mut v: Vec<usize> = (0..t.order() as u32).map(|g| t.element_order(g)).collect();
    v.sort_unstable();
    v
}

/// A small generating set, chosen greedily in index order.
pub fn generators(t: &GroupTable) -> Vec<u32> {
    let mut gens = Vec::new();
    let mut span = t.closure(&gens);
    for g in 0..t.order() as u32 {
        if span.binary_search(&g).is_err() {
            gens.push(g);
            span = t.closure(&gens);
        }
    }
    gens
}

/// Extend generator images to a homomorphism by breadth-first search over
/// the Cayley graph; `None` if the assignment is not consistent.
fn extend(a: &GroupTable, b: &GroupTable, gens: &[u32], imgs: &[u32]) -> Option<Vec<u32>> {
    let mut map = vec![u32::MAX; a.order()];
    map[a.identity() as usize] = b.identity();
    let mut queue = vec![a.identity()];
    while let Some(x) = queue.pop() {
        for (&g, &h) in gens.iter().zip(imgs) {
            let y = a.mul(x, g) as usize;
            let v = b.mul(map[x as usize], h);
            if map[y] == u32::MAX {
                map[y] = v;
                queue.push(y as u32);
            } else if map[y] != v {
                return None;
            }
        }
    }
    Some(map)
}

fn is_hom(a: &GroupTable, b: &GroupTable, map: &[u32]) -> bool {
    let n = a.order() as u32;
    (0..n).all(|x| (0..n).all(|y| map[a.mul(x, y) as usize] == b.mul(map[x as usize], map[y as usize])))
}

fn is_bijective(map: &[u32]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter().all(|&v| (v as usize) < seen.len() && !std::mem::replace(&mut seen[v as usize], true))
}

/// An isomorphism `a → b` as an image list, if one exists.
pub fn find_isomorphism(a: &GroupTable, b: &GroupTable) -> Option<Vec<u32>> {
    if a.order() != b.order() || order_profile(a) != order_profile(b) {
        return None;
    }
    let gens = generators(a);
    let cands: Vec<Vec<u32>> = gens
        .iter()
        .map(|&g| {
            let k = a.element_order(g);
            (0..b.order() as u32).filter(|&h| b.element_order(h) == k).collect()
        })
        .collect();
    let mut imgs = vec![0; gens.len()];
    search(a, b, &gens, &cands, &mut imgs, 0)
}

fn search(
    a: &GroupTable,
    b: &GroupTable,
    gens: &[u32],
    cands: &[Vec<u32>],
    imgs: &mut Vec<u32>,
    i: usize,
) -> Option<Vec<u32>> {
    if i == gens.len() {
        let map = extend(a, b, gens, imgs)?;
        return (is_bijective(&map) && is_hom(a, b, &map)).then_some(map);
    }
    for &h in &cands[i] {
        imgs[i] = h;
        if let Some(m) = search(a, b, gens, cands, imgs, i + 1) {
            return Some(m);
        }
    }
    None
}

pub fn are_isomorphic(a: &GroupTable, b: &GroupTable) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Divisibility chains `d₁ | d₂ | ⋯` with product `n`, all `dᵢ > 1`.
fn invariant_chains(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            out.push(acc.clone());
            return;
        }
        for d in (min.max(2)..=rest).filter(|d| rest.is_multiple_of(*d)) {
            if acc.last().is_none_or(|&l| d % l == 0) {
                acc.push(d);
                go(rest / d, d, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, 2, &mut Vec::new(), &mut out);
    out
}

fn abelian_table(chain: &[usize]) -> GroupTable {
    chain
        .iter()
        .map(|&d| GroupTable::cyclic(d))
        .reduce(|a, b| GroupTable::direct_product(&a, &b))
        .unwrap_or_else(|| GroupTable::cyclic(1))
}

/// Name of a small group: `C4`, `C2xC2`, `S3`, `D4`, `Q8`, `D5`, …, or
/// `nonabelian(n)` when no listed family matches.
pub fn class_name(t: &GroupTable) -> String {
    let n = t.order();
    if t.is_abelian() {
        for chain in invariant_chains(n) {
            if are_isomorphic(t, &abelian_table(&chain)) {
                let parts: Vec<String> = chain.iter().map(|d| format!("C{d}")).collect();
                return parts.join("x");
            }
        }
        return if n == 1 { "C1".into() } else { format!("abelian({n})") };
    }
    if n == 6 && are_isomorphic(t, &GroupTable::symmetric3()) {
        return "S3".into();
    }
    if n == 8 && are_isomorphic(t, &GroupTable::quaternion()) {
        return "Q8".into();
    }
    if n.is_multiple_of(2) && n >= 8 && are_isomorphic(t, &GroupTable::dihedral(n / 2)) {
        return format!("D{}", n / 2);
    }
    format!("nonabelian({n})")
}
