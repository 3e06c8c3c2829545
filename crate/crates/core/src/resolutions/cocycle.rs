//! Nonabelian 2-cocycles as morphisms into `K → Aut(K)`.

use std::collections::BTreeMap;

use itertools::Itertools;

use super::cyclic::cyclic_resolution;
use super::standard::{bracket, standard_resolution};
use crate::crossed::{CrossedModuleTarget, Report, TargetMap};
use crate::error::{Error, Result};
use crate::groups::{Group, GroupElem, GroupTable};
use crate::words::Gen;

/// An automorphism as its list of images.
pub type Perm = Vec<u32>;

/// All automorphisms of `K`, identity first, then in lexicographic order of
/// image lists.
pub fn automorphisms(k: &GroupTable) -> Result<Vec<Perm>> {
    let n = k.order();
    if n > 8 {
        return Err(Error::SizeLimit(format!("Aut(K) for |K| = {n} > 8")));
    }
    let e = k.identity();
    let rest: Vec<u32> = (0..n as u32).filter(|&x| x != e).collect();
    let mut out = Vec::new();
    for p in rest.iter().copied().permutations(rest.len()) {
        let mut map = vec![e; n];
        for (&x, y) in rest.iter().zip(p) {
            map[x as usize] = y;
        }
        if is_automorphism(k, &map) {
            out.push(map);
        }
    }
    out.sort();
    let id: Perm = (0..n as u32).collect();
    out.retain(|a| *a != id);
    out.insert(0, id);
    Ok(out)
}

pub fn is_automorphism(k: &GroupTable, a: &[u32]) -> bool {
    let n = k.order();
    if a.len() != n || a.iter().any(|&v| v as usize >= n) {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in a {
        if std::mem::replace(&mut seen[v as usize], true) {
            return false;
        }
    }
    (0..n as u32).all(|x| (0..n as u32).all(|y| a[k.mul(x, y) as usize] == k.mul(a[x as usize], a[y as usize])))
}

/// The crossed module `K → Aut(K)`, `k ↦ (m ↦ k⁻¹mk)`, with `Aut(K)` acting
/// on the right by evaluation and composed left to right.
pub struct AutTarget<'a> {
    pub k: &'a GroupTable,
}

impl CrossedModuleTarget for AutTarget<'_> {
    type Top = Perm;
    type Bottom = u32;

    fn top_identity(&self) -> Perm {
        (0..self.k.order() as u32).collect()
    }

    fn top_mul(&self, a: &Perm, b: &Perm) -> Perm {
        a.iter().map(|&x| b[x as usize]).collect()
    }

    fn top_inv(&self, a: &Perm) -> Perm {
        let mut out = vec![0; a.len()];
        for (i, &x) in a.iter().enumerate() {
            out[x as usize] = i as u32;
        }
        out
    }

    fn bottom_identity(&self) -> u32 {
        self.k.identity()
    }

    fn bottom_mul(&self, a: &u32, b: &u32) -> u32 {
        self.k.mul(*a, *b)
    }

    fn bottom_inv(&self, a: &u32) -> u32 {
        self.k.inv(*a)
    }

    fn act(&self, m: &u32, p: &Perm) -> u32 {
        p[*m as usize]
    }

    fn boundary(&self, m: &u32) -> Perm {
        let mi = self.k.inv(*m);
        (0..self.k.order() as u32)
            .map(|x| self.k.mul(self.k.mul(mi, x), *m))
            .collect()
    }
}

/// Check `(k¹, k²)` as a morphism from the standard resolution of `G` into
/// `K → Aut(K)`: `∂k²(a,b) = k¹(a)k¹(b)k¹(ab)⁻¹` on every pair and `k²δ₃ = 1`
/// on every triple. Report lines are named `cocycle`; witnesses are the
/// failing generator names.
pub fn check_cocycle(
    g: &Group,
    k: &GroupTable,
    k1: &BTreeMap<GroupElem, Perm>,
    k2: &BTreeMap<(GroupElem, GroupElem), u32>,
) -> Result<Report> {
    let elems = g.elements()?;
    let mut f1: BTreeMap<Gen, Perm> = BTreeMap::new();
    for a in &elems {
        let img = k1
            .get(a)
            .ok_or_else(|| Error::InvalidCocycle(format!("k1 missing {}", g.format_elem(a))))?;
        if !is_automorphism(k, img) {
            return Err(Error::InvalidCocycle(format!(
                "k1({}) is not an automorphism",
                g.format_elem(a)
            )));
        }
        f1.insert(bracket(g, std::slice::from_ref(a)), img.clone());
    }
    let mut f2 = BTreeMap::new();
    for (a, b) in itertools::iproduct!(&elems, &elems) {
        let v = *k2.get(&(a.clone(), b.clone())).ok_or_else(|| {
            Error::InvalidCocycle(format!("k2 missing ({}, {})", g.format_elem(a), g.format_elem(b)))
        })?;
        if v as usize >= k.order() {
            return Err(Error::InvalidCocycle(format!("k2 value {v} not in K")));
        }
        f2.insert(bracket(g, &[a.clone(), b.clone()]), v);
    }
    let cx = standard_resolution(g, 3)?;
    let target = AutTarget { k };
    let map = TargetMap { target: &target, f1, f2 };
    let mut report = Report::new();
    for mut line in map.check(&cx).lines().iter().cloned() {
        line.check = "cocycle".into();
        report.push(line);
    }
    Ok(report)
}

/// The cocycle conditions of an extension by `C_p` read off the periodic
/// resolution: `x₁ ↦ a`, `x₂ ↦ k` is a morphism iff conjugation by `k` is
/// `aᵖ` and `a(k) = k`.
pub fn cyclic_cocycle_check(p: u64, k: &GroupTable, kk: u32, a: &[u32]) -> bool {
    if p < 2 || kk as usize >= k.order() || !is_automorphism(k, a) {
        return false;
    }
    let Ok(cx) = cyclic_resolution(p, 3) else {
        return false;
    };
    let target = AutTarget { k };
    let map = TargetMap {
        target: &target,
        f1: BTreeMap::from([(Gen::new("x1"), a.to_vec())]),
        f2: BTreeMap::from([(Gen::new("x2"), kk)]),
    };
    map.check(&cx).passed()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2_data(k2tt: u32) -> (Group, BTreeMap<GroupElem, Perm>, BTreeMap<(GroupElem, GroupElem), u32>) {
        let g = Group::cyclic(2);
        let e = GroupElem::Cyclic(0);
        let t = GroupElem::Cyclic(1);
        let k1 = BTreeMap::from([(e.clone(), vec![0, 1]), (t.clone(), vec![0, 1])]);
        let mut k2 = BTreeMap::new();
        for a in [&e, &t] {
            for b in [&e, &t] {
                k2.insert((a.clone(), b.clone()), 0);
            }
        }
        k2.insert((t.clone(), t), k2tt);
        (g, k1, k2)
    }

    #[test]
    fn aut_counts() {
        assert_eq!(automorphisms(&GroupTable::cyclic(2)).unwrap().len(), 1);
        assert_eq!(automorphisms(&GroupTable::cyclic(3)).unwrap().len(), 2);
        assert_eq!(automorphisms(&GroupTable::symmetric3()).unwrap().len(), 6);
        assert_eq!(automorphisms(&GroupTable::quaternion()).unwrap().len(), 24);
    }

    #[test]
    fn c4_cocycle() {
        let c2 = GroupTable::cyclic(2);
        for v in [0, 1] {
            let (g, k1, k2) = c2_data(v);
            assert!(check_cocycle(&g, &c2, &k1, &k2).unwrap().passed());
        }
        let (g, k1, mut k2) = c2_data(1);
        k2.insert((GroupElem::Cyclic(1), GroupElem::Cyclic(0)), 1);
        let r = check_cocycle(&g, &c2, &k1, &k2).unwrap();
        assert!(!r.passed());
        assert!(r.find("cocycle", 3).is_some_and(|l| !l.passed()));
    }

    #[test]
    fn cyclic_conditions() {
        let c2 = GroupTable::cyclic(2);
        let c3 = GroupTable::cyclic(3);
        assert!(cyclic_cocycle_check(2, &c2, 0, &[0, 1]));
        assert!(cyclic_cocycle_check(2, &c2, 1, &[0, 1]));
        assert!(!cyclic_cocycle_check(2, &c3, 1, &[0, 2, 1]));
        assert!(cyclic_cocycle_check(2, &c3, 0, &[0, 2, 1]));
    }
}
