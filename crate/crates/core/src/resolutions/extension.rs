//! Extensions of a finite group `K` by a cyclic group `C_p`.

use super::cocycle::{automorphisms, cyclic_cocycle_check, Perm};
use super::iso::{are_isomorphic, class_name};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::groups::GroupTable;

/// The group `E` generated by `K` and `t` with `tᵖ = k` and `t` acting on
/// `K` through `a`. Element `(i, m)` stands for `tⁱm` and has index
/// `i·|K| + m`.
#[derive(Clone, Debug)]
pub struct ExtensionGroup {
    p: u64,
    k: GroupTable,
    kk: u32,
    a: Perm,
    table: GroupTable,
}

fn aut_pow(a: &[u32], j: u64, m: u32) -> u32 {
    let mut x = m;
    for _ in 0..j {
        x = a[x as usize];
    }
    x
}

/// `(i,m)(j,n) = ((i+j) mod p, k^{⌊(i+j)/p⌋}·aʲ(m)·n)`.
pub fn extension_from_cocycle(p: u64, k: &GroupTable, kk: u32, a: &[u32]) -> Result<ExtensionGroup> {
    if !cyclic_cocycle_check(p, k, kk, a) {
        return Err(Error::InvalidCocycle(format!(
            "(k = {kk}, a = {a:?}) fails the cocycle conditions for p = {p}"
        )));
    }
    let n = k.order();
    let size = p as usize * n;
    let mut rows = vec![vec![0u32; size]; size];
    for (x, row) in rows.iter_mut().enumerate() {
        let (i, m) = ((x / n) as u64, (x % n) as u32);
        for (y, cell) in row.iter_mut().enumerate() {
            let (j, nn) = ((y / n) as u64, (y % n) as u32);
            let s = (i + j) % p;
            let carry = if i + j >= p { kk } else { k.identity() };
            let v = k.mul(k.mul(carry, aut_pow(a, j, m)), nn);
            *cell = (s as usize * n) as u32 + v;
        }
    }
    let table = GroupTable::new(rows)?;
    let e = ExtensionGroup {
        p,
        k: k.clone(),
        kk,
        a: a.to_vec(),
        table,
    };
    e.check_structure()?;
    Ok(e)
}

impl ExtensionGroup {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn kernel(&self) -> &GroupTable {
        &self.k
    }

    pub fn cocycle(&self) -> (u32, &[u32]) {
        (self.kk, &self.a)
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn elem(&self, i: u64, m: u32) -> u32 {
        (i as usize * self.k.order()) as u32 + m
    }

    /// `K` sits as `{(0, m)}`: a normal subgroup with the same multiplication,
    /// and `(i, m) ↦ i` is a homomorphism onto `C_p`.
    pub fn check_structure(&self) -> Result<()> {
        let n = self.k.order();
        let t = &self.table;
        let bad = |what: &str| Err(Error::InvalidCocycle(format!("extension: {what}")));
        if t.order() != self.p as usize * n {
            return bad("wrong order");
        }
        for m in 0..n as u32 {
            for m2 in 0..n as u32 {
                if t.mul(m, m2) != self.k.mul(m, m2) {
                    return bad("K is not a subgroup");
                }
            }
        }
        for g in 0..t.order() as u32 {
            let gi = t.inv(g);
            for m in 0..n as u32 {
                if t.mul(t.mul(gi, m), g) as usize >= n {
                    return bad("K is not normal");
                }
            }
        }
        for x in 0..t.order() {
            for y in 0..t.order() {
                let q = t.mul(x as u32, y as u32) as usize / n;
                if q as u64 != ((x / n + y / n) as u64) % self.p {
                    return bad("quotient is not C_p");
                }
            }
        }
        Ok(())
    }
}

/// Whether two extensions of `K` by `C_p` are equivalent: an isomorphism
/// fixing `K` pointwise and inducing the identity on `C_p`.
pub fn equivalent(e1: &ExtensionGroup, e2: &ExtensionGroup) -> bool {
    if e1.p != e2.p || e1.k != e2.k {
        return false;
    }
    let n = e1.k.order() as u32;
    let (t1, t2) = (&e1.table, &e2.table);
    // the map is fixed by the image (1, c) of t = (1, e)
    (0..n).any(|c| {
        let tc = e2.elem(1, c);
        let mut map = vec![0u32; t1.order()];
        for i in 0..e1.p {
            let ti = t2.pow(tc, i as i64);
            for m in 0..n {
                map[e1.elem(i, m) as usize] = t2.mul(ti, m);
            }
        }
        (0..t1.order() as u32).all(|x| {
            (0..t1.order() as u32).all(|y| map[t1.mul(x, y) as usize] == t2.mul(map[x as usize], map[y as usize]))
        })
    })
}

/// One valid `(k, a)` with its extension.
#[derive(Clone, Debug)]
pub struct ExtensionData {
    pub k: u32,
    pub a: Perm,
    pub group: ExtensionGroup,
}

/// An isomorphism class of extensions.
#[derive(Clone, Debug)]
pub struct ExtensionClass {
    pub name: String,
    pub members: Vec<ExtensionData>,
}

/// Every extension of `K` by `C_p` from cocycle data, grouped into
/// isomorphism classes in order of first appearance. Data run over
/// automorphisms `a` in [`automorphisms`] order, then `k` by index.
pub fn enumerate_extensions(p: u64, k: &GroupTable, exec: Exec) -> Result<Vec<ExtensionClass>> {
    if p < 2 {
        return Err(Error::InvalidCocycle(format!("p = {p} < 2")));
    }
    if p > 5 || k.order() > 8 {
        return Err(Error::SizeLimit(format!(
            "extensions need p ≤ 5 and |K| ≤ 8, got p = {p}, |K| = {}",
            k.order()
        )));
    }
    let auts = automorphisms(k)?;
    let data: Vec<(u32, &Perm)> = auts
        .iter()
        .flat_map(|a| (0..k.order() as u32).map(move |kk| (kk, a)))
        .collect();
    let built = exec.try_map(&data, |&(kk, a)| {
        if !cyclic_cocycle_check(p, k, kk, a) {
            return Ok(None);
        }
        extension_from_cocycle(p, k, kk, a).map(|group| {
            Some(ExtensionData {
                k: kk,
                a: a.clone(),
                group,
            })
        })
    })?;
    let mut classes: Vec<ExtensionClass> = Vec::new();
    for d in built.into_iter().flatten() {
        match classes
            .iter_mut()
            .find(|c| are_isomorphic(c.members[0].group.table(), d.group.table()))
        {
            Some(c) => c.members.push(d),
            None => classes.push(ExtensionClass {
                name: class_name(d.group.table()),
                members: vec![d],
            }),
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(p: u64, k: &GroupTable) -> Vec<String> {
        let mut v: Vec<String> = enumerate_extensions(p, k, Exec::Sequential)
            .unwrap()
            .into_iter()
            .map(|c| c.name)
            .collect();
        v.sort();
        v
    }

    #[test]
    fn small_classifications() {
        assert_eq!(names(2, &GroupTable::cyclic(2)), ["C2xC2", "C4"]);
        assert_eq!(names(2, &GroupTable::cyclic(3)), ["C6", "S3"]);
        assert_eq!(names(3, &GroupTable::cyclic(3)), ["C3xC3", "C9"]);
    }

    #[test]
    fn split_and_nonsplit() {
        let c2 = GroupTable::cyclic(2);
        let v4 = extension_from_cocycle(2, &c2, 0, &[0, 1]).unwrap();
        assert!((0..4).all(|g| v4.table().element_order(g) <= 2));
        let c4 = extension_from_cocycle(2, &c2, 1, &[0, 1]).unwrap();
        assert_eq!(c4.table().element_order(c4.elem(1, 0)), 4);
        let c3 = GroupTable::cyclic(3);
        let c9 = extension_from_cocycle(3, &c3, 1, &[0, 1, 2]).unwrap();
        assert_eq!(c9.table().element_order(c9.elem(1, 0)), 9);
        assert!(extension_from_cocycle(2, &c3, 1, &[0, 2, 1]).is_err());
        assert!(!equivalent(&v4, &c4));
        let c4b = extension_from_cocycle(2, &c2, 1, &[0, 1]).unwrap();
        assert!(equivalent(&c4, &c4b));
    }

    #[test]
    fn nonabelian_kernel() {
        let s3 = GroupTable::symmetric3();
        for class in enumerate_extensions(2, &s3, Exec::Parallel).unwrap() {
            for d in &class.members {
                assert_eq!(d.group.order(), 12);
            }
        }
        assert!(matches!(
            enumerate_extensions(6, &GroupTable::cyclic(2), Exec::Sequential),
            Err(Error::SizeLimit(_))
        ));
    }
}
