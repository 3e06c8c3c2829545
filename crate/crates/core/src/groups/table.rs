use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Finite group given by its multiplication table.
///
/// Elements are the indices `0..order`. The table is validated on
/// construction: closed, associative, with a two-sided identity and inverses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupTable {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    identity: u32,
}

impl GroupTable {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {i} has {} entries", row.len())));
            }
            for &v in row {
                if v as usize >= n {
                    return Err(Error::InvalidTable(format!("entry {v} out of range")));
                }
                table.push(v);
            }
        }
        Self::from_flat(n, table)
    }

    pub(crate) fn from_flat(n: usize, table: Vec<u32>) -> Result<Self> {
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| Error::InvalidTable("no two-sided identity".into()))?;
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| Error::InvalidTable(format!("element {a} has no inverse")))?;
            inverse[a] = b as u32;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::InvalidTable(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(GroupTable {
            order: n,
            table,
            inverse,
            identity: identity as u32,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n * n).map(|k| ((k / n + k % n) % n) as u32).collect();
        Self::from_flat(n, table).expect("cyclic table is a group")
    }

    /// Symmetric group on three letters, elements in lexicographic order of
    /// their images of `(0, 1, 2)`.
    pub fn symmetric3() -> Self {
        Self::from_permutations(3)
    }

    /// Full symmetric group on `k` points with composition `(στ)(i) = τ(σ(i))`.
    pub fn from_permutations(k: usize) -> Self {
        use itertools::Itertools;
        let perms: Vec<Vec<usize>> = (0..k).permutations(k).collect();
        let n = perms.len();
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap() as u32;
        let mut table = Vec::with_capacity(n * n);
        for s in &perms {
            for t in &perms {
                let st: Vec<usize> = (0..k).map(|i| t[s[i]]).collect();
                table.push(index(&st));
            }
        }
        Self::from_flat(n, table).expect("permutation table is a group")
    }

    /// Dihedral group of order `2m`: rotations `r^i` are `0..m`, reflections
    /// `s r^i` are `m..2m`.
    pub fn dihedral(m: usize) -> Self {
        let n = 2 * m;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (sa, ia) = (a / m, a % m);
                let (sb, ib) = (b / m, b % m);
                // s^sa r^ia s^sb r^ib, with r s = s r^-1
                let i = if sb == 1 { (m - ia + ib) % m } else { (ia + ib) % m };
                let s = (sa + sb) % 2;
                table.push((s * m + i) as u32);
            }
        }
        Self::from_flat(n, table).expect("dihedral table is a group")
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`, index `2q + sign`.
    pub fn quaternion() -> Self {
        // unit products in (sign, unit) form; units 1, i, j, k
        const MUL: [[(u32, u32); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let mut table = Vec::with_capacity(64);
        for a in 0..8u32 {
            for b in 0..8u32 {
                let (ua, sa) = (a / 2, a % 2);
                let (ub, sb) = (b / 2, b % 2);
                let (s, u) = MUL[ua as usize][ub as usize];
                table.push(2 * u + (s + sa + sb) % 2);
            }
        }
        Self::from_flat(8, table).expect("quaternion table is a group")
    }

    pub fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
        let (n, m) = (a.order, b.order);
        let nm = n * m;
        let mut table = Vec::with_capacity(nm * nm);
        for x in 0..nm {
            for y in 0..nm {
                let (x1, x2) = (x / m, x % m);
                let (y1, y2) = (y / m, y % m);
                let p1 = a.mul(x1 as u32, y1 as u32);
                let p2 = b.mul(x2 as u32, y2 as u32);
                table.push(p1 * m as u32 + p2);
            }
        }
        Self::from_flat(nm, table).expect("direct product is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn pow(&self, a: u32, k: i64) -> u32 {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = self.identity;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, a: u32) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order as u32).all(|a| (0..self.order as u32).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([self.identity]);
        seen[self.identity as usize] = true;
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order as u32).filter(|&x| seen[x as usize]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_groups() {
        assert!(GroupTable::new(vec![vec![0, 1], vec![0, 1]]).is_err());
        assert!(GroupTable::new(vec![vec![0, 1, 2], vec![1, 2, 0]]).is_err());
        // Latin square with identity that is not associative
        let bad = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(GroupTable::new(bad), Err(Error::InvalidTable(_))));
    }

    #[test]
    fn standard_tables() {
        let c4 = GroupTable::cyclic(4);
        assert_eq!(c4.mul(3, 2), 1);
        assert!(c4.is_abelian());
        let s3 = GroupTable::symmetric3();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let d4 = GroupTable::dihedral(4);
        assert_eq!((0..8).filter(|&g| d4.element_order(g) == 2).count(), 5);
        let q8 = GroupTable::quaternion();
        assert_eq!((0..8).filter(|&g| q8.element_order(g) == 2).count(), 1);
        let v4 = GroupTable::direct_product(&GroupTable::cyclic(2), &GroupTable::cyclic(2));
        assert!((0..4).all(|g| v4.element_order(g) <= 2));
        assert_eq!(s3.closure(&[1]).len(), 2);
    }
}
