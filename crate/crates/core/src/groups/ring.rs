use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Group, GroupElem};
use crate::error::Result;

/// Element of the integral group ring `ℤ[G]`: finitely many non-zero
/// coefficients keyed by group elements in normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupRingElem {
    terms: BTreeMap<GroupElem, BigInt>,
}

impl GroupRingElem {
    pub fn zero() -> Self {
        GroupRingElem::default()
    }

    pub fn one(group: &Group) -> Self {
        Self::from_elem(group.identity())
    }

    pub fn from_elem(g: GroupElem) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(g, BigInt::one());
        GroupRingElem { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (GroupElem, BigInt)>>(terms: I) -> Self {
        let mut r = GroupRingElem::zero();
        for (g, c) in terms {
            r.add_term(g, c);
        }
        r
    }

    pub fn add_term(&mut self, g: GroupElem, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(g);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElem, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, g: &GroupElem) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &GroupRingElem) -> GroupRingElem {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &GroupRingElem) {
        for (g, c) in &other.terms {
            self.add_term(g.clone(), c.clone());
        }
    }

    pub fn neg(&self) -> GroupRingElem {
        GroupRingElem {
            terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &GroupRingElem) -> GroupRingElem {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> GroupRingElem {
        if k.is_zero() {
            return GroupRingElem::zero();
        }
        GroupRingElem {
            terms: self.terms.iter().map(|(g, c)| (g.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &GroupRingElem, group: &Group) -> Result<GroupRingElem> {
        let mut out = GroupRingElem::zero();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(group.mul(g, h)?, a * b);
            }
        }
        Ok(out)
    }

    /// Right action `m · g`.
    pub fn act(&self, g: &GroupElem, group: &Group) -> Result<GroupRingElem> {
        if group.is_identity(g) {
            return Ok(self.clone());
        }
        let mut out = GroupRingElem::zero();
        for (h, c) in &self.terms {
            out.add_term(group.mul(h, g)?, c.clone());
        }
        Ok(out)
    }

    /// Sum of the coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Apply a map of group elements termwise, extended linearly.
    pub fn map_elems(&self, f: &impl Fn(&GroupElem) -> Result<GroupElem>) -> Result<GroupRingElem> {
        let mut out = GroupRingElem::zero();
        for (g, c) in &self.terms {
            out.add_term(f(g)?, c.clone());
        }
        Ok(out)
    }

    /// Text form `c1 g1 + c2 g2 + ...`; `0` for zero.
    pub fn format(&self, group: &Group) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(g, c)| format!("{c} {}", group.format_elem(g)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn parse(s: &str, group: &Group) -> Result<GroupRingElem> {
        let s = s.trim();
        let mut out = GroupRingElem::zero();
        if s == "0" || s.is_empty() {
            return Ok(out);
        }
        for item in s.split(" + ") {
            let item = item.trim();
            let (c, g) = item
                .split_once(char::is_whitespace)
                .ok_or_else(|| crate::Error::Parse(format!("bad ring term `{item}`")))?;
            let c: BigInt = c
                .parse()
                .map_err(|_| crate::Error::Parse(format!("bad coefficient `{c}`")))?;
            out.add_term(group.parse_elem(g)?, c);
        }
        Ok(out)
    }
}
