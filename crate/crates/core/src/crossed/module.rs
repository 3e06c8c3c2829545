use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::groups::{Group, GroupElem, GroupRingElem};
use crate::words::Gen;

/// Element of a free right `ℤ[G]`-module on named generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModuleElem {
    terms: BTreeMap<Gen, GroupRingElem>,
}

impl ModuleElem {
    pub fn zero() -> Self {
        ModuleElem::default()
    }

    /// The basis element `x · 1`.
    pub fn gen(x: &Gen, group: &Group) -> Self {
        Self::term(x, GroupRingElem::one(group))
    }

    pub fn term(x: &Gen, r: GroupRingElem) -> Self {
        let mut m = ModuleElem::zero();
        m.add_term(x, &r);
        m
    }

    pub fn add_term(&mut self, x: &Gen, r: &GroupRingElem) {
        if r.is_zero() {
            return;
        }
        let slot = self.terms.entry(x.clone()).or_default();
        slot.add_assign(r);
        if slot.is_zero() {
            self.terms.remove(x);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Gen, &GroupRingElem)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, x: &Gen) -> GroupRingElem {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &ModuleElem) -> ModuleElem {
        let mut out = self.clone();
        for (x, r) in &other.terms {
            out.add_term(x, r);
        }
        out
    }

    pub fn neg(&self) -> ModuleElem {
        ModuleElem {
            terms: self.terms.iter().map(|(x, r)| (x.clone(), r.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &ModuleElem) -> ModuleElem {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> ModuleElem {
        let mut out = ModuleElem::zero();
        for (x, r) in &self.terms {
            out.add_term(x, &r.scale(k));
        }
        out
    }

    /// Right action by a group element.
    pub fn act(&self, g: &GroupElem, group: &Group) -> Result<ModuleElem> {
        let mut out = ModuleElem::zero();
        for (x, r) in &self.terms {
            out.add_term(x, &r.act(g, group)?);
        }
        Ok(out)
    }

    /// Right multiplication by a group ring element.
    pub fn mul_ring(&self, s: &GroupRingElem, group: &Group) -> Result<ModuleElem> {
        let mut out = ModuleElem::zero();
        for (x, r) in &self.terms {
            out.add_term(x, &r.mul(s, group)?);
        }
        Ok(out)
    }

    pub fn map(
        &self,
        rename: &impl Fn(&Gen) -> Gen,
        elem: &impl Fn(&GroupElem) -> Result<GroupElem>,
    ) -> Result<ModuleElem> {
        let mut out = ModuleElem::zero();
        for (x, r) in &self.terms {
            out.add_term(&rename(x), &r.map_elems(elem)?);
        }
        Ok(out)
    }

    /// Text form `x * (c1 g1 + c2 g2) + y * (...)`; `0` for zero.
    pub fn format(&self, group: &Group) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(x, r)| format!("{x} * ({})", r.format(group)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn parse(s: &str, group: &Group) -> Result<ModuleElem> {
        let s = s.trim();
        let mut out = ModuleElem::zero();
        if s == "0" || s.is_empty() {
            return Ok(out);
        }
        for term in split_top_level(s)? {
            let (x, rest) = term
                .split_once(" * (")
                .ok_or_else(|| Error::Parse(format!("bad module term `{term}`")))?;
            let body = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unclosed module term `{term}`")))?;
            out.add_term(&Gen::new(x.trim()), &GroupRingElem::parse(body, group)?);
        }
        Ok(out)
    }
}

/// Split on ` + ` outside parentheses.
fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let bytes = s.as_bytes();
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b' ' if depth == 0 && s[i..].starts_with(" + ") => {
                out.push(&s[start..i]);
                start = i + 3;
                i += 3;
                continue;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
        }
        i += 1;
    }
    out.push(&s[start..]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let c3 = Group::cyclic(3);
        let x = Gen::new("x(tensor)y");
        let y = Gen::new("[a,b,c]");
        let mut m = ModuleElem::zero();
        m.add_term(&x, &GroupRingElem::parse("1 1 + -1 t", &c3).unwrap());
        m.add_term(&y, &GroupRingElem::parse("2 t^2", &c3).unwrap());
        let s = m.format(&c3);
        assert_eq!(ModuleElem::parse(&s, &c3).unwrap(), m);
        assert_eq!(ModuleElem::parse("0", &c3).unwrap(), ModuleElem::zero());
    }

    #[test]
    fn cancellation_removes_terms() {
        let c2 = Group::cyclic(2);
        let x = Gen::new("x");
        let m = ModuleElem::gen(&x, &c2);
        assert!(m.sub(&m).is_zero());
        let t = GroupElem::Cyclic(1);
        assert_eq!(m.act(&t, &c2).unwrap().act(&t, &c2).unwrap(), m);
    }
}
