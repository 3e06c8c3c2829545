use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::groups::{Group, GroupElem, GroupHom};
use crate::words::{Gen, Letter, Word};

/// Deterministic section of `φ: F(X₁) → G` on group elements.
///
/// Cyclic groups with a generator mapping to `t` (or `t⁻¹`) lift `t^k` to a
/// power of that generator. Other finite groups use a breadth-first
/// transversal, exploring generators in alphabet order, positive letters
/// before inverses. Graph products lift syllable by syllable.
#[derive(Clone, Debug)]
pub(crate) enum Lifter {
    Atom(Option<AtomLift>),
    Graph(Vec<Option<AtomLift>>),
}

#[derive(Clone, Debug)]
pub(crate) enum AtomLift {
    Power { gen: Gen, sign: i64 },
    Transversal(BTreeMap<GroupElem, Word>),
}

impl Lifter {
    pub(crate) fn build(phi: &GroupHom, order: &[Gen]) -> Lifter {
        let group = phi.group();
        match group {
            Group::GraphProduct(gp) => {
                let mut per_atom = Vec::with_capacity(gp.atoms().len());
                for (v, atom) in gp.atoms().iter().enumerate() {
                    let cands: Vec<(Gen, GroupElem)> = order
                        .iter()
                        .filter_map(|x| match phi.image(x).ok()? {
                            GroupElem::Graph(s) if s.len() == 1 && s[0].0 as usize == v => {
                                Some((x.clone(), s[0].1.clone()))
                            }
                            _ => None,
                        })
                        .collect();
                    per_atom.push(AtomLift::build(atom, &cands));
                }
                Lifter::Graph(per_atom)
            }
            _ => {
                let cands: Vec<(Gen, GroupElem)> = order
                    .iter()
                    .filter_map(|x| Some((x.clone(), phi.image(x).ok()?.clone())))
                    .collect();
                Lifter::Atom(AtomLift::build(group, &cands))
            }
        }
    }

    pub(crate) fn lift(&self, group: &Group, g: &GroupElem) -> Result<Word> {
        let missing = || Error::NoLift(group.format_elem(g));
        match (self, g) {
            (Lifter::Atom(a), _) => a.as_ref().ok_or_else(missing)?.lift(group, g),
            (Lifter::Graph(atoms), GroupElem::Graph(syl)) => {
                let Group::GraphProduct(gp) = group else {
                    return Err(Error::MixedGroups);
                };
                let mut out = Word::identity();
                for (v, e) in syl {
                    let a = atoms
                        .get(*v as usize)
                        .and_then(Option::as_ref)
                        .ok_or_else(missing)?;
                    out = out.mul(&a.lift(&gp.atoms()[*v as usize], e)?);
                }
                Ok(out)
            }
            _ => Err(Error::MixedGroups),
        }
    }
}

impl AtomLift {
    fn build(group: &Group, cands: &[(Gen, GroupElem)]) -> Option<AtomLift> {
        if let Group::Cyclic(c) = group {
            if c.modulus() != 1 {
                let t = GroupElem::Cyclic(1);
                let t_inv = group.inv(&t).ok()?;
                if let Some((x, _)) = cands.iter().find(|(_, e)| *e == t) {
                    return Some(AtomLift::Power { gen: x.clone(), sign: 1 });
                }
                if let Some((x, _)) = cands.iter().find(|(_, e)| *e == t_inv) {
                    return Some(AtomLift::Power { gen: x.clone(), sign: -1 });
                }
            }
        }
        if !group.is_finite() {
            return None;
        }
        let mut letters = Vec::with_capacity(2 * cands.len());
        for (x, e) in cands {
            letters.push((Letter::new(x.clone(), 1), e.clone()));
            letters.push((Letter::new(x.clone(), -1), group.inv(e).ok()?));
        }
        let mut words = BTreeMap::new();
        words.insert(group.identity(), Word::identity());
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(g) = queue.pop_front() {
            let base = words[&g].clone();
            for (l, e) in &letters {
                let h = group.mul(&g, e).ok()?;
                if !words.contains_key(&h) {
                    words.insert(h.clone(), base.mul(&Word::from_letters([l.clone()])));
                    queue.push_back(h);
                }
            }
        }
        Some(AtomLift::Transversal(words))
    }

    fn lift(&self, group: &Group, g: &GroupElem) -> Result<Word> {
        match self {
            AtomLift::Power { gen, sign } => match g {
                GroupElem::Cyclic(k) => Ok(Word::power(gen, sign * k)),
                _ => Err(Error::MixedGroups),
            },
            AtomLift::Transversal(words) => words
                .get(g)
                .cloned()
                .ok_or_else(|| Error::NoLift(group.format_elem(g))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hom(group: &Group, images: &[(&str, GroupElem)]) -> (GroupHom, Vec<Gen>) {
        let order: Vec<Gen> = images.iter().map(|(x, _)| Gen::new(x)).collect();
        let map = images.iter().map(|(x, e)| (Gen::new(x), e.clone())).collect();
        (GroupHom::new(group.clone(), map).unwrap(), order)
    }

    #[test]
    fn cyclic_lift_is_a_power() {
        let c5 = Group::cyclic(5);
        let (phi, order) = hom(&c5, &[("x", GroupElem::Cyclic(1))]);
        let l = Lifter::build(&phi, &order);
        assert_eq!(l.lift(&c5, &GroupElem::Cyclic(3)).unwrap(), "x x x".parse().unwrap());
        let (phi, order) = hom(&c5, &[("y", GroupElem::Cyclic(4))]);
        let l = Lifter::build(&phi, &order);
        assert_eq!(l.lift(&c5, &GroupElem::Cyclic(2)).unwrap(), "y^-1 y^-1".parse().unwrap());
    }

    #[test]
    fn transversal_sections_phi() {
        let s3 = Group::named("S3").unwrap();
        let elems = s3.elements().unwrap();
        let images: Vec<(String, GroupElem)> =
            elems.iter().map(|e| (format!("[{}]", s3.format_elem(e)), e.clone())).collect();
        let refs: Vec<(&str, GroupElem)> = images.iter().map(|(s, e)| (s.as_str(), e.clone())).collect();
        let (phi, order) = hom(&s3, &refs);
        let l = Lifter::build(&phi, &order);
        for g in &elems {
            assert_eq!(&phi.eval(&l.lift(&s3, g).unwrap()).unwrap(), g);
        }
    }

    #[test]
    fn missing_generators_give_no_lift() {
        let z = Group::cyclic(0);
        let (phi, order) = hom(&z, &[("x", GroupElem::Cyclic(2))]);
        let l = Lifter::build(&phi, &order);
        assert!(matches!(l.lift(&z, &GroupElem::Cyclic(1)), Err(Error::NoLift(_))));
    }
}
