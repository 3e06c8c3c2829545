use std::collections::BTreeMap;

use super::complex::{CrossedComplex, Element};
use super::dim2::Dim2Elem;
use super::module::ModuleElem;
use super::report::{CheckLine, Report};
use crate::error::{Error, Result};
use crate::groups::GroupElem;
use crate::words::{FreeHom, Gen, Word};

/// Morphism of free crossed complexes, given on generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrsMorphism {
    f1: FreeHom,
    f2: BTreeMap<Gen, Dim2Elem>,
    /// Dimensions 3 and up.
    upper: BTreeMap<usize, BTreeMap<Gen, ModuleElem>>,
}

impl CrsMorphism {
    pub fn new(
        f1: BTreeMap<Gen, Word>,
        f2: BTreeMap<Gen, Dim2Elem>,
        upper: BTreeMap<usize, BTreeMap<Gen, ModuleElem>>,
    ) -> Self {
        CrsMorphism {
            f1: FreeHom::new(f1),
            f2,
            upper,
        }
    }

    pub fn identity(cx: &CrossedComplex) -> Self {
        let f1 = cx
            .alphabet()
            .gens()
            .iter()
            .map(|x| (x.clone(), Word::gen(x)))
            .collect();
        let f2 = cx
            .basis(2)
            .unwrap_or_default()
            .iter()
            .map(|x| (x.clone(), Dim2Elem::gen(x)))
            .collect();
        let upper = (3..=cx.maxdim())
            .map(|n| {
                let m = cx
                    .basis(n)
                    .unwrap_or_default()
                    .iter()
                    .map(|x| (x.clone(), ModuleElem::gen(x, cx.group())))
                    .collect();
                (n, m)
            })
            .collect();
        CrsMorphism {
            f1: FreeHom::new(f1),
            f2,
            upper,
        }
    }

    /// Change the image of one generator of dimension at least 3.
    pub fn set_upper(&mut self, n: usize, x: Gen, m: ModuleElem) {
        self.upper.entry(n).or_default().insert(x, m);
    }

    pub fn set_dim2(&mut self, x: Gen, c: Dim2Elem) {
        self.f2.insert(x, c);
    }

    pub fn apply_word(&self, u: &Word) -> Result<Word> {
        self.f1.apply(u)
    }

    /// Induced map on coefficient groups, through a lift in the source.
    pub fn map_group(
        &self,
        src: &CrossedComplex,
        tgt: &CrossedComplex,
        g: &GroupElem,
    ) -> Result<GroupElem> {
        tgt.phi().eval(&self.f1.apply(&src.lift(g)?)?)
    }

    pub fn apply2(&self, c: &Dim2Elem) -> Result<Dim2Elem> {
        let mut out = Dim2Elem::identity();
        for f in c.factors() {
            let img = self
                .f2
                .get(&f.gen)
                .ok_or_else(|| Error::Unassigned(f.gen.to_string()))?;
            let img = if f.exp > 0 { img.clone() } else { img.inv() };
            out = out.mul(&img.act(&self.f1.apply(&f.op)?));
        }
        Ok(out)
    }

    pub fn apply_module(
        &self,
        src: &CrossedComplex,
        tgt: &CrossedComplex,
        n: usize,
        m: &ModuleElem,
    ) -> Result<ModuleElem> {
        let table = self
            .upper
            .get(&n)
            .ok_or_else(|| Error::Dimension(format!("no assignment in dimension {n}")))?;
        let mut out = ModuleElem::zero();
        for (x, r) in m.terms() {
            let img = table
                .get(x)
                .ok_or_else(|| Error::Unassigned(x.to_string()))?;
            let r = r.map_elems(&|g| self.map_group(src, tgt, g))?;
            out = out.add(&img.mul_ring(&r, tgt.group())?);
        }
        Ok(out)
    }

    /// Image of an element of dimension `n`.
    pub fn apply(
        &self,
        src: &CrossedComplex,
        tgt: &CrossedComplex,
        e: &Element,
        n: usize,
    ) -> Result<Element> {
        match (e, n) {
            (Element::Base, _) => Ok(Element::Base),
            (Element::Word(u), 1) => Ok(Element::Word(self.apply_word(u)?)),
            (Element::Dim2(c), 2) => Ok(Element::Dim2(self.apply2(c)?)),
            (Element::Module(m), n) if n >= 3 => {
                Ok(Element::Module(self.apply_module(src, tgt, n, m)?))
            }
            _ => Err(Error::Dimension(format!("element does not live in dimension {n}"))),
        }
    }

    /// Check that the assignments commute with the boundaries, one line per
    /// dimension with a failing generator as witness.
    pub fn check(&self, src: &CrossedComplex, tgt: &CrossedComplex) -> Report {
        let mut report = Report::new();
        let gens = |n: usize| src.basis(n).map(<[Gen]>::to_vec).unwrap_or_default();
        let lines = |n: usize, f: &dyn Fn(&Gen) -> Result<bool>| {
            let outcomes = gens(n).iter().map(|x| (x.to_string(), f(x))).collect();
            CheckLine::from_outcomes("morphism", n, outcomes)
        };
        report.push(lines(1, &|x| {
            let w = self.f1.image(x)?;
            tgt.alphabet().check(w)?;
            Ok(true)
        }));
        report.push(lines(2, &|x| {
            let c = self.f2.get(x).ok_or_else(|| Error::Unassigned(x.to_string()))?;
            tgt.check_dim2(c)?;
            Ok(self.f1.apply(src.relator(x)?)? == tgt.delta2(c)?)
        }));
        for n in 3..=src.maxdim() {
            report.push(lines(n, &|x| {
                let img = self
                    .upper
                    .get(&n)
                    .and_then(|t| t.get(x))
                    .ok_or_else(|| Error::Unassigned(x.to_string()))?;
                tgt.check_module(n, img)?;
                if n == 3 {
                    tgt.eq2(&self.apply2(src.delta3_of(x)?)?, &tgt.delta3(img)?)
                } else {
                    let lhs = self.apply_module(src, tgt, n - 1, src.delta_module_of(n, x)?)?;
                    Ok(lhs == tgt.delta_module(n, img)?)
                }
            }));
        }
        report
    }
}

/// A concrete crossed module `∂: M → P` with `P` acting on `M` from the right.
pub trait CrossedModuleTarget {
    type Top: Clone + PartialEq;
    type Bottom: Clone + PartialEq;

    fn top_identity(&self) -> Self::Top;
    fn top_mul(&self, a: &Self::Top, b: &Self::Top) -> Self::Top;
    fn top_inv(&self, a: &Self::Top) -> Self::Top;
    fn bottom_identity(&self) -> Self::Bottom;
    fn bottom_mul(&self, a: &Self::Bottom, b: &Self::Bottom) -> Self::Bottom;
    fn bottom_inv(&self, a: &Self::Bottom) -> Self::Bottom;
    /// `m^p`.
    fn act(&self, m: &Self::Bottom, p: &Self::Top) -> Self::Bottom;
    fn boundary(&self, m: &Self::Bottom) -> Self::Top;
}

/// Morphism from the bottom two dimensions of a free crossed complex into a
/// concrete crossed module.
pub struct TargetMap<'a, T: CrossedModuleTarget> {
    pub target: &'a T,
    pub f1: BTreeMap<Gen, T::Top>,
    pub f2: BTreeMap<Gen, T::Bottom>,
}

impl<T: CrossedModuleTarget> TargetMap<'_, T> {
    pub fn eval_word(&self, u: &Word) -> Result<T::Top> {
        let t = self.target;
        let mut acc = t.top_identity();
        for l in u.letters() {
            let img = self
                .f1
                .get(&l.gen)
                .ok_or_else(|| Error::Unassigned(l.gen.to_string()))?;
            let f = if l.exp > 0 { img.clone() } else { t.top_inv(img) };
            acc = t.top_mul(&acc, &f);
        }
        Ok(acc)
    }

    pub fn eval_dim2(&self, c: &Dim2Elem) -> Result<T::Bottom> {
        let t = self.target;
        let mut acc = t.bottom_identity();
        for f in c.factors() {
            let img = self
                .f2
                .get(&f.gen)
                .ok_or_else(|| Error::Unassigned(f.gen.to_string()))?;
            let m = if f.exp > 0 { img.clone() } else { t.bottom_inv(img) };
            acc = t.bottom_mul(&acc, &t.act(&m, &self.eval_word(&f.op)?));
        }
        Ok(acc)
    }

    /// `∂f₂ = f₁δ₂` on `X₂` and `f₂δ₃ = 1` on `X₃`.
    pub fn check(&self, src: &CrossedComplex) -> Report {
        let t = self.target;
        let mut report = Report::new();
        let x2 = src.basis(2).unwrap_or_default();
        let outcomes = x2
            .iter()
            .map(|x| {
                let r = (|| {
                    let m = self.f2.get(x).ok_or_else(|| Error::Unassigned(x.to_string()))?;
                    Ok(t.boundary(m) == self.eval_word(src.relator(x)?)?)
                })();
                (x.to_string(), r)
            })
            .collect();
        report.push(CheckLine::from_outcomes("morphism", 2, outcomes));
        if src.maxdim() >= 3 {
            let x3 = src.basis(3).unwrap_or_default();
            let outcomes = x3
                .iter()
                .map(|x| {
                    let r = (|| Ok(self.eval_dim2(src.delta3_of(x)?)? == t.bottom_identity()))();
                    (x.to_string(), r)
                })
                .collect();
            report.push(CheckLine::from_outcomes("morphism", 3, outcomes));
        }
        report
    }
}
