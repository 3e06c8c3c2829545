//! The universal bimorphism `(L, C) → L ⊗ C` on free generators.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::crossed::{CrossedComplex, Dim2Elem, Element, Factor, ModuleElem};
use crate::error::{Error, Result};
use crate::groups::{Group, GroupRingElem};
use crate::words::{fox_right_all, Gen, Letter, Word};

/// Separator in the names of tensor generators.
pub const TENSOR: &str = "(tensor)";

pub fn pair_name(a: &Gen, c: &Gen) -> Gen {
    Gen::new(format!("{a}{TENSOR}{c}"))
}

/// Two free reduced complexes over a common coefficient group, with the
/// generator pairs `a ⊗ c` that exist in the product.
#[derive(Clone, Debug)]
pub struct Bimorphism {
    pub(crate) left: CrossedComplex,
    pub(crate) right: CrossedComplex,
    pub(crate) pairs: BTreeMap<(Gen, Gen), Gen>,
}

impl Bimorphism {
    pub fn left(&self) -> &CrossedComplex {
        &self.left
    }

    pub fn right(&self) -> &CrossedComplex {
        &self.right
    }

    fn group(&self) -> &Group {
        self.left.group()
    }

    fn pair(&self, a: &Gen, c: &Gen) -> Result<Gen> {
        self.pairs
            .get(&(a.clone(), c.clone()))
            .cloned()
            .ok_or_else(|| Error::EscapesSubcomplex(pair_name(a, c).to_string()))
    }

    fn theta_letters(&self, x: &Letter, y: &Letter) -> Result<Factor> {
        let p = self.pair(&x.gen, &y.gen)?;
        let xi = Word::letter(&x.gen, -1);
        let yi = Word::letter(&y.gen, -1);
        Ok(match (x.exp > 0, y.exp > 0) {
            (true, true) => Factor::new(p, 1, Word::identity()),
            (false, true) => Factor::new(p, -1, xi),
            (true, false) => Factor::new(p, -1, yi),
            (false, false) => Factor::new(p, 1, xi.mul(&yi)),
        })
    }

    /// `θ(u, v)` for words `u` over the left and `v` over the right
    /// generators, expanded through
    /// `θ(a, bb′) = θ(a,b)^{b′} θ(a,b′)` and `θ(aa′, b) = θ(a′,b) θ(a,b)^{a′}`.
    pub fn theta11(&self, u: &Word, v: &Word) -> Result<Dim2Elem> {
        let us = u.letters();
        let vs = v.letters();
        let mut out = Dim2Elem::identity();
        for i in (0..us.len()).rev() {
            let mut row = Dim2Elem::identity();
            for j in 0..vs.len() {
                let f = Dim2Elem::from_factors(vec![self.theta_letters(&us[i], &vs[j])?]);
                row = row.mul(&f.act(&Word::from_letters(vs[j + 1..].iter().cloned())));
            }
            out = out.mul(&row.act(&Word::from_letters(us[i + 1..].iter().cloned())));
        }
        Ok(out)
    }

    fn linearize(cx: &CrossedComplex, e: &Element) -> Result<ModuleElem> {
        match e {
            Element::Base => Err(Error::Dimension("the base point has no linear part".into())),
            Element::Word(w) => {
                let mut m = ModuleElem::zero();
                for (x, r) in fox_right_all(w, cx.phi())? {
                    m.add_term(&x, &r);
                }
                Ok(m)
            }
            Element::Dim2(c) => cx.abelianize2(c),
            Element::Module(m) => Ok(m.clone()),
        }
    }

    /// `Σ (x ⊗ y)·(r s)` for `l = Σ x·r` and `r = Σ y·s`.
    pub fn theta_linear(&self, l: &ModuleElem, r: &ModuleElem) -> Result<ModuleElem> {
        let g = self.group();
        let mut out = ModuleElem::zero();
        for (x, rx) in l.terms() {
            for (y, sy) in r.terms() {
                out.add_term(&self.pair(x, y)?, &rx.mul(sy, g)?);
            }
        }
        Ok(out)
    }

    /// `θ(x, y)` for `x` of dimension `m` on the left and `y` of dimension
    /// `n` on the right. Words in both dimension 1 give a crossed module
    /// element; total dimension 3 and up is bilinear.
    pub fn eval(&self, x: &Element, m: usize, y: &Element, n: usize) -> Result<Element> {
        if !fits(x, m) || !fits(y, n) {
            return Err(Error::Dimension(format!("θ arguments do not have dimensions ({m}, {n})")));
        }
        match (x, y) {
            (Element::Base, _) if m == 0 => Ok(y.clone()),
            (_, Element::Base) if n == 0 => Ok(x.clone()),
            (Element::Word(u), Element::Word(v)) if m == 1 && n == 1 => {
                Ok(Element::Dim2(self.theta11(u, v)?))
            }
            _ if m >= 1 && n >= 1 && m + n >= 3 => {
                let l = Self::linearize(&self.left, x)?;
                let r = Self::linearize(&self.right, y)?;
                Ok(Element::Module(self.theta_linear(&l, &r)?))
            }
            _ => Err(Error::Dimension(format!("θ on dimensions ({m}, {n})"))),
        }
    }

    /// `δ(a ⊗ c)` for generators `a ∈ L_m`, `c ∈ C_n`, from the boundary
    /// rules with the base point absorbed.
    pub fn boundary(&self, a: &Gen, m: usize, c: &Gen, n: usize) -> Result<Element> {
        let g = self.group();
        let (l, r) = (&self.left, &self.right);
        let pm = |k: usize| -> BigInt { if k.is_multiple_of(2) { 1.into() } else { (-1).into() } };
        let out = match (m, n) {
            (1, 1) => Element::Word(
                Word::letter(c, -1)
                    .mul(&Word::letter(a, -1))
                    .mul(&Word::gen(c))
                    .mul(&Word::gen(a)),
            ),
            (1, 2) => {
                let t = self.theta11(&Word::gen(a), r.relator(c)?)?;
                let cg = Dim2Elem::gen(c);
                Element::Dim2(t.inv().mul(&cg.inv()).mul(&cg.act(&Word::gen(a))))
            }
            (2, 1) => {
                let ag = Dim2Elem::gen(a);
                let t = self.theta11(l.relator(a)?, &Word::gen(c))?;
                Element::Dim2(ag.inv().mul(&ag.act(&Word::gen(c))).mul(&t))
            }
            (1, _) => {
                let phi_a = GroupRingElem::from_elem(l.phi().image(a)?.clone());
                let shift = phi_a.sub(&GroupRingElem::one(g));
                let da = Self::linearize(l, &Element::Word(Word::gen(a)))?;
                let dc = Self::linearize(r, &r.boundary(c)?)?;
                Element::Module(ModuleElem::term(c, shift).sub(&self.theta_linear(&da, &dc)?))
            }
            (m, 1) => {
                let phi_c = GroupRingElem::from_elem(r.phi().image(c)?.clone());
                let coeff = GroupRingElem::one(g).sub(&phi_c).scale(&-pm(m));
                let da = Self::linearize(l, &l.boundary(a)?)?;
                let dc = Self::linearize(r, &Element::Word(Word::gen(c)))?;
                Element::Module(ModuleElem::term(a, coeff).add(&self.theta_linear(&da, &dc)?))
            }
            (m, _) => {
                let da = Self::linearize(l, &l.boundary(a)?)?;
                let dc = Self::linearize(r, &r.boundary(c)?)?;
                let first = self.theta_linear(&da, &ModuleElem::gen(c, g))?;
                let second = self.theta_linear(&ModuleElem::gen(a, g), &dc)?;
                Element::Module(first.add(&second.scale(&pm(m))))
            }
        };
        Ok(out)
    }
}

fn fits(e: &Element, dim: usize) -> bool {
    matches!(
        (e, dim),
        (Element::Base, 0) | (Element::Word(_), 1) | (Element::Dim2(_), 2) | (Element::Module(_), 3..)
    )
}

/// The boundary of a tensor generator with `δ` of its factors left
/// unexpanded, e.g. `r^-1 . r^{y} . (δr (tensor) y)`. `None` for generators
/// that are not pairs.
pub fn raw_boundary(cx: &CrossedComplex, x: &Gen) -> Option<String> {
    let (a, c) = x.as_str().rsplit_once(TENSOR)?;
    let m = cx.dim_of(&Gen::new(a))?;
    let n = cx.dim_of(&Gen::new(c))?;
    let pm = |k: usize| if k.is_multiple_of(2) { "+" } else { "-" };
    Some(match (m, n) {
        (1, 1) => format!("{c}^-1 {a}^-1 {c} {a}"),
        (1, 2) => format!("({a} {TENSOR} δ{c})^-1 . {c}^-1 . {c}^{{{a}}}"),
        (2, 1) => format!("{a}^-1 . {a}^{{{c}}} . (δ{a} {TENSOR} {c})"),
        (1, _) => format!("-({a} {TENSOR} δ{c}) - {c} + {c}·φ({a})"),
        (m, 1) => format!(
            "{}{a} {}{a}·φ({c}) + (δ{a} {TENSOR} {c})",
            pm(m + 1),
            pm(m)
        ),
        (m, _) => format!("(δ{a} {TENSOR} {c}) {}({a} {TENSOR} δ{c})", pm(m)),
    })
}
