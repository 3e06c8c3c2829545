use std::collections::BTreeMap;
use std::sync::Arc;

use super::dim2::{Dim2Elem, Factor};
use super::lift::Lifter;
use super::module::ModuleElem;
use crate::error::{Error, Result};
use crate::groups::{Group, GroupElem, GroupHom, GroupRingElem};
use crate::words::{Alphabet, Gen, Word};

/// An element of some dimension of a reduced crossed complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    /// The base point, the boundary of every dimension-1 generator.
    Base,
    Word(Word),
    Dim2(Dim2Elem),
    Module(ModuleElem),
}

impl Element {
    pub fn format(&self, group: &Group) -> String {
        match self {
            Element::Base => "*".into(),
            Element::Word(w) => w.to_string(),
            Element::Dim2(c) => c.to_string(),
            Element::Module(m) => m.format(group),
        }
    }
}

#[derive(Clone, Debug, Default)]
struct Stratum<T> {
    basis: Vec<Gen>,
    delta: BTreeMap<Gen, T>,
}

impl<T> Stratum<T> {
    fn get(&self, x: &Gen) -> Option<&T> {
        self.delta.get(x)
    }
}

/// A free reduced crossed complex.
///
/// Dimension 1 is the free group on `X₁` with `φ: F(X₁) → G`; dimension 2 is
/// the free crossed module on the relators `w: X₂ → F(X₁)`; dimension 3 has
/// boundaries in dimension 2; dimensions 4 and up are free right `ℤ[G]`-modules.
#[derive(Clone, Debug)]
pub struct CrossedComplex {
    name: String,
    group: Group,
    x1: Alphabet,
    phi: GroupHom,
    x2: Stratum<Word>,
    x3: Stratum<Dim2Elem>,
    upper: Vec<Stratum<ModuleElem>>,
    maxdim: usize,
    dims: BTreeMap<Gen, usize>,
    lifter: Arc<Lifter>,
    tensor_factors: BTreeMap<Gen, Vec<String>>,
}

impl CrossedComplex {
    /// The free crossed module of the presentation `⟨X₁ | w⟩` with
    /// `φ(x) = images[x]`.
    pub fn new(
        name: impl Into<String>,
        group: Group,
        x1: Vec<(Gen, GroupElem)>,
        relators: Vec<(Gen, Word)>,
    ) -> Result<Self> {
        let alphabet = Alphabet::new(x1.iter().map(|(x, _)| x.clone()))?;
        let phi = GroupHom::new(group.clone(), x1.into_iter().collect())?;
        let lifter = Arc::new(Lifter::build(&phi, alphabet.gens()));
        let mut cx = CrossedComplex {
            name: name.into(),
            group,
            x1: alphabet,
            phi,
            x2: Stratum::default(),
            x3: Stratum::default(),
            upper: Vec::new(),
            maxdim: 2,
            dims: BTreeMap::new(),
            lifter,
            tensor_factors: BTreeMap::new(),
        };
        for x in cx.x1.gens().to_vec() {
            cx.register(&x, 1)?;
        }
        for (x, w) in relators {
            cx.x1.check(&w)?;
            cx.register(&x, 2)?;
            cx.x2.basis.push(x.clone());
            cx.x2.delta.insert(x, w);
        }
        Ok(cx)
    }

    fn register(&mut self, x: &Gen, dim: usize) -> Result<()> {
        if self.dims.insert(x.clone(), dim).is_some() {
            return Err(Error::InvalidComplex(format!("duplicate generator `{x}`")));
        }
        Ok(())
    }

    /// Append dimension 3 with the given boundaries.
    pub fn push_dim3(&mut self, gens: Vec<(Gen, Dim2Elem)>) -> Result<()> {
        if self.maxdim != 2 {
            return Err(Error::Dimension(format!(
                "dimension 3 follows dimension 2, complex has maxdim {}",
                self.maxdim
            )));
        }
        for (x, c) in gens {
            self.check_dim2(&c)?;
            self.register(&x, 3)?;
            self.x3.basis.push(x.clone());
            self.x3.delta.insert(x, c);
        }
        self.maxdim = 3;
        Ok(())
    }

    /// Append the next dimension (at least 4) with the given boundaries.
    pub fn push_dim(&mut self, gens: Vec<(Gen, ModuleElem)>) -> Result<()> {
        if self.maxdim < 3 {
            return Err(Error::Dimension("module strata start at dimension 4".into()));
        }
        let n = self.maxdim + 1;
        let mut st = Stratum::default();
        for (x, m) in gens {
            self.check_module(n - 1, &m)?;
            self.register(&x, n)?;
            st.basis.push(x.clone());
            st.delta.insert(x, m);
        }
        self.upper.push(st);
        self.maxdim = n;
        Ok(())
    }

    pub fn check_dim2(&self, c: &Dim2Elem) -> Result<()> {
        for f in c.factors() {
            if self.dim_of(&f.gen) != Some(2) {
                return Err(Error::UnknownGenerator(format!("{} in dimension 2", f.gen)));
            }
            self.x1.check(&f.op)?;
        }
        Ok(())
    }

    pub fn check_module(&self, n: usize, m: &ModuleElem) -> Result<()> {
        for (x, r) in m.terms() {
            if self.dim_of(x) != Some(n) {
                return Err(Error::UnknownGenerator(format!("{x} in dimension {n}")));
            }
            for (g, _) in r.terms() {
                if !self.group.contains(g) {
                    return Err(Error::NotInGroup(format!("{g:?}")));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn phi(&self) -> &GroupHom {
        &self.phi
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.x1
    }

    pub fn maxdim(&self) -> usize {
        self.maxdim
    }

    pub fn dim_of(&self, x: &Gen) -> Option<usize> {
        self.dims.get(x).copied()
    }

    /// Basis of dimension `n`, in construction order.
    pub fn basis(&self, n: usize) -> Result<&[Gen]> {
        match n {
            1 => Ok(self.x1.gens()),
            2 => Ok(&self.x2.basis),
            3 if self.maxdim >= 3 => Ok(&self.x3.basis),
            n if n >= 4 && n <= self.maxdim => Ok(&self.upper[n - 4].basis),
            _ => Err(Error::Dimension(format!(
                "dimension {n} outside 1..={}",
                self.maxdim
            ))),
        }
    }

    /// Basis sizes in dimensions `1..=maxdim`.
    pub fn counts(&self) -> Vec<usize> {
        (1..=self.maxdim)
            .map(|n| self.basis(n).map_or(0, <[Gen]>::len))
            .collect()
    }

    pub fn relator(&self, x: &Gen) -> Result<&Word> {
        self.x2
            .get(x)
            .ok_or_else(|| Error::UnknownGenerator(x.to_string()))
    }

    pub fn delta3_of(&self, x: &Gen) -> Result<&Dim2Elem> {
        self.x3
            .get(x)
            .ok_or_else(|| Error::UnknownGenerator(x.to_string()))
    }

    /// Stored boundary of a generator of dimension `n ≥ 4`.
    pub fn delta_module_of(&self, n: usize, x: &Gen) -> Result<&ModuleElem> {
        if n < 4 || n > self.maxdim {
            return Err(Error::Dimension(format!("no module boundary in dimension {n}")));
        }
        self.upper[n - 4]
            .get(x)
            .ok_or_else(|| Error::UnknownGenerator(x.to_string()))
    }

    /// Boundary of a basis generator of any dimension.
    pub fn boundary(&self, x: &Gen) -> Result<Element> {
        match self.dim_of(x) {
            Some(1) => Ok(Element::Base),
            Some(2) => Ok(Element::Word(self.relator(x)?.clone())),
            Some(3) => Ok(Element::Dim2(self.delta3_of(x)?.clone())),
            Some(n) => Ok(Element::Module(self.delta_module_of(n, x)?.clone())),
            None => Err(Error::UnknownGenerator(x.to_string())),
        }
    }

    /// A word in `F(X₁)` mapping to `g` under `φ`.
    pub fn lift(&self, g: &GroupElem) -> Result<Word> {
        self.lifter.lift(&self.group, g)
    }

    pub fn tensor_factors(&self) -> &BTreeMap<Gen, Vec<String>> {
        &self.tensor_factors
    }

    pub fn set_tensor_factors(&mut self, factors: BTreeMap<Gen, Vec<String>>) {
        self.tensor_factors = factors;
    }

    /// `Π uᵢ⁻¹ w(xᵢ)^εᵢ uᵢ`.
    pub fn delta2(&self, c: &Dim2Elem) -> Result<Word> {
        let mut out = Word::identity();
        for f in c.factors() {
            let w = self.relator(&f.gen)?;
            let w = if f.exp > 0 { w.clone() } else { w.inv() };
            out = out.mul(&w.conj(&f.op));
        }
        Ok(out)
    }

    /// Image in the free module `C₂^ab` on `X₂`: `(x, ε, u) ↦ x·εφ(u)`.
    pub fn abelianize2(&self, c: &Dim2Elem) -> Result<ModuleElem> {
        let mut out = ModuleElem::zero();
        for f in c.factors() {
            self.relator(&f.gen)?;
            let g = self.phi.eval(&f.op)?;
            let mut r = GroupRingElem::zero();
            r.add_term(g, f.exp.into());
            out.add_term(&f.gen, &r);
        }
        Ok(out)
    }

    /// Equality in the free crossed module, decided by the boundary word and
    /// the abelianization.
    pub fn eq2(&self, c: &Dim2Elem, d: &Dim2Elem) -> Result<bool> {
        Ok(self.delta2(c)? == self.delta2(d)? && self.abelianize2(c)? == self.abelianize2(d)?)
    }

    /// Whether `c` is the identity of the free crossed module.
    pub fn is_trivial2(&self, c: &Dim2Elem) -> Result<bool> {
        Ok(self.delta2(c)?.is_identity() && self.abelianize2(c)?.is_zero())
    }

    /// Peiffer commutator `h⁻¹ k⁻¹ h k^{δh}`.
    pub fn peiffer(&self, h: &Dim2Elem, k: &Dim2Elem) -> Result<Dim2Elem> {
        let dh = self.delta2(h)?;
        Ok(Dim2Elem::from_factors(
            h.inv()
                .factors()
                .iter()
                .chain(k.inv().factors())
                .chain(h.factors())
                .chain(k.act(&dh).factors())
                .cloned()
                .collect(),
        ))
    }

    /// `Π_{(c, r)} Π_{(g, n) ∈ r} (c^{lift g})^n`, in the given order.
    pub fn expand_coefficients<'a>(
        &self,
        terms: impl IntoIterator<Item = (&'a Dim2Elem, &'a GroupRingElem)>,
    ) -> Result<Dim2Elem> {
        let mut factors: Vec<Factor> = Vec::new();
        for (c, r) in terms {
            for (g, n) in r.terms() {
                let k: i64 = n.try_into().map_err(|_| Error::Overflow)?;
                let piece = c.act(&self.lift(g)?).pow(k);
                factors.extend_from_slice(piece.factors());
            }
        }
        Ok(Dim2Elem::from_factors(factors))
    }

    /// `δ₃` extended to the module `C₃`.
    pub fn delta3(&self, m: &ModuleElem) -> Result<Dim2Elem> {
        let images = m
            .terms()
            .map(|(x, r)| Ok((self.delta3_of(x)?, r)))
            .collect::<Result<Vec<_>>>()?;
        self.expand_coefficients(images)
    }

    /// `δₙ` for `n ≥ 4`, extended `ℤ[G]`-linearly.
    pub fn delta_module(&self, n: usize, m: &ModuleElem) -> Result<ModuleElem> {
        let mut out = ModuleElem::zero();
        for (x, r) in m.terms() {
            out = out.add(&self.delta_module_of(n, x)?.mul_ring(r, &self.group)?);
        }
        Ok(out)
    }

    /// `δₙ` on a module element of dimension `n ≥ 3`.
    pub fn delta_n(&self, m: &ModuleElem, n: usize) -> Result<Element> {
        if n < 3 || n > self.maxdim {
            return Err(Error::Dimension(format!(
                "δ_{n} on a complex of maxdim {}",
                self.maxdim
            )));
        }
        self.check_module(n, m)?;
        if n == 3 {
            Ok(Element::Dim2(self.delta3(m)?))
        } else {
            Ok(Element::Module(self.delta_module(n, m)?))
        }
    }

    /// The same complex over another coefficient group, with `φ` and all
    /// module coefficients pushed through `embed` and generators renamed.
    pub fn rebase(
        &self,
        group: &Group,
        embed: &impl Fn(&GroupElem) -> Result<GroupElem>,
        rename: &impl Fn(&Gen) -> Gen,
    ) -> Result<CrossedComplex> {
        let st = self.strata();
        let x1 = st
            .dim1()
            .map(|(x, g)| Ok((rename(x), embed(g)?)))
            .collect::<Result<Vec<_>>>()?;
        let x2 = st.dim2().map(|(x, w)| (rename(x), w.rename(rename))).collect();
        let mut cx = CrossedComplex::new(self.name.clone(), group.clone(), x1, x2)?;
        if self.maxdim >= 3 {
            cx.push_dim3(st.dim3().map(|(x, c)| (rename(x), c.rename(rename))).collect())?;
        }
        for n in 4..=self.maxdim {
            let gens = st
                .module(n)
                .map(|(x, m)| Ok((rename(x), m.map(rename, embed)?)))
                .collect::<Result<Vec<_>>>()?;
            cx.push_dim(gens)?;
        }
        cx.tensor_factors = self
            .tensor_factors
            .iter()
            .map(|(x, f)| (rename(x), f.clone()))
            .collect();
        Ok(cx)
    }

    /// Stored boundaries in basis order.
    pub(crate) fn strata(&self) -> Strata<'_> {
        Strata { cx: self }
    }
}

/// Borrowed view of the stored boundaries, in basis order.
pub(crate) struct Strata<'a> {
    cx: &'a CrossedComplex,
}

impl<'a> Strata<'a> {
    pub(crate) fn dim1(&self) -> impl Iterator<Item = (&'a Gen, &'a GroupElem)> + 'a {
        let phi = self.cx.phi.images();
        self.cx.x1.gens().iter().map(move |x| (x, &phi[x]))
    }

    pub(crate) fn dim2(&self) -> impl Iterator<Item = (&'a Gen, &'a Word)> + 'a {
        let st = &self.cx.x2;
        st.basis.iter().map(move |x| (x, &st.delta[x]))
    }

    pub(crate) fn dim3(&self) -> impl Iterator<Item = (&'a Gen, &'a Dim2Elem)> + 'a {
        let st = &self.cx.x3;
        st.basis.iter().map(move |x| (x, &st.delta[x]))
    }

    pub(crate) fn module(&self, n: usize) -> impl Iterator<Item = (&'a Gen, &'a ModuleElem)> + 'a {
        let st = &self.cx.upper[n - 4];
        st.basis.iter().map(move |x| (x, &st.delta[x]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_presentation(p: i64) -> CrossedComplex {
        let x = Gen::new("x");
        CrossedComplex::new(
            "C",
            Group::cyclic(p as u64),
            vec![(x.clone(), GroupElem::Cyclic(1))],
            vec![(Gen::new("r"), Word::power(&x, p))],
        )
        .unwrap()
    }

    #[test]
    fn delta2_examples() {
        let cx = cyclic_presentation(3);
        let r = Gen::new("r");
        let u: Word = "x".parse().unwrap();
        assert_eq!(cx.delta2(&Dim2Elem::gen(&r)).unwrap(), "x x x".parse().unwrap());
        let c = Dim2Elem::gen(&r).act(&u);
        assert_eq!(cx.delta2(&c).unwrap(), "x x x".parse::<Word>().unwrap().conj(&u));
        let pair = Dim2Elem::gen(&r).mul(&Dim2Elem::gen(&r).inv());
        assert!(cx.delta2(&pair).unwrap().is_identity());
    }

    #[test]
    fn abelianize_examples() {
        let cx = cyclic_presentation(3);
        let r = Gen::new("r");
        let u: Word = "x".parse().unwrap();
        let c = Dim2Elem::from_factors(vec![
            Factor::new(r.clone(), 1, u.clone()),
            Factor::new(r.clone(), -1, u),
        ]);
        assert!(cx.abelianize2(&c).unwrap().is_zero());
        assert_eq!(
            cx.abelianize2(&Dim2Elem::gen(&r)).unwrap(),
            ModuleElem::gen(&r, cx.group())
        );
    }

    #[test]
    fn peiffer_elements_are_trivial() {
        let cx = cyclic_presentation(4);
        let h: Dim2Elem = "r^{x} . r^-1^{x x^-1 x x}".parse().unwrap();
        let k: Dim2Elem = "r^-1^{x^-1}".parse().unwrap();
        let p = cx.peiffer(&h, &k).unwrap();
        assert!(cx.is_trivial2(&p).unwrap());
        assert!(cx.is_trivial2(&cx.peiffer(&h, &Dim2Elem::identity()).unwrap()).unwrap());
    }

    #[test]
    fn duplicate_generators_rejected() {
        let x = Gen::new("x");
        let err = CrossedComplex::new(
            "bad",
            Group::cyclic(2),
            vec![(x.clone(), GroupElem::Cyclic(1))],
            vec![(x.clone(), Word::power(&x, 2))],
        );
        assert!(matches!(err, Err(Error::InvalidComplex(_))));
    }

    #[test]
    fn delta_n_rejects_wrong_dimension() {
        let mut cx = cyclic_presentation(2);
        let r = Gen::new("r");
        cx.push_dim3(vec![(Gen::new("s"), Dim2Elem::identity())]).unwrap();
        let m = ModuleElem::gen(&r, cx.group());
        assert!(cx.delta_n(&m, 3).is_err());
        assert!(cx.delta_n(&ModuleElem::zero(), 3).unwrap() == Element::Dim2(Dim2Elem::identity()));
        assert!(cx.delta_n(&ModuleElem::zero(), 4).is_err());
    }
}
