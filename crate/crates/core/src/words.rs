//! Free groups on named generators.
//!
//! A [`Word`] is always freely reduced. Letters carry an exponent of `+1` or
//! `-1`; powers are expanded into repeated letters, so reduction is a single
//! left-to-right pass with a stack.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groups::{GroupHom, GroupRingElem};

/// Generator name. Cheap to clone; ordered and compared by its text.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen(Arc<str>);

impl Gen {
    pub fn new(name: impl AsRef<str>) -> Self {
        Gen(Arc::from(name.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Gen {
    fn from(s: &str) -> Self {
        Gen::new(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Gen,
    /// `+1` or `-1`.
    pub exp: i8,
}

impl Letter {
    pub fn new(gen: Gen, exp: i8) -> Self {
        debug_assert!(exp == 1 || exp == -1);
        Letter { gen, exp }
    }

    pub fn inverse(&self) -> Self {
        Letter {
            gen: self.gen.clone(),
            exp: -self.exp,
        }
    }
}

/// Freely reduced word in a free group. The empty word is the identity.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(g: &Gen) -> Self {
        Word {
            letters: vec![Letter::new(g.clone(), 1)],
        }
    }

    pub fn letter(g: &Gen, exp: i8) -> Self {
        Word {
            letters: vec![Letter::new(g.clone(), exp)],
        }
    }

    /// `g^k` for any integer `k`.
    pub fn power(g: &Gen, k: i64) -> Self {
        let exp = if k < 0 { -1 } else { 1 };
        Word {
            letters: (0..k.unsigned_abs())
                .map(|_| Letter::new(g.clone(), exp))
                .collect(),
        }
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            match out.last() {
                Some(top) if top.gen == l.gen && top.exp == -l.exp => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word { letters: out }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut left = self.letters.clone();
        let mut skip = 0;
        while let (Some(a), Some(b)) = (left.last(), other.letters.get(skip)) {
            if a.gen == b.gen && a.exp == -b.exp {
                left.pop();
                skip += 1;
            } else {
                break;
            }
        }
        left.extend_from_slice(&other.letters[skip..]);
        Word { letters: left }
    }

    pub fn inv(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    /// `v⁻¹ u v`, the right conjugation action.
    pub fn conj(&self, v: &Word) -> Word {
        v.inv().mul(self).mul(v)
    }

    pub fn generators(&self) -> BTreeSet<Gen> {
        self.letters.iter().map(|l| l.gen.clone()).collect()
    }

    /// Replace every generator through `f`, keeping exponents.
    pub fn rename(&self, f: &impl Fn(&Gen) -> Gen) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .map(|l| Letter::new(f(&l.gen), l.exp))
                .collect(),
        }
    }
}

/// Reduce a raw `(generator, ±1)` list after checking it against an alphabet.
pub fn reduce(raw: &[(Gen, i8)], alphabet: &Alphabet) -> Result<Word> {
    for (g, e) in raw {
        alphabet.require(g)?;
        if *e != 1 && *e != -1 {
            return Err(Error::Parse(format!("exponent {e} on `{g}`")));
        }
    }
    Ok(Word::from_letters(
        raw.iter().map(|(g, e)| Letter::new(g.clone(), *e)),
    ))
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if l.exp < 0 {
                write!(f, "{}^-1", l.gen)?;
            } else {
                write!(f, "{}", l.gen)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Grammar: whitespace-separated tokens `gen` or `gen^-1`.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (name, exp) = match tok.strip_suffix("^-1") {
                Some(n) => (n, -1),
                None => (tok, 1),
            };
            if name.is_empty() {
                return Err(Error::Parse(format!("empty generator in `{s}`")));
            }
            letters.push(Letter::new(Gen::new(name), exp));
        }
        Ok(Word::from_letters(letters))
    }
}

/// Ordered generating set of a free group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    gens: Vec<Gen>,
    index: BTreeSet<Gen>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = Gen>>(gens: I) -> Result<Self> {
        let mut a = Alphabet::default();
        for g in gens {
            if !a.index.insert(g.clone()) {
                return Err(Error::Parse(format!("duplicate generator `{g}`")));
            }
            a.gens.push(g);
        }
        Ok(a)
    }

    pub fn gens(&self) -> &[Gen] {
        &self.gens
    }

    pub fn contains(&self, g: &Gen) -> bool {
        self.index.contains(g)
    }

    pub fn require(&self, g: &Gen) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::UnknownGenerator(g.to_string()))
        }
    }

    pub fn check(&self, w: &Word) -> Result<()> {
        w.letters().iter().try_for_each(|l| self.require(&l.gen))
    }

    /// Parse a word and check every letter against the alphabet.
    pub fn parse(&self, s: &str) -> Result<Word> {
        let w: Word = s.parse()?;
        self.check(&w)?;
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

/// Homomorphism between free groups given on generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeHom {
    images: BTreeMap<Gen, Word>,
}

impl FreeHom {
    pub fn new(images: BTreeMap<Gen, Word>) -> Self {
        FreeHom { images }
    }

    pub fn identity_on(alphabet: &Alphabet) -> Self {
        FreeHom {
            images: alphabet
                .gens()
                .iter()
                .map(|g| (g.clone(), Word::gen(g)))
                .collect(),
        }
    }

    pub fn image(&self, g: &Gen) -> Result<&Word> {
        self.images
            .get(g)
            .ok_or_else(|| Error::Unassigned(g.to_string()))
    }

    pub fn apply(&self, u: &Word) -> Result<Word> {
        let mut out = Word::identity();
        for l in u.letters() {
            let img = self.image(&l.gen)?;
            out = if l.exp > 0 {
                out.mul(img)
            } else {
                out.mul(&img.inv())
            };
        }
        Ok(out)
    }
}

/// Left Fox derivative `∂u/∂x` in `ℤ[G]` through the evaluation `phi`.
///
/// Satisfies `∂(uv)/∂x = ∂u/∂x + φ(u)·∂v/∂x`, `∂x/∂x = 1`,
/// `∂x⁻¹/∂x = -φ(x)⁻¹`.
pub fn fox_derivative(u: &Word, x: &Gen, phi: &GroupHom) -> Result<GroupRingElem> {
    let group = phi.group();
    let mut prefix = group.identity();
    let mut acc = GroupRingElem::zero();
    for l in u.letters() {
        let img = phi.image(&l.gen)?;
        if l.exp > 0 {
            if &l.gen == x {
                acc.add_term(prefix.clone(), 1.into());
            }
            prefix = group.mul(&prefix, img)?;
        } else {
            prefix = group.mul(&prefix, &group.inv(img)?)?;
            if &l.gen == x {
                acc.add_term(prefix.clone(), (-1).into());
            }
        }
    }
    Ok(acc)
}

/// Right Fox derivatives of `u` with respect to every generator it contains.
///
/// These satisfy `d(uv) = d(u)·φ(v) + d(v)`, `d(x) = 1`, `d(x⁻¹) = -φ(x)⁻¹`,
/// which is the linearization compatible with right actions: the relator
/// conjugate `v⁻¹ r v` goes to `d(r)·φ(v)` whenever `φ(r) = 1`.
pub fn fox_right_all(u: &Word, phi: &GroupHom) -> Result<BTreeMap<Gen, GroupRingElem>> {
    let group = phi.group();
    let mut suffix = group.identity();
    let mut out: BTreeMap<Gen, GroupRingElem> = BTreeMap::new();
    for l in u.letters().iter().rev() {
        let img = phi.image(&l.gen)?;
        if l.exp > 0 {
            out.entry(l.gen.clone())
                .or_default()
                .add_term(suffix.clone(), 1.into());
            suffix = group.mul(img, &suffix)?;
        } else {
            suffix = group.mul(&group.inv(img)?, &suffix)?;
            out.entry(l.gen.clone())
                .or_default()
                .add_term(suffix.clone(), (-1).into());
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}
