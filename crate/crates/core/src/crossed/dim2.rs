use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::words::{Gen, Word};

/// One factor `(x^ε)^u` of a formal consequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub gen: Gen,
    /// `+1` or `-1`.
    pub exp: i8,
    pub op: Word,
}

impl Factor {
    pub fn new(gen: Gen, exp: i8, op: Word) -> Self {
        debug_assert!(exp == 1 || exp == -1);
        Factor { gen, exp, op }
    }
}

/// Element of a free crossed module, stored as a product of factors
/// `Π (xᵢ^εᵢ)^uᵢ`.
///
/// The list is a representative only. Two lists may name the same element
/// (Peiffer relations); equality of elements is
/// [`CrossedComplex::eq2`](super::CrossedComplex::eq2), not `==`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Dim2Elem {
    factors: Vec<Factor>,
}

impl Dim2Elem {
    pub fn identity() -> Self {
        Dim2Elem::default()
    }

    pub fn gen(g: &Gen) -> Self {
        Dim2Elem {
            factors: vec![Factor::new(g.clone(), 1, Word::identity())],
        }
    }

    pub fn from_factors(factors: Vec<Factor>) -> Self {
        Dim2Elem { factors }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn mul(&self, other: &Dim2Elem) -> Dim2Elem {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Dim2Elem { factors }.cancel_adjacent()
    }

    pub fn inv(&self) -> Dim2Elem {
        Dim2Elem {
            factors: self
                .factors
                .iter()
                .rev()
                .map(|f| Factor::new(f.gen.clone(), -f.exp, f.op.clone()))
                .collect(),
        }
    }

    /// Right action of the free group: every operator `u` becomes `u·v`.
    pub fn act(&self, v: &Word) -> Dim2Elem {
        if v.is_identity() {
            return self.clone();
        }
        Dim2Elem {
            factors: self
                .factors
                .iter()
                .map(|f| Factor::new(f.gen.clone(), f.exp, f.op.mul(v)))
                .collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Dim2Elem {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut factors = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            factors.extend_from_slice(&base.factors);
        }
        Dim2Elem { factors }.cancel_adjacent()
    }

    /// Remove adjacent pairs `(x^ε)^u (x^-ε)^u`, which are inverse in the free
    /// precrossed module already.
    fn cancel_adjacent(self) -> Dim2Elem {
        let mut out: Vec<Factor> = Vec::with_capacity(self.factors.len());
        for f in self.factors {
            match out.last() {
                Some(top) if top.gen == f.gen && top.op == f.op && top.exp == -f.exp => {
                    out.pop();
                }
                _ => out.push(f),
            }
        }
        Dim2Elem { factors: out }
    }

    pub fn rename(&self, f: &impl Fn(&Gen) -> Gen) -> Dim2Elem {
        Dim2Elem {
            factors: self
                .factors
                .iter()
                .map(|x| Factor::new(f(&x.gen), x.exp, x.op.rename(f)))
                .collect(),
        }
    }
}

impl fmt::Debug for Dim2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dim2({self})")
    }
}

/// Grammar: factors joined by ` . `; a factor is `gen`, `gen^-1`, optionally
/// followed by `^{word}` for a non-trivial operator. The empty string is the
/// identity.
impl fmt::Display for Dim2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" . ")?;
            }
            write!(f, "{}", x.gen)?;
            if x.exp < 0 {
                f.write_str("^-1")?;
            }
            if !x.op.is_identity() {
                write!(f, "^{{{}}}", x.op)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Dim2Elem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Dim2Elem::identity());
        }
        let mut factors = Vec::new();
        for tok in s.split(" . ") {
            let tok = tok.trim();
            let (head, op) = match tok.find("^{") {
                Some(i) => {
                    let body = tok[i + 2..]
                        .strip_suffix('}')
                        .ok_or_else(|| Error::Parse(format!("unclosed operator in `{tok}`")))?;
                    (&tok[..i], body.parse::<Word>()?)
                }
                None => (tok, Word::identity()),
            };
            let (name, exp) = match head.strip_suffix("^-1") {
                Some(n) => (n, -1),
                None => (head, 1),
            };
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(Error::Parse(format!("bad factor `{tok}`")));
            }
            factors.push(Factor::new(Gen::new(name), exp, op));
        }
        Ok(Dim2Elem { factors })
    }
}
