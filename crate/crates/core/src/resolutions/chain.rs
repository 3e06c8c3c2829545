use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::snf::IntMatrix;
use crate::crossed::{CrossedComplex, ModuleElem};
use crate::error::{Error, Result};
use crate::groups::{Group, GroupElem, GroupRingElem};
use crate::words::{fox_right_all, Gen};

/// Free right `ℤ[G]`-module chain complex over a finite group, with the
/// augmentation `C₀ = ℤ[G] → ℤ` in dimension 0.
///
/// `C₀` has the single basis element `*`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    group: Group,
    elems: Vec<GroupElem>,
    index: BTreeMap<GroupElem, usize>,
    bases: Vec<Vec<Gen>>,
    /// `boundaries[n][i] = ∂ₙ(bases[n][i])`; `boundaries[0]` is empty.
    boundaries: Vec<Vec<ModuleElem>>,
}

/// The base point generator of `C₀`.
pub fn base_gen() -> Gen {
    Gen::new("*")
}

/// Linearize a free crossed complex of a finite group through `maxdim`:
/// `∂₁x = *·(φ(x) − 1)`, `∂₂r = Σₓ x·dₓ(w r)` with right Fox derivatives,
/// `∂₃` the abelianization of `δ₃`, and `∂ₙ = δₙ` above.
pub fn to_chain_complex(cx: &CrossedComplex, maxdim: usize) -> Result<ChainComplex> {
    if maxdim > cx.maxdim() {
        return Err(Error::Dimension(format!(
            "maxdim {maxdim} above the complex's {}",
            cx.maxdim()
        )));
    }
    let group = cx.group().clone();
    let elems = group.elements()?;
    let index = elems.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
    let star = base_gen();
    let mut bases = vec![vec![star.clone()]];
    let mut boundaries = vec![Vec::new()];
    for n in 1..=maxdim {
        let basis = cx.basis(n)?.to_vec();
        let mut col = Vec::with_capacity(basis.len());
        for x in &basis {
            let d = match n {
                1 => {
                    let mut r = GroupRingElem::from_elem(cx.phi().image(x)?.clone());
                    r.add_term(group.identity(), -BigInt::one());
                    ModuleElem::term(&star, r)
                }
                2 => {
                    let mut m = ModuleElem::zero();
                    for (y, r) in fox_right_all(cx.relator(x)?, cx.phi())? {
                        m.add_term(&y, &r);
                    }
                    m
                }
                3 => cx.abelianize2(cx.delta3_of(x)?)?,
                n => cx.delta_module_of(n, x)?.clone(),
            };
            col.push(d);
        }
        bases.push(basis);
        boundaries.push(col);
    }
    let cc = ChainComplex {
        group,
        elems,
        index,
        bases,
        boundaries,
    };
    cc.check_dd()?;
    Ok(cc)
}

/// Invariant factors of a finitely generated abelian group: torsion
/// factors ascending, then a `0` for each free summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants(pub Vec<u64>);

impl Invariants {
    pub fn from_parts(torsion: &[BigInt], free: usize) -> Result<Self> {
        let mut out = Vec::new();
        for d in torsion {
            if !d.is_one() {
                out.push(d.to_u64().ok_or(Error::Overflow)?);
            }
        }
        out.sort_unstable();
        out.extend(std::iter::repeat_n(0, free));
        Ok(Invariants(out))
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Display for Invariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut s = String::from("[");
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            write!(s, "{d}").expect("writing to a string");
        }
        s.push(']');
        f.write_str(&s)
    }
}

/// Outcome of an exactness check at one dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exactness {
    pub dim: usize,
    pub exact: bool,
    /// `ℤ`-rank of `ker ∂ₙ`; at `n = 2` the module of identities.
    pub kernel_rank: usize,
    /// `ℤ`-rank of `im ∂ₙ₊₁`.
    pub image_rank: usize,
    /// `ker ∂ₙ / im ∂ₙ₊₁`.
    pub homology: Invariants,
}

impl ChainComplex {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn maxdim(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn basis(&self, n: usize) -> &[Gen] {
        &self.bases[n]
    }

    pub fn boundary(&self, n: usize, i: usize) -> &ModuleElem {
        &self.boundaries[n][i]
    }

    fn position(&self, n: usize, x: &Gen) -> Result<usize> {
        self.bases[n]
            .iter()
            .position(|y| y == x)
            .ok_or_else(|| Error::UnknownGenerator(format!("{x} in dimension {n}")))
    }

    /// `∂ₙ` extended linearly.
    pub fn apply(&self, n: usize, m: &ModuleElem) -> Result<ModuleElem> {
        let mut out = ModuleElem::zero();
        for (x, r) in m.terms() {
            let d = &self.boundaries[n][self.position(n, x)?];
            out = out.add(&d.mul_ring(r, &self.group)?);
        }
        Ok(out)
    }

    /// `∂ₙ₋₁∂ₙ = 0` on every generator.
    pub fn check_dd(&self) -> Result<()> {
        for n in 2..=self.maxdim() {
            for (x, d) in self.bases[n].iter().zip(&self.boundaries[n]) {
                if !self.apply(n - 1, d)?.is_zero() {
                    return Err(Error::InvalidComplex(format!("∂∂ ≠ 0 on {x}")));
                }
            }
        }
        Ok(())
    }

    /// Integer matrix of `∂ₙ` on the `ℤ`-basis `(x, g)`, column `(x, g)`
    /// holding `∂(x)·g`.
    pub fn matrix(&self, n: usize) -> Result<IntMatrix> {
        let k = self.elems.len();
        let src = self.bases.get(n).map_or(0, Vec::len);
        if n == 0 || n > self.maxdim() {
            let rows = if n == 0 { 0 } else { self.bases[n - 1].len() * k };
            return Ok(IntMatrix::zeros(rows, src * k));
        }
        let tgt = &self.bases[n - 1];
        let mut m = IntMatrix::zeros(tgt.len() * k, src * k);
        for (j, d) in self.boundaries[n].iter().enumerate() {
            for (b, g) in self.elems.iter().enumerate() {
                for (y, r) in d.terms() {
                    let i = self.position(n - 1, y)?;
                    for (h, c) in r.terms() {
                        let hg = self.group.mul(h, g)?;
                        m.add_to(i * k + self.index[&hg], j * k + b, c);
                    }
                }
            }
        }
        Ok(m)
    }

    /// Matrix of `∂ₙ ⊗_{ℤ[G]} ℤ`.
    pub fn augmented_matrix(&self, n: usize) -> Result<IntMatrix> {
        let src = self.bases.get(n).map_or(0, Vec::len);
        if n == 0 || n > self.maxdim() {
            let rows = if n == 0 { 0 } else { self.bases[n - 1].len() };
            return Ok(IntMatrix::zeros(rows, src));
        }
        let mut m = IntMatrix::zeros(self.bases[n - 1].len(), src);
        for (j, d) in self.boundaries[n].iter().enumerate() {
            for (y, r) in d.terms() {
                m.add_to(self.position(n - 1, y)?, j, &r.augmentation());
            }
        }
        Ok(m)
    }

    /// `Hₙ(C ⊗_{ℤ[G]} ℤ)`; for a resolution, the group homology `Hₙ(G)`.
    pub fn homology(&self, n: usize) -> Result<Invariants> {
        if n >= self.maxdim() {
            return Err(Error::Dimension(format!(
                "homology in dimension {n} needs the complex through {}",
                n + 1
            )));
        }
        let rank_n = self.augmented_matrix(n)?.rank();
        let next = self.augmented_matrix(n + 1)?.invariant_factors();
        let free = self.bases[n].len() - rank_n - next.len();
        Invariants::from_parts(&next, free)
    }

    /// Whether `ker ∂ₙ = im ∂ₙ₊₁` over `ℤ`. At `n = maxdim` the complex is
    /// read as truncated, `∂ₙ₊₁ = 0`.
    pub fn exactness(&self, n: usize) -> Result<Exactness> {
        if n == 0 || n > self.maxdim() {
            return Err(Error::Dimension(format!(
                "exactness at {n} outside 1..={}",
                self.maxdim()
            )));
        }
        let k = self.elems.len();
        let rank_n = self.matrix(n)?.rank();
        let next = self.matrix(n + 1)?.invariant_factors();
        let kernel_rank = self.bases[n].len() * k - rank_n;
        let homology = Invariants::from_parts(&next, kernel_rank - next.len())?;
        Ok(Exactness {
            dim: n,
            exact: homology.is_trivial(),
            kernel_rank,
            image_rank: next.len(),
            homology,
        })
    }
}

/// `Hₙ` of the augmented chain complex of a finite-group complex.
pub fn homology_over_z(cx: &CrossedComplex, n: usize) -> Result<Invariants> {
    if n >= cx.maxdim() {
        return Err(Error::Dimension(format!(
            "H_{n} needs the complex through dimension {}",
            n + 1
        )));
    }
    to_chain_complex(cx, n + 1)?.homology(n)
}

/// Exactness of the associated chain complex at dimension `n`.
pub fn exactness_check(cx: &CrossedComplex, n: usize) -> Result<Exactness> {
    let top = (n + 1).min(cx.maxdim());
    to_chain_complex(cx, top)?.exactness(n)
}
