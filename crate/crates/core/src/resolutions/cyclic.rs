use crate::crossed::{CrossedComplex, Dim2Elem, ModuleElem};
use crate::error::{Error, Result};
use crate::groups::{Group, GroupElem, GroupRingElem};
use crate::words::{Gen, Word};

fn x(n: usize) -> Gen {
    Gen::new(format!("x{n}"))
}

/// `1 − t` in `ℤ[C_p]`.
pub fn one_minus_t(p: u64) -> GroupRingElem {
    GroupRingElem::from_terms([
        (GroupElem::Cyclic(0), 1.into()),
        (GroupElem::Cyclic(1 % p as i64), (-1).into()),
    ])
}

/// `1 + t + ⋯ + t^{p−1}` in `ℤ[C_p]`.
pub fn norm(p: u64) -> GroupRingElem {
    GroupRingElem::from_terms((0..p as i64).map(|i| (GroupElem::Cyclic(i), 1.into())))
}

/// The periodic free crossed resolution of `C_p`: one generator `xₙ` in each
/// dimension, `δ₂x₂ = x₁^p`, then `xₙ ↦ xₙ₋₁(1−t)` for odd `n` and
/// `xₙ ↦ xₙ₋₁(1+t+⋯+t^{p−1})` for even `n`.
pub fn cyclic_resolution(p: u64, maxdim: usize) -> Result<CrossedComplex> {
    if p < 2 {
        return Err(Error::Dimension(format!("cyclic resolution needs p ≥ 2, got {p}")));
    }
    if maxdim < 2 {
        return Err(Error::Dimension("cyclic resolution needs maxdim ≥ 2".into()));
    }
    let group = Group::cyclic(p);
    let mut cx = CrossedComplex::new(
        format!("F(C{p})"),
        group,
        vec![(x(1), GroupElem::Cyclic(1))],
        vec![(x(2), Word::power(&x(1), p as i64))],
    )?;
    if maxdim >= 3 {
        let d3 = cx.expand_coefficients([(&Dim2Elem::gen(&x(2)), &one_minus_t(p))])?;
        cx.push_dim3(vec![(x(3), d3)])?;
    }
    for n in 4..=maxdim {
        let coeff = if n % 2 == 1 { one_minus_t(p) } else { norm(p) };
        cx.push_dim(vec![(x(n), ModuleElem::term(&x(n - 1), coeff))])?;
    }
    Ok(cx)
}

/// The resolution of the infinite cyclic group on one generator `name`, with
/// empty strata through `maxdim`.
pub fn infinite_cyclic(name: &str, maxdim: usize) -> Result<CrossedComplex> {
    let mut cx = CrossedComplex::new(
        format!("C({name})"),
        Group::cyclic(0),
        vec![(Gen::new(name), GroupElem::Cyclic(1))],
        vec![],
    )?;
    pad(&mut cx, maxdim)?;
    Ok(cx)
}

/// The complex with no generators over the trivial group, the unit for the
/// tensor product.
pub fn trivial_complex(maxdim: usize) -> Result<CrossedComplex> {
    let mut cx = CrossedComplex::new("1", Group::cyclic(1), vec![], vec![])?;
    pad(&mut cx, maxdim)?;
    Ok(cx)
}

/// Append empty strata up to `maxdim`.
pub fn pad(cx: &mut CrossedComplex, maxdim: usize) -> Result<()> {
    if cx.maxdim() < 3 && maxdim >= 3 {
        cx.push_dim3(vec![])?;
    }
    while cx.maxdim() < maxdim {
        cx.push_dim(vec![])?;
    }
    Ok(())
}
