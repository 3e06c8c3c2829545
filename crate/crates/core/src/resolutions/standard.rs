use itertools::Itertools;

use crate::crossed::{CrossedComplex, Dim2Elem, Factor, ModuleElem};
use crate::error::{Error, Result};
use crate::groups::{Group, GroupElem, GroupRingElem};
use crate::words::{Gen, Word};

/// Name of the standard generator `[a₁,…,aₙ]`.
pub fn bracket(group: &Group, tuple: &[GroupElem]) -> Gen {
    Gen::new(format!(
        "[{}]",
        tuple.iter().map(|g| group.format_elem(g)).join(",")
    ))
}

/// The standard free crossed resolution of a finite group, through `maxdim`.
///
/// `Xₙ = Gⁿ`, degenerate tuples included, with `φ([a]) = a`,
/// `w[a,b] = [a][b][ab]⁻¹`,
/// `δ₃[a,b,c] = [a,bc][ab,c]⁻¹[a,b]⁻¹[b,c]^{[a]⁻¹}` and, for `n ≥ 4`,
/// `δ[a₁,…,aₙ] = [a₂,…,aₙ]·a₁⁻¹ + Σᵢ (−1)ⁱ[…,aᵢaᵢ₊₁,…] + (−1)ⁿ[a₁,…,aₙ₋₁]`.
pub fn standard_resolution(group: &Group, maxdim: usize) -> Result<CrossedComplex> {
    if maxdim < 2 {
        return Err(Error::Dimension("standard resolution needs maxdim ≥ 2".into()));
    }
    let elems = group.elements()?;
    let g = group;
    let b1 = |a: &GroupElem| bracket(g, std::slice::from_ref(a));
    let x1: Vec<(Gen, GroupElem)> = elems.iter().map(|a| (b1(a), a.clone())).collect();
    let mut x2 = Vec::with_capacity(elems.len() * elems.len());
    for a in &elems {
        for b in &elems {
            let ab = g.mul(a, b)?;
            let w = Word::gen(&b1(a))
                .mul(&Word::gen(&b1(b)))
                .mul(&Word::letter(&b1(&ab), -1));
            x2.push((bracket(g, &[a.clone(), b.clone()]), w));
        }
    }
    let name = format!("Fst({})", group_label(group));
    let mut cx = CrossedComplex::new(name, group.clone(), x1, x2)?;
    if maxdim >= 3 {
        let mut x3 = Vec::new();
        for (a, b, c) in itertools::iproduct!(&elems, &elems, &elems) {
            let ab = g.mul(a, b)?;
            let bc = g.mul(b, c)?;
            let pair = |u: &GroupElem, v: &GroupElem| bracket(g, &[u.clone(), v.clone()]);
            let d = Dim2Elem::from_factors(vec![
                Factor::new(pair(a, &bc), 1, Word::identity()),
                Factor::new(pair(&ab, c), -1, Word::identity()),
                Factor::new(pair(a, b), -1, Word::identity()),
                Factor::new(pair(b, c), 1, Word::letter(&b1(a), -1)),
            ]);
            x3.push((bracket(g, &[a.clone(), b.clone(), c.clone()]), d));
        }
        cx.push_dim3(x3)?;
    }
    for n in 4..=maxdim {
        let mut gens = Vec::new();
        for tuple in (0..n).map(|_| elems.iter().cloned()).multi_cartesian_product() {
            gens.push((bracket(g, &tuple), bar_boundary(g, &tuple)?));
        }
        cx.push_dim(gens)?;
    }
    Ok(cx)
}

fn bar_boundary(g: &Group, t: &[GroupElem]) -> Result<ModuleElem> {
    let n = t.len();
    let mut out = ModuleElem::zero();
    let first = GroupRingElem::from_elem(g.inv(&t[0])?);
    out.add_term(&bracket(g, &t[1..]), &first);
    for i in 0..n - 1 {
        let mut face: Vec<GroupElem> = Vec::with_capacity(n - 1);
        face.extend_from_slice(&t[..i]);
        face.push(g.mul(&t[i], &t[i + 1])?);
        face.extend_from_slice(&t[i + 2..]);
        let sign: i64 = if (i + 1) % 2 == 0 { 1 } else { -1 };
        out.add_term(&bracket(g, &face), &signed_one(g, sign));
    }
    let sign: i64 = if n.is_multiple_of(2) { 1 } else { -1 };
    out.add_term(&bracket(g, &t[..n - 1]), &signed_one(g, sign));
    Ok(out)
}

fn signed_one(g: &Group, sign: i64) -> GroupRingElem {
    GroupRingElem::from_terms([(g.identity(), sign.into())])
}

fn group_label(g: &Group) -> String {
    match g {
        Group::Cyclic(c) => format!("C{}", c.modulus()),
        _ => format!("order {}", g.order().map_or("∞".into(), |n| n.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relator_of_t_t() {
        let c2 = Group::cyclic(2);
        let cx = standard_resolution(&c2, 3).unwrap();
        assert_eq!(cx.counts(), vec![2, 4, 8]);
        assert_eq!(
            cx.relator(&Gen::new("[t,t]")).unwrap().to_string(),
            "[t] [t] [1]^-1"
        );
        assert_eq!(
            cx.delta3_of(&Gen::new("[t,t,t]")).unwrap().to_string(),
            "[t,1] . [1,t]^-1 . [t,t]^-1 . [t,t]^{[t]^-1}"
        );
    }

    #[test]
    fn bar_boundary_in_dimension_four() {
        let c2 = Group::cyclic(2);
        let cx = standard_resolution(&c2, 4).unwrap();
        let d = cx.delta_module_of(4, &Gen::new("[t,t,t,t]")).unwrap();
        assert_eq!(
            d.format(&c2),
            "[1,t,t] * (-1 1) + [t,1,t] * (1 1) + [t,t,1] * (-1 1) + [t,t,t] * (1 1 + 1 t)"
        );
    }
}
