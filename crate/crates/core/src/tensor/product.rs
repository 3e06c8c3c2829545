//! Tensor products and graph tensor products of free crossed complexes.

use std::collections::{BTreeMap, BTreeSet};

use super::bim::{pair_name, Bimorphism};
use crate::crossed::{CrossedComplex, Dim2Elem, Element, ModuleElem};
use crate::error::{Error, Result};
use crate::groups::{GraphSpec, Group, GroupElem};
use crate::resolutions::pad;
use crate::words::{Gen, Word};

/// A built tensor product together with the bimorphism of its last step.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    complex: CrossedComplex,
    bim: Bimorphism,
}

impl TensorProduct {
    pub fn complex(&self) -> &CrossedComplex {
        &self.complex
    }

    pub fn into_complex(self) -> CrossedComplex {
        self.complex
    }

    pub fn bimorphism(&self) -> &Bimorphism {
        &self.bim
    }

    /// `θ(x, y)` for `x` of dimension `m` in the left factor and `y` of
    /// dimension `n` in the right factor, in basis form.
    pub fn bim_eval(&self, x: &Element, m: usize, y: &Element, n: usize) -> Result<Element> {
        self.bim.eval(x, m, y, n)
    }

    /// `δ` of a generator of the product.
    pub fn tensor_boundary(&self, x: &Gen) -> Result<Element> {
        self.complex.boundary(x)
    }
}

/// `A ⊗ B` over `G × H`, built as the graph tensor product over one edge
/// with vertices `A` and `B`.
pub fn tensor_product(a: &CrossedComplex, b: &CrossedComplex, maxdim: usize) -> Result<TensorProduct> {
    let graph = GraphSpec::complete(vec!["A".into(), "B".into()]);
    graph_tensor_product(&graph, &[a.clone(), b.clone()], maxdim)
}

pub fn tensor_complex(a: &CrossedComplex, b: &CrossedComplex, maxdim: usize) -> Result<CrossedComplex> {
    Ok(tensor_product(a, b, maxdim)?.into_complex())
}

/// `⊗_Γ C_v` over the graph product `G_Γ`: generators are the tuples of
/// positive-dimensional generators supported on cliques of `Γ`.
pub fn graph_tensor(graph: &GraphSpec, complexes: &[CrossedComplex], maxdim: usize) -> Result<CrossedComplex> {
    Ok(graph_tensor_product(graph, complexes, maxdim)?.into_complex())
}

/// Embedding of vertex `v`'s group into the graph product.
fn embedding(group: &Group, offsets: &[usize], v: usize, vertex_group: &Group) -> impl Fn(&GroupElem) -> Result<GroupElem> {
    let gp = match group {
        Group::GraphProduct(gp) => gp.clone(),
        _ => unreachable!("graph tensor groups are graph products"),
    };
    let off = offsets[v];
    let nested = matches!(vertex_group, Group::GraphProduct(_));
    move |e: &GroupElem| {
        let raw: Vec<(usize, GroupElem)> = match e {
            GroupElem::Graph(s) if nested => s.iter().map(|(u, g)| (off + *u as usize, g.clone())).collect(),
            e => vec![(off, e.clone())],
        };
        gp.normalize(&raw)
    }
}

pub fn graph_tensor_product(
    graph: &GraphSpec,
    complexes: &[CrossedComplex],
    maxdim: usize,
) -> Result<TensorProduct> {
    if maxdim < 2 {
        return Err(Error::Dimension("tensor products need maxdim ≥ 2".into()));
    }
    let adj = graph.adjacency()?;
    let n = graph.vertices.len();
    if n == 0 || complexes.len() != n {
        return Err(Error::InvalidGraph(format!(
            "{n} vertices but {} complexes",
            complexes.len()
        )));
    }
    let groups: Vec<Group> = complexes.iter().map(|c| c.group().clone()).collect();
    let group = Group::graph_product(graph, &groups)?;
    let mut offsets = Vec::with_capacity(n);
    let mut acc = 0;
    for g in &groups {
        offsets.push(acc);
        acc += match g {
            Group::GraphProduct(gp) => gp.atoms().len(),
            _ => 1,
        };
    }

    let mut seen = BTreeSet::new();
    let clash = complexes
        .iter()
        .flat_map(|c| (1..=c.maxdim()).flat_map(move |d| c.basis(d).unwrap_or_default().iter()))
        .any(|x| !seen.insert(x.clone()));
    let mut factors = Vec::with_capacity(n);
    for (v, cx) in complexes.iter().enumerate() {
        let label = &graph.vertices[v];
        let rename = |x: &Gen| if clash { Gen::new(format!("{x}@{label}")) } else { x.clone() };
        let embed = embedding(&group, &offsets, v, &groups[v]);
        let mut r = cx.rebase(&group, &embed, &rename)?;
        pad(&mut r, maxdim)?;
        let mut tf = BTreeMap::new();
        for d in 1..=r.maxdim() {
            for (x, orig) in r.basis(d)?.iter().zip(cx.basis(d).unwrap_or_default()) {
                let f = match cx.tensor_factors().get(orig) {
                    Some(f) => f.clone(),
                    None => vec![format!("{orig}@{label}")],
                };
                tf.insert(x.clone(), f);
            }
        }
        r.set_tensor_factors(tf);
        factors.push(r);
    }

    let mut support: BTreeMap<Gen, BTreeSet<usize>> = BTreeMap::new();
    for d in 1..=factors[0].maxdim() {
        for x in factors[0].basis(d)? {
            support.insert(x.clone(), BTreeSet::from([0]));
        }
    }
    let mut current = factors[0].clone();
    let mut bim = None;
    for (k, right) in factors.into_iter().enumerate().skip(1) {
        let (t, b) = tensor_step(&current, &right, &mut support, |s| s.iter().all(|&u| adj[u][k]), k, maxdim)?;
        current = t;
        bim = Some(b);
    }
    let bim = match bim {
        Some(b) => b,
        None => Bimorphism {
            left: current.clone(),
            right: current.clone(),
            pairs: BTreeMap::new(),
        },
    };
    let names: Vec<&str> = complexes.iter().map(|c| c.name()).collect();
    current.set_name(names.join(" (tensor) "));
    Ok(TensorProduct { complex: current, bim })
}

/// `L ⊗ C` restricted to pairs `a ⊗ c` with `allowed(support(a))`.
fn tensor_step(
    left: &CrossedComplex,
    right: &CrossedComplex,
    support: &mut BTreeMap<Gen, BTreeSet<usize>>,
    allowed: impl Fn(&BTreeSet<usize>) -> bool,
    k: usize,
    maxdim: usize,
) -> Result<(CrossedComplex, Bimorphism)> {
    let group = left.group().clone();
    let mut pairs = BTreeMap::new();
    // pairs by total dimension, left dimension descending
    let mut by_dim: Vec<Vec<(Gen, usize, Gen, usize)>> = vec![Vec::new(); maxdim + 1];
    for (d, slot) in by_dim.iter_mut().enumerate().skip(2) {
        for m in (1..d).rev() {
            let nn = d - m;
            if m > left.maxdim() || nn > right.maxdim() {
                continue;
            }
            for a in left.basis(m)? {
                if !allowed(&support[a]) {
                    continue;
                }
                for c in right.basis(nn)? {
                    let p = pair_name(a, c);
                    pairs.insert((a.clone(), c.clone()), p.clone());
                    slot.push((a.clone(), m, c.clone(), nn));
                }
            }
        }
    }
    let bim = Bimorphism {
        left: left.clone(),
        right: right.clone(),
        pairs,
    };

    let mut tf = left.tensor_factors().clone();
    tf.extend(right.tensor_factors().iter().map(|(x, f)| (x.clone(), f.clone())));
    for slot in &by_dim {
        for (a, _, c, _) in slot {
            let mut f = left.tensor_factors().get(a).cloned().unwrap_or_default();
            f.extend(right.tensor_factors().get(c).cloned().unwrap_or_default());
            tf.insert(pair_name(a, c), f);
            let mut s = support[a].clone();
            s.insert(k);
            support.insert(pair_name(a, c), s);
        }
    }
    for d in 1..=right.maxdim() {
        for c in right.basis(d)? {
            support.insert(c.clone(), BTreeSet::from([k]));
        }
    }

    let ls = left.strata();
    let rs = right.strata();
    let x1: Vec<(Gen, GroupElem)> = ls
        .dim1()
        .chain(rs.dim1())
        .map(|(x, g)| (x.clone(), g.clone()))
        .collect();
    let mut x2: Vec<(Gen, Word)> = ls
        .dim2()
        .chain(rs.dim2())
        .map(|(x, w)| (x.clone(), w.clone()))
        .collect();
    for (a, m, c, nn) in &by_dim[2] {
        x2.push((pair_name(a, c), expect_word(bim.boundary(a, *m, c, *nn)?)?));
    }
    let mut t = CrossedComplex::new("", group, x1, x2)?;
    if maxdim >= 3 {
        let mut x3: Vec<(Gen, Dim2Elem)> = ls
            .dim3()
            .chain(rs.dim3())
            .map(|(x, c)| (x.clone(), c.clone()))
            .collect();
        for (a, m, c, nn) in &by_dim[3] {
            x3.push((pair_name(a, c), expect_dim2(bim.boundary(a, *m, c, *nn)?)?));
        }
        t.push_dim3(x3)?;
    }
    for (d, slot) in by_dim.iter().enumerate().skip(4) {
        let mut xd: Vec<(Gen, ModuleElem)> = ls
            .module(d)
            .chain(rs.module(d))
            .map(|(x, m)| (x.clone(), m.clone()))
            .collect();
        for (a, m, c, nn) in slot {
            xd.push((pair_name(a, c), expect_module(bim.boundary(a, *m, c, *nn)?)?));
        }
        t.push_dim(xd)?;
    }
    t.set_tensor_factors(tf);
    Ok((t, bim))
}

fn expect_word(e: Element) -> Result<Word> {
    match e {
        Element::Word(w) => Ok(w),
        _ => Err(Error::Dimension("expected a word".into())),
    }
}

fn expect_dim2(e: Element) -> Result<Dim2Elem> {
    match e {
        Element::Dim2(c) => Ok(c),
        _ => Err(Error::Dimension("expected a dimension-2 element".into())),
    }
}

fn expect_module(e: Element) -> Result<ModuleElem> {
    match e {
        Element::Module(m) => Ok(m),
        _ => Err(Error::Dimension("expected a module element".into())),
    }
}
