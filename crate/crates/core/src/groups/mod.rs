//! Coefficient groups with a solvable word problem and their group rings.

mod graph;
mod ring;
mod table;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use graph::{GraphProduct, GraphSpec};
pub use ring::GroupRingElem;
pub use table::GroupTable;

use crate::error::{Error, Result};
use crate::words::{Gen, Word};

/// Cyclic group `ℤ/p`, or the infinite cyclic group when `modulus == 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CyclicGroup {
    modulus: u64,
}

impl CyclicGroup {
    pub fn new(modulus: u64) -> Self {
        CyclicGroup { modulus }
    }

    pub fn infinite() -> Self {
        CyclicGroup { modulus: 0 }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_finite(&self) -> bool {
        self.modulus != 0
    }

    fn normalize(&self, k: i64) -> i64 {
        if self.modulus == 0 {
            k
        } else {
            k.rem_euclid(self.modulus as i64)
        }
    }
}

/// Element of a coefficient group, always in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElem {
    Table(u32),
    Cyclic(i64),
    /// Canonical syllable sequence of a graph product element.
    Graph(Vec<(u32, GroupElem)>),
}

/// A coefficient group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Group {
    Table(Arc<GroupTable>),
    Cyclic(CyclicGroup),
    GraphProduct(Arc<GraphProduct>),
}

impl Group {
    pub fn cyclic(modulus: u64) -> Self {
        Group::Cyclic(CyclicGroup::new(modulus))
    }

    pub fn table(t: GroupTable) -> Self {
        Group::Table(Arc::new(t))
    }

    pub fn graph_product(graph: &GraphSpec, groups: &[Group]) -> Result<Self> {
        Ok(Group::GraphProduct(Arc::new(GraphProduct::new(graph, groups)?)))
    }

    /// Direct product realised as the graph product over a single edge.
    pub fn direct_product(a: &Group, b: &Group) -> Result<Self> {
        Group::graph_product(
            &GraphSpec::complete(vec!["A".into(), "B".into()]),
            &[a.clone(), b.clone()],
        )
    }

    /// Parse a short group name: `C<n>` (`C0` or `Z` infinite), `S3`, `D<m>`
    /// (order `2m`), `Q8`, and direct products joined with `x`, e.g. `C2xC2`.
    pub fn named(name: &str) -> Result<Self> {
        let parts: Vec<&str> = name.split(['x', '×']).collect();
        if parts.len() > 1 {
            let mut acc = Self::named(parts[0])?.to_table()?;
            for p in &parts[1..] {
                acc = GroupTable::direct_product(&acc, &Self::named(p)?.to_table()?);
            }
            return Ok(Group::table(acc));
        }
        let bad = || Error::Parse(format!("unknown group name `{name}`"));
        if name == "Z" {
            return Ok(Group::cyclic(0));
        }
        if name == "S3" {
            return Ok(Group::table(GroupTable::symmetric3()));
        }
        if name == "Q8" {
            return Ok(Group::table(GroupTable::quaternion()));
        }
        if let Some(n) = name.strip_prefix('C') {
            return Ok(Group::cyclic(n.parse().map_err(|_| bad())?));
        }
        if let Some(m) = name.strip_prefix('D') {
            let m: usize = m.parse().map_err(|_| bad())?;
            if m == 0 {
                return Err(bad());
            }
            return Ok(Group::table(GroupTable::dihedral(m)));
        }
        Err(bad())
    }

    pub fn identity(&self) -> GroupElem {
        match self {
            Group::Table(t) => GroupElem::Table(t.identity()),
            Group::Cyclic(_) => GroupElem::Cyclic(0),
            Group::GraphProduct(_) => GroupElem::Graph(Vec::new()),
        }
    }

    pub fn is_identity(&self, e: &GroupElem) -> bool {
        *e == self.identity()
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<u64> {
        match self {
            Group::Table(t) => Some(t.order() as u64),
            Group::Cyclic(c) => c.is_finite().then_some(c.modulus),
            Group::GraphProduct(gp) => {
                if !gp.is_finite() {
                    return None;
                }
                gp.atoms().iter().map(|a| a.order()).product()
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn contains(&self, e: &GroupElem) -> bool {
        match (self, e) {
            (Group::Table(t), GroupElem::Table(i)) => (*i as usize) < t.order(),
            (Group::Cyclic(c), GroupElem::Cyclic(k)) => c.normalize(*k) == *k,
            (Group::GraphProduct(gp), GroupElem::Graph(s)) => gp.contains(s),
            _ => false,
        }
    }

    pub fn mul(&self, a: &GroupElem, b: &GroupElem) -> Result<GroupElem> {
        match (self, a, b) {
            (Group::Table(t), GroupElem::Table(x), GroupElem::Table(y)) => {
                Ok(GroupElem::Table(t.mul(*x, *y)))
            }
            (Group::Cyclic(c), GroupElem::Cyclic(x), GroupElem::Cyclic(y)) => {
                let s = x.checked_add(*y).ok_or(Error::Overflow)?;
                Ok(GroupElem::Cyclic(c.normalize(s)))
            }
            (Group::GraphProduct(gp), GroupElem::Graph(x), GroupElem::Graph(y)) => {
                if x.is_empty() {
                    return Ok(b.clone());
                }
                if y.is_empty() {
                    return Ok(a.clone());
                }
                gp.mul(x, y)
            }
            _ => Err(Error::MixedGroups),
        }
    }

    pub fn inv(&self, a: &GroupElem) -> Result<GroupElem> {
        match (self, a) {
            (Group::Table(t), GroupElem::Table(x)) => Ok(GroupElem::Table(t.inv(*x))),
            (Group::Cyclic(c), GroupElem::Cyclic(x)) => Ok(GroupElem::Cyclic(c.normalize(-x))),
            (Group::GraphProduct(gp), GroupElem::Graph(x)) => gp.inv(x),
            _ => Err(Error::MixedGroups),
        }
    }

    pub fn pow(&self, a: &GroupElem, k: i64) -> Result<GroupElem> {
        if let (Group::Cyclic(c), GroupElem::Cyclic(x)) = (self, a) {
            let s = x.checked_mul(k).ok_or(Error::Overflow)?;
            return Ok(GroupElem::Cyclic(c.normalize(s)));
        }
        let base = if k < 0 { self.inv(a)? } else { a.clone() };
        let mut acc = self.identity();
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(&acc, &base)?;
        }
        Ok(acc)
    }

    pub fn eq(&self, a: &GroupElem, b: &GroupElem) -> Result<bool> {
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::MixedGroups);
        }
        Ok(a == b)
    }

    /// All elements of a finite group, identity first.
    pub fn elements(&self) -> Result<Vec<GroupElem>> {
        let mut out: Vec<GroupElem> = match self {
            Group::Table(t) => (0..t.order() as u32).map(GroupElem::Table).collect(),
            Group::Cyclic(c) => {
                if !c.is_finite() {
                    return Err(Error::InfiniteGroup);
                }
                (0..c.modulus as i64).map(GroupElem::Cyclic).collect()
            }
            Group::GraphProduct(gp) => {
                if !gp.is_finite() {
                    return Err(Error::InfiniteGroup);
                }
                // every pair of non-trivial atoms commutes, so a normal form
                // is one syllable per atom in vertex order
                let mut acc: Vec<Vec<(u32, GroupElem)>> = vec![Vec::new()];
                for (v, atom) in gp.atoms().iter().enumerate() {
                    let elems = atom.elements()?;
                    let mut next = Vec::with_capacity(acc.len() * elems.len());
                    for prefix in &acc {
                        for e in &elems {
                            let mut s = prefix.clone();
                            if !atom.is_identity(e) {
                                s.push((v as u32, e.clone()));
                            }
                            next.push(s);
                        }
                    }
                    acc = next;
                }
                acc.into_iter().map(GroupElem::Graph).collect()
            }
        };
        let id = self.identity();
        if let Some(pos) = out.iter().position(|e| *e == id) {
            let e = out.remove(pos);
            out.insert(0, e);
        }
        Ok(out)
    }

    /// Multiplication table of a finite group, elements in [`Group::elements`] order.
    pub fn to_table(&self) -> Result<GroupTable> {
        if let Group::Table(t) = self {
            return Ok((**t).clone());
        }
        let elems = self.elements()?;
        let index: BTreeMap<&GroupElem, u32> =
            elems.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
        let mut rows = Vec::with_capacity(elems.len());
        for a in &elems {
            let mut row = Vec::with_capacity(elems.len());
            for b in &elems {
                row.push(index[&self.mul(a, b)?]);
            }
            rows.push(row);
        }
        GroupTable::new(rows)
    }

    /// Text form: `1` for the identity, `t`, `t^k` for cyclic groups, `g<i>`
    /// for table groups, `V:elem*W:elem` for graph products.
    pub fn format_elem(&self, e: &GroupElem) -> String {
        match (self, e) {
            (_, GroupElem::Table(i)) => {
                if self.is_identity(e) {
                    "1".into()
                } else {
                    format!("g{i}")
                }
            }
            (_, GroupElem::Cyclic(k)) => match k {
                0 => "1".into(),
                1 => "t".into(),
                k => format!("t^{k}"),
            },
            (Group::GraphProduct(gp), GroupElem::Graph(s)) => {
                if s.is_empty() {
                    return "1".into();
                }
                s.iter()
                    .map(|(v, g)| {
                        format!(
                            "{}:{}",
                            gp.atom_names()[*v as usize],
                            gp.atoms()[*v as usize].format_elem(g)
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("*")
            }
            (_, GroupElem::Graph(s)) => format!("{s:?}"),
        }
    }

    pub fn parse_elem(&self, s: &str) -> Result<GroupElem> {
        let bad = || Error::Parse(format!("bad group element `{s}`"));
        let s = s.trim();
        if s == "1" {
            return Ok(self.identity());
        }
        let e = match self {
            Group::Table(_) => GroupElem::Table(s.strip_prefix('g').ok_or_else(bad)?.parse().map_err(|_| bad())?),
            Group::Cyclic(_) => {
                let rest = s.strip_prefix('t').ok_or_else(bad)?;
                let k = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
                };
                return self.pow(&GroupElem::Cyclic(1), k);
            }
            Group::GraphProduct(gp) => {
                let mut raw = Vec::new();
                for part in s.split('*') {
                    let (v, g) = part.split_once(':').ok_or_else(bad)?;
                    let vi = gp
                        .atom_names()
                        .iter()
                        .position(|n| n == v)
                        .ok_or_else(bad)?;
                    raw.push((vi, gp.atoms()[vi].parse_elem(g)?));
                }
                return gp.normalize(&raw);
            }
        };
        if self.contains(&e) {
            Ok(e)
        } else {
            Err(Error::NotInGroup(s.into()))
        }
    }

    pub fn descriptor(&self) -> GroupDesc {
        match self {
            Group::Table(t) => GroupDesc::Table { table: t.rows() },
            Group::Cyclic(c) => GroupDesc::Cyclic { modulus: c.modulus },
            Group::GraphProduct(gp) => {
                let graph = gp.graph();
                let groups = graph
                    .vertices
                    .iter()
                    .zip(gp.atoms())
                    .map(|(v, g)| (v.clone(), g.descriptor()))
                    .collect();
                GroupDesc::GraphProduct {
                    graph: GraphDesc {
                        vertices: graph.vertices,
                        edges: graph.edges.into_iter().map(|(a, b)| [a, b]).collect(),
                        groups,
                    },
                }
            }
        }
    }

    pub fn from_descriptor(d: &GroupDesc) -> Result<Self> {
        match d {
            GroupDesc::Cyclic { modulus } => Ok(Group::cyclic(*modulus)),
            GroupDesc::Table { table } => Ok(Group::table(GroupTable::new(table.clone())?)),
            GroupDesc::GraphProduct { graph } => {
                let spec = GraphSpec::new(
                    graph.vertices.clone(),
                    graph
                        .edges
                        .iter()
                        .map(|[a, b]| (a.clone(), b.clone()))
                        .collect(),
                )?;
                let groups = graph
                    .vertices
                    .iter()
                    .map(|v| {
                        graph
                            .groups
                            .get(v)
                            .ok_or_else(|| Error::InvalidGraph(format!("no group for `{v}`")))
                            .and_then(Group::from_descriptor)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Group::graph_product(&spec, &groups)
            }
        }
    }
}

/// JSON descriptor of a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupDesc {
    Cyclic { modulus: u64 },
    Table { table: Vec<Vec<u32>> },
    GraphProduct { graph: GraphDesc },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDesc {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub groups: BTreeMap<String, GroupDesc>,
}

/// Homomorphism from a free group into a coefficient group, given on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    group: Group,
    images: BTreeMap<Gen, GroupElem>,
}

impl GroupHom {
    pub fn new(group: Group, images: BTreeMap<Gen, GroupElem>) -> Result<Self> {
        for (g, e) in &images {
            if !group.contains(e) {
                return Err(Error::NotInGroup(format!("image of `{g}`")));
            }
        }
        Ok(GroupHom { group, images })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn images(&self) -> &BTreeMap<Gen, GroupElem> {
        &self.images
    }

    pub fn image(&self, g: &Gen) -> Result<&GroupElem> {
        self.images
            .get(g)
            .ok_or_else(|| Error::Unassigned(g.to_string()))
    }

    pub fn eval(&self, u: &Word) -> Result<GroupElem> {
        let mut acc = self.group.identity();
        for l in u.letters() {
            let img = self.image(&l.gen)?;
            let f = if l.exp > 0 {
                img.clone()
            } else {
                self.group.inv(img)?
            };
            acc = self.group.mul(&acc, &f)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for GroupDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}
