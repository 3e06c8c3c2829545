//! Graph products of cyclic and table groups.
//!
//! Elements are syllable sequences `(vertex, non-identity element)` kept in a
//! canonical form: the sequence is reduced (no identity syllables and no two
//! syllables of the same vertex separated only by syllables commuting with
//! it), and among all reorderings by commutation moves it is the one whose
//! vertex sequence is lexicographically least. Two syllable words represent
//! the same element exactly when their canonical forms coincide.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Group, GroupElem};
use crate::error::{Error, Result};

/// Finite undirected graph with well-ordered vertices, no loops and no
/// multiple edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl GraphSpec {
    pub fn new(vertices: Vec<String>, edges: Vec<(String, String)>) -> Result<Self> {
        let g = GraphSpec { vertices, edges };
        g.adjacency()?;
        Ok(g)
    }

    pub fn complete(vertices: Vec<String>) -> Self {
        let mut edges = Vec::new();
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                edges.push((vertices[i].clone(), vertices[j].clone()));
            }
        }
        GraphSpec { vertices, edges }
    }

    pub fn index_of(&self, v: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|w| w == v)
            .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex `{v}`")))
    }

    /// Validated adjacency matrix.
    pub fn adjacency(&self) -> Result<Vec<Vec<bool>>> {
        let n = self.vertices.len();
        let distinct: BTreeSet<&String> = self.vertices.iter().collect();
        if distinct.len() != n {
            return Err(Error::InvalidGraph("duplicate vertex".into()));
        }
        let mut adj = vec![vec![false; n]; n];
        for (a, b) in &self.edges {
            let (i, j) = (self.index_of(a)?, self.index_of(b)?);
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at `{a}`")));
            }
            if adj[i][j] {
                return Err(Error::InvalidGraph(format!("multiple edge `{a}`-`{b}`")));
            }
            adj[i][j] = true;
            adj[j][i] = true;
        }
        Ok(adj)
    }
}

/// Graph product `G_Γ` whose vertex groups are cyclic or table groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphProduct {
    names: Vec<String>,
    atoms: Vec<Group>,
    adj: Vec<Vec<bool>>,
}

impl GraphProduct {
    /// Graph product over `graph`. A vertex group that is itself a graph
    /// product is flattened: its vertices become vertices of the result, keep
    /// their own edges, and are joined to exactly the neighbours of the
    /// vertex they replace.
    pub fn new(graph: &GraphSpec, groups: &[Group]) -> Result<Self> {
        let adj = graph.adjacency()?;
        if groups.len() != graph.vertices.len() {
            return Err(Error::InvalidGraph(format!(
                "{} vertices but {} vertex groups",
                graph.vertices.len(),
                groups.len()
            )));
        }
        let mut names = Vec::new();
        let mut atoms = Vec::new();
        let mut owner = Vec::new();
        let mut inner: Vec<(usize, usize)> = Vec::new();
        for (v, g) in groups.iter().enumerate() {
            match g {
                Group::GraphProduct(gp) => {
                    let base = atoms.len();
                    for (k, a) in gp.atoms.iter().enumerate() {
                        names.push(format!("{}.{}", graph.vertices[v], gp.names[k]));
                        atoms.push(a.clone());
                        owner.push(v);
                    }
                    for i in 0..gp.atoms.len() {
                        for j in i + 1..gp.atoms.len() {
                            if gp.adj[i][j] {
                                inner.push((base + i, base + j));
                            }
                        }
                    }
                }
                atom => {
                    names.push(graph.vertices[v].clone());
                    atoms.push(atom.clone());
                    owner.push(v);
                }
            }
        }
        let n = atoms.len();
        let mut flat = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                if owner[i] != owner[j] && adj[owner[i]][owner[j]] {
                    flat[i][j] = true;
                }
            }
        }
        for (i, j) in inner {
            flat[i][j] = true;
            flat[j][i] = true;
        }
        Ok(GraphProduct {
            names,
            atoms,
            adj: flat,
        })
    }

    pub fn atoms(&self) -> &[Group] {
        &self.atoms
    }

    pub fn atom_names(&self) -> &[String] {
        &self.names
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn graph(&self) -> GraphSpec {
        let mut edges = Vec::new();
        for i in 0..self.atoms.len() {
            for j in i + 1..self.atoms.len() {
                if self.adj[i][j] {
                    edges.push((self.names[i].clone(), self.names[j].clone()));
                }
            }
        }
        GraphSpec {
            vertices: self.names.clone(),
            edges,
        }
    }

    /// Normal form of a raw syllable word, validating vertices and elements.
    pub fn normalize(&self, raw: &[(usize, GroupElem)]) -> Result<GroupElem> {
        for (v, e) in raw {
            let atom = self
                .atoms
                .get(*v)
                .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex index {v}")))?;
            if !atom.contains(e) {
                return Err(Error::NotInGroup(format!("{e:?} at vertex {}", self.names[*v])));
            }
        }
        let syl: Vec<(u32, GroupElem)> = raw.iter().map(|(v, e)| (*v as u32, e.clone())).collect();
        self.normal_form(syl)
    }

    pub(crate) fn normal_form(&self, raw: Vec<(u32, GroupElem)>) -> Result<GroupElem> {
        let reduced = self.reduce(raw)?;
        Ok(GroupElem::Graph(self.lex_least(reduced)))
    }

    /// Append syllables one at a time, merging each with the nearest
    /// same-vertex syllable it can commute back to.
    fn reduce(&self, raw: Vec<(u32, GroupElem)>) -> Result<Vec<(u32, GroupElem)>> {
        let mut out: Vec<(u32, GroupElem)> = Vec::with_capacity(raw.len());
        for (v, g) in raw {
            let atom = &self.atoms[v as usize];
            if atom.is_identity(&g) {
                continue;
            }
            let mut j = out.len();
            let mut merged = false;
            while j > 0 {
                let w = out[j - 1].0;
                if w == v {
                    let h = atom.mul(&out[j - 1].1, &g)?;
                    if atom.is_identity(&h) {
                        out.remove(j - 1);
                    } else {
                        out[j - 1].1 = h;
                    }
                    merged = true;
                    break;
                }
                if !self.adj[v as usize][w as usize] {
                    break;
                }
                j -= 1;
            }
            if !merged {
                out.push((v, g));
            }
        }
        Ok(out)
    }

    /// Lexicographically least linear extension of the commutation order.
    fn lex_least(&self, mut rest: Vec<(u32, GroupElem)>) -> Vec<(u32, GroupElem)> {
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..rest.len() {
                let v = rest[i].0 as usize;
                let free = rest[..i].iter().all(|(w, _)| self.adj[v][*w as usize]);
                if free && best.is_none_or(|b| rest[b].0 > rest[i].0) {
                    best = Some(i);
                }
            }
            let i = best.expect("first syllable is always movable");
            out.push(rest.remove(i));
        }
        out
    }

    pub fn mul(&self, a: &[(u32, GroupElem)], b: &[(u32, GroupElem)]) -> Result<GroupElem> {
        let mut raw = a.to_vec();
        raw.extend_from_slice(b);
        self.normal_form(raw)
    }

    pub fn inv(&self, a: &[(u32, GroupElem)]) -> Result<GroupElem> {
        let mut raw = Vec::with_capacity(a.len());
        for (v, g) in a.iter().rev() {
            raw.push((*v, self.atoms[*v as usize].inv(g)?));
        }
        self.normal_form(raw)
    }

    /// Whether the product is finite: finite atoms and every two non-trivial
    /// atoms adjacent.
    pub fn is_finite(&self) -> bool {
        let nontrivial: Vec<usize> = (0..self.atoms.len())
            .filter(|&i| self.atoms[i].order() != Some(1))
            .collect();
        self.atoms.iter().all(|a| a.order().is_some())
            && nontrivial
                .iter()
                .all(|&i| nontrivial.iter().all(|&j| i == j || self.adj[i][j]))
    }

    pub(crate) fn contains(&self, syl: &[(u32, GroupElem)]) -> bool {
        syl.iter().all(|(v, g)| {
            self.atoms
                .get(*v as usize)
                .is_some_and(|a| a.contains(g) && !a.is_identity(g))
        }) && self
            .normal_form(syl.to_vec())
            .map(|nf| nf == GroupElem::Graph(syl.to_vec()))
            .unwrap_or(false)
    }
}
