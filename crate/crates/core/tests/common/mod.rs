#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crossed_kernel::resolutions::enumerate_extensions;
use crossed_kernel::tensor::tensor_product;
use crossed_kernel::{
    CrossedComplex, Dim2Elem, Exec, Factor, Gen, Group, GroupElem, GroupRingElem, GroupTable, ModuleElem, Word,
};

pub fn g(s: &str) -> Gen {
    Gen::new(s)
}

pub fn presentation(x: &str, r: &str, p: u64) -> CrossedComplex {
    CrossedComplex::new(
        format!("<{x}|{r}>"),
        Group::cyclic(p),
        vec![(Gen::new(x), GroupElem::Cyclic(1))],
        vec![(Gen::new(r), Word::power(&Gen::new(x), p as i64))],
    )
    .unwrap()
}

/// `⟨x, y | x³, y², (xy)²⟩` over `S₃`.
pub fn s3_presentation() -> CrossedComplex {
    let t = GroupTable::symmetric3();
    let n = t.order() as u32;
    let (a, b) = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| t.element_order(a) == 3 && t.element_order(b) == 2 && t.element_order(t.mul(a, b)) == 2)
        .unwrap();
    let x = Gen::new("x");
    let y = Gen::new("y");
    CrossedComplex::new(
        "S3",
        Group::table(t),
        vec![(x.clone(), GroupElem::Table(a)), (y.clone(), GroupElem::Table(b))],
        vec![
            (Gen::new("r"), "x x x".parse().unwrap()),
            (Gen::new("s"), "y y".parse().unwrap()),
            (Gen::new("t"), "x y x y".parse().unwrap()),
        ],
    )
    .unwrap()
}

/// `Σ_{i<n} t^i` at atom `v` of the product group.
pub fn norm_at(v: u32, n: u64) -> GroupRingElem {
    GroupRingElem::from_terms((0..n as i64).map(|i| {
        let e = if i == 0 { GroupElem::Graph(vec![]) } else { GroupElem::Graph(vec![(v, GroupElem::Cyclic(i))]) };
        (e, BigInt::from(1))
    }))
}

const UNSET: usize = usize::MAX;

/// Every multiplication table on `0..n` with identity 0 that is a group,
/// by backtracking over Latin squares with associativity propagation.
pub fn all_group_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut t = vec![vec![UNSET; n]; n];
    for i in 0..n {
        t[0][i] = i;
        t[i][0] = i;
    }
    let mut out = Vec::new();
    if propagate(&mut t) {
        search(t, &mut out);
    }
    out
}

fn set(t: &mut [Vec<usize>], i: usize, j: usize, v: usize) -> bool {
    let n = t.len();
    if t[i][j] != UNSET {
        return t[i][j] == v;
    }
    if (0..n).any(|k| t[i][k] == v || t[k][j] == v) {
        return false;
    }
    t[i][j] = v;
    true
}

/// Forces `(ab)c = a(bc)` wherever one side is known, until nothing changes.
fn propagate(t: &mut [Vec<usize>]) -> bool {
    let n = t.len();
    loop {
        let mut changed = false;
        for a in 0..n {
            for b in 0..n {
                let ab = t[a][b];
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    let bc = t[b][c];
                    if bc == UNSET {
                        continue;
                    }
                    let (l, r) = (t[ab][c], t[a][bc]);
                    let ok = match (l == UNSET, r == UNSET) {
                        (false, false) => l == r,
                        (true, false) => {
                            changed = true;
                            set(t, ab, c, r)
                        }
                        (false, true) => {
                            changed = true;
                            set(t, a, bc, l)
                        }
                        (true, true) => true,
                    };
                    if !ok {
                        return false;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search(t: Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
    let n = t.len();
    let next_cell = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| t[i][j] == UNSET);
    let Some((i, j)) = next_cell else {
        out.push(t);
        return;
    };
    for v in 0..n {
        let mut next = t.clone();
        if set(&mut next, i, j, v) && propagate(&mut next) {
            search(next, out);
        }
    }
}

/// Abelian flag and sorted element orders.
pub fn invariant(t: &[Vec<usize>]) -> (bool, Vec<usize>) {
    let n = t.len();
    let abelian = (0..n).all(|a| (0..n).all(|b| t[a][b] == t[b][a]));
    let mut orders: Vec<usize> = (0..n)
        .map(|g| {
            let (mut x, mut k) = (g, 1);
            while x != 0 {
                x = t[x][g];
                k += 1;
            }
            k
        })
        .collect();
    orders.sort();
    (abelian, orders)
}

pub fn table_rows(t: &GroupTable) -> Vec<Vec<usize>> {
    t.rows().into_iter().map(|r| r.into_iter().map(|v| v as usize).collect()).collect()
}

/// Checks the boundaries of `⟨x | xᵖ⟩ ⊗ ⟨y | y^q⟩` against their closed forms.
pub fn check_golden(p: u64, q: u64) {
    let t = tensor_product(&presentation("x", "r", p), &presentation("y", "s", q), 4).unwrap();
    let cx = t.complex();
    assert_eq!(cx.counts(), vec![2, 3, 2, 1]);
    assert_eq!(cx.relator(&g("x(tensor)y")).unwrap().to_string(), "y^-1 x^-1 y x");

    let (x, y) = (g("x"), g("y"));
    let xy = g("x(tensor)y");

    // r⁻¹ r^y θ(x^p, y), θ(x^p, y) = Π_{i<p} θ(x,y)^{x^i}
    let mut ry = vec![Factor::new(g("r"), -1, Word::identity()), Factor::new(g("r"), 1, Word::gen(&y))];
    ry.extend((0..p).map(|i| Factor::new(xy.clone(), 1, Word::power(&x, i as i64))));
    let ry = Dim2Elem::from_factors(ry);
    let got = cx.delta3_of(&g("r(tensor)y")).unwrap();
    assert_eq!(got, &ry, "p = {p}, q = {q}");

    // θ(x, y^q)⁻¹ s⁻¹ s^x, θ(x, y^q) = Π_{j=q-1..0} θ(x,y)^{y^j}
    let mut xs: Vec<Factor> = (0..q).map(|j| Factor::new(xy.clone(), -1, Word::power(&y, j as i64))).collect();
    xs.push(Factor::new(g("s"), -1, Word::identity()));
    xs.push(Factor::new(g("s"), 1, Word::gen(&x)));
    let xs = Dim2Elem::from_factors(xs);
    let got = cx.delta3_of(&g("x(tensor)s")).unwrap();
    assert_eq!(got, &xs, "p = {p}, q = {q}");

    for (gen, d) in [("r(tensor)y", &ry), ("x(tensor)s", &xs)] {
        assert!(cx.delta2(d).unwrap().is_identity(), "{gen}");
    }

    // (δr ⊗ s) + (r ⊗ δs) = (x⊗s)·N_x + (r⊗y)·N_y
    let rs = ModuleElem::term(&g("x(tensor)s"), norm_at(0, p)).add(&ModuleElem::term(&g("r(tensor)y"), norm_at(1, q)));
    assert_eq!(cx.delta_module_of(4, &g("r(tensor)s")).unwrap(), &rs, "p = {p}, q = {q}");
    assert!(cx.is_trivial2(&cx.delta3(&rs).unwrap()).unwrap());
}

/// Classes of extensions of `k` by `C_p` against every group table of the
/// same order.
pub fn check_against_oracle(p: u64, k: GroupTable, expected: &[&str]) {
    let classes = enumerate_extensions(p, &k, Exec::default()).unwrap();
    let mut names: Vec<&str> = classes.iter().map(|c| c.name.as_str()).collect();
    names.sort();
    assert_eq!(names, expected);

    let n = p as usize * k.order();
    let oracle: BTreeSet<_> = all_group_tables(n).iter().map(|t| invariant(t)).collect();
    let found: BTreeSet<_> = classes
        .iter()
        .map(|c| {
            let t = c.members[0].group.table();
            assert_eq!(t.identity(), 0);
            invariant(&table_rows(t))
        })
        .collect();
    assert_eq!(found.len(), classes.len(), "classes must be distinguishable");
    assert_eq!(found, oracle);
}
