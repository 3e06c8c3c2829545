use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

use crossed_kernel::crossed::{validate_axioms, ValidateOptions};
use crossed_kernel::resolutions::cyclic::{norm, one_minus_t};
use crossed_kernel::resolutions::snf::IntMatrix;
use crossed_kernel::resolutions::{
    cyclic_resolution, exactness_check, homology_over_z, standard_resolution, to_chain_complex,
};
use crossed_kernel::{Exec, Group, ModuleElem};

fn small_groups() -> Vec<Group> {
    ["C2", "C3", "C4", "C5", "C6", "C2xC2", "S3"]
        .iter()
        .map(|n| Group::named(n).unwrap())
        .collect()
}

#[test]
fn standard_resolution_counts() {
    for g in small_groups() {
        let n = g.order().unwrap() as usize;
        let cx = standard_resolution(&g, 3).unwrap();
        assert_eq!(cx.counts(), vec![n, n * n, n * n * n]);
    }
}

#[test]
fn standard_resolutions_validate() {
    let opts = ValidateOptions { samples: 100, seed: 1, exec: Exec::default() };
    for g in small_groups() {
        let cx = standard_resolution(&g, 4).unwrap();
        let report = validate_axioms(&cx, &opts);
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }
}

#[test]
fn boundary_matrices_compose_to_zero() {
    for cx in [
        cyclic_resolution(4, 6).unwrap(),
        standard_resolution(&Group::named("S3").unwrap(), 3).unwrap(),
        standard_resolution(&Group::named("C2xC2").unwrap(), 4).unwrap(),
    ] {
        let ch = to_chain_complex(&cx, cx.maxdim()).unwrap();
        ch.check_dd().unwrap();
        for n in 2..=ch.maxdim() {
            assert!(ch.matrix(n - 1).unwrap().mul(&ch.matrix(n).unwrap()).is_zero(), "dim {n}");
            assert!(ch.augmented_matrix(n - 1).unwrap().mul(&ch.augmented_matrix(n).unwrap()).is_zero());
        }
    }
}

#[test]
fn cyclic_chain_boundaries_alternate() {
    for p in 2..=6u64 {
        let cx = cyclic_resolution(p, 5).unwrap();
        let ch = to_chain_complex(&cx, 5).unwrap();
        let g = ch.group().clone();
        for n in 2..=5 {
            let prev = ch.basis(n - 1)[0].clone();
            let expected = if n % 2 == 0 { norm(p) } else { one_minus_t(p) };
            let d = ch.boundary(n, 0);
            let up_to_sign = *d == ModuleElem::term(&prev, expected.clone())
                || *d == ModuleElem::term(&prev, expected.neg());
            assert!(up_to_sign, "p = {p}, n = {n}: {}", d.format(&g));
        }
    }
}

#[test]
fn homology_agrees_between_resolutions() {
    for p in 2..=5u64 {
        let cyc = cyclic_resolution(p, 4).unwrap();
        let st = standard_resolution(&Group::cyclic(p), 3).unwrap();
        for n in 1..=2 {
            assert_eq!(homology_over_z(&cyc, n).unwrap(), homology_over_z(&st, n).unwrap(), "p = {p}");
        }
    }
    let c2c2 = standard_resolution(&Group::named("C2xC2").unwrap(), 3).unwrap();
    assert_eq!(homology_over_z(&c2c2, 1).unwrap().to_string(), "[2,2]");
    assert_eq!(homology_over_z(&c2c2, 2).unwrap().to_string(), "[2]");
    let s3 = standard_resolution(&Group::named("S3").unwrap(), 3).unwrap();
    assert_eq!(homology_over_z(&s3, 1).unwrap().to_string(), "[2]");
    assert_eq!(homology_over_z(&s3, 2).unwrap().to_string(), "[]");
}

#[test]
fn exactness_and_truncation() {
    let cx = standard_resolution(&Group::named("C3").unwrap(), 3).unwrap();
    for n in 1..=2 {
        assert!(exactness_check(&cx, n).unwrap().exact, "dim {n}");
    }
    let short = cyclic_resolution(3, 2).unwrap();
    let e = exactness_check(&short, 2).unwrap();
    assert!(!e.exact);
    assert_eq!(e.kernel_rank, 2);
    assert_eq!(e.image_rank, 0);
    assert_eq!(e.homology.to_string(), "[0,0]");
    assert!(exactness_check(&short, 3).is_err());
    assert!(homology_over_z(&short, 2).is_err());
}

#[test]
fn infinite_groups_have_no_homology_matrices() {
    let cx = crossed_kernel::resolutions::infinite_cyclic("x", 3).unwrap();
    assert!(homology_over_z(&cx, 1).is_err());
}

fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

fn big(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
}

/// Rank by fraction-free Gaussian elimination.
fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let (m, n) = (a.len(), a[0].len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..n {
        let Some(p) = (rank..m).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(rank, p);
        for i in rank + 1..m {
            for j in col + 1..n {
                a[i][j] = (&a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j]) / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == m {
            break;
        }
    }
    rank
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<BigInt>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let s = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            s * &m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..1usize << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
        .collect()
}

/// Invariant factors as quotients of determinantal divisors.
fn minors_invariant_factors(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let (m, n) = (rows.len(), rows[0].len());
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=m.min(n) {
        let mut d = BigInt::zero();
        for rs in subsets(m, k) {
            for cs in subsets(n, k) {
                let sub: Vec<Vec<BigInt>> =
                    rs.iter().map(|&i| cs.iter().map(|&j| BigInt::from(rows[i][j])).collect()).collect();
                d = d.gcd(&det(&sub));
            }
        }
        if d.is_zero() {
            break;
        }
        out.push(&d / &prev);
        prev = d;
    }
    out
}

proptest! {
    #[test]
    fn snf_matches_oracles(rows in int_matrix()) {
        let m = big(&rows);
        prop_assert_eq!(m.rank(), bareiss_rank(&rows));
        prop_assert_eq!(m.invariant_factors(), minors_invariant_factors(&rows));
    }
}
