use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::complex::CrossedComplex;
use super::dim2::Dim2Elem;
use super::module::ModuleElem;
use super::report::{CheckLine, Report};
use super::sample::{random_dim2, random_word};
use crate::error::Result;
use crate::exec::Exec;
use crate::words::{Gen, Word};

#[derive(Clone, Copy, Debug)]
pub struct ValidateOptions {
    /// Sampled elements per crossed module law.
    pub samples: usize,
    pub seed: u64,
    pub exec: Exec,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        ValidateOptions {
            samples: 1000,
            seed: 0,
            exec: Exec::default(),
        }
    }
}

struct Sample {
    c: Dim2Elem,
    d: Dim2Elem,
    u: Word,
}

/// Check the crossed complex axioms.
///
/// Exhaustive on generators: relators die in the group, and `δδ` is trivial
/// in every dimension. Sampled: CM1, CM2, triviality of Peiffer commutators
/// under `δ₂`, and equivariance of the abelianization.
pub fn validate_axioms(cx: &CrossedComplex, opts: &ValidateOptions) -> Report {
    let mut report = Report::new();
    let exec = opts.exec;

    let x2: Vec<Gen> = cx.basis(2).map(<[Gen]>::to_vec).unwrap_or_default();
    report.push(sweep(exec, "relators", 2, &x2, |x| {
        let g = cx.phi().eval(cx.relator(x)?)?;
        Ok(cx.group().is_identity(&g))
    }));

    for n in 3..=cx.maxdim() {
        let basis: Vec<Gen> = cx.basis(n).map(<[Gen]>::to_vec).unwrap_or_default();
        let line = match n {
            3 => sweep(exec, "ddzero", 3, &basis, |x| {
                Ok(cx.delta2(cx.delta3_of(x)?)?.is_identity())
            }),
            4 => sweep(exec, "ddzero", 4, &basis, |x| {
                cx.is_trivial2(&cx.delta3(cx.delta_module_of(4, x)?)?)
            }),
            n => sweep(exec, "ddzero", n, &basis, |x| {
                Ok(cx.delta_module(n - 1, cx.delta_module_of(n, x)?)?.is_zero())
            }),
        };
        report.push(line);
    }

    let x1 = cx.alphabet().gens().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let samples: Vec<Sample> = (0..opts.samples)
        .map(|_| Sample {
            c: random_dim2(&mut rng, &x1, &x2, 3, 6),
            d: random_dim2(&mut rng, &x1, &x2, 3, 6),
            u: random_word(&mut rng, &x1, 6),
        })
        .collect();

    report.push(sweep(exec, "cm1", 2, &samples, |s| {
        Ok(cx.delta2(&s.c.act(&s.u))? == cx.delta2(&s.c)?.conj(&s.u))
    }));
    report.push(sweep(exec, "cm2", 2, &samples, |s| {
        let dd = cx.delta2(&s.d)?;
        cx.eq2(&s.c.mul(&s.d), &s.d.mul(&s.c.act(&dd)))
    }));
    report.push(sweep(exec, "peiffer", 2, &samples, |s| {
        Ok(cx.delta2(&cx.peiffer(&s.c, &s.d)?)?.is_identity())
    }));
    report.push(sweep(exec, "equivariance", 2, &samples, |s| {
        let lhs = cx.abelianize2(&s.c.act(&s.u))?;
        let g = cx.phi().eval(&s.u)?;
        let rhs: ModuleElem = cx.abelianize2(&s.c)?.act(&g, cx.group())?;
        Ok(lhs == rhs)
    }));
    report
}

trait Label {
    fn label(&self) -> String;
}

impl Label for Gen {
    fn label(&self) -> String {
        self.to_string()
    }
}

impl Label for Sample {
    fn label(&self) -> String {
        format!("c = {}; d = {}; u = {}", self.c, self.d, self.u)
    }
}

fn sweep<T, F>(exec: Exec, check: &str, dim: usize, items: &[T], f: F) -> CheckLine
where
    T: Label + Sync,
    F: Fn(&T) -> Result<bool> + Sync + Send,
{
    let outcomes = exec.map(items, |x| {
        let r = f(x);
        let label = if matches!(r, Ok(true)) { String::new() } else { x.label() };
        (label, r)
    });
    CheckLine::from_outcomes(check, dim, outcomes)
}
