use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context as _};
use serde::Deserialize;
use serde_json::json;

use crossed_kernel::crossed::{validate_axioms, CheckLine, ValidateOptions};
use crossed_kernel::groups::GraphSpec;
use crossed_kernel::resolutions::{
    cyclic_resolution, enumerate_extensions, exactness_check, homology_over_z, infinite_cyclic,
    standard_resolution,
};
use crossed_kernel::tensor::{graph_tensor, raw_boundary, tensor_complex};
use crossed_kernel::{CrossedComplex, Error, Exec, Gen, Group};

use crate::output::{report_text, value_line};
use crate::Source;

pub struct Context {
    pub seed: u64,
    pub samples: usize,
    pub pretty: bool,
}

pub struct Outcome {
    /// Printed to stdout, or written to `--out` when there is no artifact.
    pub text: String,
    /// A complex, written only to `--out`.
    pub artifact: Option<String>,
    pub passed: bool,
}

pub enum Failure {
    Input(anyhow::Error),
    Math(anyhow::Error),
}

type JobResult = std::result::Result<Outcome, Failure>;

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidComplex(_) | Error::EscapesSubcomplex(_) | Error::InvalidCocycle(_) => {
                Failure::Math(e.into())
            }
            _ => Failure::Input(e.into()),
        }
    }
}

fn input(e: anyhow::Error) -> Failure {
    Failure::Input(e)
}

fn read_complex(path: &Path) -> std::result::Result<CrossedComplex, Failure> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(input)?;
    CrossedComplex::from_json(&text)
        .with_context(|| format!("loading {}", path.display()))
        .map_err(input)
}

fn load(source: &Source, maxdim: Option<usize>) -> std::result::Result<CrossedComplex, Failure> {
    if let Some(name) = &source.standard {
        let g = Group::named(name)?;
        return Ok(standard_resolution(&g, maxdim.unwrap_or(3))?);
    }
    if let Some(p) = source.cyclic {
        return Ok(cyclic_resolution(p, maxdim.unwrap_or(4))?);
    }
    let path = source.complex.as_ref().ok_or_else(|| input(anyhow!("no source given")))?;
    read_complex(path)
}

fn text(s: String) -> JobResult {
    Ok(Outcome {
        text: s,
        artifact: None,
        passed: true,
    })
}

pub fn resolve(source: &Source, maxdim: usize) -> JobResult {
    let cx = load(source, Some(maxdim))?;
    text(cx.to_json() + "\n")
}

pub fn boundary(ctx: &Context, path: &Path, gen: &str) -> JobResult {
    let cx = read_complex(path)?;
    let x = Gen::new(gen);
    let d = cx.boundary(&x)?.format(cx.group());
    let raw = raw_boundary(&cx, &x);
    let mut out = if ctx.pretty {
        format!("δ({gen}) = {d}\n")
    } else {
        format!("{d}\n")
    };
    if let Some(r) = raw {
        out.push_str(&format!("raw: {r}\n"));
    }
    text(out)
}

pub fn verify(ctx: &Context, source: &Source, maxdim: Option<usize>, exactness: bool) -> JobResult {
    let cx = load(source, maxdim)?;
    let opts = ValidateOptions {
        samples: ctx.samples,
        seed: ctx.seed,
        exec: Exec::default(),
    };
    let mut report = validate_axioms(&cx, &opts);
    if exactness {
        if !cx.group().is_finite() {
            return Err(input(anyhow!("exactness needs a finite group")));
        }
        for n in 2..cx.maxdim() {
            let e = exactness_check(&cx, n).map(|e| e.exact);
            let label = format!("H_{n}");
            report.push(CheckLine::from_outcomes("exactness", n, vec![(label, e)]));
        }
    }
    Ok(Outcome {
        text: report_text("verify", ctx.seed, &report, ctx.pretty),
        artifact: None,
        passed: report.passed(),
    })
}

fn parse_dims(s: &str) -> anyhow::Result<(usize, usize)> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse()?, b.trim().parse()?),
        None => {
            let n = s.trim().parse()?;
            (n, n)
        }
    };
    if a > b {
        return Err(anyhow!("empty dimension range `{s}`"));
    }
    Ok((a, b))
}

pub fn homology(ctx: &Context, source: &Source, dims: &str) -> JobResult {
    let (a, b) = parse_dims(dims).with_context(|| format!("bad --dims `{dims}`")).map_err(input)?;
    let cx = load(source, Some(b + 1))?;
    let mut groups = Vec::new();
    for n in a..=b {
        groups.push((n, homology_over_z(&cx, n)?));
    }
    let out = if ctx.pretty {
        groups.iter().map(|(n, h)| format!("H_{n} = {h}\n")).collect()
    } else {
        let parts: Vec<String> = groups.iter().map(|(_, h)| h.to_string()).collect();
        parts.join(" ") + "\n"
    };
    text(out)
}

pub fn tensor(left: &Path, right: &Path, maxdim: usize) -> JobResult {
    let a = read_complex(left)?;
    let b = read_complex(right)?;
    let t = tensor_complex(&a, &b, maxdim)?;
    text(t.to_json() + "\n")
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum FactorSpec {
    /// Infinite cyclic group on one named generator.
    Infinite(String),
    Cyclic(u64),
    Standard(String),
    /// Path to a complex, relative to the graph file.
    Complex(PathBuf),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJob {
    vertices: Vec<String>,
    #[serde(default)]
    edges: Vec<[String; 2]>,
    factors: BTreeMap<String, FactorSpec>,
}

pub fn graph_product(ctx: &Context, path: &Path, maxdim: usize) -> JobResult {
    let raw = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(input)?;
    let job: GraphJob = serde_json::from_str(&raw)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(input)?;
    let graph = GraphSpec::new(
        job.vertices.clone(),
        job.edges.iter().map(|[a, b]| (a.clone(), b.clone())).collect(),
    )?;
    let base = path.parent().unwrap_or(Path::new("."));
    let mut complexes = Vec::new();
    for v in &job.vertices {
        let spec = job
            .factors
            .get(v)
            .ok_or_else(|| input(anyhow!("no factor for vertex `{v}`")))?;
        let cx = match spec {
            FactorSpec::Infinite(x) => infinite_cyclic(x, maxdim)?,
            FactorSpec::Cyclic(p) => cyclic_resolution(*p, maxdim)?,
            FactorSpec::Standard(g) => standard_resolution(&Group::named(g)?, maxdim)?,
            FactorSpec::Complex(p) => read_complex(&base.join(p))?,
        };
        complexes.push(cx);
    }
    let t = graph_tensor(&graph, &complexes, maxdim)?;
    let counts = t.counts();
    let out = if ctx.pretty {
        counts
            .iter()
            .enumerate()
            .map(|(i, c)| format!("dim {}: {c} generators\n", i + 1))
            .collect()
    } else {
        value_line(&json!({"counts": counts, "maxdim": maxdim, "name": t.name()}))
    };
    Ok(Outcome {
        text: out,
        artifact: Some(t.to_json() + "\n"),
        passed: true,
    })
}

pub fn extensions(ctx: &Context, p: u64, k: &str) -> JobResult {
    let kt = Group::named(k)?.to_table()?;
    let classes = enumerate_extensions(p, &kt, Exec::default())?;
    let mut out = String::new();
    for c in &classes {
        if ctx.pretty {
            out.push_str(&format!("{}: {} cocycle(s)\n", c.name, c.members.len()));
        } else {
            let members: Vec<_> = c.members.iter().map(|d| json!({"a": d.a, "k": d.k})).collect();
            let order = c.members[0].group.order();
            out.push_str(&value_line(&json!({"class": c.name, "members": members, "order": order})));
        }
    }
    if ctx.pretty {
        out.push_str(&format!("{} classes\n", classes.len()));
    } else {
        out.push_str(&value_line(&json!({"summary": {
            "classes": classes.len(),
            "command": "extensions",
            "k": k,
            "p": p,
        }})));
    }
    text(out)
}
