//! Report builders. Every command produces a JSON value; the text
//! renderer only ever reads that value.

use bwbcalc::{
    analyze_normality_page, analyze_rationality, build_resolution1, build_resolution2,
    bwb_irreducible, cohomology, e1_page, normalize, pushforward_fiber, rho_shift, schur_dim,
    BundleExpr, BwbResult, GlWeight, Mult, Params, Partition, ResolutionComplex, Stage,
};
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

fn envelope(command: &str, body: impl Serialize) -> Value {
    let mut v = serde_json::to_value(body).expect("reports serialize");
    let obj = v.as_object_mut().expect("report bodies are objects");
    obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
    obj.insert("command".into(), json!(command));
    v
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum BwbOut {
    Vanishes,
    Cohomology {
        degree: usize,
        weight: GlWeight,
        dim: Mult,
        trivial: bool,
    },
}

pub fn bwb(n: usize, lambda: &Partition, m: i64) -> bwbcalc::Result<Value> {
    let result = match bwb_irreducible(n, lambda, m)? {
        BwbResult::Vanishes => BwbOut::Vanishes,
        BwbResult::Cohomology { degree, weight } => BwbOut::Cohomology {
            degree,
            dim: weight.dim(),
            trivial: weight.is_trivial(),
            weight,
        },
    };
    #[derive(Serialize)]
    struct Out<'a> {
        n: usize,
        lambda: &'a Partition,
        m: i64,
        rho_shift: Vec<i64>,
        result: BwbOut,
    }
    Ok(envelope(
        "bwb",
        Out {
            n,
            lambda,
            m,
            rho_shift: rho_shift(n, lambda, m),
            result,
        },
    ))
}

#[derive(Serialize)]
struct RepOut<'a> {
    weight: &'a GlWeight,
    mult: Mult,
    dim: Mult,
}

pub fn decompose(e: &BundleExpr, n: usize) -> bwbcalc::Result<Value> {
    let sum = normalize(e, n)?;
    let table = cohomology(e, n)?;
    #[derive(Serialize)]
    struct Summand<'a> {
        lambda: &'a Partition,
        m: i64,
        mult: Mult,
        dim: Mult,
    }
    #[derive(Serialize)]
    struct Degree<'a> {
        degree: usize,
        dim: Mult,
        reps: Vec<RepOut<'a>>,
    }
    #[derive(Serialize)]
    struct Out<'a> {
        expr: String,
        n: usize,
        rank: Mult,
        summands: Vec<Summand<'a>>,
        cohomology: Vec<Degree<'a>>,
        euler_characteristic: i128,
    }
    let summands = sum
        .iter()
        .map(|(lambda, m, mult)| Summand {
            lambda,
            m,
            mult,
            dim: schur_dim(lambda, n - 1),
        })
        .collect();
    let degrees = table
        .by_degree
        .iter()
        .map(|(&degree, reps)| Degree {
            degree,
            dim: table.dim(degree),
            reps: reps
                .iter()
                .map(|(w, &mult)| RepOut {
                    weight: w,
                    mult,
                    dim: w.dim(),
                })
                .collect(),
        })
        .collect();
    Ok(envelope(
        "decompose",
        Out {
            expr: e.to_string(),
            n,
            rank: sum.total_dim(),
            summands,
            cohomology: degrees,
            euler_characteristic: table.euler_characteristic(),
        },
    ))
}

fn complex(n: usize, k: usize, l: usize, stage: Stage) -> bwbcalc::Result<ResolutionComplex> {
    match stage {
        Stage::Fiber => build_resolution1(n, k, l),
        Stage::Base => build_resolution2(n, k, l),
    }
}

pub fn resolve(
    n: usize,
    k: usize,
    l: usize,
    stage: Stage,
    with_page: bool,
) -> bwbcalc::Result<Value> {
    let c = complex(n, k, l, stage)?;
    #[derive(Serialize)]
    struct Term {
        index: usize,
        expr: String,
        rank: Mult,
    }
    #[derive(Serialize)]
    struct Out {
        params: Params,
        stage: Stage,
        resolves: String,
        terms: Vec<Term>,
        euler_rank: i128,
        #[serde(skip_serializing_if = "Option::is_none")]
        page: Option<Value>,
        #[serde(skip_serializing_if = "Option::is_none")]
        pushforward_matches: Option<bool>,
    }
    let page = if with_page {
        Some(serde_json::to_value(e1_page(&c)?).expect("pages serialize"))
    } else {
        None
    };
    // the fiber complex is always checked against the closed form it pushes to
    let pushforward_matches = match stage {
        Stage::Fiber => {
            let pushed = pushforward_fiber(&c)?;
            let closed = build_resolution2(n, k, l)?;
            let mut same = pushed.len() == closed.len();
            for (a, b) in pushed.terms.iter().zip(&closed.terms) {
                same &= normalize(&a.expr, n)? == normalize(&b.expr, n)?;
            }
            Some(same)
        }
        Stage::Base => None,
    };
    Ok(envelope(
        "resolve",
        Out {
            params: c.params,
            stage: c.stage,
            resolves: c.augmentation(),
            terms: c
                .terms
                .iter()
                .map(|t| Term {
                    index: t.index,
                    expr: t.expr.to_string(),
                    rank: t.expr.rank(n),
                })
                .collect(),
            euler_rank: c.euler_rank(),
            page,
            pushforward_matches,
        },
    ))
}

pub fn rationality(n: usize, k: usize, l: usize) -> bwbcalc::Result<Value> {
    let page = e1_page(&build_resolution2(n, k, l)?)?;
    Ok(envelope(
        "rationality",
        json!({ "params": page.params, "page": page, "verdict": analyze_rationality(&page) }),
    ))
}

pub fn normality(n: usize, k: usize, l: usize) -> bwbcalc::Result<Value> {
    let page = e1_page(&build_resolution2(n, k, l)?)?;
    Ok(envelope(
        "normality",
        json!({ "params": page.params, "page": page, "verdict": analyze_normality_page(&page) }),
    ))
}

pub fn sweep(n: usize, k: usize, l_max: usize) -> bwbcalc::Result<Value> {
    Params::new(n, k, l_max)?;
    Ok(envelope("sweep", bwbcalc::sweep(n, k, l_max)?))
}
