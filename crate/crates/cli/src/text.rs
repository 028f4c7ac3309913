//! Text rendering, driven entirely by the JSON report.

use std::fmt::Write;

use serde_json::Value;

use crate::grid;

pub fn render(v: &Value, verbose: u8) -> String {
    let mut out = String::new();
    match v["command"].as_str().unwrap_or("") {
        "bwb" => bwb(&mut out, v, verbose),
        "decompose" => decompose(&mut out, v),
        "resolve" => resolve(&mut out, v),
        "rationality" => {
            header(&mut out, v);
            out.push_str(&grid::render(&v["page"]));
            rationality_verdict(&mut out, &v["verdict"], &v["params"]);
        }
        "normality" => {
            header(&mut out, v);
            out.push_str(&grid::render(&v["page"]));
            normality_verdict(&mut out, &v["verdict"], &v["params"]);
        }
        "sweep" => sweep(&mut out, v),
        "reproduce" => reproduce(&mut out, v, verbose),
        other => {
            let _ = writeln!(out, "unknown report kind {other:?}");
        }
    }
    out
}

fn weight(w: &Value) -> String {
    let parts: Vec<String> = w
        .as_array()
        .into_iter()
        .flatten()
        .map(Value::to_string)
        .collect();
    format!("({})", parts.join(","))
}

/// `Σ^λQ ⊗ L^m` with trivial factors dropped.
fn irreducible(lambda: &Value, m: &Value) -> String {
    let lambda = lambda.as_str().unwrap_or("");
    let m = m.as_i64().unwrap_or(0);
    match (lambda.is_empty(), m) {
        (true, 0) => "O".into(),
        (true, _) => format!("L^{m}"),
        (false, 0) => format!("Σ^({lambda})Q"),
        (false, _) => format!("Σ^({lambda})Q ⊗ L^{m}"),
    }
}

fn reps(list: &Value, n: &Value) -> String {
    let terms: Vec<String> = list
        .as_array()
        .into_iter()
        .flatten()
        .map(|r| {
            let mult = r["mult"].to_string();
            let prefix = if mult == "1" {
                String::new()
            } else {
                format!("{mult}·")
            };
            format!("{prefix}Σ^{} C^{n}", weight(&r["weight"]))
        })
        .collect();
    terms.join(" ⊕ ")
}

fn header(out: &mut String, v: &Value) {
    let p = &v["params"];
    let _ = writeln!(out, "(n={}, k={}, l={})", p["n"], p["k"], p["l"]);
}

fn bwb(out: &mut String, v: &Value, verbose: u8) {
    if verbose > 0 {
        let _ = writeln!(out, "rho-shifted weight {}", weight(&v["rho_shift"]));
    }
    let r = &v["result"];
    if r["kind"] == "vanishes" {
        out.push_str("VANISHES (repetition in rho-shift)\n");
    } else if r["trivial"] == true {
        let _ = writeln!(out, "H^{} = trivial, dim 1", r["degree"]);
    } else {
        let _ = writeln!(
            out,
            "H^{} = Σ^{} C^{}  (dim {})",
            r["degree"],
            weight(&r["weight"]),
            v["n"],
            r["dim"]
        );
    }
}

fn decompose(out: &mut String, v: &Value) {
    let n = &v["n"];
    let _ = writeln!(
        out,
        "{} on P^{}",
        v["expr"].as_str().unwrap_or(""),
        n.as_u64().unwrap_or(1) - 1
    );
    let _ = writeln!(out, "rank {}", v["rank"]);
    out.push_str("summands:\n");
    for s in v["summands"].as_array().into_iter().flatten() {
        let _ = writeln!(
            out,
            "  {} ×{}  (rank {})",
            irreducible(&s["lambda"], &s["m"]),
            s["mult"],
            s["dim"]
        );
    }
    let degrees = v["cohomology"].as_array().cloned().unwrap_or_default();
    if degrees.is_empty() {
        out.push_str("all cohomology vanishes\n");
    } else {
        out.push_str("cohomology:\n");
        for d in &degrees {
            let _ = writeln!(
                out,
                "  H^{} = {}  (dim {})",
                d["degree"],
                reps(&d["reps"], n),
                d["dim"]
            );
        }
        out.push_str("  all other degrees vanish\n");
    }
    let _ = writeln!(out, "euler characteristic {}", v["euler_characteristic"]);
}

fn resolve(out: &mut String, v: &Value) {
    header(out, v);
    let _ = writeln!(
        out,
        "{} stage, resolving {}",
        v["stage"].as_str().unwrap_or(""),
        v["resolves"].as_str().unwrap_or("")
    );
    for t in v["terms"].as_array().into_iter().flatten() {
        let _ = writeln!(
            out,
            "T_{} = {}  (rank {})",
            t["index"],
            t["expr"].as_str().unwrap_or(""),
            t["rank"]
        );
    }
    let _ = writeln!(out, "alternating rank sum {}", v["euler_rank"]);
    if let Some(ok) = v["pushforward_matches"].as_bool() {
        let _ = writeln!(
            out,
            "pushforward matches the base complex: {}",
            if ok { "yes" } else { "NO" }
        );
    }
    if !v["page"].is_null() {
        out.push_str(&grid::render(&v["page"]));
    }
}

fn witness(out: &mut String, w: &Value, params: &Value) {
    let e = &w["entry"];
    let _ = writeln!(
        out,
        "  witness E1^{{{},{}}} (total degree {}): dim {} = {}",
        w["column"],
        w["row"],
        w["degree"],
        e["dim"],
        reps(&e["reps"], &params["n"])
    );
    for s in e["sources"].as_array().into_iter().flatten() {
        let _ = writeln!(
            out,
            "    from {} ×{}",
            irreducible(&s["lambda"], &s["m"]),
            s["mult"]
        );
    }
}

fn indeterminate(out: &mut String, v: &Value) {
    let cells: Vec<String> = v["entries"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|e| format!("({},{})", e[0], e[1]))
        .collect();
    let _ = writeln!(
        out,
        "INDETERMINATE: {} [{}]",
        v["reason"].as_str().unwrap_or(""),
        cells.join(" ")
    );
}

fn rationality_verdict(out: &mut String, v: &Value, params: &Value) {
    match v["kind"].as_str().unwrap_or("") {
        "all_vanish" => out.push_str("ALL VANISH: H^i(F) = 0 for every i > 0\n"),
        "non_vanishing" => {
            let _ = writeln!(out, "NON-VANISHING: H^{}(F) ≠ 0", v["degree"]);
            witness(out, &v["witness"], params);
        }
        _ => indeterminate(out, v),
    }
}

fn normality_verdict(out: &mut String, v: &Value, params: &Value) {
    match v["kind"].as_str().unwrap_or("") {
        "normal_consistent" => out.push_str("NORMAL-CONSISTENT: only H^0(T_0) reaches H^0(F)\n"),
        "not_normal" => {
            let _ = writeln!(
                out,
                "NOT NORMAL: an entry can only die by d_{} into H^0(F), so H^0(T_0) -> H^0(F) is not onto",
                v["page"]
            );
            witness(out, &v["witness"], params);
        }
        _ => indeterminate(out, v),
    }
}

fn short_rationality(v: &Value) -> String {
    match v["kind"].as_str().unwrap_or("") {
        "all_vanish" => "all vanish".into(),
        "non_vanishing" => format!("H^{} ≠ 0", v["degree"]),
        _ => "indeterminate".into(),
    }
}

fn short_normality(v: &Value) -> String {
    match v["kind"].as_str().unwrap_or("") {
        "normal_consistent" => "consistent".into(),
        "not_normal" => format!("not normal (d_{})", v["page"]),
        _ => "indeterminate".into(),
    }
}

fn sweep(out: &mut String, v: &Value) {
    let _ = writeln!(
        out,
        "sweep (n={}, k={}), l = 0..={}",
        v["n"], v["k"], v["l_max"]
    );
    let _ = writeln!(out, "{:>4}  {:<16}  normality", "l", "rationality");
    for row in v["rows"].as_array().into_iter().flatten() {
        let _ = writeln!(
            out,
            "{:>4}  {:<16}  {}",
            row["l"].to_string(),
            short_rationality(&row["rationality"]),
            short_normality(&row["normality"])
        );
    }
    let agg = &v["aggregate"];
    match agg["kind"].as_str().unwrap_or("") {
        "non_rational" => {
            let _ = writeln!(
                out,
                "NON-RATIONAL: H^{}(F_l) ≠ 0 first at l = {}",
                agg["degree"], agg["first_l"]
            );
        }
        _ => {
            let _ = writeln!(out, "NO OBSTRUCTION FOUND up to l = {}", agg["horizon"]);
        }
    }
    let _ = writeln!(out, "note: {}", v["disclaimer"].as_str().unwrap_or(""));
}

fn reproduce(out: &mut String, v: &Value, verbose: u8) {
    let _ = writeln!(
        out,
        "case {}: expecting {}",
        v["case"].as_str().unwrap_or(""),
        v["expected"].as_str().unwrap_or("")
    );
    for c in v["checks"].as_array().into_iter().flatten() {
        let status = if c["passed"] == true { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "  {status} {}", c["name"].as_str().unwrap_or(""));
        if c["passed"] != true || verbose > 0 {
            let _ = writeln!(
                out,
                "       observed {}",
                c["observed"].as_str().unwrap_or("")
            );
        }
    }
    if verbose > 0 && v["report"]["command"].is_string() {
        out.push_str(&render(&v["report"], verbose));
    }
    out.push_str(if v["passed"] == true {
        "REPRODUCED\n"
    } else {
        "MISMATCH\n"
    });
}
