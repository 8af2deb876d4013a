use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use scatseq::family::{self, FamilyParams};
use scatseq::gf::Poly;
use scatseq::numtheory::prime_power;
use scatseq::{Budget, Elem, Error, Field, FieldRef};

use crate::{Command, Criterion, Options};

pub const SCHEMA: u32 = 1;

pub const SEARCH_COLUMNS: [&str; 7] = ["c", "gamma", "root_free", "scattered", "d", "d2", "d3"];

pub struct Outcome {
    pub record: Value,
    /// Tabular rows for `search`, in [`SEARCH_COLUMNS`] order.
    pub rows: Option<Vec<Vec<String>>>,
    pub contradiction: bool,
}

#[derive(Default)]
struct Timer {
    enabled: bool,
    laps: BTreeMap<String, u128>,
}

impl Timer {
    fn time<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            self.laps
                .insert(name.to_string(), start.elapsed().as_millis());
        }
        out
    }

    fn attach(self, record: &mut Value) {
        if self.enabled {
            record["timings_ms"] = json!(self.laps);
        }
    }
}

pub fn build_field(opts: &Options) -> anyhow::Result<FieldRef> {
    let (p, e) =
        prime_power(opts.q).ok_or_else(|| anyhow!("q = {} is not a prime power", opts.q))?;
    if let Some(h) = opts.h {
        if h != e {
            bail!("q = {} is p^{e}, not p^{h}", opts.q);
        }
    }
    let p = u32::try_from(p).context("characteristic too large")?;
    let field = match &opts.modulus {
        None => Field::new(p, e, opts.n)?,
        Some(hex) => {
            let t = hex.trim();
            let mut code = u128::from_str_radix(t.strip_prefix("0x").unwrap_or(t), 16)
                .with_context(|| format!("bad modulus {hex:?}"))?;
            let mut digits = Vec::new();
            while code > 0 {
                digits.push((code % p as u128) as u32);
                code /= p as u128;
            }
            Field::with_modulus(p, e, opts.n, &digits)?
        }
    };
    Ok(field)
}

fn elem(field: &Field, s: &str) -> anyhow::Result<Elem> {
    Ok(field.parse_elem(s)?)
}

fn first_params(field: &FieldRef, opts: &Options) -> anyhow::Result<FamilyParams> {
    Ok(FamilyParams::new(
        field,
        opts.i,
        opts.j,
        elem(field, &opts.alpha)?,
        elem(field, &opts.beta)?,
        elem(field, &opts.gamma)?,
    )?)
}

fn second_params(field: &FieldRef, opts: &Options) -> anyhow::Result<FamilyParams> {
    let pick = |o: &Option<String>, d: &String| o.clone().unwrap_or_else(|| d.clone());
    Ok(FamilyParams::new(
        field,
        opts.i2.unwrap_or(opts.i),
        opts.j2.unwrap_or(opts.j),
        elem(field, &pick(&opts.alpha2, &opts.alpha))?,
        elem(field, &pick(&opts.beta2, &opts.beta))?,
        elem(field, &pick(&opts.gamma2, &opts.gamma))?,
    )?)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

/// Runs a check that may legitimately exceed the budget; such checks are
/// reported as skipped instead of failing the whole command.
fn optional<T: Serialize>(r: scatseq::Result<T>) -> anyhow::Result<Value> {
    match r {
        Ok(x) => Ok(to_value(&x)),
        Err(e @ Error::TooLargeToExhaust { .. }) => Ok(json!({ "skipped": e.to_string() })),
        Err(e) => Err(e.into()),
    }
}

fn contradiction_of(v: &Value) -> Option<String> {
    v.get("contradiction")
        .and_then(Value::as_str)
        .map(str::to_string)
}

fn poly_string(p: &Poly) -> String {
    let mut terms: Vec<_> = p.terms().to_vec();
    terms.sort_by_key(|t| std::cmp::Reverse(t.0));
    terms
        .iter()
        .map(|&(e, c)| {
            let mono = match e {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{e}"),
            };
            match (c == Elem::ONE, mono.is_empty()) {
                (true, true) => "1".to_string(),
                (true, false) => mono,
                (false, true) => c.to_hex(),
                (false, false) => format!("{}*{mono}", c.to_hex()),
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn header(command: &str, field: &Field) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command,
        "field": field.descriptor(),
    })
}

pub fn run(command: Command, opts: &Options) -> anyhow::Result<Outcome> {
    let field = build_field(opts)?;
    let budget = Budget(opts.budget);
    match command {
        Command::Verify => verify(&field, opts, budget),
        Command::Search => search(&field, opts, budget),
        Command::Count => count(&field, opts, budget),
        Command::Dual => dual(&field, opts),
        Command::Equiv => equiv(&field, opts),
        Command::Weights => weights(&field, opts, budget),
        Command::Oracle => oracle(&field, opts, budget),
    }
}

fn plain(record: Value) -> Outcome {
    Outcome {
        record,
        rows: None,
        contradiction: false,
    }
}

fn verify(field: &FieldRef, opts: &Options, budget: Budget) -> anyhow::Result<Outcome> {
    let params = first_params(field, opts)?;
    let mut timer = Timer {
        enabled: opts.timings,
        ..Timer::default()
    };
    let exhaustive = !timer.time("root_search", || family::p_has_root(&params, budget))?;
    let companion = match family::companion_root_free(&params) {
        Ok(b) => Some(b),
        Err(Error::NonCoprimeShift { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    if companion.is_some_and(|c| c != exhaustive) {
        return Err(Error::InternalInconsistency(format!(
            "companion criterion disagrees with root search for {params}"
        ))
        .into());
    }
    let scattered = timer.time("scattered", || family::verify_scattered(&params, budget))?;
    let evasive = timer.time("evasive", || {
        optional(family::verify_evasive(&params, budget))
    })?;
    let cutting = timer.time("cutting", || {
        optional(family::verify_cutting(&params, budget))
    })?;
    let indecomposable = timer.time("indecomposable", || {
        optional(family::verify_indecomposable(&params, budget))
    })?;
    let mut contradictions: Vec<String> = scattered.contradiction.iter().cloned().collect();
    contradictions.extend(
        [&evasive, &cutting, &indecomposable]
            .into_iter()
            .filter_map(contradiction_of),
    );
    let mut record = header("verify", field);
    record["params"] = to_value(&params.to_json());
    record["boundary"] = json!(params.boundary());
    record["p_polynomial"] = json!(poly_string(&family::p_polynomial(&params)));
    record["root_free"] = json!({ "exhaustive": exhaustive, "companion": companion });
    record["scattered"] = to_value(&scattered);
    record["evasive"] = evasive;
    record["cutting"] = cutting;
    record["indecomposable"] = indecomposable;
    if let Some(ell) = opts.ell {
        let ext = timer.time("extension", || {
            family::verify_extension(&params, ell, budget)
        })?;
        contradictions.extend(ext.contradiction.clone());
        record["extension"] = json!({ "ell": ell, "report": to_value(&ext) });
    }
    let contradiction = !contradictions.is_empty();
    record["contradictions"] = json!(contradictions);
    timer.attach(&mut record);
    Ok(Outcome {
        record,
        rows: None,
        contradiction,
    })
}

fn parse_range(s: &str, len: usize) -> anyhow::Result<(usize, usize)> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| anyhow!("pair range must look like START..END"))?;
    let a: usize = if a.is_empty() { 0 } else { a.parse()? };
    let b: usize = if b.is_empty() { len } else { b.parse()? };
    if a > b || b > len {
        bail!("pair range {s} outside 0..{len}");
    }
    Ok((a, b))
}

struct SearchRow {
    c: Elem,
    gamma: Elem,
    root_free: bool,
    scattered: bool,
    d: usize,
    d2: usize,
    d3: usize,
    contradiction: Option<String>,
}

fn search_row(
    params: &FamilyParams,
    criterion: Criterion,
    budget: Budget,
) -> scatseq::Result<SearchRow> {
    let root_free = match criterion {
        Criterion::Exhaustive => !family::p_has_root(params, budget)?,
        Criterion::Companion => family::companion_root_free(params)?,
    };
    let rep = family::verify_scattered(params, budget)?;
    let code = params.code();
    Ok(SearchRow {
        c: params.alpha(),
        gamma: params.gamma(),
        root_free,
        scattered: rep.scattered,
        d: code.min_distance(budget)?,
        d2: code.generalized_rank_weight(2, budget)?,
        d3: code.generalized_rank_weight(3, budget)?,
        contradiction: rep.contradiction,
    })
}

fn search(field: &FieldRef, opts: &Options, budget: Budget) -> anyhow::Result<Outcome> {
    let units = field.order() as usize - 1;
    let total = units * units;
    let (start, end) = match &opts.pairs {
        Some(s) => parse_range(s, total)?,
        None => (0, total),
    };
    // α = c, β = 1: P depends on α, β only through c = αβ
    let params: Vec<FamilyParams> = (start..end)
        .map(|t| {
            let gamma = Elem((t / units + 1) as u32);
            let c = Elem((t % units + 1) as u32);
            FamilyParams::new(field, opts.i, opts.j, c, Elem::ONE, gamma)
        })
        .collect::<scatseq::Result<_>>()?;
    let found: Vec<SearchRow> = params
        .par_iter()
        .map(|p| search_row(p, opts.criterion, budget))
        .collect::<scatseq::Result<_>>()?;
    let count = family::count_root_free_triples(field, opts.i, opts.j, budget)?;
    let contradictions: Vec<String> = found
        .iter()
        .filter_map(|r| {
            r.contradiction
                .as_ref()
                .map(|c| format!("c={} gamma={}: {c}", r.c, r.gamma))
        })
        .collect();
    let rows: Vec<Vec<String>> = found
        .iter()
        .map(|r| {
            vec![
                r.c.to_hex(),
                r.gamma.to_hex(),
                r.root_free.to_string(),
                r.scattered.to_string(),
                r.d.to_string(),
                r.d2.to_string(),
                r.d3.to_string(),
            ]
        })
        .collect();
    let mut record = header("search", field);
    record["I"] = json!(opts.i);
    record["J"] = json!(opts.j);
    record["criterion"] = json!(match opts.criterion {
        Criterion::Exhaustive => "exhaustive",
        Criterion::Companion => "companion",
    });
    record["range"] = json!([start, end]);
    record["rows"] = found
        .iter()
        .map(|r| {
            json!({
                "c": r.c, "gamma": r.gamma, "root_free": r.root_free,
                "scattered": r.scattered, "d": r.d, "d2": r.d2, "d3": r.d3,
            })
        })
        .collect();
    record["summary"] = json!({
        "rows": found.len(),
        "root_free_rows": found.iter().filter(|r| r.root_free).count(),
        "scattered_rows": found.iter().filter(|r| r.scattered).count(),
        "exact": count.exact,
        "root_free_pairs": count.root_free_pairs,
        "lower_bound": count.lower_bound,
        "meets_lower_bound": count.lower_bound.map(|b| count.exact >= b),
    });
    let bound_broken = count.lower_bound.is_some_and(|b| count.exact < b);
    let mut contradictions = contradictions;
    if bound_broken {
        contradictions.push("exact root-free count is below the lower bound".into());
    }
    let contradiction = !contradictions.is_empty();
    record["contradictions"] = json!(contradictions);
    Ok(Outcome {
        record,
        rows: Some(rows),
        contradiction,
    })
}

fn count(field: &FieldRef, opts: &Options, budget: Budget) -> anyhow::Result<Outcome> {
    let t = family::count_root_free_triples(field, opts.i, opts.j, budget)?;
    let mut record = header("count", field);
    record["I"] = json!(opts.i);
    record["J"] = json!(opts.j);
    record["K"] = json!(opts.i.abs_diff(opts.j));
    record["count"] = to_value(&t);
    let broken = t.lower_bound.is_some_and(|b| t.exact < b);
    record["contradictions"] = if broken {
        json!(["exact root-free count is below the lower bound"])
    } else {
        json!([])
    };
    Ok(Outcome {
        record,
        rows: None,
        contradiction: broken,
    })
}

fn matrix_json(m: &[Vec<Elem>]) -> Value {
    m.iter()
        .map(|row| row.iter().map(|x| x.to_hex()).collect::<Vec<_>>())
        .collect()
}

fn dual(field: &FieldRef, opts: &Options) -> anyhow::Result<Outcome> {
    let params = first_params(field, opts)?;
    let d = family::ordinary_dual_params(&params)?;
    let mut record = header("dual", field);
    record["params"] = to_value(&params.to_json());
    record["dual_params"] = to_value(&d.params.to_json());
    record["exact_dual"] = to_value(&d.exact_dual.to_json());
    record["equivalence"] = matrix_json(&d.equivalence);
    Ok(plain(record))
}

fn equiv(field: &FieldRef, opts: &Options) -> anyhow::Result<Outcome> {
    let p1 = first_params(field, opts)?;
    let p2 = second_params(field, opts)?;
    let verdict = family::equivalence_verdict(&p1, &p2)?;
    let mut record = header("equiv", field);
    record["p1"] = to_value(&p1.to_json());
    record["p2"] = to_value(&p2.to_json());
    record["verdict"] = to_value(&verdict);
    record["system"] = if (p1.i(), p1.j()) == (p2.i(), p2.j()) {
        to_value(&family::system_coefficients(&p1, &p2)?)
    } else {
        Value::Null
    };
    if let Some(w) = &verdict.witness {
        if !family::check_diagonal_witness(&p1, &p2, w) {
            return Err(Error::InternalInconsistency("equivalence witness fails".into()).into());
        }
    }
    Ok(plain(record))
}

fn weights(field: &FieldRef, opts: &Options, budget: Budget) -> anyhow::Result<Outcome> {
    let params = first_params(field, opts)?;
    let code = params.code();
    let report = code.report(budget)?;
    let planes = params.build_subspace().max_intersection(2, budget)?;
    let mut record = header("weights", field);
    record["params"] = to_value(&params.to_json());
    record["code"] = to_value(&code.to_json(Some(report)));
    record["d2_plane"] = to_value(&planes);
    Ok(plain(record))
}

fn oracle(field: &FieldRef, opts: &Options, budget: Budget) -> anyhow::Result<Outcome> {
    let params = first_params(field, opts)?;
    let units = field.order() as u128 - 1;
    budget.check(units * units * field.order() as u128)?;
    let coprime = !matches!(
        family::companion_root_free(&params),
        Err(Error::NonCoprimeShift { .. })
    );
    let companion = if coprime {
        let disagreements: usize = field
            .nonzero_elements()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&gamma| {
                field
                    .nonzero_elements()
                    .filter(|&c| {
                        let p = FamilyParams::new(field, opts.i, opts.j, c, Elem::ONE, gamma)
                            .expect("nonzero coefficients");
                        let exhaustive = !family::p_has_root(&p, budget).expect("within budget");
                        let comp = family::companion_root_free(&p).expect("coprime shift");
                        exhaustive != comp
                    })
                    .count()
            })
            .sum();
        json!({ "pairs": units * units, "disagreements": disagreements })
    } else {
        json!({ "skipped": "shift not coprime to n" })
    };
    // each of these raises an internal inconsistency on disagreement
    let scattered = family::verify_scattered(&params, budget)?;
    let nondegeneracy = params.code().nondegeneracy(budget)?;
    let dual = family::ordinary_dual_params(&params)?;
    let mut record = header("oracle", field);
    record["params"] = to_value(&params.to_json());
    record["companion_vs_exhaustive"] = companion.clone();
    record["lambda_scans_agree"] = json!(true);
    record["scattered"] = json!(scattered.scattered);
    record["nondegeneracy"] = to_value(&nondegeneracy);
    record["dual_closed_form_agrees"] = json!(true);
    record["dual_params"] = to_value(&dual.params.to_json());
    if companion["disagreements"].as_u64().is_some_and(|d| d > 0) {
        return Err(Error::InternalInconsistency(format!(
            "companion criterion disagrees with root search: {companion}"
        ))
        .into());
    }
    Ok(plain(record))
}
