use anyhow::{anyhow, bail, Context, Result};
use toml::Value;

use poisson_lab::algebra::format_scalar;
use poisson_lab::expr::{
    format_expr, format_in, format_with_factor_order, gallery, load_structure, parse_expr,
    structure_factor_order, LoadOptions, GALLERY_NAMES,
};
use poisson_lab::lie::{canonical_pair, lie_closure, witness_transform, WitnessCase};
use poisson_lab::poisson::{
    check_log_canonical, jacobiator, structure_validate, LogCanonicalCheck,
};
use poisson_lab::series::{coefficient_in_order, default_order, expand_iterated, SeriesWindow};
use poisson_lab::{ExponentVector, PoissonStructure, RationalFunction, Scalar};

use crate::report::{strings, table, Report};
use crate::{Command, StructureArgs};

pub fn run(command: Command) -> Result<Report> {
    let mut r = Report::default();
    match command {
        Command::Bracket {
            structure,
            order,
            f,
            g,
        } => {
            let s = load(&structure)?;
            let factor_order = if order.is_empty() {
                structure_factor_order(&s)
            } else {
                factor_order(&s, &order)?
            };
            let b = s.bracket(&parse(&s, &f)?, &parse(&s, &g)?)?;
            let text = format_with_factor_order(&b, s.variables(), &factor_order);
            r.line(&text).set("bracket", text);
        }
        Command::Jacobi { structure, exprs } => {
            let mut s = load_structure(&structure, LoadOptions { skip_jacobi: true })
                .with_context(|| format!("loading {}", structure.display()))?;
            match exprs.as_slice() {
                [] => {
                    let report = structure_validate(&mut s)?;
                    let v = s.variables().to_vec();
                    r.line(format!("triples checked: {}", report.triples_checked));
                    r.set("triples_checked", report.triples_checked as i64);
                    r.set("valid", report.is_valid());
                    let mut failures = Vec::new();
                    for ((i, j, k), jac) in &report.failures {
                        let text = format_in(&s, jac);
                        r.line(format!(
                            "fails on ({}, {}, {}): {}",
                            v[*i], v[*j], v[*k], text
                        ));
                        failures.push(table([
                            (
                                "triple",
                                strings([v[*i].clone(), v[*j].clone(), v[*k].clone()]),
                            ),
                            ("jacobiator", Value::String(text)),
                        ]));
                    }
                    if report.is_valid() {
                        r.line("jacobi identity holds");
                    }
                    r.set("failures", Value::Array(failures));
                }
                [f, g, h] => {
                    let j = jacobiator(&s, &parse(&s, f)?, &parse(&s, g)?, &parse(&s, h)?)?;
                    let text = format_in(&s, &j);
                    r.line(&text).set("jacobiator", text);
                }
                _ => bail!("jacobi takes either no expressions or exactly three"),
            }
        }
        Command::ConstantTerm {
            structure,
            order,
            f,
            g,
        } => {
            let s = load(&structure)?;
            let order = series_order(s.variables(), &order)?;
            let b = s.bracket(&parse(&s, &f)?, &parse(&s, &g)?)?;
            let c = coefficient_in_order(&b, &ExponentVector::zero(s.nvars()), &order)?;
            scalar_line(&mut r, "constant_term", &c);
        }
        Command::Coeff {
            structure,
            index,
            order,
            expr,
        } => {
            let s = load(&structure)?;
            let order = series_order(s.variables(), &order)?;
            if index.len() != s.nvars() {
                bail!(
                    "index has {} entries for {} variables",
                    index.len(),
                    s.nvars()
                );
            }
            let c = coefficient_in_order(&parse(&s, &expr)?, &ExponentVector::new(index), &order)?;
            scalar_line(&mut r, "coefficient", &c);
        }
        Command::Expand {
            vars,
            order,
            window,
            expr,
        } => {
            let order = series_order(&vars, &order)?;
            let window = parse_window(&vars, &window)?;
            let f = parse_expr(&expr, &vars)?;
            let series = expand_iterated(&f, &window, &order)?;
            let mut terms = Vec::new();
            for (e, c) in series.terms() {
                let term = RationalFunction::monomial(e.clone(), c.clone());
                r.line(format_expr(&term, &vars));
                terms.push(table([
                    (
                        "index",
                        Value::Array(
                            e.as_slice()
                                .iter()
                                .map(|&k| Value::from(k as i64))
                                .collect(),
                        ),
                    ),
                    ("coefficient", Value::String(format_scalar(c))),
                ]));
            }
            if series.is_empty() {
                r.line("0");
            }
            r.set("terms", Value::Array(terms));
        }
        Command::Closure {
            structure,
            max_dim,
            exprs,
        } => {
            let s = load(&structure)?;
            let gens = exprs
                .iter()
                .map(|e| parse(&s, e))
                .collect::<Result<Vec<_>>>()?;
            let report = lie_closure(&s, &gens, max_dim)?;
            let basis: Vec<String> = report.basis.iter().map(|b| format_in(&s, b)).collect();
            r.line(format!("closed: {}", report.closed));
            r.line(format!("dimension: {}", report.dimension));
            r.set("closed", report.closed)
                .set("dimension", report.dimension as i64);
            if report.closed {
                r.line(format!("abelian: {}", report.abelian));
                r.set("abelian", report.abelian);
            } else {
                r.line(format!("inconclusive: dimension cap {max_dim} reached"));
            }
            r.line("basis:");
            for (k, b) in basis.iter().enumerate() {
                r.line(format!("  b{k} = {b}"));
            }
            r.set("basis", strings(basis.clone()));
            let mut trace = Vec::new();
            for t in &report.trace {
                r.line(format!(
                    "  b{} = {{b{}, b{}}}",
                    t.element, t.from.0, t.from.1
                ));
                trace.push(table([
                    ("element", Value::from(t.element as i64)),
                    (
                        "from",
                        Value::Array(vec![
                            Value::from(t.from.0 as i64),
                            Value::from(t.from.1 as i64),
                        ]),
                    ),
                ]));
            }
            r.set("trace", Value::Array(trace));
            if report.closed {
                let mut brackets = Vec::new();
                let d = report.dimension;
                for i in 0..d {
                    for j in i + 1..d {
                        let c = &report.structure_constants[i][j];
                        if c.iter().all(|x| format_scalar(x) == "0") {
                            continue;
                        }
                        let text = combination(c);
                        r.line(format!("  {{b{i}, b{j}}} = {text}"));
                        brackets.push(table([
                            (
                                "pair",
                                Value::Array(vec![Value::from(i as i64), Value::from(j as i64)]),
                            ),
                            ("constants", strings(c.iter().map(format_scalar))),
                        ]));
                    }
                }
                r.set("brackets", Value::Array(brackets));
            }
        }
        Command::CheckLogCanonical { structure, exprs } => {
            let s = load(&structure)?;
            let gs = exprs
                .iter()
                .map(|e| parse(&s, e))
                .collect::<Result<Vec<_>>>()?;
            match check_log_canonical(&s, &gs)? {
                LogCanonicalCheck::LogCanonical(w) => {
                    r.line("log-canonical");
                    r.set("log_canonical", true);
                    let mut rows = Vec::new();
                    for row in w.rows() {
                        let row: Vec<String> = row.iter().map(format_scalar).collect();
                        r.line(format!("  [{}]", row.join(", ")));
                        rows.push(strings(row));
                    }
                    r.set("omega", Value::Array(rows));
                }
                LogCanonicalCheck::NotLogCanonical {
                    pair: (i, j),
                    ratio,
                } => {
                    let text = format_in(&s, &ratio);
                    r.line(format!(
                        "not log-canonical: {{g{}, g{}}} / (g{} g{}) = {text}",
                        i + 1,
                        j + 1,
                        i + 1,
                        j + 1
                    ));
                    r.set("log_canonical", false)
                        .set(
                            "pair",
                            Value::Array(vec![
                                Value::from(i as i64 + 1),
                                Value::from(j as i64 + 1),
                            ]),
                        )
                        .set("ratio", text);
                }
            }
        }
        Command::CanonicalPair { a, b } => match canonical_pair(a, b)? {
            Some(p) => {
                let vars = ["x".to_string(), "y".to_string()];
                let (u, v) = (format_expr(&p.u, &vars), format_expr(&p.v, &vars));
                let c = format_scalar(&p.constant);
                r.line(format!("u = {u}"))
                    .line(format!("v = {v}"))
                    .line(format!("{{u, v}} = {c}"));
                r.set("u", u).set("v", v).set("constant", c);
            }
            None => {
                r.line("no canonical pair: {x, y} = x*y is log-canonical");
                r.set("canonical_pair", false);
            }
        },
        Command::Witness { structure, f, g } => {
            let s = load(&structure)?;
            let t = witness_transform(&s, &parse(&s, &f)?, &parse(&s, &g)?)?;
            let case = match t.case {
                WitnessCase::ConstantBracket => "constant-bracket",
                WitnessCase::Eigenvector => "eigenvector",
                WitnessCase::SecondOrder => "second-order",
            };
            let (u, v, b) = (
                format_in(&s, &t.pair.0),
                format_in(&s, &t.pair.1),
                format_in(&s, &t.bracket),
            );
            r.line(format!("case: {case}"))
                .line(format!("f' = {u}"))
                .line(format!("g' = {v}"))
                .line(format!("{{f', g'}} = {b}"));
            r.set("case", case)
                .set("f", u)
                .set("g", v)
                .set("bracket", b);
        }
        Command::Gallery { name: None } => {
            for n in GALLERY_NAMES {
                r.line(*n);
            }
            r.set(
                "names",
                strings(GALLERY_NAMES.iter().map(|s| s.to_string())),
            );
        }
        Command::Gallery { name: Some(name) } => {
            let e = gallery(&name)?;
            let s = &e.structure;
            r.line(format!("{}: {}", e.name, s.variables().join(", ")));
            r.set("name", e.name.clone())
                .set("variables", strings(s.variables().to_vec()));
            let central: Vec<String> = (0..s.nvars())
                .filter(|&k| s.is_central(k))
                .map(|k| s.variables()[k].clone())
                .collect();
            if !central.is_empty() {
                r.line(format!("central: {}", central.join(", ")));
            }
            r.set("central", strings(central));
            let mut brackets = toml::Table::new();
            for i in 0..s.nvars() {
                for j in i + 1..s.nvars() {
                    let pi = s.structure_function(i, j);
                    if pi.is_zero() {
                        continue;
                    }
                    let (a, b) = (&s.variables()[i], &s.variables()[j]);
                    let text = format_in(s, pi);
                    r.line(format!("{{{a}, {b}}} = {text}"));
                    brackets.insert(format!("{a},{b}"), Value::String(text));
                }
            }
            r.set("brackets", Value::Table(brackets));
            let mut ids = Vec::new();
            for id in &e.identities {
                r.line(format!("ok  {{{}, {}}} = {}", id.f, id.g, id.expected));
                ids.push(table([
                    ("f", Value::String(id.f.clone())),
                    ("g", Value::String(id.g.clone())),
                    ("expected", Value::String(id.expected.clone())),
                ]));
            }
            for fact in &e.facts {
                r.line(format!("ok  {fact}"));
            }
            r.line("ok  jacobi identity");
            r.set("identities", Value::Array(ids))
                .set("facts", strings(e.facts.clone()));
        }
    }
    Ok(r)
}

fn load(args: &StructureArgs) -> Result<PoissonStructure> {
    load_structure(
        &args.structure,
        LoadOptions {
            skip_jacobi: args.skip_jacobi,
        },
    )
    .with_context(|| format!("loading {}", args.structure.display()))
}

fn parse(s: &PoissonStructure, text: &str) -> Result<RationalFunction> {
    parse_expr(text, s.variables()).with_context(|| format!("parsing {text:?}"))
}

fn scalar_line(r: &mut Report, key: &str, c: &Scalar) {
    let text = format_scalar(c);
    r.line(&text).set(key, text);
}

fn index_of(vars: &[String], name: &str) -> Result<usize> {
    vars.iter()
        .position(|v| v == name.trim())
        .ok_or_else(|| anyhow!("unknown variable {:?}", name.trim()))
}

/// Listed variables first, then the rest in declaration order.
fn factor_order(s: &PoissonStructure, names: &[String]) -> Result<Vec<usize>> {
    let mut order = Vec::new();
    for name in names {
        let k = index_of(s.variables(), name)?;
        if !order.contains(&k) {
            order.push(k);
        }
    }
    let rest: Vec<usize> = (0..s.nvars()).filter(|k| !order.contains(k)).collect();
    order.extend(rest);
    Ok(order)
}

fn series_order(vars: &[String], names: &[String]) -> Result<Vec<usize>> {
    if names.is_empty() {
        return Ok(default_order(vars.len()));
    }
    names.iter().map(|n| index_of(vars, n)).collect()
}

fn parse_window(vars: &[String], text: &str) -> Result<SeriesWindow> {
    let mut bounds: Vec<Option<(i32, i32)>> = vec![None; vars.len()];
    for part in text.split(',') {
        let (name, range) = part
            .split_once(':')
            .ok_or_else(|| anyhow!("window entry {part:?} is not name:lo..hi"))?;
        let (lo, hi) = range
            .split_once("..")
            .ok_or_else(|| anyhow!("window range {range:?} is not lo..hi"))?;
        let k = index_of(vars, name)?;
        if bounds[k].is_some() {
            bail!("window gives {} twice", vars[k]);
        }
        bounds[k] = Some((lo.trim().parse()?, hi.trim().parse()?));
    }
    let bounds = bounds
        .into_iter()
        .zip(vars)
        .map(|(b, v)| b.ok_or_else(|| anyhow!("window has no bounds for {v}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(SeriesWindow::new(bounds)?)
}

/// `sum_k c_k b_k` with the basis written symbolically.
fn combination(c: &[Scalar]) -> String {
    let names: Vec<String> = (0..c.len()).map(|k| format!("b{k}")).collect();
    let mut acc = RationalFunction::zero(c.len());
    for (k, x) in c.iter().enumerate() {
        acc = acc
            .add(&RationalFunction::variable(c.len(), k).scale(x))
            .expect("linear combination of variables");
    }
    format_expr(&acc, &names)
}
