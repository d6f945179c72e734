//! Named example structures, each with identities verified on construction.

use super::format::format_in;
use super::parse::parse_expr;
use crate::algebra::{format_scalar, ratio, ExponentVector, RationalFunction, Scalar};
use crate::error::{Error, Result};
use crate::lie::{canonical_pair, plane_structure};
use crate::poisson::{
    check_log_canonical, structure_validate, LogCanonicalCheck, PoissonStructure,
};

/// `{f, g} = expected`, as expression text over the entry's variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub f: String,
    pub g: String,
    pub expected: String,
}

#[derive(Clone, Debug)]
pub struct GalleryEntry {
    pub name: String,
    pub structure: PoissonStructure,
    pub identities: Vec<Identity>,
    /// Further properties checked when the entry was built.
    pub facts: Vec<String>,
}

/// Base names accepted by [`gallery`]; parameterized ones take `:<args>`.
pub const GALLERY_NAMES: &[&str] = &[
    "sl2",
    "sln:<n>",
    "borel-sl2",
    "axis",
    "ab-family:<a>,<b>",
    "quadratic-xyz",
];

pub fn gallery(name: &str) -> Result<GalleryEntry> {
    let unknown = || Error::UnknownGallery(name.to_string());
    let (base, arg) = match name.split_once(':') {
        Some((b, a)) => (b, Some(a)),
        None => (name, None),
    };
    let entry = match (base, arg) {
        ("sl2", None) => sl2()?,
        ("sln", Some(n)) => {
            let n: usize = n.trim().parse().map_err(|_| unknown())?;
            if n < 2 {
                return Err(unknown());
            }
            sln(n)?
        }
        ("borel-sl2", None) => borel()?,
        ("axis", None) => axis()?,
        ("ab-family", Some(args)) => {
            let (a, b) = args.split_once(',').ok_or_else(unknown)?;
            let a: u32 = a.trim().parse().map_err(|_| unknown())?;
            let b: u32 = b.trim().parse().map_err(|_| unknown())?;
            ab_family(a, b)?
        }
        ("quadratic-xyz", None) => quadratic_xyz()?,
        _ => return Err(unknown()),
    };
    verify(entry, name)
}

fn verify(mut entry: GalleryEntry, name: &str) -> Result<GalleryEntry> {
    entry.name = name.to_string();
    let s = &entry.structure;
    for id in &entry.identities {
        let vars = s.variables();
        let f = parse_expr(&id.f, vars)?;
        let g = parse_expr(&id.g, vars)?;
        let expected = parse_expr(&id.expected, vars)?;
        let got = s.bracket(&f, &g)?;
        if got != expected {
            return Err(Error::GalleryCheck(format!(
                "{name}: {{{}, {}}} = {}, expected {}",
                id.f,
                id.g,
                format_in(s, &got),
                id.expected
            )));
        }
    }
    let report = structure_validate(&mut entry.structure)?;
    if !report.is_valid() {
        return Err(Error::GalleryCheck(format!(
            "{name}: Jacobi identity fails"
        )));
    }
    Ok(entry)
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn identity(f: &str, g: &str, expected: &str) -> Identity {
    Identity {
        f: f.into(),
        g: g.into(),
        expected: expected.into(),
    }
}

fn from_text(vars: Vec<String>, brackets: &[((usize, usize), &str)]) -> Result<PoissonStructure> {
    let entries = brackets
        .iter()
        .map(|&(pair, e)| Ok((pair, parse_expr(e, &vars)?)))
        .collect::<Result<Vec<_>>>()?;
    PoissonStructure::from_upper(vars, entries)
}

fn entry(
    structure: PoissonStructure,
    identities: Vec<Identity>,
    facts: Vec<String>,
) -> GalleryEntry {
    GalleryEntry {
        name: String::new(),
        structure,
        identities,
        facts,
    }
}

fn sl2() -> Result<GalleryEntry> {
    let s = from_text(
        names(&["a", "b", "c", "d"]),
        &[
            ((0, 1), "1/2*a*b"),
            ((0, 2), "1/2*a*c"),
            ((0, 3), "b*c"),
            ((1, 2), "0"),
            ((1, 3), "1/2*b*d"),
            ((2, 3), "1/2*c*d"),
        ],
    )?;
    let ids = vec![
        identity("a", "b", "1/2*a*b"),
        identity("c", "d", "1/2*c*d"),
        identity("a", "c", "1/2*a*c"),
        identity("b", "d", "1/2*b*d"),
        identity("a", "d", "b*c"),
        identity("b", "c", "0"),
    ];
    Ok(entry(s, ids, Vec::new()))
}

/// `1/2 (sign(k - i) + sign(l - j))`.
pub(crate) fn sln_coefficient(i: usize, j: usize, k: usize, l: usize) -> Scalar {
    let sign = |a: usize, b: usize| a.cmp(&b) as i64;
    ratio(sign(k, i) + sign(l, j), 2)
}

fn sln_name(n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("x{}{}", i + 1, j + 1)
    } else {
        format!("x{}_{}", i + 1, j + 1)
    }
}

fn sln(n: usize) -> Result<GalleryEntry> {
    let idx = |i: usize, j: usize| i * n + j;
    let vars: Vec<String> = (0..n * n).map(|p| sln_name(n, p / n, p % n)).collect();
    let mut brackets = Vec::new();
    let mut ids = Vec::new();
    for p in 0..n * n {
        for q in p + 1..n * n {
            let (i, j, k, l) = (p / n, p % n, q / n, q % n);
            let c = sln_coefficient(i, j, k, l);
            let mut e = ExponentVector::zero(n * n);
            e.set(idx(i, l), e.get(idx(i, l)) + 1);
            e.set(idx(k, j), e.get(idx(k, j)) + 1);
            let pi = RationalFunction::monomial(e, c);
            brackets.push(((p, q), pi));
            let rhs = format!(
                "{}*{}*{}",
                format_scalar(&sln_coefficient(i, j, k, l)),
                vars[idx(i, l)],
                vars[idx(k, j)]
            );
            ids.push(identity(&vars[p], &vars[q], &rhs));
        }
    }
    let s = PoissonStructure::from_upper(vars, brackets)?;
    Ok(entry(s, ids, Vec::new()))
}

fn borel() -> Result<GalleryEntry> {
    let s = from_text(names(&["alpha", "beta"]), &[((0, 1), "1/2*alpha*beta")])?;
    let gs = [s.variable(0), s.variable(1)];
    match check_log_canonical(&s, &gs)? {
        LogCanonicalCheck::LogCanonical(w) if w.get(0, 1) == &ratio(1, 2) => {}
        other => {
            return Err(Error::GalleryCheck(format!(
                "borel-sl2: expected log-canonical with w = 1/2, got {other:?}"
            )))
        }
    }
    let ids = vec![identity("alpha", "beta", "1/2*alpha*beta")];
    Ok(entry(
        s,
        ids,
        vec!["log-canonical in (alpha, beta) with w12 = 1/2".into()],
    ))
}

fn axis() -> Result<GalleryEntry> {
    let s = from_text(names(&["x", "y"]), &[((0, 1), "x")])?;
    let ids = vec![identity("x", "y", "x"), identity("1/x", "-x*y", "1")];
    Ok(entry(s, ids, vec!["canonical pair (1/x, -x*y)".into()]))
}

fn ab_family(a: u32, b: u32) -> Result<GalleryEntry> {
    let to_i32 =
        |k: u32| i32::try_from(k).map_err(|_| Error::UnknownGallery(format!("ab-family:{a},{b}")));
    let s = plane_structure(to_i32(a)?, to_i32(b)?)?;
    let mut ids = vec![identity("x", "y", &format!("x^{a}*y^{b}"))];
    let facts = match canonical_pair(a, b)? {
        Some(p) => {
            let (u, v) = (format_in(&s, &p.u), format_in(&s, &p.v));
            ids.push(identity(&u, &v, &format_scalar(&p.constant)));
            vec![format!("canonical pair ({u}, {v})")]
        }
        None => vec!["log-canonical; no canonical pair".into()],
    };
    Ok(entry(s, ids, facts))
}

fn quadratic_xyz() -> Result<GalleryEntry> {
    let s = from_text(
        names(&["x", "y", "z", "a", "b", "c"]),
        &[((0, 1), "a*z^2"), ((0, 2), "b*y^2"), ((1, 2), "c*x^2")],
    )?
    .with_central(&["a", "b", "c"])?;
    let ids = vec![
        identity("x", "y/z^2", "a - 2*b*y^3*z^-3"),
        identity("x/z", "y/z", "a - b*y^3*z^-3 + c*x^3*z^-3"),
    ];
    Ok(entry(s, ids, vec!["a, b, c are central parameters".into()]))
}
