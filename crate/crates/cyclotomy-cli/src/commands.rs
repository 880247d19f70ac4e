use crate::opts::{
    parse_range, Cli, Command, CompareArgs, CohomologyArgs, DimsArgs, Mode, SeriesArgs,
    VerifyArgs,
};
use crate::output::{manifest, Report};
use cyclotomy::dihedral::{
    certify_lie_coalgebra, cochain_complex, relation_matrix, space_dim, unramified_check,
    unramified_depth1_dim, RelationFamily, Variant,
};
use cyclotomy::linalg::rows_in_span;
use cyclotomy::modcx::{
    coinvariant_complex, complex_report, dihedral_iso_check, level_two_complex,
    shuffle_vs_dihedral, Twist,
};
use cyclotomy::series::{self, closed_form, ClosedForm};
use cyclotomy::words;
use rayon::prelude::*;
use serde_json::{json, Value};

type AnyError = Box<dyn std::error::Error>;

pub fn run(cli: Cli) -> Result<bool, AnyError> {
    if let Some(jobs) = cli.jobs {
        // best effort: the global pool can only be set once per process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let mode = Mode::resolve(cli.mode);
    let report = match &cli.command {
        Command::Dims(args) => dims(args, mode)?,
        Command::Verify(args) => verify(args, mode)?,
        Command::Cohomology(args) => cohomology(args, mode)?,
        Command::Series(args) => series_cmd(args, mode)?,
        Command::Compare(args) => compare(args, mode)?,
    };
    report.emit(cli.format, &cli.out)?;
    Ok(report.ok)
}

fn dims(args: &DimsArgs, mode: Mode) -> Result<Report, AnyError> {
    let variant = args.variant.variant();
    let mut cells: Vec<(u32, u32, u32)> = Vec::new();
    if let Some(primes) = &args.primes {
        for &p in primes {
            for &m in &args.depths {
                cells.push((m, m, p));
            }
        }
    } else {
        let weights = parse_range(&args.weights)?;
        for &n in &args.levels {
            for &m in &args.depths {
                for &w in &weights {
                    if w >= m {
                        cells.push((w, m, n));
                    }
                }
            }
        }
    }
    let compute = mode.compute();
    let mut rows: Vec<Value> = cells
        .par_iter()
        .map(|&(w, m, n)| {
            let dim = space_dim(w, m, n, variant, compute)
                .map(|d| json!(d))
                .unwrap_or_else(|e| json!(format!("error: {e}")));
            let modular = if args.modular && n == 1 && m <= 3 {
                coinvariant_complex(m as usize, w, Twist::None)
                    .map(|c| json!(c.complex.dims()))
                    .unwrap_or(Value::Null)
            } else {
                Value::Null
            };
            json!({
                "w": w, "m": m, "N": n,
                "variant": variant.to_string(),
                "dim": dim,
                "modular_dims": modular,
            })
        })
        .collect();
    rows.sort_by_key(|r| {
        (
            r["N"].as_u64().unwrap(),
            r["m"].as_u64().unwrap(),
            r["w"].as_u64().unwrap(),
        )
    });
    Ok(Report {
        command: "dims".into(),
        manifest: manifest(mode),
        rows,
        columns: vec!["w", "m", "N", "variant", "dim", "modular_dims"],
        ok: true,
    })
}

struct Check {
    name: String,
    pass: bool,
    detail: String,
}

impl Check {
    fn of<E: std::fmt::Display>(name: impl Into<String>, r: Result<(), E>) -> Check {
        match r {
            Ok(()) => Check {
                name: name.into(),
                pass: true,
                detail: String::new(),
            },
            Err(e) => Check {
                name: name.into(),
                pass: false,
                detail: e.to_string(),
            },
        }
    }

    fn boolean(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            pass,
            detail: if pass { String::new() } else { detail.into() },
        }
    }
}

fn verify(args: &VerifyArgs, mode: Mode) -> Result<Report, AnyError> {
    let compute = mode.compute();
    let levels = args.levels.clone().unwrap_or_else(|| vec![1, 2, 3]);
    let primes = args.primes.clone().unwrap_or_else(|| vec![5, 7, 11, 13]);
    let checks: Vec<Check> = match args.suite.as_str() {
        "shuffle-implies-dihedral" => {
            let w_max = args.w_max.unwrap_or(9);
            let m_max = args.m_max.unwrap_or(3).min(3);
            let mut cells = Vec::new();
            for m in 2..=m_max {
                for &n in &levels {
                    for w in m..=w_max {
                        cells.push((w, m, n));
                    }
                }
            }
            let mut checks: Vec<Check> = cells
                .par_iter()
                .map(|&(w, m, n)| {
                    let r = (|| -> cyclotomy::Result<bool> {
                        let shuffles = relation_matrix(
                            w,
                            m,
                            n,
                            &[RelationFamily::ShuffleT, RelationFamily::ShuffleG],
                        )?;
                        let dihedral = relation_matrix(w, m, n, &[RelationFamily::Dihedral])?;
                        Ok(rows_in_span(&shuffles, &dihedral, compute))
                    })();
                    match r {
                        Ok(pass) => Check::boolean(
                            format!("dihedral-in-shuffle-span w={w} m={m} N={n}"),
                            pass,
                            "span containment fails",
                        ),
                        Err(e) => Check::boolean(
                            format!("dihedral-in-shuffle-span w={w} m={m} N={n}"),
                            false,
                            e.to_string(),
                        ),
                    }
                })
                .collect();
            // modular complexes (rank 2: span equality; rank 3: containment)
            for w in [2u32, 4, 6, 8, 10, 12] {
                let (contained, equal) = shuffle_vs_dihedral(2, w)?;
                checks.push(Check::boolean(
                    format!("modular-span-equality m=2 w={w}"),
                    contained && equal,
                    "shuffle and dihedral operator spans differ",
                ));
            }
            for w in [3u32, 5, 7] {
                let (contained, _) = shuffle_vs_dihedral(3, w)?;
                checks.push(Check::boolean(
                    format!("modular-dihedral-in-shuffle m=3 w={w}"),
                    contained,
                    "dihedral operators escape the shuffle span",
                ));
            }
            checks
        }
        "cojacobi" => {
            let w_max = args.w_max.unwrap_or(12);
            let m_max = args.m_max.unwrap_or(3).min(3);
            let mut cells: Vec<(u32, u32, u32, Variant)> = Vec::new();
            for &n in &levels {
                for m in 2..=m_max {
                    for w in m..=w_max {
                        cells.push((w, m, n, Variant::D));
                        cells.push((w, m, n, Variant::DHat));
                    }
                }
            }
            for &p in &primes {
                for m in 2..=3u32 {
                    cells.push((m, m, p, Variant::D));
                }
            }
            cells
                .par_iter()
                .map(|&(w, m, n, v)| {
                    Check::of(
                        format!("cojacobi w={w} m={m} N={n} variant={v}"),
                        certify_lie_coalgebra(w, m, n, v),
                    )
                })
                .collect()
        }
        "d-squared-zero" => {
            let mut checks = Vec::new();
            for w in (2..=20u32).step_by(2) {
                let c = coinvariant_complex(2, w, Twist::None)?;
                checks.push(Check::of(
                    format!("coinvariant d2=0 m=2 w={w}"),
                    c.complex.check_composition_zero(),
                ));
            }
            for w in [3u32, 5, 7, 9, 11] {
                let c = coinvariant_complex(3, w, Twist::None)?;
                checks.push(Check::of(
                    format!("coinvariant d2=0 m=3 w={w}"),
                    c.complex.check_composition_zero(),
                ));
            }
            for &p in &primes {
                checks.push(Check::of(
                    format!("level complex d'd=0 p={p}"),
                    level_two_complex(p).map(|_| ()),
                ));
            }
            checks
        }
        "acyclicity" => {
            let w_max = args.w_max.unwrap_or(13);
            (3..=w_max)
                .step_by(2)
                .map(|w| {
                    let r = (|| -> cyclotomy::Result<bool> {
                        let c = cochain_complex(w, 3, 1, Variant::D)?;
                        Ok(c.homology_dims()?.iter().all(|&h| h == 0))
                    })();
                    match r {
                        Ok(pass) => Check::boolean(
                            format!("depth-3 acyclicity w={w}"),
                            pass,
                            "nonzero homology",
                        ),
                        Err(e) => {
                            Check::boolean(format!("depth-3 acyclicity w={w}"), false, e.to_string())
                        }
                    }
                })
                .collect()
        }
        "level-iso" => primes
            .par_iter()
            .map(|&p| match dihedral_iso_check(p) {
                Ok(r) => Check::boolean(
                    format!("level-iso p={p}"),
                    r.passed(),
                    serde_json::to_string(&r).unwrap_or_default(),
                ),
                Err(e) => Check::boolean(format!("level-iso p={p}"), false, e.to_string()),
            })
            .collect(),
        "distribution" => {
            let mut checks = Vec::new();
            for (m, n) in [(1u32, 2u32), (1, 3), (2, 2), (3, 2), (2, 3)] {
                checks.push(Check::of(
                    format!("level identities M={m} N={n}"),
                    words::level_identities_check(m, n, 4),
                ));
                checks.push(Check::of(
                    format!("bracket preservation M={m} N={n}"),
                    words::level_bracket_preservation_check(m, n, 4, 10, 20260810),
                ));
            }
            for &p in &primes {
                if p <= 11 {
                    for m in 2..=3u32 {
                        checks.push(Check::of(
                            format!("unramified coideal p={p} m={m}"),
                            unramified_check(m, p),
                        ));
                    }
                }
            }
            checks
        }
        other => return Err(format!("unknown suite {other:?}").into()),
    };
    let ok = checks.iter().all(|c| c.pass);
    let rows = checks
        .into_iter()
        .map(|c| {
            json!({
                "check": c.name,
                "pass": c.pass,
                "detail": if c.detail.is_empty() { Value::Null } else { json!(c.detail) },
            })
        })
        .collect();
    Ok(Report {
        command: format!("verify --suite {}", args.suite),
        manifest: manifest(mode),
        rows,
        columns: vec!["check", "pass", "detail"],
        ok,
    })
}

fn cohomology(args: &CohomologyArgs, mode: Mode) -> Result<Report, AnyError> {
    let weights = parse_range(&args.weights)?;
    let variant = args.variant.variant();
    let mut rows = Vec::new();
    let mut ok = true;
    for &m in &args.depths {
        for &w in &weights {
            if w < m {
                continue;
            }
            if args.modular {
                if args.level != 1 || m > 3 {
                    continue;
                }
                match coinvariant_complex(m as usize, w, Twist::None)
                    .and_then(|c| complex_report(&c, 1))
                {
                    Ok(mut v) => {
                        v["variant"] = json!("modular");
                        v["w"] = json!(w);
                        v["m"] = json!(m);
                        rows.push(v);
                    }
                    Err(e) => {
                        ok = false;
                        rows.push(json!({"w": w, "m": m, "level": args.level,
                            "variant": "modular", "dims": Value::Null,
                            "homology": Value::Null, "euler": format!("error: {e}")}));
                    }
                }
            } else {
                match cochain_complex(w, m, args.level, variant) {
                    Ok(c) => {
                        let hom = c.homology_dims();
                        match hom {
                            Ok(h) => rows.push(json!({
                                "w": w, "m": m, "level": args.level,
                                "variant": variant.to_string(),
                                "dims": c.dims(), "homology": h,
                                "euler": c.euler_characteristic(),
                            })),
                            Err(e) => {
                                ok = false;
                                rows.push(json!({"w": w, "m": m, "level": args.level,
                                    "variant": variant.to_string(), "dims": c.dims(),
                                    "homology": Value::Null, "euler": format!("error: {e}")}));
                            }
                        }
                    }
                    Err(e) => {
                        ok = false;
                        rows.push(json!({"w": w, "m": m, "level": args.level,
                            "variant": variant.to_string(), "dims": Value::Null,
                            "homology": Value::Null, "euler": format!("error: {e}")}));
                    }
                }
            }
        }
    }
    Ok(Report {
        command: "cohomology".into(),
        manifest: manifest(mode),
        rows,
        columns: vec!["w", "m", "level", "variant", "dims", "homology", "euler"],
        ok,
    })
}

fn series_cmd(args: &SeriesArgs, mode: Mode) -> Result<Report, AnyError> {
    let order = args.order;
    let fmt = |v: Vec<cyclotomy::Rational>| -> Vec<String> {
        v.into_iter()
            .map(|c| {
                if c.is_integer() {
                    c.numer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            })
            .collect()
    };
    let rows = vec![
        json!({"kind": "a1", "formula": "x^3/(1-x^2)", "coefficients": fmt(series::a_m(1).expand(order))}),
        json!({"kind": "a2", "formula": "x^8/((1-x^2)(1-x^4))", "coefficients": fmt(series::a_m(2).expand(order))}),
        json!({"kind": "a3", "formula": "x^15/((1-x^2)(1-x^4)(1-x^6))", "coefficients": fmt(series::a_m(3).expand(order))}),
        json!({"kind": "d2", "formula": "x^8/((1-x^2)(1-x^6))", "coefficients": fmt(series::d_2().expand(order))}),
        json!({"kind": "d3", "formula": "x^11(1+x^2-x^4)/((1-x^2)(1-x^4)(1-x^6))", "coefficients": fmt(series::d_3().expand(order))}),
        json!({"kind": "cusp", "formula": "x^12/((1-x^4)(1-x^6))", "coefficients": fmt(series::cusp_forms().expand(order))}),
    ];
    Ok(Report {
        command: "series".into(),
        manifest: manifest(mode),
        rows,
        columns: vec!["kind", "formula", "coefficients"],
        ok: true,
    })
}

fn compare(args: &CompareArgs, mode: Mode) -> Result<Report, AnyError> {
    let compute = mode.compute();
    let mut rows: Vec<Value> = Vec::new();
    let mut ok = true;
    if args.diagonal {
        let primes = args.primes.clone().unwrap_or_else(|| vec![5, 7, 11, 13]);
        let depths = args.depths.clone().unwrap_or_else(|| vec![2, 3]);
        let mut cells = Vec::new();
        for &p in &primes {
            for &m in &depths {
                cells.push((p, m));
            }
        }
        let computed: Vec<Value> = cells
            .par_iter()
            .map(|&(p, m)| {
                let brute = space_dim(m, m, p, Variant::D, compute)
                    .map(|d| d as i64)
                    .ok();
                let closed = match m {
                    1 => unramified_depth1_dim(p).ok().map(|d| d as i64 + 1),
                    2 => closed_form(ClosedForm::Depth2Level, p as u64).ok(),
                    3 => closed_form(ClosedForm::Depth3Level, p as u64).ok(),
                    _ => None,
                };
                // Euler-characteristic oracle from the cusp-form counts
                let chi = (|| -> Option<i64> {
                    let pi = p as i64;
                    let un1 = (pi - 3) / 2;
                    match m {
                        2 => Some(un1 * (un1 - 1) / 2 - closed_form(ClosedForm::CuspEps2, p as u64).ok()?),
                        3 => {
                            let d2 = closed_form(ClosedForm::Depth2Level, p as u64).ok()?;
                            Some(
                                d2 * un1 - un1 * (un1 - 1) * (un1 - 2) / 6
                                    - closed_form(ClosedForm::CuspV2Eps2, p as u64).ok()?,
                            )
                        }
                        _ => None,
                    }
                })();
                let agree = brute.is_some() && brute == closed && closed == chi;
                json!({
                    "p": p, "m": m,
                    "brute_force": brute,
                    "closed_form": closed,
                    "euler_oracle": chi,
                    "agree": agree,
                })
            })
            .collect();
        for r in computed {
            if r["agree"] != json!(true) {
                ok = false;
            }
            rows.push(r);
        }
        rows.sort_by_key(|r| (r["m"].as_u64(), r["p"].as_u64()));
        Ok(Report {
            command: "compare --diagonal".into(),
            manifest: manifest(mode),
            rows,
            columns: vec!["p", "m", "brute_force", "closed_form", "euler_oracle", "agree"],
            ok,
        })
    } else {
        let depth = args.depth.ok_or("compare needs --diagonal or --depth")?;
        let weights = parse_range(args.weights.as_deref().unwrap_or("1..20"))?;
        let series_coeffs = match depth {
            1 => series::a_m(1).expand(*weights.iter().max().unwrap() as usize),
            2 => series::d_2().expand(*weights.iter().max().unwrap() as usize),
            3 => series::d_3().expand(*weights.iter().max().unwrap() as usize),
            _ => return Err("compare supports depths 1..3".into()),
        };
        let kind = match depth {
            1 => ClosedForm::Depth1,
            2 => ClosedForm::Depth2,
            _ => ClosedForm::Depth3,
        };
        for &w in &weights {
            if w < depth {
                continue;
            }
            let brute = space_dim(w, depth, 1, Variant::D, compute)
                .map(|d| d as i64)
                .ok();
            let closed = closed_form(kind, w as u64).ok();
            let coeff = &series_coeffs[w as usize];
            let as_int: Option<i64> = if coeff.is_integer() {
                coeff.numer().try_into().ok()
            } else {
                None
            };
            let agree = brute.is_some() && brute == closed && closed == as_int;
            if !agree {
                ok = false;
            }
            rows.push(json!({
                "w": w, "m": depth,
                "brute_force": brute,
                "closed_form": closed,
                "series": as_int,
                "agree": agree,
            }));
        }
        Ok(Report {
            command: format!("compare --depth {depth}"),
            manifest: manifest(mode),
            rows,
            columns: vec!["w", "m", "brute_force", "closed_form", "series", "agree"],
            ok,
        })
    }
}
