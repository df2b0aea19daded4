use std::fs;
use std::io::Write;
use std::path::Path;

use num_rational::BigRational;
use umfb::special::{
    compound_poisson_moments, cumulant_table, cumulants_to_moments, format_rational, hermite, hermite_series_check,
    hermite_via_bell, moment_table, moments_to_cumulants, parse_rational,
};
use umfb::{
    chain_rule_derivative_with, count_partitions, equivalence_check, generalized_bell_with, partitions, render,
    umfb_with, CompositionSpec, Equivalence, FormulaPoly, HermiteKind, InnerMode, MomentTable, MultiIndex,
    SymmetricMatrix, UmfbOptions,
};

use crate::args::{
    BenchArgs, ComputeArgs, HermiteArgs, HermiteKindArg, HermiteRoute, Mode, PartitionsArgs, PoissonArgs, TableArgs,
    VerifyArgs,
};
use crate::bench::{builtin_rows, parse_rows, run_bench};
use crate::error::CliError;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn read_table(path: &Path) -> Result<MomentTable, CliError> {
    MomentTable::from_json(&read(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// The polynomial `compute` prints, before rendering.
pub fn compute_poly(args: &ComputeArgs, opts: &UmfbOptions) -> Result<FormulaPoly, CliError> {
    if let Some(m) = args.m {
        if m != args.i.len() {
            return Err(CliError::Usage(format!("-m {m} does not match index {} of length {}", args.i, args.i.len())));
        }
    }
    let n = match (args.mode, args.n) {
        (Mode::UniOuter, Some(n)) if n != 1 => {
            return Err(CliError::Usage(format!("--mode uni-outer needs -n 1, got {n}")));
        }
        (_, Some(0)) => return Err(CliError::Usage("-n must be at least 1".into())),
        (_, Some(n)) => n,
        (_, None) => 1,
    };
    let inner_mode = if args.mode == Mode::SharedInner { InnerMode::Shared } else { InnerMode::Distinct };
    let spec = CompositionSpec::new(args.i.clone(), n, inner_mode)?;
    let poly = match args.mode {
        Mode::Bell => generalized_bell_with(&spec, opts)?,
        _ => umfb_with(&spec, opts)?,
    };
    Ok(poly)
}

pub fn compute(args: &ComputeArgs, opts: &UmfbOptions, out: &mut dyn Write) -> Result<(), CliError> {
    let poly = compute_poly(args, opts)?;
    let mut text = render(&poly, args.format.into());
    text.push('\n');
    match &args.output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn list_partitions(args: &PartitionsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.count_only {
        writeln!(out, "{}", count_partitions(&args.i)?)?;
        return Ok(());
    }
    for lambda in partitions(&args.i)? {
        writeln!(out, "{}", lambda.to_matrix_string())?;
    }
    Ok(())
}

/// Result of an equivalence sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub cases: usize,
    pub first_mismatch: Option<String>,
}

/// Compares the partition formula with the chain rule for every index with
/// `|i| <= max_order` in `1..=max_m` variables, `1..=max_n` inner functions
/// and both inner modes. Stops at the first disagreement.
pub fn verify_sweep(
    max_order: u32,
    max_n: usize,
    max_m: usize,
    opts: &UmfbOptions,
    inject_fault: bool,
) -> Result<SweepReport, CliError> {
    let mut cases = 0;
    for m in 1..=max_m {
        for i in MultiIndex::all_up_to(m, max_order) {
            for n in 1..=max_n {
                for mode in [InnerMode::Distinct, InnerMode::Shared] {
                    let spec = CompositionSpec::new(i.clone(), n, mode)?;
                    let mut fast = umfb_with(&spec, opts)?;
                    if inject_fault && !i.is_zero() {
                        fast = corrupt(&fast);
                    }
                    let (slow, _) = chain_rule_derivative_with(&spec, opts)?;
                    cases += 1;
                    if let Equivalence::Differ(d) = equivalence_check(&fast, &slow)? {
                        let report = format!("i={i} n={n} m={m} mode={mode:?}: {d}");
                        return Ok(SweepReport { cases, first_mismatch: Some(report) });
                    }
                }
            }
        }
    }
    Ok(SweepReport { cases, first_mismatch: None })
}

fn corrupt(p: &FormulaPoly) -> FormulaPoly {
    let (n, m) = p.dims();
    let mut terms: Vec<_> = p.terms().iter().map(|t| (t.coeff.clone(), t.factors.clone())).collect();
    if let Some(first) = terms.first_mut() {
        first.0 += 1;
    }
    FormulaPoly::from_terms(n, m, terms)
}

pub fn verify(args: &VerifyArgs, opts: &UmfbOptions, out: &mut dyn Write) -> Result<(), CliError> {
    let report = verify_sweep(args.max_order, args.max_n, args.max_m, opts, args.inject_fault)?;
    match report.first_mismatch {
        Some(msg) => Err(CliError::Mismatch(msg)),
        None => {
            writeln!(out, "ok: {} cases agree", report.cases)?;
            Ok(())
        }
    }
}

pub fn bench(args: &BenchArgs, opts: &UmfbOptions, out: &mut dyn Write, warn: &mut dyn Write) -> Result<(), CliError> {
    let rows = match &args.rows {
        Some(path) => parse_rows(&read(path)?)?,
        None => builtin_rows(),
    };
    match &args.csv {
        Some(path) => {
            let file = fs::File::create(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            run_bench(&rows, opts, file, warn)?;
        }
        None => {
            run_bench(&rows, opts, out, warn)?;
        }
    }
    Ok(())
}

fn print_value(out: &mut dyn Write, v: &BigRational) -> Result<(), CliError> {
    writeln!(out, "{}", format_rational(v))?;
    Ok(())
}

pub fn cumulants(args: &TableArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let table = read_table(&args.table)?;
    match &args.i {
        Some(i) => print_value(out, &moments_to_cumulants(&table, i)?),
        None => {
            writeln!(out, "{}", cumulant_table(&table)?.to_json())?;
            Ok(())
        }
    }
}

pub fn moments(args: &TableArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let table = read_table(&args.table)?;
    match &args.i {
        Some(i) => print_value(out, &cumulants_to_moments(&table, i)?),
        None => {
            writeln!(out, "{}", moment_table(&table)?.to_json())?;
            Ok(())
        }
    }
}

pub fn poisson(args: &PoissonArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let count = read_table(&args.count)?;
    let summands = read_table(&args.summands)?;
    match &args.i {
        Some(i) => print_value(out, &compound_poisson_moments(&count, &summands, i)?),
        None => {
            for (i, _) in summands.iter() {
                let v = compound_poisson_moments(&count, &summands, i)?;
                writeln!(out, "{i} {}", format_rational(&v))?;
            }
            Ok(())
        }
    }
}

fn parse_vector(s: &str) -> Result<Vec<BigRational>, CliError> {
    s.split(',').map(|t| parse_rational(t).map_err(|e| CliError::Usage(e.to_string()))).collect()
}

fn parse_matrix(s: &str) -> Result<(usize, Vec<BigRational>), CliError> {
    let rows: Vec<Vec<BigRational>> = s.split(';').map(parse_vector).collect::<Result<_, _>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Usage(format!("Σ must be square, got {s:?}")));
    }
    Ok((n, rows.into_iter().flatten().collect()))
}

fn hermite_value<F: umfb::scalar::Scalar>(
    args: &HermiteArgs,
    sigma: SymmetricMatrix<F>,
    x: Vec<F>,
) -> Result<F, CliError> {
    let kind = match args.kind {
        HermiteKindArg::Standard => HermiteKind::Standard,
        HermiteKindArg::Scaled => HermiteKind::Scaled,
    };
    let v = match args.route {
        HermiteRoute::Umbral => hermite(&args.i, &sigma, &x, kind)?,
        HermiteRoute::Bell => hermite_via_bell(&args.i, &sigma, &x, kind)?,
        HermiteRoute::Series => hermite_series_check(&args.i, &sigma, &x, kind)?,
    };
    Ok(v)
}

pub fn hermite_cmd(args: &HermiteArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (n, entries) = parse_matrix(&args.sigma)?;
    let x = parse_vector(&args.x)?;
    if args.float {
        use umfb::scalar::Scalar;
        let sigma = SymmetricMatrix::new(n, entries.iter().map(f64::from_ratio).collect())?;
        let x = x.iter().map(f64::from_ratio).collect();
        writeln!(out, "{}", hermite_value(args, sigma, x)?)?;
        Ok(())
    } else {
        let sigma = SymmetricMatrix::new(n, entries)?;
        print_value(out, &hermite_value(args, sigma, x)?)
    }
}
