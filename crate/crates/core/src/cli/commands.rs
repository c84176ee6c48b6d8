use serde::Serialize;

use super::parse::{parse_blocks, parse_map};
use super::{DeriveArgs, Failure, FdbArgs, Io, ModeArg, PartitionsArgs, VerifyArgs};
use crate::crdc::{partial_forward, partial_reverse};
use crate::error::Error;
use crate::faa_di_bruno::{enumerate_partitions, fdb_report, Mode};
use crate::higher_order::{del, rho};
use crate::laws::{run_suite, VerifyConfig};
use crate::poly::{ArityProfile, PolyMap};

/// Bell(12) is about four million; the next few explode.
const PARTITIONS_MAX_N: usize = 12;

type Outcome = Result<(), Failure>;

fn read_source(arg: &str, io: &mut Io<'_>) -> Result<String, Failure> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut text = String::new();
    io.stdin.read_to_string(&mut text)?;
    Ok(text.trim().to_string())
}

fn parse_source(src: &str, blocks: Option<&ArityProfile>) -> Result<PolyMap, Failure> {
    parse_map(src, blocks).map_err(|e| Failure::Source(e, src.to_string()))
}

fn print_json<T: Serialize>(value: &T, io: &mut Io<'_>) -> Outcome {
    serde_json::to_writer_pretty(&mut *io.stdout, value)?;
    writeln!(io.stdout)?;
    Ok(())
}

#[derive(Serialize)]
struct DeriveJson {
    map: String,
    blocks: Vec<usize>,
    codomain: usize,
    order: usize,
    mode: String,
    partial: Option<usize>,
}

pub(super) fn derive(args: &DeriveArgs, io: &mut Io<'_>) -> Outcome {
    let src = read_source(&args.map, io)?;
    let blocks = args.blocks.as_deref().map(parse_blocks).transpose()?;
    let f = parse_source(&src, blocks.as_ref())?;
    let mode: Mode = args.mode.into();
    let result = match args.partial {
        Some(j) => {
            if args.order != 1 {
                return Err(Error::Usage("--partial needs --order 1".into()).into());
            }
            if j == 0 || j > f.domain().len() {
                return Err(Error::Usage(format!(
                    "--partial {j} is outside the blocks {} (blocks are numbered from 1)",
                    f.domain()
                ))
                .into());
            }
            match args.mode {
                ModeArg::Reverse => partial_reverse(&f, j - 1)?,
                ModeArg::Forward => partial_forward(&f, j - 1)?,
            }
        }
        None if args.order == 0 => f,
        None => {
            let flat = f.flatten();
            match args.mode {
                ModeArg::Reverse => rho(&flat, args.order)?.result,
                ModeArg::Forward => del(&flat, args.order)?.result,
            }
        }
    };
    if args.json {
        return print_json(
            &DeriveJson {
                map: result.to_string(),
                blocks: result.domain().blocks().to_vec(),
                codomain: result.codomain_dim(),
                order: args.order,
                mode: mode.to_string(),
                partial: args.partial,
            },
            io,
        );
    }
    writeln!(io.stdout, "{result}")?;
    writeln!(io.stdout, "blocks: {}", result.domain())?;
    Ok(())
}

pub(super) fn verify(args: &VerifyArgs, io: &mut Io<'_>) -> Outcome {
    let config = VerifyConfig {
        seed: args.seed,
        cases: args.cases,
        max_dim: args.max_dim,
        max_deg: args.max_deg,
        max_order: args.max_order,
    };
    let report = run_suite(args.suite, &config)?;
    if args.json {
        print_json(&report, io)?;
    } else {
        io.stdout.write_all(report.render().as_bytes())?;
        writeln!(io.stderr, "elapsed: {} ms", report.elapsed_ms)?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Law)
    }
}

#[derive(Serialize)]
struct PartitionsJson {
    n: usize,
    count: usize,
    partitions: Vec<Vec<Vec<usize>>>,
}

pub(super) fn partitions(args: &PartitionsArgs, io: &mut Io<'_>) -> Outcome {
    if args.n == 0 {
        return Err(Error::Usage("N must be at least 1".into()).into());
    }
    if args.n > PARTITIONS_MAX_N {
        return Err(Error::Usage(format!("N is capped at {PARTITIONS_MAX_N}")).into());
    }
    let parts = enumerate_partitions(args.n);
    if args.json {
        return print_json(
            &PartitionsJson {
                n: args.n,
                count: parts.len(),
                partitions: parts.iter().map(|p| p.blocks().to_vec()).collect(),
            },
            io,
        );
    }
    for p in &parts {
        writeln!(io.stdout, "{p}")?;
    }
    writeln!(io.stdout, "count: {}", parts.len())?;
    Ok(())
}

#[derive(Serialize)]
struct SummandJson {
    partition: String,
    blocks: Vec<Vec<usize>>,
    sizes: Vec<usize>,
    factors: Vec<String>,
    map: String,
}

#[derive(Serialize)]
struct FdbJson {
    mode: String,
    n: usize,
    summands: Vec<SummandJson>,
    total: String,
    oracle: String,
    equal: bool,
    first_difference: Option<String>,
}

fn comma_list(items: &[usize]) -> String {
    let parts: Vec<String> = items.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

pub(super) fn fdb(args: &FdbArgs, io: &mut Io<'_>) -> Outcome {
    if args.n > args.max_n {
        return Err(Error::Usage(format!("--n {} exceeds --max-n {}", args.n, args.max_n)).into());
    }
    let f_blocks = args.dim.map(ArityProfile::single);
    let f = parse_source(&args.f, f_blocks.as_ref())?;
    let g_domain = ArityProfile::single(f.codomain_dim());
    let g = match parse_map(&args.g, Some(&g_domain)) {
        Ok(g) => g,
        Err(Error::BlockMismatch(_)) => {
            let used = parse_map(&args.g, None)?.domain().total();
            return Err(Error::InterfaceMismatch {
                inner_codomain: f.codomain_dim(),
                outer_domain: used,
            }
            .into());
        }
        Err(e) => return Err(Failure::Source(e, args.g.clone())),
    };
    let report = fdb_report(&f, &g, args.n, args.mode.into())?;
    let difference = report.first_difference().map(|d| d.to_string());

    if args.json {
        print_json(
            &FdbJson {
                mode: report.mode.to_string(),
                n: report.n,
                summands: report
                    .summands
                    .iter()
                    .map(|s| SummandJson {
                        partition: s.partition.to_string(),
                        blocks: s.partition.blocks().to_vec(),
                        sizes: s.sizes(),
                        factors: s.factors.iter().map(ToString::to_string).collect(),
                        map: s.map.to_string(),
                    })
                    .collect(),
                total: report.comparison.lhs.to_string(),
                oracle: report.comparison.rhs.to_string(),
                equal: report.equal(),
                first_difference: difference,
            },
            io,
        )?;
    } else {
        let out = &mut *io.stdout;
        writeln!(out, "f: {f}")?;
        writeln!(out, "g: {g}")?;
        writeln!(out, "mode: {}, n: {}", report.mode, report.n)?;
        writeln!(out, "summands: {}", report.summands.len())?;
        for (i, s) in report.summands.iter().enumerate() {
            let factors: Vec<String> = s.factors.iter().map(ToString::to_string).collect();
            writeln!(
                out,
                "  [{}] {}  sizes {}  {}",
                i + 1,
                s.partition,
                comma_list(&s.sizes()),
                factors.join(" ")
            )?;
            writeln!(out, "      {}", s.map)?;
        }
        writeln!(out, "blocks: {}", report.comparison.lhs.domain())?;
        writeln!(out, "total:  {}", report.comparison.lhs)?;
        writeln!(out, "oracle: {}", report.comparison.rhs)?;
        match &difference {
            None => writeln!(out, "verdict: equal")?,
            Some(d) => writeln!(out, "verdict: NOT equal, first difference at {d}")?,
        }
    }
    if report.equal() {
        Ok(())
    } else {
        Err(Failure::Law)
    }
}
