//! Command-line front end.

use std::collections::BTreeSet;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use gfquad::bench::{bench_field, BenchRecord};
use gfquad::enumeration::{expand, rows, tables};
use gfquad::invariants::{sample_scaled_congruence, SampleReport};
use gfquad::numtheory::prime_powers_up_to;
use gfquad::oracle::{cross_validate, FieldValidation};
use gfquad::text::field_from_text;
use gfquad::{
    build_extension, euler_phi, factor_x_q1_minus_c, is_primitive_quadratic, GaloisField,
    MonicQuadratic,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Largest q accepted by the exhaustive sweeps of `verify` and `bench`.
const SWEEP_BOUND: u64 = 256;

#[derive(Parser, Debug)]
#[command(
    name = "gfquad",
    version,
    about = "Primitive quadratics over small finite fields"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Config {
    /// Characteristic of the field.
    #[arg(long, global = true)]
    pub p: Option<u64>,
    /// Extension degree; the field is GF(p^m).
    #[arg(long, global = true, default_value_t = 1)]
    pub m: u32,
    /// Monic irreducible modulus over GF(p), e.g. "x^3+x+1".
    #[arg(long, global = true)]
    pub modulus: Option<String>,
    /// Primitive element: an integer (canonical value), "[c0,c1,...]"
    /// coordinates, or a polynomial in x over GF(p).
    #[arg(long, global = true)]
    pub alpha: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Upper bound on q for sweeps.
    #[arg(long, global = true)]
    pub q_max: Option<u64>,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide primitivity of a monic quadratic. Exit 0 if primitive, 1 if not.
    Test {
        /// The polynomial, e.g. "x^2+x+2" or "x^2 + a^4*x + a".
        poly: String,
    },
    /// List every primitive quadratic of the field.
    Enumerate,
    /// Factor x^(q+1) - c into irreducibles.
    Factor {
        /// The nonzero constant c.
        c: String,
    },
    /// Cross-check the characterization and the enumeration against the
    /// order computation for every q up to --q-max (default 16).
    Verify {
        /// Number of sampled scaled-congruence cases.
        #[arg(long, default_value_t = 1000)]
        samples: u64,
    },
    /// Compare the cost of the characterization and of the order
    /// computation, per field.
    Bench {
        /// Omit wall-clock columns so the output is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
}

type CliResult<T> = std::result::Result<T, String>;

impl Config {
    fn has_field(&self) -> bool {
        self.p.is_some()
    }

    pub fn field(&self) -> CliResult<GaloisField> {
        let p = self.p.ok_or("--p is required for this command")?;
        field_from_text(p, self.m, self.modulus.as_deref(), self.alpha.as_deref())
            .map_err(|e| e.to_string())
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<u8> {
    if let Some(jobs) = cli.config.jobs {
        // Ignore the error raised when a pool already exists (repeated runs
        // in one process); the first configuration wins.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    // The field, when given, must be valid whatever the command.
    let field = if cli.config.has_field() {
        Some(cli.config.field()?)
    } else {
        None
    };
    let need_field = || {
        field
            .as_ref()
            .ok_or_else(|| "--p is required for this command".to_string())
    };
    let fmt = cli.config.format;
    let code = match &cli.command {
        Command::Test { poly } => cmd_test(need_field()?, poly, fmt, out)?,
        Command::Enumerate => cmd_enumerate(need_field()?, fmt, out)?,
        Command::Factor { c } => cmd_factor(need_field()?, c, fmt, out)?,
        Command::Verify { samples } => cmd_verify(
            cli.config.q_max.unwrap_or(16),
            *samples,
            cli.config.seed,
            fmt,
            out,
        )?,
        Command::Bench { no_timing } => {
            let fields = match (cli.config.q_max, field) {
                (Some(q_max), _) => sweep_fields(q_max)?,
                (None, Some(f)) => vec![f],
                (None, None) => return Err("bench needs --p or --q-max".into()),
            };
            cmd_bench(&fields, *no_timing, fmt, out)?
        }
    };
    Ok(code)
}

fn io(e: impl std::fmt::Display) -> String {
    format!("write failed: {e}")
}

fn sweep_fields(q_max: u64) -> CliResult<Vec<GaloisField>> {
    if !(2..=SWEEP_BOUND).contains(&q_max) {
        return Err(format!("--q-max must lie in [2, {SWEEP_BOUND}]"));
    }
    prime_powers_up_to(q_max)
        .into_iter()
        .map(|q| GaloisField::of_order(q).map_err(|e| e.to_string()))
        .collect()
}

fn field_name(field: &GaloisField) -> String {
    format!("GF({})", field.order())
}

/// Left-aligned columns separated by two spaces.
fn write_table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> CliResult<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header.to_vec())).map_err(io)?;
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect())).map_err(io)?;
    }
    Ok(())
}

fn write_csv<T: Serialize>(out: &mut dyn Write, records: &[T], header: &[&str]) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    if records.is_empty() && !header.is_empty() {
        w.write_record(header).map_err(io)?;
    }
    for r in records {
        w.serialize(r).map_err(io)?;
    }
    w.flush().map_err(io)
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io)?;
    writeln!(out).map_err(io)
}

fn set_text(s: &BTreeSet<u32>) -> String {
    let items: Vec<String> = s.iter().map(u32::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn cmd_test(field: &GaloisField, text: &str, fmt: Format, out: &mut dyn Write) -> CliResult<u8> {
    let poly = field.parse_poly(text).map_err(|e| e.to_string())?;
    if poly.degree() != Some(2) {
        return Err(format!("{text:?} is not of degree two"));
    }
    let f = MonicQuadratic::from_poly(&poly).ok_or_else(|| format!("{text:?} is not monic"))?;
    let verdict = is_primitive_quadratic(field, f);
    let record = verdict.record(field);
    match fmt {
        Format::Json => write_json(out, &record)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                primitive: bool,
                reason: &'a str,
                h_terms: String,
                q_class: &'a str,
            }
            let row = Row {
                primitive: record.primitive,
                reason: &record.reason,
                h_terms: record.h_terms.clone().unwrap_or_default().join(" "),
                q_class: &record.q_class,
            };
            write_csv(out, &[row], &[])?;
        }
        Format::Table => {
            let mut rows: Vec<Vec<String>> = vec![
                vec!["polynomial".into(), field.format_poly(&poly)],
                vec!["field".into(), field_name(field)],
                vec!["primitive".into(), record.primitive.to_string()],
                vec!["reason".into(), record.reason.clone()],
                vec!["q_class".into(), record.q_class.clone()],
            ];
            if let Some(h) = &verdict.h_terms {
                rows.push(vec!["h_terms".into(), field.format_terms(h)]);
            }
            for row in rows {
                writeln!(out, "{:<10}  {}", row[0], row[1]).map_err(io)?;
            }
        }
    }
    Ok(if verdict.primitive {
        EXIT_OK
    } else {
        EXIT_FAIL
    })
}

fn cmd_enumerate(field: &GaloisField, fmt: Format, out: &mut dyn Write) -> CliResult<u8> {
    let t = tables(field);
    let polys = expand(field, &t);
    let listing = rows(field, &polys);
    let q = field.order() as u64;
    let expected = euler_phi(q * q - 1) / 2;
    let check = polys.len() as u64 == expected;
    match fmt {
        Format::Json => write_json(
            out,
            &json!({
                "q": q,
                "delta": t.delta,
                "R": t.r,
                "B": t.b,
                "J": t.j,
                "I": t.i,
                "count": polys.len(),
                "expected_count": expected,
                "count_check": check,
                "polynomials": listing,
            }),
        )?,
        Format::Csv => write_csv(out, &listing, &["q", "b", "c", "b_log", "c_log"])?,
        Format::Table => {
            let d = t.delta;
            writeln!(out, "{}  delta = {d}", field_name(field)).map_err(io)?;
            writeln!(out, "R_{d} = {}", set_text(&t.r)).map_err(io)?;
            writeln!(out, "B_{d} = {}", set_text(&t.b)).map_err(io)?;
            writeln!(out, "J_{d} = {}", set_text(&t.j)).map_err(io)?;
            writeln!(out, "I_{d} = {}", set_text(&t.i)).map_err(io)?;
            writeln!(
                out,
                "count = {}, phi(q^2-1)/2 = {expected}, {}",
                polys.len(),
                if check { "match" } else { "MISMATCH" }
            )
            .map_err(io)?;
            writeln!(out).map_err(io)?;
            let table: Vec<Vec<String>> = polys
                .iter()
                .zip(&listing)
                .map(|(f, r)| {
                    vec![
                        r.q.to_string(),
                        r.b.clone(),
                        r.c.clone(),
                        r.b_log.to_string(),
                        r.c_log.to_string(),
                        field.format_poly(&f.to_poly(field)),
                    ]
                })
                .collect();
            write_table(
                out,
                &["q", "b", "c", "b_log", "c_log", "polynomial"],
                &table,
            )?;
        }
    }
    Ok(if check { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_factor(field: &GaloisField, text: &str, fmt: Format, out: &mut dyn Write) -> CliResult<u8> {
    let c = field.parse_elem(text).map_err(|e| e.to_string())?;
    if c.is_zero() {
        return Err("c must be nonzero".into());
    }
    let ext = build_extension(field).map_err(|e| e.to_string())?;
    let report = factor_x_q1_minus_c(&ext, c).map_err(|e| e.to_string())?;
    let q = field.order() as u64;
    let show = |p: &gfquad::Poly| field.format_poly(p);
    let linear: Vec<String> = report
        .linear_factors
        .iter()
        .map(|&r| show(&gfquad::Poly::new(field, vec![field.neg(r), field.one()]).expect("valid")))
        .collect();
    let quadratic: Vec<String> = report
        .quadratic_factors
        .iter()
        .map(|f| show(&f.to_poly(field)))
        .collect();
    let target = show(&report.target(field));
    let product = show(&report.expand(field));
    let matches = report.product_matches(field);

    #[derive(Serialize)]
    struct Row {
        kind: &'static str,
        factor: String,
        b: String,
        c: String,
    }
    let mut factor_rows: Vec<Row> = report
        .linear_factors
        .iter()
        .zip(&linear)
        .map(|(&r, s)| Row {
            kind: "linear",
            factor: s.clone(),
            b: field.format_elem(field.one()),
            c: field.format_elem(field.neg(r)),
        })
        .collect();
    factor_rows.extend(
        report
            .quadratic_factors
            .iter()
            .zip(&quadratic)
            .map(|(f, s)| Row {
                kind: "quadratic",
                factor: s.clone(),
                b: field.format_elem(f.b),
                c: field.format_elem(f.c),
            }),
    );

    match fmt {
        Format::Json => write_json(
            out,
            &json!({
                "q": q,
                "c": field.format_elem(c),
                "class_index": report.class_index,
                "class_size": report.class_elements.len(),
                "target": target,
                "factors": factor_rows,
                "product": product,
                "product_matches": matches,
            }),
        )?,
        Format::Csv => write_csv(out, &factor_rows, &["kind", "factor", "b", "c"])?,
        Format::Table => {
            writeln!(out, "{target} over {}", field_name(field)).map_err(io)?;
            writeln!(
                out,
                "cyclotomic class C_{} of size {}",
                report.class_index,
                report.class_elements.len()
            )
            .map_err(io)?;
            writeln!(out).map_err(io)?;
            let table: Vec<Vec<String>> = factor_rows
                .iter()
                .map(|r| {
                    vec![
                        r.kind.to_string(),
                        r.factor.clone(),
                        r.b.clone(),
                        r.c.clone(),
                    ]
                })
                .collect();
            write_table(out, &["kind", "factor", "b", "c"], &table)?;
            writeln!(out).map_err(io)?;
            writeln!(
                out,
                "product = {product} ({})",
                if matches { "matches" } else { "MISMATCH" }
            )
            .map_err(io)?;
        }
    }
    Ok(if matches { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_verify(
    q_max: u64,
    samples: u64,
    seed: u64,
    fmt: Format,
    out: &mut dyn Write,
) -> CliResult<u8> {
    let fields = sweep_fields(q_max)?;
    let report = cross_validate(q_max);
    let sampled: SampleReport = sample_scaled_congruence(&fields, samples, seed);
    let passed = report.all_passed() && sampled.failures == 0;
    match fmt {
        Format::Json => write_json(
            out,
            &json!({
                "fields": report.fields,
                "scaled_congruence": sampled,
                "passed": passed,
            }),
        )?,
        Format::Csv => write_csv(
            out,
            &report.fields,
            &[
                "q",
                "total_quadratics",
                "primitive_count",
                "phi_check",
                "agreement",
                "first_mismatch",
            ],
        )?,
        Format::Table => {
            let table: Vec<Vec<String>> = report
                .fields
                .iter()
                .map(|v: &FieldValidation| {
                    vec![
                        v.q.to_string(),
                        v.total_quadratics.to_string(),
                        v.primitive_count.to_string(),
                        v.phi_check.to_string(),
                        v.agreement.to_string(),
                        v.first_mismatch.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            write_table(
                out,
                &[
                    "q",
                    "total_quadratics",
                    "primitive_count",
                    "phi_check",
                    "agreement",
                    "first_mismatch",
                ],
                &table,
            )?;
            writeln!(out).map_err(io)?;
            writeln!(
                out,
                "scaled congruence: {} cases, seed {}, {} failures",
                sampled.cases, sampled.seed, sampled.failures
            )
            .map_err(io)?;
            if let Some(f) = &sampled.first_failure {
                writeln!(out, "first failure: {f}").map_err(io)?;
            }
            writeln!(out, "{}", if passed { "PASS" } else { "FAIL" }).map_err(io)?;
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_bench(
    fields: &[GaloisField],
    no_timing: bool,
    fmt: Format,
    out: &mut dyn Write,
) -> CliResult<u8> {
    for f in fields {
        if f.order() as u64 > SWEEP_BOUND {
            return Err(format!("bench is limited to q <= {SWEEP_BOUND}"));
        }
    }
    let mut records: Vec<BenchRecord> = fields.iter().map(bench_field).collect();
    if no_timing {
        for r in &mut records {
            r.characterization_us = 0;
            r.oracle_us = 0;
            r.speedup = None;
        }
    }
    let opt = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |d| d.to_string());
    match fmt {
        Format::Json => write_json(out, &records)?,
        Format::Csv => write_csv(out, &records, &[])?,
        Format::Table => {
            let mut header = vec![
                "q",
                "q_class",
                "condition",
                "dividend_degree",
                "order_dividend_degree",
                "divisions",
                "characterization_ops",
                "oracle_ops",
                "op_ratio",
            ];
            if !no_timing {
                header.extend(["characterization_us", "oracle_us", "speedup"]);
            }
            let table: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    let mut row = vec![
                        r.q.to_string(),
                        r.q_class.clone(),
                        r.condition.clone(),
                        opt(r.dividend_degree),
                        r.order_dividend_degree.to_string(),
                        r.divisions.to_string(),
                        r.characterization_ops.to_string(),
                        r.oracle_ops.to_string(),
                        r.op_ratio
                            .map_or_else(|| "-".to_string(), |x| format!("{x:.1}")),
                    ];
                    if !no_timing {
                        row.push(r.characterization_us.to_string());
                        row.push(r.oracle_us.to_string());
                        row.push(
                            r.speedup
                                .map_or_else(|| "-".to_string(), |x| format!("{x:.1}")),
                        );
                    }
                    row
                })
                .collect();
            write_table(out, &header, &table)?;
        }
    }
    Ok(EXIT_OK)
}
