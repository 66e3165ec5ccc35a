//! Command-line front door: every pipeline stage as a subcommand, with
//! `table` and `json` output.
//!
//! Exit codes: 0 on success, 2 on flag errors (including invalid prime
//! powers and malformed group expressions), 1 with the structured error
//! name on pipeline refusals (`NOT_COLLAPSED`, `SMASHING_FAILS`, …).
//! Results go to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::abelian::ExtAb;
use crate::ahss::{analyze_differentials, build_e2};
use crate::assembly::{assemble, check_smashing, relative_k};
use crate::homology::{
    higher_rational_note, homology_with_coefficients, tor_group_ring, GroupDescriptor,
};
use crate::kfield::{k_graded, FieldDescriptor, GradedAb};
use crate::render::{e2_diagram, graded_table, two_column_table};
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "kassembly",
    version,
    about = "Exact K-theory of group rings k[G] via assembly and the Atiyah-Hirzebruch spectral sequence"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Args)]
struct CommonArgs {
    /// Group G, e.g. Q, Z, Z^2+Q, or 1 for the trivial group
    #[arg(long)]
    group: String,
    /// Field order q (a prime power)
    #[arg(long)]
    field: u64,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Quillen K-groups K_n(F_q) for 0 <= n <= max
    Kfield {
        /// Field order (a prime power)
        #[arg(long)]
        q: u64,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Group homology H_p(BG; A) for 0 <= p <= max
    Homology {
        /// Group G, e.g. Q, Z, Z^2+Q, or 1 for the trivial group
        #[arg(long)]
        group: String,
        #[arg(long)]
        max: usize,
        /// Coefficients: Z (default), Q, Z/6, F4, or sums like Z^2+Z/4
        #[arg(long)]
        coeff: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Tor_n over the group algebra: Tor^{F_q[G]}_n(F_q, F_q)
    Tor {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        max: usize,
    },
    /// Check the smashing hypothesis k (x)^L_R k ~ k via Tor vanishing
    Smashing {
        #[command(flatten)]
        common: CommonArgs,
        /// Probe depth (default: the homological rank of G)
        #[arg(long)]
        probe: Option<usize>,
    },
    /// The Atiyah-Hirzebruch E^2 page for BG and K(F_q)
    E2 {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        max: usize,
    },
    /// Assembled K-groups K_n(F_q[G]) with hypotheses and audit
    Assemble {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        max: usize,
    },
    /// Relative K-groups K_n(R, k) of the augmentation R = F_q[G] -> F_q
    Relative {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        max: usize,
    },
}

/// Parse a coefficient expression: `+`-joined terms `Z`, `Z^r`, `Q`,
/// `Q^s`, `Z/d`, or `Fq` for the additive group of a finite field.
fn parse_coeff(s: &str) -> Result<ExtAb> {
    let bad = || {
        Error::InvalidGroup(format!(
            "cannot parse coefficients '{s}' (try Z, Q, Z/6, F4)"
        ))
    };
    let mut acc = ExtAb::zero();
    for term in s.trim().split('+') {
        let term = term.trim();
        let piece = if let Some(d) = term.strip_prefix("Z/") {
            let d: BigUint = d.parse().map_err(|_| bad())?;
            if num_traits::Zero::is_zero(&d) {
                return Err(bad());
            }
            ExtAb::new(0, vec![d], 0)
        } else if let Some(q) = term.strip_prefix('F') {
            let q: u64 = q.parse().map_err(|_| bad())?;
            FieldDescriptor::from_order(q)?.additive_group()
        } else {
            match term.split_once('^') {
                Some(("Z", r)) => ExtAb::free(r.parse().map_err(|_| bad())?),
                Some(("Q", s)) => ExtAb::rational(s.parse().map_err(|_| bad())?),
                None if term == "Z" => ExtAb::free(1),
                None if term == "Q" => ExtAb::rational(1),
                _ => return Err(bad()),
            }
        };
        acc = acc.direct_sum(&piece);
    }
    Ok(acc)
}

fn emit_graded(out: &mut dyn Write, format: Format, label: &str, graded: &GradedAb) {
    match format {
        Format::Table => {
            let _ = write!(out, "{}", graded_table(label, graded));
        }
        Format::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string(graded).expect("serialize"));
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, diag: &mut dyn Write) -> Result<()> {
    match command {
        Command::Kfield { q, max, format } => {
            let field = FieldDescriptor::from_order(q)?;
            if format == Format::Table {
                let _ = writeln!(out, "K_n({field}) for 0 <= n <= {max}");
            }
            emit_graded(out, format, "K_n", &k_graded(&field, max));
        }
        Command::Homology {
            group,
            max,
            coeff,
            format,
        } => {
            let g: GroupDescriptor = group.parse()?;
            let coeff = match coeff {
                Some(expr) => parse_coeff(&expr)?,
                None => ExtAb::free(1),
            };
            let groups: Vec<ExtAb> = (0..=max as i64)
                .map(|p| homology_with_coefficients(&g, &coeff, p))
                .collect();
            if format == Format::Table {
                let _ = writeln!(out, "H_p(B({g}); {coeff}) for 0 <= p <= {max}");
            }
            emit_graded(out, format, "H_p", &GradedAb::from_groups(groups));
            for p in 0..=max as i64 {
                if let Some(note) = higher_rational_note(&g, p) {
                    let _ = writeln!(diag, "note: {note}");
                }
            }
        }
        Command::Tor { common, max } => {
            let (g, field) = parse_common(&common)?;
            let groups: Vec<ExtAb> = (0..=max as i64)
                .map(|n| tor_group_ring(&g, &field, n))
                .collect();
            if common.format == Format::Table {
                let _ = writeln!(out, "Tor^R_n(k, k) for R = {field}[{g}], 0 <= n <= {max}");
            }
            emit_graded(out, common.format, "Tor_n", &GradedAb::from_groups(groups));
        }
        Command::Smashing { common, probe } => {
            let (g, field) = parse_common(&common)?;
            let probe = probe.unwrap_or_else(|| g.rank().max(1));
            if probe == 0 {
                return Err(Error::InvalidGroup("probe depth must be >= 1".into()));
            }
            let report = check_smashing(&g, &field, probe);
            match common.format {
                Format::Table => {
                    let verdict = if report.holds { "holds" } else { "fails" };
                    let _ = writeln!(out, "k (x)^L_R k ~ k for R = {field}[{g}]: {verdict}");
                    let rows: Vec<(String, String)> = report
                        .witness
                        .iter()
                        .map(|(n, t)| (n.to_string(), t.to_string()))
                        .collect();
                    let _ = write!(out, "{}", two_column_table(("n", "Tor_n"), &rows));
                }
                Format::Json => {
                    let _ = writeln!(
                        out,
                        "{}",
                        serde_json::to_string(&report).expect("serialize")
                    );
                }
            }
        }
        Command::E2 { common, max } => {
            let (g, field) = parse_common(&common)?;
            let page = build_e2(&g, &field, max);
            match common.format {
                Format::Table => {
                    let _ = writeln!(out, "E^2_{{p,q}} = H_p(B({g}); K_q({field}))");
                    let _ = write!(out, "{}", e2_diagram(&page));
                    let report = analyze_differentials(&page);
                    let undetermined = report.undetermined().count();
                    if undetermined == 0 {
                        let _ = writeln!(
                            out,
                            "differentials: all {} vanish for degree reasons",
                            report.differentials.len()
                        );
                    } else {
                        let _ = writeln!(out, "differentials: {undetermined} undetermined");
                    }
                }
                Format::Json => {
                    let _ = writeln!(out, "{}", serde_json::to_string(&page).expect("serialize"));
                }
            }
        }
        Command::Assemble { common, max } => {
            let (g, field) = parse_common(&common)?;
            let result = assemble(&g, &field, max)?;
            match common.format {
                Format::Table => {
                    let _ = writeln!(out, "K_n({field}[{g}]) by assembly, 0 <= n <= {max}");
                    let _ = writeln!(out, "hypotheses: {}", result.hypotheses.fj_status);
                    let _ = write!(out, "{}", graded_table("K_n", &result.k_groups));
                    for use_ in &result.audit {
                        let _ = writeln!(
                            out,
                            "extension: {:?} at degree {}, (p,q) = ({},{})",
                            use_.rule, use_.degree, use_.p, use_.q
                        );
                    }
                }
                Format::Json => {
                    let _ = writeln!(
                        out,
                        "{}",
                        serde_json::to_string(&result).expect("serialize")
                    );
                }
            }
        }
        Command::Relative { common, max } => {
            let (g, field) = parse_common(&common)?;
            let fiber = relative_k(&g, &field, max)?;
            if common.format == Format::Table {
                let _ = writeln!(out, "K_n(R, k) for R = {field}[{g}], 0 <= n <= {max}");
            }
            emit_graded(out, common.format, "K_n(R,k)", &fiber);
        }
    }
    Ok(())
}

fn parse_common(common: &CommonArgs) -> Result<(GroupDescriptor, FieldDescriptor)> {
    let g: GroupDescriptor = common.group.parse()?;
    let field = FieldDescriptor::from_order(common.field)?;
    Ok((g, field))
}

/// Run the CLI against explicit argv and output streams; returns the exit
/// code. The binary is a thin wrapper over this.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let _ = write!(err, "{e}");
            return 2;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(e @ (Error::InvalidField(_) | Error::InvalidGroup(_))) => {
            // flag-level validation: usage error
            let _ = writeln!(err, "{e}");
            let _ = writeln!(err, "run with --help for flag grammar");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("kassembly").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn kfield_table_and_json_agree() {
        let (code, table, _) = run_capture(&["kfield", "--q", "2", "--max", "5"]);
        assert_eq!(code, 0);
        for (n, value) in [(0, "Z"), (3, "Z/3"), (5, "Z/7")] {
            assert!(table.contains(&format!("{n} | {value}")), "{table}");
        }
        let (code, json, _) =
            run_capture(&["kfield", "--q", "2", "--max", "5", "--format", "json"]);
        assert_eq!(code, 0);
        let graded: GradedAb = serde_json::from_str(json.trim()).unwrap();
        assert_eq!(
            graded,
            k_graded(&FieldDescriptor::from_order(2).unwrap(), 5)
        );
    }

    #[test]
    fn relative_table_shows_the_theorem() {
        let (code, table, _) = run_capture(&[
            "relative", "--group", "Q", "--field", "2", "--max", "6", "--format", "table",
        ]);
        assert_eq!(code, 0);
        assert!(table.contains("1 | Q"), "{table}");
        for n in [0, 2, 3, 4, 5, 6] {
            assert!(table.contains(&format!("{n} | 0")), "{table}");
        }
    }

    #[test]
    fn pipeline_refusals_exit_one_with_name() {
        let (code, _, err) =
            run_capture(&["relative", "--group", "Z", "--field", "2", "--max", "4"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("SMASHING_FAILS"), "{err}");
    }

    #[test]
    fn flag_errors_exit_two() {
        // not a prime power
        let (code, _, err) = run_capture(&["kfield", "--q", "6", "--max", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("INVALID_FIELD"), "{err}");
        // negative bound
        let (code, _, _) = run_capture(&["kfield", "--q", "2", "--max", "-1"]);
        assert_eq!(code, 2);
        // bad group expression
        let (code, _, err) = run_capture(&["homology", "--group", "S^1", "--max", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("INVALID_GROUP"), "{err}");
        // unknown subcommand
        let (code, _, _) = run_capture(&["frobenius"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn coefficient_grammar() {
        assert_eq!(parse_coeff("Z").unwrap(), ExtAb::free(1));
        assert_eq!(
            parse_coeff("F4").unwrap(),
            ExtAb::new(0, vec![2u32.into(), 2u32.into()], 0)
        );
        assert_eq!(
            parse_coeff("Z^2+Z/4").unwrap(),
            ExtAb::new(2, vec![4u32.into()], 0)
        );
        assert!(parse_coeff("Z/0").is_err());
        assert!(parse_coeff("banana").is_err());
    }

    #[test]
    fn e2_table_matches_the_two_column_shape() {
        let (code, table, _) = run_capture(&[
            "e2", "--group", "Q", "--field", "2", "--max", "6", "--format", "table",
        ]);
        assert_eq!(code, 0);
        assert!(table.contains("all") && table.contains("vanish"), "{table}");
        // bottom row shows Z and Q in columns p = 0, 1
        let bottom = table.lines().find(|l| l.starts_with("0 |")).unwrap();
        assert!(bottom.contains('Z') && bottom.contains('Q'), "{bottom}");
    }

    #[test]
    fn homology_notes_go_to_stderr() {
        let (code, _, err) = run_capture(&[
            "homology", "--group", "Q^2", "--max", "2", "--format", "json",
        ]);
        assert_eq!(code, 0);
        assert!(err.contains("note:"), "{err}");
    }
}
