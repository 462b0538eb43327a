//! `ga` — exact Clifford algebra engine for square roots of -1.

mod golden_store;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::json;

use ga_core::{
    all_class_reports, centralizer, classify_signature, double_split, find_conjugator_seeded,
    inverse, parse_multivector, sample_manifold, spinor_representation, GaError, Result, Signature,
};
use output::{aligned_table, matrix_grid};

#[derive(Parser)]
#[command(
    name = "ga",
    version,
    about = "Exact Clifford algebra engine: conjugacy classes of square roots of -1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for randomized searches (fixed seed gives bit-identical output)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Points per axis for manifold sampling
    #[arg(long, global = true, default_value_t = 41)]
    grid: u32,

    /// Override the maximum supported n
    #[arg(long = "max-n", global = true, default_value_t = 12)]
    max_n: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Classify Cl(p,q) by its isomorphic matrix ring
    Classify { p: u32, q: u32 },
    /// One row per conjugacy class of square roots of -1
    Roots { p: u32, q: u32 },
    /// Re-derive golden root tables and report any mismatch
    Verify {
        p: Option<u32>,
        q: Option<u32>,
        /// Verify an explicit golden file instead of a shipped table
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Verify every shipped table
        #[arg(long)]
        all: bool,
    },
    /// Print the spinor representation of the generators (ring C)
    Represent { p: u32, q: u32 },
    /// Basis of the centralizer of an element
    Centralizer {
        p: u32,
        q: u32,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Search an invertible v with v^-1 f v = g
    Conjugate {
        p: u32,
        q: u32,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Sample the n = 2 root manifold as CSV
    Manifold { p: u32, q: u32 },
    /// Split an element along the central idempotents of a double algebra
    Split {
        p: u32,
        q: u32,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, content: &str) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| GaError::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn signature(cli: &Cli, p: u32, q: u32) -> Result<Signature> {
    Signature::with_limit(p, q, cli.max_n)
}

fn csv_quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Classify { p, q } => cmd_classify(cli, *p, *q),
        Command::Roots { p, q } => cmd_roots(cli, *p, *q),
        Command::Verify { p, q, golden, all } => cmd_verify(cli, *p, *q, golden.as_deref(), *all),
        Command::Represent { p, q } => cmd_represent(cli, *p, *q),
        Command::Centralizer { p, q, expr } => cmd_centralizer(cli, *p, *q, expr),
        Command::Conjugate { p, q, f, g } => cmd_conjugate(cli, *p, *q, f, g),
        Command::Manifold { p, q } => cmd_manifold(cli, *p, *q),
        Command::Split { p, q, expr } => cmd_split(cli, *p, *q, expr),
    }
}

fn cmd_classify(cli: &Cli, p: u32, q: u32) -> Result<ExitCode> {
    let sig = signature(cli, p, q)?;
    let cls = classify_signature(sig)?;
    let content = match cli.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&cls).unwrap()),
        Format::Csv => {
            let mut out = String::from(
                "p,q,n,s,ring,matrix_form,d,dim,group_components,class_count,ordinary_class_dim,has_exceptional\n",
            );
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{}\n",
                cls.sig.p,
                cls.sig.q,
                cls.sig.n,
                cls.sig.s,
                serde_json::to_value(cls.sig.ring)
                    .unwrap()
                    .as_str()
                    .unwrap(),
                cls.matrix_form,
                cls.sig.d,
                cls.sig.dim,
                cls.group_components,
                cls.class_count,
                cls.ordinary_class_dim,
                cls.has_exceptional
            ));
            out
        }
        Format::Text => {
            format!(
                "{sig} = {form}   (ring {ring}, d = {d}, dim {dim})\n\
                 signature:        n = {n}, s = {s}\n\
                 group components: {components}\n\
                 root classes:     {classes}\n\
                 ordinary class dimension: {ordinary}\n\
                 exceptional classes:      {exceptional}\n",
                form = cls.matrix_form,
                ring = sig.ring(),
                d = cls.sig.d,
                dim = cls.sig.dim,
                n = cls.sig.n,
                s = cls.sig.s,
                components = cls.group_components,
                classes = cls.class_count,
                ordinary = cls.ordinary_class_dim,
                exceptional = if cls.has_exceptional { "yes" } else { "no" },
            )
        }
    };
    emit(cli, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_roots(cli: &Cli, p: u32, q: u32) -> Result<ExitCode> {
    let sig = signature(cli, p, q)?;
    let cls = classify_signature(sig)?;
    let reports = all_class_reports(sig)?;
    let content = match cli.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&reports).unwrap()),
        Format::Csv => {
            let mut out = String::from(
                "p,q,k,spec,scal,class_dim,centralizer_dim,char_poly,min_poly,representative\n",
            );
            for r in &reports {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{}\n",
                    r.p,
                    r.q,
                    r.k,
                    r.spec.as_ref().map_or(String::new(), |s| s.to_string()),
                    r.scal,
                    r.class_dim,
                    r.centralizer_dim,
                    r.char_poly.map_or(String::new(), |c| c.to_string()),
                    r.min_poly,
                    csv_quote(&r.representative.to_string())
                ));
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "Square roots of -1 in {sig} = {}, d = {}: {} conjugacy classes\n",
                cls.matrix_form, cls.sig.d, cls.class_count
            );
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        r.spec.as_ref().map_or("-".into(), |s| s.to_string()),
                        r.class_dim.to_string(),
                        r.centralizer_dim.to_string(),
                        r.char_poly.map_or("-".into(), |c| c.to_string()),
                        r.min_poly.to_string(),
                        r.representative.to_string(),
                    ]
                })
                .collect();
            out.push_str(&aligned_table(
                &[
                    "k",
                    "Spec",
                    "class_dim",
                    "cent_dim",
                    "char_poly",
                    "min_poly",
                    "representative",
                ],
                &rows,
            ));
            out
        }
    };
    emit(cli, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    cli: &Cli,
    p: Option<u32>,
    q: Option<u32>,
    golden: Option<&std::path::Path>,
    all: bool,
) -> Result<ExitCode> {
    let tables: Vec<(ga_core::golden::GoldenTable, String)> = if let Some(path) = golden {
        vec![(golden_store::load_file(path)?, path.display().to_string())]
    } else if let (Some(p), Some(q)) = (p, q) {
        vec![(
            golden_store::load_table(p, q)?,
            format!("shipped cl_{p}_{q}"),
        )]
    } else if all || (p.is_none() && q.is_none()) {
        golden_store::GOLDEN_SIGNATURES
            .iter()
            .map(|&(p, q)| {
                golden_store::load_table(p, q).map(|t| (t, format!("shipped cl_{p}_{q}")))
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        return Err(GaError::Parse(
            "verify needs both p and q, or --golden, or --all".into(),
        ));
    };

    let mut reports = Vec::new();
    for (table, source) in &tables {
        reports.push(verify::verify_table(table, source.clone())?);
    }
    let all_ok = reports.iter().all(verify::TableReport::ok);

    let content = match cli.format {
        Format::Json => {
            let value = json!({
                "ok": all_ok,
                "tables": reports.iter().map(|t| json!({
                    "p": t.p,
                    "q": t.q,
                    "source": t.source,
                    "ok": t.ok(),
                    "rows": t.rows.iter().map(|r| json!({
                        "k": r.k,
                        "line": r.line,
                        "ok": r.ok(),
                        "checks": r.checks.iter().map(|c| json!({
                            "name": c.name,
                            "ok": c.ok,
                            "detail": c.detail,
                        })).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Csv => {
            let mut out = String::from("p,q,k,line,check,ok,detail\n");
            for t in &reports {
                for r in &t.rows {
                    for c in &r.checks {
                        out.push_str(&format!(
                            "{},{},{},{},{},{},{}\n",
                            t.p,
                            t.q,
                            r.k,
                            r.line,
                            c.name,
                            c.ok,
                            csv_quote(&c.detail)
                        ));
                    }
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            let mut rows = 0;
            let mut checks = 0;
            for t in &reports {
                out.push_str(&format!("table Cl({},{}) [{}]\n", t.p, t.q, t.source));
                for r in &t.rows {
                    rows += 1;
                    checks += r.checks.len();
                    if r.ok() {
                        let names: Vec<&str> = r.checks.iter().map(|c| c.name).collect();
                        out.push_str(&format!(
                            "  ok   line {:>2} k = {:>2}: {}\n",
                            r.line,
                            r.k,
                            names.join(" ")
                        ));
                    } else {
                        for c in r.checks.iter().filter(|c| !c.ok) {
                            out.push_str(&format!(
                                "  FAIL line {:>2} k = {:>2} [{}]: {}\n",
                                r.line, r.k, c.name, c.detail
                            ));
                        }
                    }
                }
            }
            out.push_str(&format!(
                "verify: {} ({} tables, {rows} rows, {checks} checks)\n",
                if all_ok { "PASS" } else { "FAIL" },
                reports.len()
            ));
            out
        }
    };
    emit(cli, &content)?;
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_represent(cli: &Cli, p: u32, q: u32) -> Result<ExitCode> {
    let sig = signature(cli, p, q)?;
    let rep = spinor_representation(sig)?;
    let content = match cli.format {
        Format::Csv => {
            return Err(GaError::Parse(
                "represent supports --format text or json".into(),
            ))
        }
        Format::Json => {
            let image_json = |m: &ga_core::CMat| {
                (0..m.rows())
                    .map(|i| {
                        (0..m.cols())
                            .map(|j| {
                                json!({
                                    "re": m[(i, j)].re.to_string(),
                                    "im": m[(i, j)].im.to_string(),
                                })
                            })
                            .collect::<Vec<_>>()
                    })
                    .collect::<Vec<_>>()
            };
            let value = json!({
                "p": sig.p(),
                "q": sig.q(),
                "dimension": rep.dimension(),
                "idempotent": rep.idempotent().element.to_string(),
                "factor_blades": rep
                    .idempotent()
                    .factor_blades
                    .iter()
                    .map(|b| b.to_string())
                    .collect::<Vec<_>>(),
                "k_generator": rep.k_generator().to_string(),
                "ideal_basis": rep.ideal_basis().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "generators": (1..=sig.n())
                    .map(|k| json!({
                        "name": format!("e{k}"),
                        "matrix": image_json(rep.generator_image(k)),
                    }))
                    .collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Text => {
            let mut out = format!(
                "Spinor representation of {sig} on C^{}\n\
                 primitive idempotent: {}\n\
                 k-generator (complex unit): {}\n\
                 ideal basis: {}\n\n",
                rep.dimension(),
                rep.idempotent().element,
                rep.k_generator(),
                rep.ideal_basis()
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
            );
            for k in 1..=sig.n() {
                out.push_str(&format!(
                    "e{k} ->\n{}\n",
                    matrix_grid(rep.generator_image(k))
                ));
            }
            out
        }
    };
    emit(cli, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_centralizer(cli: &Cli, p: u32, q: u32, expr: &str) -> Result<ExitCode> {
    let sig = signature(cli, p, q)?;
    let f = parse_multivector(expr, sig)?;
    let basis = centralizer(&f);
    let content = match cli.format {
        Format::Json => {
            let value = json!({
                "p": sig.p(),
                "q": sig.q(),
                "element": f.to_string(),
                "dimension": basis.len(),
                "basis": basis.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Csv => {
            let mut out = String::from("element\n");
            for b in &basis {
                out.push_str(&format!("{}\n", csv_quote(&b.to_string())));
            }
            out
        }
        Format::Text => {
            let mut out = format!("Centralizer of {f} in {sig}: dimension {}\n", basis.len());
            for b in &basis {
                out.push_str(&format!("  {b}\n"));
            }
            out
        }
    };
    emit(cli, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_conjugate(cli: &Cli, p: u32, q: u32, f: &str, g: &str) -> Result<ExitCode> {
    let sig = signature(cli, p, q)?;
    let f = parse_multivector(f, sig)?;
    let g = parse_multivector(g, sig)?;
    let v = find_conjugator_seeded(&f, &g, cli.seed)?;
    let verified = v.as_ref().map(|v| {
        let v_inv = inverse(v).expect("conjugator is invertible");
        &(&v_inv * &f) * v == g
    });
    let content = match cli.format {
        Format::Csv => {
            return Err(GaError::Parse(
                "conjugate supports --format text or json".into(),
            ))
        }
        Format::Json => {
            let value = json!({
                "p": sig.p(),
                "q": sig.q(),
                "f": f.to_string(),
                "g": g.to_string(),
                "conjugate": v.is_some(),
                "v": v.as_ref().map(|v| v.to_string()),
                "verified": verified,
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Text => match &v {
            Some(v) => format!("v = {v}\nverified: v^-1 f v = g\n"),
            None => "not conjugate\n".to_string(),
        },
    };
    emit(cli, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_manifold(cli: &Cli, p: u32, q: u32) -> Result<ExitCode> {
    let sig = signature(cli, p, q)?;
    let points = sample_manifold(sig, cli.grid)?;
    let content = match cli.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&points).unwrap()),
        _ => {
            // CSV is the native format here; text aliases to it
            let mut out = String::from("b1,b2,beta\n");
            for pt in &points {
                out.push_str(&format!(
                    "{},{},{}\n",
                    pt.b1.to_f64().unwrap_or(f64::NAN),
                    pt.b2.to_f64().unwrap_or(f64::NAN),
                    pt.beta
                ));
            }
            out
        }
    };
    emit(cli, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_split(cli: &Cli, p: u32, q: u32, expr: &str) -> Result<ExitCode> {
    let sig = signature(cli, p, q)?;
    let a = parse_multivector(expr, sig)?;
    let split = double_split(sig)?;
    let (proj_plus, proj_minus) = split.project(&a);
    let (comp_plus, comp_minus) = split.components(&a);
    let swapped = split.swap(&a);
    let content = match cli.format {
        Format::Csv => {
            return Err(GaError::Parse(
                "split supports --format text or json".into(),
            ))
        }
        Format::Json => {
            let value = json!({
                "p": sig.p(),
                "q": sig.q(),
                "element": a.to_string(),
                "eps_plus": split.eps_plus.to_string(),
                "eps_minus": split.eps_minus.to_string(),
                "projection_plus": proj_plus.to_string(),
                "projection_minus": proj_minus.to_string(),
                "component_plus": comp_plus.to_string(),
                "component_minus": comp_minus.to_string(),
                "swap": swapped.to_string(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Text => format!(
            "double split of {sig} (omega^2 = +1)\n\
             eps_plus        = {}\n\
             eps_minus       = {}\n\
             A eps_plus      = {proj_plus}\n\
             A eps_minus     = {proj_minus}\n\
             component_plus  = {comp_plus}\n\
             component_minus = {comp_minus}\n\
             swap(A)         = {swapped}\n",
            split.eps_plus, split.eps_minus,
        ),
    };
    emit(cli, &content)?;
    Ok(ExitCode::SUCCESS)
}
