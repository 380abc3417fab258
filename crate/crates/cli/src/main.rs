use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spinbits::clifford::{clifford_apply, CliffordElem};
use spinbits::fields::{self, EmitFormat};
use spinbits::forms;
use spinbits::matrix::{kappa_matrix, kappa_pm_matrix, lambda_matrix, real_rep_matrix, Matrix};
use spinbits::octonion;
use spinbits::report::Report;
use spinbits::scalar::rat;
use spinbits::spinor::{real_structure, weight};
use spinbits::triality::{self, Automorphism, BivectorCombo, OuterMap};
use spinbits::verify::{self, VerifyOptions};
use spinbits::{Error, Rat, RealForm, Scalar, Spinor};

#[derive(Parser)]
#[command(name = "spinbits", version, about = "Exact spinor computations through the binary code")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    #[value(alias = "ascii")]
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Clifford multiplication, weights and structure maps on basic spinors
    #[command(subcommand)]
    Spinor(SpinorCommand),
    /// Representation matrices
    #[command(subcommand)]
    Rep(RepCommand),
    /// Triality automorphisms of spin(8) and g2
    #[command(subcommand)]
    Triality(TrialityCommand),
    /// Octonion and quaternion tables
    #[command(subcommand)]
    Octonion(OctonionCommand),
    /// Invariant forms of spin(7) and g2
    #[command(subcommand)]
    Forms(FormsCommand),
    /// Tangent vector fields on spheres
    Fields(FieldsArgs),
    /// Run every acceptance criterion
    VerifyAll(VerifyArgs),
}

#[derive(Subcommand)]
enum SpinorCommand {
    /// Image of u_A under e_P
    Mul {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        index: u64,
    },
    /// Weight vector of u_A
    Weight {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        index: u64,
    },
    /// Image of u_A under the real or quaternionic structure
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        index: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Space {
    Full,
    Plus,
    Minus,
    RealPlus,
    RealMinus,
    Vector,
}

#[derive(Subcommand)]
enum RepCommand {
    Matrix {
        #[arg(long)]
        n: usize,
        /// Generator word such as e1e2 or 1,2
        #[arg(long, value_parser = parse_word)]
        word: Word,
        #[arg(long, value_enum, default_value_t = Space::Full)]
        space: Space,
    },
}

#[derive(Clone)]
struct Word(Vec<usize>);

#[derive(Subcommand)]
enum TrialityCommand {
    Sigma(OuterArgs),
    Tau(OuterArgs),
    G2(G2Args),
    /// S3 relations and the half-spin permutation
    S3,
    /// Images of the center of Spin(8)
    Center,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct OuterArgs {
    #[arg(long)]
    matrix: bool,
    #[arg(long)]
    check_order: bool,
    /// One of 1, -1, omega, omega-bar
    #[arg(long, allow_hyphen_values = true, value_parser = parse_eigenvalue)]
    eigen: Option<Scalar>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct G2Args {
    #[arg(long)]
    generators: bool,
    #[arg(long)]
    annihilator_check: bool,
    /// Fourteen comma-separated rationals
    #[arg(long, value_parser = parse_alpha)]
    matrix: Option<Alpha>,
}

#[derive(Clone)]
struct Alpha(Vec<Scalar>);

#[derive(Subcommand)]
enum OctonionCommand {
    Table,
    Check {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    Quaternions,
}

#[derive(Subcommand)]
enum FormsCommand {
    Omega {
        #[arg(long)]
        check_square: bool,
        #[arg(long)]
        latex: bool,
    },
    Phi {
        #[arg(long)]
        latex: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Coords,
    Matrices,
}

#[derive(Args)]
struct FieldsArgs {
    /// Sphere dimension M; fields live on S^M in R^(M+1)
    #[arg(long)]
    sphere: usize,
    #[arg(long, value_enum)]
    emit: Option<Emit>,
    #[arg(long)]
    verify: bool,
    #[arg(long, default_value_t = 50)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_parser = parse_split)]
    split: Option<(usize, usize)>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Restrict to these criteria
    #[arg(long, value_delimiter = ',')]
    criterion: Vec<usize>,
    #[arg(long, hide = true, value_parser = parse_split)]
    corrupt_sigma: Option<(usize, usize)>,
}

fn parse_word(text: &str) -> Result<Word, String> {
    let parts: Vec<&str> = if text.contains(',') {
        text.split(',').collect()
    } else {
        text.split('e').filter(|s| !s.is_empty()).collect()
    };
    parts
        .iter()
        .map(|p| p.trim().trim_start_matches('e').parse::<usize>().map_err(|_| format!("bad generator {p:?}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Word)
}

fn parse_eigenvalue(text: &str) -> Result<Scalar, String> {
    match text {
        "1" => Ok(Scalar::one()),
        "-1" => Ok(Scalar::from_int(-1)),
        "omega" => Ok(Scalar::omega()),
        "omega-bar" | "omegabar" => Ok(Scalar::omega().conj()),
        _ => Err(format!("unsupported eigenvalue {text:?}; use 1, -1, omega or omega-bar")),
    }
}

fn parse_alpha(text: &str) -> Result<Alpha, String> {
    let values = text
        .split(',')
        .map(|t| t.trim().parse::<Rat>().map(Scalar::from_rat).map_err(|_| format!("bad rational {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != 14 {
        return Err(format!("expected 14 coefficients, got {}", values.len()));
    }
    Ok(Alpha(values))
}

fn parse_split(text: &str) -> Result<(usize, usize), String> {
    let (a, b) = text.split_once(',').ok_or_else(|| format!("expected two comma-separated integers, got {text:?}"))?;
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("bad integer {s:?}"));
    Ok((parse(a)?, parse(b)?))
}

enum Output {
    Text(String),
    Report(Report),
}

fn report_latex(report: &Report) -> String {
    let mut out = String::from("\\begin{tabular}{ll}\n");
    for c in &report.checks {
        let tag = if c.passed() { "pass" } else { "fail" };
        out.push_str(&format!("{tag} & \\verb|{}| \\\\\n", c.name));
    }
    out.push_str(&format!("\\end{{tabular}}\n% {} passed, {} failed\n", report.pass, report.fail));
    out
}

fn json_text(value: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(value).expect("serializable"))
}

fn matrix_output(m: &Matrix, format: Format) -> String {
    match format {
        Format::Text => format!("{m}\n"),
        Format::Json => json_text(&serde_json::to_value(m).expect("serializable")),
        Format::Latex => format!("{}\n", m.to_latex()),
    }
}

fn spinor_output(label: &str, latex_label: &str, psi: &Spinor, format: Format) -> String {
    match format {
        Format::Text => format!("{label} = {psi}\n"),
        Format::Json => {
            let terms: Vec<Value> = psi.terms().map(|(a, c)| json!({ "index": a, "coeff": c })).collect();
            json_text(&json!({ "k": psi.width(), "terms": terms }))
        }
        Format::Latex => format!("{latex_label} = {}\n", psi.to_latex()),
    }
}

fn run_spinor(cmd: SpinorCommand, format: Format) -> spinbits::Result<Output> {
    Ok(Output::Text(match cmd {
        SpinorCommand::Mul { n, p, index } => {
            let k = (n / 2) as u32;
            let psi = clifford_apply(n, p, &Spinor::basis(k, index)?)?;
            if format == Format::Json {
                let (target, coeff) = psi.terms().next().expect("basis image is a single term");
                return Ok(Output::Text(json_text(&json!({
                    "n": n,
                    "p": p,
                    "input": index,
                    "index": target,
                    "coeff": coeff.to_string(),
                    "coeff_exact": coeff,
                }))));
            }
            spinor_output(&format!("e{p} u{index}"), &format!("e_{{{p}}}u_{{{index}}}"), &psi, format)
        }
        SpinorCommand::Weight { k, index } => {
            let w = weight(index, k)?;
            match format {
                Format::Json => json_text(&json!({ "index": index, "weight": w.iter().map(|q| q.to_string()).collect::<Vec<_>>() })),
                _ => format!("({})\n", w.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ")),
            }
        }
        SpinorCommand::Gamma { n, index } => {
            let k = (n / 2) as u32;
            let psi = real_structure(n, &Spinor::basis(k, index)?)?;
            spinor_output(&format!("gamma{n}(u{index})"), &format!("\\gamma_{{{n}}}(u_{{{index}}})"), &psi, format)
        }
    }))
}

fn run_rep(cmd: RepCommand, format: Format) -> spinbits::Result<Output> {
    let RepCommand::Matrix { n, word, space } = cmd;
    let word = word.0;
    let m = match space {
        Space::Full => kappa_matrix(n, &word)?,
        Space::Plus => kappa_pm_matrix(n, &word, 1)?,
        Space::Minus => kappa_pm_matrix(n, &word, -1)?,
        Space::RealPlus | Space::RealMinus => {
            let from = if matches!(space, Space::RealPlus) { RealForm::Plus } else { RealForm::Minus };
            let to = match (from, word.len() % 2) {
                (f, 0) => f,
                (RealForm::Plus, _) => RealForm::Minus,
                _ => RealForm::Plus,
            };
            real_rep_matrix(n, &word, from, to)?
        }
        Space::Vector => lambda_matrix(n, &word)?,
    };
    Ok(Output::Text(matrix_output(&m, format)))
}

fn outer_matrix_output(map: &OuterMap, format: Format) -> String {
    let doubled = map.doubled_entries().unwrap_or_default();
    match format {
        Format::Json => json_text(&json!({ "name": map.name, "scale": "1/2", "entries": doubled })),
        Format::Text => {
            let mut out = String::from("1/2 *\n");
            for row in &doubled {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
                out.push_str(&format!("[{}]\n", cells.join(" ")));
            }
            out
        }
        Format::Latex => format!("\\frac{{1}}{{2}}{}\n", map.matrix.scale(&Scalar::from_int(2)).to_latex()),
    }
}

fn combo_text(b: &BivectorCombo) -> String {
    b.to_clifford().to_string()
}

fn run_outer(name: &str, map: OuterMap, order: u32, args: OuterArgs, format: Format) -> spinbits::Result<Output> {
    if args.matrix {
        return Ok(Output::Text(outer_matrix_output(&map, format)));
    }
    if args.check_order {
        let mut report = Report::new();
        let power = map.pow(order)?;
        report.record(format!("{name}^{order} = Id"), power.is_identity(), json!(null));
        for e in 1..order {
            report.record(format!("{name}^{e} != Id"), !map.pow(e)?.is_identity(), json!(null));
        }
        return Ok(Output::Report(report));
    }
    let lambda = args.eigen.unwrap_or_else(Scalar::one);
    let space = triality::eigenspace(&map, &lambda)?;
    let basis: Vec<String> = space.basis().iter().map(|v| combo_text(&BivectorCombo::from_coords(8, v))).collect();
    Ok(Output::Text(match format {
        Format::Json => json_text(&json!({ "map": name, "eigenvalue": lambda, "dimension": space.dimension(), "basis": basis })),
        Format::Latex => {
            let items: Vec<String> = space
                .basis()
                .iter()
                .map(|v| BivectorCombo::from_coords(8, v).to_clifford().to_latex())
                .collect();
            format!("\\dim = {}\\\\\n{}\n", space.dimension(), items.join(",\\\\\n"))
        }
        Format::Text => format!("dimension {}\n{}\n", space.dimension(), basis.join("\n")),
    }))
}

fn run_triality(cmd: TrialityCommand, format: Format) -> spinbits::Result<Output> {
    match cmd {
        TrialityCommand::Sigma(args) => run_outer("sigma*", triality::build_sigma_star()?, 3, args, format),
        TrialityCommand::Tau(args) => run_outer("tau*", triality::build_tau_star()?, 2, args, format),
        TrialityCommand::G2(args) => {
            if args.generators {
                let gens = triality::g2_generators()?;
                return Ok(Output::Text(match format {
                    Format::Json => json_text(&json!(gens.iter().map(combo_text).collect::<Vec<_>>())),
                    Format::Latex => {
                        let items: Vec<String> = gens.iter().map(|g| g.to_clifford().to_latex()).collect();
                        format!("{}\n", items.join(",\\\\\n"))
                    }
                    Format::Text => gens.iter().map(|g| format!("{}\n", combo_text(g))).collect(),
                }));
            }
            if args.annihilator_check {
                let sigma = triality::build_sigma_star()?;
                let tau = triality::build_tau_star()?;
                let mut report = Report::new();
                report.extend(
                    triality::g2_structure(&sigma, &tau)?
                        .into_iter()
                        .filter(|c| c.name.contains("annihilates") || c.name.contains("span")),
                );
                return Ok(Output::Report(report));
            }
            let alpha = args.matrix.map(|a| a.0).unwrap_or_default();
            let display = triality::g2_action_matrix(&alpha, 1)?.transpose();
            Ok(Output::Text(matrix_output(&display, format)))
        }
        TrialityCommand::S3 => {
            let mut report = Report::new();
            report.extend(triality::s3_relations(&triality::build_sigma_star()?, &triality::build_tau_star()?)?);
            Ok(Output::Report(report))
        }
        TrialityCommand::Center => {
            let mut report = Report::new();
            let vol = CliffordElem::volume(8);
            let neg = |x: &CliffordElem| x.scale(&Scalar::from_int(-1));
            let minus_one = neg(&CliffordElem::one(8));
            let s = triality::center_images(Automorphism::Sigma)?;
            let t = triality::center_images(Automorphism::Tau)?;
            for (name, got, expected) in [
                ("sigma(-1) = vol8", &s.minus_one, vol.clone()),
                ("sigma(vol8) = -vol8", &s.vol, neg(&vol)),
                ("sigma(-vol8) = -1", &s.minus_vol, minus_one.clone()),
                ("tau(-1) = vol8", &t.minus_one, vol.clone()),
                ("tau(vol8) = -1", &t.vol, minus_one.clone()),
                ("tau(-vol8) = -vol8", &t.minus_vol, neg(&vol)),
            ] {
                report.record(name, *got == expected, json!({ "image": got.to_string() }));
            }
            Ok(Output::Report(report))
        }
    }
}

fn run_octonion(cmd: OctonionCommand, format: Format) -> spinbits::Result<Output> {
    match cmd {
        OctonionCommand::Table => {
            let table = octonion::octonion_table()?;
            Ok(Output::Text(match format {
                Format::Text => octonion::table_text(&table, "e"),
                Format::Json => json_text(&serde_json::to_value(&table).expect("serializable")),
                Format::Latex => octonion::table_latex(&table, "\\hat e"),
            }))
        }
        OctonionCommand::Check { samples, seed } => Ok(Output::Report(octonion::algebra_checks(samples, seed)?)),
        OctonionCommand::Quaternions => {
            let report = octonion::quaternion_checks()?;
            if format == Format::Text {
                print!("{}", octonion::table_text(&octonion::quaternion_table()?, "e"));
            }
            Ok(Output::Report(report))
        }
    }
}

fn form_output(form: &forms::ExtForm, format: Format) -> String {
    match format {
        Format::Text => format!("{form}\n"),
        Format::Latex => format!("{}\n", form.to_latex()),
        Format::Json => {
            let terms: Vec<Value> = form.terms().map(|(mask, c)| json!({ "mask": mask, "coeff": c.to_string() })).collect();
            json_text(&json!({ "text": form.to_string(), "terms": terms }))
        }
    }
}

fn run_forms(cmd: FormsCommand, format: Format) -> spinbits::Result<Output> {
    match cmd {
        FormsCommand::Omega { check_square, latex } => {
            let format = if latex { Format::Latex } else { format };
            let omega = forms::spin7_four_form()?;
            if check_square {
                let square = omega.wedge(&omega)?;
                let mut report = Report::new();
                report.record(
                    "Omega ^ Omega = 504 vol",
                    square == forms::volume_form().scale(&rat(504, 1)),
                    json!({ "square": square.to_string() }),
                );
                return Ok(Output::Report(report));
            }
            Ok(Output::Text(form_output(&omega, format)))
        }
        FormsCommand::Phi { latex } => {
            let format = if latex { Format::Latex } else { format };
            Ok(Output::Text(form_output(&forms::g2_three_form()?, format)))
        }
    }
}

fn run_fields(args: FieldsArgs, format: Format) -> spinbits::Result<Output> {
    let n = args.sphere + 1;
    let system = fields::build_field_system(n, args.split)?;
    if args.verify {
        return Ok(Output::Report(fields::verify_system(&system, args.samples, args.seed)?));
    }
    let emit_format = match format {
        Format::Text => EmitFormat::Text,
        Format::Json => EmitFormat::Json,
        Format::Latex => EmitFormat::Latex,
    };
    Ok(Output::Text(match args.emit {
        Some(Emit::Matrices) => fields::emit_matrices(&system, emit_format),
        Some(Emit::Coords) => fields::emit_coordinates(&system, emit_format),
        None => match format {
            Format::Json => json_text(&json!({ "N": n, "info": system.info, "fields": system.fields.len() })),
            _ => format!(
                "S^{}: {} fields (rho({n}) = {}), Cl_{}^0 type {:?}\n",
                args.sphere,
                system.fields.len(),
                system.fields.len() + 1,
                system.r(),
                system.info.field_type
            ),
        },
    }))
}

fn run_verify(args: VerifyArgs) -> Output {
    let opts = VerifyOptions {
        seed: args.seed,
        samples: args.samples,
        corrupt_sigma: args.corrupt_sigma,
    };
    if args.criterion.is_empty() {
        return Output::Report(verify::verify_all(&opts));
    }
    let mut report = Report::new();
    for id in args.criterion {
        let c = verify::criterion(id, &opts);
        for check in c.report.checks {
            report.record(format!("[{id}] {}", check.name), check.passed(), check.witness);
        }
    }
    Output::Report(report)
}

fn run(cli: Cli) -> spinbits::Result<Output> {
    let format = cli.format;
    match cli.command {
        Command::Spinor(cmd) => run_spinor(cmd, format),
        Command::Rep(cmd) => run_rep(cmd, format),
        Command::Triality(cmd) => run_triality(cmd, format),
        Command::Octonion(cmd) => run_octonion(cmd, format),
        Command::Forms(cmd) => run_forms(cmd, format),
        Command::Fields(args) => run_fields(args, format),
        Command::VerifyAll(args) => {
            if args.criterion.iter().any(|&id| id == 0 || id > verify::TITLES.len()) {
                return Err(Error::Parse(format!("criteria are numbered 1..={}", verify::TITLES.len())));
            }
            Ok(run_verify(args))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(Output::Text(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Output::Report(report)) => {
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print!("{}", json_text(&serde_json::to_value(&report).expect("serializable"))),
                Format::Latex => print!("{}", report_latex(&report)),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
