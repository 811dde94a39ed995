use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use toricdd_core::ddideal::{chart_phi, containment_check, dd_ideal, ChartVerifier, DDParams};
use toricdd_core::groebner::buchberger;
use toricdd_core::hilbert::{hs_multiplicity, quotient_numerator, Ambient, MultiplicityConfig};
use toricdd_core::lech::{mu_power_table, parse_method, write_gnuplot, write_samples_csv, write_table_csv};
use toricdd_core::lech::{Experiment, ExperimentConfig};
use toricdd_core::polyring::{parse_polynomial_lines, Dims, MonomialOrder, Polynomial, Ring, RingRef, VarId};
use toricdd_core::toric::{toric_equality, DEFAULT_VAR_CAP};
use toricdd_core::{Error, Q};

#[derive(Parser)]
#[command(name = "toricdd", version, about = "Exact computations with double determinantal ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Shape {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    r: u32,
}

impl Shape {
    fn dims(&self) -> Dims {
        Dims::new(self.m, self.n, self.r)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AmbientArg {
    Free,
    Toric,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generators of I_a(H) + I_b(V).
    Gens {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 2)]
        a: u32,
        #[arg(long, default_value_t = 2)]
        b: u32,
    },
    /// Reduced Gröbner basis of an ideal file, or of `dd:M,N,R[,A,B]`.
    Gb {
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
    },
    /// Compare the ideal with the kernel of the monomial parametrization.
    ToricCheck {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = DEFAULT_VAR_CAP)]
        var_cap: usize,
    },
    /// Partition and verification of the chart where a variable is inverted.
    Chart {
        #[command(flatten)]
        shape: Shape,
        /// `l,i,j`
        #[arg(long)]
        pivot: String,
    },
    /// Check that the larger minors lie in the ideal of 2-minors (r = 2), both orientations.
    Degenerate {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        b: u32,
    },
    /// Affine and projective Krull dimension of the toric ring.
    Dim {
        #[command(flatten)]
        shape: Shape,
    },
    /// Degree of the toric ring.
    Degree {
        #[command(flatten)]
        shape: Shape,
    },
    /// Length of the quotient by an ideal file.
    Length {
        #[arg(long)]
        ideal: PathBuf,
        /// Shape `M,N,R` of the variable array (default: inferred from the file).
        #[arg(long, value_parser = parse_dims)]
        shape: Option<Dims>,
        /// `free`: the ideal as given; `toric`: modulo the 2-minors of its shape.
        #[arg(long, value_enum, default_value_t = AmbientArg::Free)]
        ambient: AmbientArg,
    },
    /// Hilbert–Samuel multiplicity of an ideal file.
    Mult {
        #[arg(long)]
        ideal: PathBuf,
        /// Shape `M,N,R` of the variable array (default: inferred from the file).
        #[arg(long, value_parser = parse_dims)]
        shape: Option<Dims>,
        /// reduction, fit or newton
        #[arg(long, default_value = "reduction")]
        method: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = AmbientArg::Toric)]
        ambient: AmbientArg,
    },
    /// Random sweep of monomial ideals in the 2×2×2 toric ring.
    Lech {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Writes PREFIX-length.dat and PREFIX-generators.dat.
        #[arg(long)]
        gnuplot: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        /// reduction, fit or newton
        #[arg(long)]
        method: Option<String>,
        /// `key = value` file; flags take precedence.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Lengths and ratios for the powers of the maximal ideal.
    Table {
        #[arg(long, default_value_t = 12)]
        kmax: u32,
        /// Also compute e(m^k) by generic reduction for k up to this value
        /// (exact; k = 3 takes several minutes per draw).
        #[arg(long, default_value_t = 2)]
        cross_check: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure modes mapped to exit codes.
enum Failure {
    Verification(String),
    Usage(String),
    /// Standard output was closed early, e.g. by `head`.
    ClosedPipe,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::ClosedPipe
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type CliResult = Result<(), Failure>;

fn output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn read_ideal(path: &Path, dims: Option<Dims>) -> Result<(RingRef, Vec<Polynomial<Q>>), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(parse_polynomial_lines(&text, dims)?)
}

fn parse_dims(s: &str) -> Result<Dims, String> {
    let nums: Vec<u32> = s.split(',').map(|t| t.trim().parse().map_err(|_| format!("bad shape '{s}'"))).collect::<Result<_, _>>()?;
    match nums[..] {
        [m, n, r] if m > 0 && n > 0 && r > 0 => Ok(Dims::new(m, n, r)),
        _ => Err("shape is M,N,R with positive entries".into()),
    }
}

fn parse_builtin(builtin: &str) -> Result<DDParams, Failure> {
    let nums: Vec<u32> = builtin
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| Failure::Usage(format!("bad builtin ideal 'dd:{builtin}'"))))
        .collect::<Result<_, _>>()?;
    match nums[..] {
        [m, n, r] => Ok(DDParams::new(m, n, r, 2, 2)?),
        [m, n, r, a, b] => Ok(DDParams::new(m, n, r, a, b)?),
        _ => Err(Failure::Usage("builtin ideal is dd:M,N,R or dd:M,N,R,A,B".into())),
    }
}

fn parse_pivot(s: &str) -> Result<VarId, Failure> {
    let nums: Vec<u32> = s
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| Failure::Usage(format!("bad pivot '{s}'"))))
        .collect::<Result<_, _>>()?;
    match nums[..] {
        [l, i, j] => Ok(VarId::x(l, i, j)),
        _ => Err(Failure::Usage("pivot is l,i,j".into())),
    }
}

fn ambient_for(kind: AmbientArg, ring: &RingRef) -> Result<Ambient<Q>, Failure> {
    match kind {
        AmbientArg::Free => Ok(Ambient::free(ring)),
        AmbientArg::Toric => {
            if ring.roster().iter().any(|v| !v.is_x()) {
                return Err(Failure::Usage("the toric ambient needs an ideal in the x variables only".into()));
            }
            Ok(Ambient::toric(ring.dims())?)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Gens { shape, a, b } => {
            let p = DDParams::new(shape.m, shape.n, shape.r, a, b)?;
            for g in dd_ideal::<Q>(&p)? {
                writeln!(out, "{g}")?;
            }
        }
        Command::Gb { ideal, order } => {
            let (ring, gens) = match ideal.strip_prefix("dd:") {
                Some(builtin) => {
                    let p = parse_builtin(builtin)?;
                    (Ring::x_ring(p.dims())?, dd_ideal::<Q>(&p)?)
                }
                None => read_ideal(Path::new(&ideal), None)?,
            };
            let order = match order {
                OrderArg::Grevlex => MonomialOrder::Grevlex,
                OrderArg::Lex => MonomialOrder::Lex,
            };
            let ring = ring.with_order(order)?;
            for g in buchberger(&gens, &ring)?.basis() {
                writeln!(out, "{g}")?;
            }
        }
        Command::ToricCheck { shape, var_cap } => {
            let rep = toric_equality::<Q>(&DDParams::toric(shape.dims()), var_cap)?;
            writeln!(out, "generators: {}", rep.generators)?;
            writeln!(out, "containment: {}", rep.contained)?;
            writeln!(out, "kernel basis size: {}", rep.kernel_size)?;
            writeln!(out, "equal: {}", rep.equal)?;
            if !rep.passed() {
                return Err(Failure::Verification("the ideal differs from the kernel".into()));
            }
        }
        Command::Chart { shape, pivot } => {
            let params = DDParams::toric(shape.dims());
            let pivot = parse_pivot(&pivot)?;
            let rep = ChartVerifier::<Q>::new(params)?.verify(pivot)?;
            for (tag, set) in [("Y1", &rep.partition.y1), ("Y2", &rep.partition.y2), ("Y3", &rep.partition.y3)] {
                for v in set {
                    writeln!(out, "{tag} {v} -> {}", chart_phi(&params, pivot, *v)?)?;
                }
            }
            writeln!(out, "|Y1| = {} (expected {})", rep.y1_size, rep.expected_y1_size)?;
            writeln!(out, "generators annihilated: {}", rep.failed_generators.is_empty())?;
            writeln!(out, "inverse on every variable: {}", rep.failed_variables.is_empty())?;
            for g in &rep.failed_generators {
                eprintln!("generator not annihilated: {g}");
            }
            for v in &rep.failed_variables {
                eprintln!("inverse fails on {v}");
            }
            writeln!(out, "verified: {}", rep.passed())?;
            if !rep.passed() {
                return Err(Failure::Verification(format!("chart at {pivot} failed")));
            }
        }
        Command::Degenerate { m, n, b } => {
            let mut ok = true;
            let cases = [
                ("I_b(V) in I_2(H)", DDParams::new(m, n, 2, 2, b)?),
                ("I_a(H) in I_2(V), transposed", DDParams::new(n, m, 2, b, 2)?),
            ];
            for (label, p) in cases {
                let rep = containment_check::<Q>(&p)?;
                if rep.is_vacuous() {
                    eprintln!("warning: no {b}-minors for m={}, n={}; containment is vacuous", p.m, p.n);
                }
                writeln!(out, "{label} (m={}, n={}, a={}, b={}): {} ({} minors)", p.m, p.n, p.a, p.b, rep.holds(), rep.checked)?;
                ok &= rep.holds();
            }
            if !ok {
                return Err(Failure::Verification("containment fails".into()));
            }
        }
        Command::Dim { shape } => {
            let ring = Ring::x_ring(shape.dims())?;
            let num = quotient_numerator(&dd_ideal::<Q>(&DDParams::toric(shape.dims()))?, &ring)?;
            let d = num.krull_dim()?;
            writeln!(out, "affine {d}")?;
            writeln!(out, "projective {}", d as i64 - 1)?;
        }
        Command::Degree { shape } => {
            let ring = Ring::x_ring(shape.dims())?;
            let num = quotient_numerator(&dd_ideal::<Q>(&DDParams::toric(shape.dims()))?, &ring)?;
            writeln!(out, "{}", num.degree()?)?;
        }
        Command::Length { ideal, shape, ambient } => {
            let (ring, gens) = read_ideal(&ideal, shape)?;
            let amb = ambient_for(ambient, &ring)?;
            writeln!(out, "{}", amb.colength(&gens)?)?;
        }
        Command::Mult { ideal, shape, method, seed, ambient } => {
            let (ring, gens) = read_ideal(&ideal, shape)?;
            let amb = ambient_for(ambient, &ring)?;
            let cfg = MultiplicityConfig { seed, ..MultiplicityConfig::default() };
            let res = hs_multiplicity(&gens, &amb, parse_method(&method)?, &cfg)?;
            writeln!(out, "{}", res.value)?;
            let d = &res.diagnostics;
            eprintln!("method: {}", res.method);
            if !d.draw_values.is_empty() || d.failed_draws > 0 {
                eprintln!("draws: {:?} ({} failed), stabilization exponent {}", d.draw_values, d.failed_draws, d.stabilization_exponent);
            }
            if !d.fit_lengths.is_empty() {
                eprintln!("lengths of powers: {:?}", d.fit_lengths);
            }
        }
        Command::Lech { seed, count, out: path, gnuplot, jobs, method, config } => {
            let mut cfg = match config {
                Some(p) => {
                    let text = std::fs::read_to_string(&p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
                    ExperimentConfig::from_kv(&text)?
                }
                None => ExperimentConfig::default(),
            };
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(c) = count {
                cfg.count = c;
            }
            if let Some(j) = jobs {
                cfg.jobs = j;
            }
            if let Some(m) = method {
                cfg.method = parse_method(&m)?;
            }
            let records = Experiment::new(cfg)?.run();
            for r in records.iter().filter(|r| r.error.is_some()) {
                eprintln!("sample {}: {}", r.index, r.error.as_deref().unwrap_or_default());
            }
            drop(out);
            write_samples_csv(&records, output(&path)?)?;
            if let Some(prefix) = gnuplot {
                let base = prefix.to_string_lossy().into_owned();
                write_gnuplot(
                    &records,
                    File::create(format!("{base}-length.dat"))?,
                    File::create(format!("{base}-generators.dat"))?,
                )?;
            }
            return Ok(());
        }
        Command::Table { kmax, cross_check, seed, out: path } => {
            if !(1..=12).contains(&kmax) {
                return Err(Failure::Usage("--kmax must be between 1 and 12".into()));
            }
            let rows = mu_power_table(Dims::new(2, 2, 2), kmax, cross_check, seed)?;
            for r in &rows {
                if let Some(c) = r.cross_check {
                    if c != r.mult {
                        return Err(Failure::Verification(format!(
                            "k = {}: scaling law gives {}, generic reduction {c}",
                            r.k, r.mult
                        )));
                    }
                }
            }
            drop(out);
            write_table_csv(&rows, output(&path)?)?;
            return Ok(());
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) | Err(Failure::ClosedPipe) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
