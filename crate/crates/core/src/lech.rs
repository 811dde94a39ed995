//! Random experiments on the ratio `e(J) / (d! length(S/J))` in the toric ring
//! of two 2×2 matrices, and the table for powers of the maximal ideal.

use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hilbert::{
    degree_monomials, hs_multiplicity, quotient_numerator, Ambient, MultiplicityConfig, MultiplicityMethod,
};
use crate::polyring::{Dims, Monomial, Polynomial, RingRef};
use crate::Q;

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub seed: u64,
    pub count: usize,
    pub min_extra: usize,
    pub max_extra: usize,
    pub max_degree: u32,
    pub pure_power: u32,
    pub dims: Dims,
    pub jobs: usize,
    pub method: MultiplicityMethod,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            seed: 0,
            count: 175,
            min_extra: 1,
            max_extra: 6,
            max_degree: 10,
            pure_power: 12,
            dims: Dims::new(2, 2, 2),
            jobs: 1,
            method: MultiplicityMethod::NewtonVolume,
        }
    }
}

pub fn parse_method(s: &str) -> Result<MultiplicityMethod> {
    match s {
        "reduction" | "generic-reduction" => Ok(MultiplicityMethod::GenericReduction),
        "fit" | "hs-fit" => Ok(MultiplicityMethod::HsFit),
        "newton" | "newton-volume" => Ok(MultiplicityMethod::NewtonVolume),
        _ => Err(Error::Parse(format!("unknown multiplicity method '{s}'"))),
    }
}

impl ExperimentConfig {
    /// Reads `key = value` lines over the defaults; `#` starts a comment.
    pub fn from_kv(text: &str) -> Result<Self> {
        let mut cfg = ExperimentConfig::default();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", no + 1)))?;
            let (k, v) = (k.trim(), v.trim());
            let bad = |_| Error::Parse(format!("line {}: bad value '{v}' for {k}", no + 1));
            match k {
                "seed" => cfg.seed = v.parse().map_err(bad)?,
                "count" => cfg.count = v.parse().map_err(bad)?,
                "min_extra" => cfg.min_extra = v.parse().map_err(bad)?,
                "max_extra" => cfg.max_extra = v.parse().map_err(bad)?,
                "max_degree" => cfg.max_degree = v.parse().map_err(bad)?,
                "pure_power" => cfg.pure_power = v.parse().map_err(bad)?,
                "jobs" => cfg.jobs = v.parse().map_err(bad)?,
                "method" => cfg.method = parse_method(v)?,
                _ => return Err(Error::Parse(format!("line {}: unknown key '{k}'", no + 1))),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::InvalidParams("count must be positive".into()));
        }
        if self.min_extra > self.max_extra {
            return Err(Error::InvalidParams("min_extra exceeds max_extra".into()));
        }
        if self.max_degree == 0 || self.pure_power == 0 {
            return Err(Error::InvalidParams("degrees must be positive".into()));
        }
        Ok(())
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed of the stream for one sample.
pub fn sample_seed(master: u64, index: usize) -> u64 {
    splitmix64(master ^ splitmix64(index as u64))
}

/// Degree uniform in `1..=max_degree`, then a uniform monomial of that degree.
pub fn random_monomial<R: Rng>(nvars: usize, max_degree: u32, rng: &mut R) -> Monomial {
    let d = rng.gen_range(1..=max_degree) as usize;
    if nvars == 1 {
        return Monomial::var_pow(1, 0, d as u32);
    }
    // stars and bars: nvars - 1 bars among d + nvars - 1 slots
    let slots = d + nvars - 1;
    let mut bars = sample(rng, slots, nvars - 1).into_vec();
    bars.sort_unstable();
    let mut exps = Vec::with_capacity(nvars);
    let mut prev = 0usize;
    for (k, &b) in bars.iter().enumerate() {
        let start = if k == 0 { 0 } else { prev + 1 };
        exps.push((b - start) as u32);
        prev = b;
    }
    let start = if bars.is_empty() { 0 } else { prev + 1 };
    exps.push((slots - start) as u32);
    Monomial::from_exponents(exps)
}

#[derive(Clone, Debug)]
pub struct SampleIdeal {
    pub seed: u64,
    pub extras: Vec<Monomial>,
    pub gens: Vec<Polynomial<Q>>,
}

/// The pure powers of every variable plus `k` random monomials.
pub fn build_sample_ideal(config: &ExperimentConfig, ring: &RingRef, index: usize) -> SampleIdeal {
    let seed = sample_seed(config.seed, index);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nv = ring.nvars();
    let k = rng.gen_range(config.min_extra..=config.max_extra);
    let extras: Vec<Monomial> = (0..k).map(|_| random_monomial(nv, config.max_degree, &mut rng)).collect();
    let mut gens: Vec<Polynomial<Q>> =
        (0..nv).map(|v| Polynomial::monomial(ring, Monomial::var_pow(nv, v, config.pure_power))).collect();
    gens.extend(extras.iter().map(|m| Polynomial::monomial(ring, m.clone())));
    SampleIdeal { seed, extras, gens }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleRecord {
    pub index: usize,
    pub seed: u64,
    pub extras: Vec<String>,
    pub length: Option<u64>,
    pub mult: Option<u64>,
    pub ratio: Option<Q>,
    pub error: Option<String>,
}

impl SampleRecord {
    pub fn k(&self) -> usize {
        self.extras.len()
    }

    pub fn ratio_decimal(&self) -> Option<String> {
        self.ratio.as_ref().map(|r| truncate_significant(r, 3))
    }
}

fn factorial(d: usize) -> u64 {
    (1..=d as u64).product()
}

/// `e / (d! l)` exactly.
pub fn lech_ratio(mult: u64, dim: usize, length: u64) -> Q {
    Q::new(BigInt::from(mult), BigInt::from(factorial(dim)) * BigInt::from(length))
}

/// Decimal truncation (not rounding) to `digits` significant digits, with the
/// leading zero dropped for values below one: `1/4 -> .25`, `1/15 -> .0666`.
pub fn truncate_significant(q: &Q, digits: usize) -> String {
    if q.is_zero() {
        return "0".into();
    }
    let neg = q.is_negative();
    let q = q.abs();
    let (int, mut rem) = q.numer().div_rem(q.denom());
    let den = q.denom().clone();
    let int_str = int.to_string();
    let mut sig = if int.is_zero() { 0 } else { int_str.len() };
    let mut frac = String::new();
    if sig < digits {
        let ten = BigInt::from(10);
        while sig < digits && !rem.is_zero() {
            rem *= &ten;
            let (d, r) = rem.div_rem(&den);
            rem = r;
            let d = d.to_u8().unwrap();
            frac.push((b'0' + d) as char);
            if sig > 0 || d != 0 {
                sig += 1;
            }
        }
    }
    let int_part = if int.is_zero() {
        String::new()
    } else if int_str.len() > digits {
        let keep = &int_str[..digits];
        format!("{keep}{}", "0".repeat(int_str.len() - digits))
    } else {
        int_str
    };
    let frac = frac.trim_end_matches('0');
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&int_part);
    if !frac.is_empty() {
        out.push('.');
        out.push_str(frac);
    } else if int_part.is_empty() {
        out.push('0');
    }
    out
}

/// Everything needed to evaluate one sample.
pub struct Experiment {
    config: ExperimentConfig,
    ambient: Ambient<Q>,
}

impl Experiment {
    pub fn new(config: ExperimentConfig) -> Result<Self> {
        config.validate()?;
        let ambient = Ambient::toric(config.dims)?;
        Ok(Experiment { config, ambient })
    }

    pub fn ambient(&self) -> &Ambient<Q> {
        &self.ambient
    }

    pub fn sample(&self, index: usize) -> SampleRecord {
        let ideal = build_sample_ideal(&self.config, self.ambient.ring(), index);
        let ring = self.ambient.ring();
        let extras = ideal.extras.iter().map(|m| Polynomial::<Q>::monomial(ring, m.clone()).to_string()).collect();
        let mut rec =
            SampleRecord { index, seed: ideal.seed, extras, length: None, mult: None, ratio: None, error: None };
        let mcfg = MultiplicityConfig { seed: ideal.seed, ..MultiplicityConfig::default() };
        let outcome = self.ambient.colength(&ideal.gens).and_then(|len| {
            hs_multiplicity(&ideal.gens, &self.ambient, self.config.method, &mcfg).map(|m| (len, m.value))
        });
        match outcome {
            Ok((len, e)) => {
                rec.length = Some(len);
                rec.mult = Some(e);
                rec.ratio = Some(lech_ratio(e, self.ambient.dim(), len));
            }
            Err(e) => rec.error = Some(e.to_string()),
        }
        rec
    }

    /// All samples, in index order whatever the number of workers.
    pub fn run(&self) -> Vec<SampleRecord> {
        let count = self.config.count;
        let jobs = self.config.jobs.clamp(1, count);
        let next = AtomicUsize::new(0);
        let slots: Mutex<Vec<Option<SampleRecord>>> = Mutex::new(vec![None; count]);
        std::thread::scope(|s| {
            for _ in 0..jobs {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= count {
                        break;
                    }
                    let rec = self.sample(i);
                    slots.lock().unwrap()[i] = Some(rec);
                });
            }
        });
        slots.into_inner().unwrap().into_iter().map(|r| r.expect("every sample ran")).collect()
    }
}

pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<SampleRecord>> {
    Ok(Experiment::new(config.clone())?.run())
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(String::new, |x| x.to_string())
}

pub fn write_samples_csv<W: Write>(records: &[SampleRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["index", "seed", "k", "extra_gens", "length", "mult", "ratio_exact", "ratio_decimal", "error"])?;
    for r in records {
        w.write_record([
            r.index.to_string(),
            r.seed.to_string(),
            r.k().to_string(),
            r.extras.join(";"),
            opt(&r.length),
            opt(&r.mult),
            opt(&r.ratio),
            r.ratio_decimal().unwrap_or_default(),
            r.error.clone().unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Whitespace-separated `length ratio` and `k ratio` columns for plotting.
pub fn write_gnuplot<W1: Write, W2: Write>(records: &[SampleRecord], mut by_length: W1, mut by_count: W2) -> Result<()> {
    writeln!(by_length, "# length ratio")?;
    writeln!(by_count, "# generators ratio")?;
    for r in records {
        let (Some(len), Some(dec)) = (r.length, r.ratio_decimal()) else {
            continue;
        };
        writeln!(by_length, "{len} {dec}")?;
        writeln!(by_count, "{} {dec}", r.k())?;
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableRow {
    pub k: u32,
    pub length: u64,
    pub mult: u64,
    pub ratio: Q,
    /// `e(m^k)` by generic reduction, for the rows where it was computed.
    pub cross_check: Option<u64>,
}

impl TableRow {
    pub fn decimal(&self) -> String {
        truncate_significant(&self.ratio, 3)
    }
}

/// Lengths of `S/m^k`, multiplicities `k^d e(m)`, and their ratio for `k = 1..=k_max`.
/// Rows with `k <= cross_check_up_to` also compute `e(m^k)` by generic reduction.
pub fn mu_power_table(dims: Dims, k_max: u32, cross_check_up_to: u32, seed: u64) -> Result<Vec<TableRow>> {
    let ambient = Ambient::<Q>::toric(dims)?;
    let ring = ambient.ring().clone();
    let num = quotient_numerator(ambient.relations(), &ring)?;
    let d = num.krull_dim()?;
    let e_mu = num.degree()?;
    let nv = ring.nvars();
    let mut rows = Vec::new();
    for k in 1..=k_max {
        let pw: Vec<Polynomial<Q>> = degree_monomials(nv, k)
            .into_iter()
            .map(|m| Polynomial::monomial(&ring, m))
            .collect();
        let length = ambient.colength(&pw)?;
        let mult = (k as u64).pow(d as u32) * e_mu;
        let cross_check = if k <= cross_check_up_to {
            let cfg = MultiplicityConfig { seed, ..MultiplicityConfig::default() };
            Some(hs_multiplicity(&pw, &ambient, MultiplicityMethod::GenericReduction, &cfg)?.value)
        } else {
            None
        };
        rows.push(TableRow { k, length, mult, ratio: lech_ratio(mult, d, length), cross_check });
    }
    Ok(rows)
}

pub fn write_table_csv<W: Write>(rows: &[TableRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["k", "length", "mult", "ratio_exact", "ratio_decimal", "mult_by_reduction"])?;
    for r in rows {
        w.write_record([
            r.k.to_string(),
            r.length.to_string(),
            r.mult.to_string(),
            r.ratio.to_string(),
            r.decimal(),
            opt(&r.cross_check),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Whether `ratio <= bound` exactly.
pub fn ratio_at_most(ratio: &Q, bound: u64) -> bool {
    *ratio <= Q::from_integer(BigInt::from(bound))
}
