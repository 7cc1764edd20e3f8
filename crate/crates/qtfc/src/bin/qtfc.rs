//! Command-line front end for the `qtfc` library.
//!
//! Exit codes: `0` success, `1` verification failures, `2` invalid
//! arguments or domain errors, `3` resource limits exceeded.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qtfc::catalan::{
    chain_genfun, dyck_area_genfun, dyck_count, filtered_chains, fuss_catalan, fuss_catalan_q,
    PosetType, RootPoset,
};
use qtfc::coinv::{AnyEngine, GeneratorSource, Orientation};
use qtfc::error::Error;
use qtfc::groups::{GroupSpec, NamedFamily};
use qtfc::shi::{ShiArrangement, DEFAULT_CANDIDATE_CAP};
use qtfc::verify::{any_failures, run_verify, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "qtfc",
    about = "Exact q,t-Fuss-Catalan polynomials for finite complex reflection groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Worker thread cap for internal parallelism (the current pipelines
    /// are deterministic and effectively single-threaded).
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Compute Cat^(m)(W; q, t), the bigraded Hilbert series of the
    /// minimal generating space of the m-th power of the determinantal
    /// ideal.
    Hilbert {
        /// Group name: A2, B3, D4, I2(5), C6, G(4,2,2), ...
        #[arg(long)]
        group: String,
        #[arg(long)]
        m: u32,
        /// Which copy of the reflection representation carries the
        /// determinantal weight (the swapped choice transposes q and t).
        #[arg(long, value_enum, default_value = "standard")]
        det_orientation: CliOrientation,
        /// Layer-one generator construction.
        #[arg(long, value_enum, default_value = "generic")]
        source: CliSource,
        /// Override the degree scan with an explicit box 0..=qmax (needs --tmax).
        #[arg(long, requires = "tmax")]
        qmax: Option<u32>,
        /// Override the degree scan with an explicit box 0..=tmax (needs --qmax).
        #[arg(long, requires = "qmax")]
        tmax: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Print the Fuss-Catalan number and its q-analog.
    Catalan {
        #[arg(long)]
        group: String,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Count m-Dyck paths and print the area generating function.
    Dyck {
        /// Semilength (number of north steps).
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Count filtered chains of order ideals in a root poset and print the
    /// weight generating function.
    Chains {
        /// Poset name: A3, B2, C3, D4, G2, or I2(k) for the abstract
        /// dihedral poset (m = 1 only).
        #[arg(long, alias = "type")]
        group: String,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate regions of the extended Shi arrangement Shi^(m)(W).
    Shi {
        /// Arrangement type: A3, B2, C3, D4, or G2.
        #[arg(long, alias = "type")]
        group: String,
        #[arg(long)]
        m: u32,
        /// Truncate the highest-root hyperplane family at this level
        /// (G2 only).
        #[arg(long)]
        truncate: Option<u32>,
        /// Print the coheight generating function of the positive regions.
        #[arg(long)]
        genfun: bool,
        /// Count all regions (not only the positive ones).
        #[arg(long)]
        all_regions: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Bigraded Hilbert series of the full diagonal coinvariant algebra.
    CoinvFull {
        #[arg(long)]
        group: String,
        /// Degree cap in q (default: 2 max(N, N*) + 2).
        #[arg(long)]
        qmax: Option<u32>,
        /// Degree cap in t (default: 2 max(N, N*) + 2).
        #[arg(long)]
        tmax: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Run the verification harness against the bundled reference data.
    Verify {
        /// Resource tier: 0 (seconds), 1 (up to ~1 hour), 2 (unbounded).
        #[arg(long, default_value_t = 1)]
        tier: u8,
        /// Restrict to checks attached to one group.
        #[arg(long)]
        group: Option<String>,
        /// Restrict to checks attached to one m.
        #[arg(long)]
        m: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum CliOrientation {
    Standard,
    Swapped,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum CliSource {
    Generic,
    Vandermonde,
    DihedralDelta,
}

fn parse_poset(name: &str) -> Result<PosetType, Error> {
    if name == "G2" {
        return Ok(PosetType::G2);
    }
    if let Some(rest) = name.strip_prefix("I2(") {
        let k: u32 = rest
            .strip_suffix(')')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad dihedral poset name: {}", name)))?;
        return Ok(PosetType::ArmstrongI2(k));
    }
    let (letter, rank) = name.split_at(1);
    let rank: u32 = rank
        .parse()
        .map_err(|_| Error::Parse(format!("bad poset name: {}", name)))?;
    match letter {
        "A" => Ok(PosetType::A(rank)),
        "B" => Ok(PosetType::B(rank)),
        "C" => Ok(PosetType::C(rank)),
        "D" => Ok(PosetType::D(rank)),
        _ => Err(Error::Parse(format!("bad poset name: {}", name))),
    }
}

#[derive(Serialize)]
struct CatalanOutput {
    group: String,
    m: u32,
    catalan: i64,
    q_catalan: String,
}

#[derive(Serialize)]
struct DyckOutput {
    n: u32,
    m: u32,
    count: i64,
    area_genfun: String,
}

#[derive(Serialize)]
struct ChainsOutput {
    group: String,
    m: u32,
    count: usize,
    genfun: String,
}

#[derive(Serialize)]
struct RegionOutput {
    levels: Vec<u32>,
    coheight: u32,
    /// Coordinates of a rational interior point, as numerator/denominator
    /// string pairs.
    witness: Vec<(String, String)>,
}

#[derive(Serialize)]
struct ShiOutput {
    group: String,
    m: u32,
    truncate: Option<u32>,
    positive_regions: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    all_regions: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coheight_genfun: Option<String>,
    regions: Vec<RegionOutput>,
}

#[derive(Serialize)]
struct CoinvFullOutput {
    group: String,
    qmax: u32,
    tmax: u32,
    dimension: i64,
    hilbert: String,
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialization cannot fail")
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Hilbert { common, .. }
            | Command::Catalan { common, .. }
            | Command::Dyck { common, .. }
            | Command::Chains { common, .. }
            | Command::Shi { common, .. }
            | Command::CoinvFull { common, .. }
            | Command::Verify { common, .. } => common,
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    if cli.command.common().jobs == 0 {
        return Err(Error::Parse("--jobs must be at least 1".into()));
    }
    match cli.command {
        Command::Hilbert {
            group,
            m,
            det_orientation,
            source,
            qmax,
            tmax,
            common,
        } => {
            let spec = GroupSpec::build(NamedFamily::parse(&group)?)?;
            let orientation = match det_orientation {
                CliOrientation::Standard => Orientation::Standard,
                CliOrientation::Swapped => Orientation::Swapped,
            };
            let src = match source {
                CliSource::Generic => GeneratorSource::Generic,
                CliSource::Vandermonde => GeneratorSource::Vandermonde,
                CliSource::DihedralDelta => GeneratorSource::DihedralDelta,
            };
            let mut eng = AnyEngine::new(spec, orientation, src)?;
            let (table, poly) = match (qmax, tmax) {
                (Some(q), Some(t)) => eng.minimal_generator_dims_boxed(m, q, t)?,
                _ => eng.minimal_generator_dims(m)?,
            };
            match common.format {
                Format::Text => {
                    eprintln!(
                        "# group={} m={} orientation={} source={} degree-box={},{} slack={}",
                        table.group,
                        table.m,
                        table.orientation,
                        table.source,
                        table.degree_box.0,
                        table.degree_box.1,
                        table.slack
                    );
                    for w in &table.warnings {
                        eprintln!("# warning: {}", w);
                    }
                    println!("{}", poly.to_text());
                }
                Format::Json => println!("{}", json(&table)),
            }
        }
        Command::Catalan { group, m, common } => {
            let spec = GroupSpec::build(NamedFamily::parse(&group)?)?;
            let number = fuss_catalan(&spec, m)?;
            let q = fuss_catalan_q(&spec, m)?;
            match common.format {
                Format::Text => {
                    eprintln!("# group={} m={}", spec.family, m);
                    println!("{}", number);
                    println!("{}", q.to_text());
                }
                Format::Json => {
                    let out = CatalanOutput {
                        group: spec.family.to_string(),
                        m,
                        catalan: number,
                        q_catalan: q.to_text(),
                    };
                    println!("{}", json(&out));
                }
            }
        }
        Command::Dyck { n, m, common } => {
            let count = dyck_count(n, m);
            let genfun = dyck_area_genfun(n, m);
            match common.format {
                Format::Text => {
                    eprintln!("# n={} m={}", n, m);
                    println!("{}", count);
                    println!("{}", genfun.to_text());
                }
                Format::Json => {
                    let out = DyckOutput {
                        n,
                        m,
                        count,
                        area_genfun: genfun.to_text(),
                    };
                    println!("{}", json(&out));
                }
            }
        }
        Command::Chains { group, m, common } => {
            let poset = RootPoset::build(parse_poset(&group)?)?;
            let chains = filtered_chains(&poset, m)?;
            let genfun = chain_genfun(&poset, m)?;
            match common.format {
                Format::Text => {
                    eprintln!("# group={} m={} chains={}", group, m, chains.len());
                    println!("{}", genfun.to_text());
                }
                Format::Json => {
                    let out = ChainsOutput {
                        group,
                        m,
                        count: chains.len(),
                        genfun: genfun.to_text(),
                    };
                    println!("{}", json(&out));
                }
            }
        }
        Command::Shi {
            group,
            m,
            truncate,
            genfun,
            all_regions,
            common,
        } => {
            let kind = parse_poset(&group)?;
            let arr = match truncate {
                Some(k) => {
                    if kind != PosetType::G2 {
                        return Err(Error::Domain(
                            "--truncate is only defined for the G2 arrangement".into(),
                        ));
                    }
                    ShiArrangement::g2_truncated(m, k)?
                }
                None => ShiArrangement::new(kind, m)?,
            };
            let regions = arr.positive_regions(DEFAULT_CANDIDATE_CAP)?;
            let total = if all_regions {
                Some(arr.all_regions_count(DEFAULT_CANDIDATE_CAP)?)
            } else {
                None
            };
            let coheights = if genfun {
                let mut g = qtfc::LaurentQPoly::zero();
                for r in &regions {
                    g.add_term(r.coheight as i64, 1);
                }
                Some(g)
            } else {
                None
            };
            match common.format {
                Format::Text => {
                    eprintln!(
                        "# group={} m={}{}",
                        group,
                        m,
                        truncate.map_or(String::new(), |k| format!(" truncate={}", k))
                    );
                    match (&coheights, total) {
                        (Some(g), _) => println!("{}", g.to_text()),
                        (None, Some(t)) => println!("{}", t),
                        (None, None) => println!("{}", regions.len()),
                    }
                }
                Format::Json => {
                    let out = ShiOutput {
                        group,
                        m,
                        truncate,
                        positive_regions: regions.len(),
                        all_regions: total,
                        coheight_genfun: coheights.map(|g| g.to_text()),
                        regions: regions
                            .iter()
                            .map(|r| RegionOutput {
                                levels: r.levels.clone(),
                                coheight: r.coheight,
                                witness: r
                                    .witness
                                    .iter()
                                    .map(|w| (w.numer().to_string(), w.denom().to_string()))
                                    .collect(),
                            })
                            .collect(),
                    };
                    println!("{}", json(&out));
                }
            }
        }
        Command::CoinvFull {
            group,
            qmax,
            tmax,
            common,
        } => {
            let spec = GroupSpec::build(NamedFamily::parse(&group)?)?;
            let default_cap = 2 * spec.max_n() + 2;
            let (qmax, tmax) = (qmax.unwrap_or(default_cap), tmax.unwrap_or(default_cap));
            let mut eng = AnyEngine::new(spec, Orientation::Standard, GeneratorSource::Generic)?;
            let series = eng.full_coinvariant_hilbert(qmax, tmax)?;
            match common.format {
                Format::Text => {
                    eprintln!("# group={} qmax={} tmax={}", group, qmax, tmax);
                    println!("{}", series.to_text());
                }
                Format::Json => {
                    let out = CoinvFullOutput {
                        group,
                        qmax,
                        tmax,
                        dimension: series.eval_one(),
                        hilbert: series.to_text(),
                    };
                    println!("{}", json(&out));
                }
            }
        }
        Command::Verify {
            tier,
            group,
            m,
            common,
        } => {
            let opts = VerifyOptions { tier, group, m };
            let reports = run_verify(&opts);
            match common.format {
                Format::Text => {
                    eprintln!(
                        "# tier={}{}{}",
                        opts.tier,
                        opts.group
                            .as_deref()
                            .map_or(String::new(), |g| format!(" group={}", g)),
                        opts.m.map_or(String::new(), |m| format!(" m={}", m))
                    );
                    for r in &reports {
                        println!("{:16} tier{} {}: {}", r.status.to_string(), r.tier, r.id, r.detail);
                    }
                    let failures = reports.iter().filter(|r| r.status.is_failure()).count();
                    println!("{} checks, {} failures", reports.len(), failures);
                }
                Format::Json => println!("{}", json(&reports)),
            }
            if any_failures(&reports) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            match e {
                Error::Resource(_) | Error::Incomplete(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
