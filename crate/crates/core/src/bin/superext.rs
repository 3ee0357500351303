//! Command-line front end: counting and enumerating maximal linked families,
//! building λ(G) with structure and automorphism reports, isomorphism tests,
//! and the full verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

use clap::{Parser, Subcommand};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use superext::groups::{self, FiniteGroup};
use superext::lambdaenum::{
    count_lambda, enumerate_lambda_bits, family_from_bits, load_cache, save_cache, LambdaCache,
};
use superext::lambdaop::{build_lambda, lambda_map, LambdaSemigroup, MulContext};
use superext::morphisms::{automorphisms_seeded, lambda_isomorphic, restriction_epimorphism};
use superext::setfam::GroundSet;
use superext::structure::{
    self, build_t17, csv_quote, idempotent_poset, idempotents, maximal_ideal, orbit_semigroup,
    translation_orbits, zero_element, SemigroupTable,
};
use superext::verify::run_verification;
use superext::Error;

#[derive(Parser)]
#[command(
    name = "superext",
    about = "Superextensions of finite groups: maximal linked families, the extended semigroup operation, and automorphism groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the maximal linked families on an n-element set (n ≤ 7).
    Count {
        n: usize,
        /// Worker threads for the tree search.
        #[arg(long, default_value_t = 4)]
        workers: usize,
        /// Also write the enumerated families to the cache directory.
        #[arg(long)]
        write_cache: bool,
        /// Cache directory (default ./.lambda-cache, env LAMBDA_CACHE_DIR).
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Enumerate the families on an n-element set and write the binary cache.
    Enum {
        n: usize,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Build λ(G) and emit elements, the Cayley table (CSV) and a structure
    /// report (JSON).
    Lambda {
        /// Group: c1..c5, c2xc2, or a JSON Cayley-table file.
        group: String,
        /// Output directory for the CSV/JSON files.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Also render the 17×17 named product table (λ(C5) only).
        #[arg(long)]
        t17: bool,
    },
    /// Automorphism groups of G and λ(G).
    Aut { group: String },
    /// Test G ≅ H and λ(G) ≅ λ(H).
    Iso { group_a: String, group_b: String },
    /// Run every reproduction check and write a JSON report.
    #[command(name = "verify-paper")]
    VerifyPaper {
        /// Report path.
        #[arg(long, default_value = "verify-report.json")]
        out: PathBuf,
        /// Run only checks whose id starts with this prefix (e.g. "counts").
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value_t = 4)]
        workers: usize,
    },
    /// Probe whether Aut(λ(G)) = Aut(G) for odd cyclic groups: full analysis
    /// up to c5; for c7 a bounded sampling probe. The question is open and
    /// this command asserts no answer.
    Experiment {
        /// c1, c3, c5 or c7.
        group: String,
        /// Sampled products for the c7 probe.
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
}

fn cache_dir_or_default(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| std::env::var_os("LAMBDA_CACHE_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("./.lambda-cache"))
}

fn parse_group(spec: &str) -> Result<(String, FiniteGroup), Error> {
    match spec {
        "c1" => Ok(("C1".into(), groups::make_cyclic(1))),
        "c2" => Ok(("C2".into(), groups::make_cyclic(2))),
        "c3" => Ok(("C3".into(), groups::make_cyclic(3))),
        "c4" => Ok(("C4".into(), groups::make_cyclic(4))),
        "c5" => Ok(("C5".into(), groups::make_cyclic(5))),
        "c2xc2" => Ok(("C2xC2".into(), groups::klein4())),
        path if Path::new(path).exists() => {
            let text = std::fs::read_to_string(path)?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| Error::Usage(format!("bad JSON in {path}: {e}")))?;
            let rows = value
                .get("table")
                .and_then(|t| t.as_array())
                .ok_or_else(|| Error::Usage(format!("{path} has no \"table\" array")))?;
            let table: Vec<Vec<usize>> = rows
                .iter()
                .map(|row| {
                    row.as_array()
                        .map(|cells| {
                            cells
                                .iter()
                                .map(|c| c.as_u64().unwrap_or(u64::MAX) as usize)
                                .collect()
                        })
                        .ok_or_else(|| Error::Usage("table rows must be arrays".into()))
                })
                .collect::<Result<_, _>>()?;
            let group = FiniteGroup::from_table(table)?;
            let name = value
                .get("name")
                .and_then(|n| n.as_str())
                .map(|s| s.to_string())
                .unwrap_or_else(|| groups::identify(&group));
            Ok((name, group))
        }
        other => Err(Error::Usage(format!("unknown group spec {other:?}"))),
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Io(_) | Error::CorruptCache(_) => 3,
        _ => 2,
    }
}

fn table_csv(lambda: &LambdaSemigroup) -> String {
    let n = lambda.size();
    let mut out = String::from("*");
    for j in 0..n {
        out.push(',');
        out.push_str(&csv_quote(&lambda.display(j)));
    }
    out.push('\n');
    for i in 0..n {
        out.push_str(&csv_quote(&lambda.display(i)));
        for j in 0..n {
            out.push(',');
            out.push_str(&csv_quote(&lambda.display(lambda.mul(i, j))));
        }
        out.push('\n');
    }
    out
}

fn lambda_report_json(
    name: &str,
    lambda: &LambdaSemigroup,
    table_ref: &str,
) -> Result<serde_json::Value, Error> {
    let table = SemigroupTable::from_lambda(lambda);
    let idem = idempotents(&table);
    let zero = zero_element(&table);
    let poset = idempotent_poset(&table)?;
    let ideal = maximal_ideal(&table);
    let orbits = translation_orbits(lambda);
    let quotient = orbit_semigroup(lambda)?;
    let auts = automorphisms_seeded(lambda)?;
    let restriction = restriction_epimorphism(lambda, &auts)?;
    let aut_g = groups::automorphisms(lambda.group())?;

    let elements: Vec<serde_json::Value> = (0..lambda.size())
        .map(|i| {
            json!({
                "index": i,
                "label": lambda.display(i),
                "minimal_sets": lambda.element(i)
                    .minimal_sets()
                    .iter()
                    .map(|m| m.display(lambda.ground()))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();

    Ok(json!({
        "schema_version": 1,
        "group": {
            "name": name,
            "order": lambda.group().order(),
            "table": lambda.group().flat_table(),
        },
        "lambda": {
            "size": lambda.size(),
            "elements": elements,
            "table_ref": table_ref,
        },
        "structure": {
            "idempotents": idem.iter().map(|&i| json!({
                "index": i, "label": lambda.display(i),
            })).collect::<Vec<_>>(),
            "zero": zero.map(|z| json!({"index": z, "label": lambda.display(z)})),
            "idempotent_hasse": poset.hasse_edges().iter().map(|&(a, b)| {
                json!([lambda.display(a), lambda.display(b)])
            }).collect::<Vec<_>>(),
            "maximal_ideal_size": ideal.as_ref().map(|i| i.len()),
            "maximal_ideal": ideal,
            "orbit_count": orbits.len(),
            "orbits": orbits,
            "orbit_representatives": quotient.representatives.iter()
                .map(|&r| lambda.display(r)).collect::<Vec<_>>(),
        },
        "aut": {
            "aut_group": { "order": aut_g.len() },
            "aut_lambda": { "order": auts.len(), "name": auts.name() },
            "kernel_size": restriction.kernel_size,
            "restriction_onto": restriction.surjective,
            "lifted_copy_normal": restriction.lifted_normal,
        },
    }))
}

fn cmd_count(
    n: usize,
    workers: usize,
    write_cache: bool,
    cache_dir: Option<PathBuf>,
) -> Result<(), Error> {
    let count = count_lambda(n, workers)?;
    println!("{count}");
    if write_cache {
        let dir = cache_dir_or_default(cache_dir);
        std::fs::create_dir_all(&dir)?;
        let path = dir.join(format!("lambda{n}.mlf"));
        save_cache(&LambdaCache::build(n)?, &path)?;
        eprintln!("cache written to {}", path.display());
    }
    Ok(())
}

fn cmd_enum(n: usize, cache_dir: Option<PathBuf>) -> Result<(), Error> {
    let dir = cache_dir_or_default(cache_dir);
    std::fs::create_dir_all(&dir)?;
    let path = dir.join(format!("lambda{n}.mlf"));
    let cache = LambdaCache::build(n)?;
    save_cache(&cache, &path)?;
    // Round-trip as a self-check.
    let reloaded = load_cache(&path)?;
    println!(
        "lambda({n}) = {} families; cache {} ({} bytes, checksum {:016x})",
        cache.len(),
        path.display(),
        std::fs::metadata(&path)?.len(),
        reloaded.checksum(),
    );
    Ok(())
}

fn cmd_lambda(spec: &str, out: &Path, t17: bool) -> Result<(), Error> {
    let (name, group) = parse_group(spec)?;
    let lambda = build_lambda(group)?;
    std::fs::create_dir_all(out)?;

    let stem = spec.replace(['/', '\\', '.'], "_");
    let csv_name = format!("{stem}_table.csv");
    std::fs::write(out.join(&csv_name), table_csv(&lambda))?;
    let report = lambda_report_json(&name, &lambda, &csv_name)?;
    let json_name = format!("{stem}_lambda.json");
    std::fs::write(
        out.join(&json_name),
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
    )?;

    println!("lambda({name}): {}", plural(lambda.size(), "element"));
    if lambda.size() <= 16 {
        for i in 0..lambda.size() {
            println!(
                "  {:>4} = {}",
                lambda.display(i),
                lambda.element(i).display(lambda.ground())
            );
        }
    }
    let table = SemigroupTable::from_lambda(&lambda);
    let idem: Vec<String> = idempotents(&table)
        .iter()
        .map(|&i| lambda.display(i))
        .collect();
    println!("idempotents: {{{}}}", idem.join(", "));
    match zero_element(&table) {
        Some(z) => println!("zero: {}", lambda.display(z)),
        None => println!("zero: none"),
    }
    match maximal_ideal(&table) {
        Some(ideal) => println!("maximal ideal: {}", plural(ideal.len(), "element")),
        None => println!("maximal ideal: none"),
    }
    println!("orbits: {}", translation_orbits(&lambda).len());
    println!("files: {json_name}, {csv_name}");

    if t17 {
        let t = build_t17(&lambda)?;
        let t17_csv = format!("{stem}_t17.csv");
        let t17_json = format!("{stem}_t17.json");
        std::fs::write(out.join(&t17_csv), t.to_csv())?;
        std::fs::write(
            out.join(&t17_json),
            serde_json::to_string_pretty(&t.to_json()).expect("t17 serializes") + "\n",
        )?;
        println!("t17 table: {t17_csv}, {t17_json}");
        print!("{}", render_t17_text(&t));
    }
    Ok(())
}

fn render_t17_text(t: &structure::T17) -> String {
    let width = 6;
    let mut out = format!("{:>width$} |", "*");
    for name in &t.names {
        out.push_str(&format!(" {name:>width$}"));
    }
    out.push('\n');
    for (r, name) in t.names.iter().enumerate() {
        out.push_str(&format!("{name:>width$} |"));
        for c in 0..t.names.len() {
            out.push_str(&format!(" {:>width$}", t.cells[r][c]));
        }
        out.push('\n');
    }
    out
}

fn cmd_aut(spec: &str) -> Result<(), Error> {
    let (name, group) = parse_group(spec)?;
    let aut_g = groups::automorphisms(&group)?;
    let aut_g_name = superext::verify::identify_perm_group(&group, &aut_g)?;
    let lambda = build_lambda(group)?;
    let auts = automorphisms_seeded(&lambda)?;
    let restriction = restriction_epimorphism(&lambda, &auts)?;
    println!("Aut(G)={aut_g_name}, Aut(lambda(G))={}", auts.name());
    println!(
        "G={name}: |Aut(G)|={}, |Aut(lambda(G))|={}, kernel={}, restriction onto Aut(G): {}, lifted copy normal: {}",
        aut_g.len(),
        auts.len(),
        restriction.kernel_size,
        if restriction.surjective { "yes" } else { "no" },
        if restriction.lifted_normal { "yes" } else { "no" },
    );
    Ok(())
}

fn cmd_iso(spec_a: &str, spec_b: &str) -> Result<(), Error> {
    let (name_a, group_a) = parse_group(spec_a)?;
    let (name_b, group_b) = parse_group(spec_b)?;
    let group_witness = groups::is_isomorphic(&group_a, &group_b);
    println!(
        "{name_a} ≅ {name_b}: {}",
        if group_witness.is_some() { "yes" } else { "no" }
    );
    let lam_a = build_lambda(group_a)?;
    let lam_b = build_lambda(group_b)?;
    match lambda_isomorphic(&lam_a, &lam_b)? {
        Some(perm) => println!(
            "lambda({name_a}) ≅ lambda({name_b}): yes (witness on {} elements)",
            perm.len()
        ),
        None => println!("lambda({name_a}) ≅ lambda({name_b}): no"),
    }
    Ok(())
}

fn cmd_verify(out: &Path, only: Option<&str>, workers: usize) -> Result<bool, Error> {
    let report = run_verification(only, workers);
    if report.checks.is_empty() {
        return Err(Error::Usage(format!(
            "no checks match filter {:?}",
            only.unwrap_or("")
        )));
    }
    print!("{}", report.render_text());
    std::fs::write(
        out,
        serde_json::to_string_pretty(&report.to_json()).expect("report serializes") + "\n",
    )?;
    println!("report: {}", out.display());
    Ok(report.passed())
}

fn cmd_experiment(spec: &str, samples: usize) -> Result<(), Error> {
    match spec {
        "c1" | "c3" | "c5" => {
            let (name, group) = parse_group(spec)?;
            let aut_g = groups::automorphisms(&group)?;
            let lambda = build_lambda(group)?;
            let auts = automorphisms_seeded(&lambda)?;
            println!(
                "G={name}: |Aut(G)|={}, |Aut(lambda(G))|={} — {}",
                aut_g.len(),
                auts.len(),
                if aut_g.len() == auts.len() {
                    "equal (restriction is an isomorphism)"
                } else {
                    "NOT equal"
                }
            );
        }
        "c7" => {
            println!(
                "c7: lambda(C7) has 1422564 elements; its full automorphism group is out of reach here."
            );
            println!("Probing the lifted automorphisms on {samples} sampled products...");
            let bits = enumerate_lambda_bits(7)?;
            println!("enumerated {} families", bits.len());
            let group = groups::make_cyclic(7);
            let ctx = MulContext::from_group(&group);
            let ground = GroundSet::new(7)?;
            let mut state = 0x0123_4567_89ab_cdefu64;
            let mut rng = move || {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (state >> 33) as usize
            };
            let to_bits = |words: &[u64]| -> u128 {
                (words[0] as u128) | ((words.get(1).copied().unwrap_or(0) as u128) << 64)
            };
            // λφ for φ: x ↦ ax (a = 1..6) must respect sampled products.
            for trial in 0..samples {
                let i = rng() % bits.len();
                let j = rng() % bits.len();
                let a = family_from_bits(7, bits[i]);
                let b = family_from_bits(7, bits[j]);
                let prod = ctx.product(&a, &b)?;
                for scale in 1..7usize {
                    let f: Vec<usize> = (0..7).map(|x| (x * scale) % 7).collect();
                    let fa = lambda_map(&f, &ground, &a)?;
                    let fb = lambda_map(&f, &ground, &b)?;
                    let fprod = lambda_map(&f, &ground, &prod)?;
                    let direct = ctx.product(&fa, &fb)?;
                    if to_bits(fprod.words()) != to_bits(direct.words()) {
                        println!(
                            "counterexample candidate at trial {trial}: λφ is not multiplicative"
                        );
                        return Ok(());
                    }
                }
            }
            println!(
                "no inconsistency across {samples} sampled products × 6 lifted maps; whether Aut(lambda(C7)) = Aut(C7) remains open (no answer asserted)."
            );
        }
        other => {
            return Err(Error::Usage(format!(
                "experiment expects c1, c3, c5 or c7, got {other:?}"
            )));
        }
    }
    Ok(())
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

fn main() -> ExitCode {
    // Die quietly on closed pipes (e.g. `superext lambda c5 | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result: Result<bool, Error> = match cli.command {
        Command::Count {
            n,
            workers,
            write_cache,
            cache_dir,
        } => cmd_count(n, workers, write_cache, cache_dir).map(|_| true),
        Command::Enum { n, cache_dir } => cmd_enum(n, cache_dir).map(|_| true),
        Command::Lambda { group, out, t17 } => cmd_lambda(&group, &out, t17).map(|_| true),
        Command::Aut { group } => cmd_aut(&group).map(|_| true),
        Command::Iso { group_a, group_b } => cmd_iso(&group_a, &group_b).map(|_| true),
        Command::VerifyPaper { out, only, workers } => cmd_verify(&out, only.as_deref(), workers),
        Command::Experiment { group, samples } => cmd_experiment(&group, samples).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
