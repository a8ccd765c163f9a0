use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;

use ringlab_core::analysis::LatticeCap;
use ringlab_core::constructors::{build_catalog, RingCatalogEntry};
use ringlab_core::report::{evaluate, PREDICATE_NAMES};
use ringlab_core::verify::{truncation_observations, verify as run_verify, VerifyRun};
use ringlab_core::{parse_source, Analysis, PredicateVector, RingReport, VerifyConfig};

use crate::error::CliError;
use crate::{AnalyzeArgs, CatalogListArgs, Format, TruncationArgs, VerifyArgs};

fn lattice(cap: usize) -> LatticeCap {
    LatticeCap {
        max_order: cap,
        ..LatticeCap::default()
    }
}

fn emit(output: Option<&Path>, body: &str) -> Result<(), CliError> {
    match output {
        Some(path) => {
            fs::write(path, body).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::Internal(e.to_string()))
}

pub fn analyze(args: &AnalyzeArgs, order_cap: usize) -> Result<(), CliError> {
    let ring = parse_source(&args.ring, order_cap)?;
    let an = Analysis::with_cap(&ring, lattice(args.caps.lattice_cap));
    let report = RingReport::build(&an)?;
    let body = match args.format {
        Format::Json => to_json(&report)?,
        Format::Text => report.to_text(),
        Format::Csv => PredicateVector::to_csv(&[report.predicates]),
    };
    emit(args.output.as_deref(), &body)
}

fn verify_text(run: &VerifyRun) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "catalog: {} rings", run.catalog_size);
    for v in &run.verdicts {
        let _ = writeln!(
            s,
            "{:<14} {:<9} {}  ({} rings, {} skipped)",
            v.theorem,
            format!("{:?}", v.relation).to_lowercase(),
            if v.overall { "AGREE" } else { "DISAGREE" },
            v.rows.len(),
            v.skipped.len()
        );
        if let Some(note) = &v.note {
            let _ = writeln!(s, "    note: {note}");
        }
        for row in v.disagreements() {
            let _ = write!(s, "    {}: lhs={} rhs={}", row.ring, row.lhs, row.rhs);
            if let Some(w) = &row.witness {
                let names = witness_names(&row.ring, w);
                let _ = write!(s, " witness={}", names);
            }
            if let Some(d) = &row.detail {
                let _ = write!(s, " ({d})");
            }
            s.push('\n');
        }
    }
    let bad = run.verdicts.iter().filter(|v| !v.overall).count();
    let _ = writeln!(
        s,
        "{} of {} suites agree",
        run.verdicts.len() - bad,
        run.verdicts.len()
    );
    s
}

/// Renders witness indices with structured element names when the ring can be rebuilt.
fn witness_names(label: &str, w: &[usize]) -> String {
    let ring = parse_source(label, usize::MAX).ok();
    let parts: Vec<String> = w
        .iter()
        .map(|&x| match &ring {
            Some(r) if x < r.order() && r.has_names() => format!("{x} {}", r.element_name(x)),
            _ => x.to_string(),
        })
        .collect();
    format!("[{}]", parts.join("; "))
}

fn verify_csv(run: &VerifyRun) -> String {
    let mut s = String::from("theorem,ring,lhs,rhs,agree\n");
    for v in &run.verdicts {
        for r in &v.rows {
            let ring = if r.ring.contains([',', '"']) {
                format!("\"{}\"", r.ring.replace('"', "\"\""))
            } else {
                r.ring.clone()
            };
            let _ = writeln!(s, "{},{},{},{},{}", v.theorem, ring, r.lhs, r.rhs, r.agree);
        }
    }
    s
}

pub fn verify(args: &VerifyArgs, order_cap: usize) -> Result<(), CliError> {
    let config = VerifyConfig {
        order_cap,
        lattice_cap: lattice(args.caps.lattice_cap),
        suites: args.theorems.clone(),
        jobs: args.jobs,
    };
    let run = run_verify(&config)?;
    let body = match args.format {
        Format::Json => to_json(&run)?,
        Format::Text => verify_text(&run),
        Format::Csv => verify_csv(&run),
    };
    emit(args.output.as_deref(), &body)?;
    let bad = run.verdicts.iter().filter(|v| !v.overall).count();
    if bad > 0 {
        return Err(CliError::Disagreement(bad));
    }
    Ok(())
}

#[derive(Serialize)]
struct ListedEntry<'a> {
    index: usize,
    label: &'a str,
    order: usize,
    provenance: &'a str,
    predicates: PredicateVector,
}

fn filter_matches(an: &Analysis, filter: &str) -> Result<bool, CliError> {
    let (negate, name) = match filter.strip_prefix('!') {
        Some(rest) => (true, rest),
        None => (false, filter),
    };
    let d = evaluate(an, name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown predicate '{name}'; expected one of {}",
            PREDICATE_NAMES.join(", ")
        ))
    })?;
    Ok(d.holds != negate)
}

pub fn catalog_list(args: &CatalogListArgs, order_cap: usize) -> Result<(), CliError> {
    let catalog = build_catalog(order_cap);
    let cap = lattice(args.caps.lattice_cap);
    let mut listed: Vec<(usize, &RingCatalogEntry, PredicateVector)> = Vec::new();
    for (i, entry) in catalog.entries.iter().enumerate() {
        let an = Analysis::with_cap(&entry.ring, cap);
        if let Some(f) = &args.filter {
            if !filter_matches(&an, f)? {
                continue;
            }
        }
        listed.push((i, entry, PredicateVector::compute(&an)));
    }
    let body = match args.format {
        Format::Json => {
            let rows: Vec<ListedEntry> = listed
                .iter()
                .map(|(i, e, v)| ListedEntry {
                    index: *i,
                    label: e.ring.label(),
                    order: e.ring.order(),
                    provenance: &e.provenance,
                    predicates: v.clone(),
                })
                .collect();
            to_json(&rows)?
        }
        Format::Csv => {
            let vs: Vec<PredicateVector> = listed.iter().map(|(_, _, v)| v.clone()).collect();
            PredicateVector::to_csv(&vs)
        }
        Format::Text => {
            let mut s = String::new();
            for (i, e, v) in &listed {
                let flag = |n: &str| if v.get(n) == Some(true) { "y" } else { "-" };
                let _ = writeln!(
                    s,
                    "{i:>3}  {:<44} order {:>3}  uc {} upc {} abelian {} local {}",
                    e.ring.label(),
                    e.ring.order(),
                    flag("uniquely_clean"),
                    flag("uniquely_pi_clean"),
                    flag("abelian"),
                    flag("local"),
                );
            }
            let _ = writeln!(s, "{} entries", listed.len());
            for (src, reason) in &catalog.skipped {
                let _ = writeln!(s, "skipped {src}: {reason}");
            }
            s
        }
    };
    print!("{body}");
    if let Some(dir) = &args.dump_catalog {
        let entries: Vec<(usize, &RingCatalogEntry)> =
            listed.iter().map(|(i, e, _)| (*i, *e)).collect();
        write_dump(dir, &entries)?;
    }
    Ok(())
}

/// File name for a catalog entry: index prefix plus the label with
/// filesystem-hostile characters replaced.
pub fn dump_file_name(index: usize, label: &str) -> String {
    let clean: String = label
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' {
                c
            } else {
                '_'
            }
        })
        .collect();
    let mut clean = clean.trim_matches('_').to_string();
    clean.truncate(80);
    format!("{index:03}_{clean}.json")
}

#[derive(Serialize)]
struct ManifestEntry<'a> {
    index: usize,
    file: String,
    label: &'a str,
    order: usize,
    provenance: &'a str,
}

fn write_dump(dir: &Path, entries: &[(usize, &RingCatalogEntry)]) -> Result<usize, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    let mut manifest = Vec::new();
    for (i, entry) in entries {
        let file = dump_file_name(*i, entry.ring.label());
        let path = dir.join(&file);
        fs::write(&path, entry.ring.to_tables().to_json())
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        manifest.push(ManifestEntry {
            index: *i,
            file,
            label: entry.ring.label(),
            order: entry.ring.order(),
            provenance: &entry.provenance,
        });
    }
    let path = dir.join("manifest.json");
    fs::write(&path, to_json(&manifest)?)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(entries.len())
}

pub fn catalog_dump(dir: &Path, order_cap: usize) -> Result<usize, CliError> {
    let catalog = build_catalog(order_cap);
    let entries: Vec<(usize, &RingCatalogEntry)> = catalog.entries.iter().enumerate().collect();
    write_dump(dir, &entries)
}

pub fn truncations(args: &TruncationArgs) -> Result<(), CliError> {
    let rows = truncation_observations(args.max_p);
    let body = match args.format {
        Format::Json => to_json(&rows)?,
        Format::Csv => {
            let mut s = String::from("p,modulus,exponents,uniquely_clean\n");
            for r in &rows {
                let join = |v: &[usize]| {
                    v.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    r.p,
                    r.modulus,
                    join(&r.exponents),
                    join(&r.uniquely_clean)
                );
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                let _ = writeln!(
                    s,
                    "p={:<3} Z/{:<4} 2^m uniquely clean for m in {:?} of {:?}",
                    r.p, r.modulus, r.uniquely_clean, r.exponents
                );
            }
            s
        }
    };
    print!("{body}");
    Ok(())
}
