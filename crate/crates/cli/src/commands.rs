use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use serde_json::{json, Value};
use thiserror::Error;

use semikit::corpus::{
    census_with, read_corpus, verify_instances, write_corpus, Descriptor, Instance,
    VerificationReport, VerifyOptions,
};
use semikit::format::{parse_rms, read_sg_file, write_rms, write_sg};
use semikit::greens::{eggbox_ascii, eggbox_dot, greens_structure, regular_witness, Relation};
use semikit::ideals::{kernel, rees_quotient};
use semikit::simple::{
    band_predicates, enumerate_subsemigroups, is_completely_simple, is_simple, rees_decompose,
};
use semikit::{FiniteSemigroup, Limits, Role, SubsetHandle};

use crate::{Cli, Command, Format};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Input {
        path: String,
        source: semikit::Error,
    },
    #[error(transparent)]
    Core(#[from] semikit::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

type Result<T> = std::result::Result<T, CliError>;

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Reads a `.sg` table, or a `.rms` presentation as its realized table.
fn load(path: &Path, limits: &Limits) -> Result<FiniteSemigroup> {
    let input = |source| CliError::Input {
        path: path.display().to_string(),
        source,
    };
    if path.extension().is_some_and(|e| e == "rms") {
        let text = fs::read_to_string(path).map_err(|e| input(e.into()))?;
        let rms = parse_rms(&text).map_err(input)?;
        if rms.realized().order() > limits.max_order {
            return Err(input(semikit::Error::OrderTooLarge {
                order: rms.realized().order(),
                max: limits.max_order,
            }));
        }
        let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned());
        let s = rms.realized().clone();
        return Ok(match stem {
            Some(name) => s.with_name(name),
            None => s,
        });
    }
    read_sg_file(path, limits).map_err(input)
}

fn set(members: &[usize]) -> String {
    let inner: Vec<String> = members.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn sets(list: &[Vec<usize>]) -> String {
    list.iter().map(|m| set(m)).collect::<Vec<_>>().join(", ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn emit(format: Format, human: String, structured: Value) {
    match format {
        Format::Human => print!("{human}"),
        Format::Structured => println!(
            "{}",
            serde_json::to_string_pretty(&structured).expect("JSON values serialize")
        ),
    }
}

pub fn run(cli: &Cli) -> Result<ExitCode> {
    let limits = Limits::from_env();
    let format = cli.format;
    match &cli.command {
        Command::Validate { file } => {
            let s = load(file, &limits)?;
            emit(
                format,
                format!("associative, order {}\n", s.order()),
                json!({ "associative": true, "order": s.order(), "table": s.rows() }),
            );
        }
        Command::Report { file } => report(format, &load(file, &limits)?),
        Command::Greens { file, dot } => {
            let s = load(file, &limits)?;
            let g = greens_structure(&s);
            if let Some(path) = dot {
                write_file(path, &eggbox_dot(&s, &g))?;
            }
            let mut human = String::new();
            for (name, relation) in [
                ("L", Relation::L),
                ("R", Relation::R),
                ("H", Relation::H),
                ("D", Relation::D),
                ("J", Relation::J),
            ] {
                let _ = writeln!(
                    human,
                    "{name}-classes: {}",
                    sets(&g.class_members(relation))
                );
            }
            human.push_str(&eggbox_ascii(&s, &g));
            emit(
                format,
                human,
                serde_json::to_value(g.class_report()).expect("serializable"),
            );
        }
        Command::Kernel { file } => {
            let s = load(file, &limits)?;
            let r = kernel(&s);
            let mut human = String::new();
            let _ = writeln!(human, "K = {}", set(r.kernel.members()));
            let _ = writeln!(human, "E(K) = {}", set(&r.idempotents));
            let left: Vec<Vec<usize>> = r.min_left.iter().map(|h| h.members().to_vec()).collect();
            let right: Vec<Vec<usize>> = r.min_right.iter().map(|h| h.members().to_vec()).collect();
            let _ = writeln!(human, "minimal left ideals: {}", sets(&left));
            let _ = writeln!(human, "minimal right ideals: {}", sets(&right));
            for v in &r.verdicts {
                let _ = writeln!(
                    human,
                    "e = {}: Se minimal left ideal: {}, eSe group: {}, eS minimal right ideal: {}, K = SeS: {}",
                    v.idempotent,
                    yes(v.left_minimal),
                    yes(v.corner_is_group),
                    yes(v.right_minimal),
                    yes(v.kernel_is_ses)
                );
            }
            for v in &r.violations {
                let _ = writeln!(human, "violation: {v}");
            }
            emit(
                format,
                human,
                serde_json::to_value(&r).expect("serializable"),
            );
        }
        Command::Decompose {
            file,
            base_idempotent,
            emit_rms,
        } => {
            let s = load(file, &limits)?;
            let d = rees_decompose(&s, *base_idempotent)?;
            if let Some(path) = emit_rms {
                write_file(path, &write_rms(&d.rms))?;
            }
            let mut human = String::new();
            let _ = writeln!(human, "base idempotent: {}", d.base_idempotent);
            let _ = writeln!(human, "I = {}", set(&d.i_elements));
            let _ = writeln!(human, "G = {}", set(&d.group_elements));
            let _ = writeln!(human, "Lambda = {}", set(&d.lambda_elements));
            human.push_str("sandwich (rows Lambda, columns I):\n");
            for row in d.rms.sandwich() {
                let cells: Vec<String> = row
                    .iter()
                    .map(|&g| d.group_elements[g].to_string())
                    .collect();
                let _ = writeln!(human, "  {}", cells.join(" "));
            }
            let _ = writeln!(
                human,
                "round trip: {}",
                if d.round_trip_holds() { "ok" } else { "FAILED" }
            );
            let c = d.closed_form;
            let _ = writeln!(
                human,
                "closed-form inverse: {} agree, {} disagree, {} undefined",
                c.agree, c.disagree, c.undefined
            );
            let structured = json!({
                "base_idempotent": d.base_idempotent,
                "i_elements": d.i_elements,
                "group_elements": d.group_elements,
                "lambda_elements": d.lambda_elements,
                "group_table": d.rms.group().rows(),
                "sandwich": d.rms.sandwich(),
                "phi": d.phi.map(),
                "psi": d.psi.map(),
                "round_trip": d.round_trip_holds(),
                "closed_form": c,
            });
            emit(format, human, structured);
        }
        Command::Quotient { file, ideal } => {
            let s = load(file, &limits)?;
            let handle = SubsetHandle::new(&s, ideal.clone(), Role::TwoSidedIdeal)?;
            let (q, pi) = rees_quotient(&s, &handle)?;
            emit(
                format,
                write_sg(&q),
                json!({ "order": q.order(), "table": q.rows(), "projection": pi.map() }),
            );
        }
        Command::Subsemigroups { file, cap } => {
            let s = load(file, &limits)?;
            let subs = enumerate_subsemigroups(&s, cap.unwrap_or(limits.subsemigroup_cap))?;
            let members: Vec<Vec<usize>> = subs.iter().map(|t| t.members().to_vec()).collect();
            let mut human = format!("{} subsemigroups\n", members.len());
            for m in &members {
                let _ = writeln!(human, "{}", set(m));
            }
            emit(
                format,
                human,
                json!({ "count": members.len(), "subsemigroups": members }),
            );
        }
        Command::Gen { descriptor, output } => {
            let d: Descriptor = descriptor.parse()?;
            let instances = d.instances(&limits, false)?;
            match (&d, instances.as_slice()) {
                (
                    Descriptor::RandomRees {
                        i_size,
                        lambda_size,
                        group,
                        seed,
                    },
                    [_],
                ) if output.extension().is_some_and(|e| e == "rms") => {
                    let rms =
                        semikit::corpus::gen_random_rees(*i_size, *lambda_size, group, *seed)?;
                    write_file(output, &write_rms(&rms))?;
                }
                (Descriptor::Census { .. }, _) => {
                    corpus_out(format, output, &instances)?;
                    return Ok(ExitCode::SUCCESS);
                }
                (_, [inst]) => write_file(output, &write_sg(&inst.semigroup))?,
                _ => unreachable!("only census descriptors yield several instances"),
            }
            let s = &instances[0].semigroup;
            emit(
                format,
                format!("wrote {} (order {})\n", output.display(), s.order()),
                json!({
                    "path": output.display().to_string(),
                    "descriptor": d.to_string(),
                    "order": s.order(),
                    "fingerprint": s.fingerprint(),
                    "table": s.rows(),
                }),
            );
        }
        Command::Census {
            max_order,
            output,
            fold_opposites,
        } => {
            let c = census_with(*max_order, &limits, *fold_opposites)?;
            let instances: Vec<Instance> = c
                .semigroups
                .into_iter()
                .map(|semigroup| Instance {
                    descriptor: format!("census:{max_order}"),
                    seed: None,
                    semigroup,
                })
                .collect();
            let manifest = write_corpus(output, &instances).map_err(|source| CliError::Input {
                path: output.display().to_string(),
                source,
            })?;
            let mut human = String::new();
            for (k, count) in c.counts.iter().enumerate() {
                let _ = writeln!(
                    human,
                    "order {}: {count} semigroups ({} labeled tables)",
                    k + 1,
                    c.labeled[k]
                );
            }
            let _ = writeln!(
                human,
                "wrote {} files to {}",
                instances.len(),
                output.display()
            );
            let _ = writeln!(human, "fingerprint {}", manifest.corpus_fingerprint);
            emit(
                format,
                human,
                json!({
                    "counts": c.counts,
                    "labeled": c.labeled,
                    "fold_opposites": c.fold_opposites,
                    "manifest": manifest,
                }),
            );
        }
        Command::Verify { corpus, file } => {
            let instances = match (corpus, file) {
                (Some(dir), _) => read_corpus(dir, &limits).map_err(|source| CliError::Input {
                    path: dir.display().to_string(),
                    source,
                })?,
                (None, Some(path)) => vec![Instance {
                    descriptor: format!("file:{}", path.display()),
                    seed: None,
                    semigroup: load(path, &limits)?,
                }],
                (None, None) => unreachable!("clap requires one input"),
            };
            let report = verify_instances(&instances, &VerifyOptions::from(&limits));
            emit(
                format,
                verify_human(&report),
                serde_json::to_value(&report).expect("serializable"),
            );
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn corpus_out(format: Format, dir: &Path, instances: &[Instance]) -> Result<()> {
    let manifest = write_corpus(dir, instances).map_err(|source| CliError::Input {
        path: dir.display().to_string(),
        source,
    })?;
    emit(
        format,
        format!(
            "wrote {} files to {}\nfingerprint {}\n",
            instances.len(),
            dir.display(),
            manifest.corpus_fingerprint
        ),
        serde_json::to_value(&manifest).expect("serializable"),
    );
    Ok(())
}

fn report(format: Format, s: &FiniteSemigroup) {
    let idempotents = s.idempotents().members().to_vec();
    let center = s.center().members().to_vec();
    let c = s.cancellativity();
    let bands = band_predicates(s);
    let k = kernel(s);
    let regular = s.elements().all(|x| regular_witness(s, x).is_some());
    let g = greens_structure(s);
    let identity = s.is_monoid();
    let predicates = json!({
        "commutative": s.is_commutative(),
        "monoid": identity.is_some(),
        "group": s.is_group(),
        "left_cancellative": c.left,
        "right_cancellative": c.right,
        "band": bands.is_band,
        "rectangular_band": bands.is_rectangular_band,
        "rectangular_group": bands.is_rectangular_group,
        "regular": regular,
        "simple": is_simple(s),
        "completely_simple": is_completely_simple(s),
    });
    let mut human = String::new();
    if let Some(name) = s.name() {
        let _ = writeln!(human, "name: {name}");
    }
    let _ = writeln!(human, "order: {}", s.order());
    let _ = writeln!(human, "idempotents: {}", set(&idempotents));
    let _ = writeln!(human, "center: {}", set(&center));
    if let Some(e) = identity {
        let _ = writeln!(human, "identity: {e}");
    }
    let _ = writeln!(human, "kernel: {}", set(k.kernel.members()));
    let _ = writeln!(
        human,
        "classes: {} L, {} R, {} H, {} D",
        g.class_count(Relation::L),
        g.class_count(Relation::R),
        g.class_count(Relation::H),
        g.class_count(Relation::D)
    );
    for (key, value) in predicates.as_object().expect("object") {
        let _ = writeln!(
            human,
            "{}: {}",
            key.replace('_', " "),
            yes(value.as_bool() == Some(true))
        );
    }
    let structured = json!({
        "name": s.name(),
        "order": s.order(),
        "idempotents": idempotents,
        "center": center,
        "identity": identity,
        "kernel": k.kernel.members(),
        "predicates": predicates,
    });
    emit(format, human, structured);
}

fn verify_human(report: &VerificationReport) -> String {
    let mut out = String::new();
    for inst in &report.instances {
        for c in inst.failures() {
            let label = inst.name.as_deref().unwrap_or(&inst.descriptor);
            let detail = c.witness.as_ref().map_or("", |w| w.detail.as_str());
            let elements = c
                .witness
                .as_ref()
                .map_or(String::new(), |w| set(&w.elements));
            let _ = writeln!(
                out,
                "FAIL {label} {}: {detail} {elements}",
                c.check.as_str()
            );
        }
    }
    let sm = report.summary;
    let _ = writeln!(
        out,
        "{} instances, {} checks: {} passed, {} failed, {} skipped",
        sm.instances, sm.checks, sm.passed, sm.failed, sm.skipped
    );
    let _ = writeln!(out, "corpus fingerprint {}", report.corpus_fingerprint);
    let _ = writeln!(out, "rng {}", report.rng);
    out
}
