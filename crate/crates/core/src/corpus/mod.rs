//! Instance supply: named generators, seeded random Rees matrix and
//! transformation semigroups, the small-order census, and corpus files.

mod census;
mod store;
mod verify;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::fixtures;
use crate::limits::Limits;
use crate::semigroup::FiniteSemigroup;
use crate::simple::{rees_construct, ReesMatrixSemigroup};

pub use census::{canonical_form, census, census_with, enumerate_tables, Census};
pub use store::{read_corpus, write_corpus, Manifest, ManifestEntry};
pub use verify::{
    verify_instances, verify_semigroup, verify_suite, CheckName, CheckResult, CheckStatus,
    InstanceReport, Summary, VerificationReport, VerifyOptions, Witness,
};

/// Identifier of the pseudorandom stream behind every seeded generator.
pub const RNG_ALGORITHM: &str = "chacha8/seed_from_u64";

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Named standard semigroups.
pub fn gen_standard(name: &str, params: &[usize]) -> Result<FiniteSemigroup> {
    let unknown = || Error::UnknownGenerator(format!("{name}{params:?}"));
    let positive = |i: usize| {
        params
            .get(i)
            .copied()
            .filter(|&k| k > 0)
            .ok_or_else(unknown)
    };
    let s = match name {
        "cyclic" => fixtures::cyclic(positive(0)?),
        "sym3" => fixtures::sym3(),
        "left_zero" => fixtures::left_zero(positive(0)?),
        "right_zero" => fixtures::right_zero(positive(0)?),
        "rect_band" => fixtures::rect_band(positive(0)?, positive(1)?),
        "t2" => fixtures::t2(),
        "paper_band" => fixtures::paper_band(),
        "trivial" => fixtures::trivial(),
        "klein" => fixtures::klein(),
        _ => return Err(unknown()),
    };
    Ok(s)
}

/// Group by short name: `trivial`, `zK` (cyclic of order K), `klein`
/// (`z2xz2`), `s3` (`sym3`).
pub fn group_by_name(name: &str) -> Result<FiniteSemigroup> {
    match name {
        "trivial" => Ok(fixtures::trivial()),
        "klein" | "z2xz2" => Ok(fixtures::klein()),
        "s3" | "sym3" => Ok(fixtures::sym3()),
        _ => name
            .strip_prefix('z')
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|&k| k > 0)
            .map(fixtures::cyclic)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string())),
    }
}

/// `M(I, G, Λ, P)` with sandwich entries drawn from the seeded stream in
/// row-major order over `Λ x I`.
pub fn gen_random_rees(
    i_size: usize,
    lambda_size: usize,
    group_name: &str,
    seed: u64,
) -> Result<ReesMatrixSemigroup> {
    let group = group_by_name(group_name)?;
    let g = group.order();
    let mut rng = rng(seed);
    let sandwich = (0..lambda_size)
        .map(|_| (0..i_size).map(|_| rng.gen_range(0..g)).collect())
        .collect();
    rees_construct(i_size, lambda_size, group, sandwich)
}

/// The semigroup generated by `generators` random self-maps of
/// `{0..degree}`, composed right to left. Elements are numbered in
/// breadth-first discovery order.
pub fn gen_transformation(
    degree: usize,
    generators: usize,
    seed: u64,
    limits: &Limits,
) -> Result<FiniteSemigroup> {
    if degree == 0 || generators == 0 {
        return Err(Error::EmptyGenerators);
    }
    let mut rng = rng(seed);
    let gens: Vec<Vec<u16>> = (0..generators)
        .map(|_| {
            (0..degree)
                .map(|_| rng.gen_range(0..degree) as u16)
                .collect()
        })
        .collect();
    let compose = |f: &[u16], g: &[u16]| -> Vec<u16> { g.iter().map(|&p| f[p as usize]).collect() };
    let mut index: HashMap<Vec<u16>, usize> = HashMap::new();
    let mut elements: Vec<Vec<u16>> = Vec::new();
    for g in &gens {
        if !index.contains_key(g) {
            index.insert(g.clone(), elements.len());
            elements.push(g.clone());
        }
    }
    let mut cursor = 0;
    while cursor < elements.len() {
        for g in &gens {
            let p = compose(&elements[cursor], g);
            if !index.contains_key(&p) {
                if elements.len() >= limits.max_order {
                    return Err(Error::OrderTooLarge {
                        order: elements.len() + 1,
                        max: limits.max_order,
                    });
                }
                index.insert(p.clone(), elements.len());
                elements.push(p);
            }
        }
        cursor += 1;
    }
    let n = elements.len();
    let mut flat = Vec::with_capacity(n * n);
    for f in &elements {
        for g in &elements {
            flat.push(index[&compose(f, g)]);
        }
    }
    Ok(FiniteSemigroup::from_flat_with_limits(n, flat, limits)?
        .with_name(format!("transform-{degree}-{generators}-{seed}")))
}

/// One generator entry of a corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Descriptor {
    Standard {
        name: String,
        params: Vec<usize>,
    },
    RandomRees {
        i_size: usize,
        lambda_size: usize,
        group: String,
        seed: u64,
    },
    Transformation {
        degree: usize,
        generators: usize,
        seed: u64,
    },
    Census {
        max_order: usize,
    },
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Standard { name, params } if params.is_empty() => write!(f, "{name}"),
            Descriptor::Standard { name, params } if name == "rect_band" => {
                write!(f, "{name}:{}x{}", params[0], params[1])
            }
            Descriptor::Standard { name, params } => {
                let p: Vec<String> = params.iter().map(|p| p.to_string()).collect();
                write!(f, "{name}:{}", p.join(":"))
            }
            Descriptor::RandomRees {
                i_size,
                lambda_size,
                group,
                seed,
            } => write!(f, "rees:{i_size}x{lambda_size}:{group}:{seed}"),
            Descriptor::Transformation {
                degree,
                generators,
                seed,
            } => write!(f, "transform:{degree}:{generators}:{seed}"),
            Descriptor::Census { max_order } => write!(f, "census:{max_order}"),
        }
    }
}

fn parse_dims(s: &str, whole: &str) -> Result<(usize, usize)> {
    let bad = || Error::UnknownGenerator(whole.to_string());
    let (a, b) = s.split_once('x').ok_or_else(bad)?;
    Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
}

/// Forms: `cyclic:K`, `zK`, `sym3`, `left_zero:K`, `right_zero:K`,
/// `rect_band:AxB`, `t2`, `paper_band`, `trivial`, `klein`,
/// `rees:IxL:GROUP:SEED`, `transform:DEGREE:GENS:SEED`, `census:N`.
impl FromStr for Descriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownGenerator(s.to_string());
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |i: usize| -> Result<usize> {
            parts.get(i).and_then(|p| p.parse().ok()).ok_or_else(bad)
        };
        let seed =
            |i: usize| -> Result<u64> { parts.get(i).and_then(|p| p.parse().ok()).ok_or_else(bad) };
        let descriptor = match parts[0] {
            "rees" if parts.len() == 4 => {
                let (i_size, lambda_size) = parse_dims(parts[1], s)?;
                group_by_name(parts[2])?;
                Descriptor::RandomRees {
                    i_size,
                    lambda_size,
                    group: parts[2].to_string(),
                    seed: seed(3)?,
                }
            }
            "transform" if parts.len() == 4 => Descriptor::Transformation {
                degree: num(1)?,
                generators: num(2)?,
                seed: seed(3)?,
            },
            "census" if parts.len() == 2 => Descriptor::Census { max_order: num(1)? },
            "rect_band" if parts.len() == 2 => {
                let (a, b) = parse_dims(parts[1], s)?;
                Descriptor::Standard {
                    name: "rect_band".into(),
                    params: vec![a, b],
                }
            }
            name @ ("cyclic" | "left_zero" | "right_zero") if parts.len() == 2 => {
                Descriptor::Standard {
                    name: name.into(),
                    params: vec![num(1)?],
                }
            }
            name @ ("sym3" | "t2" | "paper_band" | "trivial" | "klein") if parts.len() == 1 => {
                Descriptor::Standard {
                    name: name.into(),
                    params: vec![],
                }
            }
            z if parts.len() == 1 && z.starts_with('z') => {
                let k = z[1..].parse().map_err(|_| bad())?;
                Descriptor::Standard {
                    name: "cyclic".into(),
                    params: vec![k],
                }
            }
            _ => return Err(bad()),
        };
        if let Descriptor::Standard { name, params } = &descriptor {
            gen_standard(name, params)?;
        }
        Ok(descriptor)
    }
}

/// A generated semigroup with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub descriptor: String,
    pub seed: Option<u64>,
    pub semigroup: FiniteSemigroup,
}

impl Descriptor {
    pub fn seed(&self) -> Option<u64> {
        match self {
            Descriptor::RandomRees { seed, .. } | Descriptor::Transformation { seed, .. } => {
                Some(*seed)
            }
            _ => None,
        }
    }

    pub fn instances(&self, limits: &Limits, fold_opposites: bool) -> Result<Vec<Instance>> {
        let one = |semigroup: FiniteSemigroup| {
            vec![Instance {
                descriptor: self.to_string(),
                seed: self.seed(),
                semigroup,
            }]
        };
        Ok(match self {
            Descriptor::Standard { name, params } => one(gen_standard(name, params)?),
            Descriptor::RandomRees {
                i_size,
                lambda_size,
                group,
                seed,
            } => {
                let rms = gen_random_rees(*i_size, *lambda_size, group, *seed)?;
                one(rms
                    .realized()
                    .clone()
                    .with_name(format!("rees-{i_size}x{lambda_size}-{group}-{seed}")))
            }
            Descriptor::Transformation {
                degree,
                generators,
                seed,
            } => one(gen_transformation(*degree, *generators, *seed, limits)?),
            Descriptor::Census { max_order } => census_with(*max_order, limits, fold_opposites)?
                .semigroups
                .into_iter()
                .map(|semigroup| Instance {
                    descriptor: self.to_string(),
                    seed: None,
                    semigroup,
                })
                .collect(),
        })
    }
}

/// What to generate, and within which limits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub generators: Vec<Descriptor>,
    pub limits: Limits,
    /// Identify each census semigroup with its opposite.
    pub fold_opposites: bool,
}

impl CorpusSpec {
    pub fn new(generators: Vec<Descriptor>) -> Self {
        CorpusSpec {
            generators,
            limits: Limits::default(),
            fold_opposites: false,
        }
    }

    pub fn resolve(&self) -> Result<Vec<Instance>> {
        let mut out = Vec::new();
        for d in &self.generators {
            out.extend(d.instances(&self.limits, self.fold_opposites)?);
        }
        Ok(out)
    }
}

/// SHA-256 over the member fingerprints in order.
pub fn corpus_fingerprint<'a>(semigroups: impl IntoIterator<Item = &'a FiniteSemigroup>) -> String {
    let mut h = Sha256::new();
    for s in semigroups {
        h.update(s.fingerprint().as_bytes());
        h.update(b"\n");
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}
