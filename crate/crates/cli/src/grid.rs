//! Expands command-line parameters into the list of code instances to
//! evaluate, in deterministic parameter order.

use ccodes_core::codes::{make_helberg, make_levenshtein, make_svt, make_vt, CodeSpec, ParityCodeSpec};
use ccodes_core::oracle::{random_specs, RandomSpecLimits};
use clap::{Args, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use crate::params::{parse_opt, usage, UsageError, ValueSet};

/// Refuse to expand `--b all` past this many residues.
const MAX_ALL_RESIDUES: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Vt,
    Levenshtein,
    Helberg,
    Svt,
    Blcc,
}

impl FamilyArg {
    pub fn name(self) -> &'static str {
        match self {
            FamilyArg::Vt => "vt",
            FamilyArg::Levenshtein => "levenshtein",
            FamilyArg::Helberg => "helberg",
            FamilyArg::Svt => "svt",
            FamilyArg::Blcc => "blcc",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CodeArgs {
    /// Code family.
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// VT length, or Levenshtein/SVT modulus (may use k, e.g. `k+1`).
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<String>,
    /// Tuple length for levenshtein, helberg and svt.
    #[arg(long)]
    pub k: Option<String>,
    /// Helberg step count.
    #[arg(long)]
    pub s: Option<String>,
    /// Residue; `all` for every residue of the modulus.
    #[arg(long)]
    pub b: Option<String>,
    /// SVT weight parity: 0, 1 or `both`.
    #[arg(long)]
    pub r: Option<String>,
    /// Alphabet size for q-ary VT sizes.
    #[arg(long)]
    pub q: Option<String>,
    /// BLCC coefficients, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    /// BLCC modulus.
    #[arg(long = "mod")]
    pub modulus: Option<String>,
}

#[derive(Debug, Clone)]
pub enum Code {
    Blcc(CodeSpec),
    Svt(ParityCodeSpec),
    QaryVt { n: usize, b: u64, q: u64 },
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub family: FamilyArg,
    pub params: Vec<(&'static str, String)>,
    pub code: Code,
}

/// Column names of [`Instance::params`] for a family, in emission order.
pub fn param_columns(family: FamilyArg, qary: bool) -> &'static [&'static str] {
    match family {
        FamilyArg::Vt if qary => &["n", "b", "q"],
        FamilyArg::Vt => &["n", "b"],
        FamilyArg::Levenshtein => &["k", "n", "b"],
        FamilyArg::Helberg => &["k", "s", "b"],
        FamilyArg::Svt => &["k", "n", "b", "r"],
        FamilyArg::Blcc => &["coeffs", "mod", "b"],
    }
}

fn core_err(e: ccodes_core::Error) -> UsageError {
    usage(e.to_string())
}

fn required(v: Option<ValueSet>, flag: &str, family: FamilyArg) -> Result<ValueSet, UsageError> {
    v.ok_or_else(|| usage(format!("--{flag} is required for family {}", family.name())))
}

fn residues(b: &Option<ValueSet>, k: Option<u64>, modulus: &BigUint) -> Result<Vec<u64>, UsageError> {
    let set = b.clone().unwrap_or(ValueSet::All);
    let upto = match set {
        ValueSet::All => {
            let m = modulus
                .to_u64()
                .filter(|&m| m <= MAX_ALL_RESIDUES)
                .ok_or_else(|| usage(format!("--b all over modulus {modulus} is too many residues")))?;
            Some(m)
        }
        _ => None,
    };
    set.values(k, upto)
}

fn to_usize(v: u64, name: &str) -> Result<usize, UsageError> {
    usize::try_from(v).map_err(|_| usage(format!("--{name} too large")))
}

pub fn parse_coeffs(raw: &str) -> Result<Vec<BigInt>, UsageError> {
    if raw.trim().is_empty() {
        return Ok(Vec::new());
    }
    raw.split(',')
        .map(|c| {
            c.trim()
                .parse::<BigInt>()
                .map_err(|_| usage(format!("invalid coefficient `{c}`")))
        })
        .collect()
}

/// Flags not used by `family` are rejected.
fn check_unused(args: &CodeArgs) -> Result<(), UsageError> {
    let used: &[&str] = match args.family {
        FamilyArg::Vt => &["n", "b", "q"],
        FamilyArg::Levenshtein => &["k", "n", "b"],
        FamilyArg::Helberg => &["k", "s", "b"],
        FamilyArg::Svt => &["k", "n", "b", "r"],
        FamilyArg::Blcc => &["coeffs", "mod", "b"],
    };
    let given = [
        ("n", args.n.is_some()),
        ("k", args.k.is_some()),
        ("s", args.s.is_some()),
        ("b", args.b.is_some()),
        ("r", args.r.is_some()),
        ("q", args.q.is_some()),
        ("coeffs", args.coeffs.is_some()),
        ("mod", args.modulus.is_some()),
    ];
    for (flag, present) in given {
        if present && !used.contains(&flag) {
            return Err(usage(format!(
                "--{flag} is not a parameter of family {}",
                args.family.name()
            )));
        }
    }
    Ok(())
}

pub fn expand(args: &CodeArgs) -> Result<Vec<Instance>, UsageError> {
    check_unused(args)?;
    let family = args.family;
    let n = parse_opt(&args.n)?;
    let k = parse_opt(&args.k)?;
    let s = parse_opt(&args.s)?;
    let b = parse_opt(&args.b)?;
    let r = parse_opt(&args.r)?;
    let q = parse_opt(&args.q)?;
    let mut out = Vec::new();

    match family {
        FamilyArg::Vt => {
            for nv in required(n, "n", family)?.values(None, None)? {
                let len = to_usize(nv, "n")?;
                for bv in residues(&b, None, &BigUint::from(nv + 1))? {
                    match &q {
                        None => {
                            let spec = make_vt(len, bv).map_err(core_err)?;
                            out.push(Instance {
                                family,
                                params: vec![("n", nv.to_string()), ("b", bv.to_string())],
                                code: Code::Blcc(spec),
                            });
                        }
                        Some(qs) => {
                            make_vt(len, bv).map_err(core_err)?;
                            for qv in qs.values(None, None)? {
                                if qv == 0 {
                                    return Err(usage("--q must be positive"));
                                }
                                out.push(Instance {
                                    family,
                                    params: vec![
                                        ("n", nv.to_string()),
                                        ("b", bv.to_string()),
                                        ("q", qv.to_string()),
                                    ],
                                    code: Code::QaryVt { n: len, b: bv, q: qv },
                                });
                            }
                        }
                    }
                }
            }
        }
        FamilyArg::Levenshtein | FamilyArg::Svt => {
            let ks = required(k, "k", family)?.values(None, None)?;
            let ns = required(n, "n", family)?;
            let rs = r.unwrap_or(ValueSet::Both).values(None, None)?;
            for kv in ks {
                let len = to_usize(kv, "k")?;
                for nv in ns.values(Some(kv), None)? {
                    for bv in residues(&b, Some(kv), &BigUint::from(nv))? {
                        let base_params = vec![("k", kv.to_string()), ("n", nv.to_string()), ("b", bv.to_string())];
                        if family == FamilyArg::Levenshtein {
                            let spec = make_levenshtein(len, nv, bv).map_err(core_err)?;
                            out.push(Instance {
                                family,
                                params: base_params,
                                code: Code::Blcc(spec),
                            });
                            continue;
                        }
                        for &rv in &rs {
                            let parity = u32::try_from(rv).map_err(|_| usage("--r must be 0, 1 or both"))?;
                            let spec = make_svt(len, nv, bv, parity).map_err(core_err)?;
                            let mut params = base_params.clone();
                            params.push(("r", rv.to_string()));
                            out.push(Instance {
                                family,
                                params,
                                code: Code::Svt(spec),
                            });
                        }
                    }
                }
            }
        }
        FamilyArg::Helberg => {
            let ks = required(k, "k", family)?.values(None, None)?;
            let ss = required(s, "s", family)?;
            for kv in ks {
                let len = to_usize(kv, "k")?;
                for sv in ss.values(Some(kv), None)? {
                    let steps = u32::try_from(sv).map_err(|_| usage("--s too large"))?;
                    let template = make_helberg(len, steps, 0u32).map_err(core_err)?;
                    for bv in residues(&b, Some(kv), template.modulus())? {
                        let spec = make_helberg(len, steps, bv).map_err(core_err)?;
                        out.push(Instance {
                            family,
                            params: vec![("k", kv.to_string()), ("s", sv.to_string()), ("b", bv.to_string())],
                            code: Code::Blcc(spec),
                        });
                    }
                }
            }
        }
        FamilyArg::Blcc => {
            let coeffs = parse_coeffs(
                args.coeffs
                    .as_deref()
                    .ok_or_else(|| usage("--coeffs is required for family blcc"))?,
            )?;
            let modulus: BigUint = args
                .modulus
                .as_deref()
                .ok_or_else(|| usage("--mod is required for family blcc"))?
                .trim()
                .parse()
                .map_err(|_| usage("invalid --mod"))?;
            let coeff_text = coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
            for bv in residues(&b, None, &modulus)? {
                let spec = CodeSpec::new(coeffs.clone(), modulus.clone(), bv).map_err(core_err)?;
                out.push(Instance {
                    family,
                    params: vec![("coeffs", coeff_text.clone()), ("mod", modulus.to_string()), ("b", bv.to_string())],
                    code: Code::Blcc(spec),
                });
            }
        }
    }
    Ok(out)
}

/// Seeded random BLCC instances.
pub fn random_instances(count: usize, seed: u64) -> Vec<Instance> {
    random_specs(count, seed, RandomSpecLimits::default())
        .into_iter()
        .map(|spec| Instance {
            family: FamilyArg::Blcc,
            params: vec![
                (
                    "coeffs",
                    spec.coefficients().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
                ),
                ("mod", spec.modulus().to_string()),
                ("b", spec.residue().to_string()),
            ],
            code: Code::Blcc(spec),
        })
        .collect()
}
