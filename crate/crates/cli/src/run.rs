//! Evaluation of a code instance by one computation method.

use ccodes_core::codes::{CodeSpec, Family};
use ccodes_core::enumerator::{
    size_cosine_float, size_upper_bound, svt_sizes, svt_sizes_charsum_float, svt_weight_enumerator,
    vt_q_size, vt_size, vt_weight_count, vt_weight_enumerator_closed, weight_enumerator,
    weight_enumerator_charsum_float, FLOAT_MODULUS_LIMIT,
};
use ccodes_core::oracle::{brute_count_qary, brute_weight_enumerator, BINARY_K_CAP, TUPLE_CAP};
use ccodes_core::{WeightEnumerator, FLOAT_TOLERANCE};
use clap::ValueEnum;
use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use crate::grid::{Code, Instance};
use crate::record::OutputRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Method {
    Exact,
    Closed,
    Float,
    Brute,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Exact, Method::Closed, Method::Float, Method::Brute];

    pub fn name(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Closed => "closed",
            Method::Float => "float",
            Method::Brute => "brute",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Evaluation {
    pub method: Method,
    pub size: BigUint,
    pub enumerator: Option<WeightEnumerator>,
    pub deviation: Option<f64>,
}

impl Evaluation {
    fn exact(method: Method, w: WeightEnumerator) -> Self {
        Evaluation {
            method,
            size: w.size(),
            enumerator: Some(w),
            deviation: None,
        }
    }

    pub fn record(&self, inst: &Instance) -> OutputRecord {
        let family = inst.family.name();
        let mut rec = match &self.enumerator {
            Some(w) => OutputRecord::with_enumerator(family, &inst.params, self.method.name(), w),
            None => OutputRecord::new(family, &inst.params, self.method.name(), &self.size),
        };
        rec.deviation = self.deviation;
        rec
    }
}

fn float_ok(spec: &CodeSpec) -> bool {
    spec.modulus().to_u64().is_some_and(|n| n <= FLOAT_MODULUS_LIMIT)
}

fn qary_space(n: usize, q: u64) -> Option<u64> {
    let exp = u32::try_from(n).ok()?;
    q.checked_pow(exp)
}

/// Whether `method` exists for the instance at a tractable size.
pub fn applicable(inst: &Instance, method: Method) -> bool {
    match (&inst.code, method) {
        (Code::Blcc(_), Method::Exact) | (Code::Svt(_), Method::Exact) => true,
        (Code::Blcc(spec), Method::Closed) => spec.family() == Family::Vt,
        (Code::Blcc(spec), Method::Float) => float_ok(spec),
        (Code::Blcc(spec), Method::Brute) => spec.k() <= BINARY_K_CAP,
        (Code::Svt(_), Method::Closed) => false,
        (Code::Svt(spec), Method::Float) => float_ok(spec.base()),
        (Code::Svt(spec), Method::Brute) => spec.base().k() <= BINARY_K_CAP,
        (Code::QaryVt { .. }, Method::Closed) => true,
        (Code::QaryVt { n, q, .. }, Method::Brute) => qary_space(*n, *q).is_some_and(|s| s <= TUPLE_CAP),
        (Code::QaryVt { .. }, _) => false,
    }
}

pub fn evaluate(inst: &Instance, method: Method) -> ccodes_core::Result<Evaluation> {
    match &inst.code {
        Code::Blcc(spec) => match method {
            Method::Exact => Ok(Evaluation::exact(method, weight_enumerator(spec)?)),
            Method::Closed => Ok(Evaluation::exact(
                method,
                vt_weight_enumerator_closed(spec.k(), spec.residue().clone())?,
            )),
            Method::Float => {
                let (w, dev) = weight_enumerator_charsum_float(spec)?;
                let mut e = Evaluation::exact(method, w);
                e.deviation = Some(dev);
                Ok(e)
            }
            Method::Brute => Ok(Evaluation::exact(method, brute_weight_enumerator(spec)?)),
        },
        Code::Svt(spec) => match method {
            Method::Exact => Ok(Evaluation::exact(method, svt_weight_enumerator(spec)?)),
            Method::Float => {
                let (even, odd, dev) = svt_sizes_charsum_float(spec)?;
                Ok(Evaluation {
                    method,
                    size: if spec.parity() == 0 { even } else { odd },
                    enumerator: None,
                    deviation: Some(dev),
                })
            }
            Method::Brute => Ok(Evaluation::exact(
                method,
                brute_weight_enumerator(spec.base())?.filter_parity(spec.parity()),
            )),
            Method::Closed => unreachable!("closed form is not offered for svt"),
        },
        Code::QaryVt { n, b, q } => match method {
            Method::Closed => Ok(Evaluation {
                method,
                size: vt_q_size(*n, *b, *q)?,
                enumerator: None,
                deviation: None,
            }),
            Method::Brute => {
                let coeffs: Vec<BigInt> = (1..=*n as u64).map(BigInt::from).collect();
                Ok(Evaluation {
                    method,
                    size: brute_count_qary(&coeffs, &BigUint::from(*n as u64 + 1), &BigInt::from(*b), *q)?,
                    enumerator: None,
                    deviation: None,
                })
            }
            _ => unreachable!("only closed and brute are offered for q-ary vt"),
        },
    }
}

/// Result of cross-checking every selected method on one instance.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub methods: Vec<Method>,
    pub size: Option<BigUint>,
    pub max_deviation: Option<f64>,
    pub failures: Vec<String>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn max_dev(acc: &mut Option<f64>, d: f64) {
    *acc = Some(acc.map_or(d, |a| a.max(d)));
}

/// Checks that go beyond comparing method outputs.
fn side_checks(inst: &Instance, eval: &Evaluation, verdict: &mut Verdict) -> ccodes_core::Result<()> {
    match (&inst.code, eval.method) {
        (Code::Blcc(spec), Method::Float) => {
            let (cos_size, dev) = size_cosine_float(spec)?;
            max_dev(&mut verdict.max_deviation, dev);
            if cos_size != eval.size {
                verdict
                    .failures
                    .push(format!("cosine size {cos_size} != {}", eval.size));
            }
            let bound = size_upper_bound(spec)?;
            let size = eval.size.to_f64().unwrap_or(f64::INFINITY);
            if size > bound + FLOAT_TOLERANCE * bound.max(1.0) {
                verdict.failures.push(format!("size {size} exceeds bound {bound}"));
            }
        }
        (Code::Blcc(spec), Method::Closed) => {
            let n = spec.k();
            let b = spec.residue().clone();
            let w = eval.enumerator.as_ref().expect("closed form gives an enumerator");
            for t in 0..=n {
                let nt = vt_weight_count(n, b.clone(), t)?;
                if nt != w.count(t) {
                    verdict.failures.push(format!("N_{t} = {nt} != {}", w.count(t)));
                }
            }
            let total = vt_size(n, b)?;
            if total != eval.size {
                verdict.failures.push(format!("vt size {total} != {}", eval.size));
            }
        }
        (Code::Svt(spec), Method::Exact) => {
            let (even, odd) = svt_sizes(spec)?;
            let base = weight_enumerator(spec.base())?.size();
            if &even + &odd != base {
                verdict
                    .failures
                    .push(format!("even {even} + odd {odd} != base {base}"));
            }
        }
        _ => {}
    }
    Ok(())
}

pub fn verify(inst: &Instance, methods: &[Method]) -> Verdict {
    let mut verdict = Verdict {
        methods: Vec::new(),
        size: None,
        max_deviation: None,
        failures: Vec::new(),
    };
    let mut reference: Option<Evaluation> = None;
    for &method in methods {
        if !applicable(inst, method) {
            continue;
        }
        verdict.methods.push(method);
        let eval = match evaluate(inst, method) {
            Ok(e) => e,
            Err(e) => {
                verdict.failures.push(format!("{}: {e}", method.name()));
                continue;
            }
        };
        if let Some(d) = eval.deviation {
            max_dev(&mut verdict.max_deviation, d);
        }
        if let Err(e) = side_checks(inst, &eval, &mut verdict) {
            verdict.failures.push(format!("{}: {e}", method.name()));
        }
        match &reference {
            None => reference = Some(eval),
            Some(r) => {
                if r.size != eval.size {
                    verdict.failures.push(format!(
                        "{} size {} != {} size {}",
                        eval.method.name(),
                        eval.size,
                        r.method.name(),
                        r.size
                    ));
                }
                if let (Some(a), Some(b)) = (&r.enumerator, &eval.enumerator) {
                    if a != b {
                        verdict.failures.push(format!(
                            "{} enumerator differs from {}",
                            eval.method.name(),
                            r.method.name()
                        ));
                    }
                }
            }
        }
    }
    verdict.size = reference.map(|r| r.size);
    verdict
}
