//! One computed result and its plain / JSON / CSV renderings.

use std::collections::BTreeMap;

use ccodes_core::WeightEnumerator;
use clap::ValueEnum;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// Big integers are decimal strings so JSON consumers never overflow.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub method: String,
    pub size: String,
    pub enumerator: Option<Vec<String>>,
    pub deviation: Option<f64>,
}

impl OutputRecord {
    pub fn new(family: &str, params: &[(&'static str, String)], method: &str, size: &BigUint) -> Self {
        OutputRecord {
            family: family.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            method: method.to_string(),
            size: size.to_string(),
            enumerator: None,
            deviation: None,
        }
    }

    pub fn with_enumerator(family: &str, params: &[(&'static str, String)], method: &str, w: &WeightEnumerator) -> Self {
        let mut rec = Self::new(family, params, method, &w.size());
        rec.enumerator = Some(w.counts().iter().map(ToString::to_string).collect());
        rec
    }

    fn params_inline(&self, sep: &str) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(sep)
    }

    fn polynomial(&self) -> Option<String> {
        let counts = self.enumerator.as_ref()?;
        let parsed: Vec<BigUint> = counts.iter().map(|c| c.parse().expect("decimal")).collect();
        Some(WeightEnumerator::new(parsed).to_polynomial().to_string())
    }

    pub fn to_plain(&self) -> String {
        let mut line = format!(
            "{} {} [{}]  size={}",
            self.family,
            self.params_inline(" "),
            self.method,
            self.size
        );
        if let Some(p) = self.polynomial() {
            line.push_str(&format!("  W(z)={p}"));
        }
        if let Some(d) = self.deviation {
            line.push_str(&format!("  deviation={d:.3e}"));
        }
        line
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub const CSV_HEADER: &'static str = "family,params,method,size,enumerator,deviation";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.family,
            self.params_inline(";"),
            self.method,
            self.size,
            self.enumerator.as_ref().map(|e| e.join(" ")).unwrap_or_default(),
            self.deviation.map(|d| format!("{d:e}")).unwrap_or_default()
        )
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.to_plain(),
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vt4() -> OutputRecord {
        let w = WeightEnumerator::new([1u32, 0, 2, 0, 1].map(BigUint::from).to_vec());
        OutputRecord::with_enumerator("vt", &[("n", "4".into()), ("b", "0".into())], "exact", &w)
    }

    #[test]
    fn json_round_trip_keeps_size_consistent() {
        let rec = vt4();
        let back: OutputRecord = serde_json::from_str(&rec.to_json()).unwrap();
        assert_eq!(back, rec);
        let total: BigUint = back
            .enumerator
            .unwrap()
            .iter()
            .map(|c| c.parse::<BigUint>().unwrap())
            .sum();
        assert_eq!(total.to_string(), back.size);
    }

    #[test]
    fn renderings() {
        let rec = vt4();
        assert_eq!(rec.to_plain(), "vt b=0 n=4 [exact]  size=4  W(z)=1 + 2z^2 + z^4");
        assert_eq!(rec.to_csv(), "vt,b=0;n=4,exact,4,1 0 2 0 1,");
        assert_eq!(
            rec.to_json(),
            r#"{"family":"vt","params":{"b":"0","n":"4"},"method":"exact","size":"4","enumerator":["1","0","2","0","1"],"deviation":null}"#
        );
    }
}
