//! Generator parameter grammar. The `generate` subcommand takes `key=val`
//! arguments; the benchmark takes whole specs as `model:key=val,key=val`.

use granite_core::error::{Error, Result};
use granite_core::generators::{
    gen_barabasi_albert, gen_erdos_renyi, gen_hyperbolic, gen_planted_partition, gen_rmat,
    radius_for_expected_degree, HyperbolicParams,
};
use granite_core::graph::Graph;
use std::collections::BTreeMap;

pub const MODELS: &[&str] = &[
    "erdos-renyi",
    "planted-partition",
    "barabasi-albert",
    "rmat",
    "hyperbolic",
];

/// Parsed `key=val` pairs for one model, tracking which keys get used so
/// typos surface as errors instead of silently falling back to defaults.
pub struct Params {
    model: String,
    values: BTreeMap<String, String>,
}

impl Params {
    pub fn new(model: &str, pairs: &[(String, String)]) -> Result<Params> {
        let mut values = BTreeMap::new();
        for (k, v) in pairs {
            if values.insert(k.clone(), v.clone()).is_some() {
                return Err(Error::bad_param(format!("duplicate parameter '{k}'")));
            }
        }
        Ok(Params {
            model: model.to_string(),
            values,
        })
    }

    fn take(&mut self, key: &str) -> Option<String> {
        self.values.remove(key)
    }

    fn parse<T: std::str::FromStr>(&self, key: &str, raw: &str) -> Result<T> {
        raw.parse().map_err(|_| {
            Error::bad_param(format!(
                "parameter '{key}={raw}' of model '{}' is not a valid number",
                self.model
            ))
        })
    }

    pub fn u64(&mut self, key: &str) -> Result<u64> {
        match self.take(key) {
            Some(raw) => self.parse(key, &raw),
            None => Err(Error::bad_param(format!(
                "model '{}' needs parameter '{key}'",
                self.model
            ))),
        }
    }

    pub fn f64(&mut self, key: &str) -> Result<f64> {
        match self.take(key) {
            Some(raw) => self.parse(key, &raw),
            None => Err(Error::bad_param(format!(
                "model '{}' needs parameter '{key}'",
                self.model
            ))),
        }
    }

    pub fn f64_or(&mut self, key: &str, default: f64) -> Result<f64> {
        match self.take(key) {
            Some(raw) => self.parse(key, &raw),
            None => Ok(default),
        }
    }

    pub fn f64_opt(&mut self, key: &str) -> Result<Option<f64>> {
        match self.take(key) {
            Some(raw) => Ok(Some(self.parse(key, &raw)?)),
            None => Ok(None),
        }
    }

    pub fn finish(self) -> Result<()> {
        if let Some(key) = self.values.keys().next() {
            return Err(Error::bad_param(format!(
                "unknown parameter '{key}' for model '{}'",
                self.model
            )));
        }
        Ok(())
    }
}

/// Split one `key=val` token.
pub fn parse_pair(token: &str) -> Result<(String, String)> {
    match token.split_once('=') {
        Some((k, v)) if !k.is_empty() && !v.is_empty() => Ok((k.to_string(), v.to_string())),
        _ => Err(Error::bad_param(format!(
            "expected key=val, got '{token}'"
        ))),
    }
}

/// Split a benchmark spec `model:key=val,key=val` into model and pairs.
pub fn parse_spec(spec: &str) -> Result<(String, Vec<(String, String)>)> {
    let (model, rest) = match spec.split_once(':') {
        Some((m, r)) => (m, r),
        None => (spec, ""),
    };
    if model.is_empty() {
        return Err(Error::bad_param(format!("empty model in spec '{spec}'")));
    }
    let mut pairs = Vec::new();
    for token in rest.split(',').filter(|t| !t.is_empty()) {
        pairs.push(parse_pair(token)?);
    }
    Ok((model.to_string(), pairs))
}

/// Build the named model from `key=val` parameters.
pub fn build(model: &str, pairs: &[(String, String)], seed: u64) -> Result<Graph> {
    let mut p = Params::new(model, pairs)?;
    let g = match model {
        "erdos-renyi" | "er" => {
            let n = p.u64("n")?;
            let prob = p.f64("p")?;
            p.finish()?;
            gen_erdos_renyi(n, prob, seed)?
        }
        "planted-partition" | "pp" => {
            let blocks = p.u64("blocks")?;
            let block_size = p.u64("block-size")?;
            let p_in = p.f64("p-in")?;
            let p_out = p.f64("p-out")?;
            p.finish()?;
            gen_planted_partition(blocks, block_size, p_in, p_out, seed)?.0
        }
        "barabasi-albert" | "ba" => {
            let n = p.u64("n")?;
            let k = p.u64("k")?;
            p.finish()?;
            gen_barabasi_albert(n, k, seed)?
        }
        "rmat" => {
            let scale = p.u64("scale")?;
            let edge_factor = p.u64("edge-factor")?;
            let a = p.f64_or("a", 0.57)?;
            let b = p.f64_or("b", 0.19)?;
            let c = p.f64_or("c", 0.19)?;
            let d = p.f64_or("d", 0.05)?;
            p.finish()?;
            if scale > u32::MAX as u64 {
                return Err(Error::bad_param("scale is far too large"));
            }
            gen_rmat(scale as u32, edge_factor, a, b, c, d, seed)?.0
        }
        "hyperbolic" | "rhg" => {
            let n = p.u64("n")?;
            let alpha = p.f64_or("alpha", 1.0)?;
            let radius = p.f64_opt("radius")?;
            let avg_degree = p.f64_opt("avg-degree")?;
            p.finish()?;
            let radius = match (radius, avg_degree) {
                (Some(r), None) => r,
                (None, Some(target)) => radius_for_expected_degree(n, alpha, target, seed)?,
                (Some(_), Some(_)) => {
                    return Err(Error::bad_param(
                        "pass either 'radius' or 'avg-degree', not both",
                    ))
                }
                (None, None) => {
                    return Err(Error::bad_param(
                        "model 'hyperbolic' needs 'radius' or 'avg-degree'",
                    ))
                }
            };
            gen_hyperbolic(&HyperbolicParams {
                n,
                radius,
                alpha,
                seed,
            })?
        }
        other => {
            return Err(Error::bad_param(format!(
                "unknown model '{other}'; available: {}",
                MODELS.join(", ")
            )))
        }
    };
    Ok(g)
}
