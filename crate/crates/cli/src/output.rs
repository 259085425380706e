//! Text, CSV and JSON rendering. JSON integers are decimal strings.

use clap::ValueEnum;
use invkl::IntPoly;
use num_bigint::BigInt;
use serde_json::{json, Value as Json};

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub struct Row {
    n: usize,
    invariant: &'static str,
    method: &'static str,
    poly: IntPoly,
    b: Option<Vec<BigInt>>,
}

impl Row {
    pub fn new(n: usize, invariant: &'static str, method: &'static str, poly: IntPoly) -> Self {
        Row {
            n,
            invariant,
            method,
            poly,
            b: None,
        }
    }

    pub fn with_b(mut self, b: Vec<BigInt>) -> Self {
        self.b = Some(b);
        self
    }

    fn json(&self) -> Json {
        let mut obj = json!({
            "n": self.n,
            "invariant": self.invariant,
            "method": self.method,
            "coefficients": strings(self.poly.coeffs()),
        });
        if let Some(b) = &self.b {
            obj["b"] = json!(strings(b));
        }
        obj
    }
}

pub enum Value {
    Poly(IntPoly),
    Int(BigInt),
}

fn strings(xs: &[BigInt]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn list(xs: &[BigInt]) -> String {
    format!("[{}]", strings(xs).join(","))
}

/// `single` renders a bare object or line rather than a table of sizes.
pub fn render_rows(rows: &[Row], format: Format, single: bool) -> String {
    let mut lines = Vec::new();
    match format {
        Format::Text => {
            for r in rows {
                let b = r.b.as_deref().map(|b| format!(" b={}", list(b))).unwrap_or_default();
                if single {
                    lines.push(format!("{}{b}", r.poly));
                } else {
                    lines.push(format!("n={} {}{b}", r.n, r.poly));
                }
            }
        }
        Format::Csv => {
            lines.push("n,invariant,method,series,index,value".to_string());
            for r in rows {
                let series = std::iter::once(("coefficient", r.poly.coeffs()))
                    .chain(r.b.as_deref().map(|b| ("b", b)));
                for (name, values) in series {
                    for (i, v) in values.iter().enumerate() {
                        lines.push(format!("{},{},{},{name},{i},{v}", r.n, r.invariant, r.method));
                    }
                }
            }
        }
        Format::Json => {
            let doc = if single {
                rows[0].json()
            } else {
                Json::Array(rows.iter().map(Row::json).collect())
            };
            lines.push(serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    lines.join("\n") + "\n"
}

pub fn render_graph_value(invariant: &str, value: &Value, format: Format) -> String {
    let lines = match (format, value) {
        (Format::Text, Value::Poly(p)) => vec![p.to_string()],
        (Format::Text, Value::Int(x)) => vec![x.to_string()],
        (Format::Csv, Value::Poly(p)) => std::iter::once("invariant,index,value".to_string())
            .chain(p.coeffs().iter().enumerate().map(|(i, c)| format!("{invariant},{i},{c}")))
            .collect(),
        (Format::Csv, Value::Int(x)) => vec!["invariant,value".to_string(), format!("{invariant},{x}")],
        (Format::Json, v) => {
            let doc = match v {
                Value::Poly(p) => json!({"invariant": invariant, "coefficients": strings(p.coeffs())}),
                Value::Int(x) => json!({"invariant": invariant, "value": x.to_string()}),
            };
            vec![serde_json::to_string_pretty(&doc).unwrap()]
        }
    };
    lines.join("\n") + "\n"
}
