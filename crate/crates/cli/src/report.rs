use std::str::FromStr;

use serde_json::{Map, Number, Value};

use cantor_series::{BigInt, BigRational};

/// Ordered key/value report rendered either as JSON or as plain lines.
#[derive(Debug, Default)]
pub(crate) struct Report {
    fields: Map<String, Value>,
}

impl Report {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn put(&mut self, key: &str, value: Value) {
        self.fields.insert(key.to_string(), value);
    }

    pub(crate) fn str(&mut self, key: &str, value: impl Into<String>) {
        self.put(key, Value::String(value.into()));
    }

    pub(crate) fn into_value(self) -> Value {
        Value::Object(self.fields)
    }

    pub(crate) fn render(self, json: bool) -> String {
        if json {
            let mut text = serde_json::to_string(&self.into_value()).expect("reports serialise");
            text.push('\n');
            return text;
        }
        let mut lines = String::new();
        for (key, value) in &self.fields {
            flatten(key, value, &mut lines);
        }
        lines
    }
}

/// `key: value` lines; nested objects and arrays of objects use dotted keys.
fn flatten(key: &str, value: &Value, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&format!("{key}.{k}"), v, out);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object() || v.is_array()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{key}.{i}"), v, out);
            }
        }
        Value::Array(items) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{key}: {}\n", joined.join(",")));
        }
        other => out.push_str(&format!("{key}: {}\n", scalar(other))),
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => "none".to_string(),
        other => other.to_string(),
    }
}

/// Arbitrary-size integer as a JSON number.
pub(crate) fn int(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

pub(crate) fn int_list(ns: &[BigInt]) -> Value {
    Value::Array(ns.iter().map(int).collect())
}

/// Rationals travel as `"num/den"` strings.
pub(crate) fn rat(x: &BigRational) -> Value {
    Value::String(cantor_series::scalar::format_rational(x))
}
