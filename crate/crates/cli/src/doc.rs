//! Output documents: an ordered list of fields rendered either as
//! `key: value` text or as one JSON object.

use serde_json::{Map, Value};

pub enum Field {
    /// Printed as-is in text mode, as a string or number in JSON.
    Scalar(Value),
    /// Multi-line text block (matrix or polygon text format).
    Block { text: String, json: Value },
    /// Nested document.
    Doc(Doc),
    /// Sequence of nested documents.
    List(Vec<Doc>),
}

#[derive(Default)]
pub struct Doc {
    fields: Vec<(String, Field)>,
}

impl Doc {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: &str, field: Field) -> &mut Self {
        self.fields.push((key.to_string(), field));
        self
    }

    pub fn scalar(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.push(key, Field::Scalar(value.into()))
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (k, f) in &self.fields {
            let v = match f {
                Field::Scalar(v) => v.clone(),
                Field::Block { json, .. } => json.clone(),
                Field::Doc(d) => d.to_json(),
                Field::List(ds) => Value::Array(ds.iter().map(Doc::to_json).collect()),
            };
            map.insert(k.clone(), v);
        }
        Value::Object(map)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out, 0);
        out
    }

    fn write_text(&self, out: &mut String, indent: usize) {
        let pad = " ".repeat(indent);
        for (k, f) in &self.fields {
            match f {
                Field::Scalar(v) => out.push_str(&format!("{pad}{k}: {}\n", scalar_text(v))),
                Field::Block { text, .. } => {
                    out.push_str(&format!("{pad}{k}:\n"));
                    for line in text.lines() {
                        out.push_str(&format!("{pad}  {line}\n"));
                    }
                }
                Field::Doc(d) => {
                    out.push_str(&format!("{pad}{k}:\n"));
                    d.write_text(out, indent + 2);
                }
                Field::List(ds) => {
                    out.push_str(&format!("{pad}{k}:\n"));
                    for d in ds {
                        out.push_str(&format!("{pad}  -\n"));
                        d.write_text(out, indent + 4);
                    }
                }
            }
        }
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar_text).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}
