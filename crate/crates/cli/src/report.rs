//! Reports: ordered fields rendered as `key: value` lines or one JSON object.

use serde_json::{Map, Value};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    fields: Vec<(String, Value)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.set("command", command);
        r
    }

    pub fn set<V: Into<Value>>(&mut self, key: &str, v: V) -> &mut Self {
        let v = v.into();
        match self.fields.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 = v,
            None => self.fields.push((key.to_string(), v)),
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> Value {
        Value::Object(self.fields.iter().cloned().collect::<Map<_, _>>())
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
            s.push('\n');
            return s;
        }
        let mut out = String::new();
        for (k, v) in &self.fields {
            human(&mut out, k, v, 0);
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => Some(format!(
            "[{}]",
            a.iter().map(|x| scalar(x).unwrap_or_default()).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

fn human(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    out.push_str(&format!("{pad}{key}:\n"));
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                human(out, k, x, depth + 1);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                human(out, &format!("[{i}]"), x, depth + 1);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn renders_nested_values() {
        let mut r = Report::new("classify");
        r.set("class", "T4").set("arcs", json!([["0", "inf"]])).set("info", json!({"b": 1, "a": [1, 2]}));
        let h = r.render(false);
        assert_eq!(
            h,
            "command: classify\nclass: T4\narcs:\n  [0]: [0, inf]\ninfo:\n  a: [1, 2]\n  b: 1\n"
        );
        let j: Value = serde_json::from_str(&r.render(true)).unwrap();
        assert_eq!(j["class"], "T4");
    }

    #[test]
    fn set_replaces_in_place() {
        let mut r = Report::new("x");
        r.set("a", 1).set("b", 2).set("a", 3);
        assert_eq!(r.render(false), "command: x\na: 3\nb: 2\n");
    }
}
