use toml::{Table, Value};

/// Command output kept in two renderings: plain lines and a TOML table.
#[derive(Default, Debug)]
pub struct Report {
    lines: Vec<String>,
    data: Table,
}

impl Report {
    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.data.insert(key.to_string(), value.into());
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = self.lines.join("\n");
        out.push('\n');
        out
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(&self.data).expect("tables always serialize")
    }
}

pub fn strings<I: IntoIterator<Item = String>>(items: I) -> Value {
    Value::Array(items.into_iter().map(Value::String).collect())
}

pub fn table<'a, I: IntoIterator<Item = (&'a str, Value)>>(items: I) -> Value {
    Value::Table(items.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}
