//! Deterministic text output: floats at 17 significant digits (round-trip
//! exact for f64), hand-assembled JSON so the byte stream is fully pinned,
//! and CSV with '.' decimals and '\n' line endings.

/// One float, 17 significant digits, exponent form. `-0.0` is normalized so
/// identical values always produce identical bytes.
pub fn float(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// JSON string literal with the required escapes.
pub fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// `{"error":"..."}` for stderr.
pub fn json_error(message: &str) -> String {
    format!("{{\"error\":{}}}", json_string(message))
}

/// A JSON value assembled as raw text.
pub enum Json {
    Float(f64),
    Int(u64),
    Str(&'static str),
    Null,
    Array(Vec<Json>),
    Object(Vec<(&'static str, Json)>),
}

impl Json {
    pub fn render(&self) -> String {
        match self {
            Json::Float(x) => float(*x),
            Json::Int(n) => n.to_string(),
            Json::Str(s) => json_string(s),
            Json::Null => "null".to_string(),
            Json::Array(items) => {
                let inner: Vec<String> = items.iter().map(Json::render).collect();
                format!("[{}]", inner.join(","))
            }
            Json::Object(fields) => {
                let inner: Vec<String> = fields
                    .iter()
                    .map(|(k, v)| format!("{}:{}", json_string(k), v.render()))
                    .collect();
                format!("{{{}}}", inner.join(","))
            }
        }
    }
}

/// Rows of floats under a fixed header, rendered as CSV (header always
/// present) or as a JSON array of objects. An optional per-row string column
/// (e.g. the regime name) is spliced in at `tag_column`.
pub struct Table {
    pub header: &'static [&'static str],
    pub tag_column: Option<usize>,
    pub rows: Vec<(Option<&'static str>, Vec<f64>)>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for (tag, values) in &self.rows {
            let mut fields: Vec<String> = Vec::with_capacity(self.header.len());
            let mut vi = 0;
            for col in 0..self.header.len() {
                if Some(col) == self.tag_column {
                    fields.push(tag.unwrap_or("").to_string());
                } else {
                    fields.push(float(values[vi]));
                    vi += 1;
                }
            }
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut rows_json = Vec::with_capacity(self.rows.len());
        for (tag, values) in &self.rows {
            let mut fields = Vec::with_capacity(self.header.len());
            let mut vi = 0;
            for (col, name) in self.header.iter().enumerate() {
                if Some(col) == self.tag_column {
                    fields.push((*name, Json::Str(tag.unwrap_or(""))));
                } else {
                    fields.push((*name, Json::Float(values[vi])));
                    vi += 1;
                }
            }
            rows_json.push(Json::Object(fields));
        }
        let mut out = Json::Array(rows_json).render();
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip() {
        for x in [0.2, -1.0 / 3.0, 1e-300, 98765.4321, 0.0, -0.0] {
            let printed = float(x);
            let back: f64 = printed.parse().unwrap();
            assert_eq!(back, x, "{printed}");
        }
        assert_eq!(float(-0.0), float(0.0));
    }

    #[test]
    fn json_strings_escape() {
        assert_eq!(json_string("a\"b\\c"), "\"a\\\"b\\\\c\"");
        assert_eq!(json_string("line\nbreak"), "\"line\\nbreak\"");
    }
}
