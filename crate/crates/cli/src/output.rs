//! Rendering rows as TSV with a `#` header line, or as a JSON array of objects.

use serde::Serialize;

use crate::Format;

pub trait Row: Serialize {
    const HEADER: &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

pub struct Emit {
    pub format: Format,
}

impl Emit {
    pub fn render<R: Row>(&self, rows: &[R]) -> Result<String, String> {
        match self.format {
            Format::Tsv => {
                let mut out = format!("# {}\n", R::HEADER.join("\t"));
                for r in rows {
                    out.push_str(&r.cells().join("\t"));
                    out.push('\n');
                }
                Ok(out)
            }
            Format::Json => serde_json::to_string_pretty(rows).map(|s| s + "\n").map_err(|e| e.to_string()),
        }
    }
}
