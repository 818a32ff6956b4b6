//! Report assembly and emission.
//!
//! Every command produces a [`Report`]: a structured JSON payload plus an
//! ordered scalar list and optional tables that drive the CSV and markdown
//! renderings. JSON and CSV carry identical numeric content; all three
//! formats are byte-deterministic for fixed inputs and flags.

use serde_json::{json, Map, Value};

pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub struct Report {
    pub scalars: Vec<(String, String)>,
    pub tables: Vec<Table>,
    pub payload: Value,
}

impl Report {
    pub fn new(payload: Value) -> Report {
        Report {
            scalars: Vec::new(),
            tables: Vec::new(),
            payload,
        }
    }

    pub fn scalar(mut self, key: &str, value: impl ToString) -> Report {
        self.scalars.push((key.to_string(), value.to_string()));
        self
    }

    pub fn table(mut self, table: Table) -> Report {
        self.tables.push(table);
        self
    }

    /// Full JSON document: envelope fields merged with the payload.
    pub fn to_json(&self, engine: &str, command: &str) -> String {
        let mut map = Map::new();
        map.insert("engine".into(), json!(engine));
        map.insert("command".into(), json!(command));
        if let Value::Object(fields) = &self.payload {
            for (k, v) in fields {
                map.insert(k.clone(), v.clone());
            }
        }
        let mut out = serde_json::to_string_pretty(&Value::Object(map)).expect("serializable");
        out.push('\n');
        out
    }

    /// CSV: scalar key/value records, then each table with its header.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .flexible(true)
            .from_writer(Vec::new());
        for (k, v) in &self.scalars {
            w.write_record([k.as_str(), v.as_str()]).expect("csv record");
        }
        for table in &self.tables {
            w.write_record(&table.header).expect("csv header");
            for row in &table.rows {
                w.write_record(row).expect("csv row");
            }
        }
        String::from_utf8(w.into_inner().expect("csv buffer")).expect("utf8")
    }

    pub fn to_md(&self, engine: &str, command: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {command}\n\n"));
        out.push_str(&format!("- engine: {engine}\n"));
        for (k, v) in &self.scalars {
            out.push_str(&format!("- {k}: {v}\n"));
        }
        for table in &self.tables {
            out.push('\n');
            if !table.title.is_empty() {
                out.push_str(&format!("## {}\n\n", table.title));
            }
            out.push_str(&format!("| {} |\n", table.header.join(" | ")));
            out.push_str(&format!(
                "|{}\n",
                " --- |".repeat(table.header.len())
            ));
            for row in &table.rows {
                out.push_str(&format!("| {} |\n", row.join(" | ")));
            }
        }
        out
    }
}
