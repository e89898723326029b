//! Machine-readable output rows and their text/CSV/JSON rendering.

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One type evaluation. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub p: u32,
    pub q: u32,
    pub n: u32,
    pub group: &'static str,
    pub method: &'static str,
    pub type_value: i8,
    pub type_label: &'static str,
    pub spinor_dim: u64,
    pub num_spinor: u64,
    pub class_count: Option<u64>,
    pub pq_mod8: u32,
}

/// Burnside solution; the type columns are followed by the group order and
/// the count of degree-one characters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BurnsideRecord {
    pub p: u32,
    pub q: u32,
    pub n: u32,
    pub group: &'static str,
    pub method: &'static str,
    pub type_value: i8,
    pub type_label: &'static str,
    pub spinor_dim: u64,
    pub num_spinor: u64,
    pub class_count: u64,
    pub pq_mod8: u32,
    pub group_order: u64,
    pub num_one_dim: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassesRecord {
    pub p: u32,
    pub q: u32,
    pub n: u32,
    pub group: &'static str,
    pub method: &'static str,
    pub group_order: u64,
    pub class_count: u64,
    pub central_count: u64,
    pub classes_of_size_2: u64,
    pub commutator_order: u64,
    pub abelianization_order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRecord {
    pub p: u32,
    pub q: u32,
    pub group: &'static str,
    pub method: &'static str,
    pub pass: bool,
    pub detail: String,
}

pub fn to_json<T: Serialize>(records: &[T]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialize");
    s.push('\n');
    s
}

pub fn to_csv<T: Serialize>(records: &[T], header: &[&str]) -> String {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    writer.write_record(header).expect("in-memory write");
    for r in records {
        writer.serialize(r).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

pub const OUTPUT_HEADER: &[&str] = &[
    "p",
    "q",
    "n",
    "group",
    "method",
    "type_value",
    "type_label",
    "spinor_dim",
    "num_spinor",
    "class_count",
    "pq_mod8",
];

pub const BURNSIDE_HEADER: &[&str] = &[
    "p",
    "q",
    "n",
    "group",
    "method",
    "type_value",
    "type_label",
    "spinor_dim",
    "num_spinor",
    "class_count",
    "pq_mod8",
    "group_order",
    "num_one_dim",
];

pub const CLASSES_HEADER: &[&str] = &[
    "p",
    "q",
    "n",
    "group",
    "method",
    "group_order",
    "class_count",
    "central_count",
    "classes_of_size_2",
    "commutator_order",
    "abelianization_order",
];

pub const VERIFY_HEADER: &[&str] = &["p", "q", "group", "method", "pass", "detail"];

#[cfg(test)]
mod tests {
    use super::*;

    fn record() -> OutputRecord {
        OutputRecord {
            p: 3,
            q: 1,
            n: 4,
            group: "pin",
            method: "closed",
            type_value: 1,
            type_label: "real",
            spinor_dim: 4,
            num_spinor: 1,
            class_count: None,
            pq_mod8: 2,
        }
    }

    #[test]
    fn csv_header_follows_field_order() {
        let out = to_csv(&[record()], OUTPUT_HEADER);
        let mut lines = out.lines();
        assert_eq!(lines.next().unwrap(), OUTPUT_HEADER.join(","));
        assert_eq!(lines.next().unwrap(), "3,1,4,pin,closed,1,real,4,1,,2");
    }

    #[test]
    fn json_field_names() {
        let v: serde_json::Value = serde_json::from_str(&to_json(&[record()])).unwrap();
        let obj = v[0].as_object().unwrap();
        let keys: Vec<_> = obj.keys().map(String::as_str).collect();
        let mut expected = OUTPUT_HEADER.to_vec();
        expected.sort();
        let mut keys = keys;
        keys.sort();
        assert_eq!(keys, expected);
        assert!(obj["class_count"].is_null());
    }
}
