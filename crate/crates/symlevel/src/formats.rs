//! On-disk and on-screen formats: character table documents, verification
//! reports, decompositions and growth sweeps.
//!
//! Big integers are always written as decimal strings and partitions as JSON
//! arrays.

use std::io::Write;

use indexmap::IndexMap;
use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use symlevel_core::growth::GrowthRecord;
use symlevel_core::{CharacterTable, Decomposition, Partition, VerificationReport, Witness};

pub const TABLE_SCHEMA: &str = "v1";
pub const REPORT_SCHEMA: &str = "symlevel-report-v1";

/// Serialized character table. Field order is the on-disk order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableDocument {
    pub schema: String,
    pub n: usize,
    pub classes: Vec<Vec<usize>>,
    pub class_sizes: Vec<String>,
    pub rows: IndexMap<String, Vec<String>>,
}

#[derive(Debug)]
pub struct FormatError(pub String);

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for FormatError {}

impl TableDocument {
    pub fn from_table(table: &CharacterTable) -> Self {
        TableDocument {
            schema: TABLE_SCHEMA.to_string(),
            n: table.n(),
            classes: table.classes().iter().map(|c| c.parts().to_vec()).collect(),
            class_sizes: table.class_sizes().iter().map(|s| s.to_string()).collect(),
            rows: table
                .classes()
                .iter()
                .zip(table.rows())
                .map(|(lam, row)| (lam.literal(), row.iter().map(|v| v.to_string()).collect()))
                .collect(),
        }
    }

    /// Rebuilds the table; every structural or numeric inconsistency is an
    /// error.
    pub fn into_table(self) -> Result<CharacterTable, FormatError> {
        if self.schema != TABLE_SCHEMA {
            return Err(FormatError(format!("unknown table schema {:?}", self.schema)));
        }
        let bad = |what: &str| FormatError(format!("table for n={}: {what}", self.n));
        let expected: Vec<Partition> =
            symlevel_core::partition::enumerate_partitions(self.n).map_err(|e| bad(&e.to_string()))?;
        let classes: Vec<Vec<usize>> = expected.iter().map(|c| c.parts().to_vec()).collect();
        if classes != self.classes {
            return Err(bad("classes are not the partitions of n in canonical order"));
        }
        let keys: Vec<String> = expected.iter().map(Partition::literal).collect();
        if self.rows.keys().ne(keys.iter()) {
            return Err(bad("row keys are not the partitions of n in canonical order"));
        }
        let class_sizes = self
            .class_sizes
            .iter()
            .map(|s| s.parse::<BigUint>().map_err(|_| bad("class size is not a natural number")))
            .collect::<Result<Vec<_>, _>>()?;
        let rows = self
            .rows
            .values()
            .map(|row| {
                row.iter()
                    .map(|s| s.parse::<BigInt>().map_err(|_| bad("entry is not an integer")))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        CharacterTable::from_rows(self.n, class_sizes, rows).map_err(|e| bad(&e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table documents always serialize");
        s.push('\n');
        s
    }
}

/// Plain-text grid: one row per irreducible, columns in class order.
pub fn table_text(table: &CharacterTable) -> String {
    let header: Vec<String> = table.classes().iter().map(Partition::literal).collect();
    let mut out = format!("n={} classes: {}\n", table.n(), header.join(" "));
    for (lam, row) in table.classes().iter().zip(table.rows()) {
        let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("{}: {}\n", lam.literal(), vals.join(" ")));
    }
    out
}

pub fn partition_value(p: &Partition) -> Value {
    Value::from(p.parts().to_vec())
}

fn witness_value(w: &Witness) -> Value {
    match w {
        Witness::Partition(p) => partition_value(p),
        Witness::Integer(v) => Value::String(v.to_string()),
        Witness::Text(t) => Value::String(t.clone()),
    }
}

/// Report object in the shared report schema.
pub fn report_value(r: &VerificationReport, timing: bool) -> Value {
    let mut obj = Map::new();
    obj.insert("schema".into(), REPORT_SCHEMA.into());
    obj.insert("theorem".into(), r.theorem.clone().into());
    obj.insert(
        "parameters".into(),
        Value::Object(r.parameters.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect()),
    );
    obj.insert("instances_checked".into(), r.instances_checked.into());
    obj.insert("failure_count".into(), r.failure_count.into());
    let failures = r
        .failures
        .iter()
        .map(|f| Value::Object(f.fields.iter().map(|(k, w)| (k.clone(), witness_value(w))).collect()))
        .collect();
    obj.insert("failures".into(), Value::Array(failures));
    if !r.observations.is_empty() {
        obj.insert(
            "observations".into(),
            Value::Object(r.observations.iter().map(|(k, v)| (k.clone(), v.clone().into())).collect()),
        );
    }
    obj.insert("status".into(), r.status().into());
    if timing {
        if let Some(ms) = r.wall_time_ms {
            obj.insert("wall_time_ms".into(), ms.into());
        }
    }
    Value::Object(obj)
}

/// Several reports under one envelope with aggregate counts.
pub fn bundle_value(name: &str, reports: &[VerificationReport], params: &[(&str, i64)], timing: bool) -> Value {
    let instances: u64 = reports.iter().map(|r| r.instances_checked).sum();
    let failures: u64 = reports.iter().map(|r| r.failure_count).sum();
    let mut obj = Map::new();
    obj.insert("schema".into(), REPORT_SCHEMA.into());
    obj.insert("theorem".into(), name.into());
    obj.insert(
        "parameters".into(),
        Value::Object(params.iter().map(|(k, v)| (k.to_string(), Value::from(*v))).collect()),
    );
    obj.insert("instances_checked".into(), instances.into());
    obj.insert("failure_count".into(), failures.into());
    obj.insert("failures".into(), Value::Array(Vec::new()));
    obj.insert("status".into(), if failures == 0 { "pass" } else { "fail" }.into());
    if timing {
        let ms: u64 = reports.iter().filter_map(|r| r.wall_time_ms).sum();
        obj.insert("wall_time_ms".into(), ms.into());
    }
    obj.insert("reports".into(), reports.iter().map(|r| report_value(r, timing)).collect());
    Value::Object(obj)
}

pub fn report_text(r: &VerificationReport) -> String {
    let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut out = format!(
        "{} [{}]: {} ({} instances, {} failures)\n",
        r.theorem,
        params.join(" "),
        r.status(),
        r.instances_checked,
        r.failure_count
    );
    for f in &r.failures {
        let fields: Vec<String> = f
            .fields
            .iter()
            .map(|(k, w)| format!("{k}={}", witness_value(w)))
            .collect();
        out.push_str(&format!("  counterexample: {}\n", fields.join(" ")));
    }
    for (k, v) in &r.observations {
        out.push_str(&format!("  {k}: {v}\n"));
    }
    out
}

pub fn decomposition_value(dec: &Decomposition) -> Value {
    let parts: Vec<Value> = dec
        .iter()
        .map(|(lam, m)| json!({"partition": partition_value(lam), "multiplicity": m.to_string()}))
        .collect();
    json!({"n": dec.n(), "constituents": parts})
}

pub fn decomposition_text(dec: &Decomposition) -> String {
    let terms: Vec<String> = dec.iter().map(|(lam, m)| format!("{}:{m}", lam.literal())).collect();
    format!("{}\n", terms.join(" "))
}

pub const GROWTH_COLUMNS: [&str; 8] = ["n", "lambda", "mu", "pv", "pw", "pt", "exponent", "max_level_witness"];

fn exponent_field(e: Option<f64>) -> String {
    match e {
        Some(x) => format!("{x:.9}"),
        None => "undefined".to_string(),
    }
}

pub fn write_growth_csv<W: Write>(records: &[GrowthRecord], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(GROWTH_COLUMNS)?;
    for r in records {
        w.write_record([
            r.n.to_string(),
            r.lambda.literal(),
            r.mu.literal(),
            r.plancherel_v.to_string(),
            r.plancherel_w.to_string(),
            r.plancherel_tensor.to_string(),
            exponent_field(r.exponent),
            r.max_level_witness.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn growth_value(r: &GrowthRecord) -> Value {
    json!({
        "n": r.n,
        "lambda": partition_value(&r.lambda),
        "mu": partition_value(&r.mu),
        "pv": r.plancherel_v.to_string(),
        "pw": r.plancherel_w.to_string(),
        "pt": r.plancherel_tensor.to_string(),
        "exponent": exponent_field(r.exponent),
        "max_level_witness": r.max_level_witness,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use symlevel_core::report::Failure;
    use symlevel_core::Sequential;

    #[test]
    fn table_round_trip() {
        let t = CharacterTable::build(5, &Sequential).unwrap();
        let doc = TableDocument::from_table(&t);
        let text = doc.to_json();
        assert!(text.starts_with("{\n  \"schema\": \"v1\",\n  \"n\": 5,"));
        let back: TableDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back.into_table().unwrap(), t);
    }

    #[test]
    fn tampered_tables_rejected() {
        let t = CharacterTable::build(4, &Sequential).unwrap();
        let mut doc = TableDocument::from_table(&t);
        doc.rows[1][0] = "4".into();
        assert!(doc.clone().into_table().is_err());
        let mut doc = TableDocument::from_table(&t);
        doc.rows.swap_indices(0, 1);
        assert!(doc.into_table().is_err());
        let mut doc = TableDocument::from_table(&t);
        doc.schema = "v0".into();
        assert!(doc.into_table().is_err());
    }

    #[test]
    fn report_shape() {
        let mut r = VerificationReport::new("demo").with_param("n", 3).with_param("p", 0);
        r.check(true, Failure::new);
        r.check(false, || Failure::new().with("lambda", Partition::row(3)).with("lhs", 2usize));
        r.wall_time_ms = Some(7);
        let v = report_value(&r, true);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(
            keys,
            ["schema", "theorem", "parameters", "instances_checked", "failure_count", "failures", "status", "wall_time_ms"]
        );
        assert_eq!(v["failures"][0]["lambda"], json!([3]));
        assert_eq!(v["failures"][0]["lhs"], json!("2"));
        assert_eq!(v["status"], "fail");
        assert!(report_value(&r, false).get("wall_time_ms").is_none());
    }

    #[test]
    fn growth_csv() {
        let t = CharacterTable::build(3, &Sequential).unwrap();
        let recs = symlevel_core::growth::growth_sweep(&t, &Sequential).unwrap();
        let mut buf = Vec::new();
        write_growth_csv(&recs, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "n,lambda,mu,pv,pw,pt,exponent,max_level_witness");
        assert_eq!(lines.next().unwrap(), "3,[3],[3],1,1,1,undefined,true");
        assert!(text.contains("3,\"[2,1]\",\"[2,1]\",4,4,6,0.646240625,true"));
    }
}
