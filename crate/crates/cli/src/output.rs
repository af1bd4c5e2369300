use serde_json::{json, Value};

use llt_core::{Error, IntLaurentPoly};

/// `{"command": ..., "input": ..., "result": ...}`.
pub fn envelope(command: &str, input: Value, result: Value) -> String {
    serde_json::to_string(&json!({"command": command, "input": input, "result": result}))
        .expect("json values serialize")
}

pub fn poly_json(p: &IntLaurentPoly) -> Value {
    serde_json::to_value(p).expect("polynomials serialize")
}

pub fn csv_rows<I>(header: &[&str], rows: I) -> Result<String, Error>
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
