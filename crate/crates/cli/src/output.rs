//! JSON and CSV rendering of an [`OutputRecord`].

use serde_json::Value;

use crate::args::Format;
use crate::record::OutputRecord;

pub fn render(record: &OutputRecord, format: Format) -> Result<String, std::io::Error> {
    match format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(record)?;
            text.push('\n');
            Ok(text)
        }
        Format::Csv => render_csv(record),
    }
}

fn cell(value: Option<&Value>) -> String {
    match value {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(v) => v.to_string(),
    }
}

/// The rows only. Columns are every key in order of first appearance;
/// rows without a column leave it empty.
fn render_csv(record: &OutputRecord) -> Result<String, std::io::Error> {
    let mut columns: Vec<&str> = Vec::new();
    for row in &record.rows {
        for key in row.keys() {
            if !columns.contains(&key.as_str()) {
                columns.push(key);
            }
        }
    }
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
    writer.write_record(&columns)?;
    for row in &record.rows {
        writer.write_record(columns.iter().map(|c| cell(row.get(*c))))?;
    }
    let bytes = writer.into_inner().map_err(|e| e.into_error())?;
    String::from_utf8(bytes).map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))
}
