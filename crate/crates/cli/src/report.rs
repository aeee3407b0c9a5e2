use std::io::Write;

use serde::Serialize;

use crate::args::Format;

/// Something a subcommand prints.
pub trait Report: Serialize {
    fn text(&self) -> String;
    /// Header and rows.
    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>);
    /// Whether the command should exit 0.
    fn passed(&self) -> bool {
        true
    }
}

pub fn emit(report: &impl Report, format: Format) -> std::io::Result<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Text => write!(out, "{}", report.text())?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, report)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let (header, rows) = report.table();
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&header)?;
            for row in rows {
                w.write_record(&row)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
