//! Text format for supports: one bit string per line (most significant bit
//! first), then optionally a blank line and the dual as a hex truth table.

use crate::error::{Error, Result};
use crate::function::{parse_point, point_to_string, BooleanFunction};

use super::rows::RowSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportFile {
    pub rows: RowSet,
    pub dual: Option<BooleanFunction>,
}

pub fn parse_support_file(text: &str) -> Result<SupportFile> {
    let mut rows = Vec::new();
    let mut width = None;
    let mut dual = None;
    let mut after_blank = false;
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let body = line.trim();
        if body.is_empty() {
            if !rows.is_empty() {
                after_blank = true;
            }
            continue;
        }
        if after_blank {
            if dual.is_some() {
                return Err(Error::Parse {
                    position: start,
                    message: "unexpected content after the dual".into(),
                });
            }
            dual = Some(BooleanFunction::from_hex(body).map_err(|e| shift(e, start))?);
            continue;
        }
        let (p, w) = parse_point(body).map_err(|e| shift(e, start))?;
        match width {
            None => width = Some(w),
            Some(k) if k != w => {
                return Err(Error::Parse {
                    position: start,
                    message: format!("row has {w} bits, expected {k}"),
                })
            }
            _ => {}
        }
        rows.push(p);
    }
    let width = width.ok_or(Error::Parse {
        position: 0,
        message: "no support rows".into(),
    })?;
    Ok(SupportFile {
        rows: RowSet::new(width, rows)?,
        dual,
    })
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { position, message } => Error::Parse {
            position: position + by,
            message,
        },
        other => other,
    }
}

pub fn format_support_file(file: &SupportFile) -> String {
    let mut out = String::new();
    for &r in file.rows.rows() {
        out.push_str(&point_to_string(r, file.rows.width()));
        out.push('\n');
    }
    if let Some(d) = &file.dual {
        out.push('\n');
        out.push_str(&d.to_hex());
        out.push('\n');
    }
    out
}
