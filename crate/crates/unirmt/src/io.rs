//! CSV ingestion and output helpers.
//!
//! Input convention: comma-separated numeric values, decimal point, UTF-8,
//! one observation per row, optional single header row (detected when the
//! first row fails to parse as numbers but later rows succeed).

use crate::error::{Error, Result};
use crate::mat::Mat;
use std::io::Write;
use std::path::Path;

fn parse_row(line: &str, lineno: usize) -> Result<Option<Vec<f64>>> {
    let trimmed = line.trim();
    if trimmed.is_empty() {
        return Ok(None);
    }
    let mut vals = Vec::new();
    for cell in trimmed.split(',') {
        match cell.trim().parse::<f64>() {
            Ok(v) => vals.push(v),
            Err(_) => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("cannot parse {:?} as a number", cell.trim()),
                })
            }
        }
    }
    Ok(Some(vals))
}

/// Parses CSV text into a dense matrix, skipping one optional header row.
pub fn parse_matrix_csv(text: &str) -> Result<Mat> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut width: Option<usize> = None;
    let mut header_skipped = false;

    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        match parse_row(line, lineno) {
            Ok(None) => continue,
            Ok(Some(vals)) => {
                match width {
                    None => width = Some(vals.len()),
                    Some(w) if w != vals.len() => {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("expected {w} columns, found {}", vals.len()),
                        })
                    }
                    _ => {}
                }
                rows.push(vals);
            }
            Err(e) => {
                // a single unparseable first row is treated as the header
                if rows.is_empty() && !header_skipped {
                    header_skipped = true;
                    continue;
                }
                return Err(e);
            }
        }
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "no numeric rows found".into(),
        });
    }
    Mat::from_rows(&rows)
}

pub fn read_matrix_csv(path: &Path) -> Result<Mat> {
    let text = std::fs::read_to_string(path)?;
    parse_matrix_csv(&text).map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse {
            line,
            msg: format!("{}: {msg}", path.display()),
        },
        other => other,
    })
}

/// Reads a CSV whose `label_col` column carries group labels (any text);
/// returns the per-group numeric matrices in first-appearance order.
pub fn read_grouped_csv(path: &Path, label_col: usize) -> Result<Vec<(String, Mat)>> {
    let text = std::fs::read_to_string(path)?;
    let mut order: Vec<String> = Vec::new();
    let mut groups: std::collections::HashMap<String, Vec<Vec<f64>>> =
        std::collections::HashMap::new();
    let mut width: Option<usize> = None;
    let mut header_skipped = false;

    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let cells: Vec<&str> = trimmed.split(',').map(|c| c.trim()).collect();
        if label_col >= cells.len() {
            return Err(Error::Parse {
                line: lineno,
                msg: format!(
                    "label column {label_col} out of range for {} columns",
                    cells.len()
                ),
            });
        }
        let mut vals = Vec::with_capacity(cells.len() - 1);
        let mut bad = None;
        for (j, cell) in cells.iter().enumerate() {
            if j == label_col {
                continue;
            }
            match cell.parse::<f64>() {
                Ok(v) => vals.push(v),
                Err(_) => {
                    bad = Some(format!("cannot parse {cell:?} as a number"));
                    break;
                }
            }
        }
        if let Some(msg) = bad {
            if order.is_empty() && !header_skipped {
                header_skipped = true;
                continue;
            }
            return Err(Error::Parse { line: lineno, msg });
        }
        match width {
            None => width = Some(vals.len()),
            Some(w) if w != vals.len() => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected {w} numeric columns, found {}", vals.len()),
                })
            }
            _ => {}
        }
        let label = cells[label_col].to_string();
        if !groups.contains_key(&label) {
            order.push(label.clone());
        }
        groups.entry(label).or_default().push(vals);
    }
    if order.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "no data rows found".into(),
        });
    }
    order
        .into_iter()
        .map(|label| {
            let rows = groups.remove(&label).unwrap();
            Mat::from_rows(&rows).map(|m| (label, m))
        })
        .collect()
}

/// Writes `content` to `path`, or to stdout when `path` is `None`.
pub fn write_output(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => {
            std::fs::write(p, content)?;
        }
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_and_without_header() {
        let m = parse_matrix_csv("a,b\n1,2\n3,4\n").unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 2));
        assert_eq!(m[(1, 1)], 4.0);
        let m = parse_matrix_csv("1.5,-2e3\n0.25,7\n").unwrap();
        assert_eq!(m[(0, 1)], -2000.0);
    }

    #[test]
    fn rejects_ragged_and_text_rows() {
        assert!(matches!(
            parse_matrix_csv("1,2\n3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_matrix_csv("1,2\nx,4\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_matrix_csv("\n\n").is_err());
    }

    #[test]
    fn grouped_by_label_column() {
        let text = "group,v1,v2\nA,1,2\nB,5,6\nA,3,4\n";
        let tmp = std::env::temp_dir().join("unirmt_grouped_test.csv");
        std::fs::write(&tmp, text).unwrap();
        let groups = read_grouped_csv(&tmp, 0).unwrap();
        std::fs::remove_file(&tmp).ok();
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[0].0, "A");
        assert_eq!(groups[0].1.rows(), 2);
        assert_eq!(groups[1].0, "B");
        assert_eq!(groups[1].1[(0, 1)], 6.0);
    }
}
