//! CSV reading and writing with position-annotated diagnostics.

use std::fmt;
use std::fs;
use std::path::Path;

/// Parse failure at a 1-based line/column position.
#[derive(Debug)]
pub struct ParseError {
    pub path: String,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}: {}",
            self.path, self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

fn number_error(path: &Path, line: usize, column: usize, text: &str) -> ParseError {
    ParseError {
        path: path.display().to_string(),
        line,
        column,
        message: format!("expected a real number, found {text:?}"),
    }
}

/// Signal CSV: one real per line; `#`-prefixed comment lines may carry an
/// `# N=<int>` header that must match the sample count.
pub fn read_signal(path: &Path) -> Result<Vec<f64>, ParseError> {
    let text = fs::read_to_string(path).map_err(|e| ParseError {
        path: path.display().to_string(),
        line: 0,
        column: 0,
        message: e.to_string(),
    })?;
    let mut declared: Option<usize> = None;
    let mut samples = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(n_text) = comment.trim().strip_prefix("N=") {
                declared = Some(n_text.trim().parse().map_err(|_| ParseError {
                    path: path.display().to_string(),
                    line,
                    column: raw.find("N=").unwrap_or(0) + 3,
                    message: format!("invalid sample count {:?}", n_text.trim()),
                })?);
            }
            continue;
        }
        let column = raw.len() - raw.trim_start().len() + 1;
        let value: f64 = trimmed
            .parse()
            .map_err(|_| number_error(path, line, column, trimmed))?;
        samples.push(value);
    }
    if let Some(n) = declared {
        if n != samples.len() {
            return Err(ParseError {
                path: path.display().to_string(),
                line: 0,
                column: 0,
                message: format!("header declares N={n} but {} samples follow", samples.len()),
            });
        }
    }
    if samples.is_empty() {
        return Err(ParseError {
            path: path.display().to_string(),
            line: 0,
            column: 0,
            message: "no samples found".into(),
        });
    }
    Ok(samples)
}

/// Spectrum CSV: `k,value` rows, k strictly increasing from 0.
pub fn read_spectrum(path: &Path) -> Result<Vec<f64>, ParseError> {
    let text = fs::read_to_string(path).map_err(|e| ParseError {
        path: path.display().to_string(),
        line: 0,
        column: 0,
        message: e.to_string(),
    })?;
    let mut values = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some((k_text, v_text)) = trimmed.split_once(',') else {
            return Err(ParseError {
                path: path.display().to_string(),
                line,
                column: 1,
                message: format!("expected `k,value`, found {trimmed:?}"),
            });
        };
        let k: usize = k_text.trim().parse().map_err(|_| ParseError {
            path: path.display().to_string(),
            line,
            column: 1,
            message: format!("invalid index {:?}", k_text.trim()),
        })?;
        if k != values.len() {
            return Err(ParseError {
                path: path.display().to_string(),
                line,
                column: 1,
                message: format!("expected index {}, found {k}", values.len()),
            });
        }
        let column = raw.find(',').unwrap_or(0) + 2;
        let value: f64 = v_text
            .trim()
            .parse()
            .map_err(|_| number_error(path, line, column, v_text.trim()))?;
        values.push(value);
    }
    if values.is_empty() {
        return Err(ParseError {
            path: path.display().to_string(),
            line: 0,
            column: 0,
            message: "no spectrum rows found".into(),
        });
    }
    Ok(values)
}

pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_signal(values: &[f64]) -> String {
    let mut out = format!("# N={}\n", values.len());
    for &v in values {
        out.push_str(&format_float(v));
        out.push('\n');
    }
    out
}

pub fn write_spectrum(values: &[f64]) -> String {
    let mut out = String::new();
    for (k, &v) in values.iter().enumerate() {
        out.push_str(&format!("{k},{}\n", format_float(v)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn temp_file(contents: &str) -> std::path::PathBuf {
        let mut path = std::env::temp_dir();
        path.push(format!(
            "mobius-xform-io-test-{}-{}",
            std::process::id(),
            contents.len()
        ));
        let mut f = fs::File::create(&path).unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        path
    }

    #[test]
    fn signal_round_trip() {
        let v = vec![1.0, -2.5, 0.25];
        let path = temp_file(&write_signal(&v));
        assert_eq!(read_signal(&path).unwrap(), v);
        fs::remove_file(path).unwrap();
    }

    #[test]
    fn signal_header_mismatch() {
        let path = temp_file("# N=4\n1.0\n2.0\n");
        let err = read_signal(&path).unwrap_err();
        assert!(err.message.contains("N=4"));
        fs::remove_file(path).unwrap();
    }

    #[test]
    fn signal_parse_error_has_position() {
        let path = temp_file("1.0\n  abc\n");
        let err = read_signal(&path).unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        fs::remove_file(path).unwrap();
    }

    #[test]
    fn spectrum_round_trip_and_order_check() {
        let v = vec![0.5, 1.5, -0.25];
        let path = temp_file(&write_spectrum(&v));
        assert_eq!(read_spectrum(&path).unwrap(), v);
        fs::remove_file(path).unwrap();

        let path = temp_file("0,1.0\n2,2.0\n");
        let err = read_spectrum(&path).unwrap_err();
        assert!(err.message.contains("expected index 1"));
        fs::remove_file(path).unwrap();
    }
}
