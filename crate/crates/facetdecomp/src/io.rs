//! The facet file format shared with the CLI.
//!
//! Text form: optional first line `n=<int>`, then one facet per line as
//! whitespace-separated positive integers; `#` starts a comment line and
//! the literal line `-` denotes the empty face. JSON alternative: an object
//! with optional `n` and a `facets` array of integer arrays.

use crate::complex::{Complex, Face};
use crate::{Error, Result};

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

/// Parse either format; JSON is detected by a leading `{`.
pub fn parse_complex(text: &str) -> Result<Complex> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

fn parse_json(text: &str) -> Result<Complex> {
    #[derive(serde::Deserialize)]
    struct Input {
        n: Option<usize>,
        facets: Vec<Vec<usize>>,
    }
    let input: Input = serde_json::from_str(text)
        .map_err(|e| parse_err(e.line(), e.column(), e.to_string()))?;
    Complex::from_facets(&input.facets, input.n)
}

fn parse_text(text: &str) -> Result<Complex> {
    let mut declared_n: Option<usize> = None;
    let mut facets: Vec<Vec<usize>> = Vec::new();
    let mut saw_facet = false;
    for (li, line) in text.lines().enumerate() {
        let line_no = li + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("n=") {
            if saw_facet || declared_n.is_some() {
                return Err(parse_err(line_no, 1, "n= is only allowed once, before any facet"));
            }
            declared_n = Some(rest.trim().parse().map_err(|_| {
                parse_err(line_no, 3, format!("invalid vertex count {rest:?}"))
            })?);
            continue;
        }
        saw_facet = true;
        if trimmed == "-" {
            facets.push(Vec::new());
            continue;
        }
        let mut facet = Vec::new();
        let mut col = 1;
        for tok in line.split_whitespace() {
            col = line.find(tok).map(|i| i + 1).unwrap_or(col);
            let v: usize = tok.parse().map_err(|_| {
                parse_err(line_no, col, format!("expected a positive integer, got {tok:?}"))
            })?;
            if v == 0 {
                return Err(parse_err(line_no, col, "vertex labels start at 1"));
            }
            facet.push(v);
        }
        facets.push(facet);
    }
    if facets.is_empty() && declared_n.is_none() {
        return Err(parse_err(1, 1, "no facets and no vertex count declared"));
    }
    Complex::from_facets(&facets, declared_n)
}

/// Render in the text format, one facet per line.
pub fn write_text(c: &Complex) -> String {
    let mut out = format!("n={}\n", c.n());
    for &f in c.facets() {
        if f == Face::EMPTY {
            out.push_str("-\n");
        } else {
            let line = f
                .vertices()
                .into_iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            out.push_str(&line);
            out.push('\n');
        }
    }
    out
}

/// Render in the JSON format.
pub fn write_json(c: &Complex) -> String {
    let facets: Vec<Vec<usize>> = c.facets().iter().map(|f| f.vertices()).collect();
    serde_json::to_string_pretty(&serde_json::json!({ "n": c.n(), "facets": facets })).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let text = "# a comment\nn=4\n1 2\n3 4\n";
        let c = parse_complex(text).unwrap();
        assert_eq!(c.n(), 4);
        assert_eq!(c.facet_count(), 2);
        assert_eq!(parse_complex(&write_text(&c)).unwrap(), c);
    }

    #[test]
    fn empty_face_marker() {
        let c = parse_complex("n=0\n-\n").unwrap();
        assert!(c.is_empty_complex());
        let void = parse_complex("n=3\n").unwrap();
        assert!(void.is_void());
    }

    #[test]
    fn json_form() {
        let c = parse_complex(r#"{"n": 4, "facets": [[1,2],[3,4]]}"#).unwrap();
        assert_eq!(c.n(), 4);
        assert_eq!(parse_complex(&write_json(&c)).unwrap(), c);
        let no_n = parse_complex(r#"{"facets": [[1,2,5]]}"#).unwrap();
        assert_eq!(no_n.n(), 5);
    }

    #[test]
    fn diagnostics_carry_position() {
        match parse_complex("1 2\nx 3\n") {
            Err(Error::Parse { line, col, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(col, 1);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_complex("").is_err());
        assert!(parse_complex("n=2\n1 3\n").is_err());
    }
}
