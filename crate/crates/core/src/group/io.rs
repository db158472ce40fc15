//! Text format for generator lists.
//!
//! ```text
//! # comment
//! d 4
//! p 1 0 2 3
//! p 1 2 3 0
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::perm::Perm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GensParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `d <degree>` line")]
    MissingDegree,
}

fn syntax(line: usize, message: impl Into<String>) -> GensParseError {
    GensParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Parses a generator file into its degree and generator list.
pub fn parse_generators(text: &str) -> Result<(usize, Vec<Perm>), GensParseError> {
    let mut degree = None;
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("d") => {
                if degree.is_some() {
                    return Err(syntax(line_no, "duplicate degree line"));
                }
                let d = tokens
                    .next()
                    .ok_or_else(|| syntax(line_no, "missing degree"))?
                    .parse::<usize>()
                    .map_err(|e| syntax(line_no, format!("bad degree: {e}")))?;
                if tokens.next().is_some() {
                    return Err(syntax(line_no, "trailing tokens after degree"));
                }
                degree = Some(d);
            }
            Some("p") => {
                let d = degree.ok_or_else(|| syntax(line_no, "generator before degree line"))?;
                let images = parse_images(tokens, line_no)?;
                gens.push(perm_of_degree(images, d, line_no)?);
            }
            Some(other) => return Err(syntax(line_no, format!("unknown record `{other}`"))),
            None => unreachable!(),
        }
    }
    let degree = degree.ok_or(GensParseError::MissingDegree)?;
    Ok((degree, gens))
}

/// Parses a single image line, with or without the leading `p`.
pub fn parse_image_line(line: &str, degree: usize) -> Result<Perm, GensParseError> {
    let line = line.split('#').next().unwrap_or("").trim();
    let line = line.strip_prefix("p ").unwrap_or(line);
    let images = parse_images(line.split_whitespace(), 1)?;
    perm_of_degree(images, degree, 1)
}

fn parse_images<'a>(
    tokens: impl Iterator<Item = &'a str>,
    line: usize,
) -> Result<Vec<usize>, GensParseError> {
    tokens
        .map(|t| {
            t.parse::<usize>()
                .map_err(|e| syntax(line, format!("bad image `{t}`: {e}")))
        })
        .collect()
}

fn perm_of_degree(images: Vec<usize>, degree: usize, line: usize) -> Result<Perm, GensParseError> {
    if images.len() != degree {
        return Err(syntax(
            line,
            format!("expected {degree} images, found {}", images.len()),
        ));
    }
    Perm::from_images(images).map_err(|e| syntax(line, e.to_string()))
}

pub fn serialize_generators(degree: usize, gens: &[Perm]) -> String {
    let mut out = format!("d {degree}\n");
    for g in gens {
        out.push('p');
        for x in g.images() {
            let _ = write!(out, " {x}");
        }
        out.push('\n');
    }
    out
}
