//! The plain-text group file format.
//!
//! ```text
//! # comment
//! perm 3
//! (1 2 3)
//! (1 2)
//! ```
//!
//! or `table <n>` followed by `n` rows of `n` space-separated 0-based
//! indices. Cycle points are 1-based; `()` is the identity.

use std::fmt;
use std::path::Path;

use codegree_core::catalog;
use codegree_core::{Error, FiniteGroup, Permutation};

/// Line and column are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{0}: file not found")]
    NotFound(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Group(#[from] Error),
}

impl From<ParseError> for LoadError {
    fn from(source: ParseError) -> Self {
        LoadError::Parse { path: "<input>".into(), source }
    }
}

fn at(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(at(line, column, message))
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = text.char_indices().peekable();
    std::iter::from_fn(move || {
        while rest.next_if(|(_, c)| c.is_whitespace()).is_some() {}
        let &(start, _) = rest.peek()?;
        let mut end = text.len();
        while let Some(&(i, c)) = rest.peek() {
            if c.is_whitespace() {
                end = i;
                break;
            }
            rest.next();
        }
        let column = text[..start].chars().count() + 1;
        Some((column, &text[start..end]))
    })
}

fn number(line: usize, column: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .or_else(|_| err(line, column, format!("expected {what}, found {token:?}")))
}

/// Parses and validates a group; group-level failures come back as
/// [`LoadError::Group`].
pub fn parse_group_file(text: &str) -> Result<FiniteGroup, LoadError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let Some((line, header)) = lines.next() else {
        return Err(at(1, 1, "missing header `perm <degree>` or `table <n>`").into());
    };
    let head: Vec<(usize, &str)> = tokens(header).collect();
    let (kind, size) = match head.as_slice() {
        [(_, kind), (column, n)] if *kind == "perm" || *kind == "table" => {
            (*kind, number(line, *column, n, "a positive size")?)
        }
        [(column, _), ..] => return Err(at(line, *column, "expected `perm <degree>` or `table <n>`").into()),
        [] => unreachable!("blank lines are skipped"),
    };
    if size == 0 {
        return Err(at(line, head[1].0, "size must be positive").into());
    }
    if kind == "perm" {
        let gens = lines
            .map(|(line, text)| parse_generator(line, text, size))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteGroup::from_generators(size, &gens)?)
    } else {
        let mut rows = Vec::with_capacity(size);
        let mut last = line;
        for (line, text) in lines {
            last = line;
            if rows.len() == size {
                return Err(at(line, 1, format!("unexpected row after {size} rows")).into());
            }
            let row: Vec<(usize, &str)> = tokens(text).collect();
            if row.len() != size {
                let column = row.get(size).map_or(text.chars().count() + 1, |t| t.0);
                return Err(at(line, column, format!("expected {size} entries, found {}", row.len())).into());
            }
            rows.push(
                row.into_iter()
                    .map(|(column, t)| number(line, column, t, "an element index"))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        if rows.len() != size {
            return Err(at(last + 1, 1, format!("expected {size} rows, found {}", rows.len())).into());
        }
        Ok(FiniteGroup::from_cayley_table(&rows)?)
    }
}

fn parse_generator(line: usize, text: &str, degree: usize) -> Result<Permutation, ParseError> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; degree];
    let mut open: Option<usize> = None;
    let mut digits: Option<(usize, String)> = None;
    let mut finish = |digits: &mut Option<(usize, String)>, cycles: &mut Vec<Vec<usize>>| -> Result<(), ParseError> {
        if let Some((column, token)) = digits.take() {
            let point = number(line, column, &token, "a point")?;
            if point == 0 || point > degree {
                return err(line, column, format!("point {point} outside 1..={degree}"));
            }
            if std::mem::replace(&mut seen[point - 1], true) {
                return err(line, column, format!("point {point} repeated"));
            }
            cycles.last_mut().unwrap().push(point - 1);
        }
        Ok(())
    };
    for (i, c) in text.chars().enumerate() {
        let column = i + 1;
        match (open, c) {
            (None, '(') => {
                open = Some(column);
                cycles.push(Vec::new());
            }
            (None, c) if c.is_whitespace() => {}
            (None, c) => return err(line, column, format!("expected '(', found {c:?}")),
            (Some(_), ')') => {
                finish(&mut digits, &mut cycles)?;
                open = None;
            }
            (Some(_), c) if c.is_whitespace() => finish(&mut digits, &mut cycles)?,
            (Some(_), c) if c.is_ascii_digit() => digits.get_or_insert_with(|| (column, String::new())).1.push(c),
            (Some(_), c) => return err(line, column, format!("unexpected {c:?} inside a cycle")),
        }
    }
    if let Some(column) = open {
        return err(line, column, "unclosed cycle");
    }
    Permutation::from_cycles(degree, &cycles).or_else(|e| err(line, 1, e.to_string()))
}

/// A catalog name (`S4`, `F(7,3)`, `D8xC3`) or the path of a group file.
/// Existing files take precedence over names.
pub fn load_group(spec: &str) -> Result<(String, FiniteGroup), LoadError> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io { path: spec.into(), source })?;
        let group = parse_group_file(&text).map_err(|e| match e {
            LoadError::Parse { source, .. } => LoadError::Parse { path: spec.into(), source },
            other => other,
        })?;
        return Ok((spec.to_string(), group));
    }
    match catalog::parse_name(spec) {
        Ok(recipe) => Ok((recipe.name(), catalog::build(&recipe)?)),
        Err(_) => Err(LoadError::NotFound(spec.to_string())),
    }
}
