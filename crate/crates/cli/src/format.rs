//! Text and JSON forms of squares and hypercubes. Symbols are one-based in
//! both.
//!
//! Square text: a line `n`, then `n` rows of `n` integers. Hypercube text:
//! a line `n d`, then the `n^d` entries with the last axis fastest, 16 per
//! line.

use ninf_core::{Hypercube, LatinSquare};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Parsed but unvalidated input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub order: usize,
    pub dim: usize,
    /// One-based entries, last axis fastest.
    pub data: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Square(LatinSquare),
    Hypercube(Hypercube),
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum JsonObject {
    LatinSquare { order: usize, rows: Vec<Vec<u32>> },
    LatinHypercube { order: usize, dim: usize, data: Vec<u32> },
}

#[derive(Serialize)]
struct HyperOut<'a> {
    kind: &'static str,
    order: usize,
    dim: usize,
    data: &'a [u32],
}

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

pub fn parse_grid(input: &str) -> Result<Grid, CliError> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

fn parse_json(input: &str) -> Result<Grid, CliError> {
    let obj: JsonObject = serde_json::from_str(input).map_err(|e| parse_err(e.to_string()))?;
    let grid = match obj {
        JsonObject::LatinSquare { order, rows } => {
            if rows.len() != order || rows.iter().any(|r| r.len() != order) {
                return Err(parse_err(format!("rows do not form a {order} x {order} grid")));
            }
            Grid { order, dim: 2, data: rows.concat() }
        }
        JsonObject::LatinHypercube { order, dim, data } => Grid { order, dim, data },
    };
    check_size(&grid)?;
    Ok(grid)
}

fn parse_text(input: &str) -> Result<Grid, CliError> {
    let mut lines = input.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| parse_err("empty input"))?;
    let nums = |s: &str| -> Result<Vec<usize>, CliError> {
        s.split_whitespace()
            .map(|t| t.parse().map_err(|_| parse_err(format!("not an integer: {t:?}"))))
            .collect()
    };
    let (order, dim) = match nums(header)?[..] {
        [n] => (n, 2),
        [n, d] => (n, d),
        _ => return Err(parse_err("header must be `n` or `n d`")),
    };
    let mut data = Vec::new();
    for line in lines {
        data.extend(nums(line)?.into_iter().map(|v| v as u32));
    }
    let grid = Grid { order, dim, data };
    check_size(&grid)?;
    Ok(grid)
}

fn check_size(g: &Grid) -> Result<(), CliError> {
    let want = u32::try_from(g.dim)
        .ok()
        .and_then(|d| g.order.checked_pow(d))
        .ok_or_else(|| parse_err("object too large"))?;
    if g.order == 0 || g.dim < 2 {
        return Err(parse_err("order must be positive and dimension at least 2"));
    }
    if g.data.len() != want {
        return Err(parse_err(format!("expected {want} entries, found {}", g.data.len())));
    }
    if g.data.iter().any(|&v| v == 0 || v as usize > g.order) {
        return Err(parse_err(format!("entries must lie in 1..={}", g.order)));
    }
    Ok(())
}

impl Grid {
    /// Validates the Latin property.
    pub fn to_object(&self) -> ninf_core::Result<Object> {
        let zero: Vec<u32> = self.data.iter().map(|v| v - 1).collect();
        if self.dim == 2 {
            LatinSquare::from_cells(self.order, zero).map(Object::Square)
        } else {
            Hypercube::from_data(self.order, self.dim, zero).map(Object::Hypercube)
        }
    }
}

impl Object {
    pub fn order(&self) -> usize {
        match self {
            Object::Square(l) => l.order(),
            Object::Hypercube(h) => h.order(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Object::Square(_) => 2,
            Object::Hypercube(h) => h.dim(),
        }
    }

    /// Squares come back as [`Object::Square`] whatever their origin.
    pub fn from_hypercube(h: Hypercube) -> Self {
        if h.dim() == 2 {
            let n = h.order();
            let rows: Vec<&[u32]> = h.data().chunks(n).collect();
            Object::Square(LatinSquare::from_rows(&rows).expect("a 2-dimensional Latin hypercube is a Latin square"))
        } else {
            Object::Hypercube(h)
        }
    }

    pub fn render(&self, format: Format) -> String {
        let one = |v: &u32| v + 1;
        match (self, format) {
            (Object::Square(l), Format::Text) => {
                let mut out = format!("{}\n", l.order());
                for r in 0..l.order() {
                    let row: Vec<String> = l.row(r).iter().map(|v| one(v).to_string()).collect();
                    out += &row.join(" ");
                    out.push('\n');
                }
                out
            }
            (Object::Square(l), Format::Json) => {
                let rows: Vec<Vec<u32>> = (0..l.order()).map(|r| l.row(r).iter().map(one).collect()).collect();
                json!({"kind": "latin_square", "order": l.order(), "rows": rows}).to_string() + "\n"
            }
            (Object::Hypercube(h), Format::Text) => {
                let mut out = format!("{} {}\n", h.order(), h.dim());
                for chunk in h.data().chunks(16) {
                    let line: Vec<String> = chunk.iter().map(|v| one(v).to_string()).collect();
                    out += &line.join(" ");
                    out.push('\n');
                }
                out
            }
            (Object::Hypercube(h), Format::Json) => {
                let data: Vec<u32> = h.data().iter().map(one).collect();
                let out = HyperOut { kind: "latin_hypercube", order: h.order(), dim: h.dim(), data: &data };
                serde_json::to_string(&out).expect("plain struct serialises") + "\n"
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ninf_core::construct::fixtures;

    fn round_trip(obj: Object) {
        for f in [Format::Text, Format::Json] {
            let back = parse_grid(&obj.render(f)).unwrap().to_object().unwrap();
            assert_eq!(back, obj);
        }
    }

    #[test]
    fn constants_round_trip() {
        for l in [fixtures::e(), fixtures::a8(), fixtures::b8(), fixtures::a9(), fixtures::b9(), fixtures::j(), fixtures::z()] {
            round_trip(Object::Square(l));
        }
        round_trip(Object::Hypercube(fixtures::cube4()));
        round_trip(Object::Hypercube(fixtures::cube6()));
    }

    #[test]
    fn text_layout() {
        let l = LatinSquare::cyclic(2);
        assert_eq!(Object::Square(l).render(Format::Text), "2\n2 1\n1 2\n");
        let h = Object::Hypercube(fixtures::cube4()).render(Format::Text);
        assert!(h.starts_with("4 3\n"));
        assert_eq!(h.lines().count(), 1 + 4);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_grid(""), Err(CliError::Parse(_))));
        assert!(matches!(parse_grid("2\n1 2\n2"), Err(CliError::Parse(_))));
        assert!(matches!(parse_grid("2\n1 2\n2 x"), Err(CliError::Parse(_))));
        assert!(matches!(parse_grid("2\n1 2\n2 3"), Err(CliError::Parse(_))));
        assert!(matches!(parse_grid("{\"kind\":\"latin_square\",\"order\":2,\"rows\":[[1,2]]}"), Err(CliError::Parse(_))));
        // syntactically fine, not Latin
        assert!(parse_grid("2\n1 1\n2 2").unwrap().to_object().is_err());
    }
}
