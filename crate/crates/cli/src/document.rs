//! The on-disk semiring and hom documents (TOML).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use rigframe::semiring::{validate_semiring, FiniteSemiring, RawTables};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{location}: {message}")]
pub struct ParseError {
    pub location: String,
    pub message: String,
}

impl ParseError {
    fn new(location: impl Into<String>, message: impl Into<String>) -> ParseError {
        ParseError { location: location.into(), message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemiringDocument {
    pub name: String,
    pub elements: Vec<String>,
    pub zero: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    pub add: Vec<Vec<String>>,
    pub mul: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDocument {
    pub name: String,
    pub source: String,
    pub target: String,
    /// image label of each source element, in source order
    pub map: Vec<String>,
}

fn toml_error(e: toml::de::Error, text: &str) -> ParseError {
    let location = match e.span() {
        Some(span) => {
            let line = text[..span.start.min(text.len())].matches('\n').count() + 1;
            format!("line {line}")
        }
        None => "document".to_string(),
    };
    ParseError::new(location, e.message().to_string())
}

pub fn parse_document(text: &str) -> Result<SemiringDocument, ParseError> {
    let doc: SemiringDocument = toml::from_str(text).map_err(|e| toml_error(e, text))?;
    doc.check()?;
    Ok(doc)
}

pub fn parse_hom_document(text: &str) -> Result<HomDocument, ParseError> {
    toml::from_str(text).map_err(|e| toml_error(e, text))
}

pub fn emit_document(doc: &SemiringDocument) -> String {
    toml::to_string(doc).expect("documents serialize")
}

pub fn emit_hom_document(doc: &HomDocument) -> String {
    toml::to_string(doc).expect("documents serialize")
}

impl SemiringDocument {
    pub fn from_semiring(s: &FiniteSemiring) -> SemiringDocument {
        let label = |i: usize| s.label(i).to_string();
        let table = |t: Vec<Vec<usize>>| t.into_iter().map(|row| row.into_iter().map(label).collect()).collect();
        SemiringDocument {
            name: s.name().to_string(),
            elements: s.names().to_vec(),
            zero: label(s.zero()),
            unit: s.unit().map(label),
            add: table(s.add_table()),
            mul: table(s.mul_table()),
        }
    }

    fn index(&self, label: &str, location: impl FnOnce() -> String) -> Result<usize, ParseError> {
        self.elements
            .iter()
            .position(|e| e == label)
            .ok_or_else(|| ParseError::new(location(), format!("undeclared label {label:?}")))
    }

    fn check(&self) -> Result<(), ParseError> {
        self.raw().map(|_| ())
    }

    /// Resolve labels to indices without checking any semiring law.
    pub fn raw(&self) -> Result<RawTables, ParseError> {
        let n = self.elements.len();
        if n == 0 {
            return Err(ParseError::new("elements", "no elements declared"));
        }
        for (i, e) in self.elements.iter().enumerate() {
            if self.elements[..i].contains(e) {
                return Err(ParseError::new(format!("elements[{i}]"), format!("duplicate label {e:?}")));
            }
        }
        let mut tables = Vec::new();
        for (field, table) in [("add", &self.add), ("mul", &self.mul)] {
            if table.len() != n {
                return Err(ParseError::new(field, format!("expected {n} rows, found {}", table.len())));
            }
            let mut t = vec![vec![0; n]; n];
            for (i, row) in table.iter().enumerate() {
                if row.len() != n {
                    return Err(ParseError::new(
                        format!("{field}[{i}]"),
                        format!("expected {n} cells, found {}", row.len()),
                    ));
                }
                for (j, cell) in row.iter().enumerate() {
                    t[i][j] = self.index(cell, || format!("{field}[{i}][{j}]"))?;
                }
            }
            tables.push(t);
        }
        let zero = self.index(&self.zero, || "zero".into())?;
        let unit = match &self.unit {
            Some(u) => Some(self.index(u, || "unit".into())?),
            None => None,
        };
        let mul = tables.pop().expect("two tables");
        let add = tables.pop().expect("two tables");
        Ok(RawTables { names: self.elements.clone(), add, mul, zero, unit })
    }

    pub fn to_semiring(&self) -> rigframe::Result<FiniteSemiring> {
        let raw = self.raw().map_err(|e| rigframe::Error::Malformed(e.to_string()))?;
        validate_semiring(&self.name, raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rigframe::semiring::{boolean, pentagon};

    #[test]
    fn boolean_round_trip() {
        let doc = SemiringDocument::from_semiring(&boolean());
        let text = emit_document(&doc);
        let back = parse_document(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(emit_document(&back), text);
        assert_eq!(back.to_semiring().unwrap(), boolean());
    }

    #[test]
    fn undeclared_label_names_the_cell() {
        let text = emit_document(&SemiringDocument::from_semiring(&boolean())).replacen(
            "add = [[\"0\", \"1\"]",
            "add = [[\"0\", \"x\"]",
            1,
        );
        let err = parse_document(&text).unwrap_err();
        assert_eq!(err.location, "add[0][1]");
        assert!(err.message.contains("\"x\""));
    }

    #[test]
    fn pentagon_has_no_unit() {
        let text = emit_document(&SemiringDocument::from_semiring(&pentagon()));
        assert!(!text.contains("unit"));
        assert_eq!(parse_document(&text).unwrap().unit, None);
    }

    #[test]
    fn syntax_errors_carry_a_line() {
        let err = parse_document("name = \"x\"\nelements = [\n").unwrap_err();
        assert!(err.location.starts_with("line "), "{err}");
    }
}
