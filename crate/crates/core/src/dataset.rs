//! Point-set files.
//!
//! CSV: header `label,x,y,z`, one point per row, label `red` or `blue`.
//! Metadata, if any, sits in a leading `#meta {json}` comment line.
//!
//! JSON: `{"red": [[x, y, z], ...], "blue": [...], "meta": {...}}`.
//!
//! Floats are written in shortest round-trip form, so a save/load cycle
//! returns the exact values.

use crate::error::{Error, Result};
use crate::geom::Point3;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// Guesses from the file extension; CSV unless it ends in `.json`.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Csv,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, f64>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Dataset {
    pub red: Vec<Point3>,
    pub blue: Vec<Point3>,
    pub meta: Option<Meta>,
}

#[derive(Serialize, Deserialize)]
struct JsonDataset {
    red: Vec<[f64; 3]>,
    blue: Vec<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<Meta>,
}

fn check(points: &[Point3], set: &'static str) -> Result<()> {
    match points.iter().position(|p| !p.is_finite()) {
        Some(index) => Err(Error::NonFiniteInput { set, index }),
        None => Ok(()),
    }
}

impl Dataset {
    pub fn new(red: Vec<Point3>, blue: Vec<Point3>) -> Dataset {
        Dataset { red, blue, meta: None }
    }

    pub fn from_json_str(s: &str) -> Result<Dataset> {
        let j: JsonDataset = serde_json::from_str(s)
            .map_err(|e| Error::ParseError { line: e.line() as u64, reason: e.to_string() })?;
        let d = Dataset {
            red: j.red.into_iter().map(Point3::from).collect(),
            blue: j.blue.into_iter().map(Point3::from).collect(),
            meta: j.meta,
        };
        check(&d.red, "red")?;
        check(&d.blue, "blue")?;
        Ok(d)
    }

    pub fn to_json_string(&self) -> Result<String> {
        let j = JsonDataset {
            red: self.red.iter().map(|p| p.coords()).collect(),
            blue: self.blue.iter().map(|p| p.coords()).collect(),
            meta: self.meta.clone(),
        };
        check(&self.red, "red")?;
        check(&self.blue, "blue")?;
        Ok(serde_json::to_string(&j).expect("finite floats always serialize"))
    }

    pub fn from_csv_str(s: &str) -> Result<Dataset> {
        let mut d = Dataset::default();
        if let Some(first) = s.lines().next() {
            if let Some(json) = first.strip_prefix("#meta ") {
                let meta = serde_json::from_str(json)
                    .map_err(|e| Error::ParseError { line: 1, reason: format!("metadata: {e}") })?;
                d.meta = Some(meta);
            }
        }
        let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(s.as_bytes());
        let header = rdr.headers().map_err(|e| csv_error(&e))?.clone();
        if header.iter().collect::<Vec<_>>() != ["label", "x", "y", "z"] {
            let line = rdr.position().line().max(1);
            return Err(Error::ParseError { line, reason: "expected header `label,x,y,z`".into() });
        }
        for rec in rdr.records() {
            let rec = rec.map_err(|e| csv_error(&e))?;
            let line = rec.position().map_or(0, |p| p.line());
            let bad = |reason: String| Error::ParseError { line, reason };
            let mut c = [0.0; 3];
            for (a, v) in c.iter_mut().enumerate() {
                let field = &rec[a + 1];
                *v = field.parse::<f64>().map_err(|_| bad(format!("`{field}` is not a number")))?;
                if !v.is_finite() {
                    return Err(bad(format!("non-finite coordinate `{field}`")));
                }
            }
            match &rec[0] {
                "red" => d.red.push(Point3::from(c)),
                "blue" => d.blue.push(Point3::from(c)),
                other => return Err(bad(format!("unknown label `{other}`"))),
            }
        }
        Ok(d)
    }

    pub fn to_csv_string(&self) -> Result<String> {
        check(&self.red, "red")?;
        check(&self.blue, "blue")?;
        let mut out = String::new();
        if let Some(m) = &self.meta {
            out.push_str("#meta ");
            out.push_str(&serde_json::to_string(m).expect("metadata serializes"));
            out.push('\n');
        }
        out.push_str("label,x,y,z\n");
        for (label, pts) in [("red", &self.red), ("blue", &self.blue)] {
            for p in pts {
                out.push_str(&format!("{label},{:?},{:?},{:?}\n", p.x, p.y, p.z));
            }
        }
        Ok(out)
    }

    pub fn parse(s: &str, format: Format) -> Result<Dataset> {
        match format {
            Format::Csv => Dataset::from_csv_str(s),
            Format::Json => Dataset::from_json_str(s),
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.to_csv_string(),
            Format::Json => self.to_json_string(),
        }
    }

    pub fn load(path: &Path, format: Format) -> Result<Dataset> {
        let mut s = String::new();
        std::fs::File::open(path)?.read_to_string(&mut s)?;
        Dataset::parse(&s, format)
    }

    pub fn save(&self, path: &Path, format: Format) -> Result<()> {
        let s = self.render(format)?;
        std::fs::File::create(path)?.write_all(s.as_bytes())?;
        Ok(())
    }

    /// Reads a file that holds a single colour; every row label must match.
    pub fn load_points(path: &Path, format: Format, label: &str) -> Result<Vec<Point3>> {
        let d = Dataset::load(path, format)?;
        let (mine, other) = if label == "red" { (d.red, d.blue) } else { (d.blue, d.red) };
        if !other.is_empty() {
            return Err(Error::InvalidParameters(format!("{} holds points not labelled {label}", path.display())));
        }
        Ok(mine)
    }
}

fn csv_error(e: &csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line());
    Error::ParseError { line, reason: e.to_string() }
}
