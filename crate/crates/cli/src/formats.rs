//! JSON file formats. Rationals are canonical strings (`"3"`, `"-1/2"`);
//! disk indices are 1-based.

use emptyconv::geom::{Point2, Point3};
use emptyconv::rational::{format_rational, parse_rational, Rational};
use emptyconv::reduction::{Blocker, DiskInstance, ReductionOutput, TangentPair};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceDoc {
    radius: String,
    centers: Vec<[String; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockerDoc {
    point: [String; 3],
    pair: [usize; 2],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointsDoc {
    #[serde(rename = "L")]
    lifted: Vec<[String; 3]>,
    #[serde(rename = "B")]
    blockers: Vec<BlockerDoc>,
}

/// Either accepted input document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Instance(DiskInstance),
    Points(ReductionOutput),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Instance(_) => "instance",
            Input::Points(_) => "points",
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Input::Instance(d) => instance_to_json(d),
            Input::Points(r) => points_to_json(r),
        }
    }

    /// SHA-256 of the canonical serialisation, hex encoded.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }
}

fn syntax(source_name: &str, e: serde_json::Error) -> CliError {
    CliError::Syntax {
        source_name: source_name.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// 1-based line of the first quoted occurrence of `token`, or 1.
fn line_of(text: &str, token: &str) -> usize {
    let quoted = format!("\"{token}\"");
    text.find(&quoted)
        .map(|at| text[..at].matches('\n').count() + 1)
        .unwrap_or(1)
}

fn rational(text: &str, source_name: &str, what: &str, raw: &str) -> Result<Rational> {
    parse_rational(raw).map_err(|e| CliError::Invalid {
        source_name: source_name.to_string(),
        line: line_of(text, raw),
        message: format!("{what}: {e}"),
    })
}

pub fn parse_instance(text: &str, source_name: &str) -> Result<DiskInstance> {
    let doc: InstanceDoc = serde_json::from_str(text).map_err(|e| syntax(source_name, e))?;
    if doc.radius != "1" {
        return Err(CliError::Invalid {
            source_name: source_name.to_string(),
            line: line_of(text, &doc.radius),
            message: format!("radius must be \"1\", found {:?}", doc.radius),
        });
    }
    let mut centers = Vec::with_capacity(doc.centers.len());
    for (i, [x, y]) in doc.centers.iter().enumerate() {
        centers.push(Point2::new(
            rational(text, source_name, &format!("centers[{i}][0]"), x)?,
            rational(text, source_name, &format!("centers[{i}][1]"), y)?,
        ));
    }
    let d = DiskInstance::new(centers);
    d.validate()
        .map_err(|e| CliError::Validation(format!("{source_name}: {e}")))?;
    Ok(d)
}

pub fn parse_points(text: &str, source_name: &str) -> Result<ReductionOutput> {
    let doc: PointsDoc = serde_json::from_str(text).map_err(|e| syntax(source_name, e))?;
    let point = |what: String, raw: &[String; 3]| -> Result<Point3> {
        Ok(Point3::new(
            rational(text, source_name, &what, &raw[0])?,
            rational(text, source_name, &what, &raw[1])?,
            rational(text, source_name, &what, &raw[2])?,
        ))
    };
    let lifted = doc
        .lifted
        .iter()
        .enumerate()
        .map(|(i, p)| point(format!("L[{i}]"), p))
        .collect::<Result<Vec<_>>>()?;
    let n = lifted.len();
    let mut blockers = Vec::with_capacity(doc.blockers.len());
    for (k, b) in doc.blockers.iter().enumerate() {
        let [i, j] = b.pair;
        if i == 0 || j == 0 || i > n || j > n || i >= j {
            return Err(CliError::Validation(format!(
                "{source_name}: B[{k}].pair {:?} must satisfy 1 <= i < j <= {n}",
                b.pair
            )));
        }
        blockers.push(Blocker {
            point: point(format!("B[{k}].point"), &b.point)?,
            pair: TangentPair::new(i - 1, j - 1),
        });
    }
    Ok(ReductionOutput::from_parts(lifted, blockers))
}

/// Parses either format, telling them apart by their top-level keys.
pub fn parse_input(text: &str, source_name: &str) -> Result<Input> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| syntax(source_name, e))?;
    match value.as_object() {
        Some(obj) if obj.contains_key("centers") => Ok(Input::Instance(parse_instance(text, source_name)?)),
        Some(obj) if obj.contains_key("L") => Ok(Input::Points(parse_points(text, source_name)?)),
        _ => Err(CliError::Invalid {
            source_name: source_name.to_string(),
            line: 1,
            message: "expected an instance (\"centers\") or points (\"L\", \"B\") document".into(),
        }),
    }
}

fn strings<const N: usize>(coords: [&Rational; N]) -> [String; N] {
    coords.map(format_rational)
}

pub fn point_strings(p: &Point3) -> [String; 3] {
    strings([&p.x, &p.y, &p.z])
}

pub fn instance_to_json(d: &DiskInstance) -> String {
    let doc = InstanceDoc {
        radius: "1".into(),
        centers: d.centers().iter().map(|c| strings([&c.x, &c.y])).collect(),
    };
    to_pretty(&doc)
}

pub fn points_to_json(r: &ReductionOutput) -> String {
    let doc = PointsDoc {
        lifted: r.lifted().iter().map(point_strings).collect(),
        blockers: r
            .blockers()
            .iter()
            .map(|b| {
                let (i, j) = b.pair.one_based();
                BlockerDoc {
                    point: point_strings(&b.point),
                    pair: [i, j],
                }
            })
            .collect(),
    };
    to_pretty(&doc)
}

pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use emptyconv::reduction::build_reduction;

    #[test]
    fn instance_round_trip() {
        let d = DiskInstance::from_ints(&[(0, 0), (2, 0), (-4, 6)]);
        let text = instance_to_json(&d);
        assert_eq!(parse_instance(&text, "t").unwrap(), d);
        assert_eq!(instance_to_json(&parse_instance(&text, "t").unwrap()), text);
    }

    #[test]
    fn points_round_trip() {
        let r = build_reduction(&DiskInstance::from_ints(&[(0, 0), (2, 0), (4, 0)])).unwrap();
        let text = points_to_json(&r);
        assert!(text.contains("\"pair\""));
        assert_eq!(parse_points(&text, "t").unwrap(), r);
        assert!(matches!(parse_input(&text, "t").unwrap(), Input::Points(_)));
    }

    #[test]
    fn rejects_bad_rational_with_line() {
        let text = "{\n  \"radius\": \"1\",\n  \"centers\": [\n    [\"0\", \"0\"],\n    [\"1/0\", \"0\"]\n  ]\n}\n";
        match parse_instance(text, "bad.json") {
            Err(CliError::Invalid { line, .. }) => assert_eq!(line, 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_wrong_radius_and_overlap() {
        let text = r#"{"radius": "2", "centers": []}"#;
        assert!(matches!(parse_instance(text, "t"), Err(CliError::Invalid { .. })));
        let text = r#"{"radius": "1", "centers": [["0","0"],["1","0"]]}"#;
        assert!(matches!(parse_instance(text, "t"), Err(CliError::Validation(_))));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let text = "{\n  \"radius\": \"1\",\n  \"centers\": [\n";
        match parse_instance(text, "t") {
            Err(CliError::Syntax { line, .. }) => assert!(line >= 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_bad_pairs() {
        let text = r#"{"L": [["0","0","0"]], "B": [{"point": ["0","0","0"], "pair": [0, 1]}]}"#;
        assert!(matches!(parse_points(text, "t"), Err(CliError::Validation(_))));
    }
}
