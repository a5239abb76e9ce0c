use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub name: String,
    /// Indices of the incident lines, ascending.
    pub lines: Vec<usize>,
}

/// An abstract projective configuration: lines, points and incidence.
///
/// Line 0 is the line at infinity. Incidence is stored on the points, each
/// carrying the sorted list of lines through it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    lines: Vec<String>,
    points: Vec<Point>,
}

impl Configuration {
    /// Builds a configuration from line names (infinity first) and points
    /// given by the names of their lines. Only structural problems (unknown
    /// or repeated names) are errors here; axioms are checked by
    /// [`Configuration::validate`].
    pub fn new<S: AsRef<str>>(lines: &[S], points: &[(S, Vec<S>)]) -> Result<Self> {
        let lines: Vec<String> = lines.iter().map(|s| s.as_ref().to_string()).collect();
        let index: HashMap<&str, usize> = lines
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        if index.len() != lines.len() {
            return Err(Error::Configuration("repeated line name".into()));
        }
        let mut seen = BTreeSet::new();
        let mut pts = Vec::with_capacity(points.len());
        for (name, on) in points {
            let name = name.as_ref().to_string();
            if !seen.insert(name.clone()) {
                return Err(Error::Configuration(format!("repeated point name {name}")));
            }
            let mut idx = Vec::with_capacity(on.len());
            for l in on {
                let i = *index
                    .get(l.as_ref())
                    .ok_or_else(|| Error::Configuration(format!("point {name} names unknown line {}", l.as_ref())))?;
                idx.push(i);
            }
            idx.sort_unstable();
            idx.dedup();
            pts.push(Point { name, lines: idx });
        }
        Ok(Configuration { lines, points: pts })
    }

    pub(crate) fn from_parts(lines: Vec<String>, points: Vec<Point>) -> Self {
        Configuration { lines, points }
    }

    pub fn lines(&self) -> &[String] {
        &self.lines
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    /// Number of affine lines `n` (all lines except infinity).
    pub fn n(&self) -> usize {
        self.lines.len().saturating_sub(1)
    }

    pub fn line_index(&self, name: &str) -> Option<usize> {
        self.lines.iter().position(|l| l == name)
    }

    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p.name == name)
    }

    pub fn is_incident(&self, line: usize, point: usize) -> bool {
        self.points[point].lines.binary_search(&line).is_ok()
    }

    /// Points on the given line.
    pub fn points_on(&self, line: usize) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&p| self.is_incident(line, p))
            .collect()
    }

    /// Common points of two lines (exactly one in a valid configuration).
    pub fn common_points(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&p| self.is_incident(a, p) && self.is_incident(b, p))
            .collect()
    }

    /// The unique common point of two distinct lines.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        match self.common_points(a, b).as_slice() {
            [p] => Some(*p),
            _ => None,
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for a in 0..self.lines.len() {
            for b in a + 1..self.lines.len() {
                let common = self.common_points(a, b);
                if common.len() != 1 {
                    violations.push(Violation::LinePair {
                        lines: [self.lines[a].clone(), self.lines[b].clone()],
                        common_points: common.iter().map(|&p| self.points[p].name.clone()).collect(),
                    });
                }
            }
        }
        for p in &self.points {
            if p.lines.len() < 2 {
                violations.push(Violation::PointOnFewLines {
                    point: p.name.clone(),
                    line_count: p.lines.len(),
                });
            }
        }
        ValidationReport {
            valid: violations.is_empty(),
            non_degenerate: self.points.len() > 1,
            violations,
        }
    }

    /// The configuration cut out by a subset of lines: points meeting at
    /// least two of them, with incidence restricted. Line order follows
    /// `keep`.
    pub fn restrict(&self, keep: &[usize]) -> Configuration {
        let new_index: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let lines = keep.iter().map(|&l| self.lines[l].clone()).collect();
        let points = self
            .points
            .iter()
            .filter_map(|p| {
                let mut on: Vec<usize> = p.lines.iter().filter_map(|l| new_index.get(l).copied()).collect();
                on.sort_unstable();
                (on.len() >= 2).then(|| Point {
                    name: p.name.clone(),
                    lines: on,
                })
            })
            .collect();
        Configuration { lines, points }
    }

    pub fn to_file(&self) -> ConfigFile {
        ConfigFile {
            lines: self.lines.clone(),
            infinity: self.lines[0].clone(),
            points: self
                .points
                .iter()
                .map(|p| PointFile {
                    name: p.name.clone(),
                    lines: p.lines.iter().map(|&l| self.lines[l].clone()).collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    /// Parses the JSON format without checking the axioms.
    pub fn from_json_unchecked(text: &str) -> Result<Self> {
        let file: ConfigFile = serde_json::from_str(text)?;
        file.into_configuration()
    }

    /// Parses the JSON format and rejects configurations violating the axioms.
    pub fn from_json(text: &str) -> Result<Self> {
        let c = Self::from_json_unchecked(text)?;
        let report = c.validate();
        if !report.valid {
            return Err(Error::Configuration(report.to_string()));
        }
        Ok(c)
    }
}

/// On-disk form: `{"lines": [...], "infinity": name, "points": [{"name", "lines"}]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigFile {
    pub lines: Vec<String>,
    pub infinity: String,
    pub points: Vec<PointFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointFile {
    pub name: String,
    pub lines: Vec<String>,
}

impl ConfigFile {
    /// The line named `infinity` moves to index 0; the others keep their
    /// relative order.
    pub fn into_configuration(self) -> Result<Configuration> {
        let pos = self
            .lines
            .iter()
            .position(|l| *l == self.infinity)
            .ok_or_else(|| Error::Configuration(format!("infinity line {} is not listed", self.infinity)))?;
        let mut lines = self.lines;
        let inf = lines.remove(pos);
        lines.insert(0, inf);
        let points: Vec<(String, Vec<String>)> = self.points.into_iter().map(|p| (p.name, p.lines)).collect();
        Configuration::new(&lines, &points)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Axiom (1): two lines must share exactly one point.
    LinePair {
        lines: [String; 2],
        common_points: Vec<String>,
    },
    /// Axiom (2): every point lies on at least two lines.
    PointOnFewLines { point: String, line_count: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LinePair { lines, common_points } => write!(
                f,
                "axiom (1): lines {} and {} share {} points {:?}",
                lines[0],
                lines[1],
                common_points.len(),
                common_points
            ),
            Violation::PointOnFewLines { point, line_count } => {
                write!(f, "axiom (2): point {point} lies on {line_count} line(s)")
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub non_degenerate: bool,
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return write!(f, "valid");
        }
        let msgs: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", msgs.join("; "))
    }
}

/// The affine incidence data: points off the line at infinity and the
/// ordered pairs `(i, p)` with `p` on `l_i`.
#[derive(Clone, Debug)]
pub struct IncidenceIndex {
    n: usize,
    p0: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    lookup: HashMap<(usize, usize), usize>,
}

impl IncidenceIndex {
    /// Pairs are ordered by point name, then line index.
    pub fn new(c: &Configuration) -> Self {
        let mut p0: Vec<usize> = (0..c.point_count()).filter(|&p| !c.is_incident(0, p)).collect();
        p0.sort_by(|&a, &b| c.points()[a].name.cmp(&c.points()[b].name));
        let mut pairs = Vec::new();
        for &p in &p0 {
            for &i in &c.points()[p].lines {
                pairs.push((i, p));
            }
        }
        let lookup = pairs.iter().enumerate().map(|(k, &ip)| (ip, k)).collect();
        IncidenceIndex {
            n: c.n(),
            p0,
            pairs,
            lookup,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Points not on the line at infinity, ordered by name.
    pub fn p0(&self) -> &[usize] {
        &self.p0
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair_index(&self, line: usize, point: usize) -> Option<usize> {
        self.lookup.get(&(line, point)).copied()
    }

    /// Pairs `(i, p)` with `i` not the smallest line through `p`; these index
    /// the relators.
    pub fn relator_pairs<'a>(&'a self, c: &'a Configuration) -> impl Iterator<Item = (usize, usize)> + 'a {
        self.pairs
            .iter()
            .copied()
            .filter(move |&(i, p)| c.points()[p].lines[0] != i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point_is_degenerate() {
        let c = Configuration::new(&["a", "b", "c"], &[("p", vec!["a", "b", "c"])]).unwrap();
        let r = c.validate();
        assert!(r.valid);
        assert!(!r.non_degenerate);
    }

    #[test]
    fn lonely_point_violates_axiom_two() {
        let c = Configuration::new(
            &["a", "b"],
            &[("p", vec!["a", "b"]), ("q", vec!["a"])],
        )
        .unwrap();
        let r = c.validate();
        assert!(!r.valid);
        assert!(matches!(r.violations[0], Violation::PointOnFewLines { .. }));
    }

    #[test]
    fn unknown_line_is_structural_error() {
        assert!(Configuration::new(&["a", "b"], &[("p", vec!["a", "z"])]).is_err());
    }

    #[test]
    fn json_moves_infinity_first() {
        let text = r#"{"lines": ["a", "inf", "b"], "infinity": "inf",
            "points": [{"name": "p", "lines": ["a", "inf", "b"]}]}"#;
        let c = Configuration::from_json(text).unwrap();
        assert_eq!(c.lines(), &["inf", "a", "b"]);
        assert_eq!(c.points()[0].lines, vec![0, 1, 2]);
    }

    #[test]
    fn json_rejects_invalid() {
        let text = r#"{"lines": ["a", "b", "c"], "infinity": "a",
            "points": [{"name": "p", "lines": ["a", "b"]}]}"#;
        assert!(matches!(Configuration::from_json(text), Err(Error::Configuration(_))));
        assert!(Configuration::from_json("{not json").is_err());
    }
}
