use super::configuration::{Configuration, Point};

/// Points of the MacLane configuration by their incident line indices.
const C8_POINTS: [(&str, &[usize]); 12] = [
    ("p012", &[0, 1, 2]),
    ("p034", &[0, 3, 4]),
    ("p056", &[0, 5, 6]),
    ("p07", &[0, 7]),
    ("p135", &[1, 3, 5]),
    ("p147", &[1, 4, 7]),
    ("p16", &[1, 6]),
    ("p23", &[2, 3]),
    ("p246", &[2, 4, 6]),
    ("p257", &[2, 5, 7]),
    ("p367", &[3, 6, 7]),
    ("p45", &[4, 5]),
];

fn line_names(count: usize) -> Vec<String> {
    (0..count).map(|i| format!("l{i}")).collect()
}

/// The MacLane configuration C8: lines `l0..l7` (with `l0` at infinity) and
/// the twelve points of the affine plane over F3 with one point removed.
pub fn maclane_c8() -> Configuration {
    let points = C8_POINTS
        .iter()
        .map(|(name, lines)| Point {
            name: name.to_string(),
            lines: lines.to_vec(),
        })
        .collect();
    Configuration::from_parts(line_names(8), points)
}

/// Index of the line of C13 standing for line `i` of the second copy of C8.
pub fn second_copy_line(i: usize) -> usize {
    if i <= 2 {
        i
    } else {
        i + 5
    }
}

/// Two copies of C8 glued along `l0, l1, l2` and the point `p012`.
///
/// The second copy's lines `l'3..l'7` become `l8..l12` and its points are
/// primed (`p'034`, ...). The 25 new double points `p''ij` join `l_i` with
/// `l'_j` for `i, j` in `3..=7`.
pub fn glue_c13() -> Configuration {
    let mut points: Vec<Point> = maclane_c8().points().to_vec();
    for (name, lines) in C8_POINTS.iter().skip(1) {
        let mut on: Vec<usize> = lines.iter().map(|&l| second_copy_line(l)).collect();
        on.sort_unstable();
        points.push(Point {
            name: format!("p'{}", &name[1..]),
            lines: on,
        });
    }
    for i in 3..=7 {
        for j in 3..=7 {
            points.push(Point {
                name: format!("p''{i}{j}"),
                lines: vec![i, second_copy_line(j)],
            });
        }
    }
    Configuration::from_parts(line_names(13), points)
}

/// The partition of C13's lines into `{l0}, {l1}, {l2}` and the pairs
/// `{l_i, l_{i+5}}`.
pub fn c13_partition() -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = (0..3).map(|i| vec![i]).collect();
    blocks.extend((3..=7).map(|i| vec![i, i + 5]));
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::IncidenceIndex;

    #[test]
    fn c8_counts() {
        let c = maclane_c8();
        assert_eq!(c.line_count(), 8);
        assert_eq!(c.point_count(), 12);
        let r = c.validate();
        assert!(r.valid && r.non_degenerate, "{r}");
        let idx = IncidenceIndex::new(&c);
        assert_eq!(idx.p0().len(), 8);
        // five triple points and three double points off infinity
        assert_eq!(idx.pairs().len(), 5 * 3 + 3 * 2);
        let names: Vec<&str> = idx.p0().iter().map(|&p| c.points()[p].name.as_str()).collect();
        assert_eq!(names, ["p135", "p147", "p16", "p23", "p246", "p257", "p367", "p45"]);
    }

    #[test]
    fn c8_with_missing_incidence_breaks_axiom_one() {
        let c = maclane_c8();
        let mut pts = c.points().to_vec();
        // drop l5 from p135: l3, l5 and l1, l5 lose their meeting point
        pts[4].lines = vec![1, 3];
        let broken = Configuration::from_parts(c.lines().to_vec(), pts);
        let r = broken.validate();
        assert!(!r.valid);
        let pairs: Vec<[String; 2]> = r
            .violations
            .iter()
            .filter_map(|v| match v {
                crate::config::Violation::LinePair { lines, common_points } => {
                    assert!(common_points.is_empty());
                    Some(lines.clone())
                }
                _ => None,
            })
            .collect();
        assert_eq!(
            pairs,
            vec![["l1".to_string(), "l5".to_string()], ["l3".to_string(), "l5".to_string()]]
        );
    }

    #[test]
    fn c13_counts() {
        let c = glue_c13();
        assert_eq!(c.line_count(), 13);
        assert_eq!(c.point_count(), 12 + 11 + 25);
        assert!(c.validate().valid);
        let idx = IncidenceIndex::new(&c);
        assert_eq!(idx.p0().len(), 8 + 8 + 25);
    }
}
