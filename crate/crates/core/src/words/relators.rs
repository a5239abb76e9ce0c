use num_bigint::BigInt;
use num_traits::Zero;

use super::gmap::GMap;
use super::lyndon::{lie_coords, pair_index, LieBasis};
use super::magnus::magnus;
use super::word::Word;
use crate::config::{Configuration, IncidenceIndex};
use crate::error::{Error, Result};

/// The relator `r(i, p)` of the presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub line: usize,
    pub point: usize,
    pub word: Word,
}

/// Given the conjugates `w_{i_1}(p), ..., w_{i_k}(p)` of the lines through a
/// point in ascending line order, returns `r(i_1, p), ..., r(i_k, p)` where
/// `r(i_α) = c_{α-1}^{-1} c_α` and `c_α` is the cyclic product
/// `w_{i_α} w_{i_{α-1}} ... w_{i_1} w_{i_k} ... w_{i_{α+1}}`.
pub fn point_relators(conjugates: &[Word]) -> Vec<Word> {
    let k = conjugates.len();
    let c = |alpha: usize| -> Word {
        // alpha in 1..=k; positions are 0-based
        let order = (0..alpha).rev().chain((alpha..k).rev());
        Word::product(order.map(|j| &conjugates[j]))
    };
    let cs: Vec<Word> = (1..=k).map(c).collect();
    (0..k)
        .map(|a| {
            let prev = if a == 0 { &cs[k - 1] } else { &cs[a - 1] };
            prev.inverse().mul(&cs[a])
        })
        .collect()
}

/// The cyclic products `c_1(p), ..., c_k(p)`.
pub fn cyclic_products(conjugates: &[Word]) -> Vec<Word> {
    let k = conjugates.len();
    (1..=k)
        .map(|alpha| Word::product((0..alpha).rev().chain((alpha..k).rev()).map(|j| &conjugates[j])))
        .collect()
}

fn conjugates_at(c: &Configuration, index: &IncidenceIndex, g: &GMap, p: usize) -> Vec<Word> {
    c.points()[p]
        .lines
        .iter()
        .map(|&i| {
            let pair = index.pair_index(i, p).expect("affine point");
            Word::generator(i).conjugate_by(g.get(pair))
        })
        .collect()
}

/// Relators `r(i, p)` for every affine point `p` and every line `i` through
/// it except the smallest, in incidence-pair order.
pub fn relators_from_g(c: &Configuration, index: &IncidenceIndex, g: &GMap) -> Vec<Relator> {
    let mut out = Vec::new();
    for &p in index.p0() {
        let rs = point_relators(&conjugates_at(c, index, g, p));
        for (&i, r) in c.points()[p].lines.iter().zip(rs).skip(1) {
            out.push(Relator {
                line: i,
                point: p,
                word: r,
            });
        }
    }
    out
}

/// All `k` relators at each point (including the dependent one for the
/// smallest line), for checking the product identity.
pub fn all_point_relators(c: &Configuration, index: &IncidenceIndex, g: &GMap) -> Vec<(usize, Vec<Word>)> {
    index
        .p0()
        .iter()
        .map(|&p| (p, point_relators(&conjugates_at(c, index, g, p))))
        .collect()
}

/// `r̄(i, p) = [x_i, Σ_{j on p} x_j]` in `L_2` coordinates.
pub fn expected_degree_two(c: &Configuration, line: usize, point: usize) -> Vec<BigInt> {
    let n = c.n();
    let mut v = vec![BigInt::zero(); n * (n - 1) / 2];
    for &j in &c.points()[point].lines {
        if j == line {
            continue;
        }
        let (a, b) = (line - 1, j - 1);
        if a < b {
            v[pair_index(a, b, n)] += 1;
        } else {
            v[pair_index(b, a, n)] -= 1;
        }
    }
    v
}

/// Why a relator set fails to be admissible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdmissibilityFailure {
    NotInCommutator { line: usize, point: usize },
    WrongImage { line: usize, point: usize },
    NotLie { line: usize, point: usize },
}

/// Every relator must lie in `γ_2 F` with degree-2 image `r̄(i, p)`.
pub fn admissibility_failures(c: &Configuration, relators: &[Relator]) -> Vec<AdmissibilityFailure> {
    let n = c.n();
    let basis = LieBasis::new(n, 2);
    let mut out = Vec::new();
    for r in relators {
        let s = magnus(&r.word, n);
        match lie_coords(&s, 2, &basis) {
            Err(Error::NotInLowerCentralTerm(_)) => out.push(AdmissibilityFailure::NotInCommutator {
                line: r.line,
                point: r.point,
            }),
            Err(_) => out.push(AdmissibilityFailure::NotLie {
                line: r.line,
                point: r.point,
            }),
            Ok(coords) => {
                if coords != expected_degree_two(c, r.line, r.point) {
                    out.push(AdmissibilityFailure::WrongImage {
                        line: r.line,
                        point: r.point,
                    });
                }
            }
        }
    }
    out
}

pub fn admissibility_check(c: &Configuration, relators: &[Relator]) -> bool {
    admissibility_failures(c, relators).is_empty()
}

/// A relator list written in bracket-set notation.
#[derive(Clone, Debug)]
pub struct BracketList {
    /// Relators obtained by expanding each bracket literally.
    pub relators: Vec<Relator>,
    /// The conjugators read off the bracket entries.
    pub g: GMap,
}

/// Parses one bracket per line, e.g. `[w7, w5, w5^-1 w2 w5]`, where the
/// entries are `w_{i_k}(p), ..., w_{i_1}(p)` for the lines through one
/// affine point in descending order, and the bracket stands for the set
/// `{r(i_2, p), ..., r(i_k, p)}`. Blank lines and `#` comments are skipped.
pub fn parse_bracket_list(c: &Configuration, index: &IncidenceIndex, text: &str) -> Result<BracketList> {
    let mut g = GMap::identity(index);
    let mut relators = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim().trim_end_matches([',', ';']).trim();
        if line.is_empty() {
            continue;
        }
        let inner = line
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected a bracket: {line:?}")))?;
        let mut entries = Vec::new();
        for e in inner.split(',') {
            let w: Word = e.parse()?;
            let (i, conj) = w
                .as_conjugate_of_generator()
                .ok_or_else(|| Error::Parse(format!("{e:?} is not a conjugate of a generator")))?;
            entries.push((i, conj, w));
        }
        entries.reverse();
        let lines: Vec<usize> = entries.iter().map(|(i, _, _)| *i).collect();
        if lines.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!("entries of {line:?} are not in descending line order")));
        }
        let p = index
            .p0()
            .iter()
            .copied()
            .find(|&p| c.points()[p].lines == lines)
            .ok_or_else(|| Error::Domain(format!("no affine point lies on exactly the lines of {line:?}")))?;
        for (i, conj, _) in &entries {
            g.set(index.pair_index(*i, p).expect("affine pair"), conj.clone());
        }
        let words: Vec<Word> = entries.iter().map(|(_, _, w)| w.clone()).collect();
        for (&i, r) in lines.iter().zip(point_relators(&words)).skip(1) {
            relators.push(Relator {
                line: i,
                point: p,
                word: r,
            });
        }
    }
    Ok(BracketList { relators, g })
}

/// Compares two relator lists as sets after free reduction, point by point.
pub fn same_relator_sets(a: &[Relator], b: &[Relator]) -> bool {
    let key = |rs: &[Relator]| {
        let mut v: Vec<(usize, usize, Word)> = rs.iter().map(|r| (r.point, r.line, r.word.clone())).collect();
        v.sort();
        v
    };
    key(a) == key(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::maclane_c8;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn double_point_trivial_g() {
        // r(j, p) for p = l_i ∩ l_j with trivial g is [w_j, w_i w_j]... in
        // the cyclic-product form c_2 = w_j w_i
        let rs = point_relators(&[w("w1"), w("w2")]);
        assert_eq!(rs[1], Word::commutator(&w("w2"), &w("w2 w1")));
        assert!(Word::product(&rs).is_identity());
    }

    #[test]
    fn relators_are_commutators() {
        let ws = [w("w1"), w("w3^-1 w2 w3"), w("w4")];
        let rs = point_relators(&ws);
        let cs = cyclic_products(&ws);
        for a in 0..3 {
            assert_eq!(rs[a], Word::commutator(&ws[a], &cs[a]));
        }
    }

    #[test]
    fn c8_trivial_g_is_admissible() {
        let c = maclane_c8();
        let idx = IncidenceIndex::new(&c);
        let rs = relators_from_g(&c, &idx, &GMap::identity(&idx));
        assert_eq!(rs.len(), 13);
        assert!(admissibility_check(&c, &rs));
    }

    #[test]
    fn sign_flip_is_not_admissible() {
        let c = maclane_c8();
        let idx = IncidenceIndex::new(&c);
        let mut rs = relators_from_g(&c, &idx, &GMap::identity(&idx));
        rs[0].word = rs[0].word.inverse();
        assert_eq!(
            admissibility_failures(&c, &rs),
            vec![AdmissibilityFailure::WrongImage {
                line: rs[0].line,
                point: rs[0].point
            }]
        );
        rs[0].word = w("w1");
        assert!(matches!(
            admissibility_failures(&c, &rs)[0],
            AdmissibilityFailure::NotInCommutator { .. }
        ));
    }

    #[test]
    fn bracket_list_rejects_garbage() {
        let c = maclane_c8();
        let idx = IncidenceIndex::new(&c);
        assert!(parse_bracket_list(&c, &idx, "[w1 w2, w3]").is_err());
        assert!(parse_bracket_list(&c, &idx, "[w1, w3, w5]").is_err());
        assert!(parse_bracket_list(&c, &idx, "[w7, w1]").is_err());
        assert!(parse_bracket_list(&c, &idx, "w5, w3, w1").is_err());
    }
}
