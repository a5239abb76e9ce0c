use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::word::Word;
use crate::config::{Configuration, IncidenceIndex};
use crate::error::{Error, Result};

/// Conjugating elements `g(i, p)`, one per incidence pair; the presentation
/// uses `w_i(p) = g(i,p)^{-1} w_i g(i,p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GMap {
    values: Vec<Word>,
}

impl GMap {
    pub fn identity(index: &IncidenceIndex) -> Self {
        GMap {
            values: vec![Word::identity(); index.pairs().len()],
        }
    }

    pub fn from_values(values: Vec<Word>) -> Self {
        GMap { values }
    }

    /// Values in incidence-pair order.
    pub fn values(&self) -> &[Word] {
        &self.values
    }

    pub fn get(&self, pair: usize) -> &Word {
        &self.values[pair]
    }

    pub fn set(&mut self, pair: usize, w: Word) {
        self.values[pair] = w;
    }

    /// Parses `{"(i,point)": "word", ...}`; omitted pairs stay trivial.
    pub fn from_json(c: &Configuration, index: &IncidenceIndex, text: &str) -> Result<Self> {
        let raw: BTreeMap<String, String> = serde_json::from_str(text)?;
        let mut g = GMap::identity(index);
        for (key, word) in raw {
            let pair = parse_pair_key(c, index, &key)?;
            g.values[pair] = word.parse()?;
        }
        Ok(g)
    }

    pub fn to_json(&self, c: &Configuration, index: &IncidenceIndex) -> String {
        let map: BTreeMap<String, String> = self
            .values
            .iter()
            .zip(index.pairs())
            .filter(|(w, _)| !w.is_identity())
            .map(|(w, &(i, p))| (format!("({},{})", i, c.points()[p].name), w.to_string()))
            .collect();
        serde_json::to_string_pretty(&map).expect("serializable")
    }

    /// Exponent sums of every value.
    pub fn abelianize(&self, n: usize) -> AbelianGMap {
        AbelianGMap {
            n,
            values: self.values.iter().map(|w| w.exponent_sums(n)).collect(),
        }
    }
}

/// Resolves `"(i,point)"` to an incidence-pair index.
pub fn parse_pair_key(c: &Configuration, index: &IncidenceIndex, key: &str) -> Result<usize> {
    let inner = key
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("pair key {key:?} is not of the form (i,point)")))?;
    let (i, point) = inner
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("pair key {key:?} has no comma")))?;
    let i: usize = i
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("pair key {key:?}: bad line index")))?;
    let p = c
        .point_index(point.trim())
        .ok_or_else(|| Error::Domain(format!("unknown point in {key:?}")))?;
    index
        .pair_index(i, p)
        .ok_or_else(|| Error::Domain(format!("{key:?} is not an incidence pair off infinity")))
}

/// An element of `A = H^𝒜`: one vector of `H = Z^n` per incidence pair.
///
/// Flattened, pair `k` and coordinate `j` (0-based) sit at `k * n + j`,
/// which is the coordinate system used for `A` throughout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianGMap {
    n: usize,
    #[serde(serialize_with = "serialize_values")]
    values: Vec<Vec<BigInt>>,
}

fn serialize_values<S: serde::Serializer>(v: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let plain: Vec<Vec<String>> = v.iter().map(|x| x.iter().map(ToString::to_string).collect()).collect();
    serde::Serialize::serialize(&plain, s)
}

impl AbelianGMap {
    pub fn zero(n: usize, pairs: usize) -> Self {
        AbelianGMap {
            n,
            values: vec![vec![BigInt::zero(); n]; pairs],
        }
    }

    pub fn from_flat(n: usize, flat: &[BigInt]) -> Self {
        AbelianGMap {
            n,
            values: flat.chunks(n).map(<[BigInt]>::to_vec).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, pair: usize) -> &[BigInt] {
        &self.values[pair]
    }

    pub fn set(&mut self, pair: usize, v: Vec<BigInt>) {
        assert_eq!(v.len(), self.n);
        self.values[pair] = v;
    }

    pub fn flat(&self) -> Vec<BigInt> {
        self.values.iter().flatten().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().flatten().all(Zero::is_zero)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    fn zip(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<Self> {
        if self.n != other.n || self.values.len() != other.values.len() {
            return Err(Error::Domain("maps live on different incidence sets".into()));
        }
        Ok(AbelianGMap {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
                .collect(),
        })
    }

    /// Nonzero values keyed by `(line, point name)`.
    pub fn nonzero(&self, c: &Configuration, index: &IncidenceIndex) -> Vec<((usize, String), Vec<BigInt>)> {
        self.values
            .iter()
            .zip(index.pairs())
            .filter(|(v, _)| v.iter().any(|x| !x.is_zero()))
            .map(|(v, &(i, p))| ((i, c.points()[p].name.clone()), v.clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::maclane_c8;
    use crate::exactlin::int_vec;

    #[test]
    fn json_round_trip_and_abelianize() {
        let c = maclane_c8();
        let idx = IncidenceIndex::new(&c);
        let g = GMap::from_json(&c, &idx, r#"{"(4,p45)": "w6^-1 w3^-1", "(3,p367)": "w6"}"#).unwrap();
        let again = GMap::from_json(&c, &idx, &g.to_json(&c, &idx)).unwrap();
        assert_eq!(g, again);
        let a = g.abelianize(7);
        let p45 = c.point_index("p45").unwrap();
        assert_eq!(a.get(idx.pair_index(4, p45).unwrap()), int_vec(&[0, 0, -1, 0, 0, -1, 0]).as_slice());
    }

    #[test]
    fn identity_abelianizes_to_zero() {
        let c = maclane_c8();
        let idx = IncidenceIndex::new(&c);
        assert!(GMap::identity(&idx).abelianize(7).is_zero());
    }

    #[test]
    fn bad_keys() {
        let c = maclane_c8();
        let idx = IncidenceIndex::new(&c);
        // l1 does not pass through p45
        assert!(matches!(GMap::from_json(&c, &idx, r#"{"(1,p45)": "w1"}"#), Err(Error::Domain(_))));
        // points at infinity carry no pairs
        assert!(matches!(GMap::from_json(&c, &idx, r#"{"(1,p012)": "w1"}"#), Err(Error::Domain(_))));
        assert!(matches!(GMap::from_json(&c, &idx, r#"{"4,p45": "w1"}"#), Err(Error::Parse(_))));
    }
}
