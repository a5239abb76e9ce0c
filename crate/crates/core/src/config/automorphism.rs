use std::collections::BTreeSet;

use serde::Serialize;

use super::configuration::Configuration;
use crate::error::{Error, Result};

/// A pair of permutations of lines and points preserving incidence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConfigAutomorphism {
    pub line_perm: Vec<usize>,
    pub point_perm: Vec<usize>,
}

impl ConfigAutomorphism {
    pub fn identity(c: &Configuration) -> Self {
        ConfigAutomorphism {
            line_perm: (0..c.line_count()).collect(),
            point_perm: (0..c.point_count()).collect(),
        }
    }

    /// Completes a line permutation to an automorphism; fails if the
    /// permutation does not preserve incidence.
    pub fn from_line_perm(c: &Configuration, line_perm: Vec<usize>) -> Result<Self> {
        induced_point_perm(c, c, &line_perm)
            .map(|point_perm| ConfigAutomorphism { line_perm, point_perm })
            .ok_or_else(|| Error::Configuration("line permutation does not preserve incidence".into()))
    }

    /// Builds a line permutation from disjoint cycles, fixing everything else.
    pub fn from_cycles(c: &Configuration, cycles: &[&[usize]]) -> Result<Self> {
        let mut perm: Vec<usize> = (0..c.line_count()).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                perm[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_line_perm(c, perm)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Self) -> Self {
        ConfigAutomorphism {
            line_perm: other.line_perm.iter().map(|&l| self.line_perm[l]).collect(),
            point_perm: other.point_perm.iter().map(|&p| self.point_perm[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut line_perm = vec![0; self.line_perm.len()];
        for (a, &b) in self.line_perm.iter().enumerate() {
            line_perm[b] = a;
        }
        let mut point_perm = vec![0; self.point_perm.len()];
        for (a, &b) in self.point_perm.iter().enumerate() {
            point_perm[b] = a;
        }
        ConfigAutomorphism { line_perm, point_perm }
    }

    pub fn is_identity(&self) -> bool {
        self.line_perm.iter().enumerate().all(|(a, &b)| a == b)
    }

    pub fn preserves_incidence(&self, c: &Configuration) -> bool {
        (0..c.line_count()).all(|l| {
            (0..c.point_count()).all(|p| c.is_incident(l, p) == c.is_incident(self.line_perm[l], self.point_perm[p]))
        })
    }

    pub fn order(&self) -> usize {
        let mut g = self.clone();
        let mut k = 1;
        while !g.is_identity() {
            g = g.compose(self);
            k += 1;
        }
        k
    }
}

/// The point permutation forced by a line bijection `a -> b`, if the
/// bijection maps every point's line set onto some point's line set.
fn induced_point_perm(a: &Configuration, b: &Configuration, line_map: &[usize]) -> Option<Vec<usize>> {
    if line_map.len() != a.line_count() || a.point_count() != b.point_count() {
        return None;
    }
    let mut used = vec![false; b.point_count()];
    let mut perm = Vec::with_capacity(a.point_count());
    for p in a.points() {
        let mut image: Vec<usize> = p.lines.iter().map(|&l| line_map[l]).collect();
        image.sort_unstable();
        let q = b.points().iter().position(|q| q.lines == image)?;
        if used[q] {
            return None;
        }
        used[q] = true;
        perm.push(q);
    }
    Some(perm)
}

/// Per-line profile: sorted sizes of the points on the line.
fn profiles(c: &Configuration) -> Vec<Vec<usize>> {
    (0..c.line_count())
        .map(|l| {
            let mut sizes: Vec<usize> = c.points_on(l).iter().map(|&p| c.points()[p].lines.len()).collect();
            sizes.sort_unstable();
            sizes
        })
        .collect()
}

fn meet_table(c: &Configuration) -> Vec<Vec<Option<usize>>> {
    let n = c.line_count();
    (0..n)
        .map(|a| (0..n).map(|b| if a == b { None } else { c.meet(a, b) }).collect())
        .collect()
}

/// All incidence isomorphisms from `a` to `b`, by backtracking over line
/// bijections. Both configurations must be valid.
pub fn isomorphisms(a: &Configuration, b: &Configuration) -> Vec<ConfigAutomorphism> {
    let n = a.line_count();
    if n != b.line_count() || a.point_count() != b.point_count() {
        return Vec::new();
    }
    let pa = profiles(a);
    let pb = profiles(b);
    let ma = meet_table(a);
    let mb = meet_table(b);
    let mut out = Vec::new();
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(&pa, &pb, &ma, &mb, &mut map, &mut used, &mut |line_map| {
        if let Some(point_perm) = induced_point_perm(a, b, line_map) {
            out.push(ConfigAutomorphism {
                line_perm: line_map.to_vec(),
                point_perm,
            });
        }
    });
    out.sort();
    out
}

fn search(
    pa: &[Vec<usize>],
    pb: &[Vec<usize>],
    ma: &[Vec<Option<usize>>],
    mb: &[Vec<Option<usize>>],
    map: &mut Vec<usize>,
    used: &mut [bool],
    emit: &mut dyn FnMut(&[usize]),
) {
    let k = map.len();
    if k == pa.len() {
        emit(map);
        return;
    }
    for cand in 0..pb.len() {
        if used[cand] || pa[k] != pb[cand] {
            continue;
        }
        map.push(cand);
        if consistent(ma, mb, map) {
            used[cand] = true;
            search(pa, pb, ma, mb, map, used, emit);
            used[cand] = false;
        }
        map.pop();
    }
}

/// The newest line must preserve which line pairs share a meeting point.
fn consistent(ma: &[Vec<Option<usize>>], mb: &[Vec<Option<usize>>], map: &[usize]) -> bool {
    let k = map.len() - 1;
    for c in 0..k {
        let q = ma[k][c];
        let q2 = mb[map[k]][map[c]];
        for e in 0..=k {
            for f in 0..e {
                if (e, f) == (k, c) {
                    continue;
                }
                if (ma[e][f] == q) != (mb[map[e]][map[f]] == q2) {
                    return false;
                }
            }
        }
    }
    true
}

/// The full automorphism group of a valid configuration.
pub fn automorphisms(c: &Configuration) -> Vec<ConfigAutomorphism> {
    isomorphisms(c, c)
}

/// True iff every automorphism maps each block of `blocks` onto a block.
pub fn partition_check(autos: &[ConfigAutomorphism], blocks: &[Vec<usize>]) -> bool {
    let set: BTreeSet<BTreeSet<usize>> = blocks.iter().map(|b| b.iter().copied().collect()).collect();
    autos.iter().all(|g| {
        blocks.iter().all(|b| {
            let image: BTreeSet<usize> = b.iter().map(|&l| g.line_perm[l]).collect();
            set.contains(&image)
        })
    })
}

/// Closure under composition and inverses, identity included.
pub fn is_group(elements: &[ConfigAutomorphism]) -> bool {
    let set: BTreeSet<&ConfigAutomorphism> = elements.iter().collect();
    elements.iter().any(ConfigAutomorphism::is_identity)
        && elements.iter().all(|g| {
            set.contains(&g.inverse()) && elements.iter().all(|h| set.contains(&g.compose(h)))
        })
}

/// Coarse structural invariants of a finite permutation group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub order: usize,
    pub center_order: usize,
    pub involutions: usize,
    pub central_quotient_abelian: bool,
}

impl GroupSummary {
    pub fn of(elements: &[ConfigAutomorphism]) -> Self {
        let center: Vec<&ConfigAutomorphism> = elements
            .iter()
            .filter(|g| elements.iter().all(|h| g.compose(h) == h.compose(g)))
            .collect();
        let involutions = elements.iter().filter(|g| g.order() == 2).count();
        // G/Z is abelian iff every commutator is central
        let central_quotient_abelian = elements.iter().all(|g| {
            elements.iter().all(|h| {
                let comm = g.inverse().compose(&h.inverse()).compose(g).compose(h);
                center.contains(&&comm)
            })
        });
        GroupSummary {
            order: elements.len(),
            center_order: center.len(),
            involutions,
            central_quotient_abelian,
        }
    }

    /// Order 12, center of order 2 with non-abelian quotient (hence S3), and
    /// seven involutions; this rules out the dicyclic group of order 12.
    pub fn is_s3_times_z2(&self) -> bool {
        self.order == 12 && self.center_order == 2 && !self.central_quotient_abelian && self.involutions == 7
    }
}
