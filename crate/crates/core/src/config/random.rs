use rand::seq::SliceRandom;
use rand::Rng;

use super::configuration::{Configuration, Point};

/// A random valid configuration on `lines` lines: up to `multiple_points`
/// attempts at placing a point on several lines (skipped when two of the
/// chosen lines already meet), all remaining line pairs meeting in double
/// points.
pub fn random_configuration<R: Rng>(lines: usize, multiple_points: usize, rng: &mut R) -> Configuration {
    let mut met = vec![vec![false; lines]; lines];
    let mut points = Vec::new();
    let all: Vec<usize> = (0..lines).collect();
    for _ in 0..multiple_points {
        let k = rng.gen_range(3..=lines.clamp(3, 4));
        if k > lines {
            break;
        }
        let mut chosen: Vec<usize> = all.choose_multiple(rng, k).copied().collect();
        chosen.sort_unstable();
        let clash = chosen
            .iter()
            .enumerate()
            .any(|(x, &a)| chosen[x + 1..].iter().any(|&b| met[a][b]));
        if clash {
            continue;
        }
        for (x, &a) in chosen.iter().enumerate() {
            for &b in &chosen[x + 1..] {
                met[a][b] = true;
                met[b][a] = true;
            }
        }
        points.push(chosen);
    }
    for a in 0..lines {
        for b in a + 1..lines {
            if !met[a][b] {
                points.push(vec![a, b]);
            }
        }
    }
    let names = (0..lines).map(|i| format!("l{i}")).collect();
    let points = points
        .into_iter()
        .map(|on| Point {
            name: format!("p{}", on.iter().map(|l| format!("_{l}")).collect::<String>()),
            lines: on,
        })
        .collect();
    Configuration::from_parts(names, points)
}
