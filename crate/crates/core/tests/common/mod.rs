#![allow(dead_code)]

use std::sync::OnceLock;

use arrangement_kappa::config::{maclane_c8, IncidenceIndex};
use arrangement_kappa::lcs::KappaContext;
use arrangement_kappa::words::{AbelianGMap, Word};
use num_bigint::BigInt;
use rand::Rng;

pub fn c8() -> &'static KappaContext {
    static CTX: OnceLock<KappaContext> = OnceLock::new();
    CTX.get_or_init(|| KappaContext::new(maclane_c8()).expect("C8 is torsion-free"))
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let text: Vec<String> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=n);
            if rng.gen_bool(0.5) {
                format!("w{g}")
            } else {
                format!("w{g}^-1")
            }
        })
        .collect();
    text.join(" ").parse().expect("well-formed word")
}

pub fn random_abelian<R: Rng>(rng: &mut R, index: &IncidenceIndex, range: i64) -> AbelianGMap {
    let n = index.n();
    let flat: Vec<BigInt> = (0..n * index.pairs().len())
        .map(|_| BigInt::from(rng.gen_range(-range..=range)))
        .collect();
    AbelianGMap::from_flat(n, &flat)
}
