//! Shared generators for the integration suites: proptest strategies for
//! small exact polynomials/fields, and a deterministic xorshift generator
//! for the fixed-count randomized acceptance runs.

#![allow(dead_code)]

use liesym::poly::{rat, Monomial, MultiPoly, Rational};
use liesym::VectorField;
use proptest::prelude::*;

pub fn poly_of(nvars: usize, terms: &[(&[u32], i64)]) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    for (e, c) in terms {
        out.add_term(Monomial(e.to_vec()), rat(*c));
    }
    out
}

pub fn field_of(nvars: usize, comps: &[&[(&[u32], i64)]]) -> VectorField {
    VectorField::new(nvars, comps.iter().map(|t| poly_of(nvars, t)).collect()).unwrap()
}

fn arb_monomial(nvars: usize, max_deg: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_deg, nvars).prop_map(move |mut e| {
        // clamp total degree to max_deg by zeroing extra from the right
        let mut total: u32 = e.iter().sum();
        for x in e.iter_mut().rev() {
            if total <= max_deg {
                break;
            }
            let drop = (*x).min(total - max_deg);
            *x -= drop;
            total -= drop;
        }
        Monomial(e)
    })
}

pub fn arb_poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((arb_monomial(nvars, max_deg), -4i64..=4), 0..=max_terms).prop_map(
        move |terms| {
            let mut p = MultiPoly::zero(nvars);
            for (m, c) in terms {
                p.add_term(m, rat(c));
            }
            p
        },
    )
}

pub fn arb_field(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = VectorField> {
    proptest::collection::vec(arb_poly(nvars, max_deg, max_terms), nvars)
        .prop_map(move |comps| VectorField::new(nvars, comps).unwrap())
}

/// Deterministic xorshift64*; used where a suite pins an exact case count.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform in lo..=hi.
    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    pub fn rational(&mut self, lo: i64, hi: i64) -> Rational {
        rat(self.int(lo, hi))
    }

    pub fn poly(&mut self, nvars: usize, max_deg: u32, terms: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(nvars);
        for _ in 0..terms {
            let mut exps = vec![0u32; nvars];
            let deg = self.int(0, max_deg as i64) as u32;
            for _ in 0..deg {
                let v = self.int(0, nvars as i64 - 1) as usize;
                exps[v] += 1;
            }
            p.add_term(Monomial(exps), self.rational(-4, 4));
        }
        p
    }

    pub fn field(&mut self, nvars: usize, max_deg: u32, terms: usize) -> VectorField {
        let comps = (0..nvars).map(|_| self.poly(nvars, max_deg, terms)).collect();
        VectorField::new(nvars, comps).unwrap()
    }
}
