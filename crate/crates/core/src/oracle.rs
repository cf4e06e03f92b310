//! Brute-force cross-checks that share no code with the Smith-form route.
//!
//! `cokernel_by_enumeration` lists every element of `((Z/n)^x)^c`, closes the
//! image generators into a subgroup coset by coset, and reads the
//! invariant factors of the quotient off its element-order statistics.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::zlattice::{factorize, gcd_u64};

struct Target {
    n: u64,
    c: usize,
    units: Vec<u64>,
    index: Vec<u32>,
}

impl Target {
    fn encode(&self, v: &[u64]) -> u64 {
        let base = self.units.len() as u64;
        v.iter()
            .rev()
            .fold(0, |acc, &r| acc * base + self.index[(r % self.n) as usize] as u64)
    }

    /// Coordinatewise product of two encoded tuples.
    fn mul(&self, mut a: u64, mut b: u64) -> u64 {
        let base = self.units.len() as u64;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.c {
            let (x, y) = (self.units[(a % base) as usize], self.units[(b % base) as usize]);
            out += place * self.index[(x * y % self.n) as usize] as u64;
            place *= base;
            a /= base;
            b /= base;
        }
        out
    }
}

/// Invariant factors (all `>= 2`, divisibility chain) of
/// `((Z/n)^x)^c / <generators>`, by explicit enumeration of the target.
pub fn cokernel_by_enumeration(n: u64, c: usize, generators: &[Vec<u64>], cap: u64) -> Result<Vec<u64>> {
    let units: Vec<u64> = (0..n).filter(|&r| gcd_u64(r, n) == 1).collect();
    let order = (units.len() as u64)
        .checked_pow(c as u32)
        .filter(|&o| o <= cap)
        .ok_or_else(|| Error::budget("target order for enumeration", cap))?;
    let mut index = vec![u32::MAX; n as usize];
    for (i, &u) in units.iter().enumerate() {
        index[u as usize] = i as u32;
    }
    let t = Target { n, c, units, index };

    let mut gens = Vec::new();
    for g in generators {
        if g.len() != c || g.iter().any(|&x| gcd_u64(x % n, n) != 1) {
            return Err(Error::NotAUnit {
                value: g.iter().copied().find(|&x| gcd_u64(x % n, n) != 1).unwrap_or(0),
                modulus: n,
            });
        }
        gens.push(t.encode(g));
    }

    // the target is abelian, so <H, g> is the union of the cosets H g^k
    let identity = t.encode(&vec![1 % n; c]);
    let mut in_h = vec![false; order as usize];
    in_h[identity as usize] = true;
    let mut h_list = vec![identity];
    for &g in &gens {
        if in_h[g as usize] {
            continue;
        }
        let base = h_list.clone();
        let mut p = g;
        while !in_h[p as usize] {
            for &h in &base {
                let x = t.mul(h, p);
                in_h[x as usize] = true;
                h_list.push(x);
            }
            p = t.mul(p, g);
        }
    }
    let h_order = h_list.len() as u64;

    let q_order = order / h_order;
    // order of each element's coset
    let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
    for x in 0..order {
        let mut k = 1;
        let mut p = x;
        while !in_h[p as usize] {
            p = t.mul(p, x);
            k += 1;
        }
        *histogram.entry(k).or_default() += 1;
    }
    // number of quotient elements killed by m
    let killed = |m: u64| -> u64 {
        histogram
            .iter()
            .filter(|(&k, _)| m.is_multiple_of(k))
            .map(|(_, &cnt)| cnt)
            .sum::<u64>()
            / h_order
    };

    // for each prime, the exponents of its cyclic primary factors, descending
    let mut primary: Vec<(u64, Vec<u32>)> = Vec::new();
    for (p, e) in factorize(q_order) {
        let mut at_least = Vec::new(); // at_least[j-1] = #factors of order >= p^j
        let mut prev = 1u64;
        for j in 1..=e {
            let cur = killed(p.pow(j));
            let mut r = 0;
            let mut ratio = cur / prev;
            while ratio > 1 {
                ratio /= p;
                r += 1;
            }
            at_least.push(r);
            prev = cur;
        }
        let mut exps = Vec::new();
        for j in (1..=e).rev() {
            let exact = at_least[j as usize - 1]
                - at_least.get(j as usize).copied().unwrap_or(0);
            exps.extend(std::iter::repeat_n(j, exact as usize));
        }
        primary.push((p, exps));
    }
    let len = primary.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..len)
        .map(|i| {
            primary
                .iter()
                .map(|(p, e)| e.get(i).map_or(1, |&j| p.pow(j)))
                .product()
        })
        .collect();
    factors.reverse();
    Ok(factors)
}
