use serde::Serialize;

use super::FiniteAbelianPresentation;
use crate::error::{Error, Result};

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut r = 1u128 % m128;
    let mut b = (b % m) as u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m128;
        }
        b = b * b % m128;
        e >>= 1;
    }
    r as u64
}

fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(m as i128) as u64
}

/// Smallest generator of the cyclic group `(Z/p^k)^x`, `p` odd.
fn primitive_root(p: u64, q: u64) -> u64 {
    let phi = q / p * (p - 1);
    let primes: Vec<u64> = factorize(phi).into_iter().map(|(r, _)| r).collect();
    (2..q)
        .find(|&g| g % p != 0 && primes.iter().all(|&r| pow_mod(g, phi / r, q) != 1))
        .expect("(Z/p^k)^x is cyclic for odd p")
}

/// One cyclic factor of `(Z/n)^x`, lifted to a residue modulo `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicFactor {
    /// The prime power this factor comes from.
    pub prime_power: u64,
    pub order: u64,
    /// Residue modulo `n` generating this factor; it is `1` modulo every
    /// other prime power of `n`.
    pub generator: u64,
}

/// `(Z/n)^x` as a product of cyclic groups with a tabulated discrete log.
///
/// Built prime power by prime power: `(Z/p^k)^x` is cyclic for odd `p`;
/// `(Z/2)^x` is trivial, `(Z/4)^x = <3>`, and `(Z/2^k)^x = <-1> x <3>` for
/// `k >= 3`.
#[derive(Clone, Debug)]
pub struct UnitGroupOfZn {
    modulus: u64,
    factors: Vec<CyclicFactor>,
    presentation: FiniteAbelianPresentation,
    /// Mixed-radix exponent index per residue, `u32::MAX` for non-units.
    table: Vec<u32>,
}

impl UnitGroupOfZn {
    pub fn new(n: u64, modulus_cap: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Internal("modulus must be positive".into()));
        }
        if n > modulus_cap {
            return Err(Error::budget(format!("modulus {n}"), modulus_cap));
        }
        let mut local: Vec<(u64, u64, u64)> = Vec::new(); // (prime power, order, generator mod q)
        for (p, k) in factorize(n) {
            let q = p.pow(k);
            if p == 2 {
                match k {
                    1 => {}
                    2 => local.push((q, 2, 3)),
                    _ => {
                        local.push((q, 2, q - 1));
                        local.push((q, q / 4, 3));
                    }
                }
            } else {
                local.push((q, q / p * (p - 1), primitive_root(p, q)));
            }
        }
        let factors: Vec<CyclicFactor> = local
            .into_iter()
            .map(|(q, order, g)| {
                let rest = n / q;
                // x = g mod q, x = 1 mod n/q
                let t = ((g + q - 1) % q) as u128 * inv_mod(rest % q, q) as u128 % q as u128;
                let generator = ((1 + rest as u128 * t) % n as u128) as u64;
                CyclicFactor {
                    prime_power: q,
                    order,
                    generator,
                }
            })
            .collect();

        let mut table = vec![u32::MAX; n as usize];
        let total: u64 = factors.iter().map(|f| f.order).product();
        for idx in 0..total {
            let mut rem = idx;
            let mut residue = 1 % n;
            for f in &factors {
                let e = rem % f.order;
                rem /= f.order;
                residue = (residue as u128 * pow_mod(f.generator, e, n) as u128 % n as u128) as u64;
            }
            table[residue as usize] = idx as u32;
        }

        let labels = factors
            .iter()
            .map(|f| format!("{} mod {n} (order {})", f.generator, f.order))
            .collect();
        let presentation =
            FiniteAbelianPresentation::from_cyclic_orders(factors.iter().map(|f| f.order), labels);
        Ok(UnitGroupOfZn {
            modulus: n,
            factors,
            presentation,
            table,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn factors(&self) -> &[CyclicFactor] {
        &self.factors
    }

    pub fn presentation(&self) -> &FiniteAbelianPresentation {
        &self.presentation
    }

    /// Euler's phi of the modulus.
    pub fn order(&self) -> u64 {
        self.factors.iter().map(|f| f.order).product()
    }

    pub fn concrete_generators(&self) -> Vec<u64> {
        self.factors.iter().map(|f| f.generator).collect()
    }

    pub fn is_unit(&self, residue: u64) -> bool {
        self.table[(residue % self.modulus) as usize] != u32::MAX
    }

    /// Exponents of `u` with respect to `concrete_generators`, each reduced
    /// modulo its factor order.
    pub fn dlog(&self, u: u64) -> Result<Vec<u64>> {
        let idx = self.table[(u % self.modulus) as usize];
        if idx == u32::MAX {
            return Err(Error::NotAUnit {
                value: u,
                modulus: self.modulus,
            });
        }
        let mut rem = idx as u64;
        Ok(self
            .factors
            .iter()
            .map(|f| {
                let e = rem % f.order;
                rem /= f.order;
                e
            })
            .collect())
    }

    /// Inverse of `dlog`.
    pub fn exp(&self, exponents: &[u64]) -> u64 {
        self.factors
            .iter()
            .zip(exponents)
            .fold(1 % self.modulus, |acc, (f, &e)| {
                (acc as u128 * pow_mod(f.generator, e, self.modulus) as u128 % self.modulus as u128)
                    as u64
            })
    }

    /// All units, ascending.
    pub fn units(&self) -> Vec<u64> {
        (0..self.modulus).filter(|&u| self.is_unit(u)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi(n: u64) -> u64 {
        (0..n).filter(|&u| gcd_u64(u, n) == 1).count() as u64
    }

    #[test]
    fn small_examples() {
        let u2 = UnitGroupOfZn::new(2, 100).unwrap();
        assert_eq!(u2.order(), 1);
        assert!(u2.presentation().invariant_factors.is_empty());
        let u5 = UnitGroupOfZn::new(5, 100).unwrap();
        assert_eq!(u5.concrete_generators(), vec![2]);
        assert_eq!(u5.presentation().invariant_factors, vec![4]);
        let u8 = UnitGroupOfZn::new(8, 100).unwrap();
        assert_eq!(u8.concrete_generators(), vec![7, 3]);
        assert_eq!(u8.presentation().invariant_factors, vec![2, 2]);
        let u1 = UnitGroupOfZn::new(1, 100).unwrap();
        assert_eq!(u1.order(), 1);
        assert_eq!(u1.dlog(0).unwrap(), Vec::<u64>::new());
    }

    #[test]
    fn budget_and_non_units() {
        assert!(matches!(UnitGroupOfZn::new(101, 100), Err(Error::BudgetExceeded { .. })));
        let u = UnitGroupOfZn::new(12, 100).unwrap();
        assert!(matches!(u.dlog(4), Err(Error::NotAUnit { value: 4, modulus: 12 })));
    }

    #[test]
    fn dlog_is_an_isomorphism_up_to_100() {
        for n in 1..=100u64 {
            let g = UnitGroupOfZn::new(n, 1000).unwrap();
            assert_eq!(g.order(), phi(n), "phi({n})");
            assert_eq!(g.dlog(1).unwrap(), vec![0; g.factors().len()]);
            let units = g.units();
            assert_eq!(units.len() as u64, phi(n));
            let mut seen = std::collections::HashSet::new();
            for &u in &units {
                let e = g.dlog(u).unwrap();
                assert!(seen.insert(e.clone()), "dlog not injective mod {n}");
                assert_eq!(g.exp(&e), u);
                for &v in &units {
                    let uv = u * v % n;
                    let sum: Vec<u64> = e
                        .iter()
                        .zip(g.dlog(v).unwrap())
                        .zip(g.factors())
                        .map(|((a, b), f)| (a + b) % f.order)
                        .collect();
                    assert_eq!(g.dlog(uv).unwrap(), sum, "n={n} u={u} v={v}");
                }
            }
        }
    }

    #[test]
    fn dlog_is_multiplicative_for_large_moduli() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in [1009u64, 2 * 3 * 5 * 7 * 11 * 13, 4096, 3u64.pow(8), 999_983] {
            let g = UnitGroupOfZn::new(n, 1_000_000).unwrap();
            for _ in 0..200 {
                let u = loop {
                    let x = rng.gen_range(1..n);
                    if gcd_u64(x, n) == 1 {
                        break x;
                    }
                };
                let v = loop {
                    let x = rng.gen_range(1..n);
                    if gcd_u64(x, n) == 1 {
                        break x;
                    }
                };
                let sum: Vec<u64> = g
                    .dlog(u)
                    .unwrap()
                    .iter()
                    .zip(g.dlog(v).unwrap())
                    .zip(g.factors())
                    .map(|((a, b), f)| (a + b) % f.order)
                    .collect();
                assert_eq!(g.dlog((u as u128 * v as u128 % n as u128) as u64).unwrap(), sum);
            }
        }
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }
}
