use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{pullback_check, quotient_image, PullbackEvidence};
use crate::burnside::MarksTable;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::zlattice::{factorize, gcd_u64};

pub const PULLBACK_SAMPLES: usize = 1000;
pub const PULLBACK_SEED: u64 = 0x5eed_b0a5;

pub const CONCLUSION: &str = "Br(A(G)) = 0 certified modulo cited axioms";

/// Results used but not verified by the certificate.
pub const CITED_AXIOMS: [&str; 3] = [
    "Br(R) = 0 for every finite commutative ring R (Orzech-Small, Lecture Notes in Math. 389, Cor. 5.9)",
    "Br(Z) = 0 (Hasse-Brauer-Noether local-global principle with Auslander-Goldman Thm. 7.2 and Azumaya's theorem)",
    "Mayer-Vietoris sequence Pic(C') -> Br(A) -> Br(A') (+) Br(C) -> Br(C') for a pullback of commutative rings with C -> C' surjective (Knus-Ojanguren, Thm. 2.2)",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub evidence: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalFactor {
    pub prime: u64,
    pub exponent: u32,
    pub modulus: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub modulus: u64,
    pub classes: usize,
    /// `|A(G)/nC(G)|`.
    pub quotient_ring_size: String,
    pub diagonal_product: String,
    /// `C(G)/nC(G)` is the product of `c` copies of each `Z/p^k`.
    pub local_factors: Vec<LocalFactor>,
    pub pullback: PullbackEvidence,
    pub checks: Vec<Check>,
    pub cited_axioms: Vec<String>,
    pub conclusion: Option<String>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Turns the first failing check into `Error::CheckFailed`.
    pub fn ensure_passed(&self) -> Result<()> {
        match self.checks.iter().find(|c| !c.passed) {
            None => Ok(()),
            Some(c) => Err(Error::CheckFailed {
                check: c.name.clone(),
                detail: c.evidence.clone(),
            }),
        }
    }
}

/// Verifies `Z/n -> prod Z/p^k` is a bijection and that each `Z/p^k` is
/// local, its non-units being exactly the ideal `pZ/p^k`.
fn local_decomposition(n: u64) -> (Vec<LocalFactor>, bool, String) {
    let factors: Vec<LocalFactor> = factorize(n)
        .into_iter()
        .map(|(p, k)| LocalFactor {
            prime: p,
            exponent: k,
            modulus: p.pow(k),
        })
        .collect();
    if n == 1 {
        return (factors, true, "n = 1: C(G)/nC(G) is the zero ring, an empty product of local rings".into());
    }
    let product: u64 = factors.iter().map(|f| f.modulus).product();
    let mut seen = vec![false; n as usize];
    let mut crt_bijective = product == n;
    for r in 0..n {
        let mut idx = 0u64;
        for f in &factors {
            idx = idx * f.modulus + r % f.modulus;
        }
        crt_bijective &= !std::mem::replace(&mut seen[idx as usize], true);
    }
    let local = factors.iter().all(|f| {
        (0..f.modulus).all(|r| (gcd_u64(r, f.modulus) != 1) == (r % f.prime == 0))
    });
    let names: Vec<String> = factors.iter().map(|f| format!("Z/{}", f.modulus)).collect();
    let evidence = format!(
        "Z/{n} = {} by CRT (bijective: {crt_bijective}); non-units of each factor are the multiples of its prime (local: {local})",
        names.join(" x ")
    );
    (factors, crt_bijective && local, evidence)
}

/// Checks every computable hypothesis of the vanishing argument for `G`.
pub fn certify(marks: &MarksTable, config: &Config) -> Result<Certificate> {
    let n = marks.group_order() as u64;
    let c = marks.class_count();
    let image = quotient_image(marks)?;
    let size = image.size();
    let diag_product = marks.diagonal_product();
    let pullback = pullback_check(marks, &image, PULLBACK_SAMPLES, PULLBACK_SEED, config.exec)?;
    if n > config.budgets.modulus {
        return Err(Error::budget(format!("modulus {n}"), config.budgets.modulus));
    }
    let (local_factors, local_ok, local_evidence) = local_decomposition(n);

    let mut checks = Vec::new();
    checks.push(Check {
        name: "pullback_square".into(),
        passed: pullback.discrepancies == 0 && pullback.multiples_of_n_in_image,
        evidence: format!(
            "{} random ghost vectors ({} in the image), {} discrepancies between membership and reduction into A(G)/nC(G); n*e_j in image for all j: {}",
            pullback.samples, pullback.members, pullback.discrepancies, pullback.multiples_of_n_in_image
        ),
    });
    checks.push(Check {
        name: "quotient_map_surjective".into(),
        passed: pullback.reduction_surjective,
        evidence: format!("reductions of the {c} coordinate vectors span (Z/{n})^{c}"),
    });
    let n_pow_c = BigUint::from(n).pow(c as u32);
    let size_identity = diag_product.magnitude() * &size == n_pow_c;
    checks.push(Check {
        name: "quotient_ring_finite_and_local_product".into(),
        passed: !size.is_zero() && size_identity && local_ok,
        evidence: format!(
            "|A(G)/nC(G)| = {size}, and {size} * {diag_product} = {n}^{c} holds: {size_identity}; {local_evidence}"
        ),
    });
    let det = marks.matrix().determinant()?;
    checks.push(Check {
        name: "ghost_ring_is_product_of_Z".into(),
        passed: c == marks.lattice().class_count() && !det.is_zero() && det.magnitude() == diag_product.magnitude(),
        evidence: format!("C(G) = Z^{c}, one factor per conjugacy class; A(G) has full rank with index |det| = {}", det.magnitude()),
    });
    checks.push(Check {
        name: "picard_of_quotient_trivial_structurally".into(),
        passed: local_ok,
        evidence: format!(
            "C(G)/nC(G) is a finite product of {} finite local rings, each with trivial Picard group",
            c * local_factors.len()
        ),
    });

    let mut cert = Certificate {
        modulus: n,
        classes: c,
        quotient_ring_size: size.to_string(),
        diagonal_product: diag_product.to_string(),
        local_factors,
        pullback,
        checks,
        cited_axioms: CITED_AXIOMS.iter().map(|s| s.to_string()).collect(),
        conclusion: None,
    };
    if cert.passed() {
        cert.conclusion = Some(CONCLUSION.into());
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_group_spec;

    fn cert(spec: &str) -> Certificate {
        let cfg = Config::default();
        let g = parse_group_spec(spec, &cfg).unwrap();
        certify(&MarksTable::compute(&g, &cfg).unwrap(), &cfg).unwrap()
    }

    #[test]
    fn examples() {
        let t = cert("cyclic:1");
        assert!(t.passed(), "{:?}", t.checks);
        assert_eq!(t.conclusion.as_deref(), Some(CONCLUSION));
        assert!(t.local_factors.is_empty());

        let c2 = cert("cyclic:2");
        assert!(c2.passed());
        assert_eq!(c2.quotient_ring_size, "2");

        let s3 = cert("symmetric:3");
        assert!(s3.passed());
        assert_eq!(s3.quotient_ring_size, "108");
        assert_eq!(s3.diagonal_product, "12");
        assert_eq!(s3.cited_axioms.len(), 3);
        assert!(s3.ensure_passed().is_ok());
    }

    #[test]
    fn failing_check_withholds_conclusion() {
        let mut c = cert("cyclic:2");
        c.checks[0].passed = false;
        assert!(matches!(c.ensure_passed(), Err(Error::CheckFailed { check, .. }) if check == "pullback_square"));
    }

    #[test]
    fn local_factors_of_24() {
        let (f, ok, _) = local_decomposition(24);
        assert!(ok);
        assert_eq!(f.iter().map(|f| f.modulus).collect::<Vec<_>>(), vec![8, 3]);
    }
}
