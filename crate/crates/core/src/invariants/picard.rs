use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{quotient_image, sign_vector, unit_elements_of_image, UnitsReport};
use crate::burnside::MarksTable;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::par;
use crate::zlattice::{subgroup_cokernel, FiniteAbelianPresentation, UnitGroupOfZn};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicardReport {
    pub modulus: u64,
    pub classes: usize,
    /// `((Z/n)^x)^c`.
    pub target: FiniteAbelianPresentation,
    pub target_order: String,
    /// `c` sign flips plus every unit of `R`.
    pub image_generator_count: usize,
    pub quotient_unit_count: usize,
    pub cokernel: FiniteAbelianPresentation,
    /// Pairs `(u, v)` in `C(G)^x x R^x` with `u = v` modulo `n`.
    pub kernel_size: u64,
}

impl PicardReport {
    pub fn target_order(&self) -> BigUint {
        self.target.order()
    }
}

fn inverse_mod(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (n as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(n as i128) as u64
}

/// `Pic(A(G))` as the cokernel of
/// `C(G)^x (+) R^x -> ((Z/n)^x)^c, (u, v) -> u * v^-1 (mod n)`.
pub fn picard(marks: &MarksTable, config: &Config) -> Result<PicardReport> {
    let n = marks.group_order() as u64;
    let c = marks.class_count();
    let image = quotient_image(marks)?;
    let r_units = unit_elements_of_image(&image, config.budgets.enumeration, config.exec)?;
    let zn = UnitGroupOfZn::new(n, config.budgets.modulus)?;
    let target: Vec<&UnitGroupOfZn> = vec![&zn; c];

    let minus_one = (n - 1) % n.max(1);
    let one = 1 % n;
    let sign_flips = (0..c).map(|k| {
        let mut v = vec![one; c];
        v[k] = minus_one;
        v
    });
    let inverted = r_units
        .iter()
        .map(|v| v.iter().map(|&x| inverse_mod(x, n)).collect::<Vec<u64>>());
    let image_generator_count = c + r_units.len();
    let cokernel = subgroup_cokernel(&target, sign_flips.chain(inverted))?;

    let kernel_size = kernel_size(&image, c, config)?;
    let target_presentation = FiniteAbelianPresentation::from_cyclic_orders(
        (0..c).flat_map(|_| zn.factors().iter().map(|f| f.order)),
        (0..c)
            .flat_map(|k| {
                zn.factors()
                    .iter()
                    .map(move |f| format!("coordinate {k}: {} mod {n}", f.generator))
            })
            .collect(),
    );
    let target_order = target_presentation.order();
    debug_assert_eq!(
        target_order,
        (0..c).fold(BigUint::one(), |acc, _| acc * BigUint::from(zn.order()))
    );

    Ok(PicardReport {
        modulus: n,
        classes: c,
        target_order: target_order.to_string(),
        target: target_presentation,
        image_generator_count,
        quotient_unit_count: r_units.len(),
        cokernel,
        kernel_size,
    })
}

/// A sign vector `u` pairs with exactly one `v`, namely its reduction, when
/// that reduction lies in `R`.
fn kernel_size(image: &super::QuotientImage, c: usize, config: &Config) -> Result<u64> {
    let cap = config.budgets.unit_search_classes.min(63);
    if c > cap {
        return Err(Error::budget(format!("{c} classes for the kernel count"), cap));
    }
    let hits = par::filter_map_range(config.exec, 1u64 << c, |mask| {
        match image.contains(&sign_vector(c, mask)) {
            Ok(true) => Some(Ok(())),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        }
    });
    let hits = hits.into_iter().collect::<Result<Vec<()>>>()?;
    Ok(hits.len() as u64)
}

/// The kernel of the Picard map has the size of `A(G)^x`.
pub fn kernel_check(report: &PicardReport, units: &UnitsReport) -> bool {
    report.kernel_size == units.units.len() as u64
}
