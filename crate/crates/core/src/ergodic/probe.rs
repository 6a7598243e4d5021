//! Visit statistics of an orbit over the cells of a sphere partition.
//! Evidence only: finite samples never decide ergodicity.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::measure::haar_measure;
use crate::error::{Error, Result};
use crate::map::Map31;
use crate::padic::{digit_expand, p_power, require_integral, NormExp, PadicExact, Prime};
use crate::sphere::is_invariant_radius;

/// Extra digits carried beyond the partition depth.
const GUARD_DIGITS: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyTable {
    pub prime: Prime,
    pub sphere: NormExp,
    pub depth: u32,
    pub total: u64,
    /// Cell residue `u mod p^depth` to visit count; unvisited cells are absent.
    pub counts: BTreeMap<u64, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyRow {
    pub cell_rep: PadicExact,
    pub count: u64,
    pub frequency: BigRational,
    pub haar_weight: BigRational,
}

impl FrequencyTable {
    pub fn empty(prime: Prime, sphere: NormExp, depth: u32) -> Self {
        FrequencyTable { prime, sphere, depth, total: 0, counts: BTreeMap::new() }
    }

    /// Combine counts from another run on the same partition.
    pub fn merge(&mut self, other: &FrequencyTable) -> Result<()> {
        if (self.prime, self.sphere, self.depth) != (other.prime, other.sphere, other.depth) {
            return Err(Error::InvalidArgument("tables describe different partitions".into()));
        }
        self.total += other.total;
        for (cell, n) in &other.counts {
            *self.counts.entry(*cell).or_default() += n;
        }
        Ok(())
    }

    pub fn count(&self, cell: u64) -> u64 {
        self.counts.get(&cell).copied().unwrap_or(0)
    }

    /// Visit frequency of every cell of the partition, visited or not.
    pub fn frequency(&self, cell: u64) -> BigRational {
        BigRational::new(self.count(cell).into(), self.total.max(1).into())
    }

    pub fn rows(&self) -> Result<Vec<FrequencyRow>> {
        let e = require_integral(self.sphere)?;
        let weight = haar_measure(self.sphere.shrink(self.depth as i64), self.sphere, self.prime)?;
        let scale = p_power(self.prime, -e);
        Ok(self
            .counts
            .iter()
            .map(|(&u, &count)| FrequencyRow {
                cell_rep: PadicExact::new(&scale * BigRational::from_integer(BigInt::from(u)), self.prime),
                count,
                frequency: BigRational::new(count.into(), self.total.into()),
                haar_weight: weight.clone(),
            })
            .collect())
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut out = String::from("cell_rep,count,frequency,haar_weight\n");
        for r in self.rows()? {
            out.push_str(&format!("{},{},{},{}\n", r.cell_rep, r.count, r.frequency, r.haar_weight));
        }
        Ok(out)
    }
}

/// Bin `x0, f(x0), ..., f^{n-1}(x0)` into the depth-`depth` cells of `S_r(0)`.
/// Iterates run on truncated expansions: `f` is an isometry on the sphere, so
/// the leading digits that decide the cell are never lost.
pub fn equidistribution_probe(m: &Map31, r: NormExp, x0: &PadicExact, n: u64, depth: u32) -> Result<FrequencyTable> {
    if !is_invariant_radius(m, r) {
        return Err(Error::NotInvariantRadius);
    }
    require_integral(r)?;
    if x0.norm() != r {
        return Err(Error::InvalidArgument("seed is not on the sphere".into()));
    }
    if depth == 0 || depth > 40 {
        return Err(Error::InvalidArgument("probe depth must be in 1..=40".into()));
    }
    let p = m.prime().get();
    let modulus = p.checked_pow(depth).ok_or(Error::ExponentOverflow)?;
    let mut table = FrequencyTable::empty(m.prime(), r, depth);
    let mut x = digit_expand(x0, depth + GUARD_DIGITS)?;
    for i in 0..n {
        let unit = x.unit_residue() % modulus;
        let cell: u64 = unit.try_into().expect("below p^depth");
        *table.counts.entry(cell).or_default() += 1;
        table.total += 1;
        if i + 1 < n {
            x = m.eval_approx(&x)?;
        }
    }
    Ok(table)
}
