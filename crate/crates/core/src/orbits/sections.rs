//! Counting plane sections: a class of degree 6 in `c1, c2, c3` evaluated on
//! the Grassmannian of 3-planes in `C^5`, with `V` the tautological
//! subbundle, counts the 2-planes of `P^4` that cut a general quartic
//! threefold in a curve isomorphic to a fixed curve of the given type.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{inconsistent, usage, Result};
use crate::localization::grassmann::chern_monomials;
use crate::localization::grassmann_chern_numbers;
use crate::Poly;
use crate::Rational;

/// `int c1^a c2^b c3^c` over `G(3, 5)` for every monomial of degree 6.
#[derive(Debug, Clone)]
pub struct PlaneChernNumbers {
    values: HashMap<Vec<u32>, Rational>,
}

impl PlaneChernNumbers {
    pub fn compute() -> Result<Self> {
        let ms = chern_monomials(3, 6);
        let vals = grassmann_chern_numbers(3, 5, &ms)?;
        Ok(PlaneChernNumbers {
            values: ms.into_iter().zip(vals).collect(),
        })
    }

    pub fn get(&self, exps: &[u32]) -> Option<&Rational> {
        self.values.get(exps)
    }

    /// Integrates a class in `c1, c2, c3`; it must be homogeneous of degree 6
    /// and the result must be an integer.
    pub fn integrate(&self, p: &Poly) -> Result<Rational> {
        if !p.is_zero() && p.homogeneous_degree() != Some(6) {
            return usage(format!("plane-section count needs a degree 6 class, got {p}"));
        }
        let t = p.symbols();
        let idx: Vec<usize> = ["c1", "c2", "c3"].iter().map(|n| t.require(n)).collect::<Result<_>>()?;
        let mut total = Rational::zero();
        for (m, c) in p.iter() {
            let exps: Vec<u32> = idx.iter().map(|&i| m.exponent(i) as u32).collect();
            let n = self
                .get(&exps)
                .ok_or_else(|| crate::Error::Usage(format!("class {p} involves more than c1, c2, c3")))?;
            total += c * n;
        }
        if !crate::localization::is_integer(&total) {
            return inconsistent(format!("plane-section count of {p} is {total}"));
        }
        Ok(total)
    }
}
