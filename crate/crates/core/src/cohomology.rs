//! Parametrized cohomology as the linear dual of the levelset zigzag.
//!
//! Over a field `H^k(-) ≅ Hom(H_k(-), k)`, so the cohomology zigzag is the
//! homology zigzag with every arrow reversed and transposed. Dual modules have
//! the same interval multiplicities, so the diagrams must agree.

use crate::diagrams::FourDiagrams;
use crate::error::{Error, Result};
use crate::levelset::{dual_diagrams_from_chains, parametrized_homology_from_chains};
use crate::linalg::PrimeField;
use crate::rspace::{ConstructibleRSpace, SpaceChains};

/// The four cohomology diagrams in degree `k`; fails if they differ from homology.
pub fn cohomology_diagrams(space: &ConstructibleRSpace, k: usize, field: PrimeField) -> Result<FourDiagrams> {
    cohomology_diagrams_from_chains(&SpaceChains::new(space, field)?, k)
}

pub fn cohomology_diagrams_from_chains(chains: &SpaceChains, k: usize) -> Result<FourDiagrams> {
    let dual = dual_diagrams_from_chains(chains, k)?;
    let primal = parametrized_homology_from_chains(chains, k)?;
    if dual != primal {
        return Err(Error::DualityViolated(format!(
            "degree {k}: cohomology {:?} vs homology {:?}",
            dual.iter().map(ToString::to_string).collect::<Vec<_>>(),
            primal.iter().map(ToString::to_string).collect::<Vec<_>>()
        )));
    }
    Ok(dual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{circle, empty, sphere};
    use crate::levelset::parametrized_homology;
    use crate::measures::Behavior;

    #[test]
    fn examples() {
        let f = PrimeField::GF2;
        assert_eq!(
            cohomology_diagrams(&circle(), 0, f).unwrap(),
            parametrized_homology(&circle(), 0, f).unwrap()
        );
        let d = cohomology_diagrams(&sphere(), 1, f).unwrap();
        assert_eq!(d.get(Behavior::UpDown).multiplicity(0.0, 1.0), 1);
        assert_eq!(d.total(), 1);
        assert_eq!(cohomology_diagrams(&empty(), 0, f).unwrap().total(), 0);
    }
}
