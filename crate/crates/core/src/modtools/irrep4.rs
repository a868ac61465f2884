use super::catalog::{del_blocks, irrep4_spec, LABELS4};
use super::probe::ProbeBlock;
use super::{block_report, labels_of, parse_vector, IrrepReport, ToolError};
use crate::induced::build_DEl;
use crate::RationalFunction;

/// The four-dimensional irrep inside D1 or D2 on the λ = E² locus, in the
/// reference basis, optionally rescaled.
pub fn extract_irrep_4d(block: ProbeBlock, rescaled: bool) -> Result<IrrepReport, ToolError> {
    let spec = irrep4_spec(block == ProbeBlock::D1, rescaled);
    let e = RationalFunction::e();
    let e2 = &e * &e;
    let del = build_DEl();
    let rep = del.rep().substitute(&e, &e2)?;
    let parent = del_blocks()
        .into_iter()
        .find(|b| b.name == spec.parent)
        .expect("parent block in catalog");
    let parent_vectors = parent
        .vectors
        .iter()
        .map(|s| {
            del.vector(s)?
                .iter()
                .map(|x| x.substitute(&e, &e2).map_err(ToolError::from))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, ToolError>>()?;
    let parent_labels = labels_of(parent.labels);
    let vectors = spec
        .combos
        .iter()
        .map(|src| {
            let coeffs = parse_vector(src, &parent_labels)?;
            let mut acc = vec![RationalFunction::from_int(0); del.dim()];
            for (c, v) in coeffs.iter().zip(&parent_vectors) {
                let c = c.substitute(&e, &e2)?;
                for (a, x) in acc.iter_mut().zip(v) {
                    *a = &*a + &(&c * x);
                }
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>, ToolError>>()?;
    block_report(&rep, spec.name, &labels_of(LABELS4), vectors, spec.printed_table)
}
