use crate::certificate::{Certificate, Witness};
use crate::error::{ensure_at_most, Result};
use crate::set::Subset;

pub const MAX_SINGLE_SCAN: usize = 20;
pub const MAX_PAIR_SCAN: usize = 12;

/// Check `pred` on every subset of an `n`-element ground set; the witness is
/// the lowest failing mask.
pub fn exhaustive_check(n: usize, mut pred: impl FnMut(Subset) -> bool) -> Result<Certificate> {
    ensure_at_most("exhaustive subset scan", n, MAX_SINGLE_SCAN)?;
    for m in 0..(1u32 << n) {
        if !pred(Subset(m)) {
            return Ok(Certificate::fail_set(Subset(m)));
        }
    }
    Ok(Certificate::pass())
}

/// Check `pred` on every ordered pair of subsets; lowest `(a, b)` fails first.
pub fn exhaustive_check_pairs(
    n: usize,
    mut pred: impl FnMut(Subset, Subset) -> bool,
) -> Result<Certificate> {
    ensure_at_most("exhaustive pair scan", n, MAX_PAIR_SCAN)?;
    for a in 0..(1u32 << n) {
        for b in 0..(1u32 << n) {
            if !pred(Subset(a), Subset(b)) {
                return Ok(Certificate::fail(Witness::Pair {
                    a: Subset(a),
                    b: Subset(b),
                }));
            }
        }
    }
    Ok(Certificate::pass())
}
