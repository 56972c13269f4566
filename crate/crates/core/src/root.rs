//! Bracketing bisection driven by certified comparisons.

use crate::error::{Error, Result};

/// Where a probe point sits relative to the (unknown) root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Side {
    Below,
    Above,
    /// The certified enclosure could not separate the probe from the root.
    Straddle,
}

/// Shrinks `[lo, hi]` (with `lo` below and `hi` above the root) until its
/// width is at most `width`.
///
/// A straddling midpoint is retried at the two quarter points, which keeps
/// the bracket shrinking when the midpoint lands on the root itself.
pub(crate) fn bisect(
    mut lo: f64,
    mut hi: f64,
    width: f64,
    mut probe: impl FnMut(f64) -> Result<Side>,
) -> Result<(f64, f64)> {
    let mut guard = 0;
    while hi - lo > width {
        guard += 1;
        if guard > 400 {
            return Err(Error::Undecidable { at: 0.5 * (lo + hi) });
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // Bracket collapsed to adjacent floats.
            break;
        }
        match probe(mid)? {
            Side::Below => lo = mid,
            Side::Above => hi = mid,
            Side::Straddle => {
                let w = hi - lo;
                let (q1, q3) = (lo + 0.25 * w, lo + 0.75 * w);
                let mut moved = false;
                match probe(q1)? {
                    Side::Below => {
                        lo = q1;
                        moved = true;
                    }
                    Side::Above => {
                        hi = q1;
                        continue;
                    }
                    Side::Straddle => {}
                }
                match probe(q3)? {
                    Side::Above => {
                        hi = q3;
                        moved = true;
                    }
                    Side::Below => {
                        lo = q3;
                        moved = true;
                    }
                    Side::Straddle => {}
                }
                if !moved {
                    return Err(Error::Undecidable { at: mid });
                }
            }
        }
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brackets_sqrt_two() {
        let (lo, hi) = bisect(0.0, 2.0, 1e-12, |t| {
            Ok(if t * t < 2.0 { Side::Below } else { Side::Above })
        })
        .unwrap();
        assert!(lo <= std::f64::consts::SQRT_2 && std::f64::consts::SQRT_2 <= hi);
        assert!(hi - lo <= 1e-12);
    }

    #[test]
    fn recovers_from_midpoint_on_root() {
        // Root exactly at the first midpoint; a fuzzy window of 1e-9 around it.
        let (lo, hi) = bisect(0.0, 2.0, 1e-6, |t| {
            Ok(if (t - 1.0).abs() < 1e-9 {
                Side::Straddle
            } else if t < 1.0 {
                Side::Below
            } else {
                Side::Above
            })
        })
        .unwrap();
        assert!(lo <= 1.0 && 1.0 <= hi && hi - lo <= 1e-6);
    }

    #[test]
    fn reports_undecidable() {
        let r = bisect(0.0, 1.0, 1e-6, |_| Ok(Side::Straddle));
        assert!(matches!(r, Err(Error::Undecidable { .. })));
    }
}
