//! Saturation-number bounds evaluated in exact rational arithmetic.
//!
//! Every bound here has the shape `slope * n/2 ∓ constant` for explicit
//! rationals derived from the weight constants of the pattern (or from the
//! family parameters `s`, `t`). No floating point is used anywhere; reports
//! carry the exact value together with the usable integer bound (ceiling for
//! lower bounds, floor for upper bounds), since saturation numbers are
//! integers.

use crate::graph::Graph;
use crate::weights::{self, WeightSummary};
use thiserror::Error;

/// Exact rational scalar used throughout the bounds layer.
pub type Rat = num_rational::Rational64;

#[inline]
fn rat(p: i64, q: i64) -> Rat {
    Rat::new(p, q)
}

#[inline]
fn int(p: i64) -> Rat {
    Rat::from_integer(p)
}

/// Errors from bound evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("double-star parameters require 1 <= s < t, got s = {s}, t = {t}")]
    BadCenters { s: usize, t: usize },
    #[error("parameter s must be at least 1")]
    ZeroS,
    #[error("n = {n} below the admissible threshold {min}")]
    BelowThreshold { n: usize, min: usize },
    #[error("n = {n} smaller than the pattern order {order}")]
    NBelowOrder { n: usize, order: usize },
    #[error("degree bounds require 0 < delta < k, got delta = {delta}, k = {k}")]
    BadDegreeSplit { delta: usize, k: usize },
    #[error("complete-graph parameter must be at least 2, got {t}")]
    CliqueTooSmall { t: usize },
    #[error(transparent)]
    Weight(#[from] weights::WeightError),
}

/// Whether a report bounds the saturation number from below, from above, or
/// states an exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
}

/// One evaluated bound.
///
/// `value_at_n` is present exactly when the bound is applicable and its
/// constant is known; `asymptotic_only` marks values that are only claimed
/// for sufficiently large `n` (the `cp` slope, whose constant is unknown,
/// and the double-star exact value, whose tightness is asymptotic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub name: &'static str,
    pub kind: BoundKind,
    pub applicable: bool,
    pub reason: String,
    pub slope: Option<Rat>,
    pub constant: Option<Rat>,
    pub value_at_n: Option<Rat>,
    /// `ceil(value)` for lower/exact bounds, `floor(value)` for upper bounds.
    pub integer_bound: Option<i64>,
    pub asymptotic_only: bool,
}

impl BoundReport {
    fn lower(name: &'static str, reason: String, slope: Rat, constant: Rat, n: usize) -> Self {
        let value = slope * int(n as i64) / int(2) - constant;
        BoundReport {
            name,
            kind: BoundKind::Lower,
            applicable: true,
            reason,
            slope: Some(slope),
            constant: Some(constant),
            value_at_n: Some(value),
            integer_bound: Some(value.ceil().to_integer()),
            asymptotic_only: false,
        }
    }

    fn upper(name: &'static str, reason: String, slope: Rat, constant: Rat, n: usize) -> Self {
        let value = slope * int(n as i64) / int(2) + constant;
        BoundReport {
            name,
            kind: BoundKind::Upper,
            applicable: true,
            reason,
            slope: Some(slope),
            constant: Some(constant),
            value_at_n: Some(value),
            integer_bound: Some(value.floor().to_integer()),
            asymptotic_only: false,
        }
    }

    fn inapplicable(name: &'static str, kind: BoundKind, reason: String) -> Self {
        BoundReport {
            name,
            kind,
            applicable: false,
            reason,
            slope: None,
            constant: None,
            value_at_n: None,
            integer_bound: None,
            asymptotic_only: false,
        }
    }
}

/// The baseline lower bound `min wt_cp * n/2` whose additive constant is
/// not explicit; reported with `constant: None` and flagged asymptotic-only.
pub fn cp_lower_bound(summary: &WeightSummary, n: usize) -> BoundReport {
    let slope = int(summary.min_wt_cp as i64);
    let value = slope * int(n as i64) / int(2);
    BoundReport {
        name: "cp",
        kind: BoundKind::Lower,
        applicable: true,
        reason: format!("min wt_cp = {} over all edges", summary.min_wt_cp),
        slope: Some(slope),
        constant: None,
        value_at_n: Some(value),
        integer_bound: None,
        asymptotic_only: true,
    }
}

/// The general lower-bound family. Emits one report per case with its
/// applicability decided from the weight constants:
///
/// * `general-base` — `k1' <= k0`: slope `k0`;
/// * `general-primed` — `k1' > k0`: slope `k0 + (k1'-k0)/(k1'+1)`;
/// * `general-strengthened` — additionally `k1 > k0`: slope
///   `k0 + (k1'-k0)/k1'`;
/// * `general-balanced` — `k0 = k1 < k1' < k0'`: a two-branch case keyed on
///   whether `k0' - k1' <= (k0'-k0)/(k0+1)`.
pub fn general_lower_bound(summary: &WeightSummary, n: usize) -> Vec<BoundReport> {
    let (k0, k1, k0p, k1p) = (
        summary.k0 as i64,
        summary.k1 as i64,
        summary.k0p as i64,
        summary.k1p as i64,
    );
    let base_const = rat((k0 + 1) * (k0 + 1), 8);
    let mut out = Vec::with_capacity(4);

    if k1p <= k0 {
        out.push(BoundReport::lower(
            "general-base",
            format!("k1' = {} <= k0 = {}", k1p, k0),
            int(k0),
            base_const,
            n,
        ));
    } else {
        out.push(BoundReport::inapplicable(
            "general-base",
            BoundKind::Lower,
            format!("requires k1' <= k0, got k1' = {} > k0 = {}", k1p, k0),
        ));
    }

    if k1p > k0 {
        let slope = int(k0) + rat(k1p - k0, k1p + 1);
        let c = rat((k0 + 1) * (k1p - k0), 2 * k1p + 2) + base_const;
        out.push(BoundReport::lower(
            "general-primed",
            format!("k1' = {} > k0 = {}", k1p, k0),
            slope,
            c,
            n,
        ));
    } else {
        out.push(BoundReport::inapplicable(
            "general-primed",
            BoundKind::Lower,
            format!("requires k1' > k0, got k1' = {} <= k0 = {}", k1p, k0),
        ));
    }

    if k1p > k0 && k1 > k0 {
        let slope = int(k0) + rat(k1p - k0, k1p);
        let c = rat((k0 + 2) * (k1p - k0), 2 * k1p) + base_const;
        out.push(BoundReport::lower(
            "general-strengthened",
            format!("k1' = {} > k0 = {} and k1 = {} > k0", k1p, k0, k1),
            slope,
            c,
            n,
        ));
    } else {
        out.push(BoundReport::inapplicable(
            "general-strengthened",
            BoundKind::Lower,
            format!(
                "requires k1' > k0 and k1 > k0, got k0 = {}, k1 = {}, k1' = {}",
                k0, k1, k1p
            ),
        ));
    }

    if k0 == k1 && k1 < k1p && k1p < k0p {
        // Two branches; the crossover is where both slopes agree.
        let first_branch = int(k0p) - int(k1p) <= rat(k0p - k0, k0 + 1);
        let (slope, c, why) = if first_branch {
            (
                int(k0) + rat(k0p - k0, k0p + 1),
                rat((k0 + 1) * (k0p - k0), 2 * k0p + 2) + base_const,
                format!(
                    "k0 = k1 = {} < k1' = {} < k0' = {}; k0' - k1' <= (k0'-k0)/(k0+1)",
                    k0, k1p, k0p
                ),
            )
        } else {
            (
                int(k0) + rat(k1p - k0, k1p),
                rat((k0 + 2) * (k1p - k0), 2 * k1p) + base_const,
                format!(
                    "k0 = k1 = {} < k1' = {} < k0' = {}; k0' - k1' > (k0'-k0)/(k0+1)",
                    k0, k1p, k0p
                ),
            )
        };
        out.push(BoundReport::lower("general-balanced", why, slope, c, n));
    } else {
        out.push(BoundReport::inapplicable(
            "general-balanced",
            BoundKind::Lower,
            format!(
                "requires k0 = k1 < k1' < k0', got k0 = {}, k1 = {}, k1' = {}, k0' = {}",
                k0, k1, k1p, k0p
            ),
        ));
    }

    out
}

/// The triangle-free lower-bound family:
///
/// * `triangle-free-primed` — triangle-free and `k1' >= k0 + 2`: slope
///   `k0 + (k1'+1-k0)/(k1'+2)`;
/// * `triangle-free-strengthened` — additionally `k1 > k0`: slope
///   `k0 + (k1'+1-k0)/(k1'+1)`;
/// * `triangle-free-tight` — triangle-free and `k1' = k1 = k0 + 1`: slope
///   `k0 + 2/(k0+3)`.
pub fn triangle_free_lower_bound(
    summary: &WeightSummary,
    triangle_free: bool,
    n: usize,
) -> Vec<BoundReport> {
    let (k0, k1, k1p) = (summary.k0 as i64, summary.k1 as i64, summary.k1p as i64);
    let base_const = rat((k0 + 1) * (k0 + 1), 8);
    let mut out = Vec::with_capacity(3);

    if triangle_free && k1p >= k0 + 2 {
        let slope = int(k0) + rat(k1p + 1 - k0, k1p + 2);
        let c = rat((k0 + 1) * (k1p + 1 - k0), 2 * k1p + 4) + base_const;
        out.push(BoundReport::lower(
            "triangle-free-primed",
            format!("triangle-free, k1' = {} >= k0 + 2 = {}", k1p, k0 + 2),
            slope,
            c,
            n,
        ));
    } else {
        out.push(BoundReport::inapplicable(
            "triangle-free-primed",
            BoundKind::Lower,
            if triangle_free {
                format!("requires k1' >= k0 + 2, got k1' = {}, k0 = {}", k1p, k0)
            } else {
                "pattern contains a triangle".to_string()
            },
        ));
    }

    if triangle_free && k1p >= k0 + 2 && k1 > k0 {
        let slope = int(k0) + rat(k1p + 1 - k0, k1p + 1);
        let c = rat((k0 + 2) * (k1p + 1 - k0), 2 * k1p + 2) + base_const;
        out.push(BoundReport::lower(
            "triangle-free-strengthened",
            format!(
                "triangle-free, k1' = {} >= k0 + 2 = {}, k1 = {} > k0",
                k1p,
                k0 + 2,
                k1
            ),
            slope,
            c,
            n,
        ));
    } else {
        out.push(BoundReport::inapplicable(
            "triangle-free-strengthened",
            BoundKind::Lower,
            if triangle_free {
                format!(
                    "requires k1' >= k0 + 2 and k1 > k0, got k0 = {}, k1 = {}, k1' = {}",
                    k0, k1, k1p
                )
            } else {
                "pattern contains a triangle".to_string()
            },
        ));
    }

    if triangle_free && k1p == k1 && k1 == k0 + 1 {
        let slope = int(k0) + rat(2, k0 + 3);
        let c = rat(2 * k0 + 3, 2 * k0 + 6) + base_const;
        out.push(BoundReport::lower(
            "triangle-free-tight",
            format!("triangle-free, k1' = k1 = k0 + 1 = {}", k0 + 1),
            slope,
            c,
            n,
        ));
    } else {
        out.push(BoundReport::inapplicable(
            "triangle-free-tight",
            BoundKind::Lower,
            if triangle_free {
                format!(
                    "requires k1' = k1 = k0 + 1, got k0 = {}, k1 = {}, k1' = {}",
                    k0, k1, k1p
                )
            } else {
                "pattern contains a triangle".to_string()
            },
        ));
    }

    out
}

/// Admissibility threshold for the balanced double-star `S_{s,t}` family:
/// `n >= q(2t+4) + s` with `q = max(1, floor(s/2) - 1)`.
pub fn double_star_threshold(s: usize, t: usize) -> usize {
    let q = 1.max((s / 2).saturating_sub(1));
    q * (2 * t + 4) + s
}

/// Lower, upper and exact-value reports for `sat(n, S_{s,t})`, `s < t`.
///
/// The exact report restates the lower bound as an equality; it is only
/// applicable when `n ≡ s (mod 2t+4)` and even then the equality claim is
/// asymptotic, so it carries the `asymptotic_only` flag.
pub fn double_star_bounds(s: usize, t: usize, n: usize) -> Result<Vec<BoundReport>, BoundError> {
    if s < 1 || s >= t {
        return Err(BoundError::BadCenters { s, t });
    }
    let min = double_star_threshold(s, t);
    if n < min {
        return Err(BoundError::BelowThreshold { n, min });
    }
    let (si, ti) = (s as i64, t as i64);
    let slope = rat(si * (ti + 1), ti + 2);
    let c1 = rat(si * (ti - si + 2), 2 * ti + 4) + rat(si * si, 8);
    let c2 = rat(si * (si - 1), 2 * ti + 4) + int((si + 1) / 2);
    let mut out = vec![
        BoundReport::lower(
            "double-star-lower",
            format!("S_{{{},{}}} family bound", s, t),
            slope,
            c1,
            n,
        ),
        BoundReport::upper(
            "double-star-upper",
            format!("S_{{{},{}}} family bound", s, t),
            slope,
            c2,
            n,
        ),
    ];
    let period = 2 * t + 4;
    if n % period == s % period {
        let c = rat(si * (ti - si + 2), 2 * ti + 4);
        let value = slope * int(n as i64) / int(2) - c;
        out.push(BoundReport {
            name: "double-star-exact",
            kind: BoundKind::Exact,
            applicable: true,
            reason: format!("n = {} ≡ s (mod 2t+4 = {})", n, period),
            slope: Some(slope),
            constant: Some(c),
            value_at_n: Some(value),
            integer_bound: Some(value.ceil().to_integer()),
            asymptotic_only: true,
        });
    } else {
        out.push(BoundReport::inapplicable(
            "double-star-exact",
            BoundKind::Exact,
            format!(
                "exact value only claimed for n ≡ s (mod 2t+4): {} ≢ {} (mod {})",
                n, s, period
            ),
        ));
    }
    Ok(out)
}

/// Admissibility threshold for the caterpillar `P_5^{s-1}` family:
/// `n >= q(2s+4) + s + 1` with `q = max(2, floor((s-1)/2))`.
pub fn shorty_threshold(s: usize) -> usize {
    let q = 2.max(s.saturating_sub(1) / 2);
    q * (2 * s + 4) + s + 1
}

/// Lower and upper bounds for `sat(n, P_5^{s-1})` — the caterpillar whose
/// three internal vertices have degree `s + 1`.
pub fn shorty_bounds(s: usize, n: usize) -> Result<Vec<BoundReport>, BoundError> {
    if s < 1 {
        return Err(BoundError::ZeroS);
    }
    let min = shorty_threshold(s);
    if n < min {
        return Err(BoundError::BelowThreshold { n, min });
    }
    let si = s as i64;
    let lower_slope = int(si) + rat(2, si + 3);
    let c1 = rat(2 * si + 3, 2 * si + 6) + rat((si + 1) * (si + 1), 8);
    let upper_slope = int(si) + rat(2, si + 2);
    let c2 = rat(si * (si + 1), si + 2);
    Ok(vec![
        BoundReport::lower(
            "caterpillar-lower",
            format!("P_5^{} family bound", s - 1),
            lower_slope,
            c1,
            n,
        ),
        BoundReport::upper(
            "caterpillar-upper",
            format!("P_5^{} family bound", s - 1),
            upper_slope,
            c2,
            n,
        ),
    ])
}

/// Minimum average degree forced on a graph of minimum degree `delta` in
/// which every vertex of degree `delta` has a neighbor of degree at least
/// `k` (`strengthened: false`), or in which additionally every vertex has
/// such a neighbor of degree exceeding `delta` (`strengthened: true`):
/// `delta + (k - delta)/(k + 1)` resp. `delta + (k - delta)/k`.
pub fn warmup_min_avg_degree(delta: usize, k: usize, strengthened: bool) -> Result<Rat, BoundError> {
    if delta == 0 || delta >= k {
        return Err(BoundError::BadDegreeSplit { delta, k });
    }
    let (d, ki) = (delta as i64, k as i64);
    let denom = if strengthened { ki } else { ki + 1 };
    Ok(int(d) + rat(ki - d, denom))
}

/// The classical exact saturation number for complete graphs:
/// `sat(n, K_{t+1}) = C(t-1, 2) + (t-1)(n-t+1)` for `n >= t + 1`.
pub fn ehm_saturation_number(t: usize, n: usize) -> Result<usize, BoundError> {
    if t < 2 {
        return Err(BoundError::CliqueTooSmall { t });
    }
    if n < t + 1 {
        return Err(BoundError::NBelowOrder { n, order: t + 1 });
    }
    Ok((t - 1) * (t - 2) / 2 + (t - 1) * (n - t + 1))
}

/// A full survey of the explicit lower bounds for one pattern at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundSurvey {
    /// The asymptotic `cp` slope, reported alongside but never selected as
    /// best (its constant is unknown).
    pub cp: BoundReport,
    /// Every general and triangle-free case report.
    pub candidates: Vec<BoundReport>,
    /// The maximum applicable explicit-constant lower bound.
    pub best: BoundReport,
}

/// Evaluates every lower-bound family on `h` and picks the best applicable
/// explicit-constant bound. Requires `n` at least the order of `h`.
pub fn lower_bound_survey(h: &Graph, n: usize) -> Result<LowerBoundSurvey, BoundError> {
    if n < h.order() {
        return Err(BoundError::NBelowOrder { n, order: h.order() });
    }
    let summary = weights::weight_summary(h)?;
    let cp = cp_lower_bound(&summary, n);
    let mut candidates = general_lower_bound(&summary, n);
    candidates.extend(triangle_free_lower_bound(&summary, h.is_triangle_free(), n));
    let best = candidates
        .iter()
        .filter(|r| r.applicable)
        .max_by_key(|r| r.value_at_n.expect("applicable bounds carry a value"))
        .expect("general-base or general-primed always applies")
        .clone();
    Ok(LowerBoundSurvey { cp, candidates, best })
}

/// The best applicable explicit-constant lower bound for `sat(n, h)`.
pub fn best_lower_bound(h: &Graph, n: usize) -> Result<BoundReport, BoundError> {
    Ok(lower_bound_survey(h, n)?.best)
}
