//! Spread, classification and parameter predicates for weight spectra.
//!
//! A code is MWS when its q_k = (q^k-1)/(q-1) hyperplane weights are all
//! distinct. The spread measures how far an MWS weight set sits from the
//! densest possible one `{n-q_k+1, ..., n}`; it is zero exactly for strictly
//! compact codes and ties length and spread together through
//! `n = (q/2) q_k + spread / q_{k-1}`.

use num_rational::Ratio;

use crate::code::{GeneratorMatrix, WeightDistribution, EXHAUSTIVE_GUARD};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::geometry::gaussian;

/// Named result of one bound evaluation. Informational checks report
/// context (existence-style bounds) and never count as violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub passed: bool,
    pub informational: bool,
    pub detail: String,
}

/// Classification record for one weight distribution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub q: u64,
    pub k: u32,
    pub n: u64,
    pub qk: u64,
    /// Minimum nonzero weight; `None` only for the zero distribution.
    pub d: Option<u64>,
    pub weight_set: Vec<u64>,
    /// Measured spread; present iff the code is MWS.
    pub spread: Option<u64>,
    /// Quantization index: spread = h q_{k-1} (qk even) or
    /// ((2h+1)/2) q_{k-1} (q and k both odd). Absent for k = 1.
    pub h: Option<u64>,
    pub is_degenerate: bool,
    pub is_mws: bool,
    pub is_compact: bool,
    pub is_strictly_compact: bool,
    pub is_fws: bool,
    pub bound_checks: Vec<BoundCheck>,
}

impl SpectrumReport {
    /// Names of failed non-informational checks.
    pub fn bound_violations(&self) -> Vec<&'static str> {
        self.bound_checks
            .iter()
            .filter(|c| !c.passed && !c.informational)
            .map(|c| c.name)
            .collect()
    }

    /// Flat key-value rendering, one datum per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let opt = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
        out.push_str(&format!("q {}\n", self.q));
        out.push_str(&format!("k {}\n", self.k));
        out.push_str(&format!("n {}\n", self.n));
        out.push_str(&format!("qk {}\n", self.qk));
        out.push_str(&format!("d {}\n", opt(self.d)));
        let s: Vec<String> = self.weight_set.iter().map(|w| w.to_string()).collect();
        out.push_str(&format!("S {}\n", s.join(" ")));
        out.push_str(&format!("spread {}\n", opt(self.spread)));
        out.push_str(&format!("h {}\n", opt(self.h)));
        out.push_str(&format!("degenerate {}\n", self.is_degenerate));
        out.push_str(&format!("mws {}\n", self.is_mws));
        out.push_str(&format!("compact {}\n", self.is_compact));
        out.push_str(&format!("strictly_compact {}\n", self.is_strictly_compact));
        out.push_str(&format!("fws {}\n", self.is_fws));
        for c in &self.bound_checks {
            let status = match (c.informational, c.passed) {
                (false, true) => "pass",
                (false, false) => "FAIL",
                (true, _) => "info",
            };
            out.push_str(&format!("bound {} {} {}\n", c.name, status, c.detail));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "q": self.q,
            "k": self.k,
            "n": self.n,
            "qk": self.qk,
            "d": self.d,
            "S": self.weight_set,
            "spread": self.spread,
            "h": self.h,
            "flags": {
                "degenerate": self.is_degenerate,
                "mws": self.is_mws,
                "compact": self.is_compact,
                "strictly_compact": self.is_strictly_compact,
                "fws": self.is_fws,
            },
            "bounds": self.bound_checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "status": if c.informational { "info" } else if c.passed { "pass" } else { "fail" },
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Classifies a weight distribution: MWS / compact / strictly compact / FWS
/// flags, measured spread, quantization index and bound checks.
pub fn classify(wd: &WeightDistribution, q: u64, k: u32) -> SpectrumReport {
    let n = wd.n() as u64;
    let qk = gaussian(q, k);
    let weight_set = wd.weight_set();
    let d = weight_set.first().copied();

    let codewords = (q as u128).pow(k);
    let nondeg_sum = n as u128 * (codewords - codewords / q as u128);
    let is_degenerate = wd.weighted_sum() != nondeg_sum;

    let is_mws = weight_set.len() as u64 == qk;
    let spread = if is_mws {
        Some(spread_mws(&weight_set, n, qk).expect("validated MWS set"))
    } else {
        None
    };
    let is_compact = is_mws
        && match weight_set.first() {
            Some(&d0) => weight_set.iter().enumerate().all(|(i, &w)| w == d0 + i as u64),
            None => false,
        };
    let is_strictly_compact = is_mws && spread == Some(0);
    debug_assert_eq!(is_strictly_compact, is_compact && weight_set.last() == Some(&n));
    let is_fws = is_strictly_compact && d == Some(1);

    let h = match spread {
        Some(delta) if k >= 2 => quantization_h(q, k, delta),
        _ => None,
    };

    let bound_checks = evaluate_bounds(q, k, n, d, &weight_set, is_mws, is_compact);

    SpectrumReport {
        q,
        k,
        n,
        qk,
        d,
        weight_set,
        spread,
        h,
        is_degenerate,
        is_mws,
        is_compact,
        is_strictly_compact,
        is_fws,
        bound_checks,
    }
}

/// Re-evaluates every named bound for an existing report.
pub fn check_bounds(report: &SpectrumReport) -> Vec<BoundCheck> {
    evaluate_bounds(
        report.q,
        report.k,
        report.n,
        report.d,
        &report.weight_set,
        report.is_mws,
        report.is_compact,
    )
}

fn evaluate_bounds(
    q: u64,
    k: u32,
    n: u64,
    d: Option<u64>,
    weight_set: &[u64],
    is_mws: bool,
    is_compact: bool,
) -> Vec<BoundCheck> {
    let mut out = Vec::new();
    let qk = gaussian(q, k);

    if is_mws && k >= 2 {
        // n >= ceil(q q_k / 2)
        let len_bound = (q * qk).div_ceil(2);
        out.push(BoundCheck {
            name: "mws_length_lower",
            passed: n >= len_bound,
            informational: false,
            detail: format!("n={n} >= {len_bound}"),
        });
        // d >= ceil(q q_k / 2 - q_k + 1)
        let dist_bound = ((q - 2) * qk + 2).div_ceil(2);
        let dv = d.unwrap_or(0);
        out.push(BoundCheck {
            name: "mws_distance_lower",
            passed: dv >= dist_bound,
            informational: false,
            detail: format!("d={dv} >= {dist_bound}"),
        });
    }
    if is_mws {
        out.push(BoundCheck {
            name: "mws_spread_nonneg",
            passed: true,
            informational: false,
            detail: "spread >= 0".to_string(),
        });
    }

    // Delsarte: |C| <= sum_{i<=r} C(n,i)(q-1)^i with r distinct nonzero weights
    let r = weight_set.len() as u64;
    let size = (q as u128).checked_pow(k).unwrap_or(u128::MAX);
    let mut sum: u128 = 0;
    let mut binom: u128 = 1;
    let mut pow: u128 = 1;
    let mut ok = false;
    for i in 0..=r {
        sum = sum.saturating_add(binom.saturating_mul(pow));
        if sum >= size {
            ok = true;
            break;
        }
        binom = binom.saturating_mul((n - i) as u128) / (i + 1) as u128;
        pow = pow.saturating_mul((q - 1) as u128);
    }
    out.push(BoundCheck {
        name: "delsarte",
        passed: ok,
        informational: false,
        detail: format!("q^k <= sum of {} terms", r + 1),
    });

    // Existence bound on the minimal MWS length for k >= 3; a particular
    // code may legitimately be longer, so this is informational only.
    if is_mws && k >= 3 {
        let exp = (k * k + k - 4) / 2;
        let bound = (q as u128).checked_pow(exp);
        let below = bound.map(|b| (n as u128) < b);
        out.push(BoundCheck {
            name: "min_length_existence",
            passed: below.unwrap_or(true),
            informational: true,
            detail: match bound {
                Some(b) => format!("n={n} vs q^{exp}={b}"),
                None => format!("q^{exp} overflows"),
            },
        });
    }

    if is_compact && q >= 3 {
        out.push(BoundCheck {
            name: "compact_nonbinary_d1",
            passed: d != Some(1),
            informational: false,
            detail: "compact non-binary codes cannot have d=1".to_string(),
        });
    }

    out
}

/// Spread of an MWS weight set: q_k n - q_k(q_k-1)/2 - sum(S).
///
/// Equal to the positional sum over sorted complements and always
/// non-negative for a valid set of q_k distinct weights in [1, n].
pub fn spread_mws(weights: &[u64], n: u64, qk: u64) -> Result<u64> {
    if weights.len() as u64 != qk {
        return Err(Error::WeightSetSize { got: weights.len(), expected: qk as usize });
    }
    let mut sorted = weights.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() as u64 != qk {
        return Err(Error::WeightSetSize { got: sorted.len(), expected: qk as usize });
    }
    for &w in &sorted {
        if w < 1 || w > n {
            return Err(Error::WeightOutOfRange { w, n });
        }
    }
    let total: u128 = sorted.iter().map(|&w| w as u128).sum();
    let max_total = qk as u128 * n as u128 - qk as u128 * (qk as u128 - 1) / 2;
    Ok((max_total - total) as u64)
}

/// Positional spread of one weight set with respect to a target one:
/// the sum over sorted positions of (target - weight). Antisymmetric.
pub fn spread_wrt(weights: &[u64], target: &[u64]) -> Result<i64> {
    if weights.len() != target.len() {
        return Err(Error::CardinalityMismatch(weights.len(), target.len()));
    }
    let mut a = weights.to_vec();
    let mut b = target.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    Ok(a.iter()
        .zip(&b)
        .map(|(&w, &t)| t as i64 - w as i64)
        .sum())
}

/// Parameters (n, d) every strictly compact MWS code must have; `None` when
/// q and k are both odd, where no such code exists.
pub fn predict_strictly_compact(q: u64, k: u32) -> Option<(u64, u64)> {
    if q % 2 == 1 && k % 2 == 1 {
        return None;
    }
    let qk = gaussian(q, k);
    let n = q * qk / 2;
    Some((n, n - qk + 1))
}

/// Solves n = (q/2) q_k + delta / q_{k-1} for n; errors when the result is
/// not a positive integer (such a spread admits no MWS code).
pub fn length_from_spread(q: u64, k: u32, delta: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::DimensionTooSmall(2));
    }
    let qk = gaussian(q, k) as u128;
    let qk1 = gaussian(q, k - 1) as u128;
    let num = q as u128 * qk * qk1 + 2 * delta as u128;
    let den = 2 * qk1;
    if !num.is_multiple_of(den) || num == 0 {
        return Err(Error::InfeasibleSpread { q, k, delta });
    }
    Ok((num / den) as u64)
}

/// Quantization index h for an admissible spread, if any.
///
/// qk even: spread = h q_{k-1}. q and k both odd: spread = ((2h+1)/2) q_{k-1}.
/// For k = 1 the only admissible spread is 0 and h is undefined.
pub fn quantization_h(q: u64, k: u32, delta: u64) -> Option<u64> {
    if k < 2 {
        return None;
    }
    let qk1 = gaussian(q, k - 1);
    if (q * k as u64).is_multiple_of(2) {
        delta.is_multiple_of(qk1).then(|| delta / qk1)
    } else {
        let twice = 2 * delta;
        if twice.is_multiple_of(qk1) {
            let ratio = twice / qk1;
            (ratio % 2 == 1).then(|| (ratio - 1) / 2)
        } else {
            None
        }
    }
}

/// True iff the spread is admissible for an (q, k) MWS code.
pub fn spread_quantization(q: u64, k: u32, delta: u64) -> bool {
    if k < 2 {
        return delta == 0;
    }
    quantization_h(q, k, delta).is_some()
}

/// Length and distance bounds as a function of the quantization index h.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceBounds {
    pub n: u64,
    /// Lower bound on d, clamped to at least 1.
    pub d_lower: u64,
    pub d_upper: i64,
}

pub fn d_bounds(q: u64, k: u32, h: u64) -> DistanceBounds {
    let qk = gaussian(q, k) as i128;
    let qk1 = if k >= 1 { gaussian(q, k - 1) as i128 } else { 0 };
    let (qi, hi) = (q as i128, h as i128);
    let odd = q % 2 == 1 && k % 2 == 1;
    let (n2, base2) = if odd {
        (qi * qk + 1 + 2 * hi, (qi - 2) * qk + 3)
    } else {
        (qi * qk + 2 * hi, (qi - 2) * qk + 2)
    };
    debug_assert!(n2 % 2 == 0 && base2 % 2 == 0);
    let n = n2 / 2;
    let base = base2 / 2;
    let d_lower_raw = base + hi * (1 - qk1);
    let ceil = (hi * qk1 + qk - 1) / qk;
    let d_upper = base + hi - ceil;
    DistanceBounds {
        n: n as u64,
        d_lower: d_lower_raw.max(1) as u64,
        d_upper: d_upper as i64,
    }
}

/// Parameters of a compact MWS code with maximum weight n - j.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompactParams {
    pub n: u64,
    pub d: u64,
    /// The weight set is the full interval d ..= d + q_k - 1.
    pub s_min: u64,
    pub s_max: u64,
}

pub fn compact_params(q: u64, k: u32, j: u64) -> CompactParams {
    let qk = gaussian(q, k);
    let odd = q % 2 == 1 && k % 2 == 1;
    let (n, d) = if odd {
        ((q * qk).div_ceil(2) + j * q, ((q - 2) * qk + 3) / 2 + j * (q - 1))
    } else {
        (q * qk / 2 + j * q, (q - 2) * qk / 2 + j * (q - 1) + 1)
    };
    CompactParams { n, d, s_min: d, s_max: d + qk - 1 }
}

/// The weight-set endpoint as printed in the compact-parameters statement:
/// (q/2 + 1) q_k + j(q-1), plus 1/2 in the odd case. It exceeds the actual
/// endpoint d + q_k - 1 by exactly q_k; kept for deviation reporting.
pub fn compact_endpoint_printed(q: u64, k: u32, j: u64) -> u64 {
    let qk = gaussian(q, k);
    if q % 2 == 1 && k % 2 == 1 {
        ((q + 2) * qk).div_ceil(2) + j * (q - 1)
    } else {
        (q + 2) * qk / 2 + j * (q - 1)
    }
}

const WEIGHT_SET_MAX_QK: u64 = 16;
const WEIGHT_SET_MAX_N: u64 = 64;

/// All q_k-subsets of {1,...,n} whose sum is n q^{k-1}, in lexicographic
/// order. These are necessary conditions on the weight set of an (q, k, n)
/// MWS code; no existence is implied.
pub fn enumerate_weight_sets(q: u64, k: u32, n: u64) -> Result<Vec<Vec<u64>>> {
    let qk = gaussian(q, k);
    if qk > WEIGHT_SET_MAX_QK || n > WEIGHT_SET_MAX_N {
        return Err(Error::GuardExceeded(format!(
            "weight-set enumeration limited to q_k <= {WEIGHT_SET_MAX_QK}, n <= {WEIGHT_SET_MAX_N}"
        )));
    }
    let target = n * q.pow(k - 1);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(qk as usize);
    backtrack_sets(1, qk, n, target, &mut current, &mut out);
    Ok(out)
}

fn backtrack_sets(
    start: u64,
    remaining: u64,
    n: u64,
    target: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if remaining == 0 {
        if target == 0 {
            out.push(current.clone());
        }
        return;
    }
    // smallest achievable sum takes consecutive values from `start`,
    // largest takes the top `remaining` values below n
    let min_sum = remaining * start + remaining * (remaining - 1) / 2;
    let max_sum = remaining * n - remaining * (remaining - 1) / 2;
    if target < min_sum || target > max_sum {
        return;
    }
    for w in start..=n + 1 - remaining {
        let lowest_rest = (remaining - 1) * (w + 1) + (remaining - 1) * remaining.saturating_sub(2) / 2;
        if w > target || target - w < lowest_rest {
            break;
        }
        current.push(w);
        backtrack_sets(w + 1, remaining - 1, n, target - w, current, out);
        current.pop();
    }
}

/// Stable rendering used by the CLI and golden tests: one line per set,
/// ascending within the line, then a final `count N` line.
pub fn render_weight_sets(sets: &[Vec<u64>]) -> String {
    let mut out = String::new();
    for s in sets {
        let line: Vec<String> = s.iter().map(|w| w.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out.push_str(&format!("count {}\n", sets.len()));
    out
}

/// Smallest nonzero symbol whose per-codeword occurrence counts are pairwise
/// distinct, or `None`. Enumerates all q^k codewords per candidate symbol.
pub fn has_property_a(g: &GeneratorMatrix) -> Result<Option<FieldElement>> {
    let count = g.codeword_count();
    if count * g.n() as u128 > EXHAUSTIVE_GUARD {
        return Err(Error::GuardExceeded(format!(
            "q^k * n = {} exceeds {}",
            count * g.n() as u128,
            EXHAUSTIVE_GUARD
        )));
    }
    let q = g.field().q();
    for beta in 1..q as u32 {
        let beta = FieldElement(beta);
        let mut counts = Vec::with_capacity(count as usize);
        collect_symbol_counts(g, 0, &vec![FieldElement::ZERO; g.n()], beta, &mut counts);
        counts.sort_unstable();
        if counts.windows(2).all(|w| w[0] != w[1]) {
            return Ok(Some(beta));
        }
    }
    Ok(None)
}

fn collect_symbol_counts(
    g: &GeneratorMatrix,
    depth: usize,
    partial: &[FieldElement],
    beta: FieldElement,
    out: &mut Vec<u32>,
) {
    let f = g.field();
    if depth == g.k() as usize {
        out.push(partial.iter().filter(|&&e| e == beta).count() as u32);
        return;
    }
    let row = g.row(depth);
    for v in 0..f.q() as u32 {
        let scalar = FieldElement(v);
        if scalar.is_zero() {
            collect_symbol_counts(g, depth + 1, partial, beta, out);
        } else {
            let next: Vec<FieldElement> = partial
                .iter()
                .zip(row)
                .map(|(&acc, &r)| f.add(acc, f.mul(scalar, r)))
                .collect();
            collect_symbol_counts(g, depth + 1, &next, beta, out);
        }
    }
}

/// The spread lower bound printed for codes with a distinguishing symbol:
/// (q-2)(q^k - q)(q^{k+1} - 1) / (4 (q-2)^2 q). Reported verbatim and
/// informational only; undefined for q = 2.
pub fn property_a_spread_bound(q: u64, k: u32) -> Result<Ratio<i128>> {
    if q == 2 {
        return Err(Error::BinaryFieldUnsupported);
    }
    let qi = q as i128;
    let qk = qi.checked_pow(k).ok_or_else(|| Error::GuardExceeded("q^k overflow".into()))?;
    let qk1 = qi
        .checked_pow(k + 1)
        .ok_or_else(|| Error::GuardExceeded("q^{k+1} overflow".into()))?;
    let num = (qi - 2) * (qk - qi) * (qk1 - 1);
    let den = 4 * (qi - 2) * (qi - 2) * qi;
    Ok(Ratio::new(num, den))
}
