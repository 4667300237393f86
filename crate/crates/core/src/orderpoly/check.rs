use serde_json::json;

use crate::check::{compare_polys, CheckReport};
use crate::error::Result;
use crate::orderpoly::oracle::interpolate_order_poly;
use crate::orderpoly::{chain_weak, omega, omega_strict, omega_weak, type_strict, type_weak, Mode};
use crate::poset::{count_descents, BicoloredPoset, Word};
use crate::scalar::Budget;
use crate::{Poly, Rational};

/// `(-1)^n Omega°(-x, -y) == Omega(x, y + 1)` as polynomials.
pub fn check_reciprocity_poset(poset: &BicoloredPoset) -> CheckReport {
    let lhs = omega_strict::<Rational>(poset)
        .substitute_negate()
        .sign_power(poset.len());
    let rhs = omega_weak::<Rational>(poset).substitute_shift_y(1);
    compare_polys("poset-reciprocity", json!(poset.to_json()), &lhs, &rhs)
}

/// How the celeste prefix of a reversed word is read in the word-level
/// reciprocity identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordReciprocityReading {
    /// Keep `k` from the original word and take descent statistics of the
    /// reversed prefix. This is the reading under which the identity is a
    /// formal consequence of chain reciprocity.
    PrefixReversed,
    /// Treat the reversed word as a word in its own right, with the celeste
    /// position mirrored to `n + 1 - p`.
    MirroredCeleste,
}

/// Word-level reciprocity `(-1)^n Omega°_w(-x, -y) == Omega_{rev w}(x, y + 1)`.
///
/// Only the [`WordReciprocityReading::PrefixReversed`] reading is an identity in
/// general; the other is reported for diagnosis.
pub fn check_word_reciprocity(word: &Word, reading: WordReciprocityReading) -> CheckReport {
    let n = word.len();
    let lhs: Poly = type_strict::<Rational>(word).substitute_negate().sign_power(n);
    let reversed = word.reverse();
    let rhs: Poly = match reading {
        WordReciprocityReading::PrefixReversed => {
            let prefix_rev: Vec<usize> = word.celeste_prefix().iter().rev().copied().collect();
            chain_weak::<Rational>(n, word.k())
                .expect("k <= n for a valid word")
                .substitute_shift(
                    -(count_descents(reversed.letters()) as i64),
                    -(count_descents(&prefix_rev) as i64),
                )
        }
        WordReciprocityReading::MirroredCeleste => type_weak::<Rational>(&reversed),
    }
    .substitute_shift_y(1);
    let name = match reading {
        WordReciprocityReading::PrefixReversed => "word-reciprocity",
        WordReciprocityReading::MirroredCeleste => "word-reciprocity-mirrored",
    };
    let mut report = compare_polys(
        name,
        json!({ "word": word.to_string(), "celeste_pos": word.celeste_pos() }),
        &lhs,
        &rhs,
    );
    if report.passed {
        report = report.with_witness(json!({ "lhs": lhs.to_string(), "rhs": rhs.to_string() }));
    }
    report
}

/// Closed-form order polynomials against interpolated brute-force counts, in
/// both modes.
pub fn check_oracle_poset(poset: &BicoloredPoset, budget: Budget) -> Result<CheckReport> {
    let mut reports = Vec::new();
    for mode in [Mode::Strict, Mode::Weak] {
        let closed: Poly = omega(poset, mode);
        let oracle: Poly = interpolate_order_poly(poset, mode, budget)?;
        reports.push(compare_polys(
            format!("poset-oracle-{mode}"),
            json!(poset.to_json()),
            &closed,
            &oracle,
        ));
    }
    Ok(CheckReport::all("poset-oracle", reports))
}
