use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    bfs_enumerate, family_generators, parity_row, predict_group, schreier_sims,
    unshuffle_kernel_prediction, CaseTag, Family, GroupError, DEFAULT_BFS_CAP,
};
use crate::perm::{Permutation, Sign};
use crate::shuffles::DeckSize;

const INFEASIBLE_PREFIX: &str = "infeasible: ";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Breadth-first enumeration when the predicted order fits under the
    /// cap (cross-checked against Schreier-Sims), Schreier-Sims otherwise.
    #[default]
    Auto,
    Bfs,
    Schreier,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineUsed {
    Bfs,
    Schreier,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub engine: Engine,
    pub cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            engine: Engine::Auto,
            cap: DEFAULT_BFS_CAP,
        }
    }
}

/// Computed versus predicted data for one deck size and shuffle family.
///
/// `parities` holds `[sgn g1, sgn g2, sgn phi(g1), sgn phi(g2)]` where
/// `(g1, g2)` is `(L, R)` or `(I, O)`. Orders are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub two_n: usize,
    pub family: Family,
    pub case_tag: CaseTag,
    pub engine_used: EngineUsed,
    pub computed_order: Option<String>,
    pub predicted_order: String,
    pub predicted_factored: String,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(with = "sign_array")]
    pub parities: [Sign; 4],
    /// Whether `parities` equals the tabulated row (unshuffle family only).
    pub parities_match_table: Option<bool>,
    pub kernel_order_computed: Option<String>,
    pub kernel_order_predicted: Option<String>,
    /// Engine failure for this record, e.g. BFS infeasible.
    pub error: Option<String>,
}

impl VerificationRecord {
    /// Order, parity and kernel checks all agree with the predictions.
    pub fn all_checks_pass(&self) -> bool {
        self.error.is_none()
            && self.matches
            && self.parities_match_table != Some(false)
            && self.kernel_order_computed == self.kernel_order_predicted
    }

    /// The requested engine could not handle the group.
    pub fn is_infeasible(&self) -> bool {
        self.error
            .as_deref()
            .is_some_and(|e| e.starts_with(INFEASIBLE_PREFIX))
    }
}

mod sign_array {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::perm::Sign;

    pub fn serialize<S: Serializer>(signs: &[Sign; 4], s: S) -> Result<S::Ok, S::Error> {
        signs.map(Sign::value).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[Sign; 4], D::Error> {
        let raw = <[i32; 4]>::deserialize(d)?;
        let mut out = [Sign::Plus; 4];
        for (slot, v) in out.iter_mut().zip(raw) {
            *slot = match v {
                1 => Sign::Plus,
                -1 => Sign::Minus,
                other => {
                    return Err(serde::de::Error::custom(format!("invalid sign {other}")));
                }
            };
        }
        Ok(out)
    }
}

fn generator_signs(gens: &[Permutation; 2]) -> [Sign; 4] {
    let bar = |p: &Permutation| {
        p.sgn_bar()
            .expect("shuffle generators are centrally symmetric")
    };
    [
        gens[0].parity(),
        gens[1].parity(),
        bar(&gens[0]),
        bar(&gens[1]),
    ]
}

fn computed_order(
    gens: &[Permutation],
    predicted: &BigUint,
    opts: VerifyOptions,
) -> Result<(EngineUsed, BigUint), GroupError> {
    let run_bfs = match opts.engine {
        Engine::Bfs => true,
        Engine::Schreier => false,
        Engine::Auto => *predicted <= BigUint::from(opts.cap),
    };
    if !run_bfs {
        return Ok((EngineUsed::Schreier, schreier_sims(gens)?.order()));
    }
    let bfs = BigUint::from(bfs_enumerate(gens, opts.cap)?.order());
    if opts.engine == Engine::Auto {
        let bsgs = schreier_sims(gens)?.order();
        if bsgs != bfs {
            return Err(GroupError::EngineDisagreement {
                bfs: bfs.to_string(),
                schreier: bsgs.to_string(),
            });
        }
    }
    Ok((EngineUsed::Bfs, bfs))
}

/// Builds the record for one deck size and family.
pub fn verify_deck(deck: DeckSize, family: Family, opts: VerifyOptions) -> VerificationRecord {
    let prediction = predict_group(family, deck);
    let gens = family_generators(family, deck);
    let parities = generator_signs(&gens);

    let (engine_used, computed, error) =
        match computed_order(&gens, &prediction.predicted_order, opts) {
            Ok((engine, order)) => (engine, Some(order), None),
            Err(e) => {
                let engine = if opts.engine == Engine::Schreier {
                    EngineUsed::Schreier
                } else {
                    EngineUsed::Bfs
                };
                let message = match e {
                    GroupError::CapExceeded { .. } | GroupError::DegreeTooLarge(_) => {
                        format!("{INFEASIBLE_PREFIX}{e}")
                    }
                    _ => e.to_string(),
                };
                (engine, None, Some(message))
            }
        };

    let (parities_match_table, kernel_computed, kernel_predicted) = match family {
        Family::Unshuffle => {
            let table = parity_row(deck.n()).as_array() == parities;
            let predicted = unshuffle_kernel_prediction(deck.n());
            let computed = predicted
                .as_ref()
                .map(|_| super::kernel_order(&gens).expect("centrally symmetric generators"));
            (Some(table), computed, predicted)
        }
        Family::Perfect => (None, None, None),
    };

    VerificationRecord {
        two_n: deck.cards(),
        family,
        case_tag: prediction.case_tag,
        engine_used,
        matches: computed.as_ref() == Some(&prediction.predicted_order),
        computed_order: computed.map(|o| o.to_string()),
        predicted_order: prediction.predicted_order.to_string(),
        predicted_factored: prediction.factored,
        parities,
        parities_match_table,
        kernel_order_computed: kernel_computed.map(|k| k.to_string()),
        kernel_order_predicted: kernel_predicted.map(|k| k.to_string()),
        error,
    }
}

/// One record per (deck, family), sorted by deck size then family
/// (unshuffle before perfect). Decks are processed in parallel.
pub fn verify(decks: &[DeckSize], opts: VerifyOptions) -> Vec<VerificationRecord> {
    let jobs: Vec<(DeckSize, Family)> = decks
        .iter()
        .flat_map(|&d| [(d, Family::Unshuffle), (d, Family::Perfect)])
        .collect();
    let mut records: Vec<VerificationRecord> = jobs
        .into_par_iter()
        .map(|(d, f)| verify_deck(d, f, opts))
        .collect();
    records.sort_by_key(|r| (r.two_n, r.family));
    records.dedup_by_key(|r| (r.two_n, r.family));
    records
}
