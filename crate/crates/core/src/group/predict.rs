//! Closed-form predictions for the groups generated by the unshuffles
//! `<L, R>` and by the perfect shuffles `<I, O>`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::perm::{Permutation, Sign};
use crate::shuffles::DeckSize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `<L, R>`
    Unshuffle,
    /// `<I, O>`
    Perfect,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Unshuffle => "unshuffle",
            Family::Perfect => "perfect",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which case of the classification a deck falls into. The three special
/// cases are checked before the residue of `n` modulo 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    Special12,
    Special24,
    PowerOfTwo,
    Mod0,
    Mod1,
    Mod2,
    Mod3,
}

impl CaseTag {
    pub fn route(deck: DeckSize) -> CaseTag {
        match deck.cards() {
            12 => CaseTag::Special12,
            24 => CaseTag::Special24,
            c if c.is_power_of_two() => CaseTag::PowerOfTwo,
            _ => match deck.n() % 4 {
                0 => CaseTag::Mod0,
                1 => CaseTag::Mod1,
                2 => CaseTag::Mod2,
                _ => CaseTag::Mod3,
            },
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::Special12 => "special12",
            CaseTag::Special24 => "special24",
            CaseTag::PowerOfTwo => "power_of_two",
            CaseTag::Mod0 => "mod0",
            CaseTag::Mod1 => "mod1",
            CaseTag::Mod2 => "mod2",
            CaseTag::Mod3 => "mod3",
        }
    }
}

/// Predicted structure. The last four variants describe the group as a set
/// of centrally symmetric permutations cut out by sign conditions; the
/// others are identified by order only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Characterization {
    /// `Z_2^6 ⋊ S_5`
    Special12,
    /// `Z_2^11 ⋊ M_12`
    Special24,
    /// `Z_2^k ⋊ Z_k`
    PowerOfTwo { k: u32 },
    /// `sgn = +1` and `sgn-bar = +1`.
    KernelSgnAndSgnBar,
    /// `sgn-bar = +1`.
    KernelSgnBar,
    /// `sgn * sgn-bar = +1`.
    KernelSgnTimesSgnBar,
    /// Every centrally symmetric permutation.
    Hyperoctahedral,
}

impl Characterization {
    pub fn description(self) -> String {
        match self {
            Characterization::Special12 => "Z_2^6 ⋊ S_5".into(),
            Characterization::Special24 => "Z_2^11 ⋊ M_12".into(),
            Characterization::PowerOfTwo { k } => format!("Z_2^{k} ⋊ Z_{k}"),
            Characterization::KernelSgnAndSgnBar => {
                "intersection of kernels of sgn and sgn-bar".into()
            }
            Characterization::KernelSgnBar => "kernel of sgn-bar".into(),
            Characterization::KernelSgnTimesSgnBar => "kernel of sgn·sgn-bar".into(),
            Characterization::Hyperoctahedral => "B_n".into(),
        }
    }

    /// Whether `p` belongs to the predicted group, for the sign-defined
    /// characterizations; `None` for the order-only ones.
    pub fn admits(self, p: &Permutation) -> Option<bool> {
        if !matches!(
            self,
            Characterization::KernelSgnAndSgnBar
                | Characterization::KernelSgnBar
                | Characterization::KernelSgnTimesSgnBar
                | Characterization::Hyperoctahedral
        ) {
            return None;
        }
        let Ok(bar) = p.sgn_bar() else {
            return Some(false);
        };
        let sgn = p.parity();
        Some(match self {
            Characterization::KernelSgnAndSgnBar => sgn == Sign::Plus && bar == Sign::Plus,
            Characterization::KernelSgnBar => bar == Sign::Plus,
            Characterization::KernelSgnTimesSgnBar => sgn * bar == Sign::Plus,
            _ => true,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPrediction {
    pub family: Family,
    pub n: usize,
    pub case_tag: CaseTag,
    pub predicted_order: BigUint,
    /// The order in factored form, e.g. `5!·2^4` or `2^11·95040`.
    pub factored: String,
    pub characterization: Characterization,
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

pub fn predict_group(family: Family, deck: DeckSize) -> GroupPrediction {
    let n = deck.n();
    let case_tag = CaseTag::route(deck);
    let signed = |exp: usize| (factorial(n) * pow2(exp), format!("{n}!·2^{exp}"));
    let (predicted_order, factored, characterization) = match case_tag {
        CaseTag::Special12 => (
            pow2(6) * BigUint::from(120u32),
            "2^6·120".to_string(),
            Characterization::Special12,
        ),
        CaseTag::Special24 => (
            pow2(11) * BigUint::from(95040u32),
            "2^11·95040".to_string(),
            Characterization::Special24,
        ),
        CaseTag::PowerOfTwo => {
            let k = deck
                .power_of_two_exponent()
                .expect("routed as a power of two");
            (
                BigUint::from(k) * pow2(k as usize),
                format!("{k}·2^{k}"),
                Characterization::PowerOfTwo { k },
            )
        }
        CaseTag::Mod0 => {
            let (o, f) = signed(n - 2);
            (o, f, Characterization::KernelSgnAndSgnBar)
        }
        CaseTag::Mod1 => {
            let (o, f) = signed(n - 1);
            (o, f, Characterization::KernelSgnBar)
        }
        CaseTag::Mod2 => {
            let (o, f) = signed(n);
            (o, f, Characterization::Hyperoctahedral)
        }
        CaseTag::Mod3 => match family {
            Family::Unshuffle => {
                let (o, f) = signed(n);
                (o, f, Characterization::Hyperoctahedral)
            }
            Family::Perfect => {
                let (o, f) = signed(n - 1);
                (o, f, Characterization::KernelSgnTimesSgnBar)
            }
        },
    };
    GroupPrediction {
        family,
        n,
        case_tag,
        predicted_order,
        factored,
        characterization,
    }
}

/// Signs of `L`, `R`, `phi(L)` and `phi(R)`, which depend only on `n mod 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityRow {
    pub l: Sign,
    pub r: Sign,
    pub phi_l: Sign,
    pub phi_r: Sign,
}

impl ParityRow {
    pub fn as_array(self) -> [Sign; 4] {
        [self.l, self.r, self.phi_l, self.phi_r]
    }
}

pub fn parity_row(n: usize) -> ParityRow {
    use Sign::{Minus as M, Plus as P};
    let [l, r, phi_l, phi_r] = match n % 4 {
        0 => [P, P, P, P],
        1 => [P, M, P, P],
        2 => [M, M, M, P],
        _ => [M, P, P, M],
    };
    ParityRow { l, r, phi_l, phi_r }
}

/// Predicted order of the kernel of the pair homomorphism on `<L, R>`:
/// `2^(n-1)` when `n ≡ 0 (mod 4)`, else `2^n`. `None` outside the range the
/// prediction covers (`n = 1`, `n` a power of two, `n` = 6 or 12).
pub fn unshuffle_kernel_prediction(n: usize) -> Option<BigUint> {
    if n <= 1 || n.is_power_of_two() || n == 6 || n == 12 {
        return None;
    }
    Some(if n.is_multiple_of(4) { pow2(n - 1) } else { pow2(n) })
}
