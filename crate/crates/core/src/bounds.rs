//! Upper bounds for N_q(3), the maximal number of rational points on a genus-3
//! curve over F_q.

use crate::algebra::prime_power;
use crate::error::{Error, Result};

/// One applicable bound with its label.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Item {
    pub label: char,
    pub bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub q: u64,
    pub m: u64,
    /// Every applicable item (a)..(g) with its value, minimal or not.
    pub items: Vec<Item>,
    /// The lemma bound under the guard (q not a square, q ≠ 8).
    pub lemma_bound: Option<u64>,
    /// Lemma value whenever 4q - m^2 ≤ 11, ignoring the guard.
    pub lemma_unguarded: Option<u64>,
    pub best: u64,
    /// Labels attaining `best`; the lemma is reported as "lemma".
    pub achieved_by: Vec<String>,
    pub known: Option<u64>,
}

/// floor(2 sqrt(q)), exactly.
pub fn serre_m(q: u64) -> u64 {
    (4 * q).isqrt()
}

fn is_square(n: u64) -> bool {
    let r = n.isqrt();
    r * r == n
}

/// Some integer a ≥ min_a with poly(a) = q, for increasing poly.
fn solves(q: u64, min_a: u64, poly: impl Fn(u64) -> u64) -> bool {
    (min_a..).map(&poly).take_while(|&v| v <= q).any(|v| v == q)
}

fn check_prime_power(q: u64) -> Result<()> {
    prime_power(q).map(|_| ()).ok_or(Error::NotPrimePower(q))
}

pub fn applicable_items(q: u64) -> Result<Vec<Item>> {
    check_prime_power(q)?;
    let m = serre_m(q);
    let mut items = vec![Item {
        label: 'a',
        bound: q * q + q + 1,
    }];
    if q != 8 && q != 9 {
        items.push(Item {
            label: 'b',
            bound: 2 * q + 6,
        });
    }
    items.push(Item {
        label: 'c',
        bound: q + 1 + 3 * m,
    });
    if solves(q, 0, |a| a * a + 1) {
        items.push(Item {
            label: 'd',
            bound: q + 3 * m - 1,
        });
    }
    if solves(q, 2, |a| a * a + 2) {
        items.push(Item {
            label: 'e',
            bound: q + 3 * m - 1,
        });
    }
    if solves(q, 0, |a| a * a + a + 1) {
        items.push(Item {
            label: 'f',
            bound: q + 3 * m - 2,
        });
    }
    if solves(q, 3, |a| a * a + a + 3) {
        items.push(Item {
            label: 'g',
            bound: q + 3 * m - 2,
        });
    }
    Ok(items)
}

fn lemma_raw(q: u64) -> Option<u64> {
    let m = serre_m(q);
    (4 * q - m * m <= 11).then(|| q + 3 * m - 1)
}

/// q + 3m - 1 when 4q - m^2 ≤ 11, q is not a square and q ≠ 8.
pub fn serre_lemma_bound(q: u64) -> Result<Option<u64>> {
    check_prime_power(q)?;
    if is_square(q) || q == 8 {
        return Ok(None);
    }
    Ok(lemma_raw(q))
}

pub fn best_upper_bound(q: u64) -> Result<BoundReport> {
    let items = applicable_items(q)?;
    let lemma_bound = serre_lemma_bound(q)?;
    let best = items
        .iter()
        .map(|i| i.bound)
        .chain(lemma_bound)
        .min()
        .expect("item (a) always applies");
    let mut achieved_by: Vec<String> = items
        .iter()
        .filter(|i| i.bound == best)
        .map(|i| i.label.to_string())
        .collect();
    if lemma_bound == Some(best) {
        achieved_by.push("lemma".into());
    }
    Ok(BoundReport {
        q,
        m: serre_m(q),
        items,
        lemma_bound,
        lemma_unguarded: lemma_raw(q),
        best,
        achieved_by,
        known: known_value(q),
    })
}

/// Attained maxima N_q(3) for prime powers q < 100.
pub const KNOWN: [(u64, u64); 35] = [
    (2, 7),
    (3, 10),
    (4, 14),
    (5, 16),
    (7, 20),
    (8, 24),
    (9, 28),
    (11, 28),
    (13, 32),
    (16, 38),
    (17, 40),
    (19, 44),
    (23, 48),
    (25, 56),
    (27, 56),
    (29, 60),
    (31, 62),
    (32, 64),
    (37, 72),
    (41, 78),
    (43, 80),
    (47, 87),
    (49, 92),
    (53, 96),
    (59, 102),
    (61, 107),
    (64, 113),
    (67, 116),
    (71, 120),
    (73, 122),
    (79, 131),
    (81, 136),
    (83, 136),
    (89, 144),
    (97, 155),
];

/// Items credited with the sharp bound at each q; q = 32 needs the lemma.
pub const ATTRIBUTION: [(u64, &str); 35] = [
    (2, "ad"),
    (3, "f"),
    (4, "b"),
    (5, "bd"),
    (7, "bf"),
    (8, "c"),
    (9, "c"),
    (11, "be"),
    (13, "bf"),
    (16, "b"),
    (17, "bd"),
    (19, "bc"),
    (23, "g"),
    (25, "bc"),
    (27, "e"),
    (29, "c"),
    (31, "f"),
    (32, ""),
    (37, "d"),
    (41, "c"),
    (43, "f"),
    (47, "c"),
    (49, "c"),
    (53, "c"),
    (59, "g"),
    (61, "c"),
    (64, "c"),
    (67, "c"),
    (71, "c"),
    (73, "f"),
    (79, "c"),
    (81, "c"),
    (83, "e"),
    (89, "c"),
    (97, "c"),
];

pub fn known_table() -> &'static [(u64, u64)] {
    &KNOWN
}

pub fn known_value(q: u64) -> Option<u64> {
    KNOWN.iter().find(|e| e.0 == q).map(|e| e.1)
}

pub fn attribution(q: u64) -> Option<&'static str> {
    ATTRIBUTION.iter().find(|e| e.0 == q).map(|e| e.1)
}
