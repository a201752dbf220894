//! The position-weighted potential `f(M)` over matchings, and brute-force
//! minimizers used to certify the greedy.
//!
//! With `v_1 <_σ ... <_σ v_n` and `B = n + 1`, each vertex contributes
//!
//! * `0` if it is matched to a vertex on its right,
//! * `(i - j) * B^i` if `v_i` is matched to `v_j` with `j < i`,
//! * `i * B^i` if it is free,
//!
//! and `f(M)` is the sum. Values reach `n * B^n`, so arithmetic is exact.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, Matching, VertexOrdering};

pub type PotentialValue = BigUint;

/// Largest `n` accepted by the exhaustive enumerators.
pub const ENUMERATION_LIMIT: usize = 16;

/// Powers `B^0 ..= B^n` with `B = n + 1`.
fn powers(n: usize) -> Vec<BigUint> {
    let base = BigUint::from(n + 1);
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigUint::one());
    for i in 1..=n {
        let next = &out[i - 1] * &base;
        out.push(next);
    }
    out
}

/// Contribution of the vertex at 1-based position `i`, given the 1-based
/// position of its partner.
fn term(i: usize, partner: Option<usize>, pow: &[BigUint]) -> BigUint {
    match partner {
        Some(j) if j > i => BigUint::zero(),
        Some(j) => BigUint::from(i - j) * &pow[i],
        None => BigUint::from(i) * &pow[i],
    }
}

fn potential_unchecked(sigma: &VertexOrdering, m: &Matching, pow: &[BigUint]) -> BigUint {
    (1..=sigma.len())
        .map(|i| {
            let v = sigma.at(i - 1);
            term(i, m.partner(v).map(|p| sigma.position(p) + 1), pow)
        })
        .sum()
}

pub fn potential(g: &Graph, sigma: &VertexOrdering, m: &Matching) -> Result<PotentialValue> {
    sigma.check_fits(g)?;
    m.validate(g)?;
    Ok(potential_unchecked(sigma, m, &powers(g.n())))
}

/// `f(∅) = Σ i * (n+1)^i`.
pub fn empty_potential(n: usize) -> PotentialValue {
    let pow = powers(n);
    (1..=n).map(|i| BigUint::from(i) * &pow[i]).sum()
}

/// The exact drop `j * ((n+1)^j + (n+1)^i)` caused by matching two free
/// vertices at 1-based positions `j < i`.
pub fn augmentation_drop(n: usize, i: usize, j: usize) -> PotentialValue {
    let (lo, hi) = if j < i { (j, i) } else { (i, j) };
    let base = BigUint::from(n + 1);
    BigUint::from(lo) * (base.pow(lo as u32) + base.pow(hi as u32))
}

/// Calls `visit` with every matching of `g`, grown over vertices in index
/// order.
pub(crate) fn for_each_matching(g: &Graph, mut visit: impl FnMut(&Matching)) {
    fn rec(g: &Graph, v: usize, m: &mut Matching, visit: &mut dyn FnMut(&Matching)) {
        if v == g.n() {
            visit(m);
            return;
        }
        if !m.is_free(v) {
            return rec(g, v + 1, m, visit);
        }
        rec(g, v + 1, m, visit);
        for &u in g.neighbors(v) {
            if u > v && m.is_free(u) {
                m.insert(v, u);
                rec(g, v + 1, m, visit);
                m.remove(v);
            }
        }
    }
    rec(g, 0, &mut Matching::empty(g.n()), &mut visit);
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinPotential {
    pub matching: Matching,
    pub value: PotentialValue,
    /// Number of enumerated matchings attaining the minimum.
    pub minimizers: usize,
}

/// Enumerates every matching (or every maximum matching) and returns one of
/// minimum potential. Ties go to the lexicographically smallest edge list.
pub fn brute_force_min_potential(
    g: &Graph,
    sigma: &VertexOrdering,
    restrict_to_maximum: bool,
) -> Result<MinPotential> {
    if g.n() > ENUMERATION_LIMIT {
        return Err(Error::SizeGuard { n: g.n(), limit: ENUMERATION_LIMIT });
    }
    sigma.check_fits(g)?;
    let pow = powers(g.n());
    let mut max_size = 0;
    if restrict_to_maximum {
        for_each_matching(g, |m| max_size = max_size.max(m.len()));
    }
    let mut best: Option<(BigUint, Vec<(usize, usize)>, Matching)> = None;
    let mut minimizers = 0;
    for_each_matching(g, |m| {
        if m.len() < max_size {
            return;
        }
        let value = potential_unchecked(sigma, m, &pow);
        let order = best.as_ref().map(|(v, _, _)| value.cmp(v));
        match order {
            None | Some(std::cmp::Ordering::Less) => {
                minimizers = 1;
                best = Some((value, m.edges(), m.clone()));
            }
            Some(std::cmp::Ordering::Equal) => {
                minimizers += 1;
                let edges = m.edges();
                if best.as_ref().is_some_and(|(_, e, _)| edges < *e) {
                    best = Some((value, edges, m.clone()));
                }
            }
            Some(std::cmp::Ordering::Greater) => {}
        }
    });
    let (value, _, matching) = best.expect("the empty matching always exists");
    Ok(MinPotential { matching, value, minimizers })
}

/// Outcome of comparing two matchings at their σ-rightmost difference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RightmostDifference {
    Identical,
    /// The rightmost differing vertex does not satisfy the hypotheses: in
    /// `M'` it must be matched leftward to `v_j`, and in `M` it must be free
    /// or matched to some `v_j'` with `j' < j`.
    HypothesesNotMet { vertex: usize },
    /// Hypotheses hold at `vertex`; `decreased` reports `f(M') < f(M)`.
    Checked { vertex: usize, decreased: bool },
}

/// Locates the σ-rightmost vertex where `m` and `m_prime` differ and, when
/// the hypotheses hold there, tests whether `f(m_prime) < f(m)`.
pub fn check_rightmost_difference_drop(
    g: &Graph,
    sigma: &VertexOrdering,
    m: &Matching,
    m_prime: &Matching,
) -> Result<RightmostDifference> {
    sigma.check_fits(g)?;
    m.validate(g)?;
    m_prime.validate(g)?;
    let Some(v) = sigma.iter().rev().find(|&v| m.partner(v) != m_prime.partner(v)) else {
        return Ok(RightmostDifference::Identical);
    };
    let i = sigma.position(v);
    let Some(j) = m_prime.partner(v).map(|p| sigma.position(p)).filter(|&j| j < i) else {
        return Ok(RightmostDifference::HypothesesNotMet { vertex: v });
    };
    let ok = match m.partner(v) {
        None => true,
        Some(p) => sigma.position(p) < j,
    };
    if !ok {
        return Ok(RightmostDifference::HypothesesNotMet { vertex: v });
    }
    let pow = powers(g.n());
    let decreased = potential_unchecked(sigma, m_prime, &pow) < potential_unchecked(sigma, m, &pow);
    Ok(RightmostDifference::Checked { vertex: v, decreased })
}
