use serde::{Deserialize, Serialize};

use super::{is_s_arc_transitive, is_s_geodesic_transitive, validate_group, SymmetryError};
use crate::graph::Graph;
use crate::perm::PermGroup;

/// One of the admissible vertex-stabilizer orders for an s-arc or
/// s-geodesic transitive graph of valency `q + 1`, `q = p^f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateForm {
    /// `"q^2 (q-1)/(3,q-1) |PGL(2,q)| |o|"`, `"q^3 |GL(2,q)| e"` or
    /// `"q^5 |GL(2,q)| e"`.
    pub form: String,
    /// The order without the free factor.
    pub base_order: u128,
    /// `|G_u| / base_order` when it divides, i.e. `|o|` or `e`.
    pub cofactor: Option<u128>,
    /// The cofactor must divide this: `(3, q-1) f` or `f`.
    pub cofactor_divides: u128,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeissReport {
    pub s: usize,
    pub valency: usize,
    pub q: u64,
    pub p: u64,
    pub f: u32,
    /// `|G_u|`.
    pub stabilizer_order: u128,
    /// How the precondition was established: `"s-arc"` or `"s-geodesic"`.
    pub transitivity: String,
    /// `b_0 b_1 .. b_s`, reported when `s <= diameter`.
    pub b_product: Option<u128>,
    pub b_product_divides: Option<bool>,
    /// `None` for values of s without a listed form.
    pub candidate: Option<CandidateForm>,
}

/// `(p, f)` with `q = p^f`, if `q` is a prime power.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut f = 0;
    while rest % p == 0 {
        rest /= p;
        f += 1;
    }
    (rest == 1).then_some((p, f))
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn candidate(s: usize, q: u64, f: u32, stab: u128) -> Option<CandidateForm> {
    let q = q as u128;
    let gl2 = (q * q - 1) * (q * q - q);
    let pgl2 = q * (q * q - 1);
    let g3 = gcd(3, q - 1);
    let (form, base, bound) = match s {
        4 => ("q^2 (q-1)/(3,q-1) |PGL(2,q)| |o|", q * q * (q - 1) / g3 * pgl2, g3 * f as u128),
        5 => ("q^3 |GL(2,q)| e", q.pow(3) * gl2, f as u128),
        7 => ("q^5 |GL(2,q)| e", q.pow(5) * gl2, f as u128),
        _ => return None,
    };
    let cofactor = (stab % base == 0).then(|| stab / base);
    Some(CandidateForm {
        form: form.to_string(),
        base_order: base,
        cofactor,
        cofactor_divides: bound,
        matches: cofactor.is_some_and(|c| bound % c == 0),
    })
}

/// Checks `|G_u|` against the product `b_0 .. b_s` and against the
/// stabilizer orders allowed for valency `q + 1`.
///
/// Requires s >= 4 and either s-arc transitivity, or `s <= diameter` and
/// s-geodesic transitivity; both are tested here.
pub fn weiss_divisibility_check(
    g: &Graph,
    group: &PermGroup,
    s: usize,
) -> Result<WeissReport, SymmetryError> {
    validate_group(g, group)?;
    let valency = g.valency().ok_or_else(|| SymmetryError::PreconditionUnverified("graph is not regular".into()))?;
    let (p, f) = prime_power(valency.saturating_sub(1) as u64)
        .ok_or(SymmetryError::ValencyNotPrimePowerPlusOne(valency))?;
    let q = (valency - 1) as u64;
    if s < 4 {
        return Err(SymmetryError::PreconditionUnverified(format!("s = {s} is below 4")));
    }
    let diameter = g.diameter()?;
    let transitivity = if is_s_arc_transitive(g, group, s)? {
        "s-arc"
    } else if s <= diameter && is_s_geodesic_transitive(g, group, s)? {
        "s-geodesic"
    } else {
        return Err(SymmetryError::PreconditionUnverified(format!(
            "the group is neither {s}-arc transitive nor {s}-geodesic transitive"
        )));
    };
    let stabilizer_order = group.stabilizer_order(&[0])?;
    let b_product = if s <= diameter {
        let data = g.intersection_data(0)?;
        (0..=s).map(|i| data.b(i).map(|b| b as u128)).product::<Option<u128>>()
    } else {
        None
    };
    Ok(WeissReport {
        s,
        valency,
        q,
        p,
        f,
        stabilizer_order,
        transitivity: transitivity.to_string(),
        b_product,
        b_product_divides: b_product.map(|b| b != 0 && stabilizer_order % b == 0),
        candidate: candidate(s, q, f, stabilizer_order),
    })
}
