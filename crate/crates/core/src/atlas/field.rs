use super::AtlasError;

/// GF(q) for q <= 16 as explicit tables. Elements are `0..q`; for
/// q = p^e an element is the polynomial whose base-p digits are its
/// coefficients (least significant digit is the constant term).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    e: u32,
    q: usize,
    add: Vec<Vec<u8>>,
    mul: Vec<Vec<u8>>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// Monic irreducible modulus, lowest coefficient first, without the
/// leading 1.
fn modulus(p: u32, e: u32) -> Option<Vec<u32>> {
    Some(match (p, e) {
        (_, 1) => vec![0],
        (2, 2) => vec![1, 1],       // x^2 + x + 1
        (2, 3) => vec![1, 1, 0],    // x^3 + x + 1
        (2, 4) => vec![1, 1, 0, 0], // x^4 + x + 1
        (3, 2) => vec![2, 1],       // x^2 + x + 2
        _ => return None,
    })
}

fn split(q: usize) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut r, mut e) = (q, 0);
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p as u32, e))
}

impl FiniteField {
    /// Builds GF(q) and checks every field axiom over all elements.
    pub fn new(q: usize) -> Result<Self, AtlasError> {
        let (p, e) = split(q).ok_or(AtlasError::UnsupportedQ(q))?;
        if q > 16 {
            return Err(AtlasError::UnsupportedQ(q));
        }
        let m = modulus(p, e).ok_or(AtlasError::UnsupportedQ(q))?;
        let digits = |x: usize| -> Vec<u32> {
            (0..e).map(|i| ((x / (p as usize).pow(i)) % p as usize) as u32).collect()
        };
        let pack = |d: &[u32]| -> usize {
            d.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize)
        };
        let mut add = vec![vec![0u8; q]; q];
        let mut mul = vec![vec![0u8; q]; q];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a][b] = pack(&sum) as u8;
                // schoolbook product, then reduce with x^e = -(m_0 + .. )
                let mut prod = vec![0u32; 2 * e as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for k in (e as usize..prod.len()).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    for (i, mi) in m.iter().enumerate() {
                        let t = k - e as usize + i;
                        prod[t] = (prod[t] + (p - c) * mi) % p;
                    }
                }
                if e == 1 {
                    mul[a][b] = ((a * b) % q) as u8;
                } else {
                    mul[a][b] = pack(&prod[..e as usize]) as u8;
                }
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[a][b] == 0).unwrap_or(0) as u8).collect();
        let inv = (0..q)
            .map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mul[a][b] == 1).unwrap_or(0) as u8 })
            .collect();
        let field = FiniteField { p, e, q, add, mul, neg, inv };
        field.check_axioms()?;
        Ok(field)
    }

    fn check_axioms(&self) -> Result<(), AtlasError> {
        let q = self.q;
        let fail = |what: &str| Err(AtlasError::FieldAxiom { q, axiom: what.to_string() });
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a {
                return fail("identity");
            }
            if self.add(a, self.neg(a)) != 0 {
                return fail("additive inverse");
            }
            if a != 0 && self.mul(a, self.inv(a)) != 1 {
                return fail("multiplicative inverse");
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return fail("commutativity");
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                    {
                        return fail("associativity");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    /// Multiplicative inverse; `inv(0) = 0`.
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn dot(&self, x: &[usize], y: &[usize]) -> usize {
        x.iter().zip(y).fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }

    /// Scales `x` so that its first nonzero coordinate is 1.
    pub fn normalize(&self, x: &[usize]) -> Vec<usize> {
        match x.iter().find(|&&c| c != 0) {
            None => x.to_vec(),
            Some(&lead) => {
                let s = self.inv(lead);
                x.iter().map(|&c| self.mul(s, c)).collect()
            }
        }
    }

    /// Points of PG(d - 1, q): normalized nonzero vectors of length `d`,
    /// in lexicographic order.
    pub fn projective_points(&self, d: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let total = self.q.pow(d as u32);
        for code in 1..total {
            let v: Vec<usize> = (0..d).rev().map(|i| (code / self.q.pow(i as u32)) % self.q).collect();
            if self.normalize(&v) == v {
                out.push(v);
            }
        }
        out
    }
}
