//! Finite commutative rings with identity.
//!
//! Rings are built from a [`RingSpec`] (cyclic, Gaussian-modular,
//! polynomial quotients over a prime field, and products of these) or, for
//! derived constructions such as quotients and localizations, from explicit
//! operation tables. Elements are dense indices into the carrier.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::elemset::{Elem, ElemSet};

/// Largest carrier accepted by any constructor.
pub const MAX_CARRIER: u32 = 4096;

/// Carriers at or below this size get memoized operation tables.
pub const MEMO_LIMIT: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("malformed ring spec: {0}")]
    MalformedSpec(String),
    #[error("carrier of {size} elements exceeds the limit of {MAX_CARRIER}")]
    TooLarge { size: u64 },
    #[error("cannot parse element `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("ring axiom violated: {0}")]
    Axiom(String),
}

/// Construction recipe for a concrete finite ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingSpec {
    /// `Z/n`.
    Cyclic(u32),
    /// `Z/n[i]` with `i^2 = -1`.
    GaussMod(u32),
    /// `F_p[u] / (modulus)`, modulus monic, coefficients listed from the
    /// constant term upwards.
    PolyQuotient { p: u32, modulus: Vec<i64> },
    Product(Box<RingSpec>, Box<RingSpec>),
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Cyclic(n) => write!(f, "Cyclic({n})"),
            RingSpec::GaussMod(n) => write!(f, "GaussMod({n})"),
            RingSpec::PolyQuotient { p, modulus } => {
                let p = *p as i64;
                let coeffs: Vec<i64> = modulus.iter().map(|c| c.rem_euclid(p.max(1))).collect();
                write!(f, "PolyQuotient(Cyclic({p}), {})", format_poly(&coeffs, p, 'u'))
            }
            RingSpec::Product(a, b) => write!(f, "{a} x {b}"),
        }
    }
}

/// Renders `sum c_k u^k` from highest degree down, printing coefficients
/// above `p/2` as negatives (so `u^2 + 2` over F_3 shows as `u^2-1`).
fn format_poly(coeffs: &[i64], p: i64, var: char) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let signed = if c > p / 2 { c - p } else { c };
        let mag = signed.abs();
        if out.is_empty() {
            if signed < 0 {
                out.push('-');
            }
        } else {
            out.push(if signed < 0 { '-' } else { '+' });
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag == 1 {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug)]
pub(crate) struct Tables {
    pub add: Vec<u16>,
    pub mul: Vec<u16>,
    pub neg: Vec<u16>,
}

#[derive(Debug)]
enum Arith {
    Cyclic { n: u32 },
    Gauss { n: u32 },
    /// `reduce[k]` is the coefficient of `u^k` in `u^deg`.
    Poly { p: u32, deg: usize, reduce: Vec<u32> },
    Product { left: FinRing, right: FinRing },
    Table { names: Vec<String> },
}

#[derive(Debug)]
struct RingInner {
    id: u64,
    size: u32,
    zero: Elem,
    one: Elem,
    arith: Arith,
    tables: Option<Tables>,
    label: String,
    units: OnceLock<ElemSet>,
    nilpotents: OnceLock<ElemSet>,
}

/// A finite commutative ring with nonzero identity. Cheap to clone.
#[derive(Debug, Clone)]
pub struct FinRing {
    inner: Arc<RingInner>,
}

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Builds the ring described by `spec`.
pub fn build_ring(spec: &RingSpec) -> Result<FinRing, RingError> {
    let (size, arith) = match spec {
        RingSpec::Cyclic(n) => {
            if *n < 2 {
                return Err(RingError::MalformedSpec(format!("Cyclic({n}) needs n >= 2")));
            }
            (*n as u64, Arith::Cyclic { n: *n })
        }
        RingSpec::GaussMod(n) => {
            if *n < 2 {
                return Err(RingError::MalformedSpec(format!("GaussMod({n}) needs n >= 2")));
            }
            ((*n as u64) * (*n as u64), Arith::Gauss { n: *n })
        }
        RingSpec::PolyQuotient { p, modulus } => {
            if !is_prime(*p) {
                return Err(RingError::MalformedSpec(format!(
                    "PolyQuotient base Cyclic({p}) is not a prime field"
                )));
            }
            let pi = *p as i64;
            let mut coeffs: Vec<i64> = modulus.iter().map(|c| c.rem_euclid(pi)).collect();
            while coeffs.last() == Some(&0) {
                coeffs.pop();
            }
            if coeffs.len() < 2 {
                return Err(RingError::MalformedSpec(
                    "PolyQuotient modulus must have degree >= 1".into(),
                ));
            }
            if *coeffs.last().unwrap() != 1 {
                return Err(RingError::MalformedSpec(
                    "PolyQuotient modulus must be monic".into(),
                ));
            }
            let deg = coeffs.len() - 1;
            let reduce = coeffs[..deg]
                .iter()
                .map(|&c| ((pi - c) % pi) as u32)
                .collect();
            let size = (*p as u64).checked_pow(deg as u32).unwrap_or(u64::MAX);
            (size, Arith::Poly { p: *p, deg, reduce })
        }
        RingSpec::Product(a, b) => {
            let left = build_ring(a)?;
            let right = build_ring(b)?;
            let size = left.size() as u64 * right.size() as u64;
            (size, Arith::Product { left, right })
        }
    };
    if size > MAX_CARRIER as u64 {
        return Err(RingError::TooLarge { size });
    }
    let size = size as u32;
    let one = match &arith {
        Arith::Product { left, right } => Elem(left.one().0 + left.size() * right.one().0),
        _ => Elem(1),
    };
    Ok(FinRing::assemble(size, Elem(0), one, arith, spec.to_string()))
}

impl FinRing {
    fn assemble(size: u32, zero: Elem, one: Elem, arith: Arith, label: String) -> FinRing {
        let mut inner = RingInner {
            id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
            size,
            zero,
            one,
            arith,
            tables: None,
            label,
            units: OnceLock::new(),
            nilpotents: OnceLock::new(),
        };
        if size <= MEMO_LIMIT && !matches!(inner.arith, Arith::Table { .. }) {
            let ring = FinRing { inner: Arc::new(inner) };
            let n = size as usize;
            let mut add = Vec::with_capacity(n * n);
            let mut mul = Vec::with_capacity(n * n);
            for a in 0..size {
                for b in 0..size {
                    add.push(ring.add_raw(Elem(a), Elem(b)).0 as u16);
                    mul.push(ring.mul_raw(Elem(a), Elem(b)).0 as u16);
                }
            }
            let neg = (0..size).map(|a| ring.neg_raw(Elem(a)).0 as u16).collect();
            inner = Arc::try_unwrap(ring.inner).expect("fresh ring is uniquely owned");
            inner.tables = Some(Tables { add, mul, neg });
        }
        FinRing { inner: Arc::new(inner) }
    }

    /// Builds a ring from explicit tables. Used by derived constructions,
    /// which are responsible for the ring axioms holding.
    pub(crate) fn from_tables(
        tables: Tables,
        zero: Elem,
        one: Elem,
        names: Vec<String>,
        label: String,
    ) -> Result<FinRing, RingError> {
        let size = names.len() as u32;
        if size > MAX_CARRIER {
            return Err(RingError::TooLarge { size: size as u64 });
        }
        if zero == one {
            return Err(RingError::MalformedSpec("zero ring has no nonzero unity".into()));
        }
        let inner = RingInner {
            id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
            size,
            zero,
            one,
            arith: Arith::Table { names },
            tables: Some(tables),
            label,
            units: OnceLock::new(),
            nilpotents: OnceLock::new(),
        };
        Ok(FinRing { inner: Arc::new(inner) })
    }

    /// Identity of this ring value; clones share it, distinct constructions never do.
    pub fn id(&self) -> u64 {
        self.inner.id
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    pub fn size(&self) -> u32 {
        self.inner.size
    }

    pub fn zero(&self) -> Elem {
        self.inner.zero
    }

    pub fn one(&self) -> Elem {
        self.inner.one
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.inner.size).map(Elem)
    }

    pub fn empty_set(&self) -> ElemSet {
        ElemSet::empty(self.size())
    }

    /// The two factors, when this ring was built as a product.
    pub fn factors(&self) -> Option<(&FinRing, &FinRing)> {
        match &self.inner.arith {
            Arith::Product { left, right } => Some((left, right)),
            _ => None,
        }
    }

    /// Index of the pair `(a, b)` in a product ring.
    pub fn pair(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.factors().map(|(l, _)| Elem(a.0 + l.size() * b.0))
    }

    /// Components of `x` in a product ring.
    pub fn split(&self, x: Elem) -> Option<(Elem, Elem)> {
        self.factors()
            .map(|(l, _)| (Elem(x.0 % l.size()), Elem(x.0 / l.size())))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.inner.tables {
            Some(t) => Elem(t.add[a.index() * self.inner.size as usize + b.index()] as u32),
            None => self.add_raw(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.inner.tables {
            Some(t) => Elem(t.mul[a.index() * self.inner.size as usize + b.index()] as u32),
            None => self.mul_raw(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.inner.tables {
            Some(t) => Elem(t.neg[a.index()] as u32),
            None => self.neg_raw(a),
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul3(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        self.mul(self.mul(a, b), c)
    }

    pub fn pow(&self, x: Elem, mut k: u64) -> Elem {
        let mut acc = self.one();
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `k * x` for an integer `k`.
    pub fn times(&self, x: Elem, k: i64) -> Elem {
        let mut acc = self.zero();
        let mut base = if k < 0 { self.neg(x) } else { x };
        let mut k = k.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn from_int(&self, k: i64) -> Elem {
        self.times(self.one(), k)
    }

    /// The adjoined generator (`i` or `u`) of a structured ring, with its name.
    pub fn generator(&self) -> Option<(char, Elem)> {
        match &self.inner.arith {
            Arith::Gauss { n } => Some(('i', Elem(*n))),
            Arith::Poly { p, deg, reduce } => {
                if *deg >= 2 {
                    Some(('u', Elem(*p)))
                } else {
                    Some(('u', Elem(reduce[0])))
                }
            }
            _ => None,
        }
    }

    fn add_raw(&self, a: Elem, b: Elem) -> Elem {
        match &self.inner.arith {
            Arith::Cyclic { n } => Elem((a.0 + b.0) % n),
            Arith::Gauss { n } => {
                let (a0, a1) = (a.0 % n, a.0 / n);
                let (b0, b1) = (b.0 % n, b.0 / n);
                Elem((a0 + b0) % n + n * ((a1 + b1) % n))
            }
            Arith::Poly { p, deg, .. } => {
                let x = poly_digits(a.0, *p, *deg);
                let y = poly_digits(b.0, *p, *deg);
                let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
                Elem(poly_index(&s, *p))
            }
            Arith::Product { left, right } => {
                let l = left.size();
                let s = left.add(Elem(a.0 % l), Elem(b.0 % l));
                let t = right.add(Elem(a.0 / l), Elem(b.0 / l));
                Elem(s.0 + l * t.0)
            }
            Arith::Table { .. } => unreachable!("table rings always carry tables"),
        }
    }

    fn mul_raw(&self, a: Elem, b: Elem) -> Elem {
        match &self.inner.arith {
            Arith::Cyclic { n } => Elem(((a.0 as u64 * b.0 as u64) % *n as u64) as u32),
            Arith::Gauss { n } => {
                let n64 = *n as u64;
                let (a0, a1) = ((a.0 % n) as u64, (a.0 / n) as u64);
                let (b0, b1) = ((b.0 % n) as u64, (b.0 / n) as u64);
                let re = (a0 * b0 + n64 * n64 - (a1 * b1) % n64) % n64;
                let im = (a0 * b1 + a1 * b0) % n64;
                Elem((re + n64 * im) as u32)
            }
            Arith::Poly { p, deg, reduce } => {
                let x = poly_digits(a.0, *p, *deg);
                let y = poly_digits(b.0, *p, *deg);
                let p64 = *p as u64;
                let mut prod = vec![0u64; 2 * deg - 1];
                for (i, &u) in x.iter().enumerate() {
                    for (j, &v) in y.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + u as u64 * v as u64) % p64;
                    }
                }
                for k in (*deg..prod.len()).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    for (j, &r) in reduce.iter().enumerate() {
                        let t = k - deg + j;
                        prod[t] = (prod[t] + c * r as u64) % p64;
                    }
                }
                let digits: Vec<u32> = prod[..*deg].iter().map(|&c| c as u32).collect();
                Elem(poly_index(&digits, *p))
            }
            Arith::Product { left, right } => {
                let l = left.size();
                let s = left.mul(Elem(a.0 % l), Elem(b.0 % l));
                let t = right.mul(Elem(a.0 / l), Elem(b.0 / l));
                Elem(s.0 + l * t.0)
            }
            Arith::Table { .. } => unreachable!("table rings always carry tables"),
        }
    }

    fn neg_raw(&self, a: Elem) -> Elem {
        match &self.inner.arith {
            Arith::Cyclic { n } => Elem((n - a.0) % n),
            Arith::Gauss { n } => {
                let (a0, a1) = (a.0 % n, a.0 / n);
                Elem((n - a0) % n + n * ((n - a1) % n))
            }
            Arith::Poly { p, deg, .. } => {
                let x = poly_digits(a.0, *p, *deg);
                let s: Vec<u32> = x.iter().map(|&u| (p - u) % p).collect();
                Elem(poly_index(&s, *p))
            }
            Arith::Product { left, right } => {
                let l = left.size();
                let s = left.neg(Elem(a.0 % l));
                let t = right.neg(Elem(a.0 / l));
                Elem(s.0 + l * t.0)
            }
            Arith::Table { .. } => unreachable!("table rings always carry tables"),
        }
    }

    /// Human-readable name of an element.
    pub fn name(&self, x: Elem) -> String {
        match &self.inner.arith {
            Arith::Cyclic { .. } => x.0.to_string(),
            Arith::Gauss { n } => {
                let (a, b) = (x.0 % n, x.0 / n);
                let imag = match b {
                    0 => String::new(),
                    1 => "i".to_string(),
                    _ => format!("{b}*i"),
                };
                match (a, b) {
                    (_, 0) => a.to_string(),
                    (0, _) => imag,
                    _ => format!("{a}+{imag}"),
                }
            }
            Arith::Poly { p, deg, .. } => {
                let digits = poly_digits(x.0, *p, *deg);
                let mut terms = Vec::new();
                for (k, &c) in digits.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let mono = match k {
                        0 => String::new(),
                        1 => "u".to_string(),
                        _ => format!("u^{k}"),
                    };
                    terms.push(match (c, mono.is_empty()) {
                        (_, true) => c.to_string(),
                        (1, false) => mono,
                        _ => format!("{c}*{mono}"),
                    });
                }
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join("+")
                }
            }
            Arith::Product { left, right } => {
                let l = left.size();
                format!("({}, {})", left.name(Elem(x.0 % l)), right.name(Elem(x.0 / l)))
            }
            Arith::Table { names } => names[x.index()].clone(),
        }
    }

    pub fn names(&self, xs: impl IntoIterator<Item = Elem>) -> Vec<String> {
        xs.into_iter().map(|x| self.name(x)).collect()
    }

    /// Parses an element expression: integers, the ring's generator (`i` or
    /// `u`), `+ - * ^`, parentheses, and `(a, b)` pairs in product rings.
    /// Rings built from tables accept their element names verbatim.
    pub fn parse_element(&self, input: &str) -> Result<Elem, RingError> {
        if let Arith::Table { names } = &self.inner.arith {
            let wanted = input.trim();
            if let Some(pos) = names.iter().position(|n| n == wanted) {
                return Ok(Elem(pos as u32));
            }
        }
        let err = |reason: String| RingError::Parse {
            input: input.to_string(),
            reason,
        };
        let expr = expr::parse(input).map_err(err)?;
        self.eval(&expr).map_err(err)
    }

    fn eval(&self, e: &expr::Expr) -> Result<Elem, String> {
        use expr::Expr;
        Ok(match e {
            Expr::Int(k) => self.from_int(*k),
            Expr::Var(c) => match self.generator() {
                Some((g, x)) if g == *c => x,
                _ => return Err(format!("`{c}` is not a generator of {}", self.label())),
            },
            Expr::Neg(a) => self.neg(self.eval(a)?),
            Expr::Add(a, b) => self.add(self.eval(a)?, self.eval(b)?),
            Expr::Sub(a, b) => self.sub(self.eval(a)?, self.eval(b)?),
            Expr::Mul(a, b) => self.mul(self.eval(a)?, self.eval(b)?),
            Expr::Pow(a, k) => self.pow(self.eval(a)?, *k),
            Expr::Pair(a, b) => match self.factors() {
                Some((l, r)) => {
                    let x = l.eval(a)?;
                    let y = r.eval(b)?;
                    Elem(x.0 + l.size() * y.0)
                }
                None => return Err(format!("pairs only make sense in product rings, not {}", self.label())),
            },
        })
    }

    /// Exhaustive scan of the commutative ring axioms. Cubic in the carrier size.
    pub fn verify_axioms(&self) -> Result<(), RingError> {
        let fail = |m: String| Err(RingError::Axiom(m));
        if self.zero() == self.one() {
            return fail("0 = 1".into());
        }
        let name = |x: Elem| self.name(x);
        for a in self.elements() {
            if self.add(a, self.zero()) != a {
                return fail(format!("{} + 0 != {}", name(a), name(a)));
            }
            if self.mul(a, self.one()) != a {
                return fail(format!("{} * 1 != {}", name(a), name(a)));
            }
            if self.add(a, self.neg(a)) != self.zero() {
                return fail(format!("{} + (-{}) != 0", name(a), name(a)));
            }
            for b in self.elements() {
                if self.add(a, b) != self.add(b, a) {
                    return fail(format!("addition not commutative at ({}, {})", name(a), name(b)));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail(format!("multiplication not commutative at ({}, {})", name(a), name(b)));
                }
                for c in self.elements() {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail(format!("addition not associative at ({}, {}, {})", name(a), name(b), name(c)));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail(format!("multiplication not associative at ({}, {}, {})", name(a), name(b), name(c)));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail(format!("distributivity fails at ({}, {}, {})", name(a), name(b), name(c)));
                    }
                }
            }
        }
        Ok(())
    }

    /// All `x` with `xy = 1` for some `y`.
    pub fn unit_set(&self) -> &ElemSet {
        self.inner.units.get_or_init(|| {
            let one = self.one();
            ElemSet::from_elems(
                self.size(),
                self.elements()
                    .filter(|&x| self.elements().any(|y| self.mul(x, y) == one)),
            )
        })
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        self.unit_set().contains(x)
    }

    /// All `x` with `x^k = 0` for some `1 <= k <= |R|`.
    pub fn nilradical(&self) -> &ElemSet {
        self.inner.nilpotents.get_or_init(|| {
            ElemSet::from_elems(
                self.size(),
                self.elements().filter(|&x| self.is_nilpotent_scan(x)),
            )
        })
    }

    fn is_nilpotent_scan(&self, x: Elem) -> bool {
        let zero = self.zero();
        let mut power = x;
        for _ in 0..self.size() {
            if power == zero {
                return true;
            }
            power = self.mul(power, x);
        }
        false
    }

    pub fn is_nilpotent(&self, x: Elem) -> bool {
        self.nilradical().contains(x)
    }

    /// `x != 0` and `xy = 0` for some nonzero `y`.
    pub fn is_zero_divisor(&self, x: Elem) -> bool {
        let zero = self.zero();
        x != zero && self.elements().any(|y| y != zero && self.mul(x, y) == zero)
    }

    /// Every nonzero element is a unit.
    pub fn is_field(&self) -> bool {
        self.unit_set().len() + 1 == self.size() as usize
    }
}

fn poly_digits(mut x: u32, p: u32, deg: usize) -> Vec<u32> {
    let mut d = Vec::with_capacity(deg);
    for _ in 0..deg {
        d.push(x % p);
        x /= p;
    }
    d
}

fn poly_index(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

impl PartialEq for FinRing {
    fn eq(&self, other: &Self) -> bool {
        self.id() == other.id()
    }
}

impl Eq for FinRing {}

/// Element expression syntax.
mod expr {
    #[derive(Debug, Clone)]
    pub enum Expr {
        Int(i64),
        Var(char),
        Neg(Box<Expr>),
        Add(Box<Expr>, Box<Expr>),
        Sub(Box<Expr>, Box<Expr>),
        Mul(Box<Expr>, Box<Expr>),
        Pow(Box<Expr>, u64),
        Pair(Box<Expr>, Box<Expr>),
    }

    struct Parser<'a> {
        chars: Vec<char>,
        pos: usize,
        _src: &'a str,
    }

    pub fn parse(src: &str) -> Result<Expr, String> {
        let mut p = Parser {
            chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            _src: src,
        };
        if p.chars.is_empty() {
            return Err("empty expression".into());
        }
        let e = p.sum()?;
        if p.pos != p.chars.len() {
            return Err(format!("unexpected `{}` at offset {}", p.chars[p.pos], p.pos));
        }
        Ok(e)
    }

    impl Parser<'_> {
        fn peek(&self) -> Option<char> {
            self.chars.get(self.pos).copied()
        }

        fn eat(&mut self, c: char) -> bool {
            if self.peek() == Some(c) {
                self.pos += 1;
                true
            } else {
                false
            }
        }

        fn sum(&mut self) -> Result<Expr, String> {
            let mut lhs = if self.eat('-') {
                Expr::Neg(Box::new(self.product()?))
            } else {
                self.eat('+');
                self.product()?
            };
            loop {
                if self.eat('+') {
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
                } else if self.eat('-') {
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
                } else {
                    return Ok(lhs);
                }
            }
        }

        fn product(&mut self) -> Result<Expr, String> {
            let mut lhs = self.power()?;
            loop {
                if self.eat('*') {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                } else if matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == '(') {
                    // juxtaposition, e.g. `2i` or `3u^2`
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                } else {
                    return Ok(lhs);
                }
            }
        }

        fn power(&mut self) -> Result<Expr, String> {
            let base = self.atom()?;
            if self.eat('^') {
                let k = self.integer()?;
                if k < 0 {
                    return Err("negative exponent".into());
                }
                Ok(Expr::Pow(Box::new(base), k as u64))
            } else {
                Ok(base)
            }
        }

        fn integer(&mut self) -> Result<i64, String> {
            let start = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(format!("expected integer at offset {start}"));
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            digits.parse().map_err(|_| format!("integer `{digits}` out of range"))
        }

        fn atom(&mut self) -> Result<Expr, String> {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.integer()?)),
                Some(c) if c.is_ascii_alphabetic() => {
                    self.pos += 1;
                    Ok(Expr::Var(c))
                }
                Some('(') => {
                    self.pos += 1;
                    let first = self.sum()?;
                    if self.eat(',') {
                        let second = self.sum()?;
                        if !self.eat(')') {
                            return Err("expected `)` after pair".into());
                        }
                        Ok(Expr::Pair(Box::new(first), Box::new(second)))
                    } else if self.eat(')') {
                        Ok(first)
                    } else {
                        Err("unbalanced parenthesis".into())
                    }
                }
                Some(c) => Err(format!("unexpected `{c}` at offset {}", self.pos)),
                None => Err("unexpected end of expression".into()),
            }
        }
    }
}
