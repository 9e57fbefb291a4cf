//! Finite commutative semigroups as Cayley tables, with the subset machinery
//! built on them: idealizers, separators, contexts, principal congruences,
//! quotients, annihilators and torsion sets.

pub mod generate;
pub mod ideals;
pub mod iso;
pub mod laws;
pub mod partition;
pub mod set;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use partition::Partition;
pub use set::{ElementSet, PairContext};

#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize)]
pub enum SemigroupError {
    #[error("table entry at row {row}, column {col} is {value}, outside 0..{order}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not commutative: {a}*{b} != {b}*{a}")]
    NotCommutative { a: usize, b: usize },
    #[error("not associative at ({a},{b},{c}): ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("empty table")]
    EmptyTable,
    #[error("expected a nonempty subset")]
    EmptySet,
    #[error("semigroup has no zero element")]
    NoZero,
    #[error("semigroup has no identity element")]
    NoIdentity,
    #[error("carrier too small: need at least {need} elements")]
    TooSmall { need: usize },
    #[error("subset is not an ideal")]
    NotAnIdeal,
    #[error("ideal is not proper")]
    NotProper,
    #[error("ideal is not maximal")]
    NotMaximal,
    #[error("partition is not a congruence")]
    NotACongruence,
    #[error("ideal has empty separator")]
    EmptySeparator,
    #[error("quotient does not satisfy the star condition")]
    QuotientNotStar,
    #[error("nonzero elements are not closed under multiplication: {a}*{b} = 0")]
    NonzeroNotClosed { a: usize, b: usize },
    #[error("ideal must contain a nonzero element")]
    ZeroIdealOnly,
    #[error("size limit exceeded: {what}")]
    SizeLimitExceeded { what: String },
    #[error("bad table file: {0}")]
    Parse(String),
}

/// A finite commutative semigroup given by its Cayley table.
///
/// `table[a * n + b]` is the product `a*b`. Construction via [`CommSemigroup::validate`]
/// checks associativity and commutativity and caches the identity and zero
/// elements when they exist.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommSemigroup {
    order: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
    identity: Option<usize>,
    zero: Option<usize>,
}

impl CommSemigroup {
    /// Check a raw table and build the semigroup.
    pub fn validate(rows: &[Vec<usize>]) -> Result<Self, SemigroupError> {
        Self::validate_labeled(rows, None)
    }

    pub fn validate_labeled(
        rows: &[Vec<usize>],
        labels: Option<Vec<String>>,
    ) -> Result<Self, SemigroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(SemigroupError::EmptyTable);
        }
        let mut table = vec![0usize; n * n];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(SemigroupError::Parse(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(SemigroupError::IndexOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                        order: n,
                    });
                }
                table[i * n + j] = v;
            }
        }
        if let Some(ls) = &labels {
            if ls.len() != n {
                return Err(SemigroupError::Parse(format!(
                    "{} labels for order {n}",
                    ls.len()
                )));
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if table[a * n + b] != table[b * n + a] {
                    return Err(SemigroupError::NotCommutative { a, b });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(SemigroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(Self::from_table_unchecked(n, table, labels))
    }

    /// Build without re-running the associativity scan. Callers must supply a
    /// valid commutative table.
    pub(crate) fn from_table_unchecked(
        order: usize,
        table: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Self {
        let identity = (0..order).find(|&e| (0..order).all(|x| table[e * order + x] == x));
        let zero = (0..order).find(|&z| (0..order).all(|x| table[z * order + x] == z));
        CommSemigroup {
            order,
            table,
            labels,
            identity,
            zero,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of an element, falling back to its index.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(ls) => ls[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    /// The annihilator `{x : x*s = 0}`. Requires a zero element.
    pub fn annihilator(&self, s: usize) -> Result<ElementSet, SemigroupError> {
        let zero = self.zero.ok_or(SemigroupError::NoZero)?;
        let ann = ElementSet::from_members(
            self.order,
            (0..self.order).filter(|&x| self.mul(x, s) == zero),
        );
        debug_assert!(ideals::is_ideal(self, &ann).unwrap_or(false));
        Ok(ann)
    }

    /// Torsion elements: those whose annihilator contains a nonzero element.
    /// The result is always an ideal (checked).
    pub fn torsion_set(&self) -> Result<ElementSet, SemigroupError> {
        let zero = self.zero.ok_or(SemigroupError::NoZero)?;
        if self.order < 2 {
            return Err(SemigroupError::TooSmall { need: 2 });
        }
        let mut t = ElementSet::empty(self.order);
        for s in 0..self.order {
            let torsion = (0..self.order).any(|x| x != zero && self.mul(x, s) == zero);
            if torsion {
                t.insert(s);
            }
        }
        assert!(
            ideals::is_ideal(self, &t).unwrap_or(false),
            "torsion set must be an ideal"
        );
        Ok(t)
    }

    /// The context of `a` relative to `H`: pairs `(x, y)` with `x*a*y` in `H`,
    /// quantified over the full carrier.
    pub fn context(&self, h: &ElementSet, a: usize) -> PairContext {
        assert_eq!(h.carrier(), self.order);
        let mut ctx = PairContext::empty(self.order);
        for x in 0..self.order {
            let xa = self.mul(x, a);
            for y in 0..self.order {
                if h.contains(self.mul(xa, y)) {
                    ctx.insert(x, y);
                }
            }
        }
        ctx
    }

    /// The principal congruence defined by `H`: elements are identified when
    /// their contexts relative to `H` coincide. The result is verified to be
    /// compatible with multiplication.
    pub fn principal_congruence(&self, h: &ElementSet) -> Partition {
        assert_eq!(h.carrier(), self.order);
        let n = self.order;
        // Row membership masks: row_h[r] has bit y set iff r*y lies in H.
        // The context of a is then the stack of rows row_h[x*a].
        let words = n.div_ceil(64);
        let mut row_h = vec![0u64; n * words];
        for r in 0..n {
            for y in 0..n {
                if h.contains(self.mul(r, y)) {
                    row_h[r * words + y / 64] |= 1 << (y % 64);
                }
            }
        }
        let mut first_with_context: HashMap<Vec<u64>, usize> = HashMap::new();
        let labels: Vec<usize> = (0..n)
            .map(|a| {
                let mut ctx = Vec::with_capacity(n * words);
                for x in 0..n {
                    let xa = self.mul(x, a);
                    ctx.extend_from_slice(&row_h[xa * words..(xa + 1) * words]);
                }
                let next = first_with_context.len();
                *first_with_context.entry(ctx).or_insert(next)
            })
            .collect();
        let p = Partition::from_labels(&labels);
        assert!(
            self.is_congruence(&p),
            "principal congruence failed the compatibility check"
        );
        p
    }

    /// True iff the partition respects multiplication by every element.
    pub fn is_congruence(&self, p: &Partition) -> bool {
        if p.carrier() != self.order {
            return false;
        }
        for s in 0..self.order {
            for c in 0..p.num_classes() {
                let members = p.class_members(c);
                let target = p.class_of(self.mul(s, members[0]));
                if members[1..]
                    .iter()
                    .any(|&x| p.class_of(self.mul(s, x)) != target)
                {
                    return false;
                }
            }
        }
        true
    }

    /// Factor semigroup by a congruence, together with the class map.
    /// Labels of the quotient come from class representatives.
    pub fn quotient(&self, p: &Partition) -> Result<(CommSemigroup, Vec<usize>), SemigroupError> {
        if !self.is_congruence(p) {
            return Err(SemigroupError::NotACongruence);
        }
        let k = p.num_classes();
        let mut table = vec![0usize; k * k];
        for i in 0..k {
            for j in 0..k {
                table[i * k + j] = p.class_of(self.mul(p.representative(i), p.representative(j)));
            }
        }
        let labels = Some(
            (0..k)
                .map(|c| format!("[{}]", self.label(p.representative(c))))
                .collect(),
        );
        let q = CommSemigroup::from_table_unchecked(k, table, labels);
        Ok((q, p.representatives().to_vec()))
    }

    /// Parse the Cayley table text format: first line the order, then the
    /// rows, then an optional `labels: ...` line.
    pub fn parse(text: &str) -> Result<Self, SemigroupError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| SemigroupError::Parse("missing order line".into()))?
            .parse()
            .map_err(|_| SemigroupError::Parse("order line is not an integer".into()))?;
        if n == 0 {
            return Err(SemigroupError::EmptyTable);
        }
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| SemigroupError::Parse(format!("missing row {i}")))?;
            let row: Result<Vec<usize>, _> =
                line.split_whitespace().map(str::parse::<usize>).collect();
            let row = row.map_err(|_| SemigroupError::Parse(format!("row {i} has a bad entry")))?;
            rows.push(row);
        }
        let labels = match lines.next() {
            None => None,
            Some(rest) => {
                let tail = rest
                    .strip_prefix("labels:")
                    .ok_or_else(|| SemigroupError::Parse(format!("unexpected line: {rest}")))?;
                Some(tail.split_whitespace().map(str::to_string).collect())
            }
        };
        if let Some(extra) = lines.next() {
            return Err(SemigroupError::Parse(format!("unexpected line: {extra}")));
        }
        Self::validate_labeled(&rows, labels)
    }

    /// Render in the same text format `parse` accepts.
    pub fn to_table_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for a in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|b| self.mul(a, b).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        if let Some(ls) = &self.labels {
            out.push_str(&format!("labels: {}\n", ls.join(" ")));
        }
        out
    }

    /// Resolve a comma-separated list of labels or indices into a subset.
    pub fn parse_subset(&self, text: &str) -> Result<ElementSet, SemigroupError> {
        let mut set = ElementSet::empty(self.order);
        for token in text.split(',') {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            let by_label = self
                .labels
                .as_ref()
                .and_then(|ls| ls.iter().position(|l| l == token));
            let idx = match by_label {
                Some(i) => i,
                None => token
                    .parse::<usize>()
                    .map_err(|_| SemigroupError::Parse(format!("unknown element: {token}")))?,
            };
            if idx >= self.order {
                return Err(SemigroupError::Parse(format!(
                    "element index {idx} out of range 0..{}",
                    self.order
                )));
            }
            set.insert(idx);
        }
        Ok(set)
    }
}

impl fmt::Display for CommSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_table_text())
    }
}

/// The worked 3-element monoid with a zero: elements 1, 2, 0 with 2*2 = 0.
pub fn three_element_monoid() -> CommSemigroup {
    CommSemigroup::validate_labeled(
        &[vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]],
        Some(vec!["1".into(), "2".into(), "0".into()]),
    )
    .unwrap()
}

/// The multiplicative semigroup of integers modulo `m`.
pub fn mul_mod(m: usize) -> CommSemigroup {
    let rows: Vec<Vec<usize>> = (0..m)
        .map(|a| (0..m).map(|b| a * b % m).collect())
        .collect();
    CommSemigroup::validate(&rows).unwrap()
}
