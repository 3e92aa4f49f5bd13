use std::fmt;

/// The variables of the cotangent ring for a base of dimension `n`.
///
/// Base coordinates `t1..tn`, conjugate fiber coordinates `y1..yn` and one
/// auxiliary variable `z` reserved for radical-membership queries. Internally
/// the exponent vector is laid out as `y1..yn, t1..tn, z`, which is also the
/// ranking used by every monomial order (`y1` most significant, `z` least).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VariableSet {
    n: usize,
}

/// Which block a variable index belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    /// Fiber coordinate `y_i` (1-based).
    Fiber(usize),
    /// Base coordinate `t_i` (1-based).
    Base(usize),
    /// The auxiliary variable `z`.
    Aux,
}

impl VariableSet {
    /// Panics if `n == 0`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "a variable set needs at least one base coordinate");
        VariableSet { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of variables, `2n + 1`.
    pub fn len(&self) -> usize {
        2 * self.n + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index of `y_i`, 1-based `i`.
    pub fn y(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.n);
        i - 1
    }

    /// Index of `t_i`, 1-based `i`.
    pub fn t(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.n);
        self.n + i - 1
    }

    pub fn z(&self) -> usize {
        2 * self.n
    }

    pub fn kind(&self, idx: usize) -> VarKind {
        if idx < self.n {
            VarKind::Fiber(idx + 1)
        } else if idx < 2 * self.n {
            VarKind::Base(idx - self.n + 1)
        } else {
            assert!(idx == 2 * self.n, "variable index {idx} out of range");
            VarKind::Aux
        }
    }

    pub fn is_fiber(&self, idx: usize) -> bool {
        idx < self.n
    }

    pub fn is_base(&self, idx: usize) -> bool {
        idx >= self.n && idx < 2 * self.n
    }

    pub fn name(&self, idx: usize) -> String {
        match self.kind(idx) {
            VarKind::Fiber(i) => format!("y{i}"),
            VarKind::Base(i) => format!("t{i}"),
            VarKind::Aux => "z".to_string(),
        }
    }

    /// Variable names in presentation order: `t1..tn, y1..yn, z`.
    pub fn names(&self) -> Vec<String> {
        self.print_order().map(|idx| self.name(idx)).collect()
    }

    /// Indices in the order factors are written inside a printed term.
    pub(crate) fn print_order(&self) -> impl Iterator<Item = usize> {
        let n = self.n;
        (n..2 * n).chain(0..n).chain(std::iter::once(2 * n))
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        if name == "z" {
            return Some(self.z());
        }
        let (prefix, digits) = name.split_at(1);
        if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let i: usize = digits.parse().ok()?;
        if i == 0 || i > self.n {
            return None;
        }
        match prefix {
            "t" => Some(self.t(i)),
            "y" => Some(self.y(i)),
            _ => None,
        }
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names().join(", "))
    }
}
