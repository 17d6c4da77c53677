use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// `F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}`.
    Fibonacci,
    /// `L_0 = 2, L_1 = 1, L_n = L_{n-1} + L_{n-2}`.
    Lucas,
    /// `J_0 = 2, J_1 = 1, J_n = J_{n-1} + 2 J_{n-2}`.
    JacobsthalLucas,
    /// `p'_0 = 1, p'_1 = 2, p'_2 = 3, p'_n = p'_{n-2} + p'_{n-3}`.
    Padovan123,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 4] = [
        SequenceKind::Fibonacci,
        SequenceKind::Lucas,
        SequenceKind::JacobsthalLucas,
        SequenceKind::Padovan123,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::Fibonacci => "fibonacci",
            SequenceKind::Lucas => "lucas",
            SequenceKind::JacobsthalLucas => "jacobsthal_lucas",
            SequenceKind::Padovan123 => "padovan123",
        }
    }

    fn seed(self) -> Vec<BigInt> {
        let s: &[i64] = match self {
            SequenceKind::Fibonacci => &[0, 1],
            SequenceKind::Lucas => &[2, 1],
            SequenceKind::JacobsthalLucas => &[2, 1],
            SequenceKind::Padovan123 => &[1, 2, 3],
        };
        s.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn next(self, v: &[BigInt]) -> BigInt {
        let n = v.len();
        match self {
            SequenceKind::Fibonacci | SequenceKind::Lucas => &v[n - 1] + &v[n - 2],
            SequenceKind::JacobsthalLucas => &v[n - 1] + &v[n - 2] * 2,
            SequenceKind::Padovan123 => &v[n - 2] + &v[n - 3],
        }
    }
}

/// Memoised values of one sequence. Reads take a shared lock; growth takes
/// the write lock once per extension.
#[derive(Debug)]
pub struct SequenceTable {
    kind: SequenceKind,
    values: RwLock<Vec<BigInt>>,
}

impl SequenceTable {
    pub fn new(kind: SequenceKind) -> Self {
        SequenceTable {
            kind,
            values: RwLock::new(kind.seed()),
        }
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn get(&self, n: usize) -> BigInt {
        if let Some(v) = self.values.read().expect("sequence lock poisoned").get(n) {
            return v.clone();
        }
        let mut w = self.values.write().expect("sequence lock poisoned");
        while w.len() <= n {
            let next = self.kind.next(&w);
            w.push(next);
        }
        w[n].clone()
    }

    pub fn prefix(&self, len: usize) -> Vec<BigInt> {
        (0..len).map(|n| self.get(n)).collect()
    }
}

fn table(kind: SequenceKind) -> &'static SequenceTable {
    static TABLES: OnceLock<[SequenceTable; 4]> = OnceLock::new();
    let t = TABLES.get_or_init(|| SequenceKind::ALL.map(SequenceTable::new));
    &t[SequenceKind::ALL.iter().position(|&k| k == kind).expect("kind is listed")]
}

pub fn sequence(kind: SequenceKind, n: usize) -> BigInt {
    table(kind).get(n)
}

pub fn fibonacci(n: usize) -> BigInt {
    sequence(SequenceKind::Fibonacci, n)
}

pub fn lucas(n: usize) -> BigInt {
    sequence(SequenceKind::Lucas, n)
}

pub fn jacobsthal_lucas(n: usize) -> BigInt {
    sequence(SequenceKind::JacobsthalLucas, n)
}

pub fn padovan123(n: usize) -> BigInt {
    sequence(SequenceKind::Padovan123, n)
}

/// `θ_n`: 0 when `3 | n`, else 1.
pub fn theta(n: usize) -> i64 {
    i64::from(!n.is_multiple_of(3))
}

/// `η_n`: -1 at 0, 1 at 1, else 0.
pub fn eta(n: usize) -> i64 {
    match n {
        0 => -1,
        1 => 1,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(kind: SequenceKind, len: usize) -> Vec<i64> {
        table(kind).prefix(len).iter().map(|v| v.try_into().unwrap()).collect()
    }

    #[test]
    fn first_values() {
        assert_eq!(small(SequenceKind::Fibonacci, 8), vec![0, 1, 1, 2, 3, 5, 8, 13]);
        assert_eq!(small(SequenceKind::Lucas, 8), vec![2, 1, 3, 4, 7, 11, 18, 29]);
        assert_eq!(small(SequenceKind::JacobsthalLucas, 6), vec![2, 1, 5, 7, 17, 31]);
        assert_eq!(small(SequenceKind::Padovan123, 8), vec![1, 2, 3, 3, 5, 6, 8, 11]);
    }

    #[test]
    fn big_and_shared() {
        let l = lucas(200);
        assert_eq!(l, lucas(199) + lucas(198));
        let handles: Vec<_> = (0..4)
            .map(|i| std::thread::spawn(move || fibonacci(300 + i)))
            .collect();
        for (i, h) in handles.into_iter().enumerate() {
            assert_eq!(h.join().unwrap(), fibonacci(300 + i));
        }
    }

    #[test]
    fn theta_eta() {
        assert_eq!((0..6).map(theta).collect::<Vec<_>>(), vec![0, 1, 1, 0, 1, 1]);
        assert_eq!((0..3).map(eta).collect::<Vec<_>>(), vec![-1, 1, 0]);
    }
}
