use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exactla::{qi, Q};

static CACHE: Mutex<Vec<Q>> = Mutex::new(Vec::new());

fn binomial(n: usize, k: usize) -> BigInt {
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    b
}

fn factorial(n: usize) -> Q {
    (1..=n).fold(Q::one(), |acc, i| acc * qi(i as i64))
}

/// Bernoulli number `B_n` from `Σ_{k<=n} C(n+1,k) B_k = 0`, so `B_1 = -1/2`.
/// The series below only read even indices except `f_c`, which is the
/// generating function `t/(e^t - 1)` and needs this sign of `B_1`.
pub fn bernoulli(n: usize) -> Q {
    let mut cache = CACHE.lock().unwrap_or_else(|e| e.into_inner());
    while cache.len() <= n {
        let m = cache.len();
        if m == 0 {
            cache.push(Q::one());
            continue;
        }
        let mut s = Q::zero();
        for (k, b) in cache.iter().enumerate() {
            s += Q::from_integer(binomial(m + 1, k)) * b;
        }
        cache.push(-s / qi(m as i64 + 1));
    }
    cache[n].clone()
}

fn pow2(n: usize) -> Q {
    Q::from_integer(BigInt::one() << n)
}

/// The three series behind the formal fields: `p_1(t) = t coth t`,
/// `q_1(t) = -tanh(t/2)` and `e(t) = p_1(t) + t q_1(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BernoulliSeries {
    P1,
    Q1,
    E,
}

impl BernoulliSeries {
    pub fn name(self) -> &'static str {
        match self {
            BernoulliSeries::P1 => "p1",
            BernoulliSeries::Q1 => "q1",
            BernoulliSeries::E => "e",
        }
    }

    /// Coefficient of `t^k`.
    pub fn coefficient(self, k: usize) -> Q {
        match self {
            BernoulliSeries::P1 if k % 2 == 0 => bernoulli(k) * pow2(k) / factorial(k),
            BernoulliSeries::Q1 if k % 2 == 1 => {
                let m = k + 1;
                -(bernoulli(m) * (pow2(m + 1) - qi(2)) / factorial(m))
            }
            BernoulliSeries::E if k % 2 == 0 => bernoulli(k) * (-pow2(k + 1) + pow2(k) + qi(2)) / factorial(k),
            _ => Q::zero(),
        }
    }
}

/// Coefficient of `t^k` in `f_c(t) = t/(e^{t/c} - 1)`, and `f_0(t) = -t`.
pub fn fc_coefficient(c: i64, k: usize) -> Q {
    if c == 0 {
        return if k == 1 { qi(-1) } else { Q::zero() };
    }
    // Σ B_k c^{1-k} t^k / k!
    let mut cpow = qi(c);
    for _ in 0..k {
        cpow /= qi(c);
    }
    bernoulli(k) * cpow / factorial(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;

    #[test]
    fn first_bernoulli_numbers() {
        let want = [q(1, 1), q(-1, 2), q(1, 6), qi(0), q(-1, 30), qi(0), q(1, 42), qi(0), q(-1, 30)];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(&bernoulli(n), w, "B_{n}");
        }
    }

    #[test]
    fn series_coefficients() {
        assert_eq!(BernoulliSeries::P1.coefficient(0), qi(1));
        assert_eq!(BernoulliSeries::P1.coefficient(2), q(1, 3));
        assert_eq!(BernoulliSeries::Q1.coefficient(1), q(-1, 2));
        assert_eq!(BernoulliSeries::Q1.coefficient(3), q(1, 24));
        assert_eq!(BernoulliSeries::E.coefficient(0), qi(1));
        assert_eq!(BernoulliSeries::E.coefficient(2), q(-1, 6));
        assert_eq!(BernoulliSeries::E.coefficient(4), q(7, 360));
        assert_eq!(BernoulliSeries::E.coefficient(1), qi(0));
    }

    #[test]
    fn e_is_p_plus_t_q() {
        for k in 0..10 {
            let tq = if k == 0 { Q::zero() } else { BernoulliSeries::Q1.coefficient(k - 1) };
            assert_eq!(BernoulliSeries::E.coefficient(k), BernoulliSeries::P1.coefficient(k) + tq);
        }
    }

    #[test]
    fn f_one_is_bernoulli_generating_function() {
        for k in 0..8 {
            assert_eq!(fc_coefficient(1, k) * factorial(k), bernoulli(k));
        }
        assert_eq!(fc_coefficient(-1, 0), qi(-1));
        assert_eq!(fc_coefficient(-1, 1), q(-1, 2));
        assert_eq!(fc_coefficient(0, 1), qi(-1));
    }
}
