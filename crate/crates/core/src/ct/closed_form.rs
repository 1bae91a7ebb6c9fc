//! Product formulas for the density integrals and the two-term recurrence
//! they satisfy.

use num_traits::One;

use crate::scalar::{pow, Q};

fn one_minus(x: Q) -> Q {
    Q::one() - x
}

/// `I_n(t; a, b; c, d)`: the constant term of the nonsymmetric density.
pub fn nonsymmetric_ct_closed(n: usize, t: &Q, a: &Q, b: &Q, c: &Q, d: &Q) -> Q {
    let abcd = a * b * c * d;
    let mut out = Q::one();
    for i in 0..n as i64 {
        let ti = pow(t, i);
        for pair in [a * c, b * c, c * d, a * d, b * d] {
            out /= one_minus(&ti * pair);
        }
    }
    if n > 0 {
        for j in (n as i64 - 1)..=(2 * n as i64 - 2) {
            out *= one_minus(pow(t, j) * &abcd);
        }
    }
    out
}

/// Constant term of the symmetric density with parameters `t0..t3 = a, b, c, d`.
pub fn symmetric_ct_closed(n: usize, t: &Q, a: &Q, b: &Q, c: &Q, d: &Q) -> Q {
    let abcd = a * b * c * d;
    let mut out = Q::one();
    for i in 0..n as i64 {
        let ti = pow(t, i);
        for pair in [a * c, b * c, c * d, a * d, b * d, a * b] {
            out /= one_minus(&ti * pair);
        }
    }
    for j in 0..n as i64 {
        out *= one_minus(pow(t, 2 * n as i64 - 2 - j) * &abcd);
    }
    for j in 1..=n as i64 {
        out *= one_minus(t.clone()) / one_minus(pow(t, j));
    }
    out
}

/// Right-hand side of the residue recurrence
/// `I_n(c, d) = C1 I_{n-1}(tc, d) + C2 I_{n-1}(c, td)`, given the two
/// lower-order values.
pub fn recurrence_rhs(a: &Q, b: &Q, c: &Q, d: &Q, lower_tc: &Q, lower_td: &Q) -> Q {
    let c1 = c / (one_minus(a * c) * one_minus(b * c) * one_minus(d * c) * (c - d));
    let c2 = d / (one_minus(a * d) * one_minus(b * d) * one_minus(c * d) * (d - c));
    c1 * lower_tc + c2 * lower_td
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn closed_form_satisfies_recurrence() {
        let (t, a, b, c, d) = (q(1, 3), q(-2, 7), q(1, 5), q(3, 11), q(-1, 4));
        assert_eq!(nonsymmetric_ct_closed(0, &t, &a, &b, &c, &d), Q::one());
        for n in 1..=5 {
            let lhs = nonsymmetric_ct_closed(n, &t, &a, &b, &c, &d);
            let tc = &t * &c;
            let td = &t * &d;
            let rhs = recurrence_rhs(
                &a,
                &b,
                &c,
                &d,
                &nonsymmetric_ct_closed(n - 1, &t, &a, &b, &tc, &d),
                &nonsymmetric_ct_closed(n - 1, &t, &a, &b, &c, &td),
            );
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn symmetric_at_n1() {
        let (t, a, b, c, d) = (q(1, 3), q(-2, 7), q(1, 5), q(3, 11), q(-1, 4));
        let expect = (Q::one() - &a * &b * &c * &d)
            / ((Q::one() - &a * &c)
                * (Q::one() - &b * &c)
                * (Q::one() - &c * &d)
                * (Q::one() - &a * &d)
                * (Q::one() - &b * &d)
                * (Q::one() - &a * &b));
        assert_eq!(symmetric_ct_closed(1, &t, &a, &b, &c, &d), expect);
    }
}
