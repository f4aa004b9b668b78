use num_traits::Zero;

use super::poly::MultiPoly;
use super::rational::Scalar;
use crate::error::{Error, Result};

/// The unique polynomial of degree at most `degree` in `var` through `nodes`.
///
/// Exactly `degree + 1` nodes with pairwise distinct abscissae are required.
pub fn interpolate(nodes: &[(Scalar, Scalar)], degree: usize, var: &str) -> Result<MultiPoly> {
    if nodes.len() != degree + 1 {
        return Err(Error::NodeCount {
            expected: degree + 1,
            degree,
            got: nodes.len(),
        });
    }
    for (i, (xi, _)) in nodes.iter().enumerate() {
        if nodes[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DegenerateNodes);
        }
    }
    // Newton divided differences, then expand the Newton form.
    let xs: Vec<&Scalar> = nodes.iter().map(|(x, _)| x).collect();
    let mut dd: Vec<Scalar> = nodes.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..nodes.len() {
        for i in (level..nodes.len()).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    let mut coeffs: Vec<Scalar> = vec![Scalar::zero(); nodes.len()];
    // Horner on the Newton basis from the highest divided difference down.
    let mut acc: Vec<Scalar> = vec![dd[nodes.len() - 1].clone()];
    for i in (0..nodes.len() - 1).rev() {
        // acc = acc * (x - xs[i]) + dd[i]
        let mut next = vec![Scalar::zero(); acc.len() + 1];
        for (k, a) in acc.iter().enumerate() {
            next[k + 1] += a;
            next[k] -= a * xs[i];
        }
        next[0] += &dd[i];
        acc = next;
    }
    for (k, a) in acc.into_iter().enumerate() {
        coeffs[k] = a;
    }
    Ok(MultiPoly::univariate(var, &coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn square_of_linear() {
        let nodes = vec![(int(0), int(1)), (int(1), int(4)), (int(2), int(9))];
        let p = interpolate(&nodes, 2, "q").unwrap();
        assert_eq!(p.univariate_coeffs(0), vec![int(1), int(2), int(1)]);
    }

    #[test]
    fn constant_and_errors() {
        let p = interpolate(&[(int(0), int(7))], 0, "q").unwrap();
        assert_eq!(p.univariate_coeffs(0), vec![int(7)]);
        assert_eq!(
            interpolate(&[(int(1), int(1)), (int(1), int(2))], 1, "q"),
            Err(Error::DegenerateNodes)
        );
        assert!(matches!(
            interpolate(&[(int(1), int(1))], 1, "q"),
            Err(Error::NodeCount { .. })
        ));
    }

    #[test]
    fn unit_square_counts() {
        // brute-force count of Z^2 ∩ q[0,1]^2
        let count = |q: i64| {
            let mut n = 0;
            for x in 0..=q {
                for y in 0..=q {
                    let _ = (x, y);
                    n += 1;
                }
            }
            n
        };
        let nodes: Vec<_> = (0..3).map(|q| (int(q), int(count(q)))).collect();
        let p = interpolate(&nodes, 2, "q").unwrap();
        assert_eq!(p.univariate_coeffs(0), vec![int(1), int(2), int(1)]);
    }
}
