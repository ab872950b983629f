//! Chern numbers of the tautological subbundle on a Grassmannian, by
//! localization at the coordinate subspaces.

use num_traits::{One, Zero};

use super::is_integer;
use crate::error::{inconsistent, usage, Result};
use crate::Rational;

/// `k`-element subsets of `0..n`, lexicographic.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn elementary_numeric(xs: &[Rational], k: usize) -> Rational {
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    for x in xs {
        for j in (1..=k).rev() {
            e[j] = e[j].clone() + e[j - 1].clone() * x.clone();
        }
    }
    e[k].clone()
}

/// `int c1(S)^e1 ... ck(S)^ek` over the Grassmannian of `k`-planes in
/// `C^n`, for each exponent vector `(e1, ..., ek)`.
///
/// Every monomial must have weighted degree `k(n-k)`. The torus weights are
/// specialized to `0, 1, ..., n-1`; the answer does not depend on them, and
/// each value is checked to be an integer.
pub fn grassmann_chern_numbers(k: usize, n: usize, monomials: &[Vec<u32>]) -> Result<Vec<Rational>> {
    if k == 0 || k >= n {
        return usage(format!("need 0 < k < n, got k = {k}, n = {n}"));
    }
    let dim = k * (n - k);
    for m in monomials {
        if m.len() > k {
            return usage(format!("monomial {m:?} uses Chern classes above rank {k}"));
        }
        let deg: usize = m.iter().enumerate().map(|(i, &e)| (i + 1) * e as usize).sum();
        if deg != dim {
            return usage(format!(
                "monomial {m:?} has degree {deg}, the Grassmannian has dimension {dim}"
            ));
        }
    }
    let weights: Vec<Rational> = (0..n).map(|i| Rational::from_integer((i as i64).into())).collect();
    let mut out = vec![Rational::zero(); monomials.len()];
    for sub in subsets(n, k) {
        let roots: Vec<Rational> = sub.iter().map(|&i| weights[i].clone()).collect();
        let mut euler = Rational::one();
        for &i in &sub {
            for j in 0..n {
                if !sub.contains(&j) {
                    euler *= weights[j].clone() - weights[i].clone();
                }
            }
        }
        let chern: Vec<Rational> = (1..=k).map(|i| elementary_numeric(&roots, i)).collect();
        for (slot, m) in out.iter_mut().zip(monomials) {
            let mut val = Rational::one();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    val *= chern[i].clone();
                }
            }
            *slot = slot.clone() + val / euler.clone();
        }
    }
    for (v, m) in out.iter().zip(monomials) {
        if !is_integer(v) {
            return inconsistent(format!("Chern number of {m:?} came out as {v}"));
        }
    }
    Ok(out)
}

/// All exponent vectors `(e1, ..., ek)` of weighted degree `dim`.
pub fn chern_monomials(k: usize, dim: usize) -> Vec<Vec<u32>> {
    fn go(i: usize, k: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i > k {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in (0..=left / i).rev() {
            cur.push(e as u32);
            go(i + 1, k, left - e * i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, k, dim, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn planes_in_four_space() {
        let ms = vec![
            vec![6, 0, 0],
            vec![4, 1, 0],
            vec![2, 2, 0],
            vec![3, 0, 1],
            vec![1, 1, 1],
            vec![0, 0, 2],
        ];
        let got = grassmann_chern_numbers(3, 5, &ms).unwrap();
        let want: Vec<Rational> = [5, 3, 2, 1, 1, 1].iter().map(|&x| int(x)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn degree_mismatch() {
        assert!(grassmann_chern_numbers(1, 2, &[vec![0]]).is_err());
        assert!(grassmann_chern_numbers(2, 2, &[vec![]]).is_err());
    }

    #[test]
    fn projective_line() {
        // S = O(-1) on P^1: int c1 = -1
        assert_eq!(grassmann_chern_numbers(1, 2, &[vec![1]]).unwrap(), vec![int(-1)]);
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(chern_monomials(3, 6).len(), 7);
        assert_eq!(subsets(5, 3).len(), 10);
    }
}
