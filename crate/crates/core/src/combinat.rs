//! Closed-form counts for hom-sets between finite sets.

/// Stirling numbers of the second kind via `S(m, k) = k S(m-1, k) + S(m-1, k-1)`.
pub fn stirling2(m: usize, k: usize) -> u128 {
    if k > m {
        return 0;
    }
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=m {
        for j in (1..=k.min(i)).rev() {
            row[j] = j as u128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `n (n-1) ⋯ (n-k+1)`.
pub fn falling_factorial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    ((n - k + 1) as u128..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    falling_factorial(n, k) / factorial(k)
}
