/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `(2m)! / (2^m m!)`, the number of perfect matchings of `K_{2m}`.
pub fn perfect_matching_count(m: usize) -> u128 {
    let mut num = 1u128;
    for i in 1..=2 * m {
        num *= i as u128;
    }
    let mut den = 1u128;
    for i in 1..=m {
        den *= 2 * i as u128;
    }
    num / den
}
