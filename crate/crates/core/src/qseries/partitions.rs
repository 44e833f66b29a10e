/// Partitions of `n` into exactly `m` distinct parts, each at most `big_n - 1`,
/// with neighbouring parts differing by at least two. Plain exhaustive search
/// over `m`-subsets of `{1, ..., big_n - 1}`.
pub fn restricted_partition_count(n: u64, m: usize, big_n: u64) -> u64 {
    fn go(next: u64, top: u64, left: usize, chosen: &mut Vec<u64>, n: u64, count: &mut u64) {
        if left == 0 {
            let ok = chosen.iter().sum::<u64>() == n && chosen.windows(2).all(|w| w[1] - w[0] >= 2);
            *count += ok as u64;
            return;
        }
        for p in next..=top {
            chosen.push(p);
            go(p + 1, top, left - 1, chosen, n, count);
            chosen.pop();
        }
    }
    let mut count = 0;
    go(1, big_n.saturating_sub(1), m, &mut Vec::new(), n, &mut count);
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(restricted_partition_count(4, 2, 5), 1);
        assert_eq!(restricted_partition_count(0, 0, 7), 1);
        assert_eq!(restricted_partition_count(6, 2, 6), 2);
        assert_eq!(restricted_partition_count(6, 2, 5), 1);
        assert_eq!(restricted_partition_count(3, 1, 3), 0);
    }
}
