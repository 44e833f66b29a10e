use super::elementary::{minimal_energy, ElementaryVector};

/// Partitions of `n` in reverse lexicographic order (largest first part first).
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All wedges of the given charge and energy; empty below the sector minimum.
pub fn enumerate_elementary(charge: i64, energy: i64) -> Vec<ElementaryVector> {
    let excess = energy - minimal_energy(charge);
    if excess < 0 {
        return Vec::new();
    }
    partitions(excess as u32)
        .into_iter()
        .map(|p| ElementaryVector::new(charge, p).expect("partitions are canonical"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sectors() {
        assert_eq!(enumerate_elementary(0, 0), vec![ElementaryVector::vacuum(0)]);
        assert_eq!(enumerate_elementary(1, 1), vec![ElementaryVector::vacuum(1)]);
        assert!(enumerate_elementary(2, 2).is_empty());
        assert_eq!(enumerate_elementary(0, 4).len(), 5);
    }
}
