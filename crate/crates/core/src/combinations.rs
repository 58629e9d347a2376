//! Revolving-door enumeration of `t`-subsets of `{0, .., n-1}` (n <= 64).
//!
//! Successive subsets differ by exactly one element leaving and one entering,
//! so a running XOR of generator rows costs two row operations per step.

/// Yields subsets as bitmasks in revolving-door order.
#[derive(Clone, Debug)]
pub struct RevolvingDoor {
    n: usize,
    t: usize,
    // 1-based: c[1..=t] ascending, c[t+1] = n, c[t+2] = n + 1 sentinel
    c: Vec<usize>,
    started: bool,
    done: bool,
}

impl RevolvingDoor {
    /// # Panics
    ///
    /// Panics if `n > 64` or `t > n`.
    pub fn new(n: usize, t: usize) -> Self {
        assert!(n <= 64 && t <= n, "RevolvingDoor needs t <= n <= 64");
        let mut c = vec![0; t + 3];
        for (j, slot) in c.iter_mut().enumerate().take(t + 1).skip(1) {
            *slot = j - 1;
        }
        c[t + 1] = n;
        c[t + 2] = n + 1;
        RevolvingDoor { n, t, c, started: false, done: false }
    }

    fn mask(&self) -> u64 {
        self.c[1..=self.t].iter().fold(0u64, |m, &x| m | (1u64 << x))
    }

    fn advance(&mut self) -> bool {
        let t = self.t;
        if t == 0 || t == self.n {
            return false;
        }
        let c = &mut self.c;
        let mut j;
        let mut try_increase;
        if t % 2 == 1 {
            if c[1] + 1 < c[2] {
                c[1] += 1;
                return true;
            }
            j = 2;
            try_increase = false;
        } else {
            if c[1] > 0 {
                c[1] -= 1;
                return true;
            }
            j = 2;
            try_increase = true;
        }
        loop {
            if !try_increase {
                if j > t {
                    return false;
                }
                if c[j] >= j {
                    c[j] = c[j - 1];
                    c[j - 1] = j - 2;
                    return true;
                }
                j += 1;
            }
            if j > t {
                return false;
            }
            if c[j] + 1 < c[j + 1] {
                c[j - 1] = c[j];
                c[j] += 1;
                return true;
            }
            j += 1;
            try_increase = false;
        }
    }
}

impl Iterator for RevolvingDoor {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.mask());
        }
        if self.advance() {
            Some(self.mask())
        } else {
            self.done = true;
            None
        }
    }
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn exhaustive_small_cases() {
        for n in 0..=12 {
            for t in 0..=n {
                let all: Vec<u64> = RevolvingDoor::new(n, t).collect();
                assert_eq!(all.len() as u64, binomial(n, t), "n={n} t={t}");
                let set: HashSet<u64> = all.iter().copied().collect();
                assert_eq!(set.len(), all.len());
                for m in &all {
                    assert_eq!(m.count_ones() as usize, t);
                    assert!(n == 64 || m >> n == 0);
                }
                for w in all.windows(2) {
                    assert_eq!((w[0] ^ w[1]).count_ones(), 2, "n={n} t={t}");
                }
            }
        }
    }

    #[test]
    fn matches_lexicographic_set() {
        use itertools::Itertools;
        let lex: HashSet<u64> = (0..20usize)
            .combinations(4)
            .map(|c| c.iter().fold(0u64, |m, &x| m | 1 << x))
            .collect();
        let door: HashSet<u64> = RevolvingDoor::new(20, 4).collect();
        assert_eq!(lex, door);
    }

    #[test]
    fn wide() {
        assert_eq!(RevolvingDoor::new(64, 2).count() as u64, binomial(64, 2));
        assert_eq!(RevolvingDoor::new(36, 3).count() as u64, binomial(36, 3));
        assert_eq!(binomial(36, 8), 30_260_340);
    }
}
