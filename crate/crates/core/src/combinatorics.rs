use alloc::vec;
use alloc::vec::Vec;

/// Iterator over all partitions of `0..n` into exactly `r` nonempty blocks,
/// as block-label vectors in restricted-growth form.
///
/// Labels are canonical (the first element is in block 0, every new block
/// takes the next unused label) so each unordered partition appears once.
/// Output is in lexicographic order of the label vectors.
pub struct SetPartitions {
    labels: Vec<usize>,
    // prefix maxima: max_before[i] = max(labels[..i])
    r: usize,
    done: bool,
}

pub fn set_partitions(n: usize, r: usize) -> SetPartitions {
    if r == 0 || n < r {
        return SetPartitions {
            labels: Vec::new(),
            r,
            done: true,
        };
    }
    // lexicographically smallest: 0,0,...,0,1,2,...,r-1
    let mut labels = vec![0; n];
    for (k, slot) in labels.iter_mut().skip(n - r + 1).enumerate() {
        *slot = k + 1;
    }
    SetPartitions {
        labels,
        r,
        done: false,
    }
}

impl SetPartitions {
    fn advance(&mut self) -> bool {
        let n = self.labels.len();
        let r = self.r;
        // find the rightmost position that can be incremented while the suffix
        // can still be completed to use all r labels
        let mut prefix_max = vec![0usize; n];
        let mut m = 0;
        for i in 0..n {
            prefix_max[i] = m;
            m = m.max(self.labels[i]);
        }
        for i in (1..n).rev() {
            let cap = prefix_max[i] + 1;
            let next = self.labels[i] + 1;
            if next > cap || next >= r {
                continue;
            }
            let max_after = prefix_max[i].max(next);
            let remaining = n - i - 1;
            if max_after + 1 + remaining < r {
                continue;
            }
            self.labels[i] = next;
            // fill the suffix with the smallest completion
            let need = r - 1 - max_after;
            let zeros = remaining - need;
            for j in 0..remaining {
                self.labels[i + 1 + j] = if j < zeros {
                    0
                } else {
                    max_after + 1 + (j - zeros)
                };
            }
            return true;
        }
        false
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.labels.clone();
        if !self.advance() {
            self.done = true;
        }
        Some(out)
    }
}
