use alloc::vec::Vec;

use super::{Partition, SizeMismatch};

/// Irreducible character `chi^lambda` of `S_r` on the class of cycle type
/// `rho`, by the Murnaghan–Nakayama rule on a bead (beta-number) abacus.
pub fn sn_character(lambda: &Partition, rho: &Partition) -> Result<i64, SizeMismatch> {
    if lambda.size() != rho.size() {
        return Err(SizeMismatch);
    }
    let l = lambda.len();
    let beads: Vec<usize> = (0..l).map(|i| lambda.parts()[i] + (l - 1 - i)).collect();
    Ok(mn(&beads, rho.parts()))
}

fn mn(beads: &[usize], rho: &[usize]) -> i64 {
    let Some((&k, rest)) = rho.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beads.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beads.contains(&target) {
            continue;
        }
        // leg length = beads strictly between target and b
        let height = beads.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beads.to_vec();
        next[idx] = target;
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&next, rest);
    }
    total
}
