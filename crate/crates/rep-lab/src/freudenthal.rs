use std::collections::BTreeMap;

/// Weight multiplicities of the simple sl(k)-module with highest weight
/// given by gl-style integer labels, via the Freudenthal recursion. Labels
/// of every returned weight have the same coordinate sum as the input.
pub fn sl_weight_multiplicities(labels: &[i64]) -> BTreeMap<Vec<i64>, i64> {
    let k = labels.len();
    let rho: Vec<i64> = (0..k).map(|i| (k - 1 - i) as i64).collect();
    let norm2 = |v: &[i64]| -> i64 { v.iter().map(|x| x * x).sum() };
    let add = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    let dot = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };

    // Positive roots e_i - e_j, i < j.
    let mut positive_roots = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let mut r = vec![0i64; k];
            r[i] = 1;
            r[j] = -1;
            positive_roots.push(r);
        }
    }

    let lam_rho = add(labels, &rho);
    let top_norm = norm2(&lam_rho);

    let mut mult: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    mult.insert(labels.to_vec(), 1);
    // Height of lambda - mu in the root lattice.
    let height = |mu: &[i64]| -> i64 {
        let mut acc = 0i64;
        let mut partial = 0i64;
        for i in 0..k - 1 {
            partial += labels[i] - mu[i];
            acc += partial;
        }
        acc
    };

    // Simple roots e_i - e_{i+1}: every weight below the top can be raised
    // into the diagram by some simple root, so level-by-level generation
    // through simple roots alone reaches every weight.
    let mut simple_roots = Vec::new();
    for i in 0..k - 1 {
        let mut r = vec![0i64; k];
        r[i] = 1;
        r[i + 1] = -1;
        simple_roots.push(r);
    }

    let mut frontier: Vec<Vec<i64>> = vec![labels.to_vec()];
    let mut level = 0i64;
    while !frontier.is_empty() {
        level += 1;
        let mut candidates: Vec<Vec<i64>> = Vec::new();
        for w in &frontier {
            for r in &simple_roots {
                let mu: Vec<i64> = w.iter().zip(r).map(|(x, y)| x - y).collect();
                if height(&mu) == level && !mult.contains_key(&mu) && !candidates.contains(&mu) {
                    candidates.push(mu);
                }
            }
        }
        let mut next_frontier = Vec::new();
        for mu in candidates {
            let mu_rho = add(&mu, &rho);
            let denom = top_norm - norm2(&mu_rho);
            if denom <= 0 {
                continue;
            }
            let mut rhs = 0i64;
            for alpha in &positive_roots {
                let mut t = 1i64;
                loop {
                    let shifted: Vec<i64> =
                        mu.iter().zip(alpha).map(|(x, y)| x + t * y).collect();
                    match mult.get(&shifted) {
                        Some(&m) if m > 0 => {
                            rhs += m * dot(&shifted, alpha);
                        }
                        _ => {
                            if height(&shifted) < 0 {
                                break;
                            }
                            // A gap inside the weight diagram cannot occur on
                            // a root string, so a missing weight means the
                            // string has left the diagram.
                            if !mult.contains_key(&shifted) {
                                break;
                            }
                        }
                    }
                    t += 1;
                }
            }
            debug_assert_eq!((2 * rhs) % denom, 0);
            let m = 2 * rhs / denom;
            if m > 0 {
                mult.insert(mu.clone(), m);
                next_frontier.push(mu);
            }
        }
        frontier = next_frontier;
    }
    mult
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_string() {
        let mult = sl_weight_multiplicities(&[3, 0]);
        assert_eq!(mult.len(), 4);
        assert!(mult.values().all(|&m| m == 1));
    }

    #[test]
    fn sl3_adjoint() {
        // Highest weight (2,1,0): the 8-dimensional module, zero... the
        // middle weight (1,1,1) has multiplicity 2.
        let mult = sl_weight_multiplicities(&[2, 1, 0]);
        let total: i64 = mult.values().sum();
        assert_eq!(total, 8);
        assert_eq!(mult[&vec![1, 1, 1]], 2);
    }

    #[test]
    fn sl3_dim_27() {
        // (2,1) in fundamental coordinates = labels (3,1,0) relative: dim 15.
        let mult = sl_weight_multiplicities(&[3, 1, 0]);
        let total: i64 = mult.values().sum();
        assert_eq!(total, 15);
    }

    #[test]
    fn sl4_sample() {
        // Labels (2,1,1,0) on sl(4): dimension 45? Cross-check via Weyl.
        let mult = sl_weight_multiplicities(&[2, 1, 1, 0]);
        let total: i64 = mult.values().sum();
        let weyl = crate::slk::weyl_dim(&[
            exact_linalg::rat(1),
            exact_linalg::rat(0),
            exact_linalg::rat(1),
        ])
        .unwrap();
        assert_eq!(exact_linalg::rat(total), weyl);
    }
}
