use superalg_core::Parity;

/// Which graded power a monomial normalizer serves.
///
/// Super-symmetric: even factors commute and may repeat, odd factors
/// anticommute (a repeated odd factor kills the monomial). Super-exterior is
/// the mirror image: even factors anticommute, odd factors commute and may
/// repeat.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerKind {
    SuperSymmetric,
    SuperExterior,
}

impl PowerKind {
    /// Sign picked up when two adjacent factors are swapped.
    fn swap_sign(self, a: Parity, b: Parity) -> i64 {
        let koszul = if a.is_odd() && b.is_odd() { -1 } else { 1 };
        match self {
            PowerKind::SuperSymmetric => koszul,
            PowerKind::SuperExterior => -koszul,
        }
    }

    /// Parity whose repetition annihilates a monomial.
    fn killing_parity(self) -> Parity {
        match self {
            PowerKind::SuperSymmetric => Parity::Odd,
            PowerKind::SuperExterior => Parity::Even,
        }
    }
}

/// Sorts a factor tuple into weakly increasing order, tracking the Koszul
/// sign. Returns `None` when the monomial vanishes (a repeated factor of the
/// killing parity).
pub fn normalize_tuple(
    indices: &[usize],
    parity_of: impl Fn(usize) -> Parity,
    kind: PowerKind,
) -> Option<(Vec<usize>, i64)> {
    let mut tuple = indices.to_vec();
    let mut sign = 1i64;
    // Insertion sort; stable, so equal factors never swap.
    for i in 1..tuple.len() {
        let mut j = i;
        while j > 0 && tuple[j - 1] > tuple[j] {
            sign *= kind.swap_sign(parity_of(tuple[j - 1]), parity_of(tuple[j]));
            tuple.swap(j - 1, j);
            j -= 1;
        }
    }
    for w in tuple.windows(2) {
        if w[0] == w[1] && parity_of(w[0]) == kind.killing_parity() {
            return None;
        }
    }
    Some((tuple, sign))
}

/// All normalized degree-`degree` tuples over `0..count`, lexicographically.
pub fn enumerate_tuples(
    count: usize,
    degree: usize,
    parity_of: impl Fn(usize) -> Parity + Copy,
    kind: PowerKind,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(degree);
    fn rec(
        count: usize,
        degree: usize,
        start: usize,
        parity_of: impl Fn(usize) -> Parity + Copy,
        kind: PowerKind,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == degree {
            out.push(current.clone());
            return;
        }
        for next in start..count {
            let repeat_allowed = parity_of(next) != kind.killing_parity();
            if let Some(&last) = current.last() {
                if next == last && !repeat_allowed {
                    continue;
                }
            }
            current.push(next);
            rec(count, degree, next, parity_of, kind, current, out);
            current.pop();
        }
    }
    rec(count, degree, 0, parity_of, kind, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parities(odd_from: usize) -> impl Fn(usize) -> Parity + Copy {
        move |i| if i >= odd_from { Parity::Odd } else { Parity::Even }
    }

    #[test]
    fn counts_for_mixed_parities() {
        // 4 even + 4 odd generators.
        let p = parities(4);
        // Super-exterior square: C(4,2) + 4*4 + C(5,2) = 6 + 16 + 10 = 32.
        assert_eq!(enumerate_tuples(8, 2, p, PowerKind::SuperExterior).len(), 32);
        // Super-symmetric square: C(5,2) + 16 + C(4,2) = 10 + 16 + 6 = 32.
        assert_eq!(enumerate_tuples(8, 2, p, PowerKind::SuperSymmetric).len(), 32);
        // Super-exterior cube: C(4,3) + C(4,2)*4 + 4*C(5,2) + C(6,3) = 4+24+40+20 = 88.
        assert_eq!(enumerate_tuples(8, 3, p, PowerKind::SuperExterior).len(), 88);
    }

    #[test]
    fn normalization_signs() {
        let p = parities(2); // 0,1 even; 2,3 odd
        // Swapping two evens in the exterior power is a sign flip.
        let (t, s) = normalize_tuple(&[1, 0], p, PowerKind::SuperExterior).unwrap();
        assert_eq!((t.as_slice(), s), ([0, 1].as_slice(), -1));
        // Two odds commute in the exterior power.
        let (t, s) = normalize_tuple(&[3, 2], p, PowerKind::SuperExterior).unwrap();
        assert_eq!((t.as_slice(), s), ([2, 3].as_slice(), 1));
        // Repeated even index dies in the exterior power, odd survives.
        assert!(normalize_tuple(&[0, 0], p, PowerKind::SuperExterior).is_none());
        assert!(normalize_tuple(&[2, 2], p, PowerKind::SuperExterior).is_some());
        // Mirror image for the symmetric power.
        assert!(normalize_tuple(&[2, 2], p, PowerKind::SuperSymmetric).is_none());
        let (_, s) = normalize_tuple(&[3, 2], p, PowerKind::SuperSymmetric).unwrap();
        assert_eq!(s, -1);
    }
}
