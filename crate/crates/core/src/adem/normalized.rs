use crate::algebra::{Cochain, Ring, Z2};
use crate::complex::{Simplex, SimplicialSet};
use crate::{Error, Exec, Result};

/// Face-operator form of `E_3` on a 5-simplex: each summand lists, per tensor factor,
/// the three positions of `x` that survive the face operators.
pub const E3_TABLE: [[[u8; 3]; 4]; 5] = [
    [[0, 2, 3], [0, 1, 2], [3, 4, 5], [2, 3, 5]],
    [[0, 2, 3], [3, 4, 5], [0, 1, 2], [0, 1, 2]],
    [[0, 1, 3], [3, 4, 5], [1, 2, 3], [1, 2, 3]],
    [[0, 1, 2], [2, 4, 5], [2, 3, 4], [2, 3, 4]],
    [[0, 1, 2], [2, 3, 5], [3, 4, 5], [3, 4, 5]],
];

/// The same table with the face indices of the second and third summands' first
/// factors as originally tabulated (`∂1∂2∂3` and `∂2∂3∂4`). Each entry lists the
/// deleted positions. Kept for comparison; it does not satisfy the Adem relation.
pub const E3_AS_PRINTED: [[[u8; 3]; 4]; 5] = [
    [[1, 4, 5], [3, 4, 5], [0, 1, 2], [0, 1, 4]],
    [[1, 2, 3], [0, 1, 2], [3, 4, 5], [3, 4, 5]],
    [[2, 3, 4], [0, 1, 2], [0, 4, 5], [0, 4, 5]],
    [[3, 4, 5], [0, 1, 3], [0, 1, 5], [0, 1, 5]],
    [[3, 4, 5], [0, 1, 4], [0, 1, 2], [0, 1, 2]],
];

/// Converts a table of deleted positions into kept positions.
pub fn kept_positions(deleted: &[[[u8; 3]; 4]; 5]) -> [[[u8; 3]; 4]; 5] {
    deleted.map(|summand| {
        summand.map(|faces| {
            let mut keep = [0u8; 3];
            let mut n = 0;
            for p in 0..6u8 {
                if !faces.contains(&p) {
                    keep[n] = p;
                    n += 1;
                }
            }
            keep
        })
    })
}

/// Evaluates a face-operator table on a 5-simplex, mod 2.
pub fn eval_table<R: Ring>(table: &[[[u8; 3]; 4]; 5], k: &SimplicialSet, c: &Cochain<R>, x: &Simplex) -> Result<Z2> {
    if x.dim() != 5 {
        return Err(Error::DegreeMismatch { expected: 5, actual: x.dim() });
    }
    if c.degree() != 2 {
        return Err(Error::DegreeMismatch { expected: 2, actual: c.degree() });
    }
    let mut acc = Z2::ZERO;
    for summand in table {
        let mut prod = Z2::ONE;
        for keep in summand {
            prod = prod.mul(&Z2::from_integer(&c.value(k, &x.select(keep)).lift()));
        }
        acc = acc.add(&prod);
    }
    Ok(acc)
}

/// The normalized `E_3(c)` on a 5-simplex.
pub fn e3_normalized<R: Ring>(k: &SimplicialSet, c: &Cochain<R>, x: &Simplex) -> Result<Z2> {
    eval_table(&E3_TABLE, k, c, x)
}

/// The normalized `E_3(c)` on every 5-simplex.
pub fn e3_normalized_cochain<R: Ring>(k: &SimplicialSet, c: &Cochain<R>, exec: Exec) -> Result<Cochain<Z2>> {
    let values = exec.map(k.simplices(5), |x| e3_normalized(k, c, x));
    Cochain::from_values(k, 5, values.into_iter().collect::<Result<_>>()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_cochains() {
        let k = SimplicialSet::build(&[(0..=5).collect()]).unwrap();
        let x = Simplex::standard(5);
        assert_eq!(e3_normalized(&k, &Cochain::constant(&k, 2, Z2::ONE), &x).unwrap(), Z2::ONE);
        assert_eq!(e3_normalized(&k, &Cochain::<Z2>::zero(&k, 2), &x).unwrap(), Z2::ZERO);
        assert!(e3_normalized(&k, &Cochain::<Z2>::zero(&k, 1), &x).is_err());
        assert!(e3_normalized(&k, &Cochain::<Z2>::zero(&k, 2), &Simplex::standard(4)).is_err());
    }

    #[test]
    fn printed_table_differs_in_two_factors() {
        let printed = kept_positions(&E3_AS_PRINTED);
        let mut diffs = Vec::new();
        for (s, (a, b)) in printed.iter().zip(&E3_TABLE).enumerate() {
            for (f, (u, v)) in a.iter().zip(b).enumerate() {
                if u != v {
                    diffs.push((s, f));
                }
            }
        }
        assert_eq!(diffs, vec![(1, 0), (2, 0)]);
        assert_eq!(printed[0], [[0, 2, 3], [0, 1, 2], [3, 4, 5], [2, 3, 5]]);
    }
}
