use super::FusionRingSpec;
use crate::error::{Error, Result};

const NAMES: [&str; 7] = ["trivial", "vec_z2", "fib", "ising", "rep_s3", "rep_a4", "rep_q8"];

pub fn catalog_names() -> &'static [&'static str] {
    &NAMES
}

type Product<'a> = (usize, usize, &'a [(usize, u32)]);

/// Builds a commutative ring from the non-unit products `i ⊗ j` with `i <= j`.
fn build(name: &str, dual: Vec<usize>, products: &[Product<'_>], modular: bool, hint: Option<u32>) -> FusionRingSpec {
    let r = dual.len();
    let mut n = vec![vec![vec![0u32; r]; r]; r];
    for j in 0..r {
        n[0][j][j] = 1;
        n[j][0][j] = 1;
    }
    for &(i, j, terms) in products {
        for &(k, m) in terms {
            n[i][j][k] = m;
            n[j][i][k] = m;
        }
    }
    FusionRingSpec {
        name: name.to_string(),
        rank: r,
        dual,
        n,
        declared_braided: true,
        declared_modular: modular,
        conductor_hint: hint,
    }
}

/// The built-in rings. All are braided; trivial, fib and ising carry modular data.
pub fn catalog(name: &str) -> Result<FusionRingSpec> {
    let spec = match name {
        "trivial" => build("trivial", vec![0], &[], true, None),
        "vec_z2" => build("vec_z2", vec![0, 1], &[(1, 1, &[(0, 1)])], false, Some(2)),
        // 1, τ
        "fib" => build("fib", vec![0, 1], &[(1, 1, &[(0, 1), (1, 1)])], true, None),
        // 1, ψ, σ
        "ising" => build(
            "ising",
            vec![0, 1, 2],
            &[(1, 1, &[(0, 1)]), (1, 2, &[(2, 1)]), (2, 2, &[(0, 1), (1, 1)])],
            true,
            None,
        ),
        // 1, sgn, V
        "rep_s3" => build(
            "rep_s3",
            vec![0, 1, 2],
            &[(1, 1, &[(0, 1)]), (1, 2, &[(2, 1)]), (2, 2, &[(0, 1), (1, 1), (2, 1)])],
            false,
            Some(6),
        ),
        // 1, ω, ω², W
        "rep_a4" => build(
            "rep_a4",
            vec![0, 2, 1, 3],
            &[
                (1, 1, &[(2, 1)]),
                (1, 2, &[(0, 1)]),
                (2, 2, &[(1, 1)]),
                (1, 3, &[(3, 1)]),
                (2, 3, &[(3, 1)]),
                (3, 3, &[(0, 1), (1, 1), (2, 1), (3, 2)]),
            ],
            false,
            Some(6),
        ),
        // 1, a, b, c, V; the same ring as Rep(D4)
        "rep_q8" => build(
            "rep_q8",
            vec![0, 1, 2, 3, 4],
            &[
                (1, 1, &[(0, 1)]),
                (2, 2, &[(0, 1)]),
                (3, 3, &[(0, 1)]),
                (1, 2, &[(3, 1)]),
                (1, 3, &[(2, 1)]),
                (2, 3, &[(1, 1)]),
                (1, 4, &[(4, 1)]),
                (2, 4, &[(4, 1)]),
                (3, 4, &[(4, 1)]),
                (4, 4, &[(0, 1), (1, 1), (2, 1), (3, 1)]),
            ],
            false,
            Some(4),
        ),
        _ => return Err(Error::UnknownCatalogEntry(name.to_string())),
    };
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        for name in catalog_names() {
            assert_eq!(catalog(name).unwrap().name, *name);
        }
        assert!(matches!(catalog("nope"), Err(Error::UnknownCatalogEntry(_))));
    }

    #[test]
    fn ising_fusion() {
        let ising = catalog("ising").unwrap();
        assert_eq!(ising.rank, 3);
        assert_eq!(ising.n[2][2], vec![1, 1, 0]);
    }
}
