//! The Galois group of the character field and its actions on the character table,
//! the character algebra and the class algebra.

use serde::Serialize;

use crate::chartable::{idempotents, pairing_m, CharacterTable, IdempotentDecomposition};
use crate::checks::Check;
use crate::error::{Error, Result};
use crate::exactnum::{units, CycNumber};
use crate::linalg::solve;
use crate::structconst::ClassAlgebra;

/// `σ_a: ξ ↦ ξ^a` on `Q(ξ_n)`, stored by its canonical coset representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GaloisElement {
    pub residue: u32,
    pub conductor: u32,
}

impl GaloisElement {
    /// Applies the automorphism; every table-derived value lies in `Q(ξ_n)`.
    pub fn apply(&self, x: &CycNumber) -> CycNumber {
        x.galois_apply_mod(self.residue, self.conductor).expect("value lies in the character field")
    }

    pub fn is_identity(&self) -> bool {
        self.residue % self.conductor.max(1) == 1 % self.conductor.max(1)
    }
}

/// `Gal(K/Q)` as `(Z/n)^×` modulo the stabiliser of the table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaloisGroup {
    pub conductor: u32,
    pub stabilizer: Vec<u32>,
    pub elements: Vec<GaloisElement>,
}

impl GaloisGroup {
    /// The element represented by residue `a` (assumed coprime to the conductor).
    pub fn canonical(&self, a: u64) -> GaloisElement {
        let n = u64::from(self.conductor.max(1));
        let a = a % n;
        let rep = self.stabilizer.iter().map(|&h| ((a * u64::from(h)) % n) as u32).min().unwrap_or(a as u32);
        GaloisElement { residue: if n == 1 { 1 } else { rep }, conductor: self.conductor }
    }

    pub fn compose(&self, s: GaloisElement, t: GaloisElement) -> GaloisElement {
        self.canonical(u64::from(s.residue) * u64::from(t.residue))
    }

    pub fn inverse(&self, s: GaloisElement) -> GaloisElement {
        let n = self.conductor.max(1);
        let inv =
            (1..=n).find(|&b| (u64::from(s.residue) * u64::from(b)) % u64::from(n) == 1 % u64::from(n)).unwrap_or(1);
        self.canonical(u64::from(inv))
    }

    pub fn identity(&self) -> GaloisElement {
        self.canonical(1)
    }
}

pub fn galois_group(t: &CharacterTable) -> GaloisGroup {
    let n = t.conductor;
    let all = units(n);
    let fixes = |a: u32| t.alpha.iter().flatten().all(|x| x.galois_apply_mod(a, n).is_ok_and(|y| &y == x));
    let stabilizer: Vec<u32> = all.iter().copied().filter(|&a| fixes(a)).collect();
    let mut covered = vec![false; n as usize + 1];
    let mut elements = Vec::new();
    for &a in &all {
        if covered[a as usize] {
            continue;
        }
        for &h in &stabilizer {
            covered[((u64::from(a) * u64::from(h)) % u64::from(n)) as usize] = true;
        }
        elements.push(GaloisElement { residue: a, conductor: n });
    }
    if n == 1 {
        elements = vec![GaloisElement { residue: 1, conductor: 1 }];
    }
    GaloisGroup { conductor: n, stabilizer, elements }
}

/// `τ` with `σ(α_ij) = α_{i τ(j)}`.
pub fn column_permutation(s: GaloisElement, t: &CharacterTable) -> Result<Vec<usize>> {
    let r = t.rank();
    (0..r)
        .map(|j| {
            let image: Vec<CycNumber> = (0..r).map(|i| s.apply(&t.alpha[i][j])).collect();
            (0..r).find(|&l| (0..r).all(|i| t.alpha[i][l] == image[i])).ok_or_else(|| {
                Error::InternalInconsistency(format!("σ_{} maps column {j} outside the table", s.residue))
            })
        })
        .collect()
}

/// Outcome of matching each Galois-transformed row against a rescaled row of the table.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowPermutation {
    Permutation { eta: Vec<usize>, scalars: Vec<CycNumber> },
    NotAnAlgebraMap { row: usize, reason: String },
}

/// Looks for `η` with `σ(α_ij) = (d_i / d_{η(i)}) α_{η(i) j}` for all `i, j`.
pub fn row_permutation(s: GaloisElement, t: &CharacterTable) -> RowPermutation {
    let r = t.rank();
    let mut eta = Vec::with_capacity(r);
    let mut scalars = Vec::with_capacity(r);
    for i in 0..r {
        let image: Vec<CycNumber> = (0..r).map(|j| s.apply(&t.alpha[i][j])).collect();
        let matched = (0..r).find_map(|l| {
            let ratio = image[0].div(&t.alpha[l][0]).ok()?;
            (0..r).all(|j| image[j] == &ratio * &t.alpha[l][j]).then_some((l, ratio))
        });
        let Some((l, ratio)) = matched else {
            return RowPermutation::NotAnAlgebraMap { row: i, reason: "no row is proportional to σ(row)".into() };
        };
        let expected = t.d(i).div(t.d(l)).expect("dimensions are nonzero");
        if ratio != expected {
            return RowPermutation::NotAnAlgebraMap {
                row: i,
                reason: format!("σ(row {i}) = ({ratio})·row {l}, but d_{i}/d_{l} = {expected}"),
            };
        }
        eta.push(l);
        scalars.push(ratio);
    }
    let mut seen = vec![false; r];
    for &l in &eta {
        if std::mem::replace(&mut seen[l], true) {
            return RowPermutation::NotAnAlgebraMap { row: l, reason: "row matched twice".into() };
        }
    }
    RowPermutation::Permutation { eta, scalars }
}

pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![];
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x.to_string());
            x = p[x];
        }
        out.push_str(&format!("({})", cycle.join(" ")));
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut q = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        q[j] = i;
    }
    q
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaloisAnalysis {
    pub sigma: GaloisElement,
    pub tau: Vec<usize>,
    pub tau_cycles: String,
    pub tau_fixes_zero: bool,
    pub eta: Option<Vec<usize>>,
    pub eta_cycles: Option<String>,
    pub eta_scalars: Option<Vec<CycNumber>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_an_algebra_map: Option<String>,
    #[serde(rename = "sigmaF_algebra_map")]
    pub sigma_f_algebra_map: bool,
    #[serde(rename = "sigmaFhat_algebra_map")]
    pub sigma_fhat_algebra_map: bool,
    #[serde(rename = "sigmaE_algebra_map")]
    pub sigma_e_algebra_map: bool,
    pub identity_checks: Vec<Check>,
}

/// Everything one automorphism needs, computed once.
struct Ctx<'a> {
    t: &'a CharacterTable,
    alg: &'a ClassAlgebra,
    dec: &'a IdempotentDecomposition,
    s: GaloisElement,
    s_inv: GaloisElement,
    tau: Vec<usize>,
    rows: RowPermutation,
}

impl Ctx<'_> {
    fn r(&self) -> usize {
        self.t.rank()
    }

    fn unit(&self, i: usize) -> Vec<CycNumber> {
        (0..self.r()).map(|k| CycNumber::from_integer(i64::from(k == i))).collect()
    }

    /// `χ`-coordinates of `σ_F(χ_i) = Σ_j σ(α_ij) F_j`.
    fn sigma_f_chi(&self, i: usize) -> Vec<CycNumber> {
        let r = self.r();
        (0..r).map(|k| (0..r).map(|j| &self.s.apply(&self.t.alpha[i][j]) * &self.dec.f[j][k]).sum()).collect()
    }

    /// `E`-coordinates of `z_j = C_j / dim C^j`: `α_kj / d_k`.
    fn z(&self, j: usize) -> Vec<CycNumber> {
        (0..self.r()).map(|k| self.t.alpha[k][j].div(self.t.d(k)).expect("nonzero dimension")).collect()
    }

    /// `σ_E` on an element given by its `E`-coordinates.
    fn sigma_e(&self, e: &[CycNumber]) -> Option<Vec<CycNumber>> {
        let r = self.r();
        let zmat: Vec<Vec<CycNumber>> = (0..r).map(|k| (0..r).map(|j| self.z(j)[k].clone()).collect()).collect();
        let w = solve(&zmat, e)?;
        Some((0..r).map(|k| (0..r).map(|j| &w[j] * &self.z(self.tau[j])[k]).sum()).collect())
    }

    fn sigma_f_is_algebra_map(&self) -> Option<(usize, usize, usize)> {
        let r = self.r();
        let ring = &self.t.ring;
        for j in 0..r {
            let col: Vec<CycNumber> = (0..r).map(|i| self.s.apply(&self.t.alpha[i][j])).collect();
            for a in 0..r {
                for b in a..r {
                    let rhs: CycNumber = (0..r)
                        .filter(|&k| ring.n[a][b][k] != 0)
                        .map(|k| &col[k] * &CycNumber::from_integer(i64::from(ring.n[a][b][k])))
                        .sum();
                    if &col[a] * &col[b] != rhs {
                        return Some((a, b, j));
                    }
                }
            }
        }
        None
    }

    /// Direct test of `σ̂_F(μ ⋆ μ') = σ̂_F(μ) ⋆ σ̂_F(μ')` on basis pairs.
    fn sigma_fhat_witness(&self) -> Option<(usize, usize, usize)> {
        let r = self.r();
        let p = &self.alg.phat;
        for j1 in 0..r {
            for j2 in 0..r {
                for k in 0..r {
                    if p[j1][j2][k] != p[self.tau[j1]][self.tau[j2]][self.tau[k]] {
                        return Some((j1, j2, k));
                    }
                }
            }
        }
        (self.tau[0] != 0).then_some((0, 0, 0))
    }

    /// Direct test of `σ_E(z_a z_b) = σ_E(z_a) σ_E(z_b)` and `σ_E(1) = 1`.
    fn sigma_e_witness(&self) -> Option<(usize, usize)> {
        let r = self.r();
        let t = self.t;
        if self.tau[0] != 0 {
            return Some((0, 0));
        }
        for a in 0..r {
            for b in a..r {
                let inv = (&t.classdims[a] * &t.classdims[b]).inv().expect("nonzero class dimensions");
                let lhs: Vec<CycNumber> = (0..r)
                    .map(|i| {
                        (0..r)
                            .map(|k| &(&(&self.alg.c[a][b][k] * &t.classdims[k]) * &inv) * &self.z(self.tau[k])[i])
                            .sum()
                    })
                    .collect();
                let (za, zb) = (self.z(self.tau[a]), self.z(self.tau[b]));
                let rhs: Vec<CycNumber> = (0..r).map(|i| &za[i] * &zb[i]).collect();
                if lhs != rhs {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

fn gate(name: &str, applies: bool, reason: &str, body: impl FnOnce() -> Check) -> Check {
    if applies {
        body()
    } else {
        Check::not_applicable(name, reason)
    }
}

fn verdict(name: &str, witness: Option<String>) -> Check {
    match witness {
        None => Check::pass(name),
        Some(w) => Check::fail(name, w),
    }
}

fn triples(r: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..r).flat_map(move |a| (0..r).flat_map(move |b| (0..r).map(move |c| (a, b, c))))
}

fn identity_checks(cx: &Ctx<'_>, fhat_map: bool, e_map: bool) -> Vec<Check> {
    let t = cx.t;
    let r = cx.r();
    let s = cx.s;
    let tau = &cx.tau;
    let tau_inv = invert(tau);
    let integral = t.is_integral();
    let weakly = t.is_weakly_integral();
    let mut out = Vec::new();

    out.push(gate("class_dims_tau_invariant", weakly, "dim(C) is not an integer", || {
        verdict(
            "class_dims_tau_invariant",
            (0..r).find(|&k| t.classdims[k] != t.classdims[tau[k]]).map(|k| format!("k = {k}")),
        )
    }));
    out.push(verdict(
        "codegree_galois_shift",
        (0..r).find(|&j| s.apply(&t.codegrees[j]) != t.codegrees[tau[j]]).map(|j| format!("j = {j}")),
    ));
    out.push(gate("structure_constants_equivariant", integral, "some d_i is not an integer", || {
        verdict(
            "structure_constants_equivariant",
            triples(r)
                .find(|&(i, j, k)| s.apply(&cx.alg.c[i][j][k]) != cx.alg.c[tau[i]][tau[j]][tau[k]])
                .map(|w| format!("{w:?}")),
        )
    }));
    // σ_F(F_j) in F-coordinates: (1/n_j) Σ_i conj(α_ij) σ(α_il)
    out.push(verdict(
        "idempotent_galois_shift",
        (0..r).find_map(|j| {
            let inv = t.codegrees[j].inv().ok()?;
            (0..r)
                .find(|&l| {
                    let v: CycNumber =
                        (0..r).map(|i| &t.alpha[i][j].conjugate() * &s.apply(&t.alpha[i][l])).sum::<CycNumber>() * &inv;
                    v != CycNumber::from_integer(i64::from(l == tau_inv[j]))
                })
                .map(|l| format!("F_{j} coordinate {l}"))
        }),
    ));
    out.push(verdict("character_product_equivariant", cx.sigma_f_is_algebra_map().map(|w| format!("{w:?}"))));

    // σ̂_F criteria, each compared with the direct test
    let eq30 = triples(r).find(|&(i, j1, j2)| {
        let p = &cx.alg.phat[j1][j2];
        let lhs: CycNumber = (0..r).map(|k| &cx.s_inv.apply(&p[k]) * &t.alpha[i][k]).sum();
        let scale = t.d(i).div(&cx.s_inv.apply(t.d(i))).expect("nonzero dimension");
        let rhs: CycNumber = (0..r).map(|k| &(&p[k] * &scale) * &t.alpha[i][k]).sum();
        lhs != rhs
    });
    out.push(verdict(
        "dual_algebra_map_criterion",
        (eq30.is_none() != fhat_map).then(|| format!("criterion {} but direct test {}", eq30.is_none(), fhat_map)),
    ));
    out.push(gate("dual_constants_galois_fixed", integral, "some d_i is not an integer", || {
        let fixed = triples(r).all(|(a, b, k)| cx.s_inv.apply(&cx.alg.phat[a][b][k]) == cx.alg.phat[a][b][k]);
        verdict(
            "dual_constants_galois_fixed",
            (fixed != fhat_map).then(|| format!("p̂ fixed: {fixed}, direct test {fhat_map}")),
        )
    }));
    out.push(verdict("unit_preservation_criterion", {
        let dims_fixed = (0..r).all(|i| &s.apply(t.d(i)) == t.d(i));
        ((tau[0] == 0) != dims_fixed).then(|| format!("τ(0) = {}, σ fixes d: {dims_fixed}", tau[0]))
    }));

    // σ_E: the codegree-weighted criterion against the direct test
    let ratio = |j: usize| s.apply(&t.codegrees[j]).div(&t.codegrees[j]).expect("nonzero codegree");
    let eq41 = triples(r).find(|&(j1, j2, k)| {
        &ratio(k) * &cx.alg.c[j1][j2][k] != &(&ratio(j1) * &ratio(j2)) * &cx.alg.c[tau[j1]][tau[j2]][tau[k]]
    });
    out.push(verdict(
        "sigma_e_algebra_map_criterion",
        (eq41.is_none() != e_map).then(|| format!("criterion {} but direct test {e_map}", eq41.is_none())),
    ));
    out.push(gate("sigma_e_rational_constants_criterion", integral, "some d_i is not an integer", || {
        let fixed = triples(r).all(|(i, j, k)| s.apply(&cx.alg.c[i][j][k]) == cx.alg.c[i][j][k]);
        verdict(
            "sigma_e_rational_constants_criterion",
            (fixed != e_map).then(|| format!("σ fixes c: {fixed}, direct test {e_map}")),
        )
    }));
    out.push(verdict(
        "pairing_adjoint",
        (0..r).find_map(|i| {
            let x = cx.sigma_f_chi(i);
            (0..r)
                .find(|&j| {
                    let rhs: CycNumber = (0..r).map(|k| &x[k] * &t.alpha[k][j]).sum();
                    t.alpha[i][tau[j]] != rhs
                })
                .map(|j| format!("(i, j) = ({i}, {j})"))
        }),
    ));
    let eta_exists = matches!(cx.rows, RowPermutation::Permutation { .. });
    out.push(verdict(
        "row_permutation_iff_sigma_e",
        (eta_exists != e_map).then(|| format!("η exists: {eta_exists}, σ_E algebra map: {e_map}")),
    ));
    out.push(gate("galois_pairing_orthonormal", weakly, "dim(C) is not an integer", || {
        let images: Vec<Vec<CycNumber>> = (0..r).map(|i| cx.sigma_f_chi(i)).collect();
        let mut witness = None;
        'outer: for a in 0..r {
            for b in 0..r {
                match pairing_m(t, &images[a], &images[b]) {
                    Ok(v) if v == CycNumber::from_integer(i64::from(a == b)) => {}
                    Ok(v) => {
                        witness = Some(format!("m(σχ_{a}, σχ_{b}) = {v}"));
                        break 'outer;
                    }
                    Err(e) => {
                        witness = Some(e.to_string());
                        break 'outer;
                    }
                }
            }
        }
        verdict("galois_pairing_orthonormal", witness)
    }));

    const ETA_CHECKS: [&str; 9] = [
        "central_idempotent_shift",
        "eta_commutes_with_duality",
        "eta_preserves_dimension_products",
        "eta_fixes_dimensions",
        "sigma_fixes_dimensions",
        "tau_fixes_unit_column",
        "row_permutation_relation",
        "row_permutation_relation_weakly_integral",
        "eta_scalars_are_dimension_ratios",
    ];
    let (eta, scalars) = match &cx.rows {
        RowPermutation::Permutation { eta, scalars } => (eta, scalars),
        RowPermutation::NotAnAlgebraMap { row, .. } => {
            for name in ETA_CHECKS {
                out.push(Check::not_applicable(name, format!("no row permutation (row {row})")));
            }
            return out;
        }
    };
    let eta_inv = invert(eta);
    out.push(verdict(
        "central_idempotent_shift",
        (0..r).find(|&i| cx.sigma_e(&cx.unit(i)).as_ref() != Some(&cx.unit(eta_inv[i]))).map(|i| format!("E_{i}")),
    ));
    out.push(verdict(
        "eta_commutes_with_duality",
        (0..r).find(|&i| eta[t.dual(i)] != t.dual(eta[i])).map(|i| format!("i = {i}")),
    ));
    out.push(verdict(
        "eta_preserves_dimension_products",
        (0..r).find(|&i| t.d(i) * t.d(t.dual(i)) != t.d(eta[i]) * t.d(t.dual(eta[i]))).map(|i| format!("i = {i}")),
    ));
    out.push(verdict("eta_fixes_dimensions", (0..r).find(|&i| t.d(i) != t.d(eta[i])).map(|i| format!("i = {i}"))));
    out.push(verdict(
        "sigma_fixes_dimensions",
        (0..r).find(|&i| &s.apply(t.d(i)) != t.d(i)).map(|i| format!("i = {i}")),
    ));
    out.push(verdict("tau_fixes_unit_column", (tau[0] != 0).then(|| format!("τ(0) = {}", tau[0]))));
    // α_ij conj(d_i)/conj(d_η(i)) = (conj(n_j)/conj(σ⁻¹(n_j))) σ⁻¹(α_η(i)j)
    out.push(verdict(
        "row_permutation_relation",
        triples(r).find_map(|(i, j, _)| {
            let lhs = &t.alpha[i][j] * &t.d(i).conjugate().div(&t.d(eta[i]).conjugate()).ok()?;
            let n = &t.codegrees[j];
            let rhs = &n.conjugate().div(&cx.s_inv.apply(n).conjugate()).ok()? * &cx.s_inv.apply(&t.alpha[eta[i]][j]);
            (lhs != rhs).then(|| format!("(i, j) = ({i}, {j})"))
        }),
    ));
    out.push(gate("row_permutation_relation_weakly_integral", weakly, "dim(C) is not an integer", || {
        verdict(
            "row_permutation_relation_weakly_integral",
            triples(r)
                .find(|&(i, j, _)| s.apply(&t.alpha[i][j]) != t.alpha[eta[i]][j])
                .map(|(i, j, _)| format!("(i, j) = ({i}, {j})")),
        )
    }));
    out.push(verdict(
        "eta_scalars_are_dimension_ratios",
        (0..r).find(|&i| t.d(i).div(t.d(eta[i])).ok().as_ref() != Some(&scalars[i])).map(|i| format!("i = {i}")),
    ));
    out
}

pub fn analyze_element(
    s: GaloisElement,
    group: &GaloisGroup,
    t: &CharacterTable,
    alg: &ClassAlgebra,
    dec: &IdempotentDecomposition,
) -> Result<GaloisAnalysis> {
    let tau = column_permutation(s, t)?;
    let rows = row_permutation(s, t);
    let cx = Ctx { t, alg, dec, s, s_inv: group.inverse(s), tau: tau.clone(), rows: rows.clone() };
    let f_map = cx.sigma_f_is_algebra_map().is_none();
    let fhat_map = cx.sigma_fhat_witness().is_none();
    let e_map = cx.sigma_e_witness().is_none();
    let identity_checks = identity_checks(&cx, fhat_map, e_map);
    let (eta, eta_scalars, not_an_algebra_map) = match rows {
        RowPermutation::Permutation { eta, scalars } => (Some(eta), Some(scalars), None),
        RowPermutation::NotAnAlgebraMap { row, reason } => (None, None, Some(format!("row {row}: {reason}"))),
    };
    Ok(GaloisAnalysis {
        sigma: s,
        tau_cycles: cycle_notation(&tau),
        tau_fixes_zero: tau[0] == 0,
        eta_cycles: eta.as_deref().map(cycle_notation),
        tau,
        eta,
        eta_scalars,
        not_an_algebra_map,
        sigma_f_algebra_map: f_map,
        sigma_fhat_algebra_map: fhat_map,
        sigma_e_algebra_map: e_map,
        identity_checks,
    })
}

/// `χ`-coordinate matrix of `σ_F`: column `i` holds `σ_F(χ_i)`.
fn sigma_f_matrix(s: GaloisElement, t: &CharacterTable, dec: &IdempotentDecomposition) -> Vec<Vec<CycNumber>> {
    let r = t.rank();
    (0..r).map(|k| (0..r).map(|i| (0..r).map(|j| &s.apply(&t.alpha[i][j]) * &dec.f[j][k]).sum()).collect()).collect()
}

fn mat_mul(a: &[Vec<CycNumber>], b: &[Vec<CycNumber>]) -> Vec<Vec<CycNumber>> {
    let r = a.len();
    (0..r).map(|i| (0..r).map(|j| (0..r).map(|k| &a[i][k] * &b[k][j]).sum()).collect()).collect()
}

/// Homomorphism laws of `σ ↦ τ_σ`, `σ ↦ σ_F` and (where defined) `σ ↦ η_σ`.
pub fn group_action_table(
    group: &GaloisGroup,
    analyses: &[GaloisAnalysis],
    t: &CharacterTable,
    dec: &IdempotentDecomposition,
) -> Vec<Check> {
    let by = |s: GaloisElement| analyses.iter().find(|a| a.sigma == s);
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&x| p[x]).collect() };
    let mut tau_law = None;
    let mut eta_law = None;
    let mut f_law = None;
    let mut closed = None;
    for a in analyses {
        for b in analyses {
            let ab = group.compose(a.sigma, b.sigma);
            let Some(c) = by(ab) else {
                closed = Some(format!("{} · {}", a.sigma.residue, b.sigma.residue));
                continue;
            };
            if c.tau != compose(&a.tau, &b.tau) && tau_law.is_none() {
                tau_law = Some(format!("σ_{} σ_{}", a.sigma.residue, b.sigma.residue));
            }
            if let (Some(ea), Some(eb), Some(ec)) = (&a.eta, &b.eta, &c.eta) {
                if *ec != compose(ea, eb) && eta_law.is_none() {
                    eta_law = Some(format!("σ_{} σ_{}", a.sigma.residue, b.sigma.residue));
                }
            }
            // (σ'σ)_F = σ_F ∘ σ'_F
            let lhs = sigma_f_matrix(ab, t, dec);
            let rhs = mat_mul(&sigma_f_matrix(a.sigma, t, dec), &sigma_f_matrix(b.sigma, t, dec));
            if lhs != rhs && f_law.is_none() {
                f_law = Some(format!("σ_{} σ_{}", b.sigma.residue, a.sigma.residue));
            }
        }
    }
    let inverse_law = analyses.iter().find_map(|a| {
        let inv = by(group.inverse(a.sigma))?;
        (inv.tau != invert(&a.tau)).then(|| format!("σ_{}", a.sigma.residue))
    });
    let injective = analyses.iter().enumerate().find_map(|(x, a)| {
        analyses[x + 1..]
            .iter()
            .find(|b| b.tau == a.tau)
            .map(|b| format!("σ_{} and σ_{}", a.sigma.residue, b.sigma.residue))
    });
    let identity = analyses.iter().find(|a| a.sigma == group.identity()).map_or(Some("missing".to_string()), |a| {
        (a.tau != (0..t.rank()).collect::<Vec<_>>()).then(|| "τ_1 ≠ id".into())
    });
    vec![
        verdict("group_closed", closed),
        verdict("tau_identity", identity),
        verdict("tau_homomorphism", tau_law),
        verdict("tau_inverse", inverse_law),
        verdict("tau_injective", injective),
        verdict("sigma_f_composition", f_law),
        verdict("eta_homomorphism", eta_law),
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaloisReport {
    pub group: GaloisGroup,
    pub elements: Vec<GaloisAnalysis>,
    pub group_checks: Vec<Check>,
}

/// Analyses every element, then the group laws, plus the integral-with-rational-constants
/// guarantee that every `σ` yields a row permutation.
pub fn galois_report(t: &CharacterTable, alg: &ClassAlgebra) -> Result<GaloisReport> {
    let group = galois_group(t);
    let dec = idempotents(t)?;
    let elements =
        group.elements.iter().map(|&s| analyze_element(s, &group, t, alg, &dec)).collect::<Result<Vec<_>>>()?;
    let mut group_checks = group_action_table(&group, &elements, t, &dec);
    let rational = alg.c.iter().flatten().flatten().all(CycNumber::is_rational);
    group_checks.push(if t.is_integral() && rational {
        verdict(
            "rational_constants_give_row_permutations",
            elements.iter().find(|a| a.eta.is_none()).map(|a| format!("σ_{}", a.sigma.residue)),
        )
    } else {
        Check::not_applicable("rational_constants_give_row_permutations", "not integral with rational c")
    });
    Ok(GaloisReport { group, elements, group_checks })
}
