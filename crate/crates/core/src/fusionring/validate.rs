use std::fmt;

use serde::Serialize;

use super::FusionRingSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Shape,
    DualInvolution,
    Unit,
    Duality,
    FrobeniusReciprocity,
    Commutativity,
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Shape => "shape",
            Axiom::DualInvolution => "dual involution",
            Axiom::Unit => "unit",
            Axiom::Duality => "duality",
            Axiom::FrobeniusReciprocity => "frobenius reciprocity",
            Axiom::Commutativity => "commutativity",
            Axiom::Associativity => "associativity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
    pub detail: String,
}

/// Every violated axiom with the offending indices; empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    fn push(&mut self, axiom: Axiom, indices: Vec<usize>, detail: String) {
        self.violations.push(Violation { axiom, indices, detail });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        let shown: Vec<String> =
            self.violations.iter().take(5).map(|v| format!("{} {:?}: {}", v.axiom, v.indices, v.detail)).collect();
        write!(f, "{}", shown.join("; "))?;
        if self.violations.len() > 5 {
            write!(f, "; … {} more", self.violations.len() - 5)?;
        }
        Ok(())
    }
}

/// Checks the based-ring axioms. Shape problems stop the remaining checks.
pub fn validate(spec: &FusionRingSpec) -> ValidationReport {
    let mut report = ValidationReport::default();
    let r = spec.rank;
    let shape_ok = r >= 1
        && spec.dual.len() == r
        && spec.n.len() == r
        && spec.n.iter().all(|m| m.len() == r && m.iter().all(|v| v.len() == r));
    if !shape_ok {
        report.push(Axiom::Shape, vec![], format!("expected rank {r} dual vector and {r}x{r}x{r} tensor"));
        return report;
    }
    if let Some(i) = (0..r).find(|&i| spec.dual[i] >= r) {
        report.push(Axiom::Shape, vec![i], format!("dual index {} out of range", spec.dual[i]));
        return report;
    }
    let n = |i: usize, j: usize, k: usize| spec.n[i][j][k];

    if spec.dual[0] != 0 {
        report.push(Axiom::DualInvolution, vec![0], "unit must be self-dual".into());
    }
    for i in 0..r {
        if spec.dual[spec.dual[i]] != i {
            report.push(Axiom::DualInvolution, vec![i], format!("dual(dual({i})) = {}", spec.dual[spec.dual[i]]));
        }
    }
    if report.violates(Axiom::DualInvolution) {
        return report;
    }

    for j in 0..r {
        for k in 0..r {
            let want = u32::from(j == k);
            if n(0, j, k) != want {
                report.push(Axiom::Unit, vec![0, j, k], format!("N_0{j}^{k} = {}, expected {want}", n(0, j, k)));
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            let want = u32::from(j == spec.dual[i]);
            if n(i, j, 0) != want {
                report.push(Axiom::Duality, vec![i, j, 0], format!("N_{i}{j}^0 = {}, expected {want}", n(i, j, 0)));
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                if n(i, j, k) != n(j, i, k) {
                    report.push(
                        Axiom::Commutativity,
                        vec![i, j, k],
                        format!("N_{i}{j}^{k} = {} but N_{j}{i}^{k} = {}", n(i, j, k), n(j, i, k)),
                    );
                }
                let reciprocal = n(spec.dual[i], k, j);
                if n(i, j, k) != reciprocal {
                    report.push(
                        Axiom::FrobeniusReciprocity,
                        vec![i, j, k],
                        format!("N_{i}{j}^{k} = {} but N_{}{k}^{j} = {reciprocal}", n(i, j, k), spec.dual[i]),
                    );
                }
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                for t in 0..r {
                    let left: u64 = (0..r).map(|s| u64::from(n(i, j, s)) * u64::from(n(s, k, t))).sum();
                    let right: u64 = (0..r).map(|s| u64::from(n(j, k, s)) * u64::from(n(i, s, t))).sum();
                    if left != right {
                        report.push(
                            Axiom::Associativity,
                            vec![i, j, k, t],
                            format!("((x{i} x{j}) x{k}) has {left} copies of x{t}, (x{i} (x{j} x{k})) has {right}"),
                        );
                    }
                }
            }
        }
    }
    report
}
