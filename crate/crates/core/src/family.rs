use std::fmt;
use std::str::FromStr;

use crate::matrix::BinaryMatrix;

/// Which of the three matrix families a query refers to.
///
/// `Lambda` is the unrestricted family: square matrices with exactly `k`
/// ones in every row and column. `Gamma` additionally requires rows and
/// columns sorted in nondecreasing lexicographic order, `Delta` in
/// nonincreasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Lambda,
    Gamma,
    Delta,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Lambda => "lambda",
            FamilyKind::Gamma => "gamma",
            FamilyKind::Delta => "delta",
        }
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lambda" => Ok(FamilyKind::Lambda),
            "gamma" => Ok(FamilyKind::Gamma),
            "delta" => Ok(FamilyKind::Delta),
            other => Err(format!(
                "unknown family {other:?}, expected lambda, gamma or delta"
            )),
        }
    }
}

/// A concrete family instance: kind plus the parameters n and k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Family {
    pub kind: FamilyKind,
    pub n: usize,
    pub k: usize,
}

impl Family {
    pub fn new(kind: FamilyKind, n: usize, k: usize) -> Self {
        Family { kind, n, k }
    }

    pub fn lambda(n: usize, k: usize) -> Self {
        Family::new(FamilyKind::Lambda, n, k)
    }

    pub fn gamma(n: usize, k: usize) -> Self {
        Family::new(FamilyKind::Gamma, n, k)
    }

    pub fn delta(n: usize, k: usize) -> Self {
        Family::new(FamilyKind::Delta, n, k)
    }

    /// Membership test. Total: wrong shape or infeasible k yields false.
    pub fn contains(&self, m: &BinaryMatrix) -> bool {
        if m.n_rows() != self.n || m.n_cols() != self.n {
            return false;
        }
        if !m.is_lambda(self.k).unwrap_or(false) {
            return false;
        }
        match self.kind {
            FamilyKind::Lambda => true,
            FamilyKind::Gamma => m.is_nondecreasing_lex(),
            FamilyKind::Delta => m.is_nonincreasing_lex(),
        }
    }

    /// The family whose members are exactly the entrywise complements of
    /// this one's members. None when k > n.
    pub fn complement_dual(&self) -> Option<Family> {
        if self.k > self.n {
            return None;
        }
        let k = self.n - self.k;
        Some(match self.kind {
            FamilyKind::Lambda => Family::lambda(self.n, k),
            FamilyKind::Gamma => Family::delta(self.n, k),
            FamilyKind::Delta => Family::gamma(self.n, k),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.kind.name(), self.n, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::parse_matrix;

    #[test]
    fn contains_classifies_known_matrices() {
        let g = parse_matrix("00111\n00111\n11001\n11010\n11100").unwrap();
        assert!(Family::gamma(5, 3).contains(&g));
        assert!(Family::lambda(5, 3).contains(&g));
        assert!(!Family::delta(5, 3).contains(&g));
        assert!(!Family::gamma(5, 2).contains(&g));
        assert!(!Family::gamma(4, 3).contains(&g));

        let d = parse_matrix("11100\n11010\n11001\n00111\n00111").unwrap();
        assert!(Family::delta(5, 3).contains(&d));
        assert!(!Family::gamma(5, 3).contains(&d));

        let ones = parse_matrix("11\n11").unwrap();
        assert!(Family::lambda(2, 2).contains(&ones));
        assert!(Family::gamma(2, 2).contains(&ones));
        assert!(Family::delta(2, 2).contains(&ones));
        assert!(!Family::delta(2, 3).contains(&ones));
    }

    #[test]
    fn complement_dual_swaps_orders() {
        assert_eq!(
            Family::gamma(5, 3).complement_dual(),
            Some(Family::delta(5, 2))
        );
        assert_eq!(
            Family::delta(5, 2).complement_dual(),
            Some(Family::gamma(5, 3))
        );
        assert_eq!(
            Family::lambda(4, 1).complement_dual(),
            Some(Family::lambda(4, 3))
        );
        assert_eq!(Family::gamma(3, 4).complement_dual(), None);
    }

    #[test]
    fn dual_membership_matches_complement() {
        let g = parse_matrix("00111\n00111\n11001\n11010\n11100").unwrap();
        let dual = Family::gamma(5, 3).complement_dual().unwrap();
        assert!(dual.contains(&g.complement()));
    }

    #[test]
    fn names_parse_and_print() {
        assert_eq!("gamma".parse::<FamilyKind>().unwrap(), FamilyKind::Gamma);
        assert_eq!("LAMBDA".parse::<FamilyKind>().unwrap(), FamilyKind::Lambda);
        assert!("sigma".parse::<FamilyKind>().is_err());
        assert_eq!(Family::delta(7, 2).to_string(), "delta(7,2)");
    }
}
