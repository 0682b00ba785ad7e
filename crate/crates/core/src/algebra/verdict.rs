use std::fmt;

/// Outcome of a Koszulness test. Only the theorem-backed form is a proof;
/// agreement up to a truncation is a necessary condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every checked degree agrees.
    ConsistentUpTo { degree: usize },
    /// A structural criterion settles Koszulness outright.
    TheoremBacked { reason: String },
    /// A conclusive failure, at a degree when one is known.
    Fail { degree: Option<usize>, detail: String },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        !matches!(self, Verdict::Fail { .. })
    }

    pub fn failing_degree(&self) -> Option<usize> {
        match self {
            Verdict::Fail { degree, .. } => *degree,
            _ => None,
        }
    }

    /// `"PASS"` or `"FAIL"`.
    pub fn status(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::ConsistentUpTo { degree } => write!(
                f,
                "PASS: consistent with Koszul up to degree {degree} (a necessary condition, not a proof)"
            ),
            Verdict::TheoremBacked { reason } => write!(f, "PASS: Koszul ({reason})"),
            Verdict::Fail { degree: Some(d), detail } => write!(f, "FAIL at degree {d}: {detail}"),
            Verdict::Fail { degree: None, detail } => write!(f, "FAIL: {detail}"),
        }
    }
}
