use serde::{Deserialize, Serialize};

/// Outcome of a verification.
///
/// `Experimental` marks identities that are checked but not established
/// (exceptional-type Q-system dimension identities); it never counts as a
/// failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Experimental,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_failure(self) -> bool {
        self == Status::Fail
    }
}
