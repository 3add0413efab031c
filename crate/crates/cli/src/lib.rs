//! Command implementations behind the `ghcseries` binary.

pub mod commands;
pub mod report;
pub mod table;

use ghcseries::Error;

/// Process exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnsupportedLevi(_)
        | Error::SingularBlockUnsupported(_)
        | Error::UnsupportedRank(_)
        | Error::UnsupportedAlgebra(_)
        | Error::OutOfRegime(_) => 3,
        Error::InternalInconsistency(_) | Error::InternalError(_) => 4,
        _ => 2,
    }
}
