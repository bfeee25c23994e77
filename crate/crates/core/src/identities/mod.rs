//! Exact checkers for identities among Bernoulli-Barnes numbers and
//! polynomials.
//!
//! Each checker builds both sides as canonical polynomials in
//! `x, a1, ..., an`. Bernoulli-Barnes values carry the factor `|a|`, and
//! powers of `A = a1 + ... + an` are cleared where the identity divides by
//! them, so equality is decided in the polynomial ring. A failing check
//! reports the largest monomial on which the sides differ. Seeded numeric
//! spot checks at random rational `a` re-run the uncleared form.
//!
//! Conventions: `B_j` of negative order and `1/j!` for `j < 0` are zero;
//! `B_j(x; a_S)` for the empty subset is `x^j`.

mod checkers;
mod frame;
mod report;
mod suite;

pub use checkers::{
    check_difference_formula, check_even_recurrence, check_general_expansion, check_main_identity,
    check_multi_uniform_difference, check_norlund_recurrence, check_norlund_recurrence_shifted,
    check_odd_recurrence, check_palindromic_general, check_reflection, check_self_dual,
    check_shift_equals_negation, check_symmetry_1, check_symmetry_2, check_uniform_ftc, Case,
    PalindromicWeights, Verifier, IDENTITY_IDS,
};
pub use report::{IdentityReport, Param, Params, SpotCheck, Witness};
pub use suite::{parse_span, run_cases, run_suite, suite_cases, Ranges, RANGE_KEYS};
