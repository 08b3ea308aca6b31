//! Shared fixture instances for unit tests.

/// Three statements: a and b support each other, b attacks c.
/// Acceptance: a is in iff b is, b is in iff a is, c is in iff b is out.
pub(crate) const SUPPORT_CYCLE: &str = "\
s(a). s(b). s(c). l(b,a). l(a,b). l(b,c).
co(a). ci(a,1,b).  co(b). ci(b,1,a).  ci(c). co(c,1,b).
";

/// Four statements: a is a tautology, b supports itself, c needs both a
/// and b, d is in iff b is out. Functional form.
pub(crate) const SELF_LOOP: &str = "\
s(a). s(b). s(c). s(d).
l(a,c). l(b,b). l(b,c). l(b,d).
ci(a).
co(b). ci(b,1,b).
co(c). co(c,1,a). co(c,2,b). ci(c,3,a). ci(c,3,b).
ci(d). co(d,1,b).
";

/// The same framework as [`SELF_LOOP`] in the formula dialect.
pub(crate) const SELF_LOOP_FORMULA: &str = "\
statement(a). statement(b). statement(c). statement(d).
ac(a,c(v)).
ac(b, b).
ac(c, and(a,b)).
ac(d, neg(b)).
";
