//! Published tables that the engine recomputes, kept as plain data so the
//! checks can compare against them.

/// E6 class dimensions for `0 <= n <= 6` (columns) and `0 <= m <= 5` (rows,
/// indexed by m).
pub const E6_CORNER_DIMS: [[usize; 7]; 6] = [
    [1, 2, 2, 3, 3, 4, 4],
    [0, 2, 1, 4, 0, 4, 0],
    [0, 2, 0, 3, 0, 4, 0],
    [0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
];

/// Representatives listed for each nonzero slot of the E6 corner.
pub const E6_CORNER_REPRESENTATIVES: &[(i32, i32, &[&str])] = &[
    (0, 0, &["1"]),
    (1, 0, &["y1", "y2"]),
    (2, 0, &["x1", "x2"]),
    (3, 0, &["y1*x1", "y1*x2", "y2*x2"]),
    (4, 0, &["x1^2", "x2^2", "x1*x2"]),
    (5, 0, &["x1^2*y1", "x1^2*y2", "x2^2*y1", "x2^2*y2"]),
    (6, 0, &["x1^3", "x2^3", "x1^2*x2", "x1*x2^2"]),
    (1, 1, &["u*y1", "u*y2"]),
    (2, 1, &["u*y1*y2"]),
    (3, 1, &["u*y1*x1", "u*y1*x2", "u*y2*x1", "u*y2*x2"]),
    (5, 1, &["u*x1^2*y1", "u*x1^2*y2", "u*x2^2*y1", "u*x2^2*y2"]),
    (1, 2, &["t*y1", "t*y2"]),
    (3, 2, &["t*y1*x1", "t*y1*x2", "t*y2*x2"]),
    (5, 2, &["t*x1^2*y1", "t*x1^2*y2", "t*x2^2*y1", "t*x2^2*y2"]),
    (2, 3, &["u*t*y1*y2"]),
];

/// Named invariant elements of E2, in dependency order.
pub const NAMED_INVARIANTS: &[(&str, &str)] = &[
    ("w2_1", "u*y1*y2"),
    ("w3_1", "u*y1*x1 + u*y2*x2"),
    ("w3_1m", "u*y1*x2 - u*y2*x1"),
    ("w3_2", "t*y1*x1 + t*y2*x2"),
    ("w3_6", "t^3*(y1*x1 + y2*x2)"),
    ("w4_6", "t^3*(x1^2 + x2^2)"),
    ("w2_9", "u*t^4*y1*y2"),
    ("w7_0", "x1^3*y1 + x2^3*y2 - x1^2*x2*y2"),
    ("w7_1", "x1^3*y1 + x2^3*y2"),
    ("w8_0", "x1^4 + x2^4 - x1^2*x2^2"),
    ("w8_6", "t^3*x1^4 + t^3*x2^4"),
    ("w11_0", "x1^5*y1 + x2^5*y2 - x1^4*x2*y2"),
    ("w12_0", "x1^6 + x2^6 - x1^4*x2^2"),
];

/// Linear generators of the invariant E6 slots for `0 <= n, m <= 21`, as
/// `(n, m, expression)` over E2 generators and the named invariants.
pub const INVARIANT_GENERATORS: &[(i32, i32, &str)] = &[
    (0, 0, "1"),
    (7, 0, "w7_0"),
    (8, 0, "w8_0"),
    (11, 0, "w11_0"),
    (12, 0, "w12_0"),
    (15, 0, "w7_0*w8_0"),
    (16, 0, "w8_0^2"),
    (19, 0, "w11_0*w8_0"),
    (20, 0, "w12_0*w8_0"),
    (2, 1, "w2_1"),
    (3, 1, "w3_1"),
    (3, 1, "w3_1m"),
    (7, 1, "u*w7_1"),
    (11, 1, "w3_1*w8_0"),
    (15, 1, "u*w7_1*w8_0"),
    (19, 1, "w3_1*w8_0^2"),
    (3, 2, "w3_2"),
    (7, 2, "t*w7_1"),
    (11, 2, "w3_2*w8_0"),
    (15, 2, "t*w7_1*w8_0"),
    (19, 2, "w3_2*w8_0^2"),
    (3, 6, "w3_6"),
    (4, 6, "w4_6"),
    (7, 6, "t^3*w7_1"),
    (8, 6, "w8_6"),
    (11, 6, "w4_6*w7_0"),
    (12, 6, "w4_6*w8_0"),
    (15, 6, "t^3*w7_1*w8_0"),
    (16, 6, "w8_6*w8_0"),
    (19, 6, "w4_6*w7_0*w8_0"),
    (20, 6, "w4_6*w8_0^2"),
    (7, 7, "u*t^3*w7_0"),
    (11, 7, "u*w4_6*w7_1"),
    (15, 7, "u*t^3*w7_0*w8_0"),
    (19, 7, "u*w4_6*w7_1*w8_0"),
    (7, 8, "t^4*w7_0"),
    (11, 8, "t*w4_6*w7_1"),
    (15, 8, "t^4*w7_0*w8_0"),
    (19, 8, "t*w4_6*w7_1*w8_0"),
    (2, 9, "w2_9"),
    (0, 12, "t^6"),
    (7, 12, "t^6*w7_0"),
    (8, 12, "t^6*w8_0"),
    (11, 12, "t^6*w11_0"),
    (12, 12, "t^6*w12_0"),
    (15, 12, "t^6*w7_0*w8_0"),
    (16, 12, "t^6*w8_0^2"),
    (19, 12, "t^6*w11_0*w8_0"),
    (20, 12, "t^6*w12_0*w8_0"),
    (2, 13, "t^6*w2_1"),
    (3, 13, "t^6*w3_1"),
    (3, 13, "t^6*w3_1m"),
    (7, 13, "u*t^6*w7_1"),
    (11, 13, "t^6*w3_2*w8_0"),
    (15, 13, "u*t^6*w7_1*w8_0"),
    (19, 13, "u*t^6*w3_1*w8_0^2"),
    (3, 14, "t^6*w3_2"),
    (7, 14, "t^7*w7_1"),
    (11, 14, "t^6*w3_2*w8_0"),
    (15, 14, "t^7*w7_1*w8_0"),
    (19, 14, "t^6*w3_2*w8_0^2"),
    (3, 18, "t^6*w3_6"),
    (4, 18, "t^6*w4_6"),
    (7, 18, "t^9*w7_1"),
    (8, 18, "t^6*w8_6"),
    (11, 18, "t^6*w4_6*w7_0"),
    (12, 18, "t^6*w4_6*w8_0"),
    (15, 18, "t^9*w7_1*w8_0"),
    (16, 18, "t^6*w8_6*w8_0"),
    (19, 18, "t^6*w4_6*w7_0*w8_0"),
    (20, 18, "t^6*w4_6*w8_0^2"),
    (7, 19, "u*t^9*w7_0"),
    (11, 19, "u*t^6*w4_6*w7_1"),
    (15, 19, "u*t^9*w7_0*w8_0"),
    (19, 19, "u*t^6*w4_6*w7_1*w8_0"),
    (7, 20, "t^10*w7_0"),
    (11, 20, "t^7*w4_6*w7_1"),
    (15, 20, "t^10*w7_0*w8_0"),
    (19, 20, "t^7*w4_6*w7_1*w8_0"),
    (2, 21, "t^6*w2_9"),
];

/// Entries of [`INVARIANT_GENERATORS`] whose expression does not have the
/// listed bidegree, with the expression the surrounding pattern suggests.
pub const LABEL_CORRECTIONS: &[(i32, i32, &str, &str)] = &[
    (11, 13, "t^6*w3_2*w8_0", "t^6*w3_1*w8_0"),
    (19, 13, "u*t^6*w3_1*w8_0^2", "t^6*w3_1*w8_0^2"),
];

/// Size of the invariant corner table: `0 <= n <= 8`, `0 <= m <= 11`.
pub const INVARIANT_CORNER: (i32, i32) = (8, 11);

/// Size of the full invariant table: `0 <= n, m <= 21`.
pub const INVARIANT_TABLE: (i32, i32) = (21, 21);

/// Printed prefix of the Poincaré series of the invariant ring.
pub const POINCARE_PREFIX: [i64; 13] = [1, 0, 0, 1, 2, 1, 0, 1, 2, 2, 1, 2, 3];

/// Numerator exponents and denominator factor degrees of the closed form
/// `(1+t^3+t^4+t^5+t^9+t^10+t^11+t^14)/((1-t^4)(1-t^12))`.
pub const POINCARE_NUMERATOR: [u32; 8] = [0, 3, 4, 5, 9, 10, 11, 14];
pub const POINCARE_DENOMINATOR: [u32; 2] = [4, 12];

/// Module basis over F3[c,h] and its degrees.
pub const FREE_MODULE_BASIS: [(&str, u32); 8] =
    [("1", 0), ("a", 3), ("b", 4), ("d", 5), ("e", 9), ("f", 10), ("g", 11), ("g*a", 14)];
pub const FREE_MODULE_POLYNOMIAL_DEGREES: [u32; 2] = [4, 12];
