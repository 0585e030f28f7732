//! Integer helpers with mathematical rounding.
//!
//! Rust's `/` truncates toward zero, which is wrong for floor/ceil of negative
//! quotients. Everything here rounds toward −∞ (floor) or +∞ (ceil).

/// ⌊a / b⌋ for b ≠ 0.
pub fn floor_div(a: i64, b: i64) -> i64 {
    assert!(b != 0, "division by zero");
    let (a, b) = if b < 0 { (-a, -b) } else { (a, b) };
    a.div_euclid(b)
}

/// ⌈a / b⌉ for b ≠ 0.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    -floor_div(-a, b)
}

/// ⌊√x⌋ for x ≥ 0, exact for the whole i128 range we use.
pub fn isqrt(x: i128) -> i128 {
    assert!(x >= 0, "isqrt of negative value");
    if x < 2 {
        return x;
    }
    // Newton from an upper estimate; monotonically decreasing to the floor root.
    let mut r = (x as f64).sqrt() as i128 + 2;
    loop {
        let next = (r + x / r) / 2;
        if next >= r {
            break;
        }
        r = next;
    }
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Smallest integer x with x ≥ (b − √d) / 2, for d ≥ 0.
///
/// Decided without floating point: x satisfies the inequality iff
/// b − 2x ≤ 0 or (b − 2x)² ≤ d, a predicate monotone in x.
pub fn ceil_half_b_minus_sqrt(b: i128, d: i128) -> i128 {
    assert!(d >= 0, "negative discriminant");
    let holds = |x: i128| {
        let t = b - 2 * x;
        t <= 0 || t * t <= d
    };
    let s = isqrt(d);
    // (b − √d)/2 lies in ((b − s − 1)/2, (b − s)/2].
    let mut x = (b - s - 1).div_euclid(2);
    while holds(x - 1) {
        x -= 1;
    }
    while !holds(x) {
        x += 1;
    }
    x
}
