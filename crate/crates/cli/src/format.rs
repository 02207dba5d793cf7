//! Text rendering of numbers, blades and multivectors.

use extensor_core::blade::{self, Mask};
use extensor_core::Multivector;

/// Significant digits of every printed number.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Shortest `%g`-style rendering with 12 significant digits.
pub fn number(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= SIGNIFICANT_DIGITS as i32 {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `e13` for `u_1 ∧ u_3`, or `e{1,10}` once an index exceeds 9.
pub fn blade_name(mask: Mask) -> String {
    let idx = blade::indices_of(mask);
    if idx.iter().all(|&i| i <= 9) {
        let digits: String = idx.iter().map(|i| i.to_string()).collect();
        format!("e{digits}")
    } else {
        let list: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        format!("e{{{}}}", list.join(","))
    }
}

/// Sparse term list in grade-then-lexicographic blade order, e.g.
/// `1 - e1 + 2.5*e13`.
pub fn multivector(x: &Multivector) -> String {
    let n = x.dim();
    let table = blade::table(n);
    let mut out = String::new();
    for k in 0..=n {
        for &m in table.of_grade(k) {
            let c = x.get(m);
            if c == 0.0 {
                continue;
            }
            let magnitude = number(c.abs());
            let term = if m == 0 {
                magnitude
            } else if magnitude == "1" {
                blade_name(m)
            } else {
                format!("{magnitude}*{}", blade_name(m))
            };
            match (out.is_empty(), c < 0.0) {
                (true, false) => out.push_str(&term),
                (true, true) => {
                    out.push('-');
                    out.push_str(&term);
                }
                (false, false) => {
                    out.push_str(" + ");
                    out.push_str(&term);
                }
                (false, true) => {
                    out.push_str(" - ");
                    out.push_str(&term);
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn row(values: impl IntoIterator<Item = f64>) -> String {
    let items: Vec<String> = values.into_iter().map(number).collect();
    format!("[{}]", items.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers() {
        assert_eq!(number(0.0), "0");
        assert_eq!(number(-0.0), "0");
        assert_eq!(number(24.0), "24");
        assert_eq!(number(0.5), "0.5");
        assert_eq!(number(1.0 / 3.0), "0.333333333333");
        assert_eq!(number(-2.0 / 3.0), "-0.666666666667");
        assert_eq!(number(1e-20), "1e-20");
        assert_eq!(number(1.5e20), "1.5e20");
        assert_eq!(number(123456789012.0), "123456789012");
        assert_eq!(number(1234567890123.0), "1.23456789012e12");
        assert_eq!(number(0.0001), "0.0001");
        assert_eq!(number(0.00001), "1e-5");
        assert_eq!(number(9.9999999999999), "10");
        assert_eq!(number(1.0 + 1e-14), "1");
    }

    #[test]
    fn multivectors() {
        let mut x = Multivector::zero(3);
        assert_eq!(multivector(&x), "0");
        x.set(0, 1.0);
        x.set(0b101, 2.5);
        x.set(0b001, -1.0);
        assert_eq!(multivector(&x), "1 - e1 + 2.5*e13");
        let y = Multivector::blade(3, 0b011).scaled(-1.0);
        assert_eq!(multivector(&y), "-e12");
        assert_eq!(blade_name(1 | 1 << 9), "e{1,10}");
    }
}
