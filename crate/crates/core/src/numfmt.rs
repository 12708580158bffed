//! Fixed-precision decimal rendering shared by the CLI and reports.

/// Formats `x` with `digits` significant digits, C `%g` style: plain
/// notation for moderate exponents, trailing zeros trimmed.
pub fn sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        let m = trim(mantissa);
        return format!("{m}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs());
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    trim(&format!("{:.*}", decimals, x)).to_string()
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Twelve significant digits, the precision of every numeric output.
pub fn sig12(x: f64) -> String {
    sig(x, 12)
}


/// `serialize_with` adapters emitting floats as 12-significant-digit
/// decimal strings, so JSON output never depends on float formatting.
pub mod as_sig12 {
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::sig12(*x))
    }

    pub mod option {
        use serde::Serializer;

        pub fn serialize<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
            match x {
                Some(v) => s.serialize_str(&super::super::sig12(*v)),
                None => s.serialize_none(),
            }
        }
    }
}
