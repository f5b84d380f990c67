//! Number rendering shared by the text and json reports.
//!
//! Both reports are built from the same `f64` values; json carries 17
//! significant digits, text rounds to 6.

use quadform::CScalar;
use serde_json::{Map, Number, Value};

/// 17 significant digits, or `null` when not finite.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let s = quadform::bench::format_number(x);
    Value::Number(
        s.parse::<Number>()
            .expect("formatted float is a json number"),
    )
}

pub fn complex(z: CScalar) -> Value {
    let mut m = Map::new();
    m.insert("re".into(), num(z.re));
    m.insert("im".into(), num(z.im));
    Value::Object(m)
}

/// Six significant digits, `%g` style.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn sig6_complex(z: CScalar) -> String {
    if z.im == 0.0 {
        sig6(z.re)
    } else if z.re == 0.0 {
        format!("{}i", sig6(z.im))
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{}{sign}{}i", sig6(z.re), sig6(z.im.abs()))
    }
}
