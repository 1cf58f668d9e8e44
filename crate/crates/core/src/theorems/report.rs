use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

/// The results that have a checker.
#[allow(clippy::upper_case_acronyms)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TheoremId {
    /// Relation between the two main eigenvalues.
    P21,
    /// Second main eigenvalue zero forces `λ₁ = Σd²/2m`.
    C22,
    /// Bipartite harmonic graphs: `−λ₁` is non-main.
    L23,
    /// Harmonic iff every main eigenvalue lies in `{0, λ₁}`.
    P24,
    /// Harmonic iff `λ₁ = Σd²/2m` and at most two main eigenvalues.
    P25,
    /// Harmonic iff pseudo-regular (no isolated vertices).
    P26,
    /// `|MS(G)| = |MS(Ḡ)|` and `λ + λ̄ ≠ −1` on main pairs.
    T31,
    /// Non-main or multiple ⇔ eigenvector orthogonal to `j` ⇔ `−1−λ ∈ Spec(Ḡ)`.
    P32,
    /// A simple eigenvalue `−1−λ` of `Ḡ` is non-main.
    C33,
    /// `λ₂(Ḡ) ≤ −1−λ_n(G) ≤ λ₁(Ḡ)`.
    INEQ2,
    /// No eigenvalue of `Ḡ` in `(−1−λ_n(G), λ₁(Ḡ))`.
    P34,
    /// `λ₁(Ḡ) = −1−λ_n(G)` characterisation.
    P35,
    /// `λ₂(Ḡ) = −1−λ_n(G) < λ₁(Ḡ)` characterisation.
    P36,
    /// Connected bipartite: `λ₁(Ḡ) = −1−λ_n(G)` iff `K_{r,r}`.
    T37,
    /// Closed-form eigenpairs of paths.
    L41,
    /// `λ_j(P_n)` is non-main iff `j` is even.
    T42,
    /// `P_n` has `⌈n/2⌉` main eigenvalues.
    C43,
    /// Semi-regular bipartite iff main spectrum is `{λ₁, −λ₁}`.
    T44,
    /// Walk-matrix rank equals the number of main eigenvalues.
    T45,
    /// Double star: `λ_n` non-main iff balanced.
    T46,
    /// Complements of paths and balanced double stars.
    COR47,
}

impl TheoremId {
    pub const ALL: [TheoremId; 21] = [
        TheoremId::P21,
        TheoremId::C22,
        TheoremId::L23,
        TheoremId::P24,
        TheoremId::P25,
        TheoremId::P26,
        TheoremId::T31,
        TheoremId::P32,
        TheoremId::C33,
        TheoremId::INEQ2,
        TheoremId::P34,
        TheoremId::P35,
        TheoremId::P36,
        TheoremId::T37,
        TheoremId::L41,
        TheoremId::T42,
        TheoremId::C43,
        TheoremId::T44,
        TheoremId::T45,
        TheoremId::T46,
        TheoremId::COR47,
    ];

    pub fn as_str(self) -> &'static str {
        use TheoremId::*;
        match self {
            P21 => "P21",
            C22 => "C22",
            L23 => "L23",
            P24 => "P24",
            P25 => "P25",
            P26 => "P26",
            T31 => "T31",
            P32 => "P32",
            C33 => "C33",
            INEQ2 => "INEQ2",
            P34 => "P34",
            P35 => "P35",
            P36 => "P36",
            T37 => "T37",
            L41 => "L41",
            T42 => "T42",
            C43 => "C43",
            T44 => "T44",
            T45 => "T45",
            T46 => "T46",
            COR47 => "COR47",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem id `{0}`")]
pub struct UnknownTheorem(pub String);

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::NotApplicable => "not-applicable",
        })
    }
}

/// A witness value. Exact integers keep every digit.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Float(f64),
    Int(BigInt),
    Bool(bool),
    Floats(Vec<f64>),
    Text(String),
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Float(x) => s.serialize_f64(round_sig(*x)),
            Value::Int(x) => match i64::try_from(x) {
                Ok(small) => s.serialize_i64(small),
                Err(_) => s.serialize_str(&x.to_string()),
            },
            Value::Bool(b) => s.serialize_bool(*b),
            Value::Floats(v) => s.collect_seq(v.iter().map(|x| round_sig(*x))),
            Value::Text(t) => s.serialize_str(t),
        }
    }
}

/// Floats are shown with 12 significant digits.
pub fn fmt_float(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let s = format!("{:.*e}", 11, x);
    let (mantissa, exp) = s.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let fixed = format!("{:.*}", decimals, x);
        if fixed.contains('.') {
            fixed
                .trim_end_matches('0')
                .trim_end_matches('.')
                .to_string()
        } else {
            fixed
        }
    } else {
        let m = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{m}e{exp}")
    }
}

/// `x` rounded to 12 significant digits, as printed by [`fmt_float`].
pub fn round_sig(x: f64) -> f64 {
    if x.is_finite() {
        fmt_float(x).parse().unwrap_or(x)
    } else {
        x
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Float(x) => f.write_str(&fmt_float(*x)),
            Value::Int(x) => write!(f, "{x}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Floats(v) => {
                let parts: Vec<String> = v.iter().map(|x| fmt_float(*x)).collect();
                write!(f, "[{}]", parts.join(", "))
            }
            Value::Text(t) => f.write_str(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub name: String,
    pub value: Value,
}

/// Verdict of one checker on one instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub instance: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    #[serde(serialize_with = "serialize_rounded")]
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn serialize_rounded<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig(*x))
}

impl TheoremReport {
    pub fn new(theorem: TheoremId, instance: impl Into<String>, tolerance: f64) -> Self {
        TheoremReport {
            theorem,
            instance: instance.into(),
            verdict: Verdict::Holds,
            witnesses: Vec::new(),
            tolerance,
            note: None,
        }
    }

    pub fn with(mut self, name: &str, value: Value) -> Self {
        self.witnesses.push(Witness {
            name: name.to_string(),
            value,
        });
        self
    }

    pub fn float(self, name: &str, x: f64) -> Self {
        self.with(name, Value::Float(x))
    }

    pub fn int(self, name: &str, x: impl Into<BigInt>) -> Self {
        self.with(name, Value::Int(x.into()))
    }

    pub fn flag(self, name: &str, b: bool) -> Self {
        self.with(name, Value::Bool(b))
    }

    pub fn floats(self, name: &str, v: Vec<f64>) -> Self {
        self.with(name, Value::Floats(v))
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.note = Some(text.into());
        self
    }

    /// `Holds` if `ok`, otherwise `Fails`.
    pub fn holds_if(mut self, ok: bool) -> Self {
        self.verdict = if ok { Verdict::Holds } else { Verdict::Fails };
        self
    }

    pub fn not_applicable(mut self, why: impl Into<String>) -> Self {
        self.verdict = Verdict::NotApplicable;
        self.note = Some(why.into());
        self
    }

    pub fn witness(&self, name: &str) -> Option<&Value> {
        self.witnesses
            .iter()
            .find(|w| w.name == name)
            .map(|w| &w.value)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialise")
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<6} {:<15} {}",
            self.theorem, self.verdict, self.instance
        )?;
        for w in &self.witnesses {
            write!(f, "\n    {} = {}", w.name, w.value)?;
        }
        if let Some(note) = &self.note {
            write!(f, "\n    note: {note}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip_through_strings() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!("ineq2".parse::<TheoremId>().unwrap(), TheoremId::INEQ2);
        assert!("T99".parse::<TheoremId>().is_err());
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_float(2f64.sqrt()), "1.41421356237");
        assert_eq!(fmt_float(-3.0), "-3");
        assert_eq!(fmt_float(1.5e-9), "1.5e-9");
        assert_eq!(fmt_float(123456.0), "123456");
        assert_eq!(fmt_float(0.0), "0");
        assert_eq!(round_sig(2.0000000000000004e-7), 2e-7);
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333333);
    }

    #[test]
    fn json_shape_is_stable() {
        let r = TheoremReport::new(TheoremId::T45, "A_", 0.0)
            .int("rank", 1)
            .int("big", BigInt::from(10).pow(30))
            .flag("gray_zone", false)
            .float("x", 0.5);
        assert_eq!(
            r.to_json(),
            r#"{"theorem":"T45","instance":"A_","verdict":"holds","witnesses":[{"name":"rank","value":1},{"name":"big","value":"1000000000000000000000000000000"},{"name":"gray_zone","value":false},{"name":"x","value":0.5}],"tolerance":0.0}"#
        );
    }
}
