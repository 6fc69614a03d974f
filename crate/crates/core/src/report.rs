//! Summary of a function: everything here is re-derivable from the truth table.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::anf::anf_of;
use crate::class::{classify, ClassTag};
use crate::dual::dual;
use crate::error::Result;
use crate::function::{point_to_string, BooleanFunction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub value: i32,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualReport {
    /// Anchor as a bit string of length `n`.
    pub v: String,
    pub vars: usize,
    pub hex: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionReport {
    pub n: usize,
    pub anf: String,
    /// Absent for `n < 2`, where no hex table exists.
    pub hex: Option<String>,
    pub class: String,
    /// Plateau parameter: 0 bent, `n` affine, absent otherwise.
    pub s: Option<usize>,
    pub spectrum: Vec<SpectrumEntry>,
    pub degree: usize,
    pub dual: Option<DualReport>,
}

impl FunctionReport {
    /// `v` picks the dual anchor; without it the smallest support point is
    /// used. The dual is omitted for affine and non-plateaued functions.
    pub fn new(f: &BooleanFunction, v: Option<usize>) -> Result<Self> {
        let n = f.num_vars();
        let class = classify(f);
        let anf = anf_of(f);
        let dual = match class.tag {
            ClassTag::Bent | ClassTag::Plateaued { .. } => {
                let d = dual(f, v)?;
                Some(DualReport {
                    v: point_to_string(d.anchor, n),
                    vars: d.function.num_vars(),
                    hex: d.function.to_hex(),
                })
            }
            _ => None,
        };
        Ok(Self {
            n,
            anf: anf.to_string(),
            hex: (n >= 2).then(|| f.to_hex()),
            class: class.tag.name().to_string(),
            s: class.tag.plateau(n),
            spectrum: class
                .distribution
                .iter()
                .map(|(&value, &count)| SpectrumEntry { value, count })
                .collect(),
            degree: anf.degree(),
            dual,
        })
    }

    pub fn is_bent(&self) -> bool {
        self.class == ClassTag::Bent.name()
    }
}

impl fmt::Display for FunctionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "variables  {}", self.n)?;
        writeln!(f, "anf        {}", self.anf)?;
        if let Some(hex) = &self.hex {
            writeln!(f, "hex        {hex}")?;
        }
        match (self.class.as_str(), self.s) {
            ("plateaued", Some(s)) => writeln!(f, "class      plateaued (s = {s})")?,
            (c, _) => writeln!(f, "class      {c}")?,
        }
        writeln!(f, "degree     {}", self.degree)?;
        let spectrum: Vec<String> = self
            .spectrum
            .iter()
            .map(|e| format!("{}:{}", e.value, e.count))
            .collect();
        writeln!(f, "spectrum   {}", spectrum.join(" "))?;
        if let Some(d) = &self.dual {
            writeln!(f, "dual       {} (v = {}, {} variables)", d.hex, d.v, d.vars)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::parse_function;

    #[test]
    fn bent_report() {
        let r = FunctionReport::new(&parse_function("x1*x2 + x3*x4", None).unwrap(), None).unwrap();
        assert_eq!((r.n, r.degree, r.s), (4, 2, Some(0)));
        assert!(r.is_bent());
        assert_eq!(r.hex.as_deref(), Some("111e"));
        assert_eq!(
            r.spectrum,
            vec![
                SpectrumEntry { value: -4, count: 6 },
                SpectrumEntry { value: 4, count: 10 }
            ]
        );
        // Self-dual.
        assert_eq!(r.dual.unwrap().hex, "111e");
    }

    #[test]
    fn hex_round_trip_gives_same_report() {
        let f = parse_function("x1*x2*x5 + x1*x3 + x2*x4 + x5", None).unwrap();
        let r = FunctionReport::new(&f, None).unwrap();
        assert_eq!((r.class.as_str(), r.s), ("plateaued", Some(1)));
        let g = BooleanFunction::from_hex(r.hex.as_ref().unwrap()).unwrap();
        assert_eq!(FunctionReport::new(&g, None).unwrap(), r);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<FunctionReport>(&json).unwrap(), r);
    }

    #[test]
    fn small_and_unstructured() {
        let r = FunctionReport::new(&parse_function("x1", None).unwrap(), None).unwrap();
        assert_eq!((r.hex, r.class.as_str(), r.s), (None, "affine", Some(1)));
        let r = FunctionReport::new(&parse_function("x1*x2*x3", None).unwrap(), None).unwrap();
        assert_eq!((r.class.as_str(), r.s, r.dual), ("other", None, None));
    }
}
