//! The JSON manifest format: an algebra (Salamon shorthand or an explicit
//! structure-constant list) plus named structures of kind `complex`,
//! `symplectic`, `matrix`, `spinor`, or `complex-family`. Family payloads
//! may use the reserved tokens `cos` and `sin`, substituted from a circle
//! point before realization.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exterior::Form;
use crate::gcs::GenStructure;
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::parse::{expr_uses_circle, parse_endo, parse_form, parse_salamon, EndoSpec};
use crate::scalar::{CirclePoint, Rational};

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct Manifest {
    pub algebra: AlgebraSpec,
    #[serde(default)]
    pub structures: Vec<StructureSpec>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct AlgebraSpec {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub salamon: Option<String>,
    /// One entry per generator: a list of `[j, k, coefficient]` triples,
    /// meaning `d e^i = sum c * e^j ^ e^k`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diff: Option<Vec<Vec<(usize, usize, String)>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureKind {
    Complex,
    Symplectic,
    Matrix,
    Spinor,
    ComplexFamily,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct StructureSpec {
    pub name: String,
    pub kind: StructureKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub images: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expr: Option<String>,
}

/// A realized structure, keeping the data the verdict commands need.
#[derive(Clone, Debug)]
pub enum Realization {
    /// Almost-complex: the covector matrix plus the generalized structure.
    Complex { cov: Matrix, gen: GenStructure },
    Symplectic { omega: Form, gen: GenStructure },
    Spinor { rho: Form, gen: GenStructure },
}

impl Realization {
    pub fn gen(&self) -> &GenStructure {
        match self {
            Realization::Complex { gen, .. }
            | Realization::Symplectic { gen, .. }
            | Realization::Spinor { gen, .. } => gen,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Realization::Complex { .. } => "complex",
            Realization::Symplectic { .. } => "symplectic",
            Realization::Spinor { .. } => "spinor",
        }
    }
}

impl Manifest {
    pub fn from_str(text: &str) -> Result<Self, Error> {
        let m: Manifest = serde_json::from_str(text)
            .map_err(|e| Error::Manifest { msg: format!("invalid JSON: {e}") })?;
        let mut seen = std::collections::BTreeSet::new();
        for s in &m.structures {
            if !seen.insert(s.name.clone()) {
                return Err(Error::Manifest { msg: format!("duplicate structure `{}`", s.name) });
            }
        }
        Ok(m)
    }

    pub fn from_path(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Manifest { msg: format!("cannot read {}: {e}", path.display()) })?;
        Manifest::from_str(&text)
    }

    pub fn algebra(&self) -> Result<LieAlgebra, Error> {
        match (&self.algebra.salamon, &self.algebra.diff) {
            (Some(text), None) => {
                let alg = parse_salamon(text)?;
                if alg.dim() != self.algebra.dim {
                    return Err(Error::Manifest {
                        msg: format!(
                            "declared dim {} but the shorthand has {} entries",
                            self.algebra.dim,
                            alg.dim()
                        ),
                    });
                }
                Ok(alg)
            }
            (None, Some(entries)) => {
                let dim = self.algebra.dim;
                if entries.len() != dim {
                    return Err(Error::Manifest {
                        msg: format!("diff list must have {dim} entries"),
                    });
                }
                let mut d1 = Vec::with_capacity(dim);
                for (i, entry) in entries.iter().enumerate() {
                    let mut f = Form::zero();
                    for (j, k, coeff) in entry {
                        for idx in [*j, *k] {
                            if idx == 0 || idx > dim {
                                return Err(Error::IndexOutOfRange { index: idx, dim });
                            }
                        }
                        let c: Rational = coeff.parse().map_err(|_| Error::Manifest {
                            msg: format!("bad coefficient `{coeff}` in d e{}", i + 1),
                        })?;
                        let pair = Form::monomial(1 << (j - 1), crate::scalar::Scalar::one())
                            .wedge(&Form::monomial(1 << (k - 1), crate::scalar::Scalar::one()));
                        f = f.add(&pair.scale(&crate::scalar::Scalar::from_rational(c)));
                    }
                    d1.push(f);
                }
                LieAlgebra::new(dim, d1)
            }
            _ => Err(Error::Manifest {
                msg: "algebra needs exactly one of `salamon` or `diff`".into(),
            }),
        }
    }

    pub fn find(&self, name: &str) -> Option<&StructureSpec> {
        self.structures.iter().find(|s| s.name == name)
    }
}

impl StructureSpec {
    /// A structure is a family when it is declared `complex-family` or any
    /// payload mentions the circle tokens.
    pub fn is_family(&self) -> bool {
        if self.kind == StructureKind::ComplexFamily {
            return true;
        }
        let mut texts: Vec<&String> = Vec::new();
        if let Some(images) = &self.images {
            texts.extend(images.values());
        }
        if let Some(rows) = &self.matrix {
            texts.extend(rows.iter().flatten());
        }
        texts.extend(self.form.iter());
        texts.extend(self.expr.iter());
        texts.iter().any(|t| expr_uses_circle(t))
    }

    fn endo_spec(&self, dim: usize) -> Result<EndoSpec, Error> {
        match (&self.images, &self.matrix) {
            (Some(images), None) => {
                let mut map = BTreeMap::new();
                for (key, value) in images {
                    let idx: usize = key
                        .strip_prefix('e')
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| Error::Manifest {
                            msg: format!("image keys look like `e3`, got `{key}`"),
                        })?;
                    if idx == 0 || idx > dim {
                        return Err(Error::IndexOutOfRange { index: idx, dim });
                    }
                    map.insert(idx, value.clone());
                }
                Ok(EndoSpec::Images(map))
            }
            (None, Some(rows)) => Ok(EndoSpec::Matrix(rows.clone())),
            _ => Err(Error::Manifest {
                msg: format!("structure `{}` needs exactly one of `images` or `matrix`", self.name),
            }),
        }
    }

    /// Instantiate on the given algebra, substituting a circle point when
    /// the structure is a family (required in that case).
    pub fn realize(
        &self,
        algebra: &LieAlgebra,
        circle: Option<&CirclePoint>,
    ) -> Result<Realization, Error> {
        if self.is_family() && circle.is_none() {
            return Err(Error::CircleRequired);
        }
        let dim = algebra.dim();
        match self.kind {
            StructureKind::Complex | StructureKind::Matrix | StructureKind::ComplexFamily => {
                let cov = parse_endo(&self.endo_spec(dim)?, dim, circle)?;
                let gen = GenStructure::from_complex(algebra.clone(), &cov)?;
                Ok(Realization::Complex { cov, gen })
            }
            StructureKind::Symplectic => {
                let text = self.form.as_ref().ok_or_else(|| Error::Manifest {
                    msg: format!("symplectic structure `{}` needs `form`", self.name),
                })?;
                let omega = parse_form(text, dim, circle)?;
                let gen = GenStructure::from_symplectic(algebra.clone(), &omega)?;
                Ok(Realization::Symplectic { omega, gen })
            }
            StructureKind::Spinor => {
                let text = self.expr.as_ref().ok_or_else(|| Error::Manifest {
                    msg: format!("spinor structure `{}` needs `expr`", self.name),
                })?;
                let rho = parse_form(text, dim, circle)?;
                let gen = GenStructure::from_spinor(algebra.clone(), &rho)?;
                Ok(Realization::Spinor { rho, gen })
            }
        }
    }
}

/// A representatives file: degree (as a string key) to a list of form
/// expressions.
pub fn parse_reps_file(text: &str, dim: usize) -> Result<Vec<(usize, Vec<Form>)>, Error> {
    let raw: BTreeMap<String, Vec<String>> = serde_json::from_str(text)
        .map_err(|e| Error::Manifest { msg: format!("invalid representatives JSON: {e}") })?;
    let mut out = Vec::new();
    for (key, exprs) in raw {
        let degree: usize = key
            .parse()
            .map_err(|_| Error::Manifest { msg: format!("bad degree key `{key}`") })?;
        if degree > dim {
            return Err(Error::Manifest { msg: format!("degree {degree} exceeds {dim}") });
        }
        let forms = exprs
            .iter()
            .map(|e| parse_form(e, dim, None))
            .collect::<Result<Vec<_>, _>>()?;
        out.push((degree, forms));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const IWASAWA: &str = r#"{
        "algebra": {"dim": 6, "salamon": "0,0,0,0,13+42,14+23"},
        "structures": [
            {"name": "J0", "kind": "complex",
             "images": {"e1": "-e2", "e3": "-e4", "e5": "-e6"}},
            {"name": "rho", "kind": "spinor",
             "expr": "exp(i*(-e36 - e45)) ^ (e1 + i*e2)"},
            {"name": "omega", "kind": "symplectic", "form": "e16 + e25 + e34"},
            {"name": "Jt", "kind": "complex-family",
             "images": {"e1": "-e2",
                        "e3": "-cos*e4 - sin*e6", "e4": "cos*e3 - sin*e5",
                        "e5": "sin*e4 - cos*e6", "e6": "sin*e3 + cos*e5"}}
        ]
    }"#;

    #[test]
    fn parses_and_realizes() {
        let m = Manifest::from_str(IWASAWA).unwrap();
        let alg = m.algebra().unwrap();
        assert_eq!(alg.dim(), 6);
        let j0 = m.find("J0").unwrap().realize(&alg, None).unwrap();
        assert_eq!(j0.gen().gtype(), 3);
        let rho = m.find("rho").unwrap().realize(&alg, None).unwrap();
        assert_eq!(rho.gen().gtype(), 1);
        let om = m.find("omega").unwrap().realize(&alg, None).unwrap();
        assert_eq!(om.gen().gtype(), 0);
    }

    #[test]
    fn families_need_a_circle_point() {
        let m = Manifest::from_str(IWASAWA).unwrap();
        let alg = m.algebra().unwrap();
        let jt = m.find("Jt").unwrap();
        assert!(jt.is_family());
        assert!(matches!(jt.realize(&alg, None).unwrap_err(), Error::CircleRequired));
        let cp = CirclePoint::from_half_tangent(&crate::scalar::HalfTangent::Finite(
            crate::scalar::rat(0, 1),
        ));
        // at t = 0 the family is the holomorphically-parallelizable J0
        let at0 = jt.realize(&alg, Some(&cp)).unwrap();
        let j0 = m.find("J0").unwrap().realize(&alg, None).unwrap();
        assert_eq!(at0.gen().endo(), j0.gen().endo());
    }

    #[test]
    fn explicit_diff_lists_work() {
        let text = r#"{
            "algebra": {"dim": 6, "diff": [[], [], [], [],
                [[1,3,"1"],[2,4,"-1"]],
                [[1,4,"1"],[2,3,"1"]]]}
        }"#;
        let m = Manifest::from_str(text).unwrap();
        let alg = m.algebra().unwrap();
        let via_salamon = parse_salamon("0,0,0,0,13+42,14+23").unwrap();
        assert_eq!(alg, via_salamon);
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let text = r#"{
            "algebra": {"dim": 2, "salamon": "0,0"},
            "structures": [
                {"name": "a", "kind": "symplectic", "form": "e12"},
                {"name": "a", "kind": "symplectic", "form": "2*e12"}
            ]
        }"#;
        assert!(Manifest::from_str(text).is_err());
    }
}
