//! Instance files: structure constants as nested arrays of scalar strings.

use serde::{Deserialize, Serialize};

use crate::catalog::InstanceDescriptor;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Vector};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{Algebra, Coalgebra, HopfAlgebra};
use crate::smash::{ComoduleAlgebra, RelativeHopfModule};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    /// `mul[i][j]` is `e_i e_j`.
    pub mul: Vec<Vec<Vec<String>>>,
    pub unit: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfFile {
    pub dim: usize,
    pub mul: Vec<Vec<Vec<String>>>,
    pub unit: Vec<String>,
    /// `comul[k][i][j]` is the coefficient of `e_i ⊗ e_j` in `Δ(e_k)`.
    pub comul: Vec<Vec<Vec<String>>>,
    pub counit: Vec<String>,
    /// Rows of the antipode matrix; column `j` is `S(e_j)`.
    pub antipode: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleFile {
    pub algebra: AlgebraFile,
    /// Rows `r·dim H + s`, columns `i`: `ρ(e_i) = Σ ρ[(r,s), i] e_r ⊗ h_s`.
    pub coaction: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub name: String,
    pub dim: usize,
    pub right_action: Vec<Vec<String>>,
    pub coaction: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub format_version: u32,
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub field: String,
    pub hopf: HopfFile,
    pub comodule: ComoduleFile,
    #[serde(default)]
    pub modules: Vec<ModuleFile>,
}

fn strs(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| strs(m.row(i))).collect()
}

fn cube(dim: usize, slice: impl Fn(usize, usize) -> Vec<String>) -> Vec<Vec<Vec<String>>> {
    (0..dim).map(|i| (0..dim).map(|j| slice(i, j)).collect()).collect()
}

impl AlgebraFile {
    pub fn from_algebra(a: &Algebra) -> Self {
        AlgebraFile {
            dim: a.dim(),
            mul: cube(a.dim(), |i, j| strs(a.basis_product(i, j))),
            unit: strs(a.unit()),
        }
    }

    fn parse(&self, f: FieldSpec, at: &str) -> Result<Algebra> {
        let d = self.dim;
        let mul = parse_cube(f, &self.mul, d, &format!("{at}.mul"))?;
        let unit = parse_vec(f, &self.unit, d, &format!("{at}.unit"))?;
        Ok(Algebra::new(f, d, mul, unit))
    }
}

fn parse_vec(f: FieldSpec, v: &[String], len: usize, at: &str) -> Result<Vector> {
    if v.len() != len {
        return Err(Error::Parse(format!("{at}: expected {len} entries, found {}", v.len())));
    }
    v.iter()
        .enumerate()
        .map(|(i, s)| f.parse_scalar(s).map_err(|e| Error::Parse(format!("{at}[{i}]: {e}"))))
        .collect()
}

fn parse_cube(f: FieldSpec, c: &[Vec<Vec<String>>], d: usize, at: &str) -> Result<Vec<Scalar>> {
    if c.len() != d {
        return Err(Error::Parse(format!("{at}: expected {d} entries, found {}", c.len())));
    }
    let mut out = Vec::with_capacity(d * d * d);
    for (i, plane) in c.iter().enumerate() {
        if plane.len() != d {
            return Err(Error::Parse(format!("{at}[{i}]: expected {d} entries, found {}", plane.len())));
        }
        for (j, v) in plane.iter().enumerate() {
            out.extend(parse_vec(f, v, d, &format!("{at}[{i}][{j}]"))?);
        }
    }
    Ok(out)
}

fn parse_matrix(f: FieldSpec, r: &[Vec<String>], nrows: usize, ncols: usize, at: &str) -> Result<Matrix> {
    if r.len() != nrows {
        return Err(Error::Parse(format!("{at}: expected {nrows} rows, found {}", r.len())));
    }
    let parsed = r
        .iter()
        .enumerate()
        .map(|(i, row)| parse_vec(f, row, ncols, &format!("{at}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    if nrows == 0 {
        return Ok(Matrix::zeros(f, 0, ncols));
    }
    Matrix::from_rows(f, parsed)
}

impl InstanceFile {
    pub fn from_instance(inst: &InstanceDescriptor) -> Self {
        let h = &inst.hopf;
        let c = &inst.comodule;
        let dh = h.dim();
        InstanceFile {
            format_version: FORMAT_VERSION,
            name: inst.name.clone(),
            description: inst.description.clone(),
            field: inst.field.to_string(),
            hopf: HopfFile {
                dim: dh,
                mul: cube(dh, |i, j| strs(h.algebra().basis_product(i, j))),
                unit: strs(h.algebra().unit()),
                comul: cube(dh, |k, i| strs(&h.coalgebra().basis_coproduct(k)[i * dh..(i + 1) * dh])),
                counit: strs(h.coalgebra().counit()),
                antipode: rows(h.antipode()),
            },
            comodule: ComoduleFile {
                algebra: AlgebraFile::from_algebra(c.algebra()),
                coaction: rows(c.coaction()),
            },
            modules: inst
                .modules
                .iter()
                .map(|(name, m)| ModuleFile {
                    name: name.clone(),
                    dim: m.dim(),
                    right_action: rows(m.right_action()),
                    coaction: rows(m.coaction()),
                })
                .collect(),
        }
    }

    /// Builds the structures; dimensions are validated, axioms are not.
    pub fn to_instance(&self) -> Result<InstanceDescriptor> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "format_version {} is not supported (expected {FORMAT_VERSION})",
                self.format_version
            )));
        }
        let f: FieldSpec = self.field.parse()?;
        let hf = &self.hopf;
        let dh = hf.dim;
        let algebra = Algebra::new(f, dh, parse_cube(f, &hf.mul, dh, "hopf.mul")?, parse_vec(f, &hf.unit, dh, "hopf.unit")?);
        let comul = parse_cube(f, &hf.comul, dh, "hopf.comul")?;
        let coalgebra = Coalgebra::new(f, dh, comul, parse_vec(f, &hf.counit, dh, "hopf.counit")?);
        let antipode = parse_matrix(f, &hf.antipode, dh, dh, "hopf.antipode")?;
        let hopf = HopfAlgebra::new(algebra, coalgebra, antipode);
        let a = self.comodule.algebra.parse(f, "comodule.algebra")?;
        let da = a.dim();
        let coaction = parse_matrix(f, &self.comodule.coaction, da * dh, da, "comodule.coaction")?;
        let comodule = ComoduleAlgebra::new(a, hopf.clone(), coaction);
        let modules = self
            .modules
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let at = format!("modules[{i}]");
                let act = parse_matrix(f, &m.right_action, m.dim, m.dim * da, &format!("{at}.right_action"))?;
                let co = parse_matrix(f, &m.coaction, m.dim * dh, m.dim, &format!("{at}.coaction"))?;
                Ok((m.name.clone(), RelativeHopfModule::new(comodule.clone(), m.dim, act, co)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(InstanceDescriptor {
            name: self.name.clone(),
            description: self.description.clone(),
            field: f,
            hopf,
            comodule,
            modules,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance file serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
    }
}

/// Parses and builds an instance from JSON text.
pub fn parse_instance(text: &str) -> Result<InstanceDescriptor> {
    InstanceFile::from_json(text)?.to_instance()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{instance, instance_names};

    #[test]
    fn round_trip_is_exact() {
        for f in [FieldSpec::Rationals, FieldSpec::Prime(5)] {
            for name in instance_names(true) {
                let inst = instance(name, f).unwrap();
                let text = InstanceFile::from_instance(&inst).to_json();
                let back = parse_instance(&text).unwrap();
                assert_eq!(back, inst, "{name}");
                assert_eq!(InstanceFile::from_instance(&back).to_json(), text);
            }
        }
    }

    #[test]
    fn malformed_inputs() {
        let inst = instance("I1", FieldSpec::Rationals).unwrap();
        let mut file = InstanceFile::from_instance(&inst);
        file.hopf.antipode[0][0] = "1/0".into();
        let err = file.to_instance().unwrap_err();
        assert!(matches!(err, Error::Parse(ref m) if m.contains("hopf.antipode[0][0]")), "{err}");

        let mut file = InstanceFile::from_instance(&inst);
        file.comodule.coaction.pop();
        assert!(matches!(file.to_instance(), Err(Error::Parse(_))));

        let mut file = InstanceFile::from_instance(&inst);
        file.format_version = 9;
        assert!(file.to_instance().is_err());

        let err = InstanceFile::from_json("{\"format_version\": 1,\n \"name\": 3}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }
}
