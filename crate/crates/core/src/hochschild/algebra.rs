use serde::{Deserialize, Serialize};

use crate::catmod::json::{parse_entry, Entry};
use crate::error::{Error, Result};
use crate::fincat::GroupTable;
use crate::linalg::mat::collect_vec;
use crate::linalg::{Field, FieldTag, Mat, SpVec};

/// A finite-dimensional unital associative algebra with basis `e_0, …, e_{d−1}`.
#[derive(Clone, Debug)]
pub struct AlgebraData<F: Field> {
    field: F,
    /// `left[i]` is the matrix of `v ↦ e_i · v`
    left: Vec<Mat<F>>,
    unit: SpVec<F::Elem>,
}

/// A bimodule over an algebra, by the matrices of the basis elements acting on each side.
#[derive(Clone, Debug)]
pub struct BimoduleData<F: Field> {
    dim: usize,
    left: Vec<Mat<F>>,
    right: Vec<Mat<F>>,
}

impl<F: Field> AlgebraData<F> {
    /// Validates associativity and the two-sided unit. `sc[i][j][k]` is the coefficient of
    /// `e_k` in `e_i e_j`.
    pub fn new(field: &F, sc: &[Vec<Vec<F::Elem>>], unit: &[F::Elem]) -> Result<Self> {
        let dim = sc.len();
        if unit.len() != dim || sc.iter().any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim)) {
            return Err(Error::Input(format!("structure constants and unit must have dimension {dim}")));
        }
        let left: Vec<Mat<F>> = (0..dim)
            .map(|i| {
                let cols = (0..dim)
                    .map(|j| {
                        let entries = sc[i][j].iter().enumerate().map(|(k, v)| (k as u32, v.clone())).collect();
                        collect_vec(field, entries)
                    })
                    .collect();
                Mat::from_columns(field, dim, cols)
            })
            .collect();
        let unit = collect_vec(field, unit.iter().enumerate().map(|(k, v)| (k as u32, v.clone())).collect());
        let algebra = AlgebraData { field: field.clone(), left, unit };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let (ei, ej, ek) = (algebra.basis(i), algebra.basis(j), algebra.basis(k));
                    if algebra.mul(&algebra.mul(&ei, &ej), &ek) != algebra.mul(&ei, &algebra.mul(&ej, &ek)) {
                        return Err(Error::NotAssociative(format!("(e{i} e{j}) e{k} != e{i} (e{j} e{k})")));
                    }
                }
            }
        }
        for i in 0..dim {
            let ei = algebra.basis(i);
            if algebra.mul(&algebra.unit, &ei) != ei || algebra.mul(&ei, &algebra.unit) != ei {
                return Err(Error::NotUnital(format!("1 · e{i} or e{i} · 1 differs from e{i}")));
            }
        }
        Ok(algebra)
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground_field(field: &F) -> Self {
        Self::new(field, &[vec![vec![field.one()]]], &[field.one()]).expect("K is an algebra")
    }

    /// `K[x]/(x²)` on the basis `(1, x)`.
    pub fn dual_numbers(field: &F) -> Self {
        let (o, z) = (field.one(), field.zero());
        let sc = vec![vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]], vec![
            vec![z.clone(), o.clone()],
            vec![z.clone(), z.clone()],
        ]];
        Self::new(field, &sc, &[o, z]).expect("dual numbers form an algebra")
    }

    /// The group algebra `K[G]` on the basis of group elements.
    pub fn group_algebra(field: &F, group: &GroupTable) -> Self {
        let n = group.order();
        let sc: Vec<Vec<Vec<F::Elem>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut v = vec![field.zero(); n];
                        v[group.mul(i, j)] = field.one();
                        v
                    })
                    .collect()
            })
            .collect();
        let mut unit = vec![field.zero(); n];
        unit[group.identity()] = field.one();
        Self::new(field, &sc, &unit).expect("group algebras are algebras")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.left.len()
    }

    pub fn unit(&self) -> &SpVec<F::Elem> {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> SpVec<F::Elem> {
        vec![(i as u32, self.field.one())]
    }

    /// Matrix of left multiplication by `e_i`.
    pub fn left_mul(&self, i: usize) -> &Mat<F> {
        &self.left[i]
    }

    pub fn mul(&self, u: &SpVec<F::Elem>, v: &SpVec<F::Elem>) -> SpVec<F::Elem> {
        let mut entries = Vec::new();
        for (i, a) in u {
            for (r, b) in self.left[*i as usize].apply(v) {
                entries.push((r, self.field.mul(a, &b)));
            }
        }
        collect_vec(&self.field, entries)
    }

    /// `A` as a bimodule over itself.
    pub fn regular_bimodule(&self) -> BimoduleData<F> {
        let d = self.dim();
        let right = (0..d)
            .map(|i| {
                let cols = (0..d).map(|j| self.mul(&self.basis(j), &self.basis(i))).collect();
                Mat::from_columns(&self.field, d, cols)
            })
            .collect();
        BimoduleData { dim: d, left: self.left.clone(), right }
    }
}

impl<F: Field> BimoduleData<F> {
    /// Validates unitality, associativity of both actions and their commutation.
    pub fn new(algebra: &AlgebraData<F>, dim: usize, left: Vec<Mat<F>>, right: Vec<Mat<F>>) -> Result<Self> {
        let d = algebra.dim();
        if left.len() != d || right.len() != d {
            return Err(Error::Input(format!("expected {d} action matrices per side")));
        }
        if left.iter().chain(&right).any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Input(format!("action matrices must be {dim}x{dim}")));
        }
        let module = BimoduleData { dim, left, right };
        let field = algebra.field();
        let combine = |mats: &[Mat<F>], v: &SpVec<F::Elem>| -> Mat<F> {
            let mut acc = Mat::zeros(field, dim, dim);
            for (i, c) in v {
                acc = acc.add(&mats[*i as usize].scale(c));
            }
            acc
        };
        if !combine(&module.left, algebra.unit()).is_identity() || !combine(&module.right, algebra.unit()).is_identity() {
            return Err(Error::NotUnital("the unit does not act as the identity".into()));
        }
        for i in 0..d {
            for j in 0..d {
                let prod = algebra.mul(&algebra.basis(i), &algebra.basis(j));
                if module.left[i].mul(&module.left[j]) != combine(&module.left, &prod) {
                    return Err(Error::NotAssociative(format!("left action of e{i} e{j}")));
                }
                if module.right[j].mul(&module.right[i]) != combine(&module.right, &prod) {
                    return Err(Error::NotAssociative(format!("right action of e{i} e{j}")));
                }
                if module.left[i].mul(&module.right[j]) != module.right[j].mul(&module.left[i]) {
                    return Err(Error::RelationViolation(format!("left e_{i} and right e_{j} do not commute")));
                }
            }
        }
        Ok(module)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix of `m ↦ e_i · m`.
    pub fn left(&self, i: usize) -> &Mat<F> {
        &self.left[i]
    }

    /// Matrix of `m ↦ m · e_i`.
    pub fn right(&self, i: usize) -> &Mat<F> {
        &self.right[i]
    }
}

/// Serialized algebra: `{"dim", "sc", "unit", "field": "Q" | "Fp", "p"}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    pub sc: Vec<Vec<Vec<Entry>>>,
    pub unit: Vec<Entry>,
    #[serde(default = "default_field")]
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
}

fn default_field() -> String {
    "Q".into()
}

/// Serialized bimodule: the left and right matrices of each algebra basis element.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BimoduleJson {
    pub dim: usize,
    pub left: Vec<Vec<Vec<Entry>>>,
    pub right: Vec<Vec<Vec<Entry>>>,
}

impl AlgebraJson {
    pub fn field_tag(&self) -> Result<FieldTag> {
        match (self.field.as_str(), self.p) {
            ("Q", _) => Ok(FieldTag::Rational),
            ("Fp", Some(p)) => Ok(FieldTag::Prime(p)),
            ("Fp", None) => Err(Error::Input("field Fp needs a prime p".into())),
            (other, _) => Err(Error::Input(format!("unknown field `{other}`"))),
        }
    }
}

pub fn algebra_from_json<F: Field>(field: &F, j: &AlgebraJson) -> Result<AlgebraData<F>> {
    let tag = j.field_tag()?;
    if tag != field.tag() {
        return Err(Error::FieldMismatch { expected: field.tag().to_string(), found: tag.to_string() });
    }
    if j.sc.len() != j.dim {
        return Err(Error::Input(format!("sc has {} rows for dimension {}", j.sc.len(), j.dim)));
    }
    let sc = j
        .sc
        .iter()
        .map(|row| row.iter().map(|v| v.iter().map(|e| parse_entry(field, e)).collect()).collect())
        .collect::<Result<Vec<Vec<Vec<F::Elem>>>>>()?;
    let unit = j.unit.iter().map(|e| parse_entry(field, e)).collect::<Result<Vec<_>>>()?;
    AlgebraData::new(field, &sc, &unit)
}

pub fn bimodule_from_json<F: Field>(algebra: &AlgebraData<F>, j: &BimoduleJson) -> Result<BimoduleData<F>> {
    let field = algebra.field();
    let mats = |list: &[Vec<Vec<Entry>>]| -> Result<Vec<Mat<F>>> {
        list.iter()
            .map(|rows| {
                let parsed = rows
                    .iter()
                    .map(|r| r.iter().map(|e| parse_entry(field, e)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Ok(Mat::from_rows(field, j.dim, &parsed))
            })
            .collect()
    };
    BimoduleData::new(algebra, j.dim, mats(&j.left)?, mats(&j.right)?)
}

pub fn algebra_to_json<F: Field>(a: &AlgebraData<F>) -> AlgebraJson {
    let field = a.field();
    let d = a.dim();
    let sc = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let prod = a.mul(&a.basis(i), &a.basis(j));
                    (0..d)
                        .map(|k| {
                            let v = prod.iter().find(|(r, _)| *r as usize == k).map(|(_, v)| v.clone());
                            Entry::Text(field.to_scalar(&v.unwrap_or_else(|| field.zero())).to_string())
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let unit = (0..d)
        .map(|k| {
            let v = a.unit().iter().find(|(r, _)| *r as usize == k).map(|(_, v)| v.clone());
            Entry::Text(field.to_scalar(&v.unwrap_or_else(|| field.zero())).to_string())
        })
        .collect();
    let (name, p) = match field.tag() {
        FieldTag::Rational => ("Q", None),
        FieldTag::Prime(p) => ("Fp", Some(p)),
    };
    AlgebraJson { dim: d, sc, unit, field: name.into(), p }
}
