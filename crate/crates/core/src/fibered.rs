//! Fibered algebra over a finite discrete base.
//!
//! A [`Section`] picks one fiber value per base point. Fiber operations lift
//! to sections pointwise, which turns a section of scalars and a section of
//! coordinate rows into a vector field over the fibered skew field.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{rc_product, SkewMatrix};
use crate::rank::solve_nonsingular;
use crate::skewfield::SkewField;

/// Ordered, nonempty set of distinct point labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Base {
    labels: Vec<String>,
}

impl Base {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::DimensionMismatch("empty base".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DimensionMismatch(format!("duplicate base point {l:?}")));
            }
        }
        Ok(Base { labels })
    }

    /// Points labelled `x0, x1, ..`.
    pub fn numbered(n: usize) -> Result<Self> {
        Base::new((0..n).map(|i| format!("x{i}")))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Total assignment of a fiber value to every base point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section<T> {
    base: Base,
    values: Vec<T>,
}

#[derive(Serialize, Deserialize)]
struct SectionData<T> {
    base: Vec<String>,
    values: BTreeMap<String, T>,
}

impl<T> Section<T> {
    pub fn new(base: Base, values: Vec<T>) -> Result<Self> {
        if values.len() != base.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} values over {} points",
                values.len(),
                base.len()
            )));
        }
        Ok(Section { base, values })
    }

    pub fn from_fn(base: Base, f: impl FnMut(usize) -> T) -> Self {
        let values = (0..base.len()).map(f).collect();
        Section { base, values }
    }

    pub fn constant(base: Base, value: T) -> Self
    where
        T: Clone,
    {
        let values = vec![value; base.len()];
        Section { base, values }
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn at(&self, label: &str) -> Option<&T> {
        self.base.position(label).map(|i| &self.values[i])
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Section<U> {
        Section {
            base: self.base.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }
}

impl<T: Serialize + DeserializeOwned> Section<T> {
    /// `{"base": [labels], "values": {label: entity}}`
    pub fn from_json(text: &str) -> Result<Self> {
        let data: SectionData<T> = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let base = Base::new(data.base)?;
        let mut values = data.values;
        if values.len() != base.len() {
            return Err(Error::Json("values must list every base point exactly once".into()));
        }
        let values = base
            .labels()
            .iter()
            .map(|l| {
                values
                    .remove(l)
                    .ok_or_else(|| Error::Json(format!("no value for base point {l:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Section::new(base, values)
    }

    pub fn to_json(&self) -> Result<String>
    where
        T: Clone,
    {
        let data = SectionData {
            base: self.base.labels.clone(),
            values: self.base.labels.iter().cloned().zip(self.values.iter().cloned()).collect(),
        };
        serde_json::to_string(&data).map_err(|e| Error::Json(e.to_string()))
    }
}

fn same_base<'a, T>(sections: impl IntoIterator<Item = &'a Section<T>>) -> Result<&'a Base>
where
    T: 'a,
{
    let mut iter = sections.into_iter();
    let first = iter.next().ok_or(Error::BaseMismatch)?.base();
    if iter.any(|s| s.base() != first) {
        return Err(Error::BaseMismatch);
    }
    Ok(first)
}

/// `result(x) = op(s₁(x), …, sₙ(x))` at every point `x`.
pub fn lift_operation<T, U>(sections: &[&Section<T>], op: impl Fn(&[&T]) -> U) -> Result<Section<U>> {
    let base = same_base(sections.iter().copied())?.clone();
    let values = (0..base.len())
        .map(|x| {
            let fiber: Vec<&T> = sections.iter().map(|s| &s.values[x]).collect();
            op(&fiber)
        })
        .collect();
    Ok(Section { base, values })
}

/// Pointwise binary operation.
pub fn lift_binary<T, U, V>(a: &Section<T>, b: &Section<U>, op: impl Fn(&T, &U) -> V) -> Result<Section<V>> {
    if a.base != b.base {
        return Err(Error::BaseMismatch);
    }
    Ok(Section {
        base: a.base.clone(),
        values: a.values.iter().zip(&b.values).map(|(x, y)| op(x, y)).collect(),
    })
}

/// Pointwise left action of a scalar field on a vector field.
pub fn scalar_action<F: SkewField>(
    a: &Section<F>,
    v: &Section<SkewMatrix<F>>,
) -> Result<Section<SkewMatrix<F>>> {
    lift_binary(a, v, |s, row| row.left_scale(s))
}

pub fn add_fields<F: SkewField>(
    u: &Section<SkewMatrix<F>>,
    v: &Section<SkewMatrix<F>>,
) -> Result<Section<SkewMatrix<F>>> {
    lift_binary(u, v, |a, b| a.add(b))?.transpose_result()
}

impl<T> Section<Result<T>> {
    /// First failing fiber, or the section of successes.
    pub fn transpose_result(self) -> Result<Section<T>> {
        let values = self.values.into_iter().collect::<Result<Vec<_>>>()?;
        Ok(Section { base: self.base, values })
    }
}

/// One matrix per base point, all of the same shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberedLinearMap<F> {
    section: Section<SkewMatrix<F>>,
}

impl<F: SkewField> FiberedLinearMap<F> {
    pub fn new(section: Section<SkewMatrix<F>>) -> Result<Self> {
        let shape = section.values[0].shape();
        if section.values.iter().any(|m| m.shape() != shape) {
            return Err(Error::DimensionMismatch("fiber matrices differ in shape".into()));
        }
        Ok(FiberedLinearMap { section })
    }

    pub fn identity(base: Base, n: usize) -> Self {
        FiberedLinearMap {
            section: Section::constant(base, SkewMatrix::identity(n)),
        }
    }

    pub fn base(&self) -> &Base {
        self.section.base()
    }

    pub fn matrices(&self) -> &Section<SkewMatrix<F>> {
        &self.section
    }

    pub fn shape(&self) -> (usize, usize) {
        self.section.values[0].shape()
    }
}

/// `b(x) = a(x) RC⋆ H(x)` at every point.
pub fn apply_fibered_map<F: SkewField>(
    a: &Section<SkewMatrix<F>>,
    h: &FiberedLinearMap<F>,
) -> Result<Section<SkewMatrix<F>>> {
    lift_binary(a, &h.section, rc_product)?.transpose_result()
}

/// Pointwise `F(x) RC⋆ G(x)`: first `f`, then `g`.
pub fn compose_fibered_maps<F: SkewField>(
    f: &FiberedLinearMap<F>,
    g: &FiberedLinearMap<F>,
) -> Result<FiberedLinearMap<F>> {
    FiberedLinearMap::new(lift_binary(&f.section, &g.section, rc_product)?.transpose_result()?)
}

/// Coordinates of `v(x)` in the basis with coordinate matrix `basis(x)`, at
/// every point.
pub fn expand_in_fibered_basis<F: SkewField>(
    v: &Section<SkewMatrix<F>>,
    basis: &FiberedLinearMap<F>,
) -> Result<Section<SkewMatrix<F>>> {
    lift_binary(v, &basis.section, |row, e| solve_nonsingular(e, row))?.transpose_result()
}

type FiberFn<T> = Arc<dyn Fn(&T) -> T + Send + Sync>;
type OperationFn<T> = Arc<dyn Fn(&[T]) -> T + Send + Sync>;

/// A bijection of a fiber with its inverse, as used by a local
/// trivialization.
#[derive(Clone)]
pub struct FiberChart<T> {
    forward: FiberFn<T>,
    inverse: FiberFn<T>,
}

impl<T> FiberChart<T> {
    pub fn new(
        forward: impl Fn(&T) -> T + Send + Sync + 'static,
        inverse: impl Fn(&T) -> T + Send + Sync + 'static,
    ) -> Self {
        FiberChart {
            forward: Arc::new(forward),
            inverse: Arc::new(inverse),
        }
    }

    pub fn identity() -> Self
    where
        T: Clone + 'static,
    {
        FiberChart::new(T::clone, T::clone)
    }

    pub fn apply(&self, x: &T) -> T {
        (self.forward)(x)
    }

    pub fn apply_inverse(&self, x: &T) -> T {
        (self.inverse)(x)
    }
}

impl<T> fmt::Debug for FiberChart<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("FiberChart")
    }
}

/// An n-ary operation on a fiber.
#[derive(Clone)]
pub struct FiberOperation<T> {
    pub name: String,
    pub arity: usize,
    op: OperationFn<T>,
}

impl<T> FiberOperation<T> {
    pub fn new(name: impl Into<String>, arity: usize, op: impl Fn(&[T]) -> T + Send + Sync + 'static) -> Self {
        FiberOperation {
            name: name.into(),
            arity,
            op: Arc::new(op),
        }
    }

    pub fn eval(&self, args: &[T]) -> T {
        (self.op)(args)
    }
}

impl<F: SkewField + 'static> FiberOperation<F> {
    pub fn add() -> Self {
        FiberOperation::new("add", 2, |a: &[F]| a[0].clone() + a[1].clone())
    }

    pub fn mul() -> Self {
        FiberOperation::new("mul", 2, |a: &[F]| a[0].clone() * a[1].clone())
    }

    pub fn neg() -> Self {
        FiberOperation::new("neg", 1, |a: &[F]| -a[0].clone())
    }
}

impl<T> fmt::Debug for FiberOperation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiberOperation({}/{})", self.name, self.arity)
    }
}

/// True when, at every point, `t = φ_B ∘ φ_A⁻¹` is a homomorphism for every
/// listed operation: `t(ω(e₁, …, eₙ)) = ω(t(e₁), …, t(eₙ))` over all tuples
/// drawn from `samples` (pass the whole fiber when it is finite).
pub fn check_transition<T: Clone + PartialEq>(
    phi_a: &Section<FiberChart<T>>,
    phi_b: &Section<FiberChart<T>>,
    ops: &[FiberOperation<T>],
    samples: &[T],
) -> Result<bool> {
    if phi_a.base() != phi_b.base() {
        return Err(Error::BaseMismatch);
    }
    for (a, b) in phi_a.values().iter().zip(phi_b.values()) {
        let transition = |e: &T| b.apply(&a.apply_inverse(e));
        for op in ops {
            for tuple in tuples(samples, op.arity) {
                let lhs = transition(&op.eval(&tuple));
                let mapped: Vec<T> = tuple.iter().map(transition).collect();
                if lhs != op.eval(&mapped) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Cartesian power `samples^arity`.
fn tuples<T: Clone>(samples: &[T], arity: usize) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                samples.iter().map(move |s| {
                    let mut next = prefix.clone();
                    next.push(s.clone());
                    next
                })
            })
            .collect();
    }
    out
}
