//! Finite representations of finite monoids and their morphisms.
//!
//! A representation assigns to every algebra element a total map of a finite
//! carrier set, compatibly with the monoid structure:
//! `action(unit) = id` and `action(a·b) = action(a) ∘ action(b)`.
//! All checks are exhaustive over the finite tables.
//!
//! Right-side representations are the left representations of
//! [`FiniteMonoid::opposite`].

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A total map of a finite set `{0, .., n-1}` into itself.
pub type Transformation = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct MonoidData {
    size: usize,
    table: Vec<Vec<usize>>,
    unit: usize,
}

/// Finite monoid given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MonoidData", into = "MonoidData")]
pub struct FiniteMonoid {
    table: Vec<Vec<usize>>,
    unit: usize,
}

impl TryFrom<MonoidData> for FiniteMonoid {
    type Error = Error;

    fn try_from(data: MonoidData) -> Result<Self> {
        if data.table.len() != data.size {
            return Err(Error::InvalidRepresentation(format!(
                "table has {} rows for size {}",
                data.table.len(),
                data.size
            )));
        }
        FiniteMonoid::new(data.table, data.unit)
    }
}

impl From<FiniteMonoid> for MonoidData {
    fn from(m: FiniteMonoid) -> Self {
        MonoidData {
            size: m.size(),
            table: m.table,
            unit: m.unit,
        }
    }
}

impl FiniteMonoid {
    /// Validates closure, associativity and both unit laws.
    pub fn new(table: Vec<Vec<usize>>, unit: usize) -> Result<Self> {
        let n = table.len();
        let bad = |msg: String| Err(Error::InvalidRepresentation(msg));
        if unit >= n {
            return bad(format!("unit {unit} outside a monoid of size {n}"));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
            return bad("multiplication table is not closed".into());
        }
        for a in 0..n {
            if table[unit][a] != a || table[a][unit] != a {
                return bad(format!("unit law fails at {a}"));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(FiniteMonoid { table, unit })
    }

    /// Cyclic group `Z/n` under addition, unit `0`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order zero");
        FiniteMonoid {
            table: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
            unit: 0,
        }
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Monoid with the reversed multiplication `a ∘ b = b · a`.
    pub fn opposite(&self) -> Self {
        let n = self.size();
        FiniteMonoid {
            table: (0..n).map(|a| (0..n).map(|b| self.table[b][a]).collect()).collect(),
            unit: self.unit,
        }
    }

    /// Exhaustive check that `map` is a monoid homomorphism into `target`.
    pub fn is_homomorphism(&self, map: &[usize], target: &FiniteMonoid) -> bool {
        let n = self.size();
        if map.len() != n || map.iter().any(|&v| v >= target.size()) {
            return false;
        }
        if map[self.unit] != target.unit {
            return false;
        }
        (0..n).all(|a| (0..n).all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b])))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct RepresentationData {
    algebra: FiniteMonoid,
    carrier: usize,
    action: Vec<Transformation>,
}

/// Representation of a finite monoid by transformations of `{0, .., carrier-1}`.
///
/// Deserialization validates; [`FiniteRepresentation::new_unchecked`] does
/// not, so that [`validate_representation`] can be exercised on bad input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RepresentationData", into = "RepresentationData")]
pub struct FiniteRepresentation {
    algebra: FiniteMonoid,
    carrier: usize,
    action: Vec<Transformation>,
}

impl TryFrom<RepresentationData> for FiniteRepresentation {
    type Error = Error;

    fn try_from(data: RepresentationData) -> Result<Self> {
        FiniteRepresentation::new(data.algebra, data.carrier, data.action)
    }
}

impl From<FiniteRepresentation> for RepresentationData {
    fn from(f: FiniteRepresentation) -> Self {
        RepresentationData {
            algebra: f.algebra,
            carrier: f.carrier,
            action: f.action,
        }
    }
}

impl FiniteRepresentation {
    pub fn new(algebra: FiniteMonoid, carrier: usize, action: Vec<Transformation>) -> Result<Self> {
        let rep = FiniteRepresentation::new_unchecked(algebra, carrier, action);
        if !validate_representation(&rep) {
            return Err(Error::InvalidRepresentation(
                "action is not a homomorphism into the transformation monoid".into(),
            ));
        }
        Ok(rep)
    }

    pub fn new_unchecked(algebra: FiniteMonoid, carrier: usize, action: Vec<Transformation>) -> Self {
        FiniteRepresentation {
            algebra,
            carrier,
            action,
        }
    }

    /// `Z/order` rotating `Z/carrier`: `a · m = (a + m) mod carrier`.
    /// Requires `carrier` to divide `order`.
    pub fn cyclic_rotation(order: usize, carrier: usize) -> Result<Self> {
        if carrier == 0 || !order.is_multiple_of(carrier) {
            return Err(Error::InvalidRepresentation(format!(
                "Z/{order} cannot rotate {carrier} points"
            )));
        }
        let action = (0..order)
            .map(|a| (0..carrier).map(|m| (a + m) % carrier).collect())
            .collect();
        FiniteRepresentation::new(FiniteMonoid::cyclic(order), carrier, action)
    }

    /// Every element acts as the identity.
    pub fn trivial(algebra: FiniteMonoid, carrier: usize) -> Self {
        let action = vec![(0..carrier).collect(); algebra.size()];
        FiniteRepresentation::new_unchecked(algebra, carrier, action)
    }

    pub fn algebra(&self) -> &FiniteMonoid {
        &self.algebra
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn action(&self) -> &[Transformation] {
        &self.action
    }

    pub fn act(&self, a: usize, m: usize) -> usize {
        self.action[a][m]
    }
}

/// Exhaustive check of the representation laws.
pub fn validate_representation(rep: &FiniteRepresentation) -> bool {
    let n = rep.algebra.size();
    let c = rep.carrier;
    if rep.action.len() != n || rep.action.iter().any(|t| t.len() != c || t.iter().any(|&v| v >= c)) {
        return false;
    }
    let unit = &rep.action[rep.algebra.unit()];
    if unit.iter().enumerate().any(|(m, &v)| v != m) {
        return false;
    }
    (0..n).all(|a| {
        (0..n).all(|b| {
            let ab = rep.algebra.mul(a, b);
            (0..c).all(|m| rep.act(ab, m) == rep.act(a, rep.act(b, m)))
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub effective: bool,
    pub transitive: bool,
    pub single_transitive: bool,
}

pub fn classify(rep: &FiniteRepresentation) -> Classification {
    let distinct: BTreeSet<&Transformation> = rep.action.iter().collect();
    let effective = distinct.len() == rep.action.len();
    let c = rep.carrier;
    let mut transitive = true;
    let mut unique = true;
    for m in 0..c {
        let mut hits = vec![0usize; c];
        for a in 0..rep.algebra.size() {
            hits[rep.act(a, m)] += 1;
        }
        transitive &= hits.iter().all(|&h| h > 0);
        unique &= hits.iter().all(|&h| h <= 1);
    }
    Classification {
        effective,
        transitive,
        single_transitive: transitive && unique,
    }
}

/// Morphism of representations: a monoid map `r` together with a carrier
/// map `R` intertwining the actions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepMorphism {
    #[serde(rename = "r")]
    pub algebra_map: Vec<usize>,
    #[serde(rename = "R")]
    pub carrier_map: Vec<usize>,
}

impl RepMorphism {
    pub fn new(algebra_map: Vec<usize>, carrier_map: Vec<usize>) -> Self {
        RepMorphism {
            algebra_map,
            carrier_map,
        }
    }

    pub fn identity(f: &FiniteRepresentation) -> Self {
        RepMorphism::new((0..f.algebra.size()).collect(), (0..f.carrier).collect())
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &RepMorphism) -> RepMorphism {
        RepMorphism::new(
            self.algebra_map.iter().map(|&a| next.algebra_map[a]).collect(),
            self.carrier_map.iter().map(|&m| next.carrier_map[m]).collect(),
        )
    }
}

/// `r` is a homomorphism and `R(f(a) m) = g(r(a)) R(m)` for all `a`, `m`.
pub fn check_morphism(m: &RepMorphism, f: &FiniteRepresentation, g: &FiniteRepresentation) -> bool {
    if !f.algebra.is_homomorphism(&m.algebra_map, &g.algebra) {
        return false;
    }
    let big_r = &m.carrier_map;
    if big_r.len() != f.carrier || big_r.iter().any(|&v| v >= g.carrier) {
        return false;
    }
    (0..f.algebra.size()).all(|a| {
        let ra = m.algebra_map[a];
        (0..f.carrier).all(|x| big_r[f.act(a, x)] == g.act(ra, big_r[x]))
    })
}

/// Composite of `first: f → g` and `second: g → h`.
pub fn compose_morphisms(
    first: &RepMorphism,
    second: &RepMorphism,
    f: &FiniteRepresentation,
    g: &FiniteRepresentation,
    h: &FiniteRepresentation,
) -> Result<RepMorphism> {
    if !check_morphism(first, f, g) {
        return Err(Error::InvalidMorphism("first factor".into()));
    }
    if !check_morphism(second, g, h) {
        return Err(Error::InvalidMorphism("second factor".into()));
    }
    Ok(first.then(second))
}

/// Morphism between transitive representations fixed by a choice of base
/// points `m0 ↦ n0`: `R(f(a) m0) = g(r(a)) n0`.
pub fn morphism_from_base_points(
    f: &FiniteRepresentation,
    g: &FiniteRepresentation,
    algebra_map: &[usize],
    m0: usize,
    n0: usize,
) -> Result<RepMorphism> {
    if m0 >= f.carrier || n0 >= g.carrier {
        return Err(Error::IndexOutOfRange("base point".into()));
    }
    if !f.algebra.is_homomorphism(algebra_map, &g.algebra) {
        return Err(Error::InvalidMorphism("algebra map is not a homomorphism".into()));
    }
    let mut carrier_map: Vec<Option<usize>> = vec![None; f.carrier];
    for (a, &ra) in algebra_map.iter().enumerate() {
        let x = f.act(a, m0);
        let y = g.act(ra, n0);
        match carrier_map[x] {
            Some(prev) if prev != y => {
                return Err(Error::InvalidMorphism(format!(
                    "point {x} would map to both {prev} and {y}"
                )))
            }
            _ => carrier_map[x] = Some(y),
        }
    }
    let carrier_map = carrier_map
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InvalidMorphism("source representation is not transitive".into()))?;
    let m = RepMorphism::new(algebra_map.to_vec(), carrier_map);
    if !check_morphism(&m, f, g) {
        return Err(Error::InvalidMorphism("constructed map does not intertwine".into()));
    }
    Ok(m)
}

/// Classes of the kernel relation of `map`, ordered by smallest element.
/// Returns the classes and, for each element, the index of its class.
fn kernel_classes(map: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; map.len()];
    for (x, &image) in map.iter().enumerate() {
        match classes.iter().position(|c| map[c[0]] == image) {
            Some(i) => {
                classes[i].push(x);
                class_of[x] = i;
            }
            None => {
                class_of[x] = classes.len();
                classes.push(vec![x]);
            }
        }
    }
    (classes, class_of)
}

/// `(r, R) = (i, I) ∘ (t, T) ∘ (j, J)`: a surjection onto the quotient
/// representation, a bijection onto the image, and an inclusion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// Classes of the kernel congruence of `r` on the source algebra.
    pub algebra_classes: Vec<Vec<usize>>,
    /// Classes of the kernel equivalence of `R` on the source carrier.
    pub carrier_classes: Vec<Vec<usize>>,
    /// `(j, J)`: source → quotient.
    pub projection: RepMorphism,
    pub quotient: FiniteRepresentation,
    /// `(t, T)`: quotient → image.
    pub bijection: RepMorphism,
    pub image: FiniteRepresentation,
    /// Target algebra elements in the image of `r`, ascending.
    pub image_algebra: Vec<usize>,
    /// Target carrier points in the image of `R`, ascending.
    pub image_carrier: Vec<usize>,
    /// `(i, I)`: image → target.
    pub inclusion: RepMorphism,
}

impl Decomposition {
    /// `i ∘ t ∘ j` and `I ∘ T ∘ J`.
    pub fn recompose(&self) -> RepMorphism {
        self.projection.then(&self.bijection).then(&self.inclusion)
    }

    /// Transformations `F(j(a))` of the quotient carrier, indexed by the
    /// original algebra.
    pub fn original_algebra_action(&self) -> Vec<Transformation> {
        self.projection
            .algebra_map
            .iter()
            .map(|&q| self.quotient.action[q].clone())
            .collect()
    }
}

pub fn decompose_morphism(
    m: &RepMorphism,
    f: &FiniteRepresentation,
    g: &FiniteRepresentation,
) -> Result<Decomposition> {
    if !check_morphism(m, f, g) {
        return Err(Error::InvalidMorphism("not a morphism of representations".into()));
    }
    let (algebra_classes, j) = kernel_classes(&m.algebra_map);
    let (carrier_classes, big_j) = kernel_classes(&m.carrier_map);

    // S must be compatible with every transformation, and s-equivalent
    // elements must act alike on M/S.
    for a in 0..f.algebra.size() {
        for class in &carrier_classes {
            let target = big_j[f.act(a, class[0])];
            if class.iter().any(|&x| big_j[f.act(a, x)] != target) {
                return Err(Error::IllDefinedQuotient);
            }
        }
    }
    for class in &algebra_classes {
        for x in 0..f.carrier {
            let target = big_j[f.act(class[0], x)];
            if class.iter().any(|&a| big_j[f.act(a, x)] != target) {
                return Err(Error::IllDefinedQuotient);
            }
        }
    }

    let quotient_table: Vec<Vec<usize>> = algebra_classes
        .iter()
        .map(|p| algebra_classes.iter().map(|q| j[f.algebra.mul(p[0], q[0])]).collect())
        .collect();
    for (pi, p) in algebra_classes.iter().enumerate() {
        for (qi, q) in algebra_classes.iter().enumerate() {
            let expected = quotient_table[pi][qi];
            if p.iter().any(|&a| q.iter().any(|&b| j[f.algebra.mul(a, b)] != expected)) {
                return Err(Error::IllDefinedQuotient);
            }
        }
    }
    let quotient_algebra = FiniteMonoid::new(quotient_table, j[f.algebra.unit()])?;
    let quotient_action = algebra_classes
        .iter()
        .map(|p| carrier_classes.iter().map(|c| big_j[f.act(p[0], c[0])]).collect())
        .collect();
    let quotient = FiniteRepresentation::new(quotient_algebra, carrier_classes.len(), quotient_action)?;

    let image_algebra: Vec<usize> = m.algebra_map.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let image_carrier: Vec<usize> = m.carrier_map.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let alg_pos = |b: usize| image_algebra.binary_search(&b).expect("in image");
    let car_pos = |n: usize| image_carrier.binary_search(&n).expect("in image");

    let image_table = image_algebra
        .iter()
        .map(|&x| image_algebra.iter().map(|&y| alg_pos(g.algebra.mul(x, y))).collect())
        .collect();
    let image_monoid = FiniteMonoid::new(image_table, alg_pos(g.algebra.unit()))?;
    let image_action = image_algebra
        .iter()
        .map(|&b| image_carrier.iter().map(|&n| car_pos(g.act(b, n))).collect())
        .collect();
    let image = FiniteRepresentation::new(image_monoid, image_carrier.len(), image_action)?;

    let projection = RepMorphism::new(j, big_j);
    let bijection = RepMorphism::new(
        algebra_classes.iter().map(|p| alg_pos(m.algebra_map[p[0]])).collect(),
        carrier_classes.iter().map(|c| car_pos(m.carrier_map[c[0]])).collect(),
    );
    let inclusion = RepMorphism::new(image_algebra.clone(), image_carrier.clone());

    Ok(Decomposition {
        algebra_classes,
        carrier_classes,
        projection,
        quotient,
        bijection,
        image,
        image_algebra,
        image_carrier,
        inclusion,
    })
}
