//! Python bindings. Everything goes through the runtime-selected
//! [`Instance`], so one set of classes covers every category. Rationals cross
//! the boundary as `fractions.Fraction`; anything whose `str()` parses as a
//! rational (ints, `"3/4"`, fractions) is accepted as input.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use traced_core::bordism;
use traced_core::dynamic::{describe, AnyMorphism, AnyObject, AnyTriple, Instance as Inst};
use traced_core::vect::{format_q, parse_q, RatMatrix, Q};

fn err(e: traced_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(x: &Bound<'_, PyAny>) -> PyResult<Q> {
    parse_q(&x.str()?.to_cow()?).map_err(err)
}

fn fraction<'py>(py: Python<'py>, q: &Q) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((format_q(q),))
}

/// A category chosen by name: `finvect`, `supervect`, `graded(q=2)` or `rbord1`.
#[pyclass(frozen, module = "traced")]
struct Instance {
    inner: Inst,
}

#[pyclass(frozen, module = "traced")]
struct Object {
    inst: Inst,
    inner: AnyObject,
}

#[pyclass(frozen, module = "traced")]
struct Morphism {
    inst: Inst,
    inner: AnyMorphism,
}

/// A representative `(Z, t, b)` of a thickened morphism.
#[pyclass(frozen, module = "traced")]
struct Triple {
    inst: Inst,
    inner: AnyTriple,
}

impl Instance {
    fn obj(&self, inner: AnyObject) -> Object {
        Object { inst: self.inner.clone(), inner }
    }

    fn mor(&self, r: traced_core::Result<AnyMorphism>) -> PyResult<Morphism> {
        Ok(Morphism { inst: self.inner.clone(), inner: r.map_err(err)? })
    }

    fn tri(&self, r: traced_core::Result<AnyTriple>) -> PyResult<Triple> {
        Ok(Triple { inst: self.inner.clone(), inner: r.map_err(err)? })
    }

    fn check(&self, other: &Inst) -> PyResult<()> {
        if *other == self.inner {
            Ok(())
        } else {
            Err(PyTypeError::new_err(format!("value belongs to {}, not {}", other.id(), self.inner.id())))
        }
    }

    fn o(&self, x: &Object) -> PyResult<AnyObject> {
        self.check(&x.inst)?;
        Ok(x.inner.clone())
    }

    fn m(&self, f: &Morphism) -> PyResult<AnyMorphism> {
        self.check(&f.inst)?;
        Ok(f.inner.clone())
    }

    fn t(&self, t: &Triple) -> PyResult<AnyTriple> {
        self.check(&t.inst)?;
        Ok(t.inner.clone())
    }

    fn bord(&self, r: traced_core::Result<bordism::RBordMorphism>) -> PyResult<Morphism> {
        let b = r.map_err(err)?;
        self.mor(self.inner.bordism(b))
    }
}

#[pymethods]
impl Instance {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        Ok(Instance { inner: Inst::parse(spec).map_err(err)? })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.id()
    }

    fn unit(&self) -> Object {
        self.obj(self.inner.unit())
    }

    /// `Q^dim` in finvect; in the graded instances, `dim` copies of degree 0.
    fn space(&self, dim: usize) -> PyResult<Object> {
        Ok(self.obj(self.inner.plain_object(dim).map_err(err)?))
    }

    fn super_space(&self, even: usize, odd: usize) -> PyResult<Object> {
        Ok(self.obj(self.inner.super_object(even, odd).map_err(err)?))
    }

    /// A graded space from `{degree: dimension}`.
    fn graded_space(&self, dims: BTreeMap<i64, usize>) -> PyResult<Object> {
        Ok(self.obj(self.inner.graded_object(&dims).map_err(err)?))
    }

    fn points(&self, labels: Vec<String>) -> PyResult<Object> {
        Ok(self.obj(self.inner.points(&labels).map_err(err)?))
    }

    fn tensor_obj(&self, x: &Object, y: &Object) -> PyResult<Object> {
        Ok(self.obj(self.inner.tensor_obj(&self.o(x)?, &self.o(y)?).map_err(err)?))
    }

    fn dual(&self, x: &Object) -> PyResult<Object> {
        Ok(self.obj(self.inner.dual(&self.o(x)?).map_err(err)?))
    }

    /// A matrix `source -> target` given as rows of rationals.
    fn matrix(&self, source: &Object, target: &Object, rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Morphism> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(rational).collect::<PyResult<Vec<Q>>>())
            .collect::<PyResult<Vec<_>>>()?;
        let m = RatMatrix::from_rows(&rows).map_err(err)?;
        self.mor(self.inner.matrix_morphism(&self.o(source)?, &self.o(target)?, m))
    }

    fn scalar(&self, value: &Bound<'_, PyAny>) -> PyResult<Morphism> {
        self.mor(self.inner.matrix_literal(RatMatrix::scalar(rational(value)?)))
    }

    fn interval(&self, source: &str, target: &str, length: &Bound<'_, PyAny>) -> PyResult<Morphism> {
        self.bord(bordism::interval(source, target, rational(length)?))
    }

    /// The arc `{} -> {a, b}`.
    fn cap(&self, a: &str, b: &str, length: &Bound<'_, PyAny>) -> PyResult<Morphism> {
        self.bord(bordism::cap(a, b, rational(length)?))
    }

    /// The arc `{a, b} -> {}`.
    fn cup(&self, a: &str, b: &str, length: &Bound<'_, PyAny>) -> PyResult<Morphism> {
        self.bord(bordism::cup(a, b, rational(length)?))
    }

    fn circle(&self, length: &Bound<'_, PyAny>) -> PyResult<Morphism> {
        self.bord(bordism::circle(rational(length)?))
    }

    fn identity(&self, x: &Object) -> PyResult<Morphism> {
        self.mor(self.inner.identity(&self.o(x)?))
    }

    /// `g ∘ f`.
    fn compose(&self, g: &Morphism, f: &Morphism) -> PyResult<Morphism> {
        self.mor(self.inner.compose(&self.m(g)?, &self.m(f)?))
    }

    fn tensor(&self, f: &Morphism, g: &Morphism) -> PyResult<Morphism> {
        self.mor(self.inner.tensor(&self.m(f)?, &self.m(g)?))
    }

    fn add(&self, f: &Morphism, g: &Morphism) -> PyResult<Morphism> {
        self.mor(self.inner.add(&self.m(f)?, &self.m(g)?))
    }

    fn switching(&self, x: &Object, y: &Object) -> PyResult<Morphism> {
        self.mor(self.inner.switching(&self.o(x)?, &self.o(y)?))
    }

    fn braiding(&self, x: &Object, y: &Object) -> PyResult<Morphism> {
        self.mor(self.inner.braiding(&self.o(x)?, &self.o(y)?))
    }

    fn twist(&self, x: &Object) -> PyResult<Morphism> {
        self.mor(self.inner.twist(&self.o(x)?))
    }

    fn ev(&self, x: &Object) -> PyResult<Morphism> {
        self.mor(self.inner.ev(&self.o(x)?))
    }

    fn coev(&self, x: &Object) -> PyResult<Morphism> {
        self.mor(self.inner.coev(&self.o(x)?))
    }

    /// `tr̂` of the canonical thickener, or the closed-up bordism in `rbord1`.
    fn trace(&self, f: &Morphism) -> PyResult<Morphism> {
        self.mor(self.inner.trace(&self.m(f)?))
    }

    fn triple(&self, z: &Object, t: &Morphism, b: &Morphism) -> PyResult<Triple> {
        self.tri(self.inner.triple(&self.o(z)?, &self.m(t)?, &self.m(b)?))
    }

    fn canonical(&self, f: &Morphism) -> PyResult<Triple> {
        self.tri(self.inner.canonical(&self.m(f)?))
    }

    /// Thickener of a bordism obtained by cutting every interval at `fraction`.
    fn cut(&self, f: &Morphism, fraction: &Bound<'_, PyAny>) -> PyResult<Triple> {
        self.tri(self.inner.cut(&self.m(f)?, &rational(fraction)?))
    }

    fn psi(&self, t: &Triple) -> PyResult<Morphism> {
        self.mor(self.inner.psi(&self.t(t)?))
    }

    fn tr_hat(&self, t: &Triple) -> PyResult<Morphism> {
        self.mor(self.inner.tr_hat(&self.t(t)?))
    }

    /// `f̂ ∘ g` as a triple.
    fn pre_compose(&self, t: &Triple, g: &Morphism) -> PyResult<Triple> {
        self.tri(self.inner.pre_compose(&self.t(t)?, &self.m(g)?))
    }

    /// `f ∘ ĝ` as a triple.
    fn post_compose(&self, f: &Morphism, t: &Triple) -> PyResult<Triple> {
        self.tri(self.inner.post_compose(&self.m(f)?, &self.t(t)?))
    }

    fn trace_pairing(&self, f_hat: &Triple, g: &Morphism) -> PyResult<Morphism> {
        self.mor(self.inner.trace_pairing(&self.t(f_hat)?, &self.m(g)?))
    }

    fn tensor_triples(&self, a: &Triple, b: &Triple) -> PyResult<Triple> {
        self.tri(self.inner.tensor_triples(&self.t(a)?, &self.t(b)?))
    }

    fn __repr__(&self) -> String {
        format!("Instance('{}')", self.inner.id())
    }
}

#[pymethods]
impl Object {
    fn __repr__(&self) -> String {
        self.inner.to_string()
    }

    fn __eq__(&self, other: &Object) -> bool {
        self.inst == other.inst && self.inner == other.inner
    }
}

#[pymethods]
impl Morphism {
    #[getter]
    fn source(&self) -> Object {
        Object { inst: self.inst.clone(), inner: self.inst.source(&self.inner) }
    }

    #[getter]
    fn target(&self) -> Object {
        Object { inst: self.inst.clone(), inner: self.inst.target(&self.inner) }
    }

    /// The value of an `I -> I` morphism in a matrix instance, else `None`.
    fn scalar<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        self.inner.scalar().map(|q| fraction(py, &q)).transpose()
    }

    /// Matrix entries as rows of fractions, or `None` for bordisms.
    fn rows<'py>(&self, py: Python<'py>) -> PyResult<Option<Vec<Vec<Bound<'py, PyAny>>>>> {
        let Some(m) = self.inner.matrix() else { return Ok(None) };
        let rows = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| fraction(py, &m.get(i, j))).collect())
            .collect::<PyResult<_>>()?;
        Ok(Some(rows))
    }

    fn __eq__(&self, other: &Morphism) -> bool {
        self.inst == other.inst && self.inst.mor_equal(&self.inner, &other.inner)
    }

    fn __repr__(&self) -> String {
        describe(&self.inst, &self.inner)
    }
}

#[pymethods]
impl Triple {
    #[getter]
    fn z(&self) -> Object {
        Object { inst: self.inst.clone(), inner: self.inner.z() }
    }

    #[getter]
    fn t(&self) -> Morphism {
        Morphism { inst: self.inst.clone(), inner: self.inner.t() }
    }

    #[getter]
    fn b(&self) -> Morphism {
        Morphism { inst: self.inst.clone(), inner: self.inner.b() }
    }

    fn __repr__(&self) -> String {
        format!("triple {} -> {} through {}", self.inner.dom(), self.inner.cod(), self.inner.z())
    }
}

/// Run a diagram program. Returns `(transcript, all_passed)`; syntax, type and
/// evaluation errors raise `ValueError` with the `line:col` of the fault.
#[pyfunction]
fn run(source: &str) -> PyResult<(String, bool)> {
    let outcome = traced_core::dsl::run_source(source).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok((outcome.transcript(), outcome.all_passed()))
}

#[pymodule]
fn traced(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Instance>()?;
    m.add_class::<Object>()?;
    m.add_class::<Morphism>()?;
    m.add_class::<Triple>()?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}
