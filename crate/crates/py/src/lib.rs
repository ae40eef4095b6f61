//! Python bindings. Exact values cross the boundary as `"p/q"` strings;
//! coefficients may be given as `int`, `str` or `fractions.Fraction`.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use ellone::complex::OrientedComplex as CoreComplex;
use ellone::covering::{integrate_degree1, LineBruhat, LineCover};
use ellone::groupcoh::{group_cohomology, Caps, FiniteGroup};
use ellone::homology;
use ellone::io;
use ellone::rational::{format_rational, parse_rational, Rational};
use ellone::seminorm::{self, DualityStatus};
use ellone::simplicial::subdivision::{iterated_counts, DEFAULT_ROUND_CAP};
use ellone::{Chain as CoreChain, Cochain as CoreCochain, Error};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Parse(_) | Error::InvalidComplex(_) | Error::InvalidGroup(_) => PyValueError::new_err(e.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(i) = obj.extract::<i64>() {
        return Ok(Rational::from_integer(i.into()));
    }
    // str and fractions.Fraction both print as "p/q"
    parse_rational(&obj.str()?.to_cow()?).map_err(to_py)
}

fn coefficients(coeffs: &Bound<'_, PyDict>) -> PyResult<Vec<(usize, Rational)>> {
    coeffs.iter().map(|(k, v)| Ok((k.extract::<usize>()?, rational(&v)?))).collect()
}

fn value_to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    Ok(match v {
        Value::Null => py.None(),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any().unbind(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any().unbind(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any().unbind(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any().unbind(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(value_to_py(py, item)?)?;
            }
            list.into_any().unbind()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, x) in map {
                dict.set_item(k, value_to_py(py, x)?)?;
            }
            dict.into_any().unbind()
        }
    })
}

fn exact(v: &Rational) -> String {
    format_rational(v)
}

/// A finite ordered simplicial complex.
#[pyclass(name = "Complex", module = "ellone_py", frozen)]
pub struct Complex {
    inner: CoreComplex,
}

#[pymethods]
impl Complex {
    #[new]
    fn new(vertices: usize, simplices: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(Self { inner: CoreComplex::from_simplices(vertices, &simplices).map_err(to_py)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self { inner: io::parse_complex(text).map_err(to_py)? })
    }

    /// A named complex from the built-in corpus, e.g. `"torus7"`.
    #[staticmethod]
    fn corpus(name: &str) -> PyResult<Self> {
        ellone::corpus::standard()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, inner)| Self { inner })
            .ok_or_else(|| PyValueError::new_err(format!("no corpus complex named {name:?}")))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn count(&self, degree: usize) -> usize {
        if degree <= self.inner.dim() {
            self.inner.count(degree)
        } else {
            0
        }
    }

    fn simplices(&self, degree: usize) -> Vec<Vec<usize>> {
        if degree <= self.inner.dim() {
            self.inner.simplices(degree).to_vec()
        } else {
            Vec::new()
        }
    }

    fn betti(&self) -> Vec<usize> {
        homology::betti_numbers(&self.inner)
    }

    fn cohomology_rank(&self, degree: usize) -> usize {
        if degree <= self.inner.dim() {
            homology::cohomology_rank(&self.inner, degree)
        } else {
            0
        }
    }

    fn euler_characteristic(&self) -> i64 {
        self.inner.euler_characteristic()
    }

    fn boundary(&self, chain: &Chain) -> PyResult<Chain> {
        Ok(Chain { inner: self.inner.boundary(&chain.inner).map_err(to_py)? })
    }

    fn coboundary(&self, cochain: &Cochain) -> PyResult<Cochain> {
        Ok(Cochain { inner: self.inner.coboundary(&cochain.inner).map_err(to_py)? })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&io::ComplexFile::from_complex(&self.inner)).expect("serializes")
    }

    fn __repr__(&self) -> String {
        let counts: Vec<usize> = (0..=self.inner.dim()).map(|d| self.inner.count(d)).collect();
        format!("Complex(counts={counts:?})")
    }
}

macro_rules! sparse_class {
    ($name:ident, $core:ident, $label:literal, $json:path) => {
        #[pyclass(name = $label, module = "ellone_py", frozen)]
        pub struct $name {
            inner: $core,
        }

        #[pymethods]
        impl $name {
            #[new]
            fn new(degree: usize, coeffs: &Bound<'_, PyDict>) -> PyResult<Self> {
                Ok(Self { inner: $core::from_pairs(degree, coefficients(coeffs)?) })
            }

            #[getter]
            fn degree(&self) -> usize {
                self.inner.degree()
            }

            /// Nonzero coefficients as `{index: "p/q"}`.
            fn coeffs(&self) -> BTreeMap<usize, String> {
                self.inner.iter().map(|(i, a)| (i, exact(a))).collect()
            }

            fn to_json(&self) -> String {
                $json(&self.inner).to_string()
            }

            fn __eq__(&self, other: &Self) -> bool {
                self.inner == other.inner
            }

            fn __repr__(&self) -> String {
                format!("{}(degree={}, coeffs={:?})", $label, self.inner.degree(), self.coeffs())
            }
        }
    };
}

sparse_class!(Chain, CoreChain, "Chain", io::chain_json);
sparse_class!(Cochain, CoreCochain, "Cochain", io::cochain_json);

/// `<f, c>` as a `"p/q"` string.
#[pyfunction]
fn kronecker(cochain: &Cochain, chain: &Chain) -> PyResult<String> {
    Ok(exact(&ellone::kronecker(&cochain.inner, &chain.inner).map_err(to_py)?))
}

#[pyfunction]
fn fundamental_class(complex: &Complex) -> PyResult<Chain> {
    Ok(Chain { inner: seminorm::fundamental_class(&complex.inner).map_err(to_py)?.chain })
}

/// l1 seminorm of the class of a cycle: value, optimal representative and
/// the LP certificate.
#[pyfunction]
fn l1_seminorm(py: Python<'_>, complex: &Complex, cycle: &Chain) -> PyResult<Py<PyAny>> {
    let s = seminorm::l1_seminorm(&complex.inner, &cycle.inner).map_err(to_py)?;
    let v = serde_json::json!({
        "value": exact(&s.value),
        "representative": io::chain_json(&s.representative),
        "certificate": s.certificate.to_json(),
    });
    value_to_py(py, &v)
}

#[pyfunction]
fn linf_seminorm(py: Python<'_>, complex: &Complex, cocycle: &Cochain) -> PyResult<Py<PyAny>> {
    let s = seminorm::linf_seminorm(&complex.inner, &cocycle.inner).map_err(to_py)?;
    let v = serde_json::json!({
        "value": exact(&s.value),
        "representative": io::cochain_json(&s.representative),
        "certificate": s.certificate.to_json(),
    });
    value_to_py(py, &v)
}

#[pyfunction]
fn duality_check(py: Python<'_>, complex: &Complex, cycle: &Chain) -> PyResult<Py<PyAny>> {
    let r = seminorm::duality_check(&complex.inner, &cycle.inner).map_err(to_py)?;
    let v = serde_json::json!({
        "status": r.status,
        "degenerate": r.status == DualityStatus::Degenerate,
        "l1": exact(&r.l1.value),
        "linf_dual": r.linf.as_ref().map(exact),
        "cocycle": r.cocycle.as_ref().map(io::cochain_json),
    });
    value_to_py(py, &v)
}

/// Real cohomology of a finite group given by a multiplication table or by
/// permutation generators (`degree` points).
#[pyfunction]
#[pyo3(signature = (n, table=None, generators=None, points=None))]
fn group_cohomology_rank(
    py: Python<'_>,
    n: usize,
    table: Option<Vec<Vec<usize>>>,
    generators: Option<Vec<Vec<usize>>>,
    points: Option<usize>,
) -> PyResult<Py<PyAny>> {
    let caps = Caps::default();
    let group = match (table, generators) {
        (Some(t), None) => FiniteGroup::from_table(t),
        (None, Some(g)) => {
            let degree = points.or_else(|| g.first().map(Vec::len)).unwrap_or(0);
            FiniteGroup::from_permutations(degree, &g, caps.order)
        }
        _ => return Err(PyValueError::new_err("give exactly one of table and generators")),
    }
    .map_err(to_py)?;
    let h = group_cohomology(&group, n, caps).map_err(to_py)?;
    let mut v = serde_json::to_value(&h).expect("serializes");
    v["pipelines_agree"] = Value::Bool(h.pipelines_agree());
    value_to_py(py, &v)
}

/// Simplex counts per dimension after each subdivision round.
#[pyfunction]
#[pyo3(signature = (complex, rounds, cap=DEFAULT_ROUND_CAP))]
fn subdivision_counts(complex: &Complex, rounds: usize, cap: usize) -> PyResult<Vec<Vec<usize>>> {
    iterated_counts(&complex.inner, rounds, cap).map_err(to_py)
}

/// `theta^n(f)` for the integers acting on the line over the `k`-edge circle.
#[pyfunction]
#[pyo3(signature = (edges, cochain, bruhat="hat"))]
fn theta_circle(edges: usize, cochain: &Cochain, bruhat: &str) -> PyResult<Cochain> {
    let choice = match bruhat {
        "hat" => LineBruhat::Hat,
        "indicator" => LineBruhat::Indicator,
        other => return Err(PyValueError::new_err(format!("unknown Bruhat function {other:?}"))),
    };
    let line = LineCover::new(edges, choice);
    Ok(Cochain { inner: line.theta(&cochain.inner).map_err(to_py)? })
}

#[pyfunction]
fn integrate1(complex: &Complex, cochain: &Cochain) -> PyResult<Cochain> {
    Ok(Cochain { inner: integrate_degree1(&complex.inner, &cochain.inner).map_err(to_py)?.primitive })
}

#[pymodule]
fn ellone_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Complex>()?;
    m.add_class::<Chain>()?;
    m.add_class::<Cochain>()?;
    m.add_function(wrap_pyfunction!(kronecker, m)?)?;
    m.add_function(wrap_pyfunction!(fundamental_class, m)?)?;
    m.add_function(wrap_pyfunction!(l1_seminorm, m)?)?;
    m.add_function(wrap_pyfunction!(linf_seminorm, m)?)?;
    m.add_function(wrap_pyfunction!(duality_check, m)?)?;
    m.add_function(wrap_pyfunction!(group_cohomology_rank, m)?)?;
    m.add_function(wrap_pyfunction!(subdivision_counts, m)?)?;
    m.add_function(wrap_pyfunction!(theta_circle, m)?)?;
    m.add_function(wrap_pyfunction!(integrate1, m)?)?;
    Ok(())
}
