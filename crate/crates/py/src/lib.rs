//! Python bindings: `Grid`, `Braid` and the equivalence and verification
//! entry points.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use gridbraid::braid::{self, conjugacy_oracle, markov_oracle, OracleBudget};
use gridbraid::convert;
use gridbraid::equivalence::{self, MoveClass, SearchBudget};
use gridbraid::verify::{self, Suite};
use gridbraid::{BraidWord, GridDiagram, Move, MoveScript, Symmetry, Verdict};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Grid", module = "pygridbraid", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyGrid {
    inner: GridDiagram,
}

#[pymethods]
impl PyGrid {
    /// `x[c]` and `o[c]` are the rows (counted from the bottom) of the
    /// markers in column `c`.
    #[new]
    fn new(x: Vec<usize>, o: Vec<usize>) -> PyResult<Self> {
        let inner = GridDiagram::new(x.len(), x, o).map_err(value_error)?;
        Ok(PyGrid { inner })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = GridDiagram::parse(text).map_err(value_error)?;
        Ok(PyGrid { inner })
    }

    #[staticmethod]
    fn unknot() -> Self {
        PyGrid {
            inner: GridDiagram::unknot(),
        }
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn x(&self) -> Vec<usize> {
        self.inner.x().to_vec()
    }

    #[getter]
    fn o(&self) -> Vec<usize> {
        self.inner.o().to_vec()
    }

    fn components(&self) -> usize {
        self.inner.components()
    }

    fn writhe(&self) -> i32 {
        self.inner.census().writhe()
    }

    fn serialize(&self) -> String {
        self.inner.serialize()
    }

    fn render(&self) -> String {
        self.inner.render_ascii()
    }

    /// One move in script syntax, e.g. `"SX NE 0"` or `"CR 2"`.
    fn apply(&self, mv: &str) -> PyResult<Self> {
        let m: Move = mv.parse().map_err(value_error)?;
        let inner = gridbraid::apply(&self.inner, &m).map_err(value_error)?;
        Ok(PyGrid { inner })
    }

    fn apply_script(&self, script: &str) -> PyResult<Self> {
        let script = MoveScript::parse(script).map_err(value_error)?;
        let inner = script.replay(&self.inner).map_err(value_error)?;
        Ok(PyGrid { inner })
    }

    /// `op` is one of `"s1"` .. `"s4"`.
    fn symmetry(&self, op: &str) -> PyResult<Self> {
        let s: Symmetry = op.parse().map_err(value_error)?;
        Ok(PyGrid {
            inner: gridbraid::symmetry(&self.inner, s),
        })
    }

    /// `(tb, r, sl)`.
    fn invariants(&self) -> (i64, i64, i64) {
        let i = convert::classical_invariants(&self.inner);
        (i.tb, i.r, i.sl)
    }

    fn to_braid(&self) -> PyBraid {
        PyBraid {
            inner: convert::grid_to_braid(&self.inner),
        }
    }

    fn __repr__(&self) -> String {
        format!("Grid(x={:?}, o={:?})", self.inner.x(), self.inner.o())
    }
}

#[pyclass(name = "Braid", module = "pygridbraid", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyBraid {
    inner: BraidWord,
}

#[pymethods]
impl PyBraid {
    #[new]
    fn new(strands: usize, letters: Vec<i32>) -> PyResult<Self> {
        let inner = BraidWord::new(strands, letters).map_err(value_error)?;
        Ok(PyBraid { inner })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = BraidWord::parse(text).map_err(value_error)?;
        Ok(PyBraid { inner })
    }

    #[getter]
    fn strands(&self) -> usize {
        self.inner.strands()
    }

    #[getter]
    fn letters(&self) -> Vec<i32> {
        self.inner.letters().to_vec()
    }

    fn exponent_sum(&self) -> i64 {
        self.inner.exponent_sum()
    }

    fn self_linking(&self) -> i64 {
        self.inner.self_linking()
    }

    /// Equality in the braid group.
    fn equals(&self, other: &PyBraid) -> PyResult<bool> {
        self.inner.equals(&other.inner).map_err(value_error)
    }

    fn conjugate(&self, by: &PyBraid) -> PyResult<Self> {
        let inner = self.inner.conjugate(&by.inner).map_err(value_error)?;
        Ok(PyBraid { inner })
    }

    fn free_reduce(&self) -> Self {
        PyBraid {
            inner: self.inner.free_reduce(),
        }
    }

    fn pos_stab(&self) -> Self {
        PyBraid {
            inner: self.inner.pos_stab(),
        }
    }

    fn neg_stab(&self) -> Self {
        PyBraid {
            inner: self.inner.neg_stab(),
        }
    }

    fn destab(&self) -> PyResult<Self> {
        let inner = self.inner.destab().map_err(value_error)?;
        Ok(PyBraid { inner })
    }

    fn exchange(&self) -> PyResult<Self> {
        let inner = braid::exchange(&self.inner).map_err(value_error)?;
        Ok(PyBraid { inner })
    }

    fn to_grid(&self) -> PyGrid {
        PyGrid {
            inner: convert::braid_to_grid(&self.inner),
        }
    }

    fn serialize(&self) -> String {
        self.inner.serialize()
    }

    fn __repr__(&self) -> String {
        format!("Braid({}, {:?})", self.inner.strands(), self.inner.letters())
    }
}

/// `("YES", script)`, `("NO", reason)` or `("UNKNOWN", None)`.
fn verdict_tuple<T>(v: Verdict<T>, show: impl FnOnce(T) -> String) -> (String, Option<String>) {
    match v {
        Verdict::Yes(w) => ("YES".to_string(), Some(show(w))),
        Verdict::No(reason) => ("NO".to_string(), Some(reason)),
        Verdict::Unknown => ("UNKNOWN".to_string(), None),
    }
}

/// Searches for moves of class `K`, `L`, `T`, `B` or `TC` relating two
/// grids; a YES answer carries the move script text.
#[pyfunction]
#[pyo3(signature = (a, b, cls, max_states=None, max_seconds=None, max_grid=None))]
fn equivalent(
    a: &PyGrid,
    b: &PyGrid,
    cls: &str,
    max_states: Option<usize>,
    max_seconds: Option<f64>,
    max_grid: Option<usize>,
) -> PyResult<(String, Option<String>)> {
    let class: MoveClass = cls.parse().map_err(value_error)?;
    let mut budget = SearchBudget::for_inputs(&a.inner, &b.inner);
    if let Some(m) = max_states {
        budget.max_states = m;
    }
    if let Some(s) = max_seconds {
        budget.max_seconds = s;
    }
    if let Some(n) = max_grid {
        budget.max_grid_number = n;
    }
    let verdict = equivalence::equivalent(&a.inner, &b.inner, class, &budget);
    Ok(verdict_tuple(verdict, |s| s.serialize()))
}

#[pyfunction]
fn tc_orbit_equal(a: &PyGrid, b: &PyGrid) -> bool {
    equivalence::tc_orbit_equal(&a.inner, &b.inner)
}

/// A YES answer carries the conjugator.
#[pyfunction]
#[pyo3(signature = (a, b, max_depth=6, max_states=20000))]
fn conjugate_search(
    a: &PyBraid,
    b: &PyBraid,
    max_depth: usize,
    max_states: usize,
) -> PyResult<(String, Option<String>)> {
    let budget = OracleBudget {
        max_depth,
        max_states,
        ..OracleBudget::default()
    };
    let verdict = conjugacy_oracle(&a.inner, &b.inner, &budget).map_err(value_error)?;
    Ok(verdict_tuple(verdict, |u| u.to_string()))
}

/// A YES answer carries the moves, one per line.
#[pyfunction]
#[pyo3(signature = (a, b, max_depth=6, max_states=20000))]
fn markov_search(a: &PyBraid, b: &PyBraid, max_depth: usize, max_states: usize) -> (String, Option<String>) {
    let budget = OracleBudget {
        max_depth,
        max_states,
        ..OracleBudget::default()
    };
    verdict_tuple(markov_oracle(&a.inner, &b.inner, &budget), |steps| {
        steps.iter().map(|s| format!("{s}\n")).collect()
    })
}

/// Runs a verification suite; returns `(all_passed, report)`.
#[pyfunction]
#[pyo3(signature = (suite, trials=100, seed=0))]
fn run_suite(suite: &str, trials: usize, seed: u64) -> PyResult<(bool, String)> {
    let suite: Suite = suite.parse().map_err(value_error)?;
    let report = verify::run(suite, trials, seed);
    Ok((report.ok(), report.to_string()))
}

#[pymodule]
pub fn pygridbraid(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGrid>()?;
    m.add_class::<PyBraid>()?;
    m.add_function(wrap_pyfunction!(equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(tc_orbit_equal, m)?)?;
    m.add_function(wrap_pyfunction!(conjugate_search, m)?)?;
    m.add_function(wrap_pyfunction!(markov_search, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
