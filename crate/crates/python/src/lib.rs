//! Python bindings. Partitions may be passed as `Partition` objects, lists of
//! integers or strings such as `"4,4,3,2"`; big integers map to Python `int`.

use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use rimhook as rh;

fn to_py(e: rh::Error) -> PyErr {
    match e {
        rh::Error::CrossCheck(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

trait OrRaise<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrRaise<T> for rh::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(to_py)
    }
}

fn partition(obj: &Bound<'_, PyAny>) -> PyResult<rh::Partition> {
    if let Ok(p) = obj.extract::<PyRef<'_, Partition>>() {
        return Ok(p.inner.clone());
    }
    if let Ok(s) = obj.extract::<String>() {
        return s.parse().py();
    }
    let parts: Vec<u32> = obj.extract()?;
    rh::Partition::new(parts).py()
}

fn big(v: BigUint) -> BigInt {
    BigInt::from(v)
}

#[pyclass(
    name = "Partition",
    module = "pyrimhook",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Partition {
    inner: rh::Partition,
}

#[pymethods]
impl Partition {
    #[new]
    fn new(parts: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Partition {
            inner: partition(parts)?,
        })
    }

    #[getter]
    fn parts(&self) -> Vec<u32> {
        self.inner.parts().to_vec()
    }

    fn size(&self) -> u64 {
        self.inner.size()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn conjugate(&self) -> Partition {
        Partition {
            inner: self.inner.conjugate(),
        }
    }

    /// `(alphas, betas)` with 0-based arms and legs.
    fn frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let f = self.inner.frobenius();
        (f.alphas, f.betas)
    }

    fn encode(&self) -> BorderSequence {
        BorderSequence {
            inner: self.inner.encode(),
        }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.inner.parts())
    }
}

#[pyclass(
    name = "BorderSequence",
    module = "pyrimhook",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq)]
struct BorderSequence {
    inner: rh::BorderSequence,
}

#[pymethods]
impl BorderSequence {
    /// Parses `…bits|bits…`; the ellipses are optional.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(BorderSequence {
            inner: text.parse().py()?,
        })
    }

    fn decode(&self) -> Partition {
        Partition {
            inner: self.inner.decode(),
        }
    }

    fn inversions(&self) -> u64 {
        self.inner.inversions()
    }

    fn conjugate(&self) -> BorderSequence {
        BorderSequence {
            inner: self.inner.conjugate(),
        }
    }

    fn render(&self) -> String {
        self.inner.render()
    }

    fn __str__(&self) -> String {
        self.inner.render()
    }

    fn __repr__(&self) -> String {
        format!("BorderSequence({:?})", self.inner.render())
    }
}

#[pyclass(name = "RimHookTableau", module = "pyrimhook", frozen)]
struct RimHookTableau {
    inner: rh::RimHookTableau,
}

#[pymethods]
impl RimHookTableau {
    /// Builds a tableau from rows of entries.
    #[staticmethod]
    fn from_filling(rows: Vec<Vec<u32>>) -> PyResult<Self> {
        Ok(RimHookTableau {
            inner: rh::RimHookTableau::from_filling(&rows).py()?,
        })
    }

    #[getter]
    fn shape(&self) -> Partition {
        Partition {
            inner: self.inner.shape().clone(),
        }
    }

    #[getter]
    fn kind(&self) -> Vec<u32> {
        self.inner.kind().to_vec()
    }

    fn filling(&self) -> Vec<Vec<u32>> {
        self.inner.filling()
    }

    fn height(&self) -> u32 {
        self.inner.height()
    }

    fn zero_permutation(&self) -> Vec<usize> {
        self.inner.zero_permutation().word().to_vec()
    }

    fn sign(&self) -> i32 {
        self.inner.zero_permutation().sign()
    }

    fn __repr__(&self) -> String {
        format!("RimHookTableau({:?})", self.inner.filling())
    }
}

#[pyfunction]
fn k_core(p: &Bound<'_, PyAny>, k: usize) -> PyResult<Partition> {
    Ok(Partition {
        inner: rh::k_core(&partition(p)?, k).py()?,
    })
}

#[pyfunction]
fn k_quotient(p: &Bound<'_, PyAny>, k: usize) -> PyResult<Vec<Partition>> {
    Ok(rh::k_quotient(&partition(p)?, k)
        .py()?
        .into_iter()
        .map(|inner| Partition { inner })
        .collect())
}

#[pyfunction]
fn has_empty_core(p: &Bound<'_, PyAny>, k: usize) -> PyResult<bool> {
    rh::has_empty_core(&partition(p)?, k).py()
}

#[pyfunction]
fn reconstruct(
    core: &Bound<'_, PyAny>,
    components: Vec<Bound<'_, PyAny>>,
    k: usize,
) -> PyResult<Partition> {
    let comps = components
        .iter()
        .map(partition)
        .collect::<PyResult<Vec<_>>>()?;
    Ok(Partition {
        inner: rh::reconstruct(&partition(core)?, &comps, k).py()?,
    })
}

#[pyfunction]
fn enumerate_rht(shape: &Bound<'_, PyAny>, kind: Vec<u32>) -> PyResult<Vec<RimHookTableau>> {
    Ok(rh::enumerate_rht(&partition(shape)?, &kind)
        .py()?
        .into_iter()
        .map(|inner| RimHookTableau { inner })
        .collect())
}

#[pyfunction]
fn lambda_sign(p: &Bound<'_, PyAny>, k: usize) -> PyResult<i32> {
    rh::lambda_sign(&partition(p)?, k).py()
}

#[pyfunction]
fn mn_character(lam: &Bound<'_, PyAny>, mu: &Bound<'_, PyAny>) -> PyResult<BigInt> {
    rh::mn_character(&partition(lam)?, &partition(mu)?).py()
}

/// `χ^λ_{kμ}` through the k-quotient.
#[pyfunction]
fn littlewood_reduce(lam: &Bound<'_, PyAny>, k: usize, mu: &Bound<'_, PyAny>) -> PyResult<BigInt> {
    rh::littlewood_reduce(&partition(lam)?, k, &partition(mu)?).py()
}

#[pyfunction]
fn char_rectangular(lam: &Bound<'_, PyAny>, k: usize) -> PyResult<BigInt> {
    rh::char_rectangular(&partition(lam)?, k).py()
}

fn weight(k: usize, coords: Vec<u32>) -> PyResult<rh::DominantWeight> {
    rh::DominantWeight::new(k, coords).py()
}

#[pyfunction]
fn epsilon_closed(k: usize, coords: Vec<u32>) -> PyResult<i32> {
    Ok(rh::epsilon_closed(&weight(k, coords)?))
}

#[pyfunction]
fn epsilon_theorem(lam: &Bound<'_, PyAny>, k: usize) -> PyResult<i32> {
    rh::epsilon_theorem(&partition(lam)?, k).py()
}

#[pyfunction]
fn epsilon_bruteforce(lam: &Bound<'_, PyAny>, k: usize) -> PyResult<BigInt> {
    rh::epsilon_bruteforce(&partition(lam)?, k).py()
}

#[pyfunction]
fn weyl_dim(k: usize, coords: Vec<u32>) -> PyResult<BigInt> {
    Ok(big(rh::weyl_dim(&weight(k, coords)?)))
}

/// `c(Λ̄)` as `(numerator, denominator)` in lowest terms.
#[pyfunction]
fn c_exponent(k: usize, coords: Vec<u32>) -> PyResult<(i64, i64)> {
    let c = rh::c_exponent(&weight(k, coords)?);
    Ok((*c.numer(), *c.denom()))
}

/// Coefficients `c_0 … c_N` of the weight sum for `SU(k)`.
#[pyfunction]
fn kostant_series(k: usize, order: usize) -> PyResult<Vec<BigInt>> {
    Ok(rh::kostant_series(k, order).py()?.coeffs().to_vec())
}

/// Coefficients `c_0 … c_N` of `φ(x)^d`.
#[pyfunction]
fn phi_power(order: usize, d: u32) -> PyResult<Vec<BigInt>> {
    Ok(rh::phi(order).power(d).py()?.coeffs().to_vec())
}

/// `(weight, epsilon, dim, exponent)`.
type TermRow = (Vec<u32>, i32, BigInt, u64);

/// Nonzero terms of the weight sum.
#[pyfunction]
fn term_table(k: usize, order: usize) -> PyResult<Vec<TermRow>> {
    Ok(rh::term_table(k, order)
        .py()?
        .into_iter()
        .map(|t| {
            (
                t.weight.coords().to_vec(),
                t.epsilon,
                big(t.dim),
                t.exponent,
            )
        })
        .collect())
}

#[pymodule]
fn pyrimhook(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Partition>()?;
    m.add_class::<BorderSequence>()?;
    m.add_class::<RimHookTableau>()?;
    m.add_function(wrap_pyfunction!(k_core, m)?)?;
    m.add_function(wrap_pyfunction!(k_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(has_empty_core, m)?)?;
    m.add_function(wrap_pyfunction!(reconstruct, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_rht, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_sign, m)?)?;
    m.add_function(wrap_pyfunction!(mn_character, m)?)?;
    m.add_function(wrap_pyfunction!(littlewood_reduce, m)?)?;
    m.add_function(wrap_pyfunction!(char_rectangular, m)?)?;
    m.add_function(wrap_pyfunction!(epsilon_closed, m)?)?;
    m.add_function(wrap_pyfunction!(epsilon_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(epsilon_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_dim, m)?)?;
    m.add_function(wrap_pyfunction!(c_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(kostant_series, m)?)?;
    m.add_function(wrap_pyfunction!(phi_power, m)?)?;
    m.add_function(wrap_pyfunction!(term_table, m)?)?;
    Ok(())
}
