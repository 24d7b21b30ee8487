use anyhow::{bail, ensure, Context, Result};
use nalgebra::DMatrix;
use traced_core::bordism::{glue_trace, interval, FieldTheory, RBord1};
use traced_core::thickened::trace_pairing;
use traced_core::vect::{canonical_thickener, format_q, parse_q, scalar_of, FinVect, RatMatrix, Q};
use traced_core::{Error, MonoidalCategory};

/// Rows separated by newlines or `;`, entries by whitespace or commas; `#`
/// starts a comment.
pub fn parse_matrix(text: &str) -> Result<RatMatrix> {
    let rows: Vec<Vec<Q>> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(';'))
        .map(|l| {
            l.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(parse_q)
                .collect::<traced_core::Result<Vec<Q>>>()
        })
        .filter(|r| !matches!(r, Ok(v) if v.is_empty()))
        .collect::<traced_core::Result<_>>()?;
    ensure!(!rows.is_empty(), "matrix file is empty");
    Ok(RatMatrix::from_rows(&rows)?)
}

/// Splits a circle of length `n` into `Σ₁ = [0, k]` and `Σ₂ = [k, n]` for
/// every `k` and prints `E(Σ_gl)`, `tr(E(Σ₂), E(Σ₁))` and `tr(Aⁿ)`.
pub fn partition_exact(matrix: &str, length: &str) -> Result<bool> {
    let a = parse_matrix(matrix)?;
    let len = parse_q(length)?;
    if !len.is_integer() {
        return Err(Error::NonIntegerLength(format_q(&len)).into());
    }
    ensure!(len > Q::from_integer(0.into()), "length must be positive");
    let n: u32 = len.to_integer().try_into().context("length too large")?;
    let e = FieldTheory::new(a.clone())?;
    let fin = FinVect::new();
    let oracle = a.pow(n)?.trace()?;

    println!("A = {a}");
    println!("{:>4} {:>4}  {:>16} {:>16} {:>16}", "k", "n-k", "E(closed)", "tr(E2, E1)", "tr(A^n)");
    let mut all = true;
    for k in 0..=n {
        let s1 = interval("x", "y", Q::from_integer(k.into()))?;
        let s2 = interval("y", "x", Q::from_integer((n - k).into()))?;
        let closed = glue_trace(&RBord1.compose(&s2, &s1)?)?;
        let lhs = e.partition_function(&closed)?;
        let e2 = e.evaluate(&s2)?;
        let rhs = scalar_of(&trace_pairing(&fin, &canonical_thickener(&fin, &e2)?, &e.evaluate(&s1)?)?)?;
        let ok = lhs == rhs && rhs == oracle;
        all &= ok;
        println!(
            "{k:>4} {:>4}  {:>16} {:>16} {:>16}  {}",
            n - k,
            format_q(&lhs),
            format_q(&rhs),
            format_q(&oracle),
            if ok { "ok" } else { "MISMATCH" }
        );
    }
    println!("{}", if all { "all splits agree" } else { "splits disagree" });
    Ok(all)
}

const FLOAT_TOL: f64 = 1e-9;

/// Floating-point variant with `E(interval L) = exp(-L·H)`. Equality is
/// checked to a relative tolerance of 1e-9.
pub fn partition_float(matrix: &str, length: &str) -> Result<bool> {
    let h = parse_matrix(matrix)?;
    let len: f64 = length.parse().context("length must be a real number")?;
    ensure!(len.is_finite() && len > 0.0, "length must be positive");
    let n = h.rows();
    if !h.is_square() {
        bail!("generator must be square, got {}x{}", h.rows(), h.cols());
    }
    let hf = DMatrix::from_fn(n, n, |i, j| {
        let q = h.get(i, j);
        q.numer().to_string().parse::<f64>().unwrap_or(f64::NAN) / q.denom().to_string().parse::<f64>().unwrap_or(f64::NAN)
    });
    let heat = |t: f64| (&hf * -t).exp();
    let closed = heat(len).trace();

    println!("H = {h}");
    println!("{:>10} {:>10}  {:>20} {:>20}", "s", "L-s", "E(closed)", "tr(E2 E1)");
    let mut all = true;
    for k in 0..=4 {
        let s = len * k as f64 / 4.0;
        let pairing = (heat(len - s) * heat(s)).trace();
        let ok = (closed - pairing).abs() <= FLOAT_TOL * closed.abs().max(1.0);
        all &= ok;
        println!("{s:>10.4} {:>10.4}  {closed:>20.12e} {pairing:>20.12e}  {}", len - s, if ok { "ok" } else { "MISMATCH" });
    }
    println!("{}", if all { "all splits agree within 1e-9" } else { "splits disagree" });
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_file_formats() {
        let a = parse_matrix("# A\n2 0\n0, 3\n").unwrap();
        assert_eq!(a, RatMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(parse_matrix("1/2 1; 1 0").unwrap().get(0, 0), parse_q("1/2").unwrap());
        assert!(parse_matrix("1 2\n3").is_err());
        assert!(parse_matrix("").is_err());
    }

    #[test]
    fn worked_examples_agree() {
        assert!(partition_exact("2 0\n0 3", "2").unwrap());
        assert!(partition_exact("0 1\n1 0", "3").unwrap());
        assert!(partition_exact("1 0 0\n0 1 0\n0 0 1", "4").unwrap());
        assert!(partition_exact("1 0\n0 1", "3/2").is_err());
        assert!(partition_float("1 2\n0 3", "0.7").unwrap());
    }
}
