"""Smoke test for the `traced` extension module.

Build it first with `pip install -e crates/python --no-build-isolation`,
then run `python python/smoke_test.py` (or `pytest python/`).
"""

from fractions import Fraction

import traced


def test_identity_trace_is_dimension():
    fin = traced.Instance("finvect")
    x = fin.space(3)
    loop = fin.compose(fin.ev(x), fin.compose(fin.switching(x, fin.dual(x)), fin.coev(x)))
    assert loop.scalar() == 3
    assert fin.trace(fin.identity(x)).scalar() == 3


def test_canonical_trace_is_diagonal_sum():
    fin = traced.Instance("finvect")
    x = fin.space(2)
    f = fin.matrix(x, x, [[1, "1/2"], [7, Fraction(-3, 4)]])
    assert fin.tr_hat(fin.canonical(f)).scalar() == Fraction(1, 4)
    assert fin.psi(fin.canonical(f)) == f


def test_trace_symmetry_and_pairing():
    fin = traced.Instance("finvect")
    x, y = fin.space(2), fin.space(3)
    f = fin.matrix(y, x, [[1, 2, 0], [0, -1, 5]])
    g = fin.matrix(x, y, [[1, 0], [3, 1], [0, "2/3"]])
    fg = fin.tr_hat(fin.pre_compose(fin.canonical(f), g))
    gf = fin.tr_hat(fin.pre_compose(fin.canonical(g), f))
    assert fg == gf
    assert fin.trace_pairing(fin.canonical(f), g) == fg


def test_super_dimension_is_even_minus_odd():
    sup = traced.Instance("supervect")
    v = sup.super_space(1, 2)
    assert sup.trace(sup.identity(v)).scalar() == -1


def test_graded_trace_is_multiplicative():
    gr = traced.Instance("graded(q=2)")
    x = gr.graded_space({1: 1})
    y = gr.graded_space({-1: 1, 2: 1})
    a, b = gr.canonical(gr.identity(x)), gr.canonical(gr.identity(y))
    both = gr.tr_hat(gr.tensor_triples(a, b))
    assert both.scalar() == gr.tr_hat(a).scalar() * gr.tr_hat(b).scalar()


def test_cut_bordism_traces_to_a_circle():
    rb = traced.Instance("rbord1")
    sigma = rb.interval("x", "x", 4)
    assert rb.tr_hat(rb.cut(sigma, "1/2")) == rb.circle(4)
    assert rb.trace(sigma) == rb.circle(4)


def test_values_from_different_instances_do_not_mix():
    fin, sup = traced.Instance("finvect"), traced.Instance("supervect")
    try:
        fin.identity(sup.super_space(1, 0))
    except TypeError:
        return
    raise AssertionError("expected TypeError")


def test_run_program():
    transcript, ok = traced.run("instance finvect\n\nobj X = vec(3);\nprint trace(id(X));\n")
    assert ok and transcript == "trace(id(X)) = 3\n"
    try:
        traced.run("instance finvect\n\nobj X = vec(2);\nprint coev(X) ; coev(X);\n")
    except ValueError as e:
        assert "TypeError" in str(e)
    else:
        raise AssertionError("expected ValueError")


if __name__ == "__main__":
    tests = [(n, f) for n, f in sorted(globals().items()) if n.startswith("test_")]
    for name, fn in tests:
        fn()
        print(f"ok {name}")
    print(f"{len(tests)} passed")
