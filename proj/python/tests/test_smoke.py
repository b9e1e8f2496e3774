import json
import os
import subprocess

import pytest

import hecketwist as ht


def test_quadratic_relation():
    ctx = ht.Context("A1")
    b = ctx.basis("s1", "(0)")
    assert b * b == ctx.parse("1[(0)] + T[s1] 1[(0)] * (v - v^-1)")


def test_unit_and_idempotent_laws():
    ctx = ht.Context("A2", n=2)
    one = ctx.unit()
    for w in ctx.words():
        for lam in ctx.chars():
            b = ctx.basis(w, lam)
            assert one * b == b
            assert b * one == b
    zero = ctx.idempotent("(0,0)") * ctx.idempotent("(1/2,0)")
    assert zero.is_zero()


def test_involutions():
    ctx = ht.Context("A2", eps="flip")
    x = ctx.basis("s1 s2", "(0,0)", k=1)
    assert x.bar().bar() == x
    assert x.twist().twist() == x
    assert x.sign_involution().sign_involution() == x


def test_basis_inverse():
    ctx = ht.Context("B2", n=2)
    full = None
    for lam in ctx.chars():
        term = ctx.basis("s1 s2", lam)
        full = term if full is None else full + term
    assert ctx.basis_inverse("s1 s2") * full == ctx.unit()


def test_canonical_basis_expansion():
    ctx = ht.Context("A1", n=2)
    c = ctx.c_basis("s1", "(0)")
    assert c.c_expansion() == [("s1", "(0)", "1")]
    polys = {tuple(t["word"]): t["poly"] for t in c.terms()}
    assert polys == {(): "v^-1", (1,): "1"}
    # the nonintegral point has trivial stabilizer, so c and T agree
    assert ctx.c_basis("s1", "(1/2)") == ctx.basis("s1", "(1/2)")


def test_kl_csv():
    ctx = ht.Context("A1")
    lines = ctx.kl_csv("(0)").splitlines()
    assert lines[0] == "lambda,zprime,z,poly"
    assert '"(0)",e,s1,v^-1' in lines


def test_cells():
    part = ht.Context("A1", n=2).cells()
    assert sorted(len(c) for c in part["cells"]) == [1, 1, 2]
    merged = next(c for c in part["cells"] if len(c) == 2)
    assert sorted(lam for _, lam in merged) == ["(1/2)", "(1/2)"]


def test_verify_suites():
    assert "all" in ht.suite_names()
    rep = ht.Context("A1", n=2).verify("all")
    assert rep["all_pass"] is True
    names = [c["name"] for c in rep["checks"]]
    assert "delta-equals-theta-mod-commutators" in names
    assert "gamma-coefficients-nonnegative" in names


def test_duality_and_facet_reports():
    ctx = ht.Context("A2", eps="flip")
    dual = ctx.duality_report()
    assert dual["all_pass"] is True
    fac = ctx.facet_report()
    assert fac["all_pass"] is True
    assert len(fac["rows"]) == 12


def test_config_echo():
    cfg = ht.Context("B2", n=3).config()
    assert cfg["type"] == "B2"
    assert cfg["n"] == 3
    assert cfg["d0"] == 8


def test_errors():
    with pytest.raises(ValueError):
        ht.Context("Z9")
    ctx = ht.Context("A1")
    with pytest.raises(ValueError):
        ctx.basis("s1", "(1/2)")  # not in the 1-torsion family
    with pytest.raises(ValueError):
        ctx.basis("s7", "(0)")
    other = ht.Context("A1")
    with pytest.raises(ValueError):
        ctx.unit() * other.unit()  # contexts never mix


def test_cli_verify(tmp_path):
    cli = os.environ.get("HECKETWIST_CLI")
    if not cli:
        pytest.skip("HECKETWIST_CLI not set")
    out = tmp_path / "out"
    run = subprocess.run(
        [cli, "verify", "duality", "--type", "A1", "--out", str(out)],
        capture_output=True,
        text=True,
    )
    assert run.returncode == 0, run.stderr
    doc = json.loads((out / "verify.json").read_text())
    assert doc["all_pass"] is True
    assert doc["suite"] == "duality"
