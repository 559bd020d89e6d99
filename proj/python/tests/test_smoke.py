import os
import pathlib

import pytest

import pcalab
from pcalab import k2

DATA = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"


def test_lattice_fixtures():
    names = pcalab.lattice_names()
    assert len(names) == 10
    a = pcalab.lattice_opca("L3")
    assert a.names == ["0", "h", "1"]
    assert a.filter == ["1"]
    assert a.apply("h", "1") == "h"
    assert all(r.passed for r in pcalab.check_opca(a))


def test_build_and_check_aks():
    a = pcalab.lattice_opca("L3")
    for u in pcalab.admissible_U(a):
        aks, reports = pcalab.build_aks(pcalab.with_U(a, u))
        assert aks is not None
        assert all(r.passed for r in reports)
        assert all(r.passed for r in pcalab.check_aks(aks))
        assert (pcalab.check_kr(aks) is None) == (pcalab.tv_least(aks) is None)


def test_raw_aks_file():
    k = pcalab.load_aks(str(DATA / "pruned_qp.aks"))
    assert not all(r.passed for r in pcalab.check_aks(k))


def test_input_error():
    with pytest.raises(pcalab.InputError, match=r"dangling.struct:6: field .app."):
        pcalab.load_opca(str(DATA / "dangling.struct"))


def test_applicative_agreement():
    a = pcalab.lattice_opca("L3")
    b = pcalab.lattice_opca("L2")
    assert pcalab.is_applicative(a, b, ["0", "1", "1"]) == (True, True)
    app, mp = pcalab.is_applicative(a, b, ["1", "0", "1"])
    assert app == mp


def test_booleanization():
    a = pcalab.with_U(pcalab.lattice_opca("L2"), ["0"])
    assert all(r.passed for r in pcalab.booleanization(a, 2))


def test_k2_basis():
    x = k2.expression("x * 3")
    y = k2.expression("x + 1")
    value, used = k2.apply(k2.app(k2.K(), x), y, 7)
    assert value == 21
    assert used >= 1
    assert k2.apply(k2.skk(), y, 4)[0] == 5
    assert k2.apply(k2.constant(0), y, 0, fuel=50)[0] is None
    assert k2.decode(k2.encode([3, 0, 2 ** 70])) == [3, 0, 2 ** 70]
    assert k2.decode(2) is None


def test_cli_in_process():
    code, out, err = pcalab.run_cli(
        ["--format", "machine", "--no-timing", "check-aks", str(DATA / "two_stacks.aks")])
    assert code == 0, err
    assert out.count("\n") >= 5
    code, _, _ = pcalab.run_cli(["check-opca", os.devnull + "-missing"])
    assert code == 2
