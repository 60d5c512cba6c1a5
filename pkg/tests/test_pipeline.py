import csv
import dataclasses
import io
import json

import pytest

from cyclofield import cli
from cyclofield.emit import emit
from cyclofield.galois import new_context
from cyclofield.gf2poly import INFINITY, Place, parse_poly
from cyclofield.pipeline import (
    ConfigError, RunConfig, classify, frobenius_table, table_powers, verify_paper,
)

P = parse_poly
REFERENCE_L = [1, -3, 2, 0, 1, 0, 8, -24, 16]


def run_cli(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out=out)
    return code, out.getvalue()


def test_table_powers_rows(M):
    rows = table_powers(M)
    assert len(rows) == 16
    assert rows[4] == {"input": "T^5", "residue": "T^2+T"}
    assert rows[14] == {"input": "T^4+T^3+1", "residue": "T^3+T"}
    assert rows[15] == {"input": "T^4+T^3+T^2+T+1", "residue": "T^3+T^2"}
    extra = table_powers(M, [P("T^15")])
    assert extra[-1] == {"input": "T^15", "residue": "1"}
    with pytest.raises(ConfigError):
        table_powers(P("T^4+1"))


def test_frobenius_table(ctx5):
    rows = {r["place"]: r for r in frobenius_table(ctx5)}
    assert rows["T^3+T+1"]["theta_symbol"] == "τ^7χ^3"
    assert rows["T^4+T^3+T^2+T+1"]["theta"] == [6, 4]
    assert rows["T^4+T^3+T^2+T+1"]["sub_order"] == "⟨(3,2),(0,0)⟩"   # = <(9,1)>
    assert rows["T^4+T+1"]["ramified"] and rows["T^4+T+1"]["inertia"] == "⟨(1,0),(0,0)⟩"
    assert rows["T^2+T+1"]["cyclotomic_order"] == 3
    one = {r["place"]: r for r in frobenius_table(new_context(P("T^4+T+1"), 1), [INFINITY])}
    assert one["inf"]["decomposition_order"] == 1
    assert one["inf"]["theta"] == [0, 0]


def test_classify_defaults():
    reports = classify()
    assert [r.labels for r in reports] == [["S3", "R1"], ["S4", "R2"]]
    for r in reports:
        d = r.to_dict()
        assert d["spectrum"][:4] == [0, 0, 0, 1]
        assert d["genus"] == 4 and d["class_number"] == 1
        assert d["l_polynomial"] == REFERENCE_L
        assert d["ramified"] == ["T^4+T+1"]
        assert d["isomorphic_to"]["moebius"] == "T -> (1T+1)/(0T+1)"
    assert reports[0].isomorphic_to["partner"] == str(reports[1].subgroup)


def test_classify_without_pattern():
    reports = classify(RunConfig(pattern=None))
    assert len(reports) == 6
    labels = {r.labels[1]: r for r in reports}
    assert labels["k5"].constant_extension and labels["k5"].genus is None
    assert labels["k5"].l_polynomial is None
    for r in reports:
        if not r.constant_extension:
            assert 2 * r.genus == len(r.l_polynomial) - 1
            assert r.class_number == sum(r.l_polynomial)
    assert labels["R3"].provenance == "derived"
    assert labels["R1"].provenance == "reference"


def test_pattern_survivors_have_class_number_one():
    for modulus in ("T^4+T+1", "T^4+T^3+1", "T^4+T^3+T^2+T+1"):
        reports = classify(RunConfig(modulus=modulus))
        assert len(reports) == 2
        assert all(r.class_number == 1 and r.genus == 4 for r in reports)


def test_classify_index3():
    assert classify(RunConfig(index=3)) == []
    reports = classify(RunConfig(index=3, pattern=None))
    assert len(reports) == 1
    assert reports[0].genus == 2 and reports[0].labels == ["S1"]


def test_classify_config_errors():
    with pytest.raises(ConfigError):
        classify(RunConfig(modulus="T^4+1"))
    with pytest.raises(ConfigError):
        classify(RunConfig(index=7))
    with pytest.raises(ConfigError):
        classify(RunConfig(index=15, pattern=None))      # genus 14 > bound 7
    with pytest.raises(ConfigError):
        classify(RunConfig(bound=3))                     # pattern longer than bound
    with pytest.raises(ConfigError):
        classify(RunConfig(modulus="T^^2"))


def test_emit_formats():
    reports = [r.to_dict() for r in classify()]
    data = json.loads(emit(reports, "json"))
    assert data[0]["l_polynomial"] == REFERENCE_L
    assert list(data[0])[:11] == ["subgroup", "labels", "degree", "spectrum", "genus",
                                  "l_polynomial", "class_number", "ramified", "split",
                                  "inert", "constant_extension"]
    md = emit(reports, "md")
    assert "| h |" in md and md.count("\n") == 2 + len(reports)
    rows = list(csv.DictReader(io.StringIO(emit(reports, "csv"))))
    assert len(rows) == len(reports)
    assert json.loads(rows[0]["l_polynomial"]) == REFERENCE_L
    with pytest.raises(ValueError):
        emit(reports, "xml")


def test_cli_determinism():
    first = run_cli("classify", "--format", "json")
    second = run_cli("classify", "--format", "json")
    assert first == second
    assert first[0] == 0
    explicit = run_cli("classify", "--format", "json", "--modulus", "10011", "--constant-degree", "5",
                       "--index", "5", "--bound", "7", "--pattern", "0,0,0,1")
    assert explicit == first


def test_cli_subcommands():
    code, out = run_cli("table-powers", "--format", "csv")
    assert code == 0 and "T^14,T^3+1" in out
    code, out = run_cli("frobenius", "--format", "json", "T^3+T+1", "inf")
    assert code == 0 and json.loads(out)[0]["theta"] == [7, 3]
    code, out = run_cli("classify", "--pattern", "none", "--format", "csv")
    assert code == 0 and len(out.strip().splitlines()) == 7


@pytest.mark.parametrize("argv", [
    ["classify", "--modulus", "T^4+1"],
    ["classify", "--index", "7"],
    ["table-powers", "--modulus", "T^2+1"],
    ["frobenius", "T^2+1"],
    ["classify", "--modulus", "T^^"],
])
def test_cli_config_errors_exit_2(argv):
    assert run_cli(*argv)[0] == 2


def test_cli_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        cli.run(["classify", "--format", "xml"])
    assert exc.value.code == 2


def test_cli_plots(tmp_path):
    code, _ = run_cli("classify", "--pattern", "none", "--plot-dir", str(tmp_path))
    assert code == 0
    for name in ("spectrum.png", "l_polynomial.png"):
        f = tmp_path / name
        assert f.exists() and f.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def corrupted_factory(m, n):
    ctx = new_context(m, n)
    table = dict(ctx.dlog_table)
    t, t1 = P("T").bits, P("T+1").bits
    table[t], table[t1] = table[t1], table[t]
    return dataclasses.replace(ctx, dlog_table=table)


def test_fault_injection_is_localised():
    checks = verify_paper(corrupted_factory)
    failed = [c for c in checks if not c.ok]
    assert failed
    assert {c.group for c in failed} <= {"galois", "moebius", "classify"}
    assert any(c.name.startswith("theta_T") for c in failed)
    assert all(c.ok for c in checks if c.group in ("gf2poly", "zeta"))


def test_verify_paper_fresh_build():
    code, out = run_cli("verify-paper")
    failed = [c for c in verify_paper() if not c.ok]
    assert code == 0, [(c.name, c.expected, c.got) for c in failed]
