import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from monoidrees import fixtures
from monoidrees.cli import load_result_document, main, parse_problem
from monoidrees.errors import ParseError
from monoidrees.ring import GF, MultiPoly

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out)
    text = out.getvalue()
    return code, (json.loads(text) if text else None), text


def test_generators_conic():
    code, doc, _ = run("generators", PROBLEMS / "conic.txt")
    assert code == 0 and doc["status"] == "ok"
    assert [g["poly"] for g in doc["generators"]] == ["t1*X2 - t2*X1", "t1*X3 - t2*X2", "X1*X3 - X2^2"]
    assert doc["implicit_equation"] == "X1*X3 - X2^2"
    assert doc["input"]["u1"] == "t1^2"


def test_generators_surface():
    code, doc, _ = run("generators", PROBLEMS / "surface.txt")
    assert code == 0
    assert [tuple(g["bidegree"]) for g in doc["generators"]] == [(1, 1), (1, 1), (2, 1), (1, 3), (0, 5)]
    E = MultiPoly.parse(doc["implicit_equation"], 3)
    assert E.ratio_to(fixtures.surface_E()) is not None
    assert doc["inverse_map"]["certificate"]["ok"]


def test_generators_ex32_exit_2():
    code, doc, _ = run("generators", PROBLEMS / "quadric.txt")
    assert code == 2 and doc["status"] == "degenerate"
    assert doc["minors"]["M1"] == "0" and doc["minors"]["M2"] == "0"
    assert doc["vanishing"] == ["M1", "M2"]
    M3 = MultiPoly.parse(doc["minors"]["M3"], 3)
    assert M3.ratio_to(fixtures.quadric_m3()) is not None and doc["candidate_degree"] == 2


def test_implicitize_examples():
    code, doc, _ = run("implicitize", PROBLEMS / "monoid.txt")
    assert code == 0
    assert MultiPoly.parse(doc["implicit_equation"], 3).ratio_to(
        MultiPoly.parse("X1*X4 - X2^2 - X1*X3", 3)
    ) is not None
    assert run("implicitize", PROBLEMS / "conic.txt")[1]["implicit_equation"] == "X1*X3 - X2^2"
    assert run("implicitize", PROBLEMS / "surface.txt")[1]["degree"] == 5


def test_invert_examples():
    assert run("invert", PROBLEMS / "monoid.txt")[1]["inverse_map"]["rendering"] == "(X1 : X2 : X3)"
    assert run("invert", PROBLEMS / "conic.txt")[1]["inverse_map"]["rendering"] == "(X1 : X2)"
    code, doc, _ = run("invert", PROBLEMS / "surface.txt")
    cert = doc["inverse_map"]["certificate"]
    assert code == 0 and cert["passed"] == 10 and cert["samples"] == 10


def test_verify_conic_and_surface():
    code, doc, _ = run("verify", PROBLEMS / "conic.txt", "--bound", 6)
    assert code == 0 and doc["report"]["verdict"] == "Certified" and doc["report"]["bound"] == 6
    code, doc, _ = run("verify", PROBLEMS / "surface.txt", "--bound", 7, "--field", "fp:32003")
    assert code == 0 and doc["report"]["verdict"] == "Certified"


def test_verify_tampered_document(tmp_path):
    _, doc, _ = run("generators", PROBLEMS / "cubic_curve.txt")
    doc["generators"] = [g for g in doc["generators"] if g["label"] != "F_0"]
    path = tmp_path / "tampered.json"
    path.write_text(json.dumps(doc))
    code, rep, _ = run("verify", path)
    assert code == 1
    assert rep["report"]["verdict"] == "Failed" and rep["report"]["first_failure"] == [0, 3]


def test_result_document_reparses(tmp_path):
    for name in ("conic", "surface", "monoid", "cubic_curve"):
        _, doc, _ = run("generators", PROBLEMS / f"{name}.txt")
        p, gens = load_result_document(doc)
        assert all(p.is_member(g.poly) for g in gens)
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(doc))
        assert run("verify", path, "--bound", p.d + 2)[0] == 0


def test_deterministic_output():
    a = run("generators", PROBLEMS / "surface.txt", "--seed", 5)[2]
    b = run("generators", PROBLEMS / "surface.txt", "--seed", 5)[2]
    assert a == b


def test_field_override():
    _, doc, _ = run("generators", PROBLEMS / "conic.txt", "--field", "fp:101")
    assert doc["field"] == "fp:101"


def test_parse_error_location(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("case = curve\nu1 = t1^2\nu2 = t1*t2 +* t2\nu3 = t2^2\n")
    code, _, _ = run("generators", path)
    assert code == 1
    assert "line 3, column 13" in capsys.readouterr().err


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("u1 = t1\n", "missing key 'case'"),
        ("case = curve\ncolour = red\n", "unknown key"),
        ("case = curve\ncase = curve\n", "duplicate"),
        ("case = curve\nu1 = t1^2\nu2 = t2^2\n", "expected keys"),
        ("case = monoid\nf_top = t1\nf_deg = t2^2\n", "'n'"),
        ("case = surface\nasserted_lci = maybe\np1 = t1*X1\n", "true or false"),
        ("case = curve\nu1 = t1\nu2 = t2\nu3 = t1\nf_top = t1\n", "exactly one input style"),
    ],
)
def test_problem_file_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_problem(text)
    assert fragment in str(err.value)


def test_problem_file_comments_and_field():
    prob = parse_problem("# a comment\ncase = curve  # trailing\nfield = fp:7\nu1 = t1^2\nu2 = t1*t2\nu3 = t2^2\n")
    assert prob.field == GF(7) and prob.parametrization().d == 2


def test_precondition_error_exit_1(tmp_path, capsys):
    path = tmp_path / "mu2.txt"
    path.write_text("case = curve\nu1 = t1^4\nu2 = t1^2*t2^2 + t1*t2^3\nu3 = t2^4 + t1^3*t2\n")
    assert run("generators", path)[0] == 1
    assert "MuNotOne" in capsys.readouterr().err


def test_missing_lci_assertion_exit_1(tmp_path):
    text = (PROBLEMS / "surface.txt").read_text().replace("asserted_lci = true", "asserted_lci = false")
    path = tmp_path / "s.txt"
    path.write_text(text)
    assert run("generators", path)[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "monoidrees", "implicitize", str(PROBLEMS / "conic.txt")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["implicit_equation"] == "X1*X3 - X2^2"
