"""End-to-end runs of the command line interface.

Every test drives main() directly and checks the exit code plus captured
output, so the argparse wiring, the handlers and the emitters are all
exercised together.
"""

import io
import json
import sys

import pytest

import flatlat.cli as cli
from flatlat import all_flats, format_lattice, parse, realizing_complex

from conftest import FIXTURES

TRIANGLES = str(FIXTURES / "glued_triangles.cx")
NONREAL6 = str(FIXTURES / "nonrealizable6.lat")
CHAIN3 = str(FIXTURES / "chain3.lat")
BOOL2 = str(FIXTURES / "boolean2.lat")
PATH4 = str(FIXTURES / "path4.gr")
NONBR = str(FIXTURES / "nonbr.cx")


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- classify ----------------------------------------------------------------


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", NONREAL6)
    assert code == 0
    lines = out.splitlines()
    assert "atoms: 1 2 3" in lines
    assert "height: 3" in lines
    assert "atomistic: true" in lines
    assert "semimodular: false" in lines
    assert "semimodular_witness: T m 2 3 B" in lines
    assert "boolean: false" in lines


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", NONREAL6, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["elements"] == ["B", "1", "2", "3", "m", "T"]
    assert data["geometric"] is False
    assert data["semimodular_witness"] == ["T", "m", "2", "3", "B"]


def test_classify_reports_semimodularity_witness(capsys, tmp_path, triangles):
    path = tmp_path / "flats.lat"
    path.write_text(format_lattice(all_flats(triangles).lattice))
    code, out, _ = run(capsys, "classify", str(path))
    assert code == 0
    assert "semimodular: false" in out
    assert "semimodular_witness: {1,2,3,4} {1,2} {2} {4} {}" in out


# -- flats / closure ----------------------------------------------------------


def test_flats_text(capsys):
    code, out, _ = run(capsys, "flats", TRIANGLES)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "count: 7"
    assert sum(1 for l in lines if l.startswith("cover: ")) == 9


def test_flats_json(capsys):
    code, out, _ = run(capsys, "flats", TRIANGLES, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 7
    assert [] in data["flats"] and ["1", "2", "3", "4"] in data["flats"]
    assert len(data["covers"]) == 9


def test_flats_dot(capsys):
    code, out, _ = run(capsys, "flats", TRIANGLES, "--dot")
    assert code == 0
    assert out.startswith("digraph") and out.count("->") == 9


def test_closure(capsys):
    code, out, _ = run(capsys, "closure", TRIANGLES, "--set", "3,4")
    assert code == 0 and out == "closure: 1 2 3 4\n"
    code, out, _ = run(capsys, "closure", TRIANGLES, "--set", "1 2")
    assert code == 0 and out == "closure: 1 2\n"


# -- brsc ----------------------------------------------------------------------


def test_brsc_accepts(capsys):
    code, out, _ = run(capsys, "brsc", TRIANGLES)
    assert code == 0
    assert "boolean_representable: true" in out


def test_brsc_rejects_with_witness(capsys):
    code, out, _ = run(capsys, "brsc", NONBR)
    assert code == 1
    assert "boolean_representable: false" in out
    assert "violation: 1 2" in out


def test_brsc_verbose_lists_orderings(capsys):
    code, out, _ = run(capsys, "brsc", TRIANGLES, "--verbose")
    lines = out.splitlines()
    assert code == 0
    assert "face {1,2,3}: ordering 1 2 3" in lines
    assert "face {}: ordering" in lines

    code, out, _ = run(capsys, "brsc", NONBR, "--verbose")
    assert code == 1
    assert "face {1,2}: no transversal ordering" in out.splitlines()


def test_brsc_verbose_json(capsys):
    code, out, _ = run(capsys, "brsc", TRIANGLES, "--verbose", "--format", "json")
    data = json.loads(out)
    assert data["boolean_representable"] is True
    full = next(e for e in data["faces"] if e["face"] == ["1", "2", "3"])
    assert full["transversal"] is True
    assert full["chain"][0] == [] and full["chain"][-1] == ["1", "2", "3", "4"]


def test_brsc_oracle_agrees(capsys):
    code, _, err = run(capsys, "brsc", TRIANGLES, "--oracle")
    assert code == 0 and err == ""


def test_brsc_oracle_flags_disagreement(capsys, monkeypatch):
    monkeypatch.setattr(cli, "transversal_witness", lambda *a, **k: None)
    code, _, err = run(capsys, "brsc", TRIANGLES, "--oracle")
    assert code == 4
    assert "disagreement" in err


# -- realizable / construct -----------------------------------------------------


def test_realizable_counterexample(capsys):
    code, out, _ = run(capsys, "realizable", NONREAL6)
    assert code == 1
    lines = out.splitlines()
    assert "realizable: false" in lines
    assert "method: height-3" in lines
    assert "superclique: 1 3" in lines


def test_realizable_json(capsys):
    code, out, _ = run(capsys, "realizable", NONREAL6, "--format", "json")
    assert code == 1
    data = json.loads(out)
    assert data["realizable"] is False
    assert data["supercliques"] == [["1", "3"], ["2", "3"]]


def test_realizable_non_atomistic(capsys):
    code, out, _ = run(capsys, "realizable", CHAIN3)
    assert code == 1
    assert "method: atomistic" in out
    assert "non_atomistic_witness: T" in out


def test_realizable_positive(capsys):
    code, out, _ = run(capsys, "realizable", BOOL2)
    assert code == 0
    assert "method: height-le-2" in out


def test_realizable_force_general(capsys):
    code, out, _ = run(capsys, "realizable", NONREAL6, "--force-general")
    assert code == 1
    assert "method: general" in out
    assert "canonical_flat_count: 8 (lattice has 6 elements)" in out


def test_realizable_oracle(capsys):
    code, _, err = run(capsys, "realizable", BOOL2, "--oracle")
    assert code == 0 and err == ""
    code, _, err = run(capsys, "realizable", NONREAL6, "--oracle")
    assert code == 1 and err == ""


def test_construct_text_reparses(capsys, chain3):
    code, out, _ = run(capsys, "construct", CHAIN3)
    assert code == 0
    expected, _ = realizing_complex(chain3)
    assert parse(out).value == expected


def test_construct_verify(capsys):
    code, out, _ = run(capsys, "construct", CHAIN3, "--verify")
    assert code == 0
    assert out.splitlines()[0].startswith("# verified")


def test_construct_json(capsys):
    code, out, _ = run(capsys, "construct", CHAIN3, "--verify", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["verified"] is True
    assert data["predicted_flats"]["B"] == []
    assert data["predicted_flats"]["m"] == ["m^1", "m^2", "m^3"]
    assert len(data["vertices"]) == 6


# -- tl / matrix ----------------------------------------------------------------


def test_tl_output(capsys):
    code, out, _ = run(capsys, "tl", NONREAL6)
    assert code == 0
    built = parse(out).value
    assert built.vertices == ("1", "2", "3")
    assert built.facets == (frozenset({"1", "2", "3"}),)


def test_tl_rejects_non_atomistic(capsys):
    code, _, err = run(capsys, "tl", CHAIN3)
    assert code == 2
    assert err.startswith("error:")


def test_tl_oracle(capsys):
    code, _, err = run(capsys, "tl", NONREAL6, "--oracle")
    assert code == 0 and err == ""


def test_matrix_text(capsys):
    code, out, _ = run(capsys, "matrix", NONREAL6)
    assert code == 0
    # 0 marks that the row element lies above the column atom
    assert out.splitlines() == [
        "1 1 1",
        "0 1 1",
        "1 0 1",
        "1 1 0",
        "0 0 1",
        "0 0 0",
    ]


def test_matrix_needs_atomistic_input(capsys):
    code, _, err = run(capsys, "matrix", CHAIN3)
    assert code == 2 and "error:" in err


# -- superclique -----------------------------------------------------------------


def test_superclique_graph(capsys):
    code, out, _ = run(capsys, "superclique", PATH4)
    assert code == 0
    assert sum(1 for l in out.splitlines() if l.startswith("superclique: ")) == 3


def test_superclique_from_lattice(capsys):
    code, out, _ = run(capsys, "superclique", NONREAL6, "--format", "json")
    assert code == 0
    assert json.loads(out)["supercliques"] == [["1", "3"], ["2", "3"]]


def test_superclique_none_found(capsys, tmp_path):
    path = tmp_path / "edgeless.gr"
    path.write_text("graph\nvertices a b c\n")
    code, out, _ = run(capsys, "superclique", str(path))
    assert code == 1
    assert out == "supercliques: none\n"


def test_superclique_oracle(capsys):
    code, _, err = run(capsys, "superclique", PATH4, "--oracle")
    assert code == 0 and err == ""


def test_superclique_oracle_flags_disagreement(capsys, monkeypatch):
    monkeypatch.setattr(cli, "find_supercliques", lambda g: ())
    code, _, err = run(capsys, "superclique", PATH4, "--oracle")
    assert code == 4
    assert "disagreement" in err


def test_naive_superclique_limit_and_override(capsys, tmp_path, monkeypatch):
    labels = " ".join(f"v{i}" for i in range(17))
    path = tmp_path / "big.gr"
    path.write_text(f"graph\nvertices {labels}\n")
    code, _, err = run(capsys, "superclique", str(path), "--naive")
    assert code == 3 and "error:" in err
    monkeypatch.setenv("FLATLAT_LIMIT_OVERRIDE", "1")
    code, out, _ = run(capsys, "superclique", str(path), "--naive")
    assert code == 1 and out == "supercliques: none\n"


# -- plumbing ---------------------------------------------------------------------


def test_hasse(capsys):
    code, out, _ = run(capsys, "hasse", NONREAL6)
    assert code == 0
    assert out.startswith("digraph") and out.count("->") == 7


def test_reads_stdin(capsys, monkeypatch):
    with open(NONREAL6, "r", encoding="utf-8") as handle:
        monkeypatch.setattr(sys, "stdin", io.StringIO(handle.read()))
    code, out, _ = run(capsys, "classify", "-")
    assert code == 0 and "height: 3" in out


def test_parse_error_exit(capsys, tmp_path):
    path = tmp_path / "bad.lat"
    path.write_text("lattice\nelements a\ncover a b\n")
    code, _, err = run(capsys, "classify", str(path))
    assert code == 2
    assert err.startswith("error: line 3")


def test_missing_file_exit(capsys):
    code, _, err = run(capsys, "classify", "/no/such/file")
    assert code == 2 and "error:" in err


def test_wrong_kind_exit(capsys):
    code, _, err = run(capsys, "flats", NONREAL6)
    assert code == 2
    assert "expected a complex document" in err


def test_flats_scan_limit(capsys, tmp_path):
    labels = " ".join(f"v{i}" for i in range(26))
    path = tmp_path / "big.cx"
    path.write_text(f"complex\nvertices {labels}\n")
    code, _, err = run(capsys, "flats", str(path))
    assert code == 3 and "error:" in err
