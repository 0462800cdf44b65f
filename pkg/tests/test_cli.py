import json
import subprocess
import sys

import pytest

from kpq.algebra import parse
from kpq.cli import main
from kpq.identities import staircase_product
from kpq import io


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_one_box(capsys):
    code, out, _ = run(capsys, "compute", "GQ", "1", "1")
    assert (code, out.strip()) == (0, "2*x1 + beta*x1^2")


def test_compute_staircase_by_excited_diagrams(capsys):
    code, out, _ = run(capsys, "compute", "GQ", "2,1", "2", "--backend", "eyd")
    assert code == 0
    assert parse(out.strip()) == staircase_product(2, True)


def test_compute_all_backends_agree(capsys):
    code, out, _ = run(capsys, "compute", "GP", "1", "2", "--backend", "all")
    assert code == 0
    assert "agree: true" in out


def test_localize_examples(capsys):
    assert run(capsys, "localize", "GP", "1", "-")[:2] == (0, "0\n")
    assert run(capsys, "localize", "GQ", "-", "2,1")[:2] == (0, "1\n")


def test_table(capsys):
    code, out, _ = run(capsys, "table", "C", "2")
    assert code == 0
    assert out.count("psi[") == 16
    assert "gkm: pass" in out and "recurrence vs localization: agree" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("compute", "GB", "3,3", "2"),
        ("compute", "GX", "1", "2"),
        ("compute", "GB", "1", "2", "--backend", "pf"),
        ("compute", "GQ", "1", "7", "--backend", "pf"),
        ("compute", "GQ", "3,2,1", "2"),
        ("localize", "GC", "1", "3,1", "--n", "1"),
        ("table", "E", "2"),
        ("expand", "GQ", "2"),
        ("expand", "GQ", "2", "--poly", "x1 +"),
        ("frobnicate",),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_expand_non_member_exits_3(capsys):
    assert run(capsys, "expand", "GQ", "2", "--poly", "x1*x2")[0] == 3
    assert run(capsys, "expand", "GP", "2", "--poly", "x1")[0] == 3


def test_expand_of_a_basis_element(capsys):
    code, out, _ = run(capsys, "expand", "GP", "3", "--of", "GP", "3,1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["format"] == io.FORMAT


def test_json_documents(capsys):
    code, out, _ = run(capsys, "compute", "GQ", "2,1", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["format"] == io.FORMAT
    assert io.poly_from_document(doc) == staircase_product(2, True)
    code, out, _ = run(capsys, "table", "D", "2", "--format", "json")
    assert code == 0 and json.loads(out)["format"] == io.FORMAT


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "kpq", "table", "B", "2", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b


def test_verify_identities(capsys):
    code, out, _ = run(capsys, "verify", "identities", "--max-lambda", "2,1", "--max-n", "3")
    assert code == 0
    assert out.strip().endswith("suite identities: PASS")


def test_verify_backends(capsys):
    code, out, _ = run(capsys, "verify", "backends", "--max-lambda", "3,2,1", "--max-n", "3")
    assert code == 0
    assert "A1 PASS" in out


def test_flipped_parity_fails_in_divided_differences(capsys):
    code, out, _ = run(capsys, "verify", "all", "--d-parity", "even-hat", "--max-lambda", "2,1", "--max-n", "2")
    assert code == 3
    assert "A6 FAIL" in out
    assert "A1 PASS" in out and "A5 PASS" in out
