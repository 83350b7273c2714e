"""Tests for the penrose command-line front end."""

import json

import pytest

from penrose.cli import EXIT_OK, EXIT_PARSE, EXIT_SEMANTIC, main
from penrose.utils.serialization import (
    dump_document,
    load_document,
    operator_from_document,
    parse_document,
)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def run_machine(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "machine")
    assert code == EXIT_OK
    return json.loads(out)


class TestPinv:
    def test_block_operator(self, capsys, fixtures_dir, phi_pinv):
        code, out = run(capsys, "pinv", fixtures_dir / "phi_operator.json", "--format", "machine")
        assert code == EXIT_OK
        assert operator_from_document(parse_document(out)) == phi_pinv

    def test_text_output(self, capsys, fixtures_dir):
        code, out = run(capsys, "pinv", fixtures_dir / "phi_operator.json")
        assert code == EXIT_OK
        assert "tail block (size 5, repeated from coordinate 11):" in out
        assert "5/3" in out

    def test_identity_matrix(self, capsys, fixtures_dir):
        code, out = run(capsys, "pinv", fixtures_dir / "identity3.json")
        assert code == EXIT_OK
        assert out == "1  0  0\n0  1  0\n0  0  1\n"

    def test_inverse_of_inverse(self, capsys, fixtures_dir, tmp_path, phi):
        first = tmp_path / "pinv.json"
        second = tmp_path / "pinv2.json"
        args = ["--format", "machine", "--out"]
        assert main(["pinv", str(fixtures_dir / "phi_operator.json"), *args, str(first)]) == 0
        assert main(["pinv", str(first), *args, str(second)]) == 0
        assert operator_from_document(load_document(second)) == phi
        assert capsys.readouterr().out == ""

    def test_matrix(self, capsys, fixtures_dir, skew_pinv):
        report = run_machine(capsys, "pinv", fixtures_dir / "skew_matrix.json")
        assert report["kind"] == "matrix"
        assert report["rows"] == [[str(x) for x in row] for row in skew_pinv.to_lists()]

    def test_deterministic(self, capsys, fixtures_dir):
        _, first = run(capsys, "pinv", fixtures_dir / "phi_operator.json", "--format", "machine")
        _, second = run(capsys, "pinv", fixtures_dir / "phi_operator.json", "--format", "machine")
        assert first == second


class TestSolve:
    def test_consistent(self, capsys, fixtures_dir):
        report = run_machine(
            capsys, "solve", fixtures_dir / "phi_operator.json", fixtures_dir / "vector_v4.json"
        )
        assert report["consistent"] is True
        assert report["min_solution"] == [[3, "1"]]
        assert report["residual_norm_sq"] == "0"
        assert report["kernel"]["head"] == [[[7, "1"]]]
        assert report["kernel"]["tail"] == [[[2, "1"]]]
        assert report["kernel"]["tail_start"] == 10

    def test_inconsistent(self, capsys, fixtures_dir):
        report = run_machine(
            capsys, "solve", fixtures_dir / "phi_operator.json", fixtures_dir / "vector_v8.json"
        )
        assert report["consistent"] is False
        assert report["min_solution"] == []
        assert report["residual_norm_sq"] == "1"

    def test_zero_rhs_text(self, capsys, fixtures_dir):
        code, out = run(
            capsys, "solve", fixtures_dir / "phi_operator.json", fixtures_dir / "vector_zero.json"
        )
        assert code == EXIT_OK
        assert "consistent: yes" in out
        assert "min_solution: {}" in out
        assert "kernel head: {7: 1}" in out

    def test_system_file(self, capsys, fixtures_dir):
        report = run_machine(capsys, "solve", fixtures_dir / "phi_system.json")
        assert report["min_solution"] == [[3, "1"]]
        assert report["consistent"] is True

    def test_dense_system(self, capsys, fixtures_dir):
        report = run_machine(
            capsys, "solve", fixtures_dir / "skew_matrix.json", fixtures_dir / "vector_v4.json"
        )
        assert report["consistent"] is False
        assert "kernel" not in report
        assert len(report["kernel_basis"]) == 2


class TestCheck:
    def test_non_orthogonal_parts(self, capsys, fixtures_dir):
        report = run_machine(
            capsys,
            "check",
            fixtures_dir / "skew_matrix.json",
            fixtures_dir / "skew_decomposition.json",
        )
        assert report == {
            "kind": "check_report",
            "invariant": True,
            "image_condition": False,
            "kernel_condition": False,
            "rgi_equals_mp": False,
        }

    @pytest.mark.parametrize(
        "matrix, decomposition",
        [
            ("orthogonal_matrix.json", "orthogonal_decomposition.json"),
            ("skew_matrix.json", "single_decomposition.json"),
        ],
    )
    def test_conditions_hold(self, capsys, fixtures_dir, matrix, decomposition):
        report = run_machine(capsys, "check", fixtures_dir / matrix, fixtures_dir / decomposition)
        assert report["image_condition"] and report["kernel_condition"]
        assert report["rgi_equals_mp"] is True

    def test_not_invariant(self, capsys, fixtures_dir, tmp_path):
        shift = tmp_path / "shift.json"
        shift.write_text(json.dumps({"kind": "matrix", "rows": [["0", "0"], ["1", "0"]]}))
        parts = tmp_path / "parts.json"
        parts.write_text(
            json.dumps(
                {"kind": "decomposition", "ambient_dim": 2, "parts": [[[[1, "1"]]], [[[2, "1"]]]]}
            )
        )
        report = run_machine(capsys, "check", shift, parts)
        assert report["invariant"] is False
        assert "image_condition" not in report

    def test_text_output(self, capsys, fixtures_dir):
        code, out = run(
            capsys,
            "check",
            fixtures_dir / "skew_matrix.json",
            fixtures_dir / "skew_decomposition.json",
        )
        assert code == EXIT_OK
        assert "image_condition: no" in out
        assert "invariant: yes" in out


class TestVerifyPotentApply:
    def test_verify_reflexive_inverse(self, capsys, fixtures_dir):
        report = run_machine(
            capsys, "verify", fixtures_dir / "skew_matrix.json", fixtures_dir / "skew_rgi.json"
        )
        assert report["reflexive"] is True
        assert report["moore_penrose"] is False
        assert report["ax_self_adjoint"] is False

    def test_verify_block_operators(self, capsys, fixtures_dir):
        report = run_machine(
            capsys, "verify", fixtures_dir / "phi_operator.json", fixtures_dir / "phi_pinv.json"
        )
        assert report["moore_penrose"] is True

    def test_potent(self, capsys, fixtures_dir):
        report = run_machine(capsys, "potent", fixtures_dir / "phi_operator.json")
        assert report == {"kind": "potency_report", "finite_potent": True, "nilpotency_index": 5}
        report = run_machine(capsys, "potent", fixtures_dir / "phi_pinv.json")
        assert report["finite_potent"] is False
        assert "nilpotency_index" not in report

    def test_apply(self, capsys, fixtures_dir):
        code, out = run(
            capsys, "apply", fixtures_dir / "phi_operator.json", fixtures_dir / "vector_v1.json"
        )
        assert code == EXIT_OK
        assert out == "{2: 1, 5: 1, 7: 1}\n"


class TestExitCodes:
    def test_malformed_json(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"kind": "matrix", "rows": [["1"]')
        assert run(capsys, "pinv", bad)[0] == EXIT_PARSE

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "pinv", tmp_path / "absent.json")[0] == EXIT_PARSE

    def test_wrong_kind(self, capsys, fixtures_dir):
        assert run(capsys, "pinv", fixtures_dir / "vector_v1.json")[0] == EXIT_PARSE
        assert run(capsys, "potent", fixtures_dir / "skew_matrix.json")[0] == EXIT_PARSE

    def test_bad_scalar(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"kind": "matrix", "rows": [["0.5"]]}))
        assert run(capsys, "pinv", bad)[0] == EXIT_PARSE

    def test_not_a_direct_sum(self, capsys, fixtures_dir, tmp_path):
        parts = tmp_path / "parts.json"
        parts.write_text(
            json.dumps(
                {
                    "kind": "decomposition",
                    "ambient_dim": 3,
                    "parts": [[[[1, "1"]], [[2, "1"]]], [[[1, "1"], [2, "1"]]]],
                }
            )
        )
        code, _ = run(capsys, "check", fixtures_dir / "identity3.json", parts)
        assert code == EXIT_SEMANTIC

    def test_vector_out_of_range(self, capsys, fixtures_dir, tmp_path):
        vector = tmp_path / "v.json"
        vector.write_text(json.dumps({"kind": "vector", "entries": [[9, "1"]]}))
        code, _ = run(capsys, "apply", fixtures_dir / "identity3.json", vector)
        assert code == EXIT_SEMANTIC

    def test_invalid_utf8(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_bytes(b'{"kind": "matrix", "rows": [["\xff"]]}')
        assert run(capsys, "pinv", bad)[0] == EXIT_PARSE

    def test_negative_tail_copies(self, capsys, fixtures_dir):
        code, _ = run(
            capsys,
            "check",
            fixtures_dir / "phi_operator.json",
            fixtures_dir / "single_decomposition.json",
            "--tail-copies",
            "-1",
        )
        assert code == EXIT_SEMANTIC


def test_scalars_beyond_the_default_digit_limit(capsys, tmp_path):
    digits = "7" * 5000
    source = tmp_path / "big.json"
    source.write_text(json.dumps({"kind": "matrix", "rows": [[digits]]}))
    report = run_machine(capsys, "pinv", source)
    assert report["rows"] == [["1/" + digits]]


@pytest.mark.parametrize(
    "name",
    [
        "skew_matrix.json",
        "skew_pinv.json",
        "skew_rgi.json",
        "skew_decomposition.json",
        "phi_operator.json",
        "phi_pinv.json",
        "phi_system.json",
        "vector_v1.json",
        "identity3.json",
    ],
)
def test_fixtures_reload_unchanged(fixtures_dir, name):
    document = load_document(fixtures_dir / name)
    assert parse_document(dump_document(document)) == document
