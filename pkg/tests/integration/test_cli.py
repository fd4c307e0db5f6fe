"""
End-to-end tests of the command-line interface.

Every test runs ``main`` in-process and checks exit codes, the JSON payload
and the provenance each answer carries.
"""

import json
import runpy
import sys

import pytest

from solvmanifold_kit import __version__
from solvmanifold_kit.cli import create_cli_parser, create_command_router
from solvmanifold_kit.utilities.constants import EXIT_INFEASIBLE, EXIT_OK, EXIT_PARSE_ERROR


class TestArgumentParsing:
    """Test cases for the argument parser and router wiring."""

    def test_every_command_is_routed(self):
        """Each subcommand has a router entry."""
        parser = create_cli_parser()
        router = create_command_router()
        names = set(parser.subparsers.choices)
        assert names == set(router.get_available_commands())
        assert names == {
            "algebra",
            "classify",
            "metrics",
            "cohomology",
            "nakamura",
            "lattice",
            "tables",
        }

    def test_global_options_after_command(self):
        """--format is accepted after the command name too."""
        args = create_cli_parser().parse_args(["lattice", "--s=2", "--n=3", "--format", "json"])
        assert args.output_format == "json"

    def test_global_options_before_command(self):
        args = create_cli_parser().parse_args(["--format", "json", "lattice", "--s=2", "--n=3"])
        assert args.output_format == "json"
        assert (args.s, args.n) == (2, 3)

    def test_negative_values_with_equals(self):
        """Negative scalars are passed as --flag=value."""
        args = create_cli_parser().parse_args(["classify", "--A=-1", "--B=-1/2", "--eps=0"])
        assert (args.A, args.B, args.eps) == ("-1", "-1/2", 0)

    def test_version(self, run_cli):
        code, out, _ = run_cli("--version")
        assert code == EXIT_OK
        assert __version__ in out

    def test_no_command_prints_help(self, run_cli):
        code, out, _ = run_cli()
        assert code == EXIT_OK
        assert "solvmanifold-kit" in out


class TestExitCodes:
    """Test cases for the 0 / 1 / 2 exit status contract."""

    def test_success(self, run_cli):
        code, _, _ = run_cli("lattice", "--s=2", "--n=3")
        assert code == EXIT_OK

    def test_argparse_error_is_parse_error(self, run_cli):
        """A missing required flag exits with 2."""
        code, _, err = run_cli("lattice", "--s=2")
        assert code == EXIT_PARSE_ERROR
        assert "--n" in err

    def test_scalar_parse_error(self, run_cli):
        """Malformed complex scalars are parse errors."""
        code, _, err = run_cli("classify", "--A=1+", "--B=0")
        assert code == EXIT_PARSE_ERROR
        assert err

    def test_out_of_range_is_validation_error(self, run_cli_json):
        """s = 0 is rejected before any computation."""
        code, payload = run_cli_json("lattice", "--s=0", "--n=3")
        assert code == EXIT_PARSE_ERROR
        assert payload["status"] == "validation_error"
        assert "nonzero" in payload["error_message"]

    def test_degenerate_structure_is_rejected(self, run_cli):
        """A = B = 0 with eps = 0 is the trivial action."""
        code, _, _ = run_cli("classify", "--A=0", "--B=0", "--eps=0")
        assert code == EXIT_PARSE_ERROR

    def test_infeasible_certificate(self, run_cli_json):
        """The Kodaira-Thurston family carries no Kähler metric."""
        code, payload = run_cli_json("metrics", "--family", "KT", "--kind", "kahler", "--exists")
        assert code == EXIT_INFEASIBLE
        assert payload["status"] == "infeasible"
        assert payload["data"]["certificates"][0]["feasible"] is False

    def test_algebra_check_fails_on_non_unimodular(self, run_cli):
        code, _, err = run_cli("algebra", "--parse", "(0,e^{12},e^{13})", "--check")
        assert code == EXIT_INFEASIBLE
        assert "unimodularity" in err

    def test_algebra_check_passes_on_nilpotent(self, run_cli_json):
        code, payload = run_cli_json("algebra", "--parse", "(0,0,0,e^{12},e^{13},e^{23})", "--check")
        assert code == EXIT_OK
        assert payload["data"]["jacobi"] is True
        assert payload["data"]["unimodular"] is True


class TestCommandAnswers:
    """Test cases for the answers of individual commands."""

    def test_classify_eps_zero_row(self, run_cli_json):
        """A = -1, B = -1/2, eps = 0 rescales to b = -1/3 and lands on s11^{1/3}."""
        code, payload = run_cli_json("classify", "--A=-1", "--B=-1/2", "--eps=0")
        assert code == EXIT_OK
        data = payload["data"]
        assert data["label"]["label"] == "s11^{1/3}"
        assert payload["provenance"] == data["provenance"]
        assert "B real" in payload["provenance"]
        assert data["equations"][2] == "d w3 = 0"

    def test_classify_kt_family(self, run_cli_json):
        code, payload = run_cli_json("classify", "--family", "KT")
        assert code == EXIT_OK
        assert payload["data"]["label"]["label"] == "s1"

    def test_nakamura_ddbar_fails_for_even_class(self, run_cli_json):
        """C = i/2 is of the form i/k, so the ∂∂̄-lemma fails."""
        code, payload = run_cli_json("nakamura", "--ddbar", "--C=i/2")
        assert code == EXIT_OK
        assert payload["data"]["ddbar_lemma"] is False
        assert payload["data"]["expected"] is False
        assert "∂∂̄-lemma" in payload["provenance"]

    def test_nakamura_ddbar_holds_for_generic_c(self, run_cli_json):
        code, payload = run_cli_json("nakamura", "--ddbar", "--C=1+i")
        assert code == EXIT_OK
        assert payload["data"]["ddbar_lemma"] is True

    def test_nakamura_deformation_restores_lemma(self, run_cli_json):
        """k = 0 (C = i) with the default t = 1/2."""
        code, payload = run_cli_json("nakamura", "--deform", "--k", "0")
        assert code == EXIT_OK
        summary = payload["data"]["summary"]
        assert summary["ddbar_lemma_t0"] is False
        assert summary["ddbar_lemma_t"] is True
        assert summary["matches_reference"] is True

    def test_nakamura_deform_needs_k(self, run_cli):
        code, _, _ = run_cli("nakamura", "--deform")
        assert code == EXIT_PARSE_ERROR

    def test_nakamura_modes_are_exclusive(self, run_cli):
        code, _, _ = run_cli("nakamura", "--ddbar", "--unstable", "--C=i")
        assert code == EXIT_PARSE_ERROR

    def test_lattice_certificate(self, run_cli_json):
        """(s, n) = (2, 3): charpoly (λ² - 3λ + 1)²."""
        code, payload = run_cli_json("lattice", "--s=2", "--n=3")
        assert code == EXIT_OK
        data = payload["data"]
        assert data["charpoly"] == [1, -6, 11, -6, 1]
        assert data["D"] == 5
        assert data["det_Bs"] == 1
        assert payload["provenance"]

    def test_lattice_text_output(self, run_cli):
        code, out, _ = run_cli("lattice", "--s=2", "--n=3")
        assert code == EXIT_OK
        assert "λ^4 - 6*λ^3 + 11*λ^2 - 6*λ + 1" in out
        assert "provenance:" in out

    def test_cohomology_de_rham_of_nakamura(self, run_cli_json):
        code, payload = run_cli_json("cohomology", "--C=i", "--theory", "de_rham")
        assert code == EXIT_OK
        dims = [cell["dim"] for cell in payload["data"]["cells"]]
        assert dims == [1, 2, 5, 8, 5, 2, 1]

    def test_env_format_override(self, run_cli, monkeypatch):
        """SOLVKIT_FORMAT=json switches the output without a flag."""
        monkeypatch.setenv("SOLVKIT_FORMAT", "json")
        code, out, _ = run_cli("lattice", "--s=1", "--n=3")
        assert code == EXIT_OK
        assert json.loads(out)["data"]["charpoly"] == [1, -6, 7, 6, 1]


class TestTables:
    """Test cases for table regeneration."""

    def test_json_is_deterministic(self, run_cli):
        """Two runs give byte-identical JSON."""
        first = run_cli("--format", "json", "tables", "--only", "classification")
        second = run_cli("--format", "json", "tables", "--only", "classification")
        assert first[0] == EXIT_OK
        assert first[1] == second[1]

    def test_classification_section(self, run_cli_json):
        code, payload = run_cli_json("tables", "--only", "classification")
        assert code == EXIT_OK
        tables = payload["data"]["classification"]["tables"]
        assert len(tables) == 6
        first = tables[0]
        assert first["table"] == "eps=0"
        labels = [row["label"] for row in first["rows"]]
        assert labels[0] == "s2"
        assert labels[2] == labels[4] == "s12"
        assert tables[-1]["rows"][0]["label"] == "s1"

    def test_fixtures_are_written(self, run_cli, tmp_path):
        code, _, _ = run_cli(
            "--format", "json", "tables", "--only", "classification", "--fixtures", str(tmp_path)
        )
        assert code == EXIT_OK
        fixture = tmp_path / "classification.json"
        assert fixture.exists()
        assert json.loads(fixture.read_text(encoding="utf-8"))["tables"]

    def test_sweep_section(self, run_cli_json):
        code, payload = run_cli_json(
            "tables", "--only", "classification", "--sweep", "--samples", "15", "--seed", "7"
        )
        assert code == EXIT_OK
        sweep = payload["data"]["sweep"]
        assert sweep["samples"] == 15
        assert sweep["canonical_criterion_holds"] is True
        assert sweep["canonical_violations"] == []
        assert all(sweep["canonical_witnesses"].values())

    @pytest.mark.slow
    def test_all_tables_match_reference(self, run_cli_json):
        """Every regenerated table agrees with the reference data."""
        code, payload = run_cli_json("tables", "--all")
        assert code == EXIT_OK
        data = payload["data"]
        assert data["matches_reference"] is True
        assert set(data) >= {
            "classification",
            "metrics",
            "dolbeault",
            "deformation",
            "representatives",
        }
        assert len(data["deformation"]["summaries"]) == 6


class TestModuleEntryPoint:
    """Test cases for running the package with ``python -m``."""

    def test_module_exits_with_command_status(self, monkeypatch, capsys):
        monkeypatch.setattr(sys, "argv", ["solvmanifold-kit", "lattice", "--s=2", "--n=3", "--format", "json"])
        with pytest.raises(SystemExit) as exc_info:
            runpy.run_module("solvmanifold_kit", run_name="__main__")
        assert exc_info.value.code == EXIT_OK
        assert json.loads(capsys.readouterr().out)["command"] == "lattice"

    def test_module_reports_parse_errors(self, monkeypatch):
        monkeypatch.setattr(sys, "argv", ["solvmanifold-kit", "classify", "--A=1+", "--B=0", "--eps=1"])
        with pytest.raises(SystemExit) as exc_info:
            runpy.run_module("solvmanifold_kit", run_name="__main__")
        assert exc_info.value.code == EXIT_PARSE_ERROR
