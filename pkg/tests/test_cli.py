import json

import pytest

from tuttekit.cli import EXIT_CAPACITY, EXIT_OK, EXIT_USAGE, format_poly, main
from tuttekit.poly import MultiPoly
from tuttekit.tables import parse_poly_terms


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFormatting:
    def test_ascending_with_explicit_separators(self):
        p = parse_poly_terms("x^2+2y^2+4x+4y+3", ("x", "y"))
        assert format_poly(p) == "3+4y+4x+2y^2+x^2"

    def test_negative_coefficients(self):
        p = parse_poly_terms("-48+32 q-9 q^2+q^3", ("q",))
        assert format_poly(p) == "-48+32q-9q^2+q^3"

    def test_zero(self):
        assert format_poly(MultiPoly.zero(("x", "y"))) == "0"


class TestCompute:
    def test_bruteforce_json(self, capsys):
        code, out, _ = run(
            capsys,
            "compute", "--system", "C:2:integer", "--method", "bruteforce",
            "--output", "json",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        poly = MultiPoly.from_json_dict(payload["polynomial"])
        assert poly == parse_poly_terms("x^2+2y^2+4x+4y+3", ("x", "y"))
        assert payload["rank"] == 2

    @pytest.mark.parametrize("method", ["bruteforce", "genfun", "graphs", "finitefield"])
    def test_every_method_agrees(self, capsys, method):
        code, out, _ = run(
            capsys,
            "compute", "--system", "B:2:weight", "--method", method,
            "--output", "json",
        )
        assert code == EXIT_OK
        poly = MultiPoly.from_json_dict(json.loads(out)["polynomial"])
        assert poly == parse_poly_terms("3+4x+x^2+4y+2y^2", ("x", "y"))

    def test_method_all_reports_agreement(self, capsys):
        code, out, _ = run(capsys, "compute", "--system", "A:3:weight", "--method", "all")
        assert code == EXIT_OK
        assert "agreement: yes" in out

    def test_bad_system_is_usage_error(self, capsys):
        code, _, err = run(capsys, "compute", "--system", "E:6:integer")
        assert code == EXIT_USAGE
        assert "usage" in err

    def test_capacity_exit_code(self, capsys):
        code, _, err = run(
            capsys, "compute", "--system", "B:6:integer", "--method", "graphs"
        )
        assert code == EXIT_CAPACITY


class TestVerify:
    def test_verify_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--system", "A:3:weight")
        assert code == EXIT_OK
        assert "fail" not in out

    def test_verify_deterministic(self, capsys):
        _, first, _ = run(capsys, "verify", "--system", "C:2:root", "--output", "json")
        _, second, _ = run(capsys, "verify", "--system", "C:2:root", "--output", "json")
        assert first == second


class TestTable:
    def test_weight_rows_match_fixtures(self, capsys):
        from tuttekit.tables import weight_tutte_fixture

        code, out, _ = run(
            capsys, "table", "--lattice", "weight", "--max-n", "4", "--output", "json"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        rows = {r["row"]: r for r in payload["rows"]}
        for row in ["A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D2", "D3", "D4"]:
            fx = weight_tutte_fixture(row)
            assert MultiPoly.from_json_dict(rows[row]["tutte"]) == fx.poly

    def test_char_ehrhart_report(self, capsys):
        code, out, _ = run(
            capsys, "table", "--max-n", "2", "--report", "char,ehrhart"
        )
        assert code == EXIT_OK
        assert "-2+q" in out and "1+2t" in out


class TestInvariantsVerb:
    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "invariants", "--system", "C:2:integer")
        assert code == EXIT_OK
        assert "volume: 14" in out
        assert "lattice_points: 21" in out
        assert "interior_points: 9" in out


class TestFixturesVerb:
    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "fixtures", "--output", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert len(payload["fixtures"]) == 48
        for entry in payload["fixtures"]:
            MultiPoly.from_json_dict(entry["polynomial"])  # decodes cleanly

    def test_partial_row_marked(self, capsys):
        _, out, _ = run(capsys, "fixtures")
        assert "B5 weight-tutte [partial]" in out
