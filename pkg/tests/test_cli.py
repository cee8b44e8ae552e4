import io
import json
from fractions import Fraction

import pytest

from ucelab.center import CenterClass
from ucelab.cli.main import psi_table, run_command
from ucelab.cli.output import load_document
from ucelab.cli.parser import BinOp, Pow, Sym, elaborate, parse_expr, parse_param, pretty
from ucelab.errors import NegativeUExponent, ParseError
from ucelab.exact import A, ParamPoly
from ucelab.superelliptic import AlgebraElement, quadratic, quartic

QUAD = quadratic()

CORPUS = [
    "x^2*u - 3/2*x^-1",
    "x",
    "-x + u",
    "(x + 1)^3",
    "a*x^2 - a^2*u",
    "x/3/2",
    "(x - u)*(x + u)",
    "-(x^-2*u) + 7",
    "2*(a + 1)*x^5",
    "x - (u - x)",
    "x^-1*u",
    "1/2 - x/4",
]


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


class TestParser:
    def test_two_term_ast(self):
        node = parse_expr("x^2*u - 3/2*x^-1")
        assert isinstance(node, BinOp) and node.op == "-"
        assert node.left == BinOp("*", Pow(Sym("x"), 2), Sym("u"))
        assert node.right.right == Pow(Sym("x"), -1)

    @pytest.mark.parametrize("text", CORPUS)
    def test_round_trip(self, text):
        tree = parse_expr(text)
        assert parse_expr(pretty(tree)) == tree
        assert pretty(parse_expr(pretty(tree))) == pretty(tree)

    @pytest.mark.parametrize("text", CORPUS)
    def test_round_trip_preserves_value(self, text):
        assert elaborate(parse_expr(pretty(parse_expr(text))), QUAD) == elaborate(parse_expr(text), QUAD)

    def test_whitespace_insensitive(self):
        assert parse_expr(" x ^ 2 *  u ") == parse_expr("x^2*u")

    @pytest.mark.parametrize("text,offset", [("x^^2", 2), ("x +", 3), ("(x", 2), ("x $ 1", 2), ("3/0", 2)])
    def test_error_offsets(self, text, offset):
        with pytest.raises(ParseError) as info:
            parse_expr(text)
        assert info.value.position == offset
        assert f"offset {offset}" in str(info.value)

    def test_u_squared(self):
        assert elaborate(parse_expr("u^2"), QUAD) == AlgebraElement(QUAD.P)

    def test_negative_u_power(self):
        with pytest.raises(NegativeUExponent):
            elaborate(parse_expr("u^-1"), QUAD)

    def test_division_by_nonconstant(self):
        with pytest.raises(ParseError):
            elaborate(parse_expr("1/x"), QUAD)

    def test_parse_param(self):
        assert parse_param("a/2 - a^3/2") == (A - A ** 3).scale(Fraction(1, 2))
        assert parse_param("3*c^2/2", "c") == (A * A).scale(Fraction(3, 2))
        assert parse_param("0") == ParamPoly()


class TestOutput:
    @pytest.mark.parametrize("curve", [quadratic(), quartic()], ids=["quadratic", "quartic"])
    def test_json_round_trip(self, curve):
        doc = psi_table(curve, 2, -2, 2)
        back = load_document(doc.to_json())
        assert [v for _, v in back.rows] == [v for _, v in doc.rows]
        assert [k for k, _ in back.rows] == [k for k, _ in doc.rows]

    def test_csv_and_markdown_shape(self):
        doc = psi_table(QUAD, 1, -1, 1)
        lines = doc.to_csv().splitlines()
        assert lines[0] == "r,s,n,omega0,omega1,omega2"
        assert len(lines) == 1 + 9
        md = doc.to_markdown().splitlines()
        assert md[-1].startswith("| 1 | 1 | 2 |") and md[-1].endswith("a/2 - a^3/2 |")

    def test_load_rejects_other_documents(self):
        with pytest.raises(ValueError):
            load_document(json.dumps({"kind": "other"}))

    def test_table_matches_reference_cells(self):
        half = ParamPoly([1, 0, -1]).scale(Fraction(1, 2))
        ref = {
            (1, -1): [0, 1, -A],
            (1, -2): [0, -A, 1],
            (1, 0): [0, 0, half],
            (1, 1): [0, 0, half * A],
            (2, -2): [0, 8 + 6 * A * A, -14 * A],
            (2, -1): [0, -6 * A, 4 + 2 * A * A],
            (2, 0): [0, 0, A - A ** 3],
        }
        doc = psi_table(QUAD, 2, -2, 1)
        cells = {(k["r"], k["s"]): v for k, v in doc.rows}
        assert len(cells) == 5 * 4
        for key, coords in ref.items():
            assert cells[key] == CenterClass.from_coords([ParamPoly.coerce(c) for c in coords])


class TestCommands:
    def test_psi_prints_omega2_coefficient(self):
        code, out, _ = run("psi", "--r", "1", "--s", "1")
        assert code == 0
        assert out.splitlines()[-1] == "| e_1 | f_1 | 0 | 0 | a/2 - a^3/2 |"

    def test_psi_kinds(self):
        code, out, _ = run("psi", "--r", "1", "--s", "-1", "--kind", "ee", "--format", "csv")
        assert code == 0 and out.splitlines()[1] == "e_1,e_-1,1,0,0"

    def test_reduce_u_is_zero(self):
        code, out, _ = run("reduce", "--curve", "quadratic", "--expr", "u", "--format", "json")
        assert code == 0
        doc = load_document(out)
        assert doc.rows[0][1].is_zero()

    def test_reduce_custom_curve(self):
        code, out, _ = run("reduce", "--curve", "coeffs", "1,0,-2*a,0,1", "--expr", "x^5", "--format", "csv")
        assert code == 0 and out.splitlines()[1] == "x^5,0,0,0,-1/2 + 3*a^2/2,0"

    def test_psi_table(self):
        code, out, _ = run("psi-table", "--rmax", "2", "--smax", "2", "--format", "json")
        assert code == 0 and len(load_document(out).rows) == 25

    def test_snf(self):
        code, out, _ = run("snf", "--l", "1", "--j", "2", "--k", "1", "--m", "2", "--r", "2")
        assert code == 0 and out.strip().endswith("= 4 - 2*c")

    def test_report(self, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run("report", "palindromic", "--degree", "6", "--output", str(target))
        assert code == 0 and "omega4" in out
        assert json.loads(target.read_text())["degree"] == 6

    def test_verify_pass(self):
        code, out, _ = run("verify", "antiderivative", "--max-n", "100")
        assert code == 0 and out.startswith("PASS antiderivative")

    def test_verify_failure_exit_code(self):
        code, out, _ = run("verify", "snf")
        assert code == 1
        assert "FAIL snf" in out and "exactly one" in out

    @pytest.mark.parametrize("argv", [
        ["reduce", "--expr", "x^^2"],
        ["reduce", "--curve", "cubic", "--expr", "x"],
        ["reduce", "--curve", "coeffs", "1,2", "--expr", "x"],  # 1 + 2x is not monic
        ["report", "palindromic", "--degree", "5"],
        ["snf", "--l", "3", "--j", "1", "--k", "1", "--m", "3", "--r", "2"],
        ["psi", "--r", "one", "--s", "1"],
        ["verify", "nothing"],
        [],
    ])
    def test_usage_errors(self, argv):
        code, _, err = run(*argv)
        assert code == 2 and err
