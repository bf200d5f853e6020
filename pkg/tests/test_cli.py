import json
from fractions import Fraction as F
import random

import pytest

from wallcf import PowerSeries, moments
from wallcf.cli import EXIT_OK, EXIT_PARSE, EXIT_REPR, JobSpec, ParseError, main, parse_document, run
from wallcf.oracle import random_measure


def cli(tmp_path, capsys, text, *argv):
    src = tmp_path / "in.txt"
    src.write_text(text)
    code = main([argv[0], "--input", str(src), *argv[1:]])
    return code, capsys.readouterr().out


class TestParsing:
    def test_headerless_is_moments(self):
        doc = parse_document("# uniform\n1, 1/2, 1/3\n")
        assert doc.kind == "moments" and doc.value == PowerSeries([1, F(1, 2), F(1, 3)])

    def test_all_kinds(self):
        assert parse_document("sfrac 3\n1 1/2 1/6").value.alpha == (1, F(1, 2), F(1, 6))
        j = parse_document("jfrac p=1 q=1 c=2\ngamma: 1/2, 1/2\nbeta: 1/12\n")
        assert j.scale == 2 and j.value.beta == (F(1, 12),)
        w = parse_document("wall c=1 n=2\n1/2 1/3  # trailing comment")
        assert w.value.g == (F(1, 2), F(1, 3))

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "1, 0.5",
            "moments 3\n1 2",
            "moments x\n1",
            "wall n=2\n1/2 1/2",
            "wall c=1 n=1\n3/2",
            "jfrac p=0 q=1\ngamma: 1\n",
            "jfrac p=0 q=0\ndelta: 1\n",
            "sfrac 0\n",
        ],
    )
    def test_bad_input(self, text):
        with pytest.raises(ParseError):
            parse_document(text)


class TestCommands:
    def test_classify_uniform(self, tmp_path, capsys):
        code, out = cli(tmp_path, capsys, "1, 1/2, 1/3, 1/4", "classify", "--format", "json")
        rec = json.loads(out)
        assert code == EXIT_OK
        assert rec["class"] == "HausdorffConsistent"
        assert rec["wall"]["g"] == ["1/2", "1/3", "1/2"]

    def test_convert_factorial_to_wall(self, tmp_path, capsys):
        code, out = cli(tmp_path, capsys, "1, 1, 2, 6, 24", "convert", "--to", "wall", "--format", "json")
        rec = json.loads(out)
        assert code == EXIT_OK
        assert rec["verdict"] == "RejectedDegenerateDivision" and rec["index"] == 2

    def test_wall_to_moments(self, tmp_path, capsys):
        code, out = cli(tmp_path, capsys, "wall c=1 n=3\n1 0 0\n", "convert", "--to", "moments")
        assert code == EXIT_OK
        assert parse_document(out).value == PowerSeries([1, 1, 1, 1])

    def test_not_representable_exit_code(self, tmp_path, capsys):
        code, out = cli(tmp_path, capsys, "1 0 1 0 1", "convert", "--to", "sfrac")
        assert code == EXIT_REPR
        assert "NotSFractionRepresentable" in out and "level: 1" in out

    def test_uncontraction_breakdown_exit_code(self, tmp_path, capsys):
        code, out = cli(tmp_path, capsys, "jfrac p=0 q=1\ngamma: 0\nbeta: 1", "convert", "--to", "sfrac")
        assert code == EXIT_REPR and "UncontractionBreakdown" in out

    def test_parse_error_exit_code(self, tmp_path, capsys):
        code, out = cli(tmp_path, capsys, "1, 0.25", "classify")
        assert code == EXIT_PARSE

    def test_missing_file(self, tmp_path):
        code, _ = run(JobSpec("classify", input=str(tmp_path / "nope.txt")))
        assert code == EXIT_PARSE

    def test_bad_order(self):
        assert main(["classify", "--order", "-1"]) == EXIT_PARSE

    def test_nonpositive_a0(self, tmp_path, capsys):
        code, _ = cli(tmp_path, capsys, "0, 1", "classify")
        assert code == EXIT_REPR

    def test_gparams(self, tmp_path, capsys):
        code, out = cli(tmp_path, capsys, "1, 1/2, 1/3", "gparams", "--format", "json")
        rec = json.loads(out)
        assert rec["agree"] is True
        assert rec["proof_route"]["alpha_prime"] == ["1", "1", "1/2", "1/2", "1/3", "2/3"]

    def test_oracle(self, tmp_path, capsys):
        code, out = cli(tmp_path, capsys, "1 2 4 8", "oracle", "--format", "json")
        rec = json.loads(out)
        assert rec["completely_monotone"] is False and rec["cm_violation"] == [1, 0]
        assert rec["hankel"]["dets_H0"] == ["1", "0"]

    def test_demo(self, capsys):
        assert main(["demo", "--seed", "5", "--format", "json"]) == EXIT_OK
        rec = json.loads(capsys.readouterr().out)
        assert rec["catalan"]["moments"][:6] == ["1", "1", "2", "5", "14", "42"]
        assert rec["factorial"]["class"] == "StieltjesConsistentOnly"
        assert rec["random_measure"]["routes_agree"] is True

    def test_xi_shift(self, tmp_path, capsys):
        code, out = cli(tmp_path, capsys, "1 1 1 1", "convert", "--to", "moments", "--xi", "1")
        assert parse_document(out).value == PowerSeries([1, 2, 4, 8])
        jf = "jfrac p=1 q=2\ngamma: 0 0\nbeta: 1 0"
        code, out = cli(tmp_path, capsys, jf, "convert", "--to", "jfrac", "--xi", "1")
        assert parse_document(out).value.gamma == (1, 1)

    def test_order_never_pads(self, tmp_path, capsys):
        code, out = cli(tmp_path, capsys, "sfrac 3\n1 1/2 1/3", "convert", "--to", "moments", "--order", "9")
        assert len(parse_document(out).value) == 3
        assert "exceeds determined order" in out
        # a terminating fraction determines every order
        code, out = cli(tmp_path, capsys, "sfrac 3\n1 1/2 0", "convert", "--to", "moments", "--order", "5")
        assert parse_document(out).value == PowerSeries([F(1, 2**n) for n in range(6)])

    def test_output_file(self, tmp_path):
        src = tmp_path / "in.txt"
        src.write_text("1 1/2 1/3")
        dst = tmp_path / "out.txt"
        assert main(["convert", "-i", str(src), "-o", str(dst), "--to", "sfrac"]) == EXIT_OK
        assert parse_document(dst.read_text()).value.alpha == (1, F(1, 2), F(1, 6))


def _roundtrip_cases():
    rng = random.Random(7)
    cases = [PowerSeries([F(1, n + 1) for n in range(9)]), PowerSeries([1] * 6)]
    for _ in range(12):
        cases.append(moments(random_measure(rng, 0, 1, max_atoms=6), rng.randint(1, 10)))
    return cases


@pytest.mark.parametrize("a", _roundtrip_cases())
@pytest.mark.parametrize("target", ["sfrac", "jfrac", "wall"])
def test_cli_roundtrip(a, target):
    text = "moments %d\n%s\n" % (len(a), " ".join(str(x) for x in a))
    code, converted = run(JobSpec("convert", to=target), stdin_text=text)
    assert code == EXIT_OK
    code, back = run(JobSpec("convert", to="moments"), stdin_text=converted)
    assert code == EXIT_OK
    b = parse_document(back).value
    m = min(a.order, b.order)
    assert b.truncate(m) == a.truncate(m)
    assert m >= a.order - (1 if target == "jfrac" else 0)
    # and back again lands on the same representation
    code, again = run(JobSpec("convert", to=target), stdin_text=back)
    assert parse_document(again).value == parse_document(converted).value


def test_deterministic_output():
    text = "1 1/2 1/3 1/4 1/5"
    jobs = [
        JobSpec(cmd, to="jfrac" if cmd == "convert" else None, format=fmt)
        for cmd in ("convert", "classify", "gparams", "oracle")
        for fmt in ("text", "json")
    ]
    first = [run(job, stdin_text=text) for job in jobs]
    assert first == [run(job, stdin_text=text) for job in jobs]
