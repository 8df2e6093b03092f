import csv
import io
import json
from fractions import Fraction as F

import pytest

from tribin import (
    DigitCode,
    MalformedCodeError,
    TribinConfig,
    check_well_defined,
    eval_f,
    level_set_classify,
    level_set_cylinders,
    monotonicity_witness,
    variation_growth_schedule,
    variation_report,
)
from tribin.cli import format_decimal, parse_code, parse_prefix, plot_rows, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def call_json(*argv):
    status, out, _ = call(*argv, "--json")
    return status, json.loads(out)


def test_parse_code_grammar():
    assert parse_code("1,2:(0)", 3) == DigitCode.make(3, [1, 2], [0])
    assert parse_code("(1)", 3) == parse_code(":(1)", 3) == DigitCode.make(3, [], [1])
    assert parse_code("0,1:(2,0,2,0)", 3) == DigitCode.make(3, [0, 1], [2, 0])
    for bad in ["1,2", "1:(", "(", "()", "1,:(0)", "a:(0)"]:
        with pytest.raises(MalformedCodeError):
            parse_code(bad, 3)
    assert parse_prefix("1,2", 3).digits == (1, 2)
    assert parse_prefix("", 3).digits == ()


def test_documented_invocations():
    status, out, _ = call("eval", "--s", "3", "--a0", "0,1", "--code", "(1)")
    assert status == 0 and out.splitlines()[0] == "0/1"
    status, out, _ = call("check", "--s", "3", "--a0", "0,1", "--rule", "7", "--max-rank", "1")
    assert status != 0
    assert "2:(0)" in out and "1:(2)" in out and "5/6" in out and "1/6" in out
    status, out, _ = call("variation", "--s", "3", "--a0", "0,1", "--max-rank", "2", "--method", "both")
    assert status == 0 and "W_1 = 3/2" in out and "W_2 = 9/4" in out


@pytest.mark.parametrize(
    "argv,message",
    [
        (["eval", "--code", "1,2"], "parentheses"),
        (["eval", "--code", "3:(0)"], "digit 3"),
        (["eval", "--a0", "0,1,2", "--code", "(0)"], "nonempty"),
        (["eval", "--a0", "", "--code", "(0)"], "nonempty"),
        (["eval", "--arg-weights", "1/2,1/2,1/2", "--code", "(0)"], "sum to 1"),
        (["eval", "--val-weights", "0,1", "--code", "(0)"], "positive"),
        (["variation", "--max-rank", "16", "--method", "brute"], "guard"),
        (["growth", "--n", "5", "--max-rank", "4"], "doublings"),
    ],
)
def test_errors_are_one_line(argv, message):
    status, out, err = call(*argv)
    assert status == 2 and out == ""
    assert len(err.strip().splitlines()) == 1 and message in err


def test_json_round_trip_eval(cfg0):
    status, doc = call_json("eval", "--code", "1:(0)")
    assert doc["command"] == "eval" and doc["config"]["a0"] == [0, 1]
    code = parse_code(doc["result"]["code"], 3)
    assert F(doc["result"]["value"]) == eval_f(cfg0, code) == F(1, 2)


def test_json_round_trip_check():
    status, doc = call_json("check", "--rule", "7", "--max-rank", "2")
    report = check_well_defined(TribinConfig.build(rule=7), 2)
    r = doc["result"]
    assert status == 1 and r["ok"] is False
    assert [parse_code(c, 3) for c in r["codes"]] == [report.code, report.dual]
    assert [F(v) for v in r["values"]] == [report.value, report.dual_value]
    status, doc = call_json("check", "--max-rank", "3")
    assert status == 0 and doc["result"] == {"ok": True, "checked": check_well_defined(TribinConfig.build(), 3).checked}


def test_json_round_trip_witness_and_image(cfg0):
    _, doc = call_json("witness", "--base", "2")
    w = monotonicity_witness(cfg0, [2])
    assert [parse_code(c, 3) for c in doc["result"]["codes"]] == list(w.codes)
    assert [F(v) for v in doc["result"]["values"]] == list(w.values)
    _, doc = call_json("image", "--base", "1,2")
    assert doc["result"]["image"] == "0,1"
    assert (F(doc["result"]["min"]), F(doc["result"]["max"])) == (F(1, 4), F(1, 2))


def test_json_round_trip_levelset(cfg0):
    _, doc = call_json("levelset", "--beta", "0,1")
    assert [parse_prefix(c, 3) for c in doc["result"]["cylinders"]] == level_set_cylinders(cfg0, [0, 1])
    _, doc = call_json("levelset", "--beta-code", "(0)", "--rank", "2")
    report = level_set_classify(cfg0, DigitCode.make(2, [], [0]), rank=2)
    assert doc["result"]["classification"] == "finite"
    assert tuple(parse_code(c, 3) for c in doc["result"]["points"]) == report.points
    assert tuple(parse_prefix(c, 3) for c in doc["result"]["rank_cylinders"]) == report.rank_cylinders
    _, doc = call_json("levelset", "--beta-code", "(0,1)")
    assert doc["result"]["classification"] == "continuum"
    status, _, err = call("levelset", "--beta", "0", "--beta-code", "(0)")
    assert status == 2 and "exactly one" in err


def test_json_round_trip_variation_and_growth(cfg0):
    _, doc = call_json("variation", "--max-rank", "5", "--method", "dp", "--val-weights", "1/3,2/3")
    cfg = TribinConfig.build(val_weights=["1/3", "2/3"])
    assert tuple(F(w) for w in doc["result"]["W"]) == variation_report(cfg, 5).values
    _, doc = call_json("growth", "--n", "3", "--max-rank", "12")
    report = variation_growth_schedule(cfg0, 3, 12)
    assert tuple(doc["result"]["growth_schedule"]) == report.growth_schedule == (2, 4, 6)
    assert tuple(F(w) for w in doc["result"]["W"]) == report.values


def test_plot_csv(tmp_path, cfg0):
    path = tmp_path / "f.csv"
    status, out, _ = call("plot", "--rank", "3", "--out", str(path))
    assert status == 0 and "54 rows" in out
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["x", "f"]
    body = [(F(x), F(y)) for x, y in rows[1:]]
    assert len(body) == 2 * 3**3
    exact = plot_rows(cfg0, 3)
    for (x, y), (ex, ey) in zip(body, exact):
        assert abs(x - ex) <= F(1, 2 * 10**15) and abs(y - ey) <= F(1, 2 * 10**15)
    # duplicated x values are shared endpoints and carry equal f values
    for (x0, y0), (x1, y1) in zip(exact, exact[1:]):
        assert x0 <= x1
        if x0 == x1:
            assert y0 == y1


def test_plot_to_stdout():
    status, out, _ = call("plot", "--rank", "1")
    lines = out.splitlines()
    assert lines[0] == "x,f" and len(lines) == 7
    assert lines[1] == "0.000000000000000,0.000000000000000"


def test_format_decimal():
    assert format_decimal(F(1, 3), 15) == "0.333333333333333"
    assert format_decimal(F(2, 3), 3) == "0.667"
    assert format_decimal(F(0), 4) == "0.0000"
    assert format_decimal(F(1), 2) == "1.00"
