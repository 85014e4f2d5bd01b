import json

import pytest

from multisums.cli import CommandOutcome, main, run


def run_main(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_partitions_list_golden(capsys):
    code, out, _ = run_main(capsys, ["partitions", "list", "4"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines == [
        '{"m":4,"y":[4,0,0,0],"length":4,"parity":"even"}',
        '{"m":4,"y":[2,1,0,0],"length":3,"parity":"odd"}',
        '{"m":4,"y":[0,2,0,0],"length":2,"parity":"even"}',
        '{"m":4,"y":[1,0,1,0],"length":2,"parity":"even"}',
        '{"m":4,"y":[0,0,0,1],"length":1,"parity":"odd"}',
    ]


def test_partitions_count(capsys):
    code, out, _ = run_main(capsys, ["partitions", "count", "10"])
    assert code == 0
    assert json.loads(out) == {"m": 10, "count": 42}


def test_multisum_eval_both(capsys):
    code, out, _ = run_main(
        capsys,
        [
            "multisum", "eval",
            "--spec", '{"kind":"index_power","exponent":1}',
            "--m", "2", "--q", "1", "--n", "4",
            "--method", "both",
        ],
    )
    assert code == 0
    assert out.strip() == '{"brute":"35/1","reduced":"35/1","equal":true}'


def test_multisum_eval_explicit_spec(capsys):
    code, out, _ = run_main(
        capsys,
        [
            "multisum", "eval",
            "--spec", '{"kind":"explicit","base":1,"values":["1/2","2/3","3/4"]}',
            "--m", "2", "--q", "1", "--n", "3",
            "--method", "reduce",
        ],
    )
    assert code == 0
    payload = json.loads(out)
    # e2 of 1/2, 2/3, 3/4 = 1/3 + 3/8 + 1/2
    assert payload == {"reduced": "29/24"}


def test_multisum_eval_negative_m_rejected(capsys):
    code, out, err = run_main(
        capsys,
        [
            "multisum", "eval",
            "--spec", '{"kind":"index_power","exponent":1}',
            "--m", "-1", "--q", "1", "--n", "4",
        ],
    )
    assert code == 2
    assert json.loads(out) == {"error": "m must be >= 0"}
    assert "error" in err


def test_multisum_brute_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("MULTISUM_MAX_M", "3")
    argv = [
        "multisum", "eval",
        "--spec", '{"kind":"index_power","exponent":1}',
        "--m", "4", "--q", "1", "--n", "6",
        "--method", "brute",
    ]
    code, out, _ = run_main(capsys, argv)
    assert code == 2
    assert "cap 3" in json.loads(out)["error"]
    # reduction path is not brute force and stays available
    code, out, _ = run_main(capsys, argv[:-1] + ["reduce"])
    assert code == 0


def test_unknown_subcommand_exits_2(capsys):
    code, out, _ = run_main(capsys, ["frobnicate"])
    assert code == 2
    assert json.loads(out) == {"error": "bad usage (see stderr)"}


def test_poly_vieta(capsys):
    code, out, _ = run_main(capsys, ["poly", "vieta", "--roots", "1,2,3", "--m", "2"])
    assert code == 0
    assert out.strip() == '{"lhs":"11/1","rhs":"11/1","equal":true}'


def test_poly_derivative_mean(capsys):
    code, out, _ = run_main(capsys, ["poly", "check-derivative-mean", "--roots", "1,2,3", "--k", "2"])
    assert code == 0
    assert json.loads(out) == {"lhs": "2/1", "rhs": "2/1", "equal": True}
    code, _, _ = run_main(capsys, ["poly", "check-derivative-mean", "--roots", "1,2,3", "--k", "3"])
    assert code == 2


def test_special_faulhaber(capsys):
    code, out, _ = run_main(capsys, ["special", "faulhaber", "--n", "10", "--p", "3"])
    assert code == 0
    assert json.loads(out) == {"n": 10, "p": 3, "value": "3025/1"}


def test_special_mzv(capsys):
    code, out, _ = run_main(capsys, ["special", "mzv", "--m", "2", "--p", "1", "--numeric", "10"])
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == {"4": "1/120"}
    assert payload["closed_form"] == {"4": "1/120"}
    assert payload["equal"] is True
    assert payload["numeric"] == "0.8117424253"


def test_special_zeta_table(capsys):
    code, out, _ = run_main(capsys, ["special", "zeta-table"])
    assert code == 0
    payload = json.loads(out)
    assert payload["all_match"] is True
    assert len(payload["entries"]) == 8
    assert payload["entries"][0] == {
        "argument": 2,
        "computed": {"2": "1/6"},
        "golden": "1/6",
        "match": True,
    }


def test_verify_single_and_sweep(capsys):
    code, out, _ = run_main(capsys, ["verify", "LEMMA_3_1", "--m", "4"])
    assert code == 0
    assert json.loads(out) == {"identity": "LEMMA_3_1", "reports": 1, "passed": 1, "all_equal": True}
    code, out, _ = run_main(capsys, ["verify", "LEMMA_3_1", "--sweep", "m=0..12"])
    assert code == 0
    assert json.loads(out)["reports"] == 13


def test_verify_json_reports(capsys):
    code, out, _ = run_main(capsys, ["verify", "EVEN_ODD_N", "--n", "3", "--m", "2", "--json"])
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 1
    assert reports[0]["lhs"] == ["9/2", "3/2"]
    assert "C(n-m+1, m)" in reports[0]["note"]


def test_verify_phi_and_r(capsys):
    code, out, _ = run_main(capsys, ["verify", "LEMMA_3_2", "--m", "3", "--phi", "0,1,0", "--r", "2"])
    assert code == 0
    code, out, _ = run_main(capsys, ["verify", "LEMMA_3_2", "--m", "3", "--phi", "0,1,0", "--r", "3"])
    assert code == 2
    assert "not a partition of r=3" in json.loads(out)["error"]


def test_verify_with_spec_json(capsys):
    code, out, _ = run_main(
        capsys,
        ["verify", "PRODUCT_IDENTITY", "--spec", '{"kind":"index_power","exponent":1}', "--q", "2", "--n", "5"],
    )
    assert code == 0
    assert json.loads(out)["all_equal"] is True


def test_verify_bad_identity_exits_2(capsys):
    code, _, _ = run_main(capsys, ["verify", "NOT_AN_IDENTITY", "--m", "1"])
    assert code == 2


def test_stdout_byte_identical_across_runs(capsys):
    argv = ["verify", "EVEN_ODD_BINOM", "--sweep", "m=0..5", "--json"]
    _, first, _ = run_main(capsys, argv)
    _, second, _ = run_main(capsys, argv)
    assert first == second


def test_selftest_single_criterion(capsys):
    code, out, err = run_main(capsys, ["selftest", "--criterion", "2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["all_passed"] is True
    assert payload["criteria"][0]["criterion"] == 2
    # timing lives on stderr only, stdout stays run-to-run stable
    assert "seconds" not in out
    assert "PASS" in err


def test_selftest_jobs_keeps_stdout_stable(capsys):
    # parallel run buffers results in criterion order, so stdout cannot drift
    code_a, out_a, _ = run_main(capsys, ["selftest", "--criterion", "2"])
    code_b, out_b, _ = run_main(capsys, ["selftest", "--criterion", "2", "--jobs", "2"])
    assert (code_a, out_a) == (code_b, out_b)


def test_selftest_unknown_criterion(capsys):
    code, out, _ = run_main(capsys, ["selftest", "--criterion", "11"])
    assert code == 2


def test_outcome_invariant():
    assert run(["partitions", "count", "3"]) == CommandOutcome("pass", {"m": 3, "count": 3}, 0)
    with pytest.raises(ValueError):
        CommandOutcome("pass", {}, 1)
