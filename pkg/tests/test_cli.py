import json

from shuffleprob.cli import main
from shuffleprob.mutations import inject_defect

SEMICIRCLE = {
    "letters": ["a"],
    "max_degree": 6,
    "moments": {"a.a": "1", "a.a.a.a": "2", "a.a.a.a.a.a": "5"},
}

BERNOULLI = {
    "letters": ["a"],
    "max_degree": 6,
    "moments": {"a.a": "1", "a.a.a.a": "1", "a.a.a.a.a.a": "1"},
}


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def read(path):
    with open(path) as fh:
        return json.load(fh)


def test_cumulants_free(tmp_path):
    src = write(tmp_path, "sem.json", SEMICIRCLE)
    out = str(tmp_path / "free.json")
    assert main(["cumulants", src, "--kind", "free", "-o", out]) == 0
    payload = read(out)
    assert payload["kind"] == "free"
    assert payload["values"] == {"a.a": "1"}


def test_cumulants_monotone_half(tmp_path):
    src = write(tmp_path, "sem.json", SEMICIRCLE)
    out = str(tmp_path / "mono.json")
    assert main(["cumulants", src, "--kind", "monotone", "--max-degree", "4",
                 "-o", out]) == 0
    assert read(out)["values"]["a.a.a.a"] == "1/2"


def test_moments_inverts_cumulants(tmp_path):
    src = write(tmp_path, "sem.json", SEMICIRCLE)
    cums = str(tmp_path / "free.json")
    back = str(tmp_path / "back.json")
    main(["cumulants", src, "--kind", "free", "-o", cums])
    assert main(["moments", cums, "-o", back]) == 0
    assert read(back)["moments"] == SEMICIRCLE["moments"]


def test_convert(tmp_path):
    src = write(tmp_path, "sem.json", SEMICIRCLE)
    cums = str(tmp_path / "free.json")
    conv = str(tmp_path / "bool.json")
    main(["cumulants", src, "--kind", "free", "-o", cums])
    assert main(["convert", cums, "--kind", "boolean", "-o", conv]) == 0
    assert read(conv)["values"] == {"a.a": "1", "a.a.a.a": "1", "a.a.a.a.a.a": "2"}


def test_convolve_semicircles(tmp_path):
    src = write(tmp_path, "sem.json", SEMICIRCLE)
    out = str(tmp_path / "sum.json")
    assert main(["convolve", "--kind", "free", src, src, "-o", out]) == 0
    assert read(out)["moments"] == {"a.a": "2", "a.a.a.a": "8",
                                    "a.a.a.a.a.a": "40"}


def test_bp_bernoulli_to_semicircle(tmp_path):
    src = write(tmp_path, "bern.json", BERNOULLI)
    out = str(tmp_path / "img.json")
    assert main(["bp", src, "-o", out]) == 0
    assert read(out)["moments"] == SEMICIRCLE["moments"]


def test_bp_semigroup_parameter(tmp_path):
    src = write(tmp_path, "bern.json", BERNOULLI)
    half1 = str(tmp_path / "h1.json")
    half2 = str(tmp_path / "h2.json")
    whole = str(tmp_path / "w.json")
    assert main(["bp", src, "--t", "1/2", "-o", half1]) == 0
    assert main(["bp", half1, "--t", "1/2", "-o", half2]) == 0
    assert main(["bp", src, "--t", "1", "-o", whole]) == 0
    assert read(half2) == read(whole)


def test_subordinate_decomposition(tmp_path):
    # free convolution factors through the subordination product:
    # moments of d1 [+]< d2 match the convolution of d1 with (d2 |> d1)
    d1 = write(tmp_path, "d1.json", SEMICIRCLE)
    d2 = write(tmp_path, "d2.json", BERNOULLI)
    sub = str(tmp_path / "sub.json")
    conv = str(tmp_path / "conv.json")
    both = str(tmp_path / "both.json")
    assert main(["subordinate", "--side", "left", d2, d1, "-o", sub]) == 0
    assert main(["convolve", "--kind", "free", d1, d2, "-o", conv]) == 0
    assert main(["convolve", "--kind", "monotone-left", d1, sub, "-o", both]) == 0
    assert read(conv)["moments"] == read(both)["moments"]


def test_series(tmp_path):
    src = write(tmp_path, "sem.json", SEMICIRCLE)
    out = str(tmp_path / "r.json")
    assert main(["series", src, "--kind", "R", "-o", out]) == 0
    payload = read(out)
    assert payload["series"] == "R"
    assert payload["coefficients"] == {"a.a": "1"}


def test_round_trip_is_byte_stable(tmp_path):
    src = write(tmp_path, "sem.json", SEMICIRCLE)
    out1 = str(tmp_path / "o1.json")
    out2 = str(tmp_path / "o2.json")
    main(["cumulants", src, "--kind", "boolean", "-o", out1])
    main(["cumulants", src, "--kind", "boolean", "-o", out2])
    assert open(out1, "rb").read() == open(out2, "rb").read()


def test_verify_exits_zero(tmp_path, capsys):
    out = str(tmp_path / "report.json")
    assert main(["verify", "--suite", "coalgebra", "--max-degree", "3",
                 "-o", out]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines and all(l.startswith("[PASS]") for l in lines)
    assert read(out)["passed"] is True


def test_verify_reports_failure_with_nonzero_exit(tmp_path, capsys):
    with inject_defect("drop-left-singleton"):
        code = main(["verify", "--suite", "coalgebra", "--max-degree", "3"])
    assert code == 1
    assert "[FAIL]" in capsys.readouterr().out


def test_verify_coalgebra_subcommand(tmp_path):
    out = str(tmp_path / "report.json")
    assert main(["verify-coalgebra", "--letters", "a,b", "--max-degree", "3",
                 "-o", out]) == 0
    payload = read(out)
    assert payload["passed"] is True
    assert all(set(c) >= {"axiom", "status"} for c in payload["checks"])


def test_bad_json_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    assert main(["cumulants", str(bad), "--kind", "free"]) == 2
    err = capsys.readouterr().err
    assert "line" in err


def test_validation_errors_exit_two(tmp_path):
    src = write(tmp_path, "bad.json", {"letters": ["a"], "max_degree": 2,
                                       "moments": {"a.b": "1"}})
    assert main(["cumulants", src, "--kind", "free"]) == 2
    src2 = write(tmp_path, "neg.json", SEMICIRCLE)
    assert main(["bp", src2, "--t", "-1"]) == 2
    assert main(["verify", "--max-degree", "0"]) == 2


def test_degree_cap_env_override(tmp_path, monkeypatch):
    src = write(tmp_path, "sem.json", SEMICIRCLE)
    monkeypatch.setenv("SHUFFLE_MAX_DEGREE", "4")
    assert main(["cumulants", src, "--kind", "free"]) == 2  # 6 > capped 4
    assert main(["cumulants", src, "--kind", "free", "--max-degree", "4",
                 "-o", str(tmp_path / "ok.json")]) == 0


def test_stdout_output(tmp_path, capsys):
    src = write(tmp_path, "sem.json", SEMICIRCLE)
    assert main(["series", src, "--kind", "eta"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["coefficients"]["a.a"] == "1"


def test_missing_file_exits_two(tmp_path, capsys):
    assert main(["cumulants", str(tmp_path / "nope.json"), "--kind", "free"]) == 2
    assert "error:" in capsys.readouterr().err


def test_empty_word_key_in_cumulant_file_exits_two(tmp_path, capsys):
    src = write(tmp_path, "bad.json", {"kind": "free", "letters": ["a"],
                                       "max_degree": 2, "values": {"1": "1"}})
    assert main(["moments", src]) == 2
    assert "empty word" in capsys.readouterr().err
