"""Tests for the command-line surface: exit codes, JSON-lines records,
and the round-trip property (records re-verify from their own data)."""

import json
from fractions import Fraction

from parafree.cli import main
from parafree.exact import ExpWord, eval_word, parse_rational
from parafree.halfrel import defect


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    records = [json.loads(line) for line in out.splitlines() if line]
    return code, records


def word_of(payload):
    return ExpWord(payload["start"], tuple(payload["exponents"]))


def reverify_witness(payload):
    tau = parse_rational(payload["word_tau"])
    return eval_word(word_of(payload["lhs"]), tau) == \
        eval_word(word_of(payload["rhs"]), tau)


# --- verify ------------------------------------------------------------

def test_verify_half_relation(capsys):
    code, recs = run(capsys, "verify", "--tau", "9/4", "--seq", "1,-1,1,14,2")
    assert code == 0
    (rec,) = recs
    assert rec["verified"] is True
    assert rec["result"]["is_half_relation"] is True
    assert rec["result"]["kind"] == "group_nontrivial"
    assert rec["result"]["defect"] == "0"
    lhs, rhs = word_of(rec["result"]["lhs"]), word_of(rec["result"]["rhs"])
    tau = Fraction(9, 4)
    assert eval_word(lhs, tau) == eval_word(rhs, tau)


def test_verify_non_half_relation(capsys):
    code, recs = run(capsys, "verify", "--tau", "2", "--seq", "1,1,1")
    assert code == 1
    (rec,) = recs
    assert rec["verified"] is False
    assert rec["result"]["defect"] == "6"
    assert "lhs" not in rec["result"]


def test_verify_malformed_inputs(capsys):
    assert main(["verify", "--tau", "1/0", "--seq", "1"]) == 2
    assert main(["verify", "--tau", "2", "--seq", "1,a"]) == 2


def test_verify_round_trip(capsys):
    code, recs = run(capsys, "verify", "--tau", "16/25", "--seq", "1,3,50,1")
    (rec,) = recs
    tau = parse_rational(rec["inputs"]["tau"])
    assert defect(tuple(rec["inputs"]["seq"]), tau) == 0
    assert eval_word(word_of(rec["result"]["lhs"]), tau) == \
        eval_word(word_of(rec["result"]["rhs"]), tau)


# --- family ------------------------------------------------------------

def test_family_d_ladder(capsys):
    code, recs = run(capsys, "family", "--name", "d", "--k-range", "2..7")
    assert code == 0
    assert [r["result"]["tau"] for r in recs] == \
        ["3", "5/2", "8/3", "13/5", "21/8", "34/13"]
    for rec in recs:
        assert rec["verified"] is True
        assert reverify_witness(rec["result"]["witness"])


def test_family_b_n_column(capsys):
    code, recs = run(capsys, "family", "--name", "b", "--sigma", "2,3",
                     "--k-range=-3..3")
    assert code == 0
    # k = 0 (n = 1) is skipped inside a range sweep
    assert [r["result"]["n"] for r in recs] == [1105, 51, 3, 5, 95, 2071]


def test_family_excluded_k_is_an_error_when_explicit(capsys):
    assert main(["family", "--name", "d", "--k", "-2"]) == 2
    assert main(["family", "--name", "d", "--k", "0"]) == 2
    assert main(["family", "--name", "b", "--sigma", "2,3", "--k", "0"]) == 2


def test_family_c_variants(capsys):
    code, recs = run(capsys, "family", "--name", "c", "--variant", "even",
                     "--k", "2")
    assert code == 0
    assert recs[0]["result"]["tau"] == "5/2"
    assert main(["family", "--name", "c", "--variant", "even", "--k", "3"]) == 2


def test_family_exceptional_record(capsys):
    code, recs = run(capsys, "family", "--name", "a", "--k=-1")
    assert code == 0
    assert recs[0]["result"]["exceptional"] is True
    assert recs[0]["result"]["candidate"] == [1, -1, 1, 14, 2]


def test_family_bad_sigma(capsys):
    assert main(["family", "--name", "b", "--sigma", "1", "--k", "1"]) == 2
    assert main(["family", "--name", "b", "--sigma", "4,1", "--k", "1"]) == 2


# --- search ------------------------------------------------------------

def test_search_records_and_summary(capsys):
    code, recs = run(capsys, "search", "--tau", "9/4", "--max-len", "5",
                     "--bound", "14")
    assert code == 0
    hits = [tuple(r["result"]["hit"]) for r in recs if "hit" in r["result"]]
    assert (1, -1, 1, 14, 2) in hits
    summary = recs[-1]["result"]
    assert summary["hit_count"] == len(hits)
    assert summary["exhausted"] is True


def test_search_no_hits_exit_one(capsys):
    code, recs = run(capsys, "search", "--tau", "5", "--max-len", "4",
                     "--bound", "6")
    assert code == 1
    assert recs[-1]["result"]["hit_count"] == 0


def test_search_worker_determinism(capsys):
    outs = []
    for w in ("1", "2", "8"):
        code, recs = run(capsys, "search", "--tau", "2", "--max-len", "3",
                         "--bound", "2", "--workers", w)
        outs.append([r["result"].get("hit") for r in recs[:-1]])
    assert outs[0] == outs[1] == outs[2]


def test_search_invalid_query(capsys):
    assert main(["search", "--tau", "2", "--max-len", "0"]) == 2
    assert main(["search", "--tau", "2", "--max-len", "13"]) == 2
    assert main(["search", "--tau", "x"]) == 2


# --- classify ----------------------------------------------------------

def test_classify_family_value(capsys):
    code, recs = run(capsys, "classify", "--tau", "17/5")
    assert code == 0
    res = recs[0]["result"]
    assert res["group_status"] == "non_free"
    assert reverify_witness(res["group_witness"])
    assert res["semigroup_status"] == "free_schottky"


def test_classify_schottky(capsys):
    code, recs = run(capsys, "classify", "--tau", "-4")
    assert code == 0
    res = recs[0]["result"]
    assert res["group_status"] == "free_schottky"
    assert res["group_witness"] is None


def test_classify_semigroup_witness(capsys):
    code, recs = run(capsys, "classify", "--tau", "64/81")
    res = recs[0]["result"]
    assert res["semigroup_status"] == "non_semigroup_free"
    w = res["semigroup_witness"]
    assert all(a > 0 for a in w["lhs"]["exponents"])
    assert reverify_witness(w)


def test_classify_malformed(capsys):
    assert main(["classify", "--tau", "7/"]) == 2


# --- poly --------------------------------------------------------------

def test_poly_rendering(capsys):
    code, recs = run(capsys, "poly", "--seq", "1,-1,1,-1,7")
    assert code == 0
    assert recs[0]["result"]["rendering"] == "7*tau^2 - 23*tau + 11"
    assert recs[0]["result"]["coefficients"] == [11, -23, 7]


def test_poly_constant(capsys):
    code, recs = run(capsys, "poly", "--seq", "5")
    assert code == 0
    assert recs[0]["result"]["rendering"] == "5"


def test_poly_malformed(capsys):
    assert main(["poly", "--seq", "a?"]) == 2


# --- table mode --------------------------------------------------------

def test_table_mode_renders_columns(capsys):
    code = main(["family", "--name", "d", "--k-range", "2..4", "--table"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("command")
    assert "result.tau" in lines[0]
    assert len(lines) == 4  # header + three rows


def test_json_lines_are_standalone(capsys):
    code, recs = run(capsys, "family", "--name", "e", "--k-range", "1..4")
    assert code == 0
    assert len(recs) == 4
    for rec in recs:
        assert set(rec) == {"command", "inputs", "result", "verified"}
