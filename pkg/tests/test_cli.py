import json

import pytest

from trapcong.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_classify_i(capsys):
    code, out = run(capsys, "classify", "--notion", "i", "91")
    assert code == 0
    assert out.out.strip() == "i-congruent: yes; witness (a,b,c,d)=(25,7,25,1)"
    code, out = run(capsys, "classify", "--notion", "i", "44")
    assert code == 2


def test_classify_k_and_d(capsys):
    code, out = run(capsys, "classify", "--notion", "k", "--k", "2", "2")
    assert code == 0 and "(8/3,1/1,5/3,4/3)" in out.out
    code, out = run(capsys, "classify", "--notion", "d", "--d", "1", "2", "--json")
    obj = json.loads(out.out)
    assert code == 0 and obj["source"] == "prop41-S"
    assert obj["witnesses"][0] == {"a": "10/3", "b": "3/4", "c": "41/12", "d": "1/1"}


@pytest.mark.parametrize("argv", [
    ["classify", "--notion", "q", "3"],
    ["classify", "--notion", "i", "abc"],
    ["classify", "--notion", "k", "3"],
    ["classify", "--notion", "k", "--k", "1", "3"],
    ["classify", "--notion", "i", "0"],
    ["nonsense"],
])
def test_malformed_exit_1(argv, capsys):
    with pytest.raises(SystemExit) as e:
        code = main(argv)
        raise SystemExit(code)
    assert e.value.code == 1


def test_count(capsys):
    code, out = run(capsys, "count", "g", "1000", "--json")
    assert json.loads(out.out)["count"] == 18
    code, out = run(capsys, "count", "intersection", "100", "--json")
    assert json.loads(out.out)["missing_from_published"] == [66]
    code, out = run(capsys, "count", "f", "10000", "--mode", "classifier", "--json")
    obj = json.loads(out.out)
    assert obj["count"] == 1863 and 1.2 < obj["ratio"] < 2.2


def test_table_csv(capsys):
    code, out = run(capsys, "table", "--csv", "--n-min", "9", "--n-max", "9")
    assert out.out.splitlines() == ["n,k,alpha,beta", "9,649,57,51"]


def test_verify_paper_exit_codes(capsys):
    assert run(capsys, "verify-paper", "--scope", "section3", "--allow-errata")[0] == 0
    code, out = run(capsys, "verify-paper", "--scope", "section1", "--json")
    assert code == 2
    data = json.loads(out.out)
    assert {"claim_id", "paper_value", "computed_value", "status", "witnesses"} == set(data[0])
    code2, out2 = run(capsys, "verify-paper", "--scope", "section1", "--json")
    assert out.out == out2.out
