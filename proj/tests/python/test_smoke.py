import pytest

import qcluster

RANK1 = {"I": [1, 2], "I_uf": [1], "d": [1, 1], "B": [[0], [1]], "Lambda": None}


def test_mutation_is_an_involution():
    s = qcluster.word_seed("1,2,1,-1,-2,-1", "A2")["seed"]
    for k in s["I_uf"]:
        assert qcluster.mutate(s, [k, k]) == s


def test_dot_export():
    out = qcluster.word_seed([1, 2, 1, -1, -2, -1], "A2")
    assert out["dot"].startswith("digraph")
    assert '"-2" -> "-1" [label="1/2", style=dashed]' in out["dot"]
    assert qcluster.seed_to_dot(RANK1).startswith("digraph")


def test_variable_expansion():
    out = qcluster.variables(RANK1, [1], [1])
    assert out["vars"][0]["text"] == "x1^-1 + x1^-1*x2"


def test_freezing_rank_one():
    out = qcluster.freeze(RANK1, [1], "x1^-1 + x1^-1*x2", [-1, 0])
    assert out["result"]["text"] == "x1^-1"


def test_kronecker_degree_table():
    t = qcluster.dbs_degrees("1,2,1,1,2,2,1", "Kronecker")
    assert [r["text"] for r in t["table"]] == [
        "-f1+f3", "-f1+f4", "-f1+f7", "-f2+f5", "-f2+f6", "-f3+f4", "-f3+f7", "-f4+f7", "-f5+f6",
    ]
    rows = qcluster.tsystems("1,2,1,1,2,2,1", "Kronecker")
    assert len(rows) == 9
    assert all(r["holds"] and r["alpha_greater"] for r in rows)


def test_kl_element():
    out = qcluster.kl("1,1,1", [1, 0, 1])
    assert out["L"]["text"]
    assert out["w"] == [1, 0, 1]


@pytest.mark.parametrize("name", ["kronecker-degrees", "y-degree", "freeze-example", "tsystems", "kl", "sl2"])
def test_suites_pass(name):
    r = qcluster.run_suite(name)
    assert r["fail"] == 0 and r["pass"] > 0, r["details"]


def test_errors():
    with pytest.raises(qcluster.InputError):
        qcluster.word_seed("1,x", "A2")
    with pytest.raises(qcluster.InputError):
        qcluster.mutate(RANK1, [2])
    with pytest.raises(ValueError):
        qcluster.run_suite("nope")
    with pytest.raises(qcluster.BudgetError):
        qcluster.kl("1,1,1,1", [2, 2, 2, 2], max_terms=2)


def test_session_matches_the_http_api():
    s = qcluster.Session()
    status, start = s.handle("GET", "/seed")
    assert status == 200
    s.handle("POST", "/mutate", {"k": 1})
    status, back = s.handle("POST", "/mutate", {"k": 1})
    assert back["seed"] == start["seed"]
    assert s.handle("POST", "/undo")[0] == 200
    assert s.handle("GET", "/nowhere")[0] == 404
    assert s.handle("POST", "/mutate", "{bad")[0] == 400
