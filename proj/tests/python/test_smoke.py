import pytest

import treecolor as tc

PERFECT2 = "((()())(()()))"
TR = "((()()()))"


def test_parse_and_profiles():
    t = tc.parse_tree(" ( ( ) ( ) ) ")
    assert t.n == 3
    assert str(t) == "(()())"
    assert t.is_full_binary
    assert tc.height_profile(tc.parse_tree("(((())())(())())")) == [4, 2, 1, 1]
    assert tc.depth_profile(tc.parse_tree("(((())())(())())")) == [1, 3, 3, 1]
    assert tc.canonical_form(tc.parse_tree("((())())")) == tc.canonical_form(tc.parse_tree("(()(()))"))


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        tc.parse_tree("((")


def test_colorings():
    t = tc.perfect_binary(2)
    colors = tc.canonical_by_height(t)
    assert tc.verify_coloring(t, colors) is None
    assert tc.partition_of(colors) == [4, 2, 1]
    assert tc.verify_coloring(tc.parse_tree("(()())"), [1, 2, 1]) == (0, 2)


def test_checks_and_solver():
    tr = tc.parse_tree(TR)
    assert tc.check_necessary(tr, [2, 2, 1])["passed"]
    assert not tc.check_unique_path(tr, [2, 2, 1])["passed"]
    assert tc.is_colorable(tr, [2, 2, 1])["status"] == "not_colorable"
    r = tc.is_colorable(tc.perfect_binary(2), [3, 3, 1])
    assert r["status"] == "colorable"
    assert tc.partition_of(r["witness"]) == [3, 3, 1]
    assert tc.is_colorable(tc.parse_tree("(()(((()())())((()())())))"), [3, 3, 3, 3, 1],
                           budget=2)["status"] == "budget_exceeded"


def test_optimizer():
    t = tc.parse_tree(PERFECT2)
    assert tc.all_colorable_partitions(t)[0] == [4, 2, 1]
    best = tc.optimize(t, "max")
    assert best["partition"] == [3, 3, 1]
    assert best["value"] == 3.0
    assert tc.objective_value([4, 2, 1], "moment:2") == pytest.approx(21.0)
    assert tc.greedy_balance(tc.parse_tree(TR), 3)["partition"] == [3, 1, 1]


def test_experiments():
    census = tc.find_tnsc("rooted", 5)
    assert not census["partial"]
    assert [r["tree"] for r in census["records"]] == [TR]
    rows = tc.test_perfect_conjecture(2)
    assert all(not r["counterexamples"] for r in rows)
    assert all(r["matches"] for r in tc.catalan_census(8))
