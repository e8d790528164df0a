import pytest

from cograph_bei import (
    Leaf,
    P4Witness,
    Union,
    bound_comparison_table,
    build_cotree,
    canonical_key,
    cotree_to_graph,
    enumerate_cotrees,
    p4_free_classes_by_exhaustion,
    verify_theorems,
)
from cograph_bei.enumeration import BOUND_NAMES, CHECK_NAMES

# regression freeze of the class counts produced by the generator; the
# values up to n = 7 are independently confirmed by the graph-space
# oracle below and in the acceptance suite
CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 10, 5: 24, 6: 66, 7: 180, 8: 522, 9: 1532, 10: 4624}

# the 4-cycle: the one connected maximizer without a universal vertex
C4_KEY = "J(U(L,L),U(L,L))"


def test_class_counts():
    for n, expected in CLASS_COUNTS.items():
        assert sum(1 for _ in enumerate_cotrees(n)) == expected


def test_no_duplicate_keys_and_closure():
    for n in range(1, 9):
        keys = set()
        for t in enumerate_cotrees(n):
            key = canonical_key(t)
            assert key not in keys
            keys.add(key)
            g = cotree_to_graph(t)
            rebuilt = build_cotree(g)
            assert not isinstance(rebuilt, P4Witness)
            assert canonical_key(rebuilt) == key


def test_enumeration_is_deterministic():
    first = [canonical_key(t) for t in enumerate_cotrees(7)]
    second = [canonical_key(t) for t in enumerate_cotrees(7)]
    assert first == second
    # disconnected classes first, then connected
    kinds = [isinstance(t, Union) for t in enumerate_cotrees(7)]
    assert kinds == sorted(kinds, reverse=True)


def test_enumeration_guards():
    with pytest.raises(ValueError, match="limited"):
        list(enumerate_cotrees(0))
    with pytest.raises(ValueError, match="limited"):
        list(enumerate_cotrees(13))


def test_exhaustion_oracle_matches_enumeration():
    labeled_expected = {1: 1, 2: 2, 3: 8, 4: 52, 5: 472, 6: 5504}
    for n in range(1, 7):
        classes, labeled = p4_free_classes_by_exhaustion(n)
        assert classes == CLASS_COUNTS[n]
        assert labeled == labeled_expected[n]
    with pytest.raises(ValueError, match="limited"):
        p4_free_classes_by_exhaustion(8)


def test_verify_theorems_small():
    report = verify_theorems(3)
    assert report.passed
    assert report.checks["order_bound"].graphs_checked == 7
    assert report.checks["invariant_recursions"].graphs_checked == 7
    assert report.checks["complement_connectivity"].graphs_checked == 6


def test_verify_theorems_finds_the_cycle_exception():
    # the lone true violation: C4 attains the connected maximum at n=4
    # without being a cone, so the cone check must flag exactly it
    report = verify_theorems(6)
    assert not report.passed
    for name in CHECK_NAMES:
        if name == "connected_max_is_cone":
            assert report.checks[name].failures == [C4_KEY]
        else:
            assert report.checks[name].failures == []


def test_verify_theorems_nine_full_tallies():
    report = verify_theorems(9)
    checks = report.checks
    assert checks["order_bound"].graphs_checked == 2341
    assert checks["order_bound"].failures == []
    assert checks["extremal_characterization"].graphs_checked == 2150
    assert checks["extremal_characterization"].failures == []
    assert checks["connected_max_is_cone"].failures == [C4_KEY]
    assert checks["indep_bounds"].failures == []
    assert checks["clique_bound"].failures == []
    assert checks["maxdeg_bound"].graphs_checked == 1171
    assert checks["maxdeg_bound"].failures == []
    assert checks["induced_path_bounds"].failures == []
    assert checks["complement_connectivity"].graphs_checked == 2340
    assert checks["complement_connectivity"].failures == []
    assert checks["invariant_recursions"].graphs_checked == 809
    assert checks["invariant_recursions"].failures == []
    assert checks["order_bound_achieved"].failures == []


def test_verify_theorems_parallel_matches_sequential():
    seq = verify_theorems(6)
    par = verify_theorems(6, workers=2)
    assert seq.to_json_dict() == par.to_json_dict()


def test_verify_theorems_guards():
    with pytest.raises(ValueError, match="limited"):
        verify_theorems(11)
    with pytest.raises(ValueError, match="limited"):
        verify_theorems(0)
    with pytest.raises(ValueError, match="sequentially"):
        verify_theorems(3, workers=2, reg_fn=lambda t: 0)


def _broken_reg(t):
    # mutation: take the max over union children instead of the sum
    if isinstance(t, Leaf):
        return 0
    if isinstance(t, Union):
        return max(_broken_reg(c) for c in t.children)
    if all(isinstance(c, Leaf) for c in t.children):
        return 1
    return max(2, max(_broken_reg(c) for c in t.children))


def test_mutated_regularity_rule_is_caught():
    report = verify_theorems(6, reg_fn=_broken_reg)
    failures = report.checks["extremal_characterization"].failures
    # two disjoint 2-edge paths no longer look extremal under the bad rule
    assert "U(J(L,U(L,L)),J(L,U(L,L)))" in failures
    assert report.checks["order_bound_achieved"].failures  # cap no longer attained


def test_bound_table_structure():
    table = bound_comparison_table(5)
    assert table.bound_names == BOUND_NAMES
    assert table.total_graphs == 41
    for i in range(5):
        assert table.matrix[i][i] == 0
    # alpha <= clique count forces this zero
    c_row = BOUND_NAMES.index("num_max_cliques")
    a_col = BOUND_NAMES.index("alpha")
    assert table.matrix[c_row][a_col] == 0
    with pytest.raises(ValueError, match="limited"):
        bound_comparison_table(11)


# regression freeze of the full table for every cograph with n <= 9;
# the invariant columns are backed by the brute-force oracle agreement
# asserted in test_verify_theorems_nine_full_tallies
REFINED_MATRIX = [
    [0, 1145, 1191, 230, 1158],
    [749, 0, 1049, 0, 724],
    [672, 1049, 0, 515, 837],
    [1589, 1137, 1522, 0, 1150],
    [0, 362, 201, 1, 0],
]
UNREFINED_MATRIX = [
    [0, 968, 968, 148, 1090],
    [918, 0, 1049, 0, 724],
    [918, 1049, 0, 515, 837],
    [1828, 1137, 1522, 0, 1150],
    [5, 362, 201, 1, 0],
]


def test_bound_table_nine_frozen():
    table = bound_comparison_table(9)
    assert table.total_graphs == 2341
    assert table.total_connected == 1171
    assert table.matrix == REFINED_MATRIX
    assert table.strict_best == {
        "order_bound": 9,
        "num_max_cliques": 0,
        "num_max_indep": 475,
        "alpha": 714,
        "max_degree": 0,
    }


def test_bound_table_nine_unrefined_frozen():
    table = bound_comparison_table(9, refined_order_bound=False)
    assert table.matrix == UNREFINED_MATRIX
    assert table.strict_best == {
        "order_bound": 0,
        "num_max_cliques": 0,
        "num_max_indep": 505,
        "alpha": 724,
        "max_degree": 0,
    }


def test_report_and_table_serialization():
    report = verify_theorems(4)
    d = report.to_json_dict()
    assert d["n_max"] == 4 and d["pass"] is False
    assert set(d["checks"]) == set(CHECK_NAMES)
    text = report.to_text()
    assert "FAIL" in text and C4_KEY in text

    table = bound_comparison_table(4)
    d = table.to_json_dict()
    assert len(d["matrix"]) == 5
    assert "strictly best" in table.to_text()
