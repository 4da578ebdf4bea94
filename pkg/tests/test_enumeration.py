import itertools
import json

import pytest

from disktrees.disktree import format_tree, validate
from disktrees.enumeration import (
    catalan_triangle, count_disk_trees, distribution, gen_avoiders,
    gen_disk_trees, matrix_to_csv, matrix_top_iom, pair_matrix, schroder,
    separable,
)

SCHRODER = [1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098]


def test_schroder_values():
    assert [schroder(k) for k in range(10)] == SCHRODER
    with pytest.raises(ValueError):
        schroder(-1)


def test_catalan_triangle_values():
    assert all(catalan_triangle(n, 0) == 1 for n in range(1, 9))
    assert catalan_triangle(4, 2) == 5
    assert [catalan_triangle(5, k) for k in range(5)] == [1, 4, 9, 14, 14]
    with pytest.raises(ValueError):
        catalan_triangle(4, 4)


def _contains_321(p):
    n = len(p)
    return any(p[i] > p[j] > p[k]
               for i in range(n) for j in range(i + 1, n)
               for k in range(j + 1, n))


def test_ballot_counts_on_321_avoiders_oracle():
    # independent brute-force count over S_5, local containment test
    from disktrees.perm import comp, iar
    avoiders = [p for p in itertools.permutations(range(1, 6))
                if not _contains_321(p)]
    assert len(avoiders) == 42  # Catalan number
    for k in range(1, 6):
        expected = catalan_triangle(5, 5 - k)
        assert sum(1 for p in avoiders if iar(p) == k) == expected
        assert sum(1 for p in avoiders if comp(p) == k) == expected


def test_tree_counts_match_schroder():
    for m in range(7):
        assert count_disk_trees(m) == SCHRODER[m]


def test_trees_are_valid_and_distinct():
    for m in range(7):
        trees = list(gen_disk_trees(m))
        assert len(set(trees)) == len(trees)
        assert all(validate(t) for t in trees)


def test_generation_order_is_frozen():
    assert [format_tree(t) for t in gen_disk_trees(2)] == [
        "(. + (. - .))",
        "((. + .) + .)",
        "((. - .) + .)",
        "(. - (. + .))",
        "((. + .) - .)",
        "((. - .) - .)",
    ]


def test_avoider_counts():
    assert len(list(gen_avoiders(4, ((2, 4, 1, 3), (3, 1, 4, 2))))) == 22
    assert len(list(gen_avoiders(3, ((3, 2, 1),)))) == 5
    assert list(gen_avoiders(1, ((2, 4, 1, 3),))) == [(1,)]


def test_fast_path_matches_naive_filter():
    patterns = ((2, 4, 1, 3), (3, 1, 4, 2))
    for n in range(1, 7):
        fast = sorted(gen_avoiders(n, patterns))
        naive = sorted(gen_avoiders(n, patterns, naive=True))
        assert fast == naive


def test_naive_filter_cap():
    with pytest.raises(ValueError):
        list(gen_avoiders(11, ((3, 2, 1),)))


def test_distribution_single_node_trees():
    table = distribution(gen_disk_trees(1), ["top"])
    assert table.rows == {(0,): 1, (1,): 1}
    assert table.universe == 2


def test_distribution_rejects_bad_stats():
    with pytest.raises(ValueError):
        distribution(gen_disk_trees(1), ["tops"])
    with pytest.raises(ValueError):
        distribution(gen_disk_trees(1), ["top", "iar"])  # mixed kinds


def test_matrix_top_iom_small():
    assert matrix_top_iom(1) == [[1]]
    assert matrix_top_iom(2) == [[0, 1], [1, 0]]
    assert matrix_top_iom(3) == [[1, 1, 1], [1, 1, 0], [1, 0, 0]]


def test_matrix_matches_distribution():
    n = 6
    matrix = matrix_top_iom(n)
    table = distribution(gen_disk_trees(n - 1), ["top", "iom"])
    for (k, l), count in table.rows.items():
        assert matrix[k][l] == count
    assert matrix[0] == [76, 69, 34, 13, 4, 1]


def test_matrix_shape_properties():
    for n in range(1, 8):
        matrix = matrix_top_iom(n)
        for i in range(n):
            for j in range(n):
                if i + j > n - 1:
                    assert matrix[i][j] == 0
                if i + 1 < n and j >= 1:
                    assert matrix[i][j] == matrix[i + 1][j - 1]


def test_pair_matrix_perm_statistics():
    # comp against iar over separable permutations: symmetric counts
    matrix = pair_matrix("comp", "iar", 5)
    assert sum(map(sum, matrix)) == SCHRODER[4]
    for i in range(5):
        for j in range(5):
            assert matrix[i][j] == matrix[j][i]
    with pytest.raises(ValueError):
        pair_matrix("comp", "top", 4)  # mixed kinds
    with pytest.raises(ValueError):
        pair_matrix("comp", "des", 4)  # set-valued


def test_distribution_table_serialization():
    table = distribution(gen_disk_trees(1), ["top", "iom"])
    data = json.loads(table.to_json())
    assert data["stats"] == ["top", "iom"]
    assert data["universe"] == 2
    assert sorted(map(tuple, data["rows"])) == [(0, 1, 1), (1, 0, 1)]
    assert table.to_csv().splitlines() == ["top,iom,count", "0,1,1", "1,0,1"]


def test_distribution_table_set_valued_keys():
    table = distribution(separable(3), ["lmax", "comp"])
    assert all(isinstance(key[0], tuple) for key in table.rows)
    parsed = json.loads(table.to_json())
    assert any(isinstance(row[0], list) for row in parsed["rows"])


def test_matrix_to_csv():
    assert matrix_to_csv([[0, 1], [1, 0]]).splitlines() == ["0,1", "1,0"]


def test_same_distribution():
    left = distribution(separable(4), ["comp"])
    right = distribution(separable(4), ["iar"])
    assert left.same_distribution(right)
    assert not left.same_distribution(distribution(separable(3), ["comp"]))
