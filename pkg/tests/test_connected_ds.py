import random
from itertools import combinations

import pytest

from corpus import named_graphs, random_connected
from mincover.connected_ds import cds_neighborhood, enumerate_cds, extension_pool
from mincover.graph import ContractViolation, Graph, InputError, bits, induced_components, is_dominating, vset
from mincover.oracle import brute_minimal, definition_predicate
from mincover.supergraph import collect

G = named_graphs()


def oracle_cds(g):
    return set(brute_minimal(g.n, definition_predicate(g, "connected-ds")))


def test_neighborhood_examples():
    assert cds_neighborhood(G["P4"], vset([1, 2])) == {vset([1, 2])}
    c4 = cds_neighborhood(G["C4"], vset([0, 1]))
    assert c4 <= oracle_cds(G["C4"])
    assert vset([1, 2]) in c4 and vset([0, 3]) in c4
    k3 = cds_neighborhood(G["K3"], vset([0]))
    assert vset([1]) in k3 or vset([2]) in k3


def test_neighborhood_requires_minimal_input():
    with pytest.raises(ContractViolation):
        cds_neighborhood(G["P4"], vset([0, 1, 2]))


@pytest.mark.parametrize(
    "name, expected",
    [
        ("K3", [[0], [1], [2]]),
        ("C4", [[0, 1], [1, 2], [2, 3], [3, 0]]),
        ("star3", [[0]]),
        ("P4", [[1, 2]]),
    ],
)
def test_enumerate_examples(name, expected):
    got = collect(enumerate_cds, G[name])
    assert sorted(got) == sorted(vset(s) for s in expected)


def test_disconnected_rejected():
    with pytest.raises(InputError):
        enumerate_cds(Graph.from_edges(3, [(0, 1)]))


def test_single_vertex():
    assert collect(enumerate_cds, Graph.from_edges(1, [])) == [vset([0])]


def test_random_graphs_match_oracle():
    rng = random.Random(21)
    for _ in range(60):
        g = random_connected(rng.randint(2, 9), rng)
        got = collect(enumerate_cds, g, debug=True)
        assert len(got) == len(set(got))
        assert set(got) == oracle_cds(g)


def test_petersen_matches_oracle():
    g = G["petersen"]
    assert set(collect(enumerate_cds, g)) == oracle_cds(g)


def test_extension_pool_contains_second_neighbourhood():
    g = G["petersen"]
    for x in list(oracle_cds(g))[:5]:
        for v in bits(x):
            pool = extension_pool(g, x, v)
            n2 = g.closed_neighborhood(g.closed_neighborhood(1 << v))
            base = x & ~(1 << v)
            assert pool & base == 0
            assert n2 & ~base & ~pool == 0
            assert pool | base == g.full


def test_small_witness_exists_inside_other_solution():
    """For X != Y and v in X - Y some W inside Y, |W| <= max degree, keeps X - v dominating with few components."""
    rng = random.Random(22)
    checked = 0
    for _ in range(25):
        g = random_connected(rng.randint(3, 7), rng)
        fam = sorted(oracle_cds(g))
        for x in fam:
            for y in fam:
                if x == y:
                    continue
                for v in bits(x & ~y):
                    base = x & ~(1 << v)
                    found = False
                    ys = list(bits(y))
                    for size in range(g.max_degree + 1):
                        for w in combinations(ys, size):
                            s = base | vset(w)
                            if is_dominating(g, s) and len(induced_components(g, s)) <= g.max_degree:
                                found = True
                                break
                        if found:
                            break
                    assert found
                    checked += 1
    assert checked > 50
