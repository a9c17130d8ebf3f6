import random

import pytest

from corpus import all_hypergraphs, random_hypergraph
from mincover.graph import Hypergraph, InputError, bits, complement, degeneracy_ordering, is_bipartite, vset
from mincover.reductions import (
    REDUCTION_KINDS,
    ReductionIntegrityError,
    build_reduction,
    gadget_solutions,
    project_solution,
    verify_reduction,
)

ONE_EDGE = Hypergraph.from_sets(2, [[0, 1]])
TWO_EDGES = Hypergraph.from_sets(3, [[0, 1], [1, 2]])


def test_cvc_gadget_size_and_roles():
    inst = build_reduction(ONE_EDGE, "cvc")
    assert inst.graph.n == 6 and inst.graph.m == 6
    assert inst.roles == ("V", "V", "w", "w'", "r", "r'")
    assert inst.forced == vset([2, 4])


def test_cobip_gadget_shape():
    inst = build_reduction(ONE_EDGE, "cds-cobip")
    g = inst.graph
    assert g.n == 4
    assert inst.roles == ("V", "V", "w", "r")
    # V + r is a clique, the hub sees both members
    assert g.m == 3 + 2
    assert is_bipartite(complement(g))


def test_capvc_capacity_table():
    inst = build_reduction(ONE_EDGE, "capvc")
    assert inst.graph.n == 4
    assert inst.capacity.cap == (1, 1, 2, 0)


def test_path_gadget_layout():
    inst = build_reduction(ONE_EDGE, "cvc-2deg")
    g = inst.graph
    path = [v for v, role in enumerate(inst.roles) if role == "p"]
    assert len(path) == 5
    # member j touches path vertex 2j-1
    assert g.nbr[0] >> path[0] & 1 and g.nbr[1] >> path[2] & 1
    assert inst.mask("p'").bit_count() == 5


def test_projection_examples():
    inst = build_reduction(ONE_EDGE, "cvc")
    assert project_solution(inst, vset([0, 2, 4])) == vset([0])
    assert project_solution(inst, vset([1, 2, 4])) == vset([1])
    with pytest.raises(ReductionIntegrityError):
        project_solution(inst, vset([0, 4]))
    cob = build_reduction(ONE_EDGE, "cds-cobip")
    assert project_solution(cob, vset([0, 2])) is None
    assert project_solution(cob, vset([1])) == vset([1])
    with pytest.raises(ReductionIntegrityError):
        project_solution(cob, vset([2, 3]))


def test_verify_two_edges_cvc():
    report = verify_reduction(TWO_EDGES, "cvc")
    assert report.passed, report.failures
    assert report.transversals == 2 and report.solutions == 2
    inst = build_reduction(TWO_EDGES, "cvc")
    got = {project_solution(inst, s) for s in gadget_solutions(inst)}
    assert got == {vset([1]), vset([0, 2])}


def test_capvc_single_edge_has_two_solutions():
    report = verify_reduction(ONE_EDGE, "capvc")
    assert report.passed and report.solutions == 2


@pytest.mark.parametrize("kind", ["cvc-2deg", "capvc-2deg"])
def test_path_kinds_are_two_degenerate_and_bipartite(kind):
    rng = random.Random(41)
    for _ in range(20):
        inst = build_reduction(random_hypergraph(rng, 6, 5), kind)
        assert degeneracy_ordering(inst.graph)[1] <= 2
        assert is_bipartite(inst.graph)


def test_cobip_extras_are_dominating_pairs():
    h = Hypergraph.from_sets(3, [[0, 1], [1, 2]])
    report = verify_reduction(h, "cds-cobip")
    assert report.passed, report.failures
    # {1} alone is a transversal, so only 0 and 2 pair up with their hubs
    assert sorted(sorted(bits(x)) for x in report.extras) == [[0, 3], [2, 4]]


def test_empty_hyperedge_rejected():
    with pytest.raises(InputError):
        build_reduction(Hypergraph(2, ()), "cds-cobip")
    with pytest.raises(ValueError):
        build_reduction(ONE_EDGE, "nope")


@pytest.mark.parametrize("kind", REDUCTION_KINDS)
def test_exhaustive_small_hypergraphs(kind):
    count = 0
    for h in all_hypergraphs(3, 2):
        if kind == "cds-cobip" and not h.edges:
            continue
        report = verify_reduction(h, kind)
        assert report.passed, (h, report.failures)
        count += 1
    assert count > 20


def test_degree_method_agrees():
    rng = random.Random(42)
    for _ in range(5):
        h = random_hypergraph(rng, 5, 4)
        assert verify_reduction(h, "cvc", method="degree").passed
