import random

import pytest

from corpus import named_graphs, random_connected
from mincover.connected_vc import cvc_neighborhood
from mincover.graph import ContractViolation, CoverProperty, bits, vset
from mincover.oracle import brute_minimal, definition_predicate
from mincover.supergraph import (
    IntegrityError,
    enumerate_solutions,
    minimal_extensions,
    minimize_monotone,
    subsets_up_to,
)

G = named_graphs()


def test_minimize_examples():
    assert minimize_monotone(G["P3"], vset([0, 1, 2]), "connected-vc") == vset([1])
    # vertex 0 is tried first and can go
    assert minimize_monotone(G["K3"], vset([0, 1, 2]), "connected-vc") == vset([1, 2])
    assert minimize_monotone(G["C4"], vset([0, 1, 2]), "connected-vc") == vset([0, 1, 2])


def test_minimize_rejects_non_solution():
    with pytest.raises(ContractViolation):
        minimize_monotone(G["P3"], vset([0]), "vc")


def test_minimize_accepts_plain_callable():
    assert minimize_monotone(G["K3"], 0b111, lambda s: s.bit_count() >= 2) == 0b110


def test_minimize_result_is_minimal_on_random_graphs():
    rng = random.Random(5)
    for _ in range(50):
        g = random_connected(rng.randint(2, 9), rng)
        for kind in ("connected-vc", "connected-ds", "vc", "ds"):
            prop = CoverProperty(g, kind.startswith("connected")) if kind.endswith("vc") else kind
            x = minimize_monotone(g, g.full, prop)
            pred = definition_predicate(g, kind)
            assert pred(x)
            assert not any(pred(x & ~(1 << u)) for u in bits(x))


def _cvc_run(g, initial):
    out = []
    stats = enumerate_solutions(initial, lambda x: cvc_neighborhood(g, x), out.append)
    return out, stats


def test_enumerate_examples():
    out, stats = _cvc_run(G["K3"], vset([1, 2]))
    assert out[0] == vset([1, 2])
    assert sorted(out) == sorted(vset(s) for s in ([1, 2], [0, 2], [0, 1]))
    assert stats.outputs == 3

    out, _ = _cvc_run(G["P3"], vset([1]))
    assert out == [vset([1])]

    out, _ = _cvc_run(G["C4"], vset([0, 1, 2]))
    assert sorted(out) == sorted(vset(s) for s in ([0, 1, 2], [1, 2, 3], [2, 3, 0], [3, 0, 1]))


def test_enumerate_matches_oracle_and_never_repeats():
    rng = random.Random(11)
    for _ in range(40):
        g = random_connected(rng.randint(2, 8), rng)
        prop = CoverProperty(g, connected=True)
        start = minimize_monotone(g, g.full, prop)
        out, stats = _cvc_run(g, start)
        assert len(out) == len(set(out)) == stats.outputs == stats.neighborhood_calls
        assert set(out) == set(brute_minimal(g.n, definition_predicate(g, "connected-vc")))


def test_empty_family_and_limit():
    stats = enumerate_solutions(None, lambda x: [], print)
    assert stats.outputs == 0
    seen = []
    stats = enumerate_solutions(vset([1, 2]), lambda x: cvc_neighborhood(G["K3"], x), seen.append, limit=2)
    assert len(seen) == 2 and stats.truncated


def test_sink_is_called_while_enumeration_runs():
    class Stop(Exception):
        pass

    def sink(x):
        raise Stop

    with pytest.raises(Stop):
        enumerate_solutions(vset([1, 2]), lambda x: cvc_neighborhood(G["K3"], x), sink)


def test_debug_mode_flags_non_minimal_neighbour():
    prop = CoverProperty(G["K3"], connected=True)
    with pytest.raises(IntegrityError):
        enumerate_solutions(vset([1, 2]), lambda x: [0b111], check=prop)


def test_minimal_extensions_against_brute_force():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 9)
        base = rng.getrandbits(n)
        pool = ((1 << n) - 1) & ~base
        targets = [rng.getrandbits(n) | 1 for _ in range(rng.randint(1, 3))]
        pred = lambda s: any(t & s == t for t in targets)  # noqa: E731
        k = rng.randint(0, n)
        got = list(minimal_extensions(base, pool, pred, k))
        expect = [
            w for w in subsets_up_to(pool, k)
            if pred(base | w) and not any(pred(base | (w & ~(1 << u))) for u in bits(w))
        ]
        assert sorted(got) == sorted(expect)
        sizes = [w.bit_count() for w in got]
        assert sizes == sorted(sizes)


def test_subsets_up_to_order():
    assert list(subsets_up_to(0b1011, 2)) == [0, 0b1, 0b10, 0b1000, 0b11, 0b1001, 0b1010]
