import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ocdpoly.engine import (
    BRUTE_FORCE_MAX_N,
    GuardError,
    check_set,
    complement_accepted,
    enumerate_connected_induced_subgraphs,
    iter_ocd_sets,
    min_ocd_number,
    ocd_polynomial_bruteforce,
    ocd_polynomial_fast,
)
from ocdpoly.families import Complete, Cycle, Path, Star, build
from ocdpoly.graph import (
    Graph,
    complement,
    is_connected_induced,
    is_dominating,
    members,
    vset,
)
from ocdpoly.polynomial import OcdPolynomial

from conftest import (
    C4,
    E2,
    E3,
    K1,
    K2,
    K3,
    P3,
    P4,
    as_sets,
    graphs,
    nx_dominating_counts,
    nx_ocd_counts,
    subset_masks,
)


class TestBruteForce:
    @pytest.mark.parametrize("g, coeffs", [
        (P4, (0, 0, 1, 4, 1)),
        (K2, (0, 2, 1)),
        (E2, (0, 0, 1)),
        (K1, (0, 1)),
    ])
    def test_examples(self, g, coeffs):
        p, stats = ocd_polynomial_bruteforce(g)
        assert p.coeffs == coeffs
        assert stats.candidates_visited == 2 ** g.n
        assert stats.ocd_sets_found == sum(coeffs)

    def test_guard(self):
        with pytest.raises(GuardError):
            ocd_polynomial_bruteforce(Graph(BRUTE_FORCE_MAX_N + 1, (0,) * (BRUTE_FORCE_MAX_N + 1)))

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=8))
    def test_matches_networkx_reference(self, g):
        assert list(ocd_polynomial_bruteforce(g)[0].coeffs) == nx_ocd_counts(g)


class TestEnumerator:
    def test_p3(self):
        got = as_sets(enumerate_connected_induced_subgraphs(P3))
        assert sorted(got, key=sorted) == sorted(
            [frozenset(s) for s in ({0}, {1}, {2}, {0, 1}, {1, 2}, {0, 1, 2})], key=sorted)

    def test_k1(self):
        assert list(enumerate_connected_induced_subgraphs(K1)) == [1]

    def test_k3(self):
        assert sorted(enumerate_connected_induced_subgraphs(K3)) == list(range(1, 8))

    def test_order_is_deterministic(self):
        g = build(Cycle(6))
        assert list(enumerate_connected_induced_subgraphs(g)) == list(enumerate_connected_induced_subgraphs(g))

    def test_anchor_is_minimum_vertex(self):
        seq = list(enumerate_connected_induced_subgraphs(build(Complete(5))))
        lows = [(m & -m).bit_length() - 1 for m in seq]
        assert lows == sorted(lows)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=10))
    def test_equals_subset_filter(self, g):
        got = list(enumerate_connected_induced_subgraphs(g))
        assert len(got) == len(set(got))
        assert all(is_connected_induced(g, c) for c in got)
        assert set(got) == {c for c in subset_masks(g.n) if is_connected_induced(g, c)}

    @pytest.mark.parametrize("n", [1, 2, 5, 17, 30])
    def test_path_count(self, n):
        assert sum(1 for _ in enumerate_connected_induced_subgraphs(build(Path(n)))) == n * (n + 1) // 2


class TestFastEngine:
    def test_p4(self):
        p, stats = ocd_polynomial_fast(P4)
        assert p.to_text() == "x^4 + 4x^3 + x^2"
        assert stats.candidates_visited == 8
        _, stats = ocd_polynomial_fast(P4, prune=False)
        assert stats.candidates_visited == 10  # connected subgraphs of P4

    def test_star4(self):
        assert ocd_polynomial_fast(build(Star(4)))[0].to_text() == "x^5 + 5x^4"

    def test_c4(self):
        assert ocd_polynomial_fast(C4)[0].to_text() == "x^4 + 4x^3 + 4x^2"

    def test_k1(self):
        assert ocd_polynomial_fast(K1)[0].to_text() == "x"

    def test_complete_candidates(self):
        for prune in (True, False):
            _, stats = ocd_polynomial_fast(build(Complete(10)), prune=prune)
            assert stats.candidates_visited == 2 ** 10 - 1

    def test_star_is_pruned(self):
        p, stats = ocd_polynomial_fast(build(Star(30)))
        assert p.coeffs[31] == 1 and p.coeffs[30] == 31 and p.evaluate(1) == 32
        assert stats.candidates_visited < 100

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=10))
    def test_matches_bruteforce(self, g):
        brute, bstats = ocd_polynomial_bruteforce(g)
        fast, fstats = ocd_polynomial_fast(g)
        assert fast == brute
        assert ocd_polynomial_fast(g, prune=False)[0] == brute
        assert fstats.ocd_sets_found == bstats.ocd_sets_found == brute.evaluate(1)
        assert fstats.ocd_sets_found <= fstats.candidates_visited + 1

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=10))
    def test_prune_keeps_polynomial(self, g):
        full, fstats = ocd_polynomial_fast(g, prune=False)
        pruned, pstats = ocd_polynomial_fast(g)
        assert pruned == full
        assert pstats.candidates_visited <= fstats.candidates_visited

    def test_workers(self):
        g = build(Cycle(12))
        assert ocd_polynomial_fast(g, workers=2)[0] == ocd_polynomial_fast(g)[0]

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=9), st.data())
    def test_acceptance_rule_is_domination(self, g, data):
        c = data.draw(st.integers(1, g.vertices))
        assert complement_accepted(g, c) == is_dominating(g, complement(c, g.n))

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=9))
    def test_ocd_sets_agree_as_sets(self, g):
        assert set(iter_ocd_sets(g, "fast")) == set(iter_ocd_sets(g, "brute"))


class TestStructuralLaws:
    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=10))
    def test_coefficient_laws(self, g):
        p = ocd_polynomial_fast(g)[0]
        non_isolated = g.n - len(list(members(g.isolated())))
        assert p.coeffs[0] == 0
        assert p.coeffs[g.n] == 1
        assert p.coeffs[g.n - 1] == non_isolated
        assert p.evaluate(1) <= 2 ** g.n

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=9))
    def test_isolated_vertices_in_every_set(self, g):
        iso = g.isolated()
        for engine in ("fast", "brute"):
            assert all(s & iso == iso for s in iter_ocd_sets(g, engine))

    @settings(max_examples=30, deadline=None)
    @given(graphs(max_n=8))
    def test_bounded_by_domination_counts(self, g):
        p = ocd_polynomial_fast(g)[0]
        assert all(a <= b for a, b in zip(p.coeffs, nx_dominating_counts(g)))


class TestMinOcdNumber:
    @pytest.mark.parametrize("engine", ["brute", "fast"])
    def test_examples(self, engine):
        assert min_ocd_number(build(Path(5)), engine) == 3
        assert min_ocd_number(E3, engine) == 3
        assert min_ocd_number(K1, engine) == 1
        for n in range(1, 9):
            assert min_ocd_number(build(Complete(n)), engine) == 1

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=10))
    def test_matches_min_degree(self, g):
        assert min_ocd_number(g, "fast") == ocd_polynomial_bruteforce(g)[0].min_degree()


class TestCheckSet:
    def test_p4_split(self):
        v = check_set(P4, vset([1, 2]))
        assert v.dominating and not v.outer_connected and not v.ocd
        assert v.split_pair == (0, 3)
        assert v.undominated_vertex is None

    def test_p4_ocd(self):
        assert check_set(P4, vset([0, 3])).ocd

    def test_full_set(self):
        assert check_set(P4, P4.vertices).ocd

    def test_undominated_witness(self):
        v = check_set(P3, vset([0]))
        assert not v.dominating and v.undominated_vertex == 2

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=9), st.data())
    def test_witnesses_are_valid(self, g, data):
        s = data.draw(st.integers(0, g.vertices))
        v = check_set(g, s)
        if v.undominated_vertex is not None:
            u = v.undominated_vertex
            assert not s >> u & 1 and not g.adj[u] & s
        if v.split_pair is not None:
            a, b = v.split_pair
            rest = complement(s, g.n)
            assert rest >> a & 1 and rest >> b & 1
            assert not is_connected_induced(g, rest)
