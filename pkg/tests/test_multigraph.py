import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from scramblekit import families as F
from scramblekit.errors import (
    Disconnected,
    EmptyGraph,
    EmptySet,
    EmptySide,
    LoopEdge,
    NotAnEdge,
    TerminalsOverlap,
    ZeroFactor,
)
from scramblekit.multigraph import (
    build,
    canonical_form,
    cartesian_product,
    components,
    contract_edge,
    edge_cut,
    is_connected_subset,
    min_cut_between,
    ply,
    subdivide_edge,
    underlying_simple,
)

BUNDLE3 = build(2, [(0, 1, 3)])


def random_graph(n, seed, max_mult=3):
    return F.random_connected_multigraph(n, 0.5, max_mult, seed=seed)


class TestBuild:
    def test_bundle(self):
        assert BUNDLE3.n == 2 and BUNDLE3.num_edges == 3 and BUNDLE3.mult(1, 0) == 3

    def test_plied_path_three(self):
        g = build(3, [(0, 1, 3), (1, 2, 3)])
        assert g == F.plied_path(3)

    def test_repeated_pairs_accumulate(self):
        assert build(2, [(0, 1), (1, 0, 2)]) == BUNDLE3

    @pytest.mark.parametrize(
        "n, edges, err",
        [
            (4, [(0, 1, 1), (2, 3, 1)], Disconnected),
            (2, [(0, 0, 1), (0, 1, 1)], LoopEdge),
            (0, [], EmptyGraph),
        ],
    )
    def test_rejects(self, n, edges, err):
        with pytest.raises(err):
            build(n, edges)

    def test_single_vertex_allowed(self):
        assert build(1, []).n == 1


class TestCuts:
    def test_prism_column(self):
        y = F.stacked_prism(4, 2)
        assert edge_cut(y, y.column(0)) == 4

    def test_wheel_hub(self):
        assert edge_cut(F.fig2_wheel(), {F.FIG2_HUB}) == 6

    def test_bundle(self):
        assert edge_cut(BUNDLE3, {0}) == 3

    @pytest.mark.parametrize("side", [set(), {0, 1}])
    def test_improper_side(self, side):
        with pytest.raises(EmptySide):
            edge_cut(BUNDLE3, side)

    def test_cut_symmetry(self):
        for seed in range(20):
            g = random_graph(6, seed)
            for side in oracles.all_sides(g.n):
                rest = set(range(g.n)) - side
                assert edge_cut(g, side) == edge_cut(g, rest) == oracles.cut_value(g, side)


class TestConnectivity:
    def test_path_examples(self):
        p3 = F.path(3)
        assert not is_connected_subset(p3, {0, 2})
        assert is_connected_subset(p3, {0, 1})

    def test_wheel_rim_pair(self):
        assert is_connected_subset(F.fig2_wheel(), {0, 1})

    def test_empty(self):
        with pytest.raises(EmptySet):
            is_connected_subset(BUNDLE3, [])

    def test_matches_oracle(self):
        for seed in range(10):
            g = random_graph(6, seed, 1)
            for bits in range(1, 1 << g.n):
                b = {v for v in range(g.n) if bits >> v & 1}
                assert is_connected_subset(g, b) == oracles.is_connected(g, b)
            assert components(g, g.full_mask) == [g.full_mask]


class TestMinCut:
    def test_bundle(self):
        assert min_cut_between(BUNDLE3, {0}, {1}).value == 3

    def test_prism_columns(self):
        y = F.stacked_prism(4, 2)
        for v in range(1, 4):
            res = min_cut_between(y, y.column(0), y.column(v))
            assert res.value == 4 == oracles.brute_min_cut(y, y.column(0), y.column(v))

    def test_wheel_hub_to_rim_pairs(self):
        w = F.fig2_wheel()
        for egg in F.FIG2_EGGS:
            if F.FIG2_HUB not in egg:
                assert min_cut_between(w, {F.FIG2_HUB}, egg).value >= 4

    def test_overlap_rejected(self):
        with pytest.raises(TerminalsOverlap):
            min_cut_between(BUNDLE3, {0}, {0, 1})
        with pytest.raises(EmptySet):
            min_cut_between(BUNDLE3, set(), {1})

    def test_exhaustive_against_all_sides(self):
        # every terminal pair of single vertices and of random disjoint sets on n <= 6
        for seed in range(40):
            n = 4 + seed % 3
            g = random_graph(n, seed)
            for s, t in itertools.permutations(range(n), 2):
                res = min_cut_between(g, {s}, {t})
                assert s in res.side and t not in res.side
                assert edge_cut(g, res.side) == res.value == oracles.brute_min_cut(g, {s}, {t})
            s, t = {0, 1}, {n - 1}
            res = min_cut_between(g, s, t)
            assert s <= res.side and not (t & res.side)
            assert res.value == oracles.brute_min_cut(g, s, t) == edge_cut(g, res.side)


class TestEdits:
    def test_fig1_contracts_to_wheel(self):
        h, mapping = contract_edge(F.fig1_graph(), *F.FIG1_E)
        assert canonical_form(h) == canonical_form(F.fig2_wheel())
        assert (h.n, h.num_edges) == (7, 12)
        assert len(mapping) == 8

    def test_bundle_contracts_to_point(self):
        h, mapping = contract_edge(BUNDLE3, 0, 1)
        assert h.n == 1 and h.num_edges == 0 and mapping == [0, 0]

    def test_triangle_contracts_to_double_edge(self):
        h, _ = contract_edge(F.cycle(3), 0, 1)
        assert h == build(2, [(0, 1, 2)])

    def test_not_an_edge(self):
        with pytest.raises(NotAnEdge):
            contract_edge(F.path(3), 0, 2)
        with pytest.raises(NotAnEdge):
            subdivide_edge(F.path(3), 0, 2)

    def test_subdivision_examples(self):
        assert subdivide_edge(F.fig4_left(), *F.FIG4_SUBDIVIDED) == F.fig4_right()
        assert canonical_form(subdivide_edge(build(2, [(0, 1, 2)]), 0, 1)) == canonical_form(F.cycle(3))
        assert subdivide_edge(F.path(2), 0, 1) == build(3, [(0, 2), (2, 1)])

    def test_subdivide_then_contract_is_identity_up_to_iso(self):
        for seed in range(30):
            n = 3 + seed % 5
            g = random_graph(n, seed)
            for u, v, _ in g.edges():
                h = subdivide_edge(g, u, v)
                assert h.n == g.n + 1 and h.num_edges == g.num_edges + 1
                back, _ = contract_edge(h, u, g.n)
                assert canonical_form(back) == canonical_form(g)

    def test_ply(self):
        assert ply(F.path(3), 3) == F.plied_path(3)
        g = random_graph(5, 3)
        assert ply(g, 1) == g
        assert ply(F.path(4), 2) == build(4, [(0, 1, 2), (1, 2, 2), (2, 3, 2)])
        with pytest.raises(ZeroFactor):
            ply(g, 0)

    def test_underlying_simple(self):
        assert underlying_simple(F.plied_path(3)) == F.path(3)
        assert underlying_simple(F.path(5)) == F.path(5)
        assert underlying_simple(BUNDLE3) == F.path(2)


class TestProducts:
    def test_prism(self):
        y = cartesian_product(F.cycle(4), F.path(2))
        assert (y.n, y.num_edges) == (8, 12)
        assert y.column(1) == {2, 3} and y.row(0) == {0, 2, 4, 6}

    def test_torus(self):
        t = cartesian_product(F.cycle(4), F.cycle(4))
        assert (t.n, t.num_edges) == (16, 32)
        assert all(t.degree(v) == 4 for v in t.vertices)

    def test_trivial_factor(self):
        g = random_graph(5, 1)
        assert cartesian_product(F.path(1), g) == g

    def test_degree_law(self):
        for seed in range(8):
            g1, g2 = random_graph(3, seed), random_graph(4, seed + 100)
            p = cartesian_product(g1, g2)
            for a, b in itertools.product(range(g1.n), range(g2.n)):
                assert p.degree(a * g2.n + b) == g1.degree(a) + g2.degree(b)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 7), st.integers(0, 10_000), st.integers(1, 3))
def test_edits_preserve_connectedness(n, seed, t):
    g = random_graph(n, seed)
    u, v, _ = g.edges()[seed % len(g.edges())]
    for h in (subdivide_edge(g, u, v), contract_edge(g, u, v)[0], ply(g, t)):
        assert is_connected_subset(h, range(h.n))
