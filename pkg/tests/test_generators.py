import pytest

from ktbondage.bondage import bondage_k, verify_certificate
from ktbondage.domination import gamma_t
from ktbondage.errors import BadParam
from ktbondage.generators import (
    ClassSpec,
    Family,
    build,
    complete,
    complete_bipartite,
    complete_minus_edge,
    construct_G_b_k,
    corollary_graph,
    cycle,
    gadget_T,
    gadget_Tm,
    gadget_TmN,
    merge,
    path,
    wheel,
)
from ktbondage.graph import bfs_order, degree, has_isolated_vertex


class TestBasicFamilies:
    def test_sizes(self):
        assert (path(4).n, path(4).m) == (4, 3)
        assert (cycle(5).n, cycle(5).m) == (5, 5)
        assert complete(8).m == 28

    def test_wheel(self):
        w = wheel(7)
        assert (w.n, w.m) == (8, 14)
        assert degree(wheel(5), 0) == 5
        assert wheel(8).m == 16
        assert w.labels["v0"] == 0 and w.labels["v7"] == 7

    def test_bipartite(self):
        g = complete_bipartite(3, 6)
        assert (g.n, g.m) == (9, 18)
        # connected, 2-regular on four vertices: a 4-cycle
        c4 = complete_bipartite(2, 2)
        assert c4.m == 4 and all(degree(c4, v) == 2 for v in range(4))
        assert len(bfs_order(c4)) == 4
        assert complete_bipartite(4, 5).m == 20
        assert g.labels["a1"] == 0 and g.labels["b1"] == 3 and g.labels["b6"] == 8

    @pytest.mark.parametrize("call", [
        lambda: path(1), lambda: cycle(2), lambda: wheel(2), lambda: complete(0),
        lambda: complete_bipartite(1, 5), lambda: complete_bipartite(4, 3),
    ])
    def test_bad_params(self, call):
        with pytest.raises(BadParam):
            call()

    def test_k_minus_e(self):
        g = complete_minus_edge(5)
        assert g.m == 9 and not g.has_edge(0, 1)
        assert g.labels == {"a": 0, "a'": 1}


class TestMerge:
    def test_p2_p2_is_p3(self):
        g = merge(path(2), 1, path(2), 0)
        assert g == path(3)

    def test_gadget_t(self):
        t = gadget_T()
        assert (t.n, t.m) == (6, 5)
        assert merge(path(5), 2, path(2), 0) == t
        assert degree(t, t.labels["v3"]) == 3
        assert t.labels["x"] == t.labels["v1"] == 0

    def test_bowtie(self):
        g = merge(complete(3), 0, complete(3), 2)
        assert (g.n, g.m) == (5, 6)
        assert degree(g, 0) == 4

    def test_bad_vertex(self):
        with pytest.raises(BadParam):
            merge(path(2), 2, path(2), 0)

    def test_sizes_add_up(self):
        g, h = cycle(5), wheel(4)
        out = merge(g, 3, h, 0)
        assert out.n == g.n + h.n - 1 and out.m == g.m + h.m


class TestGadgets:
    def test_sizes(self):
        assert gadget_Tm(3).n == 16
        assert gadget_TmN(3, 5).n == 20
        assert gadget_TmN(3, 6).n == 21

    def test_tm_zero_is_single_vertex(self):
        assert gadget_Tm(0).n == 1

    def test_tmn_labels(self):
        g = gadget_TmN(2, 5)
        x = g.labels["x"]
        assert g.labels["a'"] == x
        assert not g.has_edge(g.labels["a"], x)
        # x meets one spine edge per copy of T plus n-2 edges of K_n - e
        assert degree(g, x) == 2 + 3

    @pytest.mark.parametrize("m, n", [(1, 5), (2, 5)])
    def test_tmn_gamma(self, m, n):
        assert gamma_t(gadget_TmN(m, n)).gamma_t == 2 * m + 2

    @pytest.mark.parametrize("m, n", [(1, 5), (2, 5)])
    def test_tmn_even_bondage(self, m, n):
        g = gadget_TmN(m, n)
        for i in range(1, m + 1):
            assert bondage_k(g, 2 * i).bondage == i

    def test_classspec_min_m(self):
        with pytest.raises(BadParam):
            ClassSpec(Family.TM, (0,)).build()
        with pytest.raises(BadParam):
            build("tmn", 0, 5)


class TestConstructions:
    def test_bad_b(self):
        with pytest.raises(BadParam):
            construct_G_b_k(7, 3)
        with pytest.raises(BadParam):
            construct_G_b_k(0, 3)

    @pytest.mark.parametrize("k, b", [(7, 4), (7, 5)])
    def test_large_k_examples(self, k, b):
        g = construct_G_b_k(k, b)
        out = bondage_k(g, k)
        assert out.bondage == b
        assert verify_certificate(g, out.certificate)

    def test_k7_b4_shape(self):
        # T^3_5 with a P_3 hanging off x
        g = construct_G_b_k(7, 4)
        assert (g.n, g.m) == (22, 26)
        assert gamma_t(g).gamma_t == 9

    def test_k2_b1_is_t1_5(self):
        assert construct_G_b_k(2, 1) == gadget_TmN(1, 5)
        assert bondage_k(construct_G_b_k(2, 1), 2, prune=False).bondage == 1

    @pytest.mark.parametrize("k", range(1, 5))
    def test_no_isolated_vertices(self, k):
        for b in range(-(-k // 2), 6):
            assert not has_isolated_vertex(construct_G_b_k(k, b))

    def test_corollary_cases(self):
        assert corollary_graph(2, 3) == gadget_TmN(1, 4)
        g = corollary_graph(3, 3)
        assert g.n == gadget_TmN(1, 4).n + 2
        with pytest.raises(BadParam):
            corollary_graph(2, 1)

    def test_corollary_step(self):
        g = corollary_graph(2, 3)
        # both sides by plain enumeration
        assert bondage_k(g, 3, prune=False).bondage == bondage_k(g, 2, prune=False).bondage + 3


class TestClassSpec:
    def test_round_trip(self):
        spec = ClassSpec(Family.GBK, (7, 4))
        assert ClassSpec.from_dict(spec.to_dict()) == spec
        assert spec.to_dict() == {"family": "gbk", "k": 7, "b": 4}
        assert str(spec) == "gbk(k=7,b=4)"

    def test_build_by_name(self):
        assert build("wheel", 5) == wheel(5)
        assert build(Family.COMPLETE_BIPARTITE, 2, 3) == complete_bipartite(2, 3)
