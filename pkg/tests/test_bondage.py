import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracle import brute_bondage, brute_max_gamma, connected_corpus, graphs, no_valid_set_below
from ktbondage import bondage as bondage_mod
from ktbondage.bondage import (
    BondageCertificate,
    BondageOutcome,
    bondage_k,
    lower_bound,
    max_achievable_increase,
    sanchis_max_edges,
    verify_certificate,
)
from ktbondage.domination import DominationCertificate, gamma_t
from ktbondage.errors import BadParam, ExceedsSearchBudget, IsolatedVertex, MissingEdge
from ktbondage.formulas import bondage_k_complete
from ktbondage.generators import complete, cycle, path, wheel
from ktbondage.graph import EdgeSet, Graph, remove_edges


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


class TestExamples:
    @pytest.mark.parametrize("prune", [True, False])
    @pytest.mark.parametrize("g, k, value", [
        (cycle(5), 1, 2),
        (complete(5), 2, 6),
        (path(6), 1, 2),
    ])
    def test_values(self, g, k, value, prune):
        out = bondage_k(g, k, prune=prune)
        assert out.bondage == value
        assert verify_certificate(g, out.certificate)

    @pytest.mark.parametrize("prune", [True, False])
    def test_star_not_achievable(self, prune):
        out = bondage_k(star(3), 1, prune=prune)
        assert not out.achievable
        assert out.max_increase == 0
        assert out.to_dict() == {"status": "not_achievable", "k": 1, "max_increase": 0}

    def test_p4_k3_not_achievable(self):
        out = bondage_k(path(4), 3)
        assert not out.achievable and out.max_increase == 2

    def test_wheel_max(self):
        assert bondage_k(wheel(7), 6).bondage == 10
        assert bondage_k(wheel(8), 6).bondage == 10

    def test_bad_input(self):
        with pytest.raises(IsolatedVertex):
            bondage_k(Graph.from_edges(3, [(0, 1)]), 1)
        with pytest.raises(BadParam):
            bondage_k(path(4), 0)

    def test_colex_least_witness(self):
        # among the 2-edge deletions of C_5 the colex-least valid one
        out = bondage_k(cycle(5), 1)
        size, deleted = brute_bondage(5, cycle(5).edges.pairs, 1)
        assert out.certificate.deleted.to_list() == [list(e) for e in deleted]


class TestLowerBound:
    def test_values(self):
        assert [lower_bound(k) for k in (1, 2, 7)] == [1, 1, 4]
        with pytest.raises(BadParam):
            lower_bound(0)


class TestSanchis:
    def test_values(self):
        assert sanchis_max_edges(10, 5) == 17
        assert sanchis_max_edges(9, 9) == 4
        assert sanchis_max_edges(12, 5) >= sanchis_max_edges(12, 6)

    @pytest.mark.parametrize("n, gamma", [(10, 4), (5, 6)])
    def test_guards(self, n, gamma):
        with pytest.raises(BadParam):
            sanchis_max_edges(n, gamma)


class TestCertificates:
    def k5_cut_certificate(self):
        k5 = complete(5)
        cut = EdgeSet.of([(u, v) for u in (0, 1, 2) for v in (3, 4)])
        after = gamma_t(remove_edges(k5, cut))
        return k5, BondageCertificate(2, cut, gamma_t(k5), after)

    def test_k5_cut(self):
        g, cert = self.k5_cut_certificate()
        assert cert.bondage == 6 and cert.after.gamma_t == 4
        assert verify_certificate(g, cert)

    def test_tampered_after_value(self):
        c5 = cycle(5)
        cert = bondage_k(c5, 1).certificate
        forged = BondageCertificate(1, cert.deleted, cert.before,
                                    DominationCertificate(cert.after.gamma_t + 1,
                                                          cert.after.witness))
        assert not verify_certificate(c5, forged)

    def test_tampered_witness(self):
        g, cert = self.k5_cut_certificate()
        # vertex 4 keeps only neighbour 3, which this witness omits
        forged = BondageCertificate(2, cert.deleted, cert.before, DominationCertificate(4, (0, 1, 2, 4)))
        assert not verify_certificate(g, forged)

    def test_w7_matching(self):
        w7 = wheel(7)
        keep = {(1, 2), (3, 4), (5, 6), (0, 7)}
        deleted = EdgeSet.of(e for e in w7.edges if e not in keep)
        after = gamma_t(remove_edges(w7, deleted))
        cert = BondageCertificate(6, deleted, gamma_t(w7), after)
        assert cert.bondage == 10 and after.gamma_t == 8
        assert verify_certificate(w7, cert)

    def test_missing_edge(self):
        g, cert = self.k5_cut_certificate()
        with pytest.raises(MissingEdge):
            verify_certificate(path(5), cert)

    def test_isolating_deletion_rejected(self):
        p3 = path(3)
        cert = BondageCertificate(1, EdgeSet.of([(0, 1)]), gamma_t(p3),
                                  DominationCertificate(2, (1, 2)))
        assert not verify_certificate(p3, cert)

    def test_json_round_trip(self):
        out = bondage_k(complete(5), 2)
        d = out.to_dict()
        assert d["status"] == "achieved"
        assert set(d) == {"status", "k", "bondage", "deleted", "gamma_before", "witness_before",
                          "gamma_after", "witness_after"}
        assert BondageCertificate.from_dict(d) == out.certificate


class TestMaxIncrease:
    def test_examples(self):
        assert max_achievable_increase(wheel(7)) == 6
        assert max_achievable_increase(wheel(8)) == 6
        assert max_achievable_increase(path(2)) == 0

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=7, max_m=10))
    def test_matches_brute_force(self, g):
        base = gamma_t(g).gamma_t
        assert max_achievable_increase(g) == brute_max_gamma(g.n, list(g.edges)) - base


class TestSearchContract:
    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=10, max_m=16), st.integers(1, 3))
    def test_minimal_against_brute_force(self, g, k):
        out = bondage_k(g, k)
        if not out.achievable:
            if g.m <= 12:
                assert brute_max_gamma(g.n, list(g.edges)) - gamma_t(g).gamma_t == out.max_increase
            return
        assert verify_certificate(g, out.certificate)
        assert out.bondage >= lower_bound(k)
        assert no_valid_set_below(g.n, list(g.edges), k, out.bondage)

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=7, max_m=10), st.integers(1, 3))
    def test_same_certificate_as_brute_force(self, g, k):
        size, deleted = brute_bondage(g.n, list(g.edges), k)
        out = bondage_k(g, k)
        assert out.bondage == size
        if size is not None:
            assert out.certificate.deleted.pairs == tuple(deleted)

    @settings(max_examples=30, deadline=None)
    @given(graphs(max_n=8, max_m=12))
    def test_monotone_in_k(self, g):
        values = [bondage_k(g, k).bondage for k in range(1, 5)]
        reached = [v for v in values if v is not None]
        assert reached == sorted(reached)
        # once unreachable, larger k stays unreachable
        if None in values:
            assert all(v is None for v in values[values.index(None):])

    def test_jobs_do_not_change_output(self):
        for g, k in ((complete(6), 2), (wheel(6), 3), (cycle(8), 2)):
            one = bondage_k(g, k).to_dict()
            assert bondage_k(g, k, jobs=3).to_dict() == one
            assert bondage_k(g, k, prune=False, jobs=2).to_dict() == one

    def test_budget(self):
        with pytest.raises(ExceedsSearchBudget):
            bondage_k(complete(7), 3, budget=50)
        with pytest.raises(ExceedsSearchBudget):
            bondage_k(complete(7), 3, prune=False, budget=50)

    def test_budget_from_environment(self, monkeypatch):
        monkeypatch.setenv("BONDAGE_BUDGET", "20")
        assert bondage_mod.default_budget() == 20
        with pytest.raises(ExceedsSearchBudget):
            bondage_k(complete(7), 3)
        monkeypatch.delenv("BONDAGE_BUDGET")
        assert bondage_mod.default_budget() == 10**8

    def test_outcome_shape(self):
        out = BondageOutcome(3, max_increase=1)
        assert out.bondage is None and not out.achievable


@pytest.fixture(scope="module")
def corpus_values():
    """(n, m, k, B_t^k) for connected corpus graphs with n >= 5 where B_t^k exists."""
    rows = []
    for g in connected_corpus(7):
        if g.n < 5:
            continue
        kmax = g.n - 2 if g.n % 2 == 0 else g.n - 3
        for k in range(1, kmax + 1):
            value = bondage_k(g, k).bondage
            if value is not None:
                rows.append((g.n, g.m, k, value))
    return rows


@pytest.mark.slow
class TestCompleteGraphBound:
    def test_formula_bounds_every_corpus_graph(self, corpus_values):
        over = [(n, m, k, v, bondage_k_complete(n, k)) for n, m, k, v in corpus_values
                if v > bondage_k_complete(n, k)]
        assert not over

    def test_oracle_value_of_k_n_bounds_every_corpus_graph(self, corpus_values):
        top = {}
        for n, m, k, v in corpus_values:
            if m == n * (n - 1) // 2:
                top[n, k] = v
        assert all(v <= top[n, k] for n, m, k, v in corpus_values)
