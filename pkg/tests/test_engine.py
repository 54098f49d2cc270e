import random

import pytest

from tarskifix.aid import InductiveDefinition, MonotoneMap, gamma_map, is_phi_closed
from tarskifix.corpus import corpus_lattices, random_aid, random_monotone_map
from tarskifix.engine import (
    correspondence,
    enumerate_phi_closed,
    intersection_closed,
    kleene_chain,
    lfp_aid,
    lfp_stages,
    minimum_closed,
    oracle_kleene,
    oracle_tarski,
)
from tarskifix.errors import NotCertified, SizeLimitExceeded
from tarskifix.lattice import GenSubset, build_standard

from .oracles import brute_phi_closed

CORPUS = corpus_lattices()
NAMES = sorted(CORPUS)


@pytest.fixture
def two_rule(pset2):
    p, q = pset2.index("p"), pset2.index("q")
    return InductiveDefinition(pset2, [(p, pset2.bottom), (q, p)])


def names_of(L, s):
    return [L.name(x) for x in L.subset_ids(s)]


class TestLfpStages:
    def test_empty(self, pset2):
        closed, trace = lfp_stages(InductiveDefinition(pset2, []))
        assert closed == GenSubset.empty(2)
        assert trace.stages == (GenSubset.empty(2),)
        assert trace.converged_at == 0

    def test_two_rule(self, two_rule, pset2):
        closed, trace = lfp_stages(two_rule)
        assert [names_of(pset2, s) for s in trace.stages] == [[], ["{p}"], ["{p}", "{q}"]]
        assert names_of(pset2, closed) == ["{p}", "{q}"]
        # brute force: minimal closed set over all 16 subsets of B
        closed_sets = [b for b in range(4) if brute_phi_closed(pset2, two_rule.pairs, b)]
        assert min(closed_sets, key=lambda b: bin(b).count("1")) == closed.bits

    def test_chain3_rule_never_fires(self):
        L = build_standard(("chain", 3))
        phi = InductiveDefinition(L, [(2, 1)])
        closed, trace = lfp_stages(phi)
        assert L.subset_ids(closed) == [0]
        assert minimum_closed(enumerate_phi_closed(phi)) == closed

    @pytest.mark.parametrize("name", NAMES)
    def test_stage_discipline(self, name):
        L = CORPUS[name]
        rng = random.Random(name)
        for _ in range(20):
            phi = random_aid(L, rng)
            closed, trace = lfp_stages(phi)
            assert trace.stages[0] == L.down(L.bottom)
            assert len(trace.stages) <= L.width + 1
            for prev, nxt in zip(trace.stages, trace.stages[1:]):
                assert prev < nxt
            assert all(L.down(L.join_gens(s)) == s for s in trace.stages)
            assert is_phi_closed(phi, closed)


class TestLfpAid:
    def test_identity(self, pset2):
        g = MonotoneMap.certify(pset2, range(4))
        assert lfp_aid(g) == pset2.bottom

    @pytest.mark.parametrize("c", range(4))
    def test_constant(self, pset2, c):
        g = MonotoneMap.certify(pset2, [c] * 4)
        assert lfp_aid(g) == c

    def test_two_rule_operator(self, two_rule, pset2):
        g = gamma_map(two_rule)
        assert lfp_aid(g) == pset2.index("{p,q}") == oracle_tarski(g)

    def test_uncertified(self, pset2):
        g = MonotoneMap(pset2, (0, 1, 2, 3))
        for fn in (lfp_aid, oracle_tarski, oracle_kleene, kleene_chain):
            with pytest.raises(NotCertified):
                fn(g)

    @pytest.mark.parametrize("name", NAMES)
    def test_fixed_point_laws(self, name):
        L = CORPUS[name]
        rng = random.Random(name)
        for _ in range(20):
            g = random_monotone_map(L, rng)
            p = lfp_aid(g)
            assert g(p) == p
            for x in range(L.size):
                if g(x) == x:
                    assert L.leq(p, x)


class TestOracles:
    def test_tarski_identity(self, pset2):
        assert oracle_tarski(MonotoneMap.certify(pset2, range(4))) == pset2.bottom

    def test_tarski_constant_top(self, pset2):
        assert oracle_tarski(MonotoneMap.certify(pset2, [pset2.top] * 4)) == pset2.top

    def test_tarski_lcm2(self):
        import math

        L = build_standard(("divisors", 12))
        g = MonotoneMap.from_function(L, lambda x: L.index(str(math.lcm(int(L.name(x)), 2))))
        prefix = [int(L.name(x)) for x in range(L.size) if L.leq(g(x), x)]
        assert prefix == [2, 4, 6, 12]
        assert L.name(oracle_tarski(g)) == str(math.gcd(*prefix)) == "2"

    def test_tarski_limit(self):
        L = build_standard(("chain", 70000))
        g = MonotoneMap.certify(L, range(L.size))
        with pytest.raises(SizeLimitExceeded):
            oracle_tarski(g)
        assert oracle_kleene(g) == 0

    def test_tarski_limit_lowered(self, pset2):
        g = MonotoneMap.certify(pset2, range(4))
        with pytest.raises(SizeLimitExceeded):
            oracle_tarski(g, limit=3)

    def test_kleene_identity(self, pset2):
        assert kleene_chain(MonotoneMap.certify(pset2, range(4))) == [pset2.bottom]

    def test_kleene_constant(self, pset2):
        chain = kleene_chain(MonotoneMap.certify(pset2, [2] * 4))
        assert chain == [0, 2] and len(chain) <= 2

    def test_kleene_two_rule(self, two_rule, pset2):
        chain = kleene_chain(gamma_map(two_rule))
        assert [pset2.name(x) for x in chain] == ["{}", "{p}", "{p,q}"]
        assert chain[-1] == oracle_tarski(gamma_map(two_rule))

    @pytest.mark.parametrize("name", NAMES)
    def test_three_way_agreement(self, name):
        L = CORPUS[name]
        rng = random.Random(name)
        for _ in range(15):
            g = random_monotone_map(L, rng)
            assert lfp_aid(g) == oracle_tarski(g) == oracle_kleene(g)


class TestEnumerate:
    def test_chain2_empty(self):
        L = build_standard(("chain", 2))
        closed = enumerate_phi_closed(InductiveDefinition(L, []))
        assert [L.subset_ids(s) for s in closed] == [[0], [0, 1]]

    def test_powerset2_empty(self, pset2):
        closed = enumerate_phi_closed(InductiveDefinition(pset2, []))
        assert [names_of(pset2, s) for s in closed] == [[], ["{p}"], ["{q}"], ["{p}", "{q}"]]

    @pytest.mark.parametrize("name", NAMES)
    def test_full_set_always_listed(self, name):
        L = CORPUS[name]
        rng = random.Random(name)
        phi = random_aid(L, rng)
        closed = enumerate_phi_closed(phi)
        assert GenSubset.full(L.width) in closed
        assert intersection_closed(L, closed)

    def test_limit(self):
        L = build_standard(("powerset", 5))
        with pytest.raises(SizeLimitExceeded):
            enumerate_phi_closed(InductiveDefinition(L, []), limit=4)

    def test_minimum_closed_none(self):
        assert minimum_closed([GenSubset(1, 2), GenSubset(2, 2)]) is None


class TestCorrespondence:
    def test_powerset2_empty(self, pset2):
        report = correspondence(InductiveDefinition(pset2, []))
        assert report.ok
        assert report.closed_count == report.prefix_count == 4

    def test_mutual_inverse(self, two_rule, pset2):
        report = correspondence(two_rule)
        assert report.ok
        back = dict(report.prefix_to_closed)
        for y, a in report.closed_to_prefix:
            assert back[a] == y

    @pytest.mark.parametrize("name", NAMES)
    def test_counts(self, name):
        L = CORPUS[name]
        rng = random.Random(name)
        for _ in range(10):
            report = correspondence(random_aid(L, rng))
            assert report.ok
            assert report.closed_count == report.prefix_count
