"""Least fixed points by stage iteration, plus independent oracles.

``lfp_stages`` builds the least closed subset of generators by accumulating
``T[n+1] = c(T[n] | bar_gamma(T[n]))`` from ``T[0] = c({})``.  On a finite
generating set this ascending chain stabilizes after at most ``|B|`` strict
steps.  The oracles never touch the stage loop: ``oracle_tarski`` takes the
meet of all prefix points, ``oracle_kleene`` iterates the map from bottom,
and ``enumerate_phi_closed`` scans every subset of generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .aid import (
    InductiveDefinition,
    MonotoneMap,
    bar_gamma,
    c_closure,
    gamma,
    is_phi_closed,
    phi_of_gamma,
)
from .errors import NotCertified, SizeLimitExceeded
from .lattice import MAX_SCAN_GENERATORS, GenSubset, Lattice

TARSKI_LIMIT = 1 << 16


@dataclass(frozen=True)
class StageTrace:
    stages: tuple[GenSubset, ...]
    converged_at: int

    def __len__(self) -> int:
        return len(self.stages)


@dataclass(frozen=True)
class LfpResult:
    closed: GenSubset
    trace: StageTrace

    def __iter__(self):
        # allows ``I, trace = lfp_stages(phi)``
        return iter((self.closed, self.trace))


def lfp_stages(phi: InductiveDefinition) -> LfpResult:
    L = phi.lattice
    width = L.width
    stage = c_closure(L, GenSubset.empty(width))
    stages = [stage]
    while True:
        nxt = c_closure(L, stage | bar_gamma(phi, stage))
        if nxt == stage:
            break
        stages.append(nxt)
        stage = nxt
    return LfpResult(stage, StageTrace(tuple(stages), len(stages) - 1))


def lfp_aid(g: MonotoneMap, limit: int | None = None) -> int:
    """Least fixed point of ``g`` as the join of the least closed set of its rules."""
    if not g.certified:
        raise NotCertified()
    phi = phi_of_gamma(g) if limit is None else phi_of_gamma(g, limit)
    return g.lattice.join_gens(lfp_stages(phi).closed)


def oracle_tarski(g: MonotoneMap, limit: int = TARSKI_LIMIT) -> int:
    """Meet of all prefix points ``{x | g(x) <= x}``."""
    if not g.certified:
        raise NotCertified()
    L = g.lattice
    limit = min(limit, TARSKI_LIMIT)
    if L.size > limit:
        raise SizeLimitExceeded("lattice for Tarski scan", L.size, limit)
    prefix = [x for x in range(L.size) if L.leq(g(x), x)]
    return L.meet(prefix)


def oracle_kleene(g: MonotoneMap) -> int:
    if not g.certified:
        raise NotCertified()
    x = g.lattice.bottom
    while True:
        y = g(x)
        if y == x:
            return x
        x = y


def kleene_chain(g: MonotoneMap) -> list[int]:
    """The ascending chain ``bottom, g(bottom), ...`` up to its first repeat."""
    if not g.certified:
        raise NotCertified()
    chain = [g.lattice.bottom]
    while g(chain[-1]) != chain[-1]:
        chain.append(g(chain[-1]))
    return chain


def _scan_order(bits: int) -> tuple[int, list[int]]:
    return bin(bits).count("1"), [p for p in range(bits.bit_length()) if (bits >> p) & 1]


def enumerate_phi_closed(phi: InductiveDefinition, limit: int = MAX_SCAN_GENERATORS) -> list[GenSubset]:
    """Every closed subset of generators, by cardinality then position order."""
    width = phi.lattice.width
    limit = min(limit, MAX_SCAN_GENERATORS)
    if width > limit:
        raise SizeLimitExceeded("generators for closed-set scan", width, limit)
    found = [
        bits for bits in range(1 << width) if is_phi_closed(phi, GenSubset(bits, width))
    ]
    found.sort(key=_scan_order)
    return [GenSubset(bits, width) for bits in found]


def minimum_closed(closed: list[GenSubset]) -> GenSubset | None:
    """The subset-least member of ``closed``, or None if there is none."""
    for candidate in closed:
        if all(candidate.issubset(other) for other in closed):
            return candidate
    return None


def intersection_closed(lattice: Lattice, closed: list[GenSubset]) -> bool:
    """Whether pairwise intersections of ``closed`` that are c-closed stay in it."""
    members = set(closed)
    for i, x in enumerate(closed):
        for y in closed[i:]:
            meet = x & y
            if c_closure(lattice, meet) == meet and meet not in members:
                return False
    return True


@dataclass(frozen=True)
class CorrespondenceReport:
    closed_to_prefix: tuple[tuple[GenSubset, int], ...]
    prefix_to_closed: tuple[tuple[int, GenSubset], ...]
    closed_count: int
    prefix_count: int
    round_trips_exact: bool
    bijective: bool

    @property
    def ok(self) -> bool:
        return self.bijective and self.round_trips_exact and self.closed_count == self.prefix_count


def correspondence(phi: InductiveDefinition, limit: int = MAX_SCAN_GENERATORS) -> CorrespondenceReport:
    """Pair closed generator sets with prefix points of the induced operator."""
    L = phi.lattice
    closed = enumerate_phi_closed(phi, limit)
    prefix = [a for a in range(L.size) if L.leq(gamma(phi, a), a)]

    forward = tuple((y, L.join_gens(y)) for y in closed)
    backward = tuple((a, L.down(a)) for a in prefix)

    exact = all(L.down(a) == y for y, a in forward) and all(
        L.join_gens(y) == a for a, y in backward
    )
    prefix_set = set(prefix)
    closed_set = set(closed)
    images = [a for _, a in forward]
    preimages = [y for _, y in backward]
    bijective = (
        len(set(images)) == len(images)
        and set(images) == prefix_set
        and len(set(preimages)) == len(preimages)
        and set(preimages) == closed_set
    )
    return CorrespondenceReport(forward, backward, len(closed), len(prefix), exact, bijective)
