"""Reaching definitions as an abstract inductive definition.

Definitions are uniquely labelled: each definition name is generated by at
most one node, so a fact ``(node, definition)`` is determined by the
definition name alone.  The lattice is the powerset of atoms ``n:d`` meaning
"definition d reaches the entry of node n".
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Mapping

from .aid import InductiveDefinition
from .engine import lfp_stages
from .errors import SizeLimitExceeded, ValidationError
from .lattice import MAX_POWERSET_ATOMS, PowersetLattice

Fact = tuple[str, str]


@dataclass(frozen=True)
class ControlFlowGraph:
    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    entry: str
    gen: Mapping[str, frozenset[str]] = field(default_factory=dict)
    kill: Mapping[str, frozenset[str]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", tuple(dict.fromkeys(tuple(e) for e in self.edges)))
        object.__setattr__(self, "gen", {n: frozenset(self.gen.get(n, ())) for n in self.nodes})
        object.__setattr__(self, "kill", {n: frozenset(self.kill.get(n, ())) for n in self.nodes})
        if len(set(self.nodes)) != len(self.nodes):
            raise ValidationError("duplicate node names")
        known = set(self.nodes)
        if self.entry not in known:
            raise ValidationError(f"entry {self.entry!r} is not a node")
        for m, n in self.edges:
            if m not in known or n not in known:
                raise ValidationError(f"edge {m} -> {n} mentions an unknown node")
        origin: dict[str, str] = {}
        for n in self.nodes:
            for d in self.gen[n]:
                if d in origin:
                    raise ValidationError(f"definition {d!r} generated by both {origin[d]} and {n}")
                origin[d] = n

    @property
    def origin(self) -> dict[str, str]:
        return {d: n for n in self.nodes for d in self.gen[n]}

    @property
    def definitions(self) -> list[str]:
        return sorted(self.origin)

    def predecessors(self, n: str) -> list[str]:
        return [m for m, k in self.edges if k == n]

    def successors(self, n: str) -> list[str]:
        return [k for m, k in self.edges if m == n]


@dataclass(frozen=True)
class DataflowSolution:
    in_sets: dict[str, frozenset[Fact]]


@dataclass(frozen=True)
class RdEncoding:
    phi: InductiveDefinition
    atoms: dict[tuple[str, str], str]
    cfg: ControlFlowGraph

    def decode(self, element: int) -> DataflowSolution:
        L = self.phi.lattice
        present = set(L.atom_set(element))
        origin = self.cfg.origin
        return DataflowSolution(
            {
                n: frozenset((origin[d], d) for d in self.cfg.definitions if self.atoms[n, d] in present)
                for n in self.cfg.nodes
            }
        )


def rd_aid(cfg: ControlFlowGraph) -> RdEncoding:
    defs = cfg.definitions
    budget = len(cfg.nodes) * len(defs)
    if budget > MAX_POWERSET_ATOMS:
        raise SizeLimitExceeded("reaching-definition atoms", budget, MAX_POWERSET_ATOMS)
    atoms = {(n, d): f"{n}:{d}" for n in cfg.nodes for d in defs}
    L = PowersetLattice(list(atoms.values()))

    def single(n: str, d: str) -> int:
        return L.element_of([atoms[n, d]])

    pairs = []
    for m, n in cfg.edges:
        for d in cfg.gen[m]:
            pairs.append((single(n, d), L.bottom))
        for d in defs:
            # a gen'd definition already has the axiom rule above
            if d not in cfg.kill[m] and d not in cfg.gen[m]:
                pairs.append((single(n, d), single(m, d)))
    return RdEncoding(InductiveDefinition(L, pairs), atoms, cfg)


def analyze(cfg: ControlFlowGraph) -> DataflowSolution:
    enc = rd_aid(cfg)
    closed = lfp_stages(enc.phi).closed
    return enc.decode(enc.phi.lattice.join_gens(closed))


def worklist_solve(cfg: ControlFlowGraph) -> DataflowSolution:
    """Classical forward may-analysis: out = gen | (in - kill)."""
    gen_facts = {n: frozenset((n, d) for d in cfg.gen[n]) for n in cfg.nodes}
    in_sets: dict[str, frozenset[Fact]] = {n: frozenset() for n in cfg.nodes}
    out: dict[str, frozenset[Fact]] = {n: frozenset() for n in cfg.nodes}
    preds = {n: cfg.predecessors(n) for n in cfg.nodes}
    succs = {n: cfg.successors(n) for n in cfg.nodes}
    work = deque(cfg.nodes)
    queued = set(cfg.nodes)
    while work:
        n = work.popleft()
        queued.discard(n)
        incoming = frozenset().union(*(out[m] for m in preds[n]))
        in_sets[n] = incoming
        killed = {f for f in incoming if f[1] in cfg.kill[n]}
        new_out = gen_facts[n] | (incoming - killed)
        if new_out != out[n]:
            out[n] = new_out
            for s in succs[n]:
                if s not in queued:
                    work.append(s)
                    queued.add(s)
    return DataflowSolution(in_sets)
