"""Abstract inductive definitions on a set-generated lattice.

An inductive definition is a finite set of rules ``(b, a)`` with ``b`` a
generator and ``a`` any element, read as "b is derivable once everything in
down(a) is".  This module holds the closure operator on generator subsets,
the induced monotone operator on the lattice, and the translation of a
monotone map back into rules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import NotCertified, NotMonotone, SizeLimitExceeded, ValidationError
from .lattice import GenSubset, Lattice

MATERIALIZE_LIMIT = 1 << 20


@dataclass(frozen=True, eq=False)
class InductiveDefinition:
    lattice: Lattice
    pairs: tuple[tuple[int, int], ...]

    def __init__(self, lattice: Lattice, pairs: Iterable[tuple[int, int]]) -> None:
        clean = set()
        for b, a in pairs:
            if not lattice.is_generator(b):
                raise ValidationError(f"rule head {_safe_name(lattice, b)} is not a generator")
            if not 0 <= a < lattice.size:
                raise ValidationError(f"rule premise id {a} is not an element")
            clean.add((b, a))
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "pairs", tuple(sorted(clean)))

    @cached_property
    def rules(self) -> tuple[tuple[int, int], ...]:
        """Rules as ``(head bit, premise down-set bits)`` for the engine."""
        L = self.lattice
        return tuple((1 << L.gen_position(b), L.down_bits(a)) for b, a in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InductiveDefinition):
            return NotImplemented
        return self.lattice is other.lattice and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash((id(self.lattice), self.pairs))


def _safe_name(lattice: Lattice, x: int) -> str:
    return lattice.name(x) if 0 <= x < lattice.size else f"#{x}"


@dataclass(frozen=True)
class MonotoneMap:
    lattice: Lattice
    table: tuple[int, ...]
    certified: bool = False

    @classmethod
    def certify(cls, lattice: Lattice, table: Sequence[int]) -> MonotoneMap:
        """Check totality and monotonicity, returning a certified map.

        Checking the Hasse covers suffices: monotone on covers implies
        monotone on their transitive closure.
        """
        table = tuple(table)
        if len(table) != lattice.size:
            raise ValidationError(f"map has {len(table)} entries, lattice has {lattice.size}")
        for v in table:
            if not 0 <= v < lattice.size:
                raise ValidationError(f"map value {v} is not an element")
        for x, y in lattice.covers():
            if not lattice.leq(table[x], table[y]):
                raise NotMonotone(lattice.name(x), lattice.name(y))
        return cls(lattice, table, True)

    @classmethod
    def from_function(cls, lattice: Lattice, fn) -> MonotoneMap:
        return cls.certify(lattice, [fn(x) for x in range(lattice.size)])

    def __call__(self, x: int) -> int:
        return self.table[x]


@dataclass(frozen=True)
class BoundInfo:
    max_downset_size: int
    per_element: dict[int, int] = field(default_factory=dict)


def c_closure(lattice: Lattice, y: GenSubset) -> GenSubset:
    """``down(join(Y))``; for finite Y this is the full closure."""
    return GenSubset(lattice.down_bits(lattice.join_gens(y.bits)), y.width)


def is_c_closed(lattice: Lattice, y: GenSubset) -> bool:
    return c_closure(lattice, y) == y


def is_phi_closed(phi: InductiveDefinition, y: GenSubset) -> bool:
    L = phi.lattice
    bits = y.bits
    if L.down_bits(L.join_gens(bits)) != bits:
        return False
    return all(head & bits for head, prem in phi.rules if prem & ~bits == 0)


def gamma(phi: InductiveDefinition, a: int) -> int:
    """Join of all rule heads whose premise lies below ``a``."""
    L = phi.lattice
    return L.join(b for b, prem in phi.pairs if L.leq(prem, a))


def bar_gamma(phi: InductiveDefinition, y: GenSubset) -> GenSubset:
    """Closure of the heads whose premise down-set is contained in ``y``."""
    bits = y.bits
    heads = 0
    for head, prem in phi.rules:
        if prem & ~bits == 0:
            heads |= head
    return c_closure(phi.lattice, GenSubset(heads, y.width))


def phi_of_gamma(g: MonotoneMap, limit: int = MATERIALIZE_LIMIT) -> InductiveDefinition:
    """Rules ``(b, a)`` for every generator ``b <= g(a)``."""
    if not g.certified:
        raise NotCertified()
    L = g.lattice
    size = L.width * L.size
    if size > min(limit, MATERIALIZE_LIMIT):
        raise SizeLimitExceeded("materialized inductive definition", size, min(limit, MATERIALIZE_LIMIT))
    pairs = [(b, a) for a in range(L.size) for b in L.subset_ids(L.down_bits(g(a)))]
    return InductiveDefinition(L, pairs)


def gamma_map(phi: InductiveDefinition) -> MonotoneMap:
    """The operator of ``phi`` tabulated; certified by construction."""
    L = phi.lattice
    return MonotoneMap(L, tuple(gamma(phi, a) for a in range(L.size)), True)


def is_local(phi: InductiveDefinition) -> tuple[bool, dict[int, GenSubset]]:
    """Finite definitions are always local; the witness is the head set per element."""
    L = phi.lattice
    witness = {}
    for a in range(L.size):
        witness[a] = L.subset(b for b, prem in phi.pairs if L.leq(prem, a))
    return True, witness


def bound_of(phi: InductiveDefinition) -> BoundInfo:
    L = phi.lattice
    per = {a: len(L.down(a)) for _, a in phi.pairs}
    return BoundInfo(max(per.values(), default=0), per)
