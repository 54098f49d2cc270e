"""Inductive definitions on a finite set, and their powerset embedding."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .aid import InductiveDefinition
from .errors import SizeLimitExceeded, ValidationError
from .lattice import MAX_POWERSET_ATOMS, PowersetLattice


@dataclass(frozen=True)
class StandardInductiveDefinition:
    """Rules ``(a, X)``: once every atom of X is in, so is ``a``."""

    atoms: tuple[str, ...]
    pairs: tuple[tuple[str, frozenset[str]], ...]

    def __init__(self, atoms: Sequence[str], pairs: Iterable[tuple[str, Iterable[str]]]) -> None:
        atoms = tuple(atoms)
        if len(set(atoms)) != len(atoms):
            raise ValidationError("atom names must be unique")
        known = set(atoms)
        clean = set()
        for head, premise in pairs:
            premise = frozenset(premise)
            unknown = ({head} | premise) - known
            if unknown:
                raise ValidationError(f"rule mentions unknown atoms {sorted(unknown)}")
            clean.add((head, premise))
        order = {a: i for i, a in enumerate(atoms)}
        ordered = sorted(clean, key=lambda r: (order[r[0]], sorted(order[x] for x in r[1])))
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "pairs", tuple(ordered))


def std_lfp(phi: StandardInductiveDefinition) -> frozenset[str]:
    derived: set[str] = set()
    changed = True
    while changed:
        changed = False
        for head, premise in phi.pairs:
            if head not in derived and premise <= derived:
                derived.add(head)
                changed = True
    return frozenset(derived)


def embed_std(phi: StandardInductiveDefinition) -> InductiveDefinition:
    """Rule ``(a, X)`` becomes ``({a}, X)`` on the powerset with singleton generators."""
    if len(phi.atoms) > MAX_POWERSET_ATOMS:
        raise SizeLimitExceeded("standard definition atoms", len(phi.atoms), MAX_POWERSET_ATOMS)
    L = PowersetLattice(phi.atoms)
    return InductiveDefinition(
        L, [(L.element_of([head]), L.element_of(premise)) for head, premise in phi.pairs]
    )
