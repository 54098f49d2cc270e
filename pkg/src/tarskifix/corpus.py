"""Reference lattices and seeded random instances for testing."""

from __future__ import annotations

import random

from .aid import InductiveDefinition, MonotoneMap
from .dataflow import ControlFlowGraph
from .lattice import Lattice, build_from_hasse, build_standard
from .stdind import StandardInductiveDefinition


def diamond() -> Lattice:
    return build_from_hasse("a b c d".split(), [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])


def pentagon() -> Lattice:
    """N5: bottom < x < y < top and bottom < z < top."""
    return build_from_hasse(
        ["0", "x", "y", "z", "1"],
        [("0", "x"), ("x", "y"), ("y", "1"), ("0", "z"), ("z", "1")],
    )


def corpus_lattices() -> dict[str, Lattice]:
    out: dict[str, Lattice] = {}
    for n in range(2, 5):
        out[f"powerset({n})"] = build_standard(("powerset", n))
    for n in range(2, 9):
        out[f"chain({n})"] = build_standard(("chain", n))
    out["divisors(12)"] = build_standard(("divisors", 12))
    out["divisors(60)"] = build_standard(("divisors", 60))
    out["diamond"] = diamond()
    out["N5"] = pentagon()
    out["product(chain(3),powerset(2))"] = build_standard(
        ("product", ("chain", 3), ("powerset", 2))
    )
    return out


def random_monotone_map(lattice: Lattice, rng: random.Random) -> MonotoneMap:
    """``g(x) = join{seed(y) | y <= x}`` for random seeds, which is monotone.

    Every monotone map arises this way (take ``seed = g``).  A third of the
    draws use sparse seeds to favour maps with non-trivial fixed points.
    """
    n = lattice.size
    if rng.random() < 1 / 3:
        seed = [lattice.bottom] * n
        for _ in range(rng.randint(1, 3)):
            seed[rng.randrange(n)] = rng.randrange(n)
    else:
        seed = [rng.randrange(n) for _ in range(n)]
    table = [lattice.join(seed[y] for y in range(n) if lattice.leq(y, x)) for x in range(n)]
    return MonotoneMap.certify(lattice, table)


def random_aid(lattice: Lattice, rng: random.Random, max_rules: int = 24) -> InductiveDefinition:
    count = rng.randint(0, max_rules)
    gens = lattice.generators
    pairs = []
    for _ in range(count):
        b = rng.choice(gens)
        # bias premises toward low elements so rules actually fire
        a = rng.choice(gens) if rng.random() < 0.5 else rng.randrange(lattice.size)
        if rng.random() < 0.2:
            a = lattice.bottom
        pairs.append((b, a))
    return InductiveDefinition(lattice, pairs)


def random_std(rng: random.Random, max_atoms: int = 8) -> StandardInductiveDefinition:
    atoms = [f"s{i}" for i in range(rng.randint(1, max_atoms))]
    pairs = []
    for _ in range(rng.randint(0, 2 * len(atoms))):
        head = rng.choice(atoms)
        premise = [a for a in atoms if rng.random() < 0.25]
        pairs.append((head, premise))
    return StandardInductiveDefinition(atoms, pairs)


def random_cfg(rng: random.Random, max_nodes: int = 5, max_defs: int = 3) -> ControlFlowGraph:
    nodes = [f"N{i}" for i in range(rng.randint(1, max_nodes))]
    defs = [f"d{i}" for i in range(rng.randint(0, max_defs))]
    gen: dict[str, set[str]] = {n: set() for n in nodes}
    for d in defs:
        gen[rng.choice(nodes)].add(d)
    kill = {n: {d for d in defs if rng.random() < 0.3} for n in nodes}
    edges = [(m, n) for m in nodes for n in nodes if rng.random() < 0.35]
    return ControlFlowGraph(nodes, edges, nodes[0], gen, kill)
