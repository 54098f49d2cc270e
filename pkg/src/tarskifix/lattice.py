"""Finite set-generated complete lattices.

A lattice carries a designated generating set ``B`` (a tuple of element ids).
Subsets of ``B`` are the working currency of the fixed-point engine and are
represented by :class:`GenSubset`, a bit vector indexed by position in ``B``.

Explicitly given lattices are stored as order/join/meet tables.  The standard
families (powerset, chain, divisors, product) compute their operations
structurally so that e.g. ``powerset(16)`` never materializes a 2^32 table.
"""

from __future__ import annotations

import copy
import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence

import networkx as nx

from .errors import (
    BadGenerators,
    CycleDetected,
    NoBottom,
    NotALattice,
    SizeLimitExceeded,
    ValidationError,
)

MAX_POWERSET_ATOMS = 16
MAX_PRODUCT_SIZE = 1 << 16
MAX_SCAN_GENERATORS = 16


@dataclass(frozen=True, slots=True)
class GenSubset:
    """A subset of a lattice's generating set, as a bit vector over positions."""

    bits: int
    width: int

    @classmethod
    def empty(cls, width: int) -> GenSubset:
        return cls(0, width)

    @classmethod
    def full(cls, width: int) -> GenSubset:
        return cls((1 << width) - 1, width)

    @classmethod
    def from_positions(cls, positions: Iterable[int], width: int) -> GenSubset:
        bits = 0
        for p in positions:
            if not 0 <= p < width:
                raise IndexError(f"generator position {p} out of range for width {width}")
            bits |= 1 << p
        return cls(bits, width)

    def _check(self, other: GenSubset) -> None:
        if self.width != other.width:
            raise ValueError(f"width mismatch: {self.width} vs {other.width}")

    def __or__(self, other: GenSubset) -> GenSubset:
        self._check(other)
        return GenSubset(self.bits | other.bits, self.width)

    def __and__(self, other: GenSubset) -> GenSubset:
        self._check(other)
        return GenSubset(self.bits & other.bits, self.width)

    def __sub__(self, other: GenSubset) -> GenSubset:
        self._check(other)
        return GenSubset(self.bits & ~other.bits, self.width)

    def issubset(self, other: GenSubset) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    __le__ = issubset

    def __lt__(self, other: GenSubset) -> bool:
        return self.issubset(other) and self.bits != other.bits

    def __contains__(self, position: int) -> bool:
        return (self.bits >> position) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __repr__(self) -> str:
        return f"GenSubset({sorted(self)}, width={self.width})"


@dataclass(frozen=True)
class Element:
    id: int
    name: str


@dataclass(frozen=True)
class GeneratorReport:
    ok: bool
    violators: tuple[int, ...]


class Lattice:
    """Abstract finite complete lattice with a generating set.

    Subclasses provide ``leq``, ``join2``, ``meet2``, ``name``, ``_lookup``
    and ``covers``; everything else is derived here.
    """

    size: int
    bottom: int
    top: int
    family: str

    def __init__(self, size: int, bottom: int, top: int, generators: Sequence[int]) -> None:
        self.size = size
        self.bottom = bottom
        self.top = top
        self._set_generators(generators)

    def _set_generators(self, generators: Sequence[int]) -> None:
        gens = tuple(dict.fromkeys(generators))
        for g in gens:
            if not 0 <= g < self.size:
                raise ValidationError(f"generator id {g} is not an element")
        self.generators = gens
        self._gen_pos = {g: i for i, g in enumerate(gens)}
        self._down_table: list[int] | None = None
        self._join_memo: dict[int, int] = {0: self.bottom}

    # -- structure supplied by subclasses ---------------------------------

    def leq(self, x: int, y: int) -> bool:
        raise NotImplementedError

    def join2(self, x: int, y: int) -> int:
        raise NotImplementedError

    def meet2(self, x: int, y: int) -> int:
        raise NotImplementedError

    def name(self, x: int) -> str:
        raise NotImplementedError

    def _lookup(self, name: str) -> int | None:
        raise NotImplementedError

    def covers(self) -> Iterator[tuple[int, int]]:
        """Yield the Hasse diagram: pairs (x, y) where y covers x."""
        raise NotImplementedError

    # -- derived -------------------------------------------------------------

    @property
    def width(self) -> int:
        return len(self.generators)

    @property
    def elements(self) -> list[Element]:
        return [Element(i, self.name(i)) for i in range(self.size)]

    def index(self, name: str) -> int:
        x = self._lookup(name)
        if x is None:
            raise ValidationError(f"unknown element {name!r}")
        return x

    def is_generator(self, x: int) -> bool:
        return x in self._gen_pos

    def gen_position(self, x: int) -> int:
        try:
            return self._gen_pos[x]
        except KeyError:
            raise ValidationError(f"{self.name(x)} is not a generator") from None

    def subset(self, ids: Iterable[int]) -> GenSubset:
        """GenSubset holding the given generator element ids."""
        return GenSubset.from_positions((self.gen_position(x) for x in ids), self.width)

    def subset_ids(self, s: GenSubset | int) -> list[int]:
        bits = s.bits if isinstance(s, GenSubset) else s
        return [self.generators[p] for p in GenSubset(bits, self.width)]

    def format_subset(self, s: GenSubset | int) -> str:
        return "{" + ",".join(self.name(x) for x in self.subset_ids(s)) + "}"

    def down_bits(self, x: int) -> int:
        if self._down_table is None:
            gens = self.generators
            leq = self.leq
            table = []
            for y in range(self.size):
                bits = 0
                for p, g in enumerate(gens):
                    if leq(g, y):
                        bits |= 1 << p
                table.append(bits)
            self._down_table = table
        return self._down_table[x]

    def down(self, x: int) -> GenSubset:
        return GenSubset(self.down_bits(x), self.width)

    def join(self, xs: Iterable[int]) -> int:
        return reduce(self.join2, xs, self.bottom)

    def meet(self, xs: Iterable[int]) -> int:
        return reduce(self.meet2, xs, self.top)

    def join_gens(self, s: GenSubset | int) -> int:
        """Join of the generators selected by ``s``."""
        bits = s.bits if isinstance(s, GenSubset) else s
        memo = self._join_memo
        hit = memo.get(bits)
        if hit is not None:
            return hit
        gens = self.generators
        result = self.bottom
        rest = bits
        while rest:
            low = rest & -rest
            result = self.join2(result, gens[low.bit_length() - 1])
            rest ^= low
        memo[bits] = result
        return result

    def with_generators(self, generators: Iterable[int], check: bool = True) -> Lattice:
        """Copy of this lattice with a different generating set."""
        other = copy.copy(self)
        other._set_generators(list(generators))
        if check:
            report = validate_generators(other)
            if not report.ok:
                raise BadGenerators([other.name(x) for x in report.violators])
        return other

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.family} |L|={self.size} |B|={self.width}>"


class TableLattice(Lattice):
    """Lattice stored as order, join and meet tables (explicit lattices)."""

    def __init__(
        self,
        names: Sequence[str],
        below: Sequence[int],
        join_table: Sequence[Sequence[int]],
        meet_table: Sequence[Sequence[int]],
        bottom: int,
        top: int,
        generators: Sequence[int] | None = None,
        family: str = "explicit",
    ) -> None:
        self._names = tuple(names)
        self._ids = {n: i for i, n in enumerate(self._names)}
        self._below = tuple(below)
        self._join = tuple(tuple(r) for r in join_table)
        self._meet = tuple(tuple(r) for r in meet_table)
        self.family = family
        n = len(self._names)
        super().__init__(n, bottom, top, range(n) if generators is None else generators)

    def leq(self, x: int, y: int) -> bool:
        return (self._below[y] >> x) & 1 == 1

    def join2(self, x: int, y: int) -> int:
        return self._join[x][y]

    def meet2(self, x: int, y: int) -> int:
        return self._meet[x][y]

    def name(self, x: int) -> str:
        return self._names[x]

    def _lookup(self, name: str) -> int | None:
        return self._ids.get(name)

    def covers(self) -> Iterator[tuple[int, int]]:
        strict = [b & ~(1 << i) for i, b in enumerate(self._below)]
        for y in range(self.size):
            shadowed = 0
            for z in _bit_positions(strict[y]):
                shadowed |= strict[z]
            for x in _bit_positions(strict[y] & ~shadowed):
                yield x, y


class ChainLattice(Lattice):
    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValidationError("chain needs at least one element")
        self.family = f"chain({n})"
        super().__init__(n, 0, n - 1, range(n))

    def leq(self, x: int, y: int) -> bool:
        return x <= y

    def join2(self, x: int, y: int) -> int:
        return x if x >= y else y

    def meet2(self, x: int, y: int) -> int:
        return x if x <= y else y

    def name(self, x: int) -> str:
        return str(x)

    def _lookup(self, name: str) -> int | None:
        if name.isdigit() and int(name) < self.size:
            return int(name)
        return None

    def covers(self) -> Iterator[tuple[int, int]]:
        for i in range(self.size - 1):
            yield i, i + 1


class PowersetLattice(Lattice):
    """Subsets of a finite atom set; element id is the subset's bitmask.

    Default generators are the singletons in atom order, in which case a
    GenSubset's bits coincide with the element id it joins to.
    """

    def __init__(self, atoms: Sequence[str]) -> None:
        atoms = tuple(atoms)
        n = len(atoms)
        if n > MAX_POWERSET_ATOMS:
            raise SizeLimitExceeded("powerset atoms", n, MAX_POWERSET_ATOMS)
        if len(set(atoms)) != n:
            raise ValidationError("powerset atom names must be unique")
        for a in atoms:
            if not a or re.search(r"[\s,{}()]", a):
                raise ValidationError(f"bad atom name {a!r}")
        self.atoms = atoms
        self._atom_ids = {a: i for i, a in enumerate(atoms)}
        self.family = f"powerset({n})"
        super().__init__(1 << n, 0, (1 << n) - 1, [1 << i for i in range(n)])

    def _set_generators(self, generators: Sequence[int]) -> None:
        super()._set_generators(generators)
        self._singletons = self.generators == tuple(1 << i for i in range(len(self.atoms)))

    def leq(self, x: int, y: int) -> bool:
        return x & ~y == 0

    def join2(self, x: int, y: int) -> int:
        return x | y

    def meet2(self, x: int, y: int) -> int:
        return x & y

    def join(self, xs: Iterable[int]) -> int:
        out = 0
        for x in xs:
            out |= x
        return out

    def down_bits(self, x: int) -> int:
        if self._singletons:
            return x
        return super().down_bits(x)

    def join_gens(self, s: GenSubset | int) -> int:
        if self._singletons:
            return s.bits if isinstance(s, GenSubset) else s
        return super().join_gens(s)

    def name(self, x: int) -> str:
        return "{" + ",".join(self.atoms[i] for i in _bit_positions(x)) + "}"

    def atom_set(self, x: int) -> list[str]:
        return [self.atoms[i] for i in _bit_positions(x)]

    def element_of(self, atoms: Iterable[str]) -> int:
        x = 0
        for a in atoms:
            try:
                x |= 1 << self._atom_ids[a]
            except KeyError:
                raise ValidationError(f"unknown atom {a!r}") from None
        return x

    def _lookup(self, name: str) -> int | None:
        if name in ("∅", "{}"):
            return 0
        if name in self._atom_ids:
            return 1 << self._atom_ids[name]
        if name.startswith("{") and name.endswith("}"):
            parts = [p for p in name[1:-1].split(",") if p]
            if all(p in self._atom_ids for p in parts):
                return self.element_of(parts)
        return None

    def covers(self) -> Iterator[tuple[int, int]]:
        for x in range(self.size):
            for i in range(len(self.atoms)):
                if not (x >> i) & 1:
                    yield x, x | (1 << i)


class DivisorLattice(Lattice):
    """Divisors of n under divisibility; join is lcm, meet is gcd."""

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValidationError("divisors needs n >= 1")
        self.n = n
        small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
        self.divisors = tuple(sorted(set(small) | {n // d for d in small}))
        self._ids = {d: i for i, d in enumerate(self.divisors)}
        self.family = f"divisors({n})"
        size = len(self.divisors)
        super().__init__(size, 0, size - 1, range(size))

    def leq(self, x: int, y: int) -> bool:
        return self.divisors[y] % self.divisors[x] == 0

    def join2(self, x: int, y: int) -> int:
        return self._ids[math.lcm(self.divisors[x], self.divisors[y])]

    def meet2(self, x: int, y: int) -> int:
        return self._ids[math.gcd(self.divisors[x], self.divisors[y])]

    def name(self, x: int) -> str:
        return str(self.divisors[x])

    def _lookup(self, name: str) -> int | None:
        return self._ids.get(int(name)) if name.isdigit() else None

    def covers(self) -> Iterator[tuple[int, int]]:
        for x, d in enumerate(self.divisors):
            for y, e in enumerate(self.divisors):
                if e % d == 0 and e != d and _is_prime(e // d):
                    yield x, y


class ProductLattice(Lattice):
    """Componentwise product; element id is ``i * |right| + j``."""

    def __init__(self, left: Lattice, right: Lattice) -> None:
        size = left.size * right.size
        if size > MAX_PRODUCT_SIZE:
            raise SizeLimitExceeded("product lattice", size, MAX_PRODUCT_SIZE)
        self.left = left
        self.right = right
        self._m = right.size
        self.family = f"product({left.family},{right.family})"
        gens = [self._pair(g, right.bottom) for g in left.generators]
        gens += [self._pair(left.bottom, h) for h in right.generators]
        super().__init__(size, self._pair(left.bottom, right.bottom), self._pair(left.top, right.top), gens)

    def _pair(self, i: int, j: int) -> int:
        return i * self._m + j

    def split(self, x: int) -> tuple[int, int]:
        return divmod(x, self._m)

    def leq(self, x: int, y: int) -> bool:
        (a, b), (c, d) = divmod(x, self._m), divmod(y, self._m)
        return self.left.leq(a, c) and self.right.leq(b, d)

    def join2(self, x: int, y: int) -> int:
        (a, b), (c, d) = divmod(x, self._m), divmod(y, self._m)
        return self._pair(self.left.join2(a, c), self.right.join2(b, d))

    def meet2(self, x: int, y: int) -> int:
        (a, b), (c, d) = divmod(x, self._m), divmod(y, self._m)
        return self._pair(self.left.meet2(a, c), self.right.meet2(b, d))

    def name(self, x: int) -> str:
        a, b = divmod(x, self._m)
        return f"({self.left.name(a)},{self.right.name(b)})"

    def _lookup(self, name: str) -> int | None:
        if not (name.startswith("(") and name.endswith(")")):
            return None
        parts = _split_top_level(name[1:-1])
        if len(parts) != 2:
            return None
        a, b = self.left._lookup(parts[0]), self.right._lookup(parts[1])
        if a is None or b is None:
            return None
        return self._pair(a, b)

    def covers(self) -> Iterator[tuple[int, int]]:
        for a, c in self.left.covers():
            for j in range(self.right.size):
                yield self._pair(a, j), self._pair(c, j)
        for b, d in self.right.covers():
            for i in range(self.left.size):
                yield self._pair(i, b), self._pair(i, d)


def _bit_positions(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def _is_prime(k: int) -> bool:
    return k >= 2 and all(k % p for p in range(2, math.isqrt(k) + 1))


def _split_top_level(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


# -- construction ------------------------------------------------------------


def build_from_hasse(
    names: Sequence[str],
    covers: Iterable[tuple[str, str]],
    generators: Sequence[str] | None = None,
    check_generators: bool = True,
) -> TableLattice:
    """Build a lattice from its cover relation.

    ``covers`` holds pairs ``(x, y)`` meaning ``x < y``; the order is their
    reflexive-transitive closure.  A finite poset with a bottom and all
    pairwise joins is a complete lattice, so that is all we check.
    """
    names = list(names)
    if not names:
        raise ValidationError("lattice needs at least one element")
    if len(set(names)) != len(names):
        dup = next(n for n in names if names.count(n) > 1)
        raise ValidationError(f"duplicate element name {dup!r}")
    ids = {n: i for i, n in enumerate(names)}
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(names)))
    for x, y in covers:
        for v in (x, y):
            if v not in ids:
                raise ValidationError(f"cover mentions unknown element {v!r}")
        graph.add_edge(ids[x], ids[y])
    try:
        cycle = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        cycle = None
    if cycle:
        raise CycleDetected([names[u] for u, _ in cycle] + [names[cycle[0][0]]])

    n = len(names)
    below = [0] * n
    above = [0] * n
    for y in range(n):
        below[y] = 1 << y
        for x in nx.ancestors(graph, y):
            below[y] |= 1 << x
    for x in range(n):
        for y in range(n):
            if (below[y] >> x) & 1:
                above[x] |= 1 << y

    join_table = [[0] * n for _ in range(n)]
    meet_table = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            j = _least(above[x] & above[y], above)
            if j is None:
                raise NotALattice(names[x], names[y])
            join_table[x][y] = join_table[y][x] = j

    full = (1 << n) - 1
    bottoms = [x for x in range(n) if above[x] == full]
    if not bottoms:
        raise NoBottom()
    bottom = bottoms[0]
    top = reduce(lambda a, b: join_table[a][b], range(n), bottom)

    for x in range(n):
        for y in range(x, n):
            # common lower bounds always contain bottom; the greatest exists
            # because the join of the lower bounds is itself a lower bound
            lower = below[x] & below[y]
            m = reduce(lambda a, b: join_table[a][b], _bit_positions(lower), bottom)
            meet_table[x][y] = meet_table[y][x] = m

    gen_ids = None
    if generators is not None:
        gen_ids = []
        for g in generators:
            if g not in ids:
                raise ValidationError(f"unknown generator {g!r}")
            gen_ids.append(ids[g])
    lattice = TableLattice(names, below, join_table, meet_table, bottom, top, gen_ids)
    if check_generators:
        report = validate_generators(lattice)
        if not report.ok:
            raise BadGenerators([lattice.name(x) for x in report.violators])
    return lattice


def _least(candidates: int, above: Sequence[int]) -> int | None:
    for u in _bit_positions(candidates):
        if candidates & ~above[u] == 0:
            return u
    return None


_FAMILY_RE = re.compile(r"^\s*(\w+)\s*\((.*)\)\s*$")


def parse_family(text: str) -> tuple:
    """Parse ``"product(chain(3),powerset(2))"`` into a nested descriptor tuple."""
    m = _FAMILY_RE.match(text)
    if not m:
        raise ValueError(f"bad family descriptor {text!r}")
    kind, inner = m.group(1), m.group(2)
    if kind == "product":
        parts = _split_top_level(inner)
        if len(parts) != 2:
            raise ValueError(f"product takes two arguments: {text!r}")
        return ("product", parse_family(parts[0]), parse_family(parts[1]))
    return (kind, int(inner))


def build_standard(spec: tuple | str | Lattice, atoms: Sequence[str] | None = None) -> Lattice:
    """Build a lattice from a family descriptor.

    ``spec`` is ``("powerset", n)``, ``("chain", n)``, ``("divisors", n)``,
    ``("product", left, right)`` or the equivalent string such as
    ``"divisors(12)"``.  Product components may also be ready-made lattices.
    """
    if isinstance(spec, Lattice):
        return spec
    if isinstance(spec, str):
        spec = parse_family(spec)
    kind = spec[0]
    if kind == "powerset":
        n = spec[1]
        if n < 0:
            raise ValidationError("powerset needs n >= 0")
        if n > MAX_POWERSET_ATOMS:
            raise SizeLimitExceeded("powerset atoms", n, MAX_POWERSET_ATOMS)
        if atoms is None:
            atoms = [str(i) for i in range(n)]
        elif len(atoms) != n:
            raise ValidationError(f"powerset({n}) given {len(atoms)} atom names")
        return PowersetLattice(atoms)
    if kind == "chain":
        return ChainLattice(spec[1])
    if kind == "divisors":
        return DivisorLattice(spec[1])
    if kind == "product":
        left, right = build_standard(spec[1]), build_standard(spec[2])
        return ProductLattice(left, right)
    raise ValidationError(f"unknown lattice family {kind!r}")


# -- queries -------------------------------------------------------------------


def join(lattice: Lattice, xs: Iterable[int]) -> int:
    return lattice.join(xs)


def down(lattice: Lattice, x: int) -> GenSubset:
    return lattice.down(x)


def validate_generators(lattice: Lattice) -> GeneratorReport:
    """Check ``x == join(down(x))`` for every element."""
    bad = tuple(
        x for x in range(lattice.size) if lattice.join_gens(lattice.down_bits(x)) != x
    )
    return GeneratorReport(not bad, bad)


@dataclass(frozen=True)
class Presentation:
    """Minimal covers: ``covers[b]`` lists the minimal W with ``b <= join(W)``."""

    lattice: Lattice
    covers: dict[int, tuple[GenSubset, ...]]

    def admits(self, b: int, u: GenSubset) -> bool:
        return any(w.issubset(u) for w in self.covers[b])


def set_presentation(lattice: Lattice, limit: int = MAX_SCAN_GENERATORS) -> Presentation:
    width = lattice.width
    limit = min(limit, MAX_SCAN_GENERATORS)
    if width > limit:
        raise SizeLimitExceeded("generators for presentation scan", width, limit)
    joins = [lattice.bottom] * (1 << width)
    gens = lattice.generators
    for u in range(1, 1 << width):
        low = u & -u
        joins[u] = lattice.join2(joins[u ^ low], gens[low.bit_length() - 1])
    covers: dict[int, tuple[GenSubset, ...]] = {}
    for b in gens:
        hits = [u for u in range(1 << width) if lattice.leq(b, joins[u])]
        hit_set = set(hits)
        minimal = [
            u for u in hits if not any((u & ~(1 << p)) in hit_set for p in _bit_positions(u))
        ]
        minimal.sort(key=lambda u: (bin(u).count("1"), sorted(_bit_positions(u))))
        covers[b] = tuple(GenSubset(u, width) for u in minimal)
    return Presentation(lattice, covers)


def _order_masks(lattice: Lattice) -> tuple[list[int], list[int]]:
    n = lattice.size
    below = [0] * n
    above = [0] * n
    for x in range(n):
        for y in range(n):
            if lattice.leq(x, y):
                below[y] |= 1 << x
                above[x] |= 1 << y
    return below, above


def check_order_laws(lattice: Lattice) -> list[str]:
    """Reflexivity, antisymmetry and transitivity, exhaustively."""
    below, above = _order_masks(lattice)
    name = lattice.name
    problems = []
    for x in range(lattice.size):
        if not (below[x] >> x) & 1:
            problems.append(f"not reflexive at {name(x)}")
        others = (below[x] & above[x]) & ~(1 << x)
        for y in _bit_positions(others):
            problems.append(f"not antisymmetric: {name(x)}, {name(y)}")
        for y in _bit_positions(below[x]):
            if below[y] & ~below[x]:
                problems.append(f"not transitive through {name(y)} <= {name(x)}")
    return problems


def check_join_laws(lattice: Lattice) -> list[str]:
    """join2 is an upper bound below every common upper bound; bottom/top extremal."""
    _, above = _order_masks(lattice)
    name = lattice.name
    full = (1 << lattice.size) - 1
    problems = []
    if above[lattice.bottom] != full:
        problems.append(f"bottom {name(lattice.bottom)} is not below everything")
    if any(not (above[x] >> lattice.top) & 1 for x in range(lattice.size)):
        problems.append(f"top {name(lattice.top)} is not above everything")
    for x in range(lattice.size):
        for y in range(x, lattice.size):
            j = lattice.join2(x, y)
            upper = above[x] & above[y]
            if not (upper >> j) & 1 or upper & ~above[j]:
                problems.append(f"join2({name(x)}, {name(y)}) = {name(j)} is not the least upper bound")
    return problems
