"""Line-oriented text formats for lattices, definitions, maps and CFGs.

All formats are UTF-8, one directive per line, ``#`` starts a comment.
A ``<lattice-ref>`` in ``aid``/``map`` headers is either a path to a lattice
file (relative to the referring file) or an inline lattice header such as
``powerset 2 p q``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .aid import InductiveDefinition, MonotoneMap
from .dataflow import ControlFlowGraph
from .errors import ParseError, ValidationError
from .lattice import Lattice, build_from_hasse, build_standard
from .stdind import StandardInductiveDefinition

FAMILIES = ("explicit", "powerset", "chain", "divisors", "product")


def _lines(path: Path) -> Iterator[tuple[int, list[str]]]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(0, f"cannot read file: {exc.strerror}", str(path)) from None
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


class _Reader:
    def __init__(self, path: str | Path) -> None:
        self.path = Path(path)
        self.items = list(_lines(self.path))

    def fail(self, line: int, reason: str) -> ParseError:
        return ParseError(line, reason, str(self.path))

    def header(self, keyword: str) -> tuple[int, list[str]]:
        if not self.items:
            raise self.fail(1, f"empty file, expected '{keyword}' header")
        no, toks = self.items[0]
        if toks[0] != keyword:
            raise self.fail(no, f"expected '{keyword}' header, got {toks[0]!r}")
        return no, toks[1:]

    def body(self) -> list[tuple[int, list[str]]]:
        return self.items[1:]

    def invalid(self, line: int, exc: ValidationError) -> ValidationError:
        exc.args = (f"{self.path}:{line}: {exc}",)
        return exc


def _int(reader: _Reader, line: int, tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise reader.fail(line, f"expected an integer, got {tok!r}") from None


def _lattice_from_header(reader: _Reader, line: int, toks: list[str]) -> Lattice:
    if not toks:
        raise reader.fail(line, "missing lattice family")
    kind, args = toks[0], toks[1:]
    try:
        if kind == "powerset":
            if not args:
                raise reader.fail(line, "powerset needs N")
            n = _int(reader, line, args[0])
            atoms = args[1:] or None
            return build_standard(("powerset", n), atoms=atoms)
        if kind in ("chain", "divisors"):
            if len(args) != 1:
                raise reader.fail(line, f"{kind} takes exactly one argument")
            return build_standard((kind, _int(reader, line, args[0])))
        if kind == "product":
            if len(args) != 2:
                raise reader.fail(line, "product takes two lattice files")
            base = reader.path.parent
            left = parse_lattice(base / args[0])
            right = parse_lattice(base / args[1])
            return build_standard(("product", left, right))
    except ValidationError as exc:
        raise reader.invalid(line, exc) from None
    raise reader.fail(line, f"unknown lattice family {kind!r}")


def parse_lattice(path: str | Path, check_generators: bool = True) -> Lattice:
    reader = _Reader(path)
    no, toks = reader.header("lattice")
    if toks and toks[0] == "explicit":
        if len(toks) != 1:
            raise reader.fail(no, "'lattice explicit' takes no arguments")
        return _explicit_body(reader, check_generators)
    if len(reader.body()):
        raise reader.fail(reader.body()[0][0], "only explicit lattices have a body")
    return _lattice_from_header(reader, no, toks)


def _explicit_body(reader: _Reader, check_generators: bool) -> Lattice:
    names: list[str] | None = None
    covers: list[tuple[str, str]] = []
    generators: list[str] | None = None
    first = reader.items[0][0]
    for no, toks in reader.body():
        head = toks[0]
        if head == "elements":
            if names is not None:
                raise reader.fail(no, "duplicate 'elements' line")
            names = toks[1:]
        elif head == "cover":
            if len(toks) != 4 or toks[2] != "<":
                raise reader.fail(no, "expected 'cover x < y'")
            covers.append((toks[1], toks[3]))
        elif head == "generators":
            if generators is not None:
                raise reader.fail(no, "duplicate 'generators' line")
            generators = toks[1:]
        else:
            raise reader.fail(no, f"unknown directive {head!r}")
    if names is None:
        raise reader.fail(first, "explicit lattice needs an 'elements' line")
    try:
        return build_from_hasse(names, covers, generators, check_generators=check_generators)
    except ValidationError as exc:
        raise reader.invalid(first, exc) from None


def _lattice_ref(reader: _Reader, line: int, toks: list[str]) -> Lattice:
    if not toks:
        raise reader.fail(line, "missing lattice reference")
    if toks[0] in FAMILIES and toks[0] != "explicit":
        return _lattice_from_header(reader, line, toks)
    if len(toks) != 1:
        raise reader.fail(line, "lattice reference must be a single path")
    return parse_lattice(reader.path.parent / toks[0])


def _element(reader: _Reader, lattice: Lattice, line: int, name: str) -> int:
    try:
        return lattice.index(name)
    except ValidationError as exc:
        raise reader.invalid(line, exc) from None


def parse_aid(path: str | Path) -> InductiveDefinition:
    reader = _Reader(path)
    no, toks = reader.header("aid")
    lattice = _lattice_ref(reader, no, toks)
    pairs = []
    for no, toks in reader.body():
        if toks[0] != "rule" or len(toks) != 4 or toks[2] != "<=":
            raise reader.fail(no, "expected 'rule <generator> <= <element>'")
        b = _element(reader, lattice, no, toks[1])
        if not lattice.is_generator(b):
            raise reader.invalid(no, ValidationError(f"{toks[1]} is not a generator"))
        pairs.append((b, _element(reader, lattice, no, toks[3])))
    return InductiveDefinition(lattice, pairs)


def parse_map(path: str | Path) -> MonotoneMap:
    reader = _Reader(path)
    no, toks = reader.header("map")
    lattice = _lattice_ref(reader, no, toks)
    table: dict[int, int] = {}
    for no, toks in reader.body():
        if toks[0] != "send" or len(toks) != 4 or toks[2] != "->":
            raise reader.fail(no, "expected 'send <element> -> <element>'")
        x = _element(reader, lattice, no, toks[1])
        if x in table:
            raise reader.fail(no, f"{toks[1]} is sent twice")
        table[x] = _element(reader, lattice, no, toks[3])
    missing = [lattice.name(x) for x in range(lattice.size) if x not in table]
    if missing:
        shown = ", ".join(missing[:5]) + (", ..." if len(missing) > 5 else "")
        raise ValidationError(f"{reader.path}: map is not total, missing {shown}")
    try:
        return MonotoneMap.certify(lattice, [table[x] for x in range(lattice.size)])
    except ValidationError as exc:
        raise reader.invalid(reader.items[0][0], exc) from None


def parse_stdind(path: str | Path) -> StandardInductiveDefinition:
    reader = _Reader(path)
    no, toks = reader.header("stdind")
    if toks:
        raise reader.fail(no, "'stdind' takes no arguments")
    atoms: list[str] | None = None
    rules = []
    for no, toks in reader.body():
        if toks[0] == "atoms":
            if atoms is not None:
                raise reader.fail(no, "duplicate 'atoms' line")
            atoms = toks[1:]
        elif toks[0] == "rule":
            if len(toks) < 3 or toks[2] != "<-":
                raise reader.fail(no, "expected 'rule <atom> <- <atoms...>'")
            rules.append((no, toks[1], toks[3:]))
        else:
            raise reader.fail(no, f"unknown directive {toks[0]!r}")
    if atoms is None:
        raise reader.fail(reader.items[0][0], "missing 'atoms' line")
    known = set(atoms)
    for no, head, premise in rules:
        unknown = [a for a in [head, *premise] if a not in known]
        if unknown:
            raise reader.invalid(no, ValidationError(f"unknown atom {unknown[0]!r}"))
    try:
        return StandardInductiveDefinition(atoms, [(h, p) for _, h, p in rules])
    except ValidationError as exc:
        raise reader.invalid(reader.items[0][0], exc) from None


def parse_cfg(path: str | Path) -> ControlFlowGraph:
    reader = _Reader(path)
    no, toks = reader.header("cfg")
    if toks:
        raise reader.fail(no, "'cfg' takes no arguments")
    nodes: list[str] = []
    gen: dict[str, set[str]] = {}
    kill: dict[str, set[str]] = {}
    edges: list[tuple[str, str]] = []
    entry: str | None = None
    for no, toks in reader.body():
        head = toks[0]
        if head == "node":
            if len(toks) < 2:
                raise reader.fail(no, "expected 'node <name> [gen ...] [kill ...]'")
            name = toks[1]
            gen.setdefault(name, set())
            kill.setdefault(name, set())
            if name not in nodes:
                nodes.append(name)
            target = None
            for tok in toks[2:]:
                if tok in ("gen", "kill"):
                    target = gen[name] if tok == "gen" else kill[name]
                elif target is None:
                    raise reader.fail(no, f"expected 'gen' or 'kill' before {tok!r}")
                else:
                    target.add(tok)
        elif head == "edge":
            if len(toks) != 3:
                raise reader.fail(no, "expected 'edge <from> <to>'")
            edges.append((toks[1], toks[2]))
        elif head == "entry":
            if len(toks) != 2:
                raise reader.fail(no, "expected 'entry <node>'")
            entry = toks[1]
        else:
            raise reader.fail(no, f"unknown directive {head!r}")
    if not nodes:
        raise reader.fail(reader.items[0][0], "cfg has no nodes")
    try:
        return ControlFlowGraph(nodes, edges, entry or nodes[0], gen, kill)
    except ValidationError as exc:
        raise reader.invalid(reader.items[0][0], exc) from None


PARSERS = {
    "lattice": parse_lattice,
    "aid": parse_aid,
    "map": parse_map,
    "stdind": parse_stdind,
    "cfg": parse_cfg,
}


def parse_inputs(path: str | Path, kind: str):
    try:
        parser = PARSERS[kind]
    except KeyError:
        raise ValueError(f"unknown input kind {kind!r}") from None
    return parser(path)
