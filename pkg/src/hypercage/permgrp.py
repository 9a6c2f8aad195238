"""Permutation arithmetic and small permutation-group enumeration.

Points are 1-based throughout.  Permutations are stored as dense image
tuples, which wins comfortably at the degrees this package deals with
(all bundled generators act on at most 63 points).  Group enumeration is
a breadth-first closure over an element index; no stabilizer chains.

Composition convention: ``p * q`` applies ``p`` first, then ``q``, so a
word reads left to right.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation",
    "GroupTable",
    "GeneratorPair",
    "PermParseError",
    "GroupCapError",
    "parse_perm",
    "element_order",
    "generate_group",
    "pair_reps",
    "parse_generator_text",
    "read_generator_file",
    "write_generator_file",
]

DEFAULT_ENUM_CAP = 3_000_000

_IDENTITY_TAIL = bytes(range(256))


class PermParseError(ValueError):
    """Malformed cycle notation."""


class GroupCapError(RuntimeError):
    """Group enumeration would exceed the requested element cap."""

    def __init__(self, cap: int):
        super().__init__(f"group order exceeds enumeration cap {cap}")
        self.cap = cap


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..degree}, stored as its image sequence.

    ``images[i - 1]`` is the image of point ``i``.
    """

    degree: int
    images: tuple[int, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")
        if len(self.images) != self.degree:
            raise ValueError(
                f"image sequence has length {len(self.images)}, expected {self.degree}"
            )
        if sorted(self.images) != list(range(1, self.degree + 1)):
            raise ValueError(f"images {self.images} are not a bijection on 1..{self.degree}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(degree, tuple(range(1, degree + 1)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        return cls(len(images), tuple(images))

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Compose: apply ``self`` first, then ``other``."""
        if self.degree != other.degree:
            raise ValueError("cannot compose permutations of different degree")
        oi = other.images
        return Permutation(self.degree, tuple(oi[i - 1] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(self.degree, tuple(inv))

    def __pow__(self, exponent: int) -> "Permutation":
        n = self.order()
        e = exponent % n
        result = Permutation.identity(self.degree)
        for _ in range(e):
            result = result * self
        return result

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def order(self) -> int:
        return element_order(self)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted by that point."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            nxt = self.images[start - 1]
            while nxt != start:
                cyc.append(nxt)
                seen[nxt - 1] = True
                nxt = self.images[nxt - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        """Canonical cycle notation; the identity prints as ``()``."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(p) for p in cyc) + ")" for cyc in cycles)

    def packed(self) -> bytes:
        """0-based byte encoding; only valid for degree <= 256."""
        return bytes(i - 1 for i in self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return (self.degree, self.images) < (other.degree, other.images)

    def __repr__(self) -> str:
        return f"Permutation({self.degree}, {self.cycle_string()!r})"


def _unpack(packed: bytes) -> Permutation:
    return Permutation(len(packed), tuple(b + 1 for b in packed))


def _pad(packed: bytes) -> bytes:
    # translate() table: points beyond the degree map to themselves
    return packed + _IDENTITY_TAIL[len(packed):]


def _invert_packed(packed: bytes) -> bytes:
    inv = bytearray(len(packed))
    for i, b in enumerate(packed):
        inv[b] = i
    return bytes(inv)


def _packed_cycle_lengths(packed: bytes) -> list[int]:
    seen = bytearray(len(packed))
    lengths = []
    for start in range(len(packed)):
        if seen[start]:
            continue
        k = 0
        p = start
        while not seen[p]:
            seen[p] = 1
            p = packed[p]
            k += 1
        lengths.append(k)
    return lengths


def element_order(p: Permutation) -> int:
    """Least k >= 1 with p^k = identity; the lcm of the cycle lengths."""
    return math.lcm(*_packed_cycle_lengths(p.packed()))


_CYCLE_RE = re.compile(r"\(([0-9,]*)\)")


def parse_perm(text: str, degree: int) -> Permutation:
    """Parse cycle notation like ``(1,2,3)(4,5)`` into a Permutation.

    Whitespace anywhere between tokens is ignored; ``()`` is the
    identity.  Raises PermParseError on repeated points, points out of
    1..degree, or malformed parentheses.
    """
    if degree < 1:
        raise PermParseError(f"degree must be positive, got {degree}")
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise PermParseError("empty permutation string (use '()' for the identity)")
    images = list(range(1, degree + 1))
    seen: set[int] = set()
    pos = 0
    for m in _CYCLE_RE.finditer(compact):
        if m.start() != pos:
            raise PermParseError(f"unexpected text {compact[pos:m.start()]!r} in {text!r}")
        pos = m.end()
        body = m.group(1)
        if not body:
            continue
        parts = body.split(",")
        if any(part == "" for part in parts):
            raise PermParseError(f"malformed cycle ({body}) in {text!r}")
        points = [int(part) for part in parts]
        for pt in points:
            if not 1 <= pt <= degree:
                raise PermParseError(f"point {pt} out of range 1..{degree} in {text!r}")
            if pt in seen:
                raise PermParseError(f"point {pt} repeated in {text!r}")
            seen.add(pt)
        for a, b in zip(points, points[1:]):
            images[a - 1] = b
        images[points[-1] - 1] = points[0]
    if pos != len(compact):
        raise PermParseError(f"malformed cycle notation near {compact[pos:]!r} in {text!r}")
    return Permutation(degree, tuple(images))


class GroupTable:
    """A fully enumerated permutation group.

    Elements are indexed 0..order-1 in breadth-first word order from the
    generators; index 0 is the identity.  Values are immutable after
    construction and safe to share across threads.
    """

    def __init__(self, generators: Sequence[Permutation], packed: list[bytes],
                 index: dict[bytes, int]):
        self.generators = tuple(generators)
        self.degree = generators[0].degree
        self._packed = packed
        self._index = index
        self._inv: list[int] | None = None

    @property
    def order(self) -> int:
        return len(self._packed)

    def __len__(self) -> int:
        return len(self._packed)

    def element(self, i: int) -> Permutation:
        return _unpack(self._packed[i])

    def elements(self) -> Iterator[Permutation]:
        return (_unpack(p) for p in self._packed)

    def index_of(self, p: Permutation) -> int:
        try:
            return self._index[p.packed()]
        except KeyError:
            raise ValueError(f"{p!r} is not an element of this group") from None

    def __contains__(self, p: Permutation) -> bool:
        return p.packed() in self._index

    def mul(self, i: int, j: int) -> int:
        """Index of element(i) * element(j)."""
        return self._index[self._packed[i].translate(_pad(self._packed[j]))]

    def inv(self, i: int) -> int:
        if self._inv is None:
            self._inv = [self._index[_invert_packed(p)] for p in self._packed]
        return self._inv[i]

    def conjugate(self, i: int, g: int) -> int:
        """Index of g^-1 * element(i) * g."""
        return self.mul(self.mul(self.inv(g), i), g)

    def element_order(self, i: int) -> int:
        return math.lcm(*_packed_cycle_lengths(self._packed[i]))

    def right_translation(self, i: int) -> list[int]:
        """The permutation of element indices induced by x -> x * element(i)."""
        pad = _pad(self._packed[i])
        index = self._index
        return [index[p.translate(pad)] for p in self._packed]

    def left_translation(self, i: int) -> list[int]:
        """The permutation of element indices induced by x -> element(i) * x."""
        pi = self._packed[i]
        index = self._index
        return [index[pi.translate(_pad(p))] for p in self._packed]

    def closure(self, seed: Iterable[int]) -> set[int]:
        """Indices of the subgroup generated by the given element indices."""
        seed = list(seed)
        pads = [_pad(self._packed[i]) for i in seed]
        index = self._index
        ident = _IDENTITY_TAIL[:self.degree]
        have = {index[ident]}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for pad in pads:
                    q = p.translate(pad)
                    k = index[q]
                    if k not in have:
                        have.add(k)
                        nxt.append(q)
            frontier = nxt
        return have

    def __repr__(self) -> str:
        return f"GroupTable(order={self.order}, degree={self.degree})"


def generate_group(gens: Sequence[Permutation], cap: int = DEFAULT_ENUM_CAP) -> GroupTable:
    """Breadth-first closure of the generators under composition.

    Raises GroupCapError as soon as the order would exceed ``cap``;
    callers may then fall back to word-only girth checks, which never
    need the full table.
    """
    if not gens:
        raise ValueError("at least one generator is required")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators must share one degree")
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    gen_pads = [_pad(g.packed()) for g in gens]
    ident = _IDENTITY_TAIL[:degree]
    packed = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for pad in gen_pads:
                q = p.translate(pad)
                if q not in index:
                    if len(packed) >= cap:
                        raise GroupCapError(cap)
                    index[q] = len(packed)
                    packed.append(q)
                    nxt.append(q)
        frontier = nxt
    return GroupTable(gens, packed, index)


@dataclass(frozen=True)
class GeneratorPair:
    """An (a, b) pair of order-3 elements generating the ambient group."""

    a: Permutation
    b: Permutation


def _cyclic_same(table: GroupTable, i: int, j: int) -> bool:
    # two order-3 elements span the same cyclic subgroup iff j in {i, i^-1}
    return j == i or j == table.inv(i)


def _pair_orbit_min(table: GroupTable, ia: int, ib: int) -> tuple[int, int]:
    """Least index pair in the orbit of (ia, ib) under simultaneous
    conjugation, inversion of either coordinate, and swapping."""
    best: tuple[int, int] | None = None
    inv = table.inv
    for g in range(table.order):
        ca = table.conjugate(ia, g)
        cb = table.conjugate(ib, g)
        for x in (ca, inv(ca)):
            for y in (cb, inv(cb)):
                for u, v in ((x, y), (y, x)):
                    if best is None or (u, v) < best:
                        best = (u, v)
    assert best is not None
    return best


def pair_reps(table: GroupTable) -> list[GeneratorPair]:
    """Representatives of generating pairs of order-3 elements.

    Returns every pair (a, b) with order(a) = order(b) = 3, <a> != <b>
    and <a, b> the whole group, deduplicated under simultaneous
    conjugation by the group, inversion of either coordinate, and the
    swap a <-> b.  Conjugation is a coarser relation than the full
    automorphism group, so this is a superset of true orbit
    representatives: no candidate pair is ever lost.  Output is sorted
    by the (a, b) element-index pair of the representative.
    """
    n = table.order
    order3 = [i for i in range(n) if table.element_order(i) == 3]
    reps: dict[tuple[int, int], None] = {}
    for pos, ia in enumerate(order3):
        for ib in order3[pos + 1:]:
            if _cyclic_same(table, ia, ib):
                continue
            if len(table.closure((ia, ib))) != n:
                continue
            key = _pair_orbit_min(table, ia, ib)
            reps.setdefault(key, None)
    return [GeneratorPair(table.element(u), table.element(v)) for u, v in sorted(reps)]


def parse_generator_text(text: str) -> tuple[int, list[Permutation]]:
    """Parse a generator file body: comments, a ``degree n`` line, then
    one permutation in cycle notation per line."""
    degree: int | None = None
    perms: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s+(\d+)", line)
            if not m:
                raise PermParseError(
                    f"line {lineno}: expected 'degree <n>' as the first data line, got {line!r}"
                )
            degree = int(m.group(1))
            if degree < 1:
                raise PermParseError(f"line {lineno}: degree must be positive")
            continue
        try:
            perms.append(parse_perm(line, degree))
        except PermParseError as exc:
            raise PermParseError(f"line {lineno}: {exc}") from None
    if degree is None:
        raise PermParseError("no 'degree <n>' line found")
    if not perms:
        raise PermParseError("no generators found")
    return degree, perms


def read_generator_file(path: str | Path) -> list[Permutation]:
    return parse_generator_text(Path(path).read_text())[1]


def write_generator_file(path: str | Path, perms: Sequence[Permutation],
                         header: Iterable[str] = ()) -> None:
    if not perms:
        raise ValueError("nothing to write")
    lines = [f"# {h}" for h in header]
    lines.append(f"degree {perms[0].degree}")
    lines.extend(p.cycle_string() for p in perms)
    Path(path).write_text("\n".join(lines) + "\n")
