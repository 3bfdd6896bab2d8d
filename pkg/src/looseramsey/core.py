"""Colored complete 3-uniform hypergraphs and their loose substructures.

A coloring of K3_N stores one bit per triple, indexed in colexicographic
order, so color lookup is a single bit test.  Loose paths and cycles are
kept as ordered vertex sequences; the edge decomposition is derived, which
makes the sequence itself the certificate a verifier can check.

Invariants
- TripleEdge vertices strictly increasing.
- Coloring bitmap covers exactly C(N,3) triples; every triple has one color.
- LoosePath on 2l+1 distinct vertices, LooseCycle on 2l distinct vertices
  with l >= 3; consecutive edges share exactly one vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, NamedTuple, Optional, Tuple, Union

RED = "red"
BLUE = "blue"
PATH = "path"
CYCLE = "cycle"


class StructureError(ValueError):
    """A vertex sequence violates a loose path/cycle invariant."""


def opposite(color: str) -> str:
    return BLUE if color == RED else RED


class TripleEdge(NamedTuple):
    a: int
    b: int
    c: int

    @classmethod
    def of(cls, x: int, y: int, z: int) -> "TripleEdge":
        a, b, c = sorted((x, y, z))
        if a < 0:
            raise ValueError(f"negative vertex label in ({x}, {y}, {z})")
        if a == b or b == c:
            raise ValueError(f"edge vertices must be distinct: ({x}, {y}, {z})")
        return cls(a, b, c)


def colex_rank(e: TripleEdge) -> int:
    """Position of e among all triples in colex order (0-based)."""
    return comb(e.c, 3) + comb(e.b, 2) + e.a


def colex_unrank(rank: int, n_vertices: int) -> TripleEdge:
    """Inverse of colex_rank over the triples of [0, n_vertices)."""
    if not 0 <= rank < comb(n_vertices, 3):
        raise ValueError(
            f"rank {rank} out of range [0, {comb(n_vertices, 3)}) for N={n_vertices}"
        )
    c = 2
    while comb(c + 1, 3) <= rank:
        c += 1
    rest = rank - comb(c, 3)
    b = 1
    while comb(b + 1, 2) <= rest:
        b += 1
    a = rest - comb(b, 2)
    return TripleEdge(a, b, c)


def all_triples(n_vertices: int) -> Iterator[TripleEdge]:
    """All triples of [0, n_vertices) in colex (= rank) order."""
    for c in range(2, n_vertices):
        for b in range(1, c):
            for a in range(b):
                yield TripleEdge(a, b, c)


@dataclass(frozen=True)
class Coloring:
    """Red/blue coloring of K3_N as a red bitmap in colex order."""

    n_vertices: int
    red_bits: int

    def __post_init__(self) -> None:
        if self.n_vertices < 3:
            raise ValueError("coloring needs at least 3 vertices")
        if self.red_bits < 0 or self.red_bits >> self.n_triples:
            raise ValueError("red bitmap has bits outside [0, C(N,3))")

    @property
    def n_triples(self) -> int:
        return comb(self.n_vertices, 3)

    @classmethod
    def all_red(cls, n_vertices: int) -> "Coloring":
        return cls(n_vertices, (1 << comb(n_vertices, 3)) - 1)

    @classmethod
    def all_blue(cls, n_vertices: int) -> "Coloring":
        return cls(n_vertices, 0)

    @classmethod
    def from_red_edges(cls, n_vertices: int, edges) -> "Coloring":
        bits = 0
        for e in edges:
            if not isinstance(e, TripleEdge):
                e = TripleEdge.of(*e)
            if e.c >= n_vertices:
                raise ValueError(f"edge {e} outside [0, {n_vertices})")
            bits |= 1 << colex_rank(e)
        return cls(n_vertices, bits)

    def is_red(self, e: TripleEdge) -> bool:
        return (self.red_bits >> colex_rank(e)) & 1 == 1

    def swap(self) -> "Coloring":
        """The coloring with red and blue exchanged."""
        return Coloring(self.n_vertices, self.red_bits ^ ((1 << self.n_triples) - 1))

    def restrict(self, n_prefix: int) -> "Coloring":
        """Induced coloring on the first n_prefix vertices.

        Triples inside a label prefix occupy a rank prefix in colex order,
        so restriction is a bitmap truncation.
        """
        if not 3 <= n_prefix <= self.n_vertices:
            raise ValueError(f"prefix size {n_prefix} out of range")
        return Coloring(n_prefix, self.red_bits & ((1 << comb(n_prefix, 3)) - 1))

    def red_edges(self) -> Iterator[TripleEdge]:
        bits = self.red_bits
        while bits:
            low = bits & -bits
            yield colex_unrank(low.bit_length() - 1, self.n_vertices)
            bits ^= low


def edge_color(coloring: Coloring, e: TripleEdge) -> str:
    if e.c >= coloring.n_vertices:
        raise ValueError(f"edge {e} outside [0, {coloring.n_vertices})")
    return RED if coloring.is_red(e) else BLUE


def _derive_path_edges(vertices: Tuple[int, ...]) -> Tuple[TripleEdge, ...]:
    return tuple(
        TripleEdge.of(vertices[i], vertices[i + 1], vertices[i + 2])
        for i in range(0, len(vertices) - 2, 2)
    )


@dataclass(frozen=True)
class LoosePath:
    """Loose path of length l on vertices v1..v_{2l+1}; e_i = {v_{2i-1}, v_{2i}, v_{2i+1}}."""

    vertices: Tuple[int, ...]

    @property
    def length(self) -> int:
        # the empty path (no red edge anywhere) has length 0
        return (len(self.vertices) - 1) // 2 if self.vertices else 0

    @property
    def edges(self) -> Tuple[TripleEdge, ...]:
        return _derive_path_edges(self.vertices)

    @property
    def first_vertex(self) -> int:
        return self.vertices[0]

    @property
    def last_vertex(self) -> int:
        return self.vertices[-1]


@dataclass(frozen=True)
class LooseCycle:
    """Loose cycle of length l on vertices v1..v_{2l}; subscripts wrap mod 2l."""

    vertices: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) // 2

    @property
    def edges(self) -> Tuple[TripleEdge, ...]:
        v = self.vertices
        k = len(v)
        return tuple(
            TripleEdge.of(v[i], v[(i + 1) % k], v[(i + 2) % k]) for i in range(0, k, 2)
        )


Structure = Union[LoosePath, LooseCycle]


def validate_loose_path(vertices) -> LoosePath:
    """Check the loose path invariants and wrap the sequence.

    A sequence of 2l+1 >= 3 distinct vertices always decomposes into l
    edges with the loose intersection pattern, so distinctness and parity
    are the whole check.
    """
    v = tuple(int(x) for x in vertices)
    if len(v) < 3:
        raise StructureError(f"path needs at least 3 vertices, got {len(v)}")
    if len(v) % 2 == 0:
        raise StructureError(f"even vertex count {len(v)} cannot decompose into loose edges")
    if len(set(v)) != len(v):
        raise StructureError(f"duplicate vertex in path sequence {v}")
    if min(v) < 0:
        raise StructureError("negative vertex label")
    return LoosePath(v)


def validate_loose_cycle(vertices) -> LooseCycle:
    """Check the loose cycle invariants and wrap the sequence."""
    v = tuple(int(x) for x in vertices)
    if len(v) % 2 == 1:
        raise StructureError(f"odd vertex count {len(v)} cannot close a loose cycle")
    if len(v) < 6:
        raise StructureError(f"cycle length {len(v) // 2} below minimum 3")
    if len(set(v)) != len(v):
        raise StructureError(f"duplicate vertex in cycle sequence {v}")
    if min(v) < 0:
        raise StructureError("negative vertex label")
    return LooseCycle(v)


@dataclass(frozen=True)
class Witness:
    """A monochromatic loose structure claimed to exist in a coloring."""

    color: str
    shape: str
    structure: Structure

    @property
    def length(self) -> int:
        return self.structure.length


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_witness(coloring: Coloring, witness: Witness) -> VerifyResult:
    """Accept iff the structure validates and every edge has the claimed color."""
    if witness.color not in (RED, BLUE):
        return VerifyResult(False, f"unknown color {witness.color!r}")
    try:
        if witness.shape == PATH:
            structure = validate_loose_path(witness.structure.vertices)
        elif witness.shape == CYCLE:
            structure = validate_loose_cycle(witness.structure.vertices)
        else:
            return VerifyResult(False, f"unknown shape {witness.shape!r}")
    except StructureError as exc:
        return VerifyResult(False, str(exc))
    if max(structure.vertices) >= coloring.n_vertices:
        return VerifyResult(False, "vertex label outside the coloring")
    for e in structure.edges:
        if edge_color(coloring, e) != witness.color:
            return VerifyResult(
                False,
                f"edge {{{e.a},{e.b},{e.c}}} is {edge_color(coloring, e)},"
                f" witness claims {witness.color}",
            )
    return VerifyResult(True)
