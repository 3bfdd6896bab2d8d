"""Constructive extraction of monochromatic witnesses at the Ramsey threshold.

Given a 2-coloring of K3_N with N at or above the threshold of a pair, the
engine produces a verified red or blue witness.  The algorithm is inductive:
solve the pair with the long side shortened by one on a vertex prefix of the
recursive threshold size, then lift the resulting red structure by one edge.
The lift works by maximalizing the red structure against the reservoir W
(the vertices outside it) with length-increasing replacement moves, chaining
a blue path through W across 2- and 3-edge windows of the red path, and
closing the assembly with a short list of candidate structures whose edge
colors decide the branch: either some candidate is fully blue (the blue
witness) or the red edge that blocks it extends the red structure to the
red witness.

Every emitted witness is re-verified against the coloring.  A few corner
branches are intentionally not transcribed into closed-form candidates;
when one is reached, a bounded complete search finishes the extraction and
the event is recorded in the trace.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from itertools import permutations
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

from .constructions import CC, PMCN, PNCM, PP, PairKind
from .core import (
    BLUE,
    CYCLE,
    PATH,
    RED,
    Coloring,
    LoosePath,
    Structure,
    StructureError,
    TripleEdge,
    Witness,
    colex_unrank,
    opposite,
    validate_loose_cycle,
    validate_loose_path,
    verify_witness,
)
from .oracle import (
    _ColorTest,
    find_loose_cycle_from_edges,
    find_loose_path_from_edges,
    find_mono_cycle,
    find_mono_path,
)

# (n, m) pairs whose thresholds rest on external small-case results.
_BASES = {(3, 3), (4, 3), (4, 4)}

_CHAIN_BUDGET = 4000


class ExtractionError(RuntimeError):
    """The engine failed to produce a witness; carries the trace if any."""


class RedExtension(Exception):
    """A maximality assumption was refuted: a longer red path exists.

    Not an error; the handler adopts the carried path and re-enters the step.
    """

    def __init__(self, path_vertices: Sequence[int]) -> None:
        self.path_vertices = tuple(path_vertices)
        super().__init__(f"red path extends to length {(len(self.path_vertices) - 1) // 2}")


def _note(trace: Optional[List[str]], msg: str) -> None:
    if trace is not None:
        trace.append(msg)


def ramsey_number(pair: PairKind) -> int:
    """Least N such that every coloring of K3_N contains one of the targets."""
    n, m = pair.n, pair.m
    if pair.kind in (PP, PNCM):
        return 2 * n + (m + 1) // 2
    return 2 * n + (m - 1) // 2


# ---------------------------------------------------------------------------
# Red path growth: greedy seed, end extension, replacement moves.


def _append_extend(red: _ColorTest, n: int, seq: List[int]) -> None:
    """Grow seq in place by whole red edges at either end, two fresh vertices
    per edge, lowest labels first."""
    grown = True
    while grown:
        grown = False
        used = set(seq)
        end = seq[-1]
        for mid in range(n):
            if mid in used:
                continue
            for new in range(n):
                if new == mid or new in used:
                    continue
                if red(end, mid, new):
                    seq.extend((mid, new))
                    grown = True
                    break
            if grown:
                break
        if grown:
            continue
        head = seq[0]
        for mid in range(n):
            if mid in used:
                continue
            for new in range(n):
                if new == mid or new in used:
                    continue
                if red(head, mid, new):
                    seq[:0] = [new, mid]
                    grown = True
                    break
            if grown:
                break


def greedy_red_path(c: Coloring) -> LoosePath:
    """A red loose path not extendable by one red edge at either end.

    Empty path if the coloring has no red edge.  Deterministic: seeded from
    the lowest-rank red triple, extensions take the lowest labels first.
    """
    if c.red_bits == 0:
        return LoosePath(())
    red = _ColorTest(c, RED)
    first = colex_unrank((c.red_bits & -c.red_bits).bit_length() - 1, c.n_vertices)
    seq = [first.a, first.b, first.c]
    _append_extend(red, c.n_vertices, seq)
    return LoosePath(tuple(seq))


def _find_move(red: _ColorTest, p: List[int], wset) -> Optional[Tuple[List[int], Tuple[int, int]]]:
    """First length-increasing red replacement of one or two consecutive path
    edges using two reservoir vertices, preserving the path's end vertices.

    The replacement may re-attach at the middle vertex of a neighboring edge
    (demoting that edge's old link to a private vertex); the neighboring edge
    keeps its vertex set, so only the new edges need color checks.
    Returns (new vertex sequence, (x, y) used) or None.
    """
    L = (len(p) - 1) // 2
    wl = sorted(wset)
    if len(wl) < 2 or L == 0:
        return None
    for j in range(L):
        lats = [(p[2 * j], p[: 2 * j + 1])]
        if j >= 1:
            lats.append((p[2 * j - 1], p[: 2 * j - 1] + [p[2 * j], p[2 * j - 1]]))
        rats1 = [(p[2 * j + 2], p[2 * j + 2 :])]
        if j <= L - 2:
            rats1.append((p[2 * j + 3], [p[2 * j + 3], p[2 * j + 2]] + p[2 * j + 4 :]))
        mid = p[2 * j + 1]
        for xi in range(len(wl)):
            for yi in range(xi + 1, len(wl)):
                x, y = wl[xi], wl[yi]
                pool3 = (mid, x, y)
                for lat, left in lats:
                    for rat, right in rats1:
                        for i1, i2, i3 in permutations(pool3):
                            if red(lat, i1, i2) and red(i2, i3, rat):
                                return left + [i1, i2, i3] + right, (x, y)
        if j > L - 2:
            continue
        rats2 = [(p[2 * j + 4], p[2 * j + 4 :])]
        if j <= L - 3:
            rats2.append((p[2 * j + 5], [p[2 * j + 5], p[2 * j + 4]] + p[2 * j + 6 :]))
        core = (p[2 * j + 1], p[2 * j + 2], p[2 * j + 3])
        for xi in range(len(wl)):
            for yi in range(xi + 1, len(wl)):
                x, y = wl[xi], wl[yi]
                pool5 = core + (x, y)
                for lat, left in lats:
                    for rat, right in rats2:
                        for a, b in permutations(pool5, 2):
                            if not red(lat, a, b):
                                continue
                            rest = [v for v in pool5 if v != a and v != b]
                            for d1, d2 in permutations(rest, 2):
                                if not red(b, d1, d2):
                                    continue
                                (e,) = [v for v in rest if v != d1 and v != d2]
                                if red(d2, e, rat):
                                    return left + [a, b, d1, d2, e] + right, (x, y)
    return None


def _maximalize(red: _ColorTest, p: List[int], wset: Set[int]) -> Tuple[List[int], Set[int]]:
    """Apply replacement moves until none exists.  Each move grows the path by
    one edge and consumes two reservoir vertices, so this terminates."""
    while True:
        mv = _find_move(red, p, wset)
        if mv is None:
            return p, wset
        p, (x, y) = mv
        wset = wset - {x, y}


# ---------------------------------------------------------------------------
# Blue chaining through windows of the red path.


def _window_inners(verts: List[int], j: int) -> List[Tuple[int, int, int]]:
    """Inner vertex triples of the candidate blue 2-paths over the window
    starting at edge j.  All avoid the window's last vertex."""
    a0, a1, a2, b1 = verts[2 * j], verts[2 * j + 1], verts[2 * j + 2], verts[2 * j + 3]
    return [
        (a2, a1, b1),
        (a2, b1, a1),
        (a1, a0, a2),
        (a0, a1, a2),
        (a1, a0, b1),
        (a0, a1, b1),
    ]


def _window_p4(verts: List[int], j: int) -> Tuple[int, ...]:
    """Inner 6-tuple of the candidate blue 4-path over the 3-edge window at j,
    split around its middle reservoir vertex; avoids the window's last vertex."""
    a0, a1, a2 = verts[2 * j], verts[2 * j + 1], verts[2 * j + 2]
    b1, b2, d1 = verts[2 * j + 3], verts[2 * j + 4], verts[2 * j + 5]
    return (a0, a1, b2, b1, d1, a2)


def _chain(
    c: Coloring, verts: List[int], w0: Sequence[int], trace: Optional[List[str]]
) -> Tuple[Optional[List[int]], FrozenSet[int], int]:
    """Chain a blue path with end vertices in w0 across prefix windows of the
    red path, consuming 2 or 3 edges and 1-3 fresh reservoir vertices per
    window.  Prefers using all of w0; otherwise returns the best assembly.

    Returns (sequence or None, reservoir vertices used, edges consumed).
    """
    blue = _ColorTest(c, BLUE)
    L = (len(verts) - 1) // 2
    w0s = sorted(w0)
    total = len(w0s)
    budget = [_CHAIN_BUDGET]
    best: List = [None, frozenset(), 0]

    def rec(j: int, seq: List[int], used: FrozenSet[int]):
        if len(used) > len(best[1]):
            best[0], best[1], best[2] = list(seq), used, j
        if total - len(used) == 0:
            return list(seq), used, j
        if budget[0] <= 0:
            return None
        budget[0] -= 1
        fresh = [w for w in w0s if w not in used]
        first = not seq
        if j <= L - 2:
            for inner in _window_inners(verts, j):
                for i1, i2, i3 in (inner, inner[::-1]):
                    if first:
                        for p in fresh:
                            if not blue(p, i1, i2):
                                continue
                            for q in fresh:
                                if q != p and blue(i2, i3, q):
                                    res = rec(j + 2, [p, i1, i2, i3, q], used | {p, q})
                                    if res:
                                        return res
                    else:
                        p = seq[-1]
                        if not blue(p, i1, i2):
                            continue
                        for q in fresh:
                            if blue(i2, i3, q):
                                res = rec(j + 2, seq + [i1, i2, i3, q], used | {q})
                                if res:
                                    return res
        if j <= L - 3:
            g0, g1, g2, g3, g4, g5 = _window_p4(verts, j)
            heads = fresh if first else [seq[-1]]
            for p in heads:
                if p in used and first:
                    continue
                if not blue(p, g0, g1):
                    continue
                for q in fresh:
                    if q == p or not blue(g1, g2, q) or not blue(q, g3, g4):
                        continue
                    for s in fresh:
                        if s in (p, q) or not blue(g4, g5, s):
                            continue
                        frag = [g0, g1, g2, q, g3, g4, g5, s]
                        new_used = used | {q, s} | ({p} if first else frozenset())
                        res = rec(j + 3, ([p] if first else seq) + frag, new_used)
                        if res:
                            return res
        return None

    res = rec(0, [], frozenset())
    if res is None:
        res = tuple(best)
        _note(trace, f"chain: leftover {total - len(res[1])} reservoir vertices")
    seq, used, consumed = res
    return (list(seq) if seq else None), frozenset(used), consumed


# ---------------------------------------------------------------------------
# Candidate checking and fallbacks.


def _check(c: Coloring, color: str, shape: str, seq: Sequence[int]) -> Optional[Witness]:
    """Wrap seq as a witness iff it validates and is entirely of the color."""
    try:
        if shape == PATH:
            structure = validate_loose_path(seq)
        else:
            structure = validate_loose_cycle(seq)
    except StructureError:
        return None
    w = Witness(color, shape, structure)
    return w if verify_witness(c, w) else None


def _completion(
    c: Coloring,
    blue_target: Tuple[str, int],
    red_target: Tuple[str, int],
    trace: Optional[List[str]],
    why: str,
) -> Witness:
    """Bounded complete search, blue target first.  Reached only from branches
    without closed-form candidates; always traced."""
    _note(trace, f"completion search ({why})")
    bshape, blen = blue_target
    finder = find_mono_path if bshape == PATH else find_mono_cycle
    w = finder(c, BLUE, blen)
    if w is None:
        rshape, rlen = red_target
        finder = find_mono_path if rshape == PATH else find_mono_cycle
        w = finder(c, RED, rlen)
    if w is None:
        raise ExtractionError(
            f"no witness found below threshold invariants; trace: {trace}"
        )
    return w


def _open_cycle(c: Coloring, cyc: List[int], color: str):
    """Open a monochromatic cycle into a same-color path one edge longer.

    Tries every cycle edge against every outside vertex; if every boundary
    edge has the opposite color, returns that bipartite edge family instead.
    Returns ("path", seq) or ("family", edges).
    """
    test = _ColorTest(c, color)
    k = len(cyc)
    outside = sorted(set(range(c.n_vertices)) - set(cyc))
    family: List[TripleEdge] = []
    for j in range(0, k, 2):
        u, v, w = cyc[j], cyc[j + 1], cyc[(j + 2) % k]
        for z in outside:
            if test(u, v, z):
                return "path", cyc[j + 2 :] + cyc[: j + 1] + [v, z]
            if test(v, w, z):
                return "path", [z, v] + cyc[j + 2 :] + cyc[: j + 1]
            family.append(TripleEdge.of(u, v, z))
            family.append(TripleEdge.of(v, w, z))
    return "family", family


def _convert_red_cycle(
    c: Coloring, cyc: List[int], n: int, blue_shape: str, blue_m: int,
    trace: Optional[List[str]],
) -> Witness:
    """A red cycle of length n yields either a red path of length n or the
    blue target assembled from the all-blue cycle boundary."""
    kind, payload = _open_cycle(c, cyc, RED)
    if kind == "path":
        _note(trace, "opened red cycle into red path")
        return Witness(RED, PATH, validate_loose_path(payload))
    _note(trace, "cycle boundary entirely blue; assembling blue target")
    if blue_shape == CYCLE:
        seq = find_loose_cycle_from_edges(payload, blue_m)
    else:
        seq = find_loose_path_from_edges(payload, blue_m)
    if seq is not None:
        structure = (
            validate_loose_cycle(seq) if blue_shape == CYCLE else validate_loose_path(seq)
        )
        return Witness(BLUE, blue_shape, structure)
    return _completion(c, (blue_shape, blue_m), (PATH, n), trace, "cycle conversion")


# ---------------------------------------------------------------------------
# The two induction steps.


def _cycle_candidates(
    P: List[int], c0: int, c1: int, c2: int, z: int,
    qq: List[int], x: int, m: int, u: Optional[int],
) -> List[Tuple[str, str, List[int]]]:
    """Closing candidates for the cycle step, one chain orientation.

    P runs from c2 around to c0 with the off-path vertex c1 and the red
    boundary edge {c1, c2, z}; qq is the chained blue path.  Exactly one
    candidate is fully monochromatic in each branch of the case analysis;
    invalid or miscolored candidates are discarded by the caller's check.
    """
    x1, y1 = qq[0], qq[-1]
    cands: List[Tuple[str, str, List[int]]] = []
    if x == 0 and m % 2 == 0:
        cands.append((BLUE, CYCLE, qq + [c1, c0, z]))
        cands.append((RED, CYCLE, P + [y1, c1, z]))
        cands.append((RED, CYCLE, P + [x1, z, c1]))
    elif x == 0:
        q_head, y2 = qq[:-4], qq[-5]
        cands.append((BLUE, CYCLE, q_head + [P[-2], c1, y1, c0, z]))
        cands.append((RED, CYCLE, P[:-2] + [c0, P[-2], y2, c1, z]))
        cands.append((RED, CYCLE, P + [y1, c1, z]))
        cands.append((RED, CYCLE, P + [x1, z, c1]))
    elif x == 1 and m % 2 == 1:
        cands.append((BLUE, CYCLE, qq + [P[-2], c1, u, c0, z]))
        cands.append((RED, CYCLE, P[:-2] + [c0, P[-2], y1, c1, z]))
        cands.append((RED, CYCLE, P + [u, c1, z]))
        cands.append((RED, CYCLE, P + [x1, z, c1]))
    elif x == 1:
        cands.append((BLUE, CYCLE, qq + [P[-3], P[-4], P[-2], u, c1, c0, z]))
        cands.append((BLUE, CYCLE, qq + [c0, c1, P[-2], u, z, P[-5], P[-4]]))
        cands.append((BLUE, CYCLE, qq + [c0, c1, P[-2], u, P[-3], P[-4], P[-5]]))
        cands.append((RED, CYCLE, P + [y1, c1, z]))
        cands.append((RED, CYCLE, P[:-2] + [c0, P[-2], u, c1, z]))
        cands.append((RED, CYCLE, P + [u, c1, z]))
        cands.append((RED, CYCLE, P + [x1, z, c1]))
        cands.append((RED, CYCLE, P[:-4] + [x1, P[-4], u, P[-2], P[-3], c0, c1]))
        cands.append((RED, CYCLE, P[:-4] + [z, u, P[-4], P[-3], P[-2], c0, c1]))
    return cands


def _cycle_step(
    c: Coloring, cyc: List[int], n: int, m: int, want: str,
    trace: Optional[List[str]],
) -> Witness:
    """Lift a red cycle of length n-1 to a red cycle of length n or produce
    the blue target (cycle of length m, or path of length m when n > m).
    """
    red = _ColorTest(c, RED)
    k = len(cyc)
    outside = sorted(set(range(c.n_vertices)) - set(cyc))

    opener = None
    for idx in range(0, k, 2):
        va, vb, vc = cyc[idx], cyc[idx + 1], cyc[(idx + 2) % k]
        for z in outside:
            if red(vb, vc, z):
                opener = (cyc[idx:] + cyc[:idx], z)
                break
            if red(va, vb, z):
                # reverse the cycle so the red boundary edge sits at the front
                opener = ([cyc[(idx + 2 - t) % k] for t in range(k)], z)
                break
        if opener:
            break

    if opener is None:
        # every boundary edge between the cycle and the outside is blue
        _note(trace, "cycle boundary entirely blue; assembling blue target directly")
        family = []
        for j in range(0, k, 2):
            for z in outside:
                family.append(TripleEdge.of(cyc[j], cyc[j + 1], z))
                family.append(TripleEdge.of(cyc[j + 1], cyc[(j + 2) % k], z))
        if want == CYCLE:
            seq = find_loose_cycle_from_edges(family, m)
            if seq is not None:
                return Witness(BLUE, CYCLE, validate_loose_cycle(seq))
        else:
            seq = find_loose_path_from_edges(family, m)
            if seq is not None:
                return Witness(BLUE, PATH, validate_loose_path(seq))
        return _completion(c, (want, m), (CYCLE, n), trace, "blue boundary assembly")

    cyc2, z = opener
    c0, c1, c2 = cyc2[0], cyc2[1], cyc2[2]
    P = list(cyc2[2:]) + [cyc2[0]]
    W0 = [v for v in outside if v != z]
    _note(trace, f"opened cycle: boundary edge through {z}, reservoir {W0}")

    # Any replacement move on the opened path closes to the longer red cycle.
    mv = _find_move(red, P, W0)
    if mv is not None:
        _note(trace, "replacement move closes the longer red cycle")
        return Witness(RED, CYCLE, validate_loose_cycle(mv[0] + [c1]))

    qq0, used, consumed = _chain(c, P, W0, trace)
    x = len(W0) - len(used)
    if qq0 is None or x >= 2:
        warnings.warn(
            f"cycle step reached {x} leftover reservoir vertices (n={n}, m={m});"
            " finishing by complete search",
            RuntimeWarning,
            stacklevel=2,
        )
        return _completion(c, (want, m), (CYCLE, n), trace, f"chain leftover {x}")
    _note(trace, f"chained blue path: {consumed} edges consumed, leftover {x}")

    u = sorted(set(W0) - used)[0] if x == 1 else None
    for qq in (qq0, qq0[::-1]):
        for color, shape, seq in _cycle_candidates(P, c0, c1, c2, z, qq, x, m, u):
            w = _check(c, color, shape, seq)
            if w is None:
                continue
            if color == RED:
                _note(trace, "closing candidate red: longer red cycle")
                return w
            if want == CYCLE:
                _note(trace, "closing candidate blue: blue cycle")
                return w
            # blue cycle found but a blue path is wanted: open it
            kind, payload = _open_cycle(c, list(seq), BLUE)
            if kind == "path":
                _note(trace, "opened blue cycle into blue path")
                return Witness(BLUE, PATH, validate_loose_path(payload))
            rseq = find_loose_cycle_from_edges(payload, n)
            if rseq is not None:
                _note(trace, "blue cycle boundary entirely red: red cycle")
                return Witness(RED, CYCLE, validate_loose_cycle(rseq))
            return _completion(c, (PATH, m), (CYCLE, n), trace, "blue cycle opening")
    return _completion(c, (want, m), (CYCLE, n), trace, "no closing candidate matched")


def _path_candidates(
    p: List[int], u: int, qq: List[int], x: int, m: int, v: Optional[int]
) -> List[Tuple[str, str, List[int]]]:
    """Closing candidates for the path step, one chain orientation.  Red cycle
    candidates are converted by the caller."""
    y, zz = qq[0], qq[-1]
    cands: List[Tuple[str, str, List[int]]] = []
    if x == 0 and m % 2 == 1:
        cands.append((BLUE, PATH, qq + [p[0], u]))
        cands.append((RED, PATH, [u, zz] + p))
    elif x == 0:
        cands.append((BLUE, PATH, [p[0], u] + qq + [p[1], p[-1]]))
        cands.append((RED, PATH, [y, u] + p))
        cands.append((RED, CYCLE, p[2:] + [zz, p[1], p[0]]))
    elif x == 1 and m % 2 == 1:
        cands.append((BLUE, PATH, qq + [p[1], p[-2], u, v, p[-1], p[0]]))
        cands.append((RED, CYCLE, p[2:-2] + [p[-1], p[-2], zz, p[1], p[0]]))
        cands.append((RED, PATH, p[:-2] + [p[-1], p[-2], u, v]))
        cands.append((RED, CYCLE, p + [v]))
    return cands


def _path_step(
    c: Coloring, p: List[int], n: int, m: int, trace: Optional[List[str]]
) -> Witness:
    """Lift a red path of length n-1 to a red path of length n or produce a
    blue path of length m."""
    red = _ColorTest(c, RED)
    p = list(p)
    # grow toward the red target before anything else
    while True:
        _append_extend(red, c.n_vertices, p)
        if (len(p) - 1) // 2 >= n:
            _note(trace, "red path extended to target length")
            return Witness(RED, PATH, validate_loose_path(p[: 2 * n + 1]))
        wbar = set(range(c.n_vertices)) - set(p)
        mv = _find_move(red, p, wbar)
        if mv is None:
            break
        p = mv[0]
        if (len(p) - 1) // 2 >= n:
            return Witness(RED, PATH, validate_loose_path(p[: 2 * n + 1]))

    wbar = sorted(set(range(c.n_vertices)) - set(p))
    u = wbar[-1]
    W0 = wbar[:-1]
    qq0, used, consumed = _chain(c, p[2:], W0, trace)
    x = len(W0) - len(used)
    if qq0 is None or x >= 2 or (x == 1 and m % 2 == 0):
        if qq0 is not None and x >= 2:
            warnings.warn(
                f"path step reached {x} leftover reservoir vertices (n={n}, m={m});"
                " finishing by complete search",
                RuntimeWarning,
                stacklevel=2,
            )
        return _completion(c, (PATH, m), (PATH, n), trace, f"path chain leftover {x}")
    _note(trace, f"chained blue path: {consumed} edges consumed, leftover {x}")

    v = sorted(set(W0) - used)[0] if x == 1 else None
    for qq in (qq0, qq0[::-1]):
        for color, shape, seq in _path_candidates(p, u, qq, x, m, v):
            w = _check(c, color, shape, seq)
            if w is None:
                continue
            if color == RED and shape == CYCLE:
                _note(trace, "closing candidate red cycle; converting")
                return _convert_red_cycle(c, list(seq), n, PATH, m, trace)
            _note(trace, f"closing candidate accepted: {color} {shape}")
            return w
    return _completion(c, (PATH, m), (PATH, n), trace, "no closing candidate matched")


# ---------------------------------------------------------------------------
# Top-level induction.


def _swapped(w: Witness) -> Witness:
    return Witness(opposite(w.color), w.shape, w.structure)


def _fast_red(c: Coloring, target: Tuple[str, int]) -> Optional[Witness]:
    """Cheap attempt at the red target: greedy path plus replacement moves.
    Succeeds on most colorings without entering the induction."""
    shape, tlen = target
    gp = greedy_red_path(c)
    if not gp.vertices:
        return None
    red = _ColorTest(c, RED)
    seq = list(gp.vertices)
    need = tlen if shape == PATH else tlen - 1
    while (len(seq) - 1) // 2 < need:
        wset = set(range(c.n_vertices)) - set(seq)
        mv = _find_move(red, seq, wset)
        if mv is None:
            break
        seq = mv[0]
        _append_extend(red, c.n_vertices, seq)
    L = (len(seq) - 1) // 2
    if shape == PATH:
        if L >= tlen:
            return Witness(RED, PATH, validate_loose_path(seq[: 2 * tlen + 1]))
        return None
    if L < tlen - 1:
        return None
    # close a sub-path of length tlen-1 with one fresh vertex
    span = 2 * tlen - 1
    for off in range(0, len(seq) - span + 1, 2):
        sub = seq[off : off + span]
        inside = set(sub)
        for zv in range(c.n_vertices):
            if zv not in inside and red(sub[-1], zv, sub[0]):
                return Witness(RED, CYCLE, validate_loose_cycle(sub + [zv]))
    return None


def _oracle_solve(pair: PairKind, c: Coloring, trace: Optional[List[str]]) -> Witness:
    """Complete search for the base cases; red target first."""
    _note(trace, f"base case {pair}: complete search")
    for color, (shape, length) in ((RED, pair.red_target), (BLUE, pair.blue_target)):
        finder = find_mono_path if shape == PATH else find_mono_cycle
        w = finder(c, color, length)
        if w is not None:
            return w
    raise ExtractionError(f"base case {pair} produced no witness; trace: {trace}")


def _solve(pair: PairKind, c: Coloring, trace: Optional[List[str]]) -> Witness:
    kind, n, m = pair.kind, pair.n, pair.m
    w = _fast_red(c, pair.red_target)
    if w is not None:
        _note(trace, f"{pair}: red target built greedily")
        return w

    if kind == PP:
        if (n, m) in _BASES:
            return _oracle_solve(pair, c, trace)
        if n > m:
            sub = PairKind(PP, n - 1, m)
            rw = _solve(sub, c.restrict(ramsey_number(sub)), trace)
            if rw.color == BLUE:
                return rw
            return _path_step(c, list(rw.structure.vertices), n, m, trace)
        sub = PairKind(PP, n, n - 1)
        rw = _solve(sub, c.restrict(ramsey_number(sub)), trace)
        if rw.color == RED:
            return rw
        _note(trace, f"{pair}: swapping colors around blue path of length {n - 1}")
        return _swapped(_path_step(c.swap(), list(rw.structure.vertices), n, n, trace))

    if kind == CC:
        if (n, m) in _BASES:
            return _oracle_solve(pair, c, trace)
        if n > m:
            sub = PairKind(CC, n - 1, m)
            rw = _solve(sub, c.restrict(ramsey_number(sub)), trace)
            if rw.color == BLUE:
                return rw
            return _cycle_step(c, list(rw.structure.vertices), n, m, CYCLE, trace)
        sub = PairKind(CC, n, n - 1)
        rw = _solve(sub, c.restrict(ramsey_number(sub)), trace)
        if rw.color == RED:
            return rw
        _note(trace, f"{pair}: swapping colors around blue cycle of length {n - 1}")
        return _swapped(_cycle_step(c.swap(), list(rw.structure.vertices), n, n, CYCLE, trace))

    if kind == PNCM:
        sub = PairKind(CC, n, m)
        rw = _solve(sub, c.restrict(ramsey_number(sub)), trace)
        if rw.color == BLUE:
            return rw
        return _convert_red_cycle(c, list(rw.structure.vertices), n, CYCLE, m, trace)

    # kind == PMCN
    if (n, m) == (4, 3):
        sub = PairKind(CC, 4, 4)
        rw = _solve(sub, c.restrict(ramsey_number(sub)), trace)
        if rw.color == BLUE:
            return rw
        # a red cycle of length 4 contains a red path of length 3
        return Witness(RED, PATH, validate_loose_path(rw.structure.vertices[:7]))
    if n == m + 1:
        sub = PairKind(PNCM, m, m)
    else:
        sub = PairKind(PMCN, n - 1, m)
    rw = _solve(sub, c.restrict(ramsey_number(sub)), trace)
    if rw.color == RED:
        return rw
    _note(trace, f"{pair}: swapping colors around blue cycle of length {sub.n}")
    return _swapped(_cycle_step(c.swap(), list(rw.structure.vertices), n, m, PATH, trace))


def solve(pair: PairKind, coloring: Coloring, trace: Optional[List[str]] = None) -> Witness:
    """Extract a verified witness for the pair from any coloring at or above
    the threshold.  Deterministic: identical inputs give identical witnesses.
    """
    N = ramsey_number(pair)
    if coloring.n_vertices < N:
        raise ValueError(
            f"need at least {N} vertices for {pair}, coloring has {coloring.n_vertices}"
        )
    c = coloring.restrict(N)
    w = _solve(pair, c, trace)
    res = verify_witness(c, w)
    if not res:
        raise ExtractionError(f"internal: witness fails verification: {res.reason}")
    target = (w.shape, w.length)
    expected = pair.red_target if w.color == RED else pair.blue_target
    if target != expected:
        raise ExtractionError(
            f"internal: witness {w.color} {target} matches neither target of {pair}"
        )
    return w


# ---------------------------------------------------------------------------
# Inspectable state machine pieces.


@dataclass(frozen=True)
class Configuration:
    """A blue 2-path whose inner vertices sit on two consecutive red-path
    edges and whose end vertices come from the reservoir."""

    edge1: TripleEdge
    edge2: TripleEdge
    link: int
    S: FrozenSet[int]
    ends: Tuple[int, int]
    quality: str
    seq: Tuple[int, ...]


@dataclass(frozen=True)
class ExtractionState:
    """Snapshot of one extraction: the coloring, the red structure, the
    reservoir W, and the blue assembly bookkeeping."""

    coloring: Coloring
    red_structure: Structure
    W: FrozenSet[int]
    blue_assembly: Optional[LoosePath] = None
    consumed_prefix: int = 0
    r: int = 0
    T: FrozenSet[int] = frozenset()


def maximalize_wrt(st: ExtractionState) -> ExtractionState:
    """Apply replacement moves until the red path is maximal w.r.t. W."""
    red = _ColorTest(st.coloring, RED)
    seq, wset = _maximalize(red, list(st.red_structure.vertices), set(st.W))
    return replace(
        st, red_structure=validate_loose_path(seq), W=frozenset(wset)
    )


def find_configuration(st: ExtractionState, i: int):
    """The guaranteed blue configuration over the window at edge index i
    (0-based) of a red path maximal w.r.t. W with |W| >= 3.

    Returns a good Configuration, or a (bad, good) pair over disjoint inner
    sets when no good one exists over the first two window edges.  Raises
    RedExtension if the path is not actually maximal.
    """
    c = st.coloring
    red = _ColorTest(c, RED)
    blue = _ColorTest(c, BLUE)
    verts = list(st.red_structure.vertices)
    wl = sorted(st.W)
    if len(wl) < 3:
        raise ValueError(f"reservoir of size {len(wl)} below minimum 3")
    L = (len(verts) - 1) // 2
    if i < 0 or i > L - 2:
        raise ValueError(f"no two consecutive edges at index {i}")
    mv = _find_move(red, verts, set(wl))
    if mv is not None:
        raise RedExtension(mv[0])

    a0, a1, a2, b1 = verts[2 * i], verts[2 * i + 1], verts[2 * i + 2], verts[2 * i + 3]
    b2 = verts[2 * i + 4]

    def build(seq: Tuple[int, ...], quality: str) -> Configuration:
        e1 = TripleEdge.of(seq[0], seq[1], seq[2])
        e2 = TripleEdge.of(seq[2], seq[3], seq[4])
        return Configuration(
            edge1=e1,
            edge2=e2,
            link=seq[2],
            S=frozenset(seq[1:4]),
            ends=(seq[0], seq[4]),
            quality=quality,
            seq=seq,
        )

    for inner in _window_inners(verts, i):
        for p in wl:
            if not blue(p, inner[0], inner[1]):
                continue
            for q in wl:
                if q != p and blue(inner[1], inner[2], q):
                    return build((p, *inner, q), "good")
    # no good configuration: the bad one plus the good one over the next window
    if i > L - 3:
        raise ExtractionError("no good configuration and no third window edge")
    d1 = verts[2 * i + 5]
    bad = good = None
    for p in wl:
        if bad is None and blue(p, a0, a1):
            for q in wl:
                if q != p and blue(a1, b2, q):
                    bad = build((p, a0, a1, b2, q), "bad")
                    break
        if good is None and blue(p, b1, d1):
            for q in wl:
                if q != p and blue(d1, a2, q):
                    good = build((p, b1, d1, a2, q), "good")
                    break
    if bad is None or good is None:
        raise ExtractionError("window colors violate the forced-blue analysis")
    return bad, good


def chain_blue_path(st: ExtractionState) -> ExtractionState:
    """Run the chaining pass and record the assembly in the state."""
    verts = list(st.red_structure.vertices)
    L = (len(verts) - 1) // 2
    qq, used, consumed = _chain(st.coloring, verts, sorted(st.W), None)
    return replace(
        st,
        blue_assembly=validate_loose_path(qq) if qq else None,
        consumed_prefix=consumed,
        r=L - consumed,
        T=frozenset(st.W) - used,
    )


def cycle_step(
    st: ExtractionState, n: int, m: int, want: str = CYCLE,
    trace: Optional[List[str]] = None,
) -> Witness:
    return _cycle_step(st.coloring, list(st.red_structure.vertices), n, m, want, trace)


def path_step(
    st: ExtractionState, n: int, m: int, trace: Optional[List[str]] = None
) -> Witness:
    return _path_step(st.coloring, list(st.red_structure.vertices), n, m, trace)
