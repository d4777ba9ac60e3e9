"""Oriented link diagrams encoded as PD (planar diagram) codes.

A crossing is stored as a quadruple of arc labels listed in rotational
order around the crossing, starting at the arc on which the under-strand
enters (with respect to the diagram's base orientation).  The strand
occupying slots 0 and 2 passes under; the strand occupying slots 1 and 3
passes over.  Per-component boolean flags reverse components relative to
the base orientation, so arbitrary orientation assignments (e.g. torus
links with some strands reversed) need no re-encoding of the quadruples.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class PDError(ValueError):
    """Malformed or inconsistent PD input."""


class NonPlanarError(PDError):
    """PD data does not describe a planar (genus zero) diagram."""


@dataclass(frozen=True)
class Crossing:
    quad: tuple[int, int, int, int]
    over_in: int  # 1 or 3: slot where the over-strand enters (base orientation)


def _union(parent: dict, a, b) -> None:
    ra, rb = _find(parent, a), _find(parent, b)
    if ra != rb:
        parent[rb] = ra


def _find(parent: dict, a):
    parent.setdefault(a, a)
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


@dataclass
class OrientedLinkDiagram:
    """PD-coded oriented link diagram with per-component orientation flags."""

    crossings: list[Crossing]
    free_loops: int = 0
    component_orientations: list[bool] = field(default_factory=list)

    # Derived, filled in by __post_init__:
    arc_component: dict[int, int] = field(default_factory=dict, repr=False)
    component_count: int = 0

    def __post_init__(self) -> None:
        self.crossings = sorted(self.crossings, key=lambda c: c.quad)
        self._validate_arcs()
        self._label_components()
        if not self.component_orientations:
            self.component_orientations = [False] * self.component_count
        if len(self.component_orientations) != self.component_count:
            raise PDError(
                f"{len(self.component_orientations)} orientation flags for "
                f"{self.component_count} components"
            )

    # -- construction helpers -------------------------------------------------

    def _validate_arcs(self) -> None:
        seen: dict[int, int] = {}
        for c in self.crossings:
            if c.over_in not in (1, 3):
                raise PDError(f"over_in must be 1 or 3, got {c.over_in}")
            for a in c.quad:
                seen[a] = seen.get(a, 0) + 1
        bad = [a for a, k in seen.items() if k != 2]
        if bad:
            raise PDError(f"arc labels not appearing exactly twice: {sorted(bad)}")
        self._arcs = sorted(seen)

    def _label_components(self) -> None:
        parent: dict[int, int] = {}
        for c in self.crossings:
            _union(parent, c.quad[0], c.quad[2])
            _union(parent, c.quad[1], c.quad[3])
        reps: dict[int, list[int]] = {}
        for a in self._arcs:
            reps.setdefault(_find(parent, a), []).append(a)
        comps = sorted(reps.values(), key=min)
        self.arc_component = {a: i for i, comp in enumerate(comps) for a in comp}
        self.component_count = len(comps) + self.free_loops

    # -- basic queries ---------------------------------------------------------

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def arcs(self) -> list[int]:
        return list(self._arcs)

    def is_empty(self) -> bool:
        return not self.crossings and self.free_loops == 0

    def _reversed(self, comp: int) -> bool:
        return self.component_orientations[comp]

    def effective_entries(self, ci: int) -> tuple[int, int]:
        """(under-entry slot, over-entry slot) under the effective orientation."""
        c = self.crossings[ci]
        u = 2 if self._reversed(self.arc_component[c.quad[0]]) else 0
        o = c.over_in
        if self._reversed(self.arc_component[c.quad[1]]):
            o = (o + 2) % 4
        return u, o

    def sign(self, ci: int) -> int:
        u, o = self.effective_entries(ci)
        return 1 if (o - u) % 4 == 3 else -1

    @property
    def n_plus(self) -> int:
        return sum(1 for i in range(self.n_crossings) if self.sign(i) > 0)

    @property
    def n_minus(self) -> int:
        return self.n_crossings - self.n_plus

    def writhe(self) -> int:
        return self.n_plus - self.n_minus

    def oriented_vertex(self) -> tuple[int, ...]:
        """Cube vertex whose smoothings respect the orientation (0 at positive)."""
        return tuple(0 if self.sign(i) > 0 else 1 for i in range(self.n_crossings))

    # -- diagram operations ----------------------------------------------------

    def mirror(self) -> "OrientedLinkDiagram":
        new = []
        for c in self.crossings:
            q = c.quad
            if c.over_in == 3:
                new.append(Crossing((q[3], q[0], q[1], q[2]), 1))
            else:
                new.append(Crossing((q[1], q[2], q[3], q[0]), 3))
        return OrientedLinkDiagram(new, self.free_loops,
                                   list(self.component_orientations))

    def reverse_all(self) -> "OrientedLinkDiagram":
        return OrientedLinkDiagram(list(self.crossings), self.free_loops,
                                   [not f for f in self.component_orientations])

    def with_orientations(self, flags: Sequence[bool]) -> "OrientedLinkDiagram":
        return OrientedLinkDiagram(list(self.crossings), self.free_loops, list(flags))

    def disjoint_union(self, other: "OrientedLinkDiagram") -> "OrientedLinkDiagram":
        offset = (max(self._arcs) if self._arcs else 0) + 1
        shifted = [Crossing(tuple(a + offset for a in c.quad), c.over_in)
                   for c in other.crossings]
        # Component order of the union interleaves by smallest arc label, so
        # permute the orientation flags accordingly.
        merged = OrientedLinkDiagram(list(self.crossings) + shifted,
                                     self.free_loops + other.free_loops)
        flags = [False] * merged.component_count
        for a, comp in self.arc_component.items():
            flags[merged.arc_component[a]] = self.component_orientations[comp]
        for a, comp in other.arc_component.items():
            flags[merged.arc_component[a + offset]] = other.component_orientations[comp]
        n1 = len(set(self.arc_component.values()))
        n2 = len(set(other.arc_component.values()))
        for i in range(self.free_loops):
            flags[n1 + n2 + i] = self.component_orientations[n1 + i]
        for i in range(other.free_loops):
            flags[n1 + n2 + self.free_loops + i] = other.component_orientations[n2 + i]
        merged.component_orientations = flags
        return merged


def mirror(d: OrientedLinkDiagram) -> OrientedLinkDiagram:
    return d.mirror()


def reverse_all(d: OrientedLinkDiagram) -> OrientedLinkDiagram:
    return d.reverse_all()


def disjoint_union(d1: OrientedLinkDiagram, d2: OrientedLinkDiagram) -> OrientedLinkDiagram:
    return d1.disjoint_union(d2)


# -- parsing / serialization --------------------------------------------------

_QUAD_RE = re.compile(r"X[\(\[]\s*([0-9,\s]*?)\s*[\)\]]")


def parse_pd(text: str, orientations: Sequence[bool] | None = None,
             free_loops: int = 0) -> OrientedLinkDiagram:
    """Parse semicolon/whitespace separated ``X(a,b,c,d)`` quadruples.

    The optional ``reversed=i,j`` and ``loops=n`` suffixes emitted by
    :func:`serialize_pd` are accepted after a ``|`` separator.
    """
    text = text.strip()
    reversed_comps: list[int] = []
    if "|" in text:
        text, _, suffix = text.partition("|")
        for part in suffix.replace(";", " ").split():
            key, _, val = part.partition("=")
            if key == "loops":
                free_loops += int(val)
            elif key == "reversed":
                reversed_comps = [int(x) for x in val.split(",") if x]
            else:
                raise PDError(f"unknown PD suffix {part!r}")
    body = text.replace(";", " ")
    quads: list[tuple[int, int, int, int]] = []
    consumed = _QUAD_RE.sub(" ", body)
    if consumed.strip():
        raise PDError(f"unparsable PD fragments: {consumed.split()}")
    for m in _QUAD_RE.finditer(body):
        nums = [int(x) for x in m.group(1).split(",") if x.strip()]
        if len(nums) != 4:
            raise PDError(f"malformed quadruple X({m.group(1)})")
        quads.append(tuple(nums))
    crossings = _derive_over_entries(quads)
    d = OrientedLinkDiagram(crossings, free_loops)
    if orientations is not None:
        d = d.with_orientations(list(orientations))
    elif reversed_comps:
        flags = [False] * d.component_count
        for i in reversed_comps:
            flags[i] = True
        d = d.with_orientations(flags)
    return d


def _derive_over_entries(quads: list[tuple[int, int, int, int]]) -> list[Crossing]:
    """Derive over-strand entry slots from the slot-0/slot-2 direction rule.

    Each arc occurrence at some (crossing, slot) is either an entry into or an
    exit out of the crossing; slot 0 is an entry and slot 2 an exit by the PD
    convention, and every arc has exactly one entry and one exit occurrence.
    """
    seen: dict[int, int] = {}
    for q in quads:
        for a in q:
            seen[a] = seen.get(a, 0) + 1
    bad = [a for a, k in seen.items() if k != 2]
    if bad:
        raise PDError(f"arc labels not appearing exactly twice: {sorted(bad)}")

    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, q in enumerate(quads):
        for slot, a in enumerate(q):
            occ.setdefault(a, []).append((ci, slot))

    # inbound[(ci, slot)] = True if the arc there is directed into the crossing
    inbound: dict[tuple[int, int], bool] = {}

    def assign(pos: tuple[int, int], val: bool) -> None:
        stack = [(pos, val)]
        while stack:
            (ci, slot), v = stack.pop()
            cur = inbound.get((ci, slot))
            if cur is not None:
                if cur != v:
                    raise PDError("inconsistent orientation data in PD code")
                continue
            inbound[(ci, slot)] = v
            # the arc's other occurrence has the opposite in/out status
            a = quads[ci][slot]
            for pos2 in occ[a]:
                if pos2 != (ci, slot):
                    stack.append((pos2, not v))
            # over-strand slots of one crossing are one entry, one exit
            if slot in (1, 3):
                stack.append(((ci, 4 - slot), not v))

    for ci, q in enumerate(quads):
        assign((ci, 0), True)
        assign((ci, 2), False)
    # components that never pass under: orient deterministically
    for ci, q in enumerate(quads):
        for slot in (1, 3):
            if (ci, slot) not in inbound:
                assign((ci, slot), slot == 1)
    crossings = []
    for ci, q in enumerate(quads):
        over_in = 1 if inbound[(ci, 1)] else 3
        crossings.append(Crossing(q, over_in))
    return crossings


def serialize_pd(d: OrientedLinkDiagram) -> str:
    """Canonical serialization: lexicographically sorted quadruples."""
    parts = ["X({},{},{},{})".format(*c.quad) for c in d.crossings]
    body = " ".join(parts)
    suffix = []
    if d.free_loops:
        suffix.append(f"loops={d.free_loops}")
    rev = [str(i) for i, f in enumerate(d.component_orientations) if f]
    if rev:
        suffix.append("reversed=" + ",".join(rev))
    if suffix:
        body = (body + " | " if body else "| ") + " ".join(suffix)
    return body


# -- standard families ---------------------------------------------------------


def empty_link() -> OrientedLinkDiagram:
    return OrientedLinkDiagram([], 0)


def unknot() -> OrientedLinkDiagram:
    return OrientedLinkDiagram([], 1)


@dataclass(frozen=True)
class TorusLinkSpec:
    """T(n,n) torus link with the last ``q_reversed`` strands reversed."""

    n: int
    q_reversed: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("strand count must be >= 1")
        if not 0 <= 2 * self.q_reversed <= self.n:
            raise ValueError("need 0 <= q_reversed <= n/2")

    @property
    def p(self) -> int:
        return self.n - self.q_reversed


def braid_closure(n_strands: int, word: Iterable[int],
                  reversed_strands: Iterable[int] = ()) -> OrientedLinkDiagram:
    """Closure of a braid word (letters ±i for the i-th elementary braid).

    ``reversed_strands`` lists strand start-positions (1-based) whose closed-up
    components are reversed.  Positive letters give positive crossings when
    both strands are parallel.
    """
    word = list(word)
    if n_strands < 1:
        raise ValueError("need at least one strand")
    # arcs labeled as we go; seg[pos] = current arc label at each position
    seg = list(range(1, n_strands + 1))
    next_arc = n_strands + 1
    start = list(seg)
    quads: list[tuple[int, int, int, int]] = []
    for letter in word:
        i = abs(letter) - 1
        if not 0 <= i < n_strands - 1:
            raise ValueError(f"braid letter {letter} out of range")
        bl, br = seg[i], seg[i + 1]
        tl, tr = next_arc, next_arc + 1
        next_arc += 2
        if letter > 0:
            # under-strand travels from lower-left to upper-right
            quads.append((bl, tl, tr, br))
        else:
            quads.append((br, tr, tl, bl))
        seg[i], seg[i + 1] = tl, tr
    # closure: the top arc at each position wraps around to the bottom arc at
    # the same position
    ident = {seg[pos]: start[pos] for pos in range(n_strands)}
    relabeled = [tuple(ident.get(a, a) for a in q) for q in quads]
    # positions never touched by the word close up into free loops
    untouched = [pos for pos in range(n_strands) if seg[pos] == start[pos]]
    crossings = _derive_over_entries(relabeled)
    d = OrientedLinkDiagram(crossings, len(untouched))
    assert d.component_count == len(set(_closure_components(n_strands, word)))
    flags = [False] * d.component_count
    n_arc_comps = d.component_count - len(untouched)
    for pos in reversed_strands:
        if pos - 1 in untouched:
            flags[n_arc_comps + untouched.index(pos - 1)] = True
        else:
            flags[d.arc_component[start[pos - 1]]] = True
    return d.with_orientations(flags)


def _closure_components(n_strands: int, word: list[int]) -> list[int]:
    perm = list(range(n_strands))
    for letter in word:
        i = abs(letter) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen = [False] * n_strands
    comp = [0] * n_strands
    c = 0
    for s in range(n_strands):
        if seen[s]:
            continue
        t = s
        while not seen[t]:
            seen[t] = True
            comp[t] = c
            t = perm[t]
        c += 1
    return comp


def torus_link(spec: TorusLinkSpec) -> OrientedLinkDiagram:
    """T(n,n) as the closure of the full twist braid, last q strands reversed."""
    n = spec.n
    word = [i for _ in range(n) for i in range(1, n)]
    reversed_strands = range(n - spec.q_reversed + 1, n + 1)
    return braid_closure(n, word, reversed_strands)


def trefoil() -> OrientedLinkDiagram:
    """Right-handed (positive) trefoil."""
    return braid_closure(2, [1, 1, 1])


def hopf_link() -> OrientedLinkDiagram:
    """Positive Hopf link."""
    return torus_link(TorusLinkSpec(2, 0))


# -- oriented resolution and planar structure ---------------------------------


@dataclass
class OrientedResolution:
    """Circles of the orientation-respecting smoothing with nesting data."""

    circles: list[tuple[int, ...]]  # arcs on each circle (sorted); () = free loop
    nesting_depth: list[int]
    winding: list[int]  # 0/1 rotation sense relative to the chosen outer face
    crossing_to_circles: list[tuple[int, int]]

    @property
    def circle_count(self) -> int:
        return len(self.circles)

    def label_parity(self, i: int) -> int:
        return (self.nesting_depth[i] + self.winding[i]) % 2


def resolution_circles(d: OrientedLinkDiagram, vertex: Sequence[int]):
    """Circles of an arbitrary cube vertex.

    Returns (circles as sorted arc tuples incl. () per free loop,
    arc -> circle index, crossing -> (circle at lower pair, circle at upper pair)).
    """
    parent: dict[int, int] = {}
    for ci, c in enumerate(d.crossings):
        q = c.quad
        if vertex[ci] == 0:
            _union(parent, q[0], q[1])
            _union(parent, q[2], q[3])
        else:
            _union(parent, q[1], q[2])
            _union(parent, q[3], q[0])
    groups: dict[int, list[int]] = {}
    for a in d.arcs():
        groups.setdefault(_find(parent, a), []).append(a)
    circles = sorted([tuple(sorted(g)) for g in groups.values()])
    circles += [()] * d.free_loops
    arc_circle = {a: i for i, circ in enumerate(circles) for a in circ}
    cr_circ = []
    for ci, c in enumerate(d.crossings):
        q = c.quad
        if vertex[ci] == 0:
            cr_circ.append((arc_circle[q[0]], arc_circle[q[2]]))
        else:
            cr_circ.append((arc_circle[q[1]], arc_circle[q[3]]))
    return circles, arc_circle, cr_circ


def _universe_pieces(d: OrientedLinkDiagram) -> list[list[int]]:
    parent: dict[int, int] = {}
    for ci, c in enumerate(d.crossings):
        for a in c.quad:
            _union(parent, ("c", ci), ("a", a))
    pieces: dict = {}
    for ci in range(d.n_crossings):
        pieces.setdefault(_find(parent, ("c", ci)), []).append(ci)
    return sorted(pieces.values(), key=min)


def _universe_faces(d: OrientedLinkDiagram, piece: list[int]):
    """Face-trace the 4-valent projection restricted to one connected piece.

    Darts are (crossing, slot) pairs meaning "arrived at this slot"; the face
    to one fixed side is traced by rotating one slot and following that arc.
    Returns a list of faces, each a list of corners (crossing, k) where corner
    k sits between slots k and k+1.
    """
    occ: dict[int, list[tuple[int, int]]] = {}
    pset = set(piece)
    for ci in piece:
        for slot, a in enumerate(d.crossings[ci].quad):
            occ.setdefault(a, []).append((ci, slot))

    def other(ci: int, slot: int) -> tuple[int, int]:
        a = d.crossings[ci].quad[slot]
        for pos in occ[a]:
            if pos != (ci, slot):
                return pos
        raise PDError("arc occurrence lookup failed")

    darts = [(ci, s) for ci in piece for s in range(4)]
    unvisited = set(darts)
    faces = []
    while unvisited:
        start = min(unvisited)
        face = []
        cur = start
        while True:
            unvisited.discard(cur)
            ci, p = cur
            face.append((ci, p))
            s2 = (p + 1) % 4
            cur = other(ci, s2)
            if cur == start:
                break
        faces.append(face)
    if len(faces) != len(piece) + 2:
        raise NonPlanarError(
            f"face count {len(faces)} != {len(piece) + 2}: non-planar PD data")
    return faces


def oriented_resolution(d: OrientedLinkDiagram) -> OrientedResolution:
    if d.is_empty():
        raise PDError("empty diagram has no oriented resolution")
    vertex = d.oriented_vertex()
    circles, arc_circle, cr_circ = resolution_circles(d, vertex)
    depth = [0] * len(circles)
    winding = [0] * len(circles)

    # entry slots under the effective orientation, per crossing
    entries = [set(d.effective_entries(ci)) for ci in range(d.n_crossings)]

    for piece in _universe_pieces(d):
        faces = _universe_faces(d, piece)
        corner_face: dict[tuple[int, int], int] = {}
        for fi, face in enumerate(faces):
            for corner in face:
                corner_face[corner] = fi
        # merge faces through the smoothing channel at each crossing
        parent: dict[int, int] = {}
        for ci in piece:
            ch = 1 if vertex[ci] == 0 else 0
            _union(parent, corner_face[(ci, ch)], corner_face[(ci, (ch + 2) % 4)])
        # strand sides: pairing (i, i+1) has corner side (ci, i), channel (ci, i+1)
        circ_regions: dict[int, set[int]] = {}
        strand_info: dict[int, list[tuple[int, int, int]]] = {}
        for ci in piece:
            base = 0 if vertex[ci] == 0 else 1
            for i in (base, base + 2):
                i0, i1 = i % 4, (i + 1) % 4
                circ = arc_circle[d.crossings[ci].quad[i0]]
                corner_r = _find(parent, corner_face[(ci, i0)])
                channel_r = _find(parent, corner_face[(ci, i1)])
                circ_regions.setdefault(circ, set()).update((corner_r, channel_r))
                # traversal direction: slot with inbound arc is the entry
                ccw = i0 in entries[ci]  # entering at i0, exiting at i1
                strand_info.setdefault(circ, []).append(
                    (ci, channel_r if ccw else corner_r,      # left region
                     corner_r if ccw else channel_r))         # right region
        piece_circles = sorted(circ_regions)
        for circ in piece_circles:
            if len(circ_regions[circ]) != 2:
                raise NonPlanarError("circle does not bound two regions")
        # region adjacency graph must be a tree on the sphere
        regions = sorted({r for rs in circ_regions.values() for r in rs})
        if len(regions) != len(piece_circles) + 1:
            raise NonPlanarError("smoothed diagram regions do not form a tree")
        outer = _find(parent, corner_face[(min(piece), 0)])
        dist = {outer: 0}
        frontier = [outer]
        while frontier:
            nxt = []
            for r in frontier:
                for circ in piece_circles:
                    if r in circ_regions[circ]:
                        for r2 in circ_regions[circ]:
                            if r2 not in dist:
                                dist[r2] = dist[r] + 1
                                nxt.append(r2)
            frontier = nxt
        for circ in piece_circles:
            r1, r2 = sorted(circ_regions[circ], key=lambda r: dist[r])
            if dist[r2] != dist[r1] + 1:
                raise NonPlanarError("inconsistent nesting structure")
            depth[circ] = dist[r1]
            ci, left, right = sorted(strand_info[circ])[0]
            winding[circ] = 0 if _find(parent, left) == r2 else 1
    return OrientedResolution(list(circles), depth, winding, cr_circ)
