"""Sq¹ on mod-2 Khovanov homology as the integral Bockstein.

Computed by the lift–divide method: a mod-2 cycle is lifted to an integral
chain with 0/1 coefficients in the *same* generator basis (the cube
ordering is the interface contract with :mod:`khs.cube`), its integral
boundary is asserted to be exactly divisible by 2, and the class of the
halved boundary mod 2 is the Bockstein image.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .complexes import Column, FilteredComplex, class_coords, homology_reps, q_slice
from .cube import CubeComplex, build_complex, with_ring
from .links import OrientedLinkDiagram


def bockstein_chain(cx_z: FilteredComplex, h: int, cycle: Column) -> Column:
    """Bockstein of a mod-2 cycle at degree h, as a mod-2 chain at h+1.

    ``cycle`` must have 0/1 coefficients (its own integral lift).  Raises
    if the lifted boundary is not exactly divisible by 2.
    """
    if cx_z.ring != "Z":
        raise ValueError("needs an integral complex")
    cols = cx_z.columns(h)
    acc: Column = {}
    for j, v in cycle.items():
        if int(v) % 2 == 0:
            continue
        for i, w in cols[j].items():
            acc[i] = acc.get(i, 0) + w
    out: Column = {}
    for i, v in acc.items():
        if v % 2:
            raise AssertionError(
                "Bockstein lift-divide failed: boundary not divisible by 2 "
                "(generator basis mismatch)")
        if (v // 2) % 2:
            out[i] = 1
    return out


def sq1_chain(cube_z: CubeComplex, h: int, cycle: Column) -> Column:
    """Bockstein on the integral Khovanov cube (see :func:`bockstein_chain`)."""
    return bockstein_chain(cube_z.complex, h, cycle)


@dataclass
class BocksteinMap:
    """Sq¹: Kh^{i−1,q}(𝔽₂) → Kh^{i,q}(𝔽₂) in chosen homology bases."""

    i: int
    q: int
    source_reps: list[Column]  # cycle representatives, q-slice local coords
    target_reps: list[Column]
    matrix: list[list[int]]    # one target-coordinate vector per source basis
    slice_keep: dict           # q-slice index lists into the full cube

    @property
    def rank(self) -> int:
        return linalg.gf2_rank(
            [sum(b << k for k, b in enumerate(row)) for row in self.matrix])

    def image_coords(self) -> list[list[int]]:
        """Deterministic basis of im(Sq¹) in target-rep coordinates."""
        solver = linalg.GF2Solver()
        basis = []
        for row in self.matrix:
            mask = sum(b << k for k, b in enumerate(row))
            if solver.add(mask):
                basis.append(row)
        return basis


def sq1(cube_z: CubeComplex, i: int, q: int,
        target_reps: list[Column] | None = None) -> BocksteinMap:
    """The Bockstein map into bidegree (i, q)."""
    f2 = with_ring(cube_z, "gf2").complex
    sl, keep = q_slice(f2, q)
    src = homology_reps(sl, i - 1)
    if target_reps is None:
        target_reps = homology_reps(sl, i)
    back_src = keep.get(i - 1, [])
    pos_tgt = {g: k for k, g in enumerate(keep.get(i, []))}
    matrix = []
    for r in src:
        lifted = {back_src[j]: 1 for j in r}
        image = sq1_chain(cube_z, i - 1, lifted)
        local = {pos_tgt[g]: 1 for g in image}
        coords = class_coords(sl, i, target_reps, local)
        if coords is None:
            raise AssertionError("Sq¹ output is not a cycle in its slice")
        matrix.append(coords)
    return BocksteinMap(i, q, src, target_reps, matrix, keep)


def sq1_image(cube_z: CubeComplex, i: int, q: int,
              target_reps: list[Column] | None = None) -> list[list[int]]:
    """Basis of im(Sq¹) ⊆ Kh^{i,q}(𝔽₂) in target-rep coordinates."""
    return sq1(cube_z, i, q, target_reps).image_coords()


def sq1_table(d: OrientedLinkDiagram) -> dict[tuple[int, int], int]:
    """Rank of Sq¹ into every bidegree (i, q) where it can be nonzero."""
    cube_z = build_complex(d, "khovanov", "Z")
    out = {}
    for h in cube_z.complex.degrees():
        qs = sorted(set(cube_z.complex.levels[h]))
        for q in qs:
            r = sq1(cube_z, h + 1, q).rank
            if r:
                out[(h + 1, q)] = r
    return out
