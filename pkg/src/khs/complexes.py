"""Filtered cochain complexes and their homological invariants.

A :class:`FilteredComplex` stores, per cohomological degree h, an ordered
list of generators with integer filtration levels q, and the differential
as a sparse column map (generator index -> {target index: coefficient}).
Coefficients live in GF(2), the rationals, or the integers depending on
``ring`` ("gf2", "Q", "Z"); the chain-level data is always stored as ints
or Fractions and interpreted through that ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg

Coeff = int | Fraction
Column = dict[int, Coeff]


@dataclass
class FilteredComplex:
    ring: str  # "gf2", "Q", or "Z"
    # per degree h: filtration level of each generator
    levels: dict[int, list[int]]
    # differential out of degree h: one sparse column per generator of C^h,
    # entries indexed by generators of C^{h+1}
    diff: dict[int, list[Column]]

    def __post_init__(self) -> None:
        if self.ring not in ("gf2", "Q", "Z"):
            raise ValueError(f"unknown ring {self.ring!r}")

    def dim(self, h: int) -> int:
        return len(self.levels.get(h, []))

    def degrees(self) -> list[int]:
        return sorted(self.levels)

    def columns(self, h: int) -> list[Column]:
        return self.diff.get(h, [{} for _ in range(self.dim(h))])

    # -- ring-specific matrix views -------------------------------------------

    def _gf2_rows(self, h: int) -> list[int]:
        """Rows (over C^{h+1} entries as bit positions? no: rows of the matrix
        d_h with one row per target generator) of d_h over GF(2)."""
        cols = self.columns(h)
        masks = []
        for col in cols:
            m = 0
            for i, v in col.items():
                if int(v) % 2:
                    m |= 1 << i
            masks.append(m)
        return linalg.gf2_from_columns(masks, self.dim(h + 1))

    def _gf2_cols(self, h: int) -> list[int]:
        cols = self.columns(h)
        return [sum((1 << i) for i, v in col.items() if int(v) % 2)
                for col in cols]

    def _q_rows(self, h: int) -> list[linalg.QRow]:
        cols = self.columns(h)
        rows: dict[int, linalg.QRow] = {}
        for j, col in enumerate(cols):
            for i, v in col.items():
                if v:
                    rows.setdefault(i, {})[j] = Fraction(v)
        return [rows.get(i, {}) for i in range(self.dim(h + 1))]

    def _int_matrix(self, h: int) -> list[list[int]]:
        """Dense matrix of d_h: rows indexed by C^{h+1}, columns by C^h."""
        cols = self.columns(h)
        mat = [[0] * self.dim(h) for _ in range(self.dim(h + 1))]
        for j, col in enumerate(cols):
            for i, v in col.items():
                mat[i][j] = int(v)
        return mat

    def rank_d(self, h: int) -> int:
        if self.dim(h) == 0 or self.dim(h + 1) == 0:
            return 0
        if self.ring == "gf2":
            return linalg.gf2_rank(self._gf2_cols(h))
        rows = self._q_rows(h)
        return linalg.q_rank(rows)

    # -- homology -------------------------------------------------------------

    def betti(self, h: int) -> int:
        """dim ker(d_h) − rank(d_{h−1}) over the coefficient field."""
        if self.ring == "Z":
            raise ValueError("betti is for field coefficients")
        return self.dim(h) - self.rank_d(h) - self.rank_d(h - 1)

    def homology_field(self) -> dict[int, int]:
        return {h: b for h in self.degrees() if (b := self.betti(h))}

    def homology_integral(self) -> dict[int, tuple[int, list[int]]]:
        """Per degree: (free rank, prime-power torsion orders)."""
        if self.ring != "Z":
            raise ValueError("integral homology needs ring='Z'")
        out = {}
        for h in self.degrees():
            d_in = self._int_matrix(h - 1)
            rank_out = linalg.int_rank(self._int_matrix(h)) if self.dim(h + 1) else 0
            free, tors = linalg.integer_homology_summands(d_in, rank_out, self.dim(h))
            if free or tors:
                out[h] = (free, tors)
        return out

    # -- filtration-aware structure -------------------------------------------

    def check_differential(self) -> None:
        """d² = 0 and d does not decrease filtration."""
        for h in self.degrees():
            cols = self.columns(h)
            lv = self.levels.get(h, [])
            lv1 = self.levels.get(h + 1, [])
            cols1 = self.columns(h + 1)
            for j, col in enumerate(cols):
                for i, v in col.items():
                    if not v:
                        raise ValueError("explicit zero entry in differential")
                    if lv1[i] < lv[j]:
                        raise ValueError(
                            f"filtration decreases along d at h={h}")
                # d(d(x)) = 0
                acc: Column = {}
                for i, v in col.items():
                    for k, w in cols1[i].items():
                        acc[k] = acc.get(k, 0) + v * w
                if self.ring == "gf2":
                    bad = any(int(v) % 2 for v in acc.values())
                else:
                    bad = any(acc.values())
                if bad:
                    raise ValueError(f"d∘d ≠ 0 out of degree h={h}")


# ---------------------------------------------------------------------------
# Subcomplexes, slices, homology representatives
# ---------------------------------------------------------------------------


def restrict(cx: FilteredComplex, keep: dict[int, list[int]],
             entry_filter=None) -> FilteredComplex:
    """Subquotient spanned by ``keep`` indices per degree.

    Keeps only differential entries between kept generators (and passing
    ``entry_filter(level_src, level_tgt)`` when given).  Legitimate for
    subcomplexes and associated-graded slices.
    """
    levels = {}
    diff = {}
    pos = {h: {i: k for k, i in enumerate(keep[h])} for h in keep}
    for h in sorted(keep):
        sel = keep[h]
        if not sel:
            continue
        levels[h] = [cx.levels[h][i] for i in sel]
        cols = []
        allcols = cx.columns(h)
        tgt = pos.get(h + 1, {})
        for j in sel:
            col = {}
            for i, v in allcols[j].items():
                if i in tgt and (entry_filter is None or entry_filter(
                        cx.levels[h][j], cx.levels[h + 1][i])):
                    col[tgt[i]] = v
            cols.append(col)
        diff[h] = cols
    return FilteredComplex(cx.ring, levels, diff)


def level_indices(cx: FilteredComplex, pred) -> dict[int, list[int]]:
    return {h: [i for i, l in enumerate(cx.levels[h]) if pred(l)]
            for h in cx.degrees()}


def q_slice(cx: FilteredComplex, q: int) -> tuple[FilteredComplex, dict]:
    """Level-q homogeneous subcomplex (valid when d preserves levels)."""
    keep = level_indices(cx, lambda l: l == q)
    return restrict(cx, keep), keep


def gr_slice(cx: FilteredComplex, q: int) -> tuple[FilteredComplex, dict]:
    """Associated-graded complex at level q: level-q generators with the
    level-preserving part of the differential."""
    keep = level_indices(cx, lambda l: l == q)
    return restrict(cx, keep, lambda ls, lt: ls == lt), keep


def sublevel(cx: FilteredComplex, q: int) -> tuple[FilteredComplex, dict]:
    """Subcomplex of generators with level >= q."""
    keep = level_indices(cx, lambda l: l >= q)
    return restrict(cx, keep), keep


def _col_to_mask(col: Column) -> int:
    m = 0
    for i, v in col.items():
        if int(v) % 2:
            m |= 1 << i
    return m


def _mask_to_col(mask: int) -> Column:
    col = {}
    while mask:
        low = mask & -mask
        col[low.bit_length() - 1] = 1
        mask ^= low
    return col


def homology_reps(cx: FilteredComplex, h: int) -> list[Column]:
    """Deterministic basis of cycle representatives for H^h."""
    dim = cx.dim(h)
    if dim == 0:
        return []
    if cx.ring == "gf2":
        kernel = linalg.gf2_nullspace(cx._gf2_rows(h), dim) \
            if cx.dim(h + 1) else [1 << i for i in range(dim)]
        solver = linalg.GF2Solver()
        for b in cx._gf2_cols(h - 1):
            solver.add(b)
        return [_mask_to_col(k) for k in kernel if solver.add(k)]
    if cx.ring == "Q":
        if cx.dim(h + 1):
            kernel = linalg.q_nullspace(cx._q_rows(h), dim)
        else:
            kernel = [{i: Fraction(1)} for i in range(dim)]
        solver = linalg.QSolver()
        for col in cx.columns(h - 1):
            solver.add({i: Fraction(v) for i, v in col.items() if v})
        return [k for k in kernel if solver.add(dict(k))]
    raise ValueError("homology representatives need field coefficients")


def class_coords(cx: FilteredComplex, h: int, reps: list[Column],
                 cycle: Column) -> list | None:
    """Coordinates of the class of ``cycle`` in the basis ``reps``.

    Returns None if ``cycle`` is not in the span of reps + boundaries
    (which signals a non-cycle or a wrong basis).
    """
    boundaries = cx.columns(h - 1) if cx.dim(h - 1) else []
    if cx.ring == "gf2":
        cols = [_col_to_mask(r) for r in reps] + \
               [_col_to_mask(c) for c in boundaries]
        rows = linalg.gf2_from_columns(cols, cx.dim(h))
        sol = linalg.gf2_solve(rows, len(cols), _col_to_mask(cycle))
        if sol is None:
            return None
        return [(sol >> k) & 1 for k in range(len(reps))]
    cols = [{i: Fraction(v) for i, v in r.items()} for r in reps] + \
           [{i: Fraction(v) for i, v in c.items() if v} for c in boundaries]
    sol = linalg.q_solve(cols, {i: Fraction(v) for i, v in cycle.items()})
    if sol is None:
        return None
    return [sol.get(k, Fraction(0)) for k in range(len(reps))]


@dataclass
class SublevelHomology:
    """H^h(C^{≥q}) with the maps j (to H^h(C)) and p (to H^h(gr_q C)).

    ``reps`` are cycle representatives in original-complex coordinates;
    ``j_mat``/``p_mat`` hold one coordinate vector per representative in
    the ``full_reps`` / ``gr_reps`` bases.
    """

    h: int
    q: int
    reps: list[Column]
    full_reps: list[Column]
    gr_reps: list[Column]
    j_mat: list[list]
    p_mat: list[list]


def sublevel_homology(cx: FilteredComplex, q: int, h: int,
                      full_reps: list[Column] | None = None,
                      gr_reps: list[Column] | None = None) -> SublevelHomology:
    sub, keep = sublevel(cx, q)
    sub_reps_local = homology_reps(sub, h)
    back = keep.get(h, [])
    reps = [{back[i]: v for i, v in r.items()} for r in sub_reps_local]
    if full_reps is None:
        full_reps = homology_reps(cx, h)
    gr, gkeep = gr_slice(cx, q)
    if gr_reps is None:
        gr_reps = homology_reps(gr, h)
    gpos = {i: k for k, i in enumerate(gkeep.get(h, []))}
    j_mat = []
    p_mat = []
    for r in reps:
        jc = class_coords(cx, h, full_reps, r)
        if jc is None:
            raise AssertionError("sublevel cycle is not a cycle of C")
        j_mat.append(jc)
        part = {gpos[i]: v for i, v in r.items() if i in gpos}
        pc = class_coords(gr, h, gr_reps, part)
        if pc is None:
            raise AssertionError("level-q part is not a gr-cycle")
        p_mat.append(pc)
    return SublevelHomology(h, q, reps, full_reps, gr_reps, j_mat, p_mat)


# ---------------------------------------------------------------------------
# Filtered reduction (Gaussian cancellation of differential entries)
# ---------------------------------------------------------------------------


@dataclass
class DecomposedComplex:
    """Result of cancelling differential pairs in a filtered complex.

    ``reduced`` is homotopy equivalent to the original complex; the original
    splits as reduced ⊕ (acyclic two-step pieces).  ``pairs`` records each
    cancelled pair as (h, level_of_source, level_of_target): the source sits
    in degree h, the target in degree h+1.  Pairs with equal levels are
    filtration-preserving ("A" pairs); pairs with a positive level jump carry
    spectral-sequence differentials ("E" pairs).

    ``push`` maps a chain of the original complex (per-degree sparse vectors
    over the original bases) to its image in the reduced basis, and ``lift``
    maps a reduced chain back to a representative in the original basis.
    Both are chain maps inverse to each other up to homotopy.
    """

    reduced: FilteredComplex
    pairs: list[tuple[int, int, int]]
    # surviving original generator indices per degree, in reduced order
    survivors: dict[int, list[int]]
    _steps: list[tuple] = field(default_factory=list, repr=False)
    _orig: FilteredComplex | None = field(default=None, repr=False)

    def a_pairs(self) -> list[tuple[int, int, int]]:
        return [p for p in self.pairs if p[1] == p[2]]

    def e_pairs(self) -> list[tuple[int, int, int]]:
        return [p for p in self.pairs if p[1] != p[2]]


def filtered_reduce(cx: FilteredComplex,
                    max_jump: int | None = None) -> DecomposedComplex:
    """Cancel invertible differential entries, smallest filtration jump first.

    Ties are broken by (source index, target index) so the output is
    deterministic.  If ``max_jump`` is given, only pairs whose filtration
    jump is <= max_jump are cancelled (jump 0 pairs preserve the filtered
    chain homotopy type on the nose).
    """
    ring = cx.ring
    levels = {h: list(v) for h, v in cx.levels.items()}
    # mutable sparse structure: out_[h][j] = {i: coeff}, in_[h+1][i] = {j: coeff}
    out_: dict[int, dict[int, Column]] = {}
    in_: dict[int, dict[int, Column]] = {}
    alive: dict[int, list[bool]] = {h: [True] * cx.dim(h) for h in cx.degrees()}
    for h in cx.degrees():
        out_.setdefault(h, {})
        in_.setdefault(h, {})
        for j, col in enumerate(cx.columns(h)):
            col = {i: v for i, v in col.items() if _nonzero(ring, v)}
            if col:
                out_[h][j] = dict(col)
                for i, v in col.items():
                    in_.setdefault(h + 1, {}).setdefault(i, {})[j] = v

    def unit(v: Coeff) -> bool:
        if ring == "gf2":
            return int(v) % 2 == 1
        if ring == "Q":
            return bool(v)
        return v in (1, -1)

    pairs: list[tuple[int, int, int]] = []
    steps: list[tuple] = []

    def jump_of(h: int, j: int, i: int) -> int:
        return levels[h + 1][i] - levels[h][j]

    while True:
        # global rescan for the minimal jump among cancellable entries
        level = None
        for h in out_:
            for j, col in out_[h].items():
                if not alive[h][j]:
                    continue
                for i, v in col.items():
                    if alive[h + 1][i] and unit(v):
                        jp = jump_of(h, j, i)
                        if level is None or jp < level:
                            level = jp
        if level is None or (max_jump is not None and level > max_jump):
            break
        # drain all entries at this jump level; cancellations only create
        # entries with jump >= level, so the minimum cannot drop below it
        queue = sorted((h, j, i)
                       for h in out_ for j, col in out_[h].items()
                       for i in col if jump_of(h, j, i) == level)
        qi = 0
        while qi < len(queue):
            h, j0, i0 = queue[qi]
            qi += 1
            if not (alive[h][j0] and alive[h + 1][i0]):
                continue
            v = out_.get(h, {}).get(j0, {}).get(i0)
            if v is None or not unit(v) or jump_of(h, j0, i0) != level:
                continue
            changed = _cancel(ring, out_, in_, alive, levels, h, j0, i0, steps)
            pairs.append((h, levels[h][j0], levels[h + 1][i0]))
            for (j, i) in changed:
                if (alive[h][j] and alive[h + 1][i]
                        and i in out_.get(h, {}).get(j, {})
                        and jump_of(h, j, i) == level):
                    queue.append((h, j, i))
    survivors = {h: [j for j, a in enumerate(alive[h]) if a]
                 for h in alive}
    new_levels = {h: [levels[h][j] for j in survivors[h]]
                  for h in survivors if survivors[h]}
    index_of = {h: {j: k for k, j in enumerate(survivors[h])} for h in survivors}
    new_diff: dict[int, list[Column]] = {}
    for h in sorted(new_levels):
        cols = []
        for j in survivors[h]:
            col = out_.get(h, {}).get(j, {})
            cols.append({index_of[h + 1][i]: v for i, v in col.items()})
        new_diff[h] = cols
    reduced = FilteredComplex(ring, new_levels, new_diff)
    return DecomposedComplex(reduced, pairs, survivors, steps, cx)


def _nonzero(ring: str, v: Coeff) -> bool:
    return int(v) % 2 != 0 if ring == "gf2" else bool(v)


def _cancel(ring, out_, in_, alive, levels, h, j0, i0,
            steps) -> list[tuple[int, int]]:
    """Gaussian cancellation of the entry d[i0, j0] out of degree h.

    Returns the degree-h entries (j, i) whose value changed.
    """
    pivot = out_[h][j0][i0]
    if ring == "gf2":
        inv = 1
    elif ring == "Q":
        inv = Fraction(1) / Fraction(pivot)
    else:
        inv = pivot  # ±1
    # other sources mapping to i0, other targets of j0
    col_j0 = {i: v for i, v in out_[h][j0].items() if i != i0}
    row_i0 = {j: v for j, v in in_[h + 1][i0].items() if j != j0}
    steps.append((h, j0, i0, pivot, dict(col_j0), dict(row_i0)))
    # update: for every other source j with entry a at i0, subtract a / pivot
    # times column j0 from column j
    changed = []
    for j, a in row_i0.items():
        coef = _mul(ring, a, inv)
        for i, b in col_j0.items():
            cur = out_[h].get(j, {}).get(i, 0)
            nv = _sub(ring, cur, _mul(ring, coef, b))
            _set_entry(ring, out_, in_, h, j, i, nv)
            changed.append((j, i))
    # remove the pair
    for i in list(out_[h].get(j0, {})):
        _set_entry(ring, out_, in_, h, j0, i, 0)
    for j in list(in_[h + 1].get(i0, {})):
        _set_entry(ring, out_, in_, h, j, i0, 0)
    for i in list(out_.get(h + 1, {}).get(i0, {})):
        _set_entry(ring, out_, in_, h + 1, i0, i, 0)
    for j in list(in_.get(h, {}).get(j0, {})):
        _set_entry(ring, out_, in_, h - 1, j, j0, 0)
    alive[h][j0] = False
    alive[h + 1][i0] = False
    return changed


def _mul(ring, a, b):
    return (int(a) * int(b)) % 2 if ring == "gf2" else a * b


def _sub(ring, a, b):
    return (int(a) - int(b)) % 2 if ring == "gf2" else a - b


def _set_entry(ring, out_, in_, h, j, i, v) -> None:
    if _nonzero(ring, v):
        out_.setdefault(h, {}).setdefault(j, {})[i] = v
        in_.setdefault(h + 1, {}).setdefault(i, {})[j] = v
    else:
        if i in out_.get(h, {}).get(j, {}):
            del out_[h][j][i]
            if not out_[h][j]:
                del out_[h][j]
        if j in in_.get(h + 1, {}).get(i, {}):
            del in_[h + 1][i][j]
            if not in_[h + 1][i]:
                del in_[h + 1][i]


def push_chain(dec: DecomposedComplex, h: int, vec: Column) -> Column:
    """Image of an original-basis chain in the reduced basis.

    Cancelling the pair (j0 -> i0, pivot p) in degrees (sh, sh+1) changes
    bases to ẽ_j = e_j − (a_j/p)·e_{j0} in degree sh (a_j = row of i0) and
    splits off f = d(e_{j0}) in degree sh+1.  The projection drops the j0
    coordinate in degree sh, and in degree sh+1 sends y to y − (y_{i0}/p)·
    d(e_{j0}) restricted away from i0.  Replaying all steps in order yields
    the projection onto the fully reduced complex.
    """
    ring = dec._orig.ring
    vec = {i: v for i, v in vec.items() if _nonzero(ring, v)}
    for (sh, j0, i0, pivot, col_j0, row_i0) in dec._steps:
        if sh + 1 == h and i0 in vec:
            inv = 1 if ring == "gf2" else (
                Fraction(1) / pivot if ring == "Q" else pivot)
            coef = _mul(ring, vec[i0], inv)
            del vec[i0]
            for i, b in col_j0.items():
                nv = _sub(ring, vec.get(i, 0), _mul(ring, coef, b))
                if _nonzero(ring, nv):
                    vec[i] = nv
                else:
                    vec.pop(i, None)
        elif sh == h:
            vec.pop(j0, None)
    index_of = {j: k for k, j in enumerate(dec.survivors.get(h, []))}
    return {index_of[j]: v for j, v in vec.items()}


def lift_chain(dec: DecomposedComplex, h: int, vec: Column) -> Column:
    """Representative in the original basis of a reduced-basis chain.

    The inclusion is the identity on degree sh+1 coordinates and sends
    e'_j to ẽ_j = e_j − (a_j/p)·e_{j0} in degree sh, so replaying the
    steps in reverse only ever (re)computes cancelled source coordinates.
    """
    ring = dec._orig.ring
    surv = dec.survivors.get(h, [])
    out = {surv[k]: v for k, v in vec.items() if _nonzero(ring, v)}
    for (sh, j0, i0, pivot, col_j0, row_i0) in reversed(dec._steps):
        if sh != h:
            continue
        inv = 1 if ring == "gf2" else (
            Fraction(1) / pivot if ring == "Q" else pivot)
        acc = 0
        for j, a in row_i0.items():
            if j in out:
                acc = _sub(ring, acc, _mul(ring, _mul(ring, out[j], a), inv))
        if _nonzero(ring, acc):
            out[j0] = acc
    return out

