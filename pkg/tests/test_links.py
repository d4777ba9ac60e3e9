"""Diagram layer: PD parsing, orientations, constructions.

Tag key used across the test suite:
  [DERIVED] -- expected value recomputed here by an independent method.
  [PAPER]   -- value taken from the published literature on these invariants.
  [TRIVIAL] -- structural/bookkeeping fact asserted directly.
"""

import pytest

from khs.links import (
    NonPlanarError,
    OrientedLinkDiagram,
    PDError,
    TorusLinkSpec,
    braid_closure,
    disjoint_union,
    empty_link,
    hopf_link,
    oriented_resolution,
    parse_pd,
    resolution_circles,
    serialize_pd,
    torus_link,
    trefoil,
    unknot,
)


def test_parse_roundtrip():
    # [TRIVIAL] serialize . parse is the identity on normalized PD text.
    txt = serialize_pd(trefoil())
    assert serialize_pd(parse_pd(txt)) == txt


def test_parse_rejects_garbage():
    # [TRIVIAL]
    with pytest.raises(PDError):
        parse_pd("X(1,2,3)")
    with pytest.raises(PDError):
        parse_pd("X(nope")
    with pytest.raises(PDError):
        # arc 1 used three times
        parse_pd("X(1,1,1,2) X(2,3,3,4)")


def test_empty_and_unknot():
    # [TRIVIAL]
    assert empty_link().is_empty
    assert empty_link().component_count == 0
    assert unknot().component_count == 1
    assert unknot().n_crossings == 0  # crossingless free loop
    assert unknot().writhe() == 0


def test_trefoil_is_right_handed():
    # [DERIVED] all three crossings positive => writhe 3, n+ = 3.
    d = trefoil()
    assert d.n_crossings == 3
    assert (d.n_plus, d.n_minus) == (3, 0)
    assert d.writhe() == 3
    assert d.component_count == 1


def test_mirror_swaps_signs():
    # [TRIVIAL]
    d = trefoil().mirror()
    assert (d.n_plus, d.n_minus) == (0, 3)
    assert d.writhe() == -3


def test_reverse_all_preserves_signs():
    # [DERIVED] reversing every component preserves each crossing sign.
    d = torus_link(TorusLinkSpec(2, 1))
    r = d.reverse_all()
    assert (r.n_plus, r.n_minus) == (d.n_plus, d.n_minus)


def test_hopf_link():
    # [DERIVED] positive Hopf link: 2 crossings, both positive, 2 components.
    d = hopf_link()
    assert d.component_count == 2
    assert (d.n_plus, d.n_minus) == (2, 0)


def test_torus_link_spec_validation():
    # [TRIVIAL]
    with pytest.raises(ValueError):
        TorusLinkSpec(2, 2)  # needs 0 <= 2q <= n
    with pytest.raises(ValueError):
        TorusLinkSpec(0, 0)


def test_torus_link_basic_invariants():
    # [DERIVED] T(n,n) closes an ((sigma_1 ... sigma_{n-1})^n) braid:
    # n components, n(n-1) crossings.
    for n in (2, 3, 4):
        d = torus_link(TorusLinkSpec(n, 0))
        assert d.component_count == n
        assert d.n_crossings == n * (n - 1)
        assert d.n_minus == 0  # no strands reversed => all positive
    # reversing q strands flips signs of crossings between the two groups
    d = torus_link(TorusLinkSpec(3, 1))
    assert d.component_count == 3
    assert d.n_plus + d.n_minus == 6
    assert d.n_minus > 0


def test_disjoint_union_counts():
    # [TRIVIAL]
    d = disjoint_union(trefoil(), hopf_link())
    assert d.component_count == 3
    assert d.n_crossings == 5
    e = disjoint_union(empty_link(), trefoil())
    assert (e.component_count, e.n_crossings, e.writhe()) == (1, 3, 3)


def test_braid_closure_components():
    # [DERIVED] closure components = cycles of the underlying permutation.
    assert braid_closure(2, []).component_count == 2
    assert braid_closure(2, [1]).component_count == 1
    assert braid_closure(3, [1, 2, 1, 2, 1, 2]).component_count == 3


def test_resolution_circle_counts():
    # [DERIVED] all-0 resolution of the closed (sigma_1)^2 braid (Hopf):
    # Seifert-style smoothing gives 2 circles; all-1 gives 2.
    d = hopf_link()
    assert len(resolution_circles(d, (0, 0))[0]) == 2
    assert len(resolution_circles(d, (1, 1))[0]) == 2
    assert len(resolution_circles(d, (1, 0))[0]) == 1


def test_oriented_resolution_parities():
    # [DERIVED] the oriented resolution of the positive Hopf link is two
    # nested circles, which differ in parity (one even, one odd).
    res = oriented_resolution(hopf_link())
    assert res.circle_count == 2
    assert sorted(res.label_parity(i) for i in range(2)) == [0, 1]


def test_oriented_vertex_matches_signs():
    # [TRIVIAL] positive crossings resolve to 0 in the oriented resolution.
    d = torus_link(TorusLinkSpec(2, 1))
    v = d.oriented_vertex()
    for ci in range(d.n_crossings):
        assert v[ci] == (0 if d.sign(ci) > 0 else 1)


def test_nonplanar_rejected():
    # [TRIVIAL] PD code of a virtual-style gadget with no planar embedding.
    bad = "X(1,2,3,4) X(3,4,1,2)"
    with pytest.raises(NonPlanarError):
        oriented_resolution(parse_pd(bad))
