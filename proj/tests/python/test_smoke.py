import pytest

import mixedmoore as mm


def test_bounds():
    assert [mm.moore_bound(k) for k in range(2, 6)] == [6, 11, 19, 32]
    assert mm.upper_bound(6) == 48
    assert mm.moore_bound(2, r=3, z=1) == 18


def test_graph_roundtrip():
    g = mm.MixedGraph(3, edges=[(0, 1)], arcs=[(1, 2), (2, 0)])
    assert g.order == 3
    assert g.diameter() == 2
    assert mm.decode_digraph6(g.digraph6()) == g
    assert mm.parse_text(g.to_text()) == g


def test_families():
    f, labels = mm.build_F(3)
    assert f.order == 24 and len(labels) == 24
    assert f.diameter() == 6
    fs, _ = mm.build_Fstar(3)
    assert fs.is_totally_regular()
    assert mm.automorphism_count(fs) == 6


def test_errors_carry_kind():
    with pytest.raises(mm.MixedMooreError) as info:
        mm.MixedGraph(2, edges=[(0, 0)])
    assert info.value.kind == "InvalidArgument"
    with pytest.raises(ValueError):
        mm.group_order("cyclic")


def test_order14_graphs():
    graphs = mm.order14_diameter4()
    assert len(graphs) == 27
    sizes = [0] * 6
    for g in graphs:
        sizes[mm.spectrum_class(g) - 1] += 1
    assert sizes == [9, 6, 5, 4, 2, 1]
    cay = mm.cayley("dihedral:14", ["Ref(0)"], ["Rot(1)"])
    assert mm.are_isomorphic(cay, graphs[0])


def test_lift_and_search():
    lift = mm.lift("dihedral:18", mm.FIG7_BASE)
    assert lift.order == 72 and lift.diameter() == 8
    res = mm.search_almost_moore(3)
    assert len(res["survivors"]) == 3
    assert not res["budget_exhausted"]


def test_suite():
    ok, checks = mm.run_suite("table1")
    assert ok and all(c[3] for c in checks)
    assert "table4" in mm.suite_names()
