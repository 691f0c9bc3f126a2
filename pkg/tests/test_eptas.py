"""Separator-based scheme for planar-declared instances."""

import pytest

from trackpaths.eptas import eps_to_r, eptas_solve, region_opt
from trackpaths.exact import exact_tracking_set
from trackpaths.generators import grid, theta
from trackpaths.graph import CapExceededError, Graph, Instance
from trackpaths.rdivision import Region
from trackpaths.reduction import reduce_all
from trackpaths.verify import verify_by_paths


def _whole_graph_region(g: Graph) -> Region:
    return Region(frozenset(range(g.n)), frozenset(g.edges))


def test_region_opt_on_four_cycle():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    inst = Instance(g, 0, 2, declared_class="planar")
    assert region_opt(inst, _whole_graph_region(g)) == {1}


def test_region_opt_matches_exact_on_reduced_anchors():
    for base in (grid(3, 3), theta(3)):
        reduced, _ = reduce_all(base)
        opt = exact_tracking_set(reduced)
        got = region_opt(reduced, _whole_graph_region(reduced.graph))
        assert len(got) == len(opt.trackers)
        assert verify_by_paths(reduced, got).valid


def test_region_opt_cap():
    g = grid(5, 5).graph
    inst = Instance(g, 0, 24, declared_class="planar")
    with pytest.raises(CapExceededError):
        region_opt(inst, _whole_graph_region(g), cap=10)


def test_eptas_grids_valid():
    for w, h, r in [(4, 4, 9), (5, 4, 9), (5, 5, 16), (6, 6, 16)]:
        inst = grid(w, h)
        res = eptas_solve(inst, r=r)
        assert res.valid
        if inst.graph.n <= 20:  # path enumeration explodes on larger grids
            assert verify_by_paths(inst, set(res.trackers)).valid
        assert res.method == "eptas"
        assert res.lower_bound <= len(res.trackers)


def test_eptas_perturbed_grid():
    inst = grid(5, 5, perturb=3, seed=5)
    res = eptas_solve(inst, r=9)
    assert res.valid and verify_by_paths(inst, set(res.trackers)).valid


def test_eps_to_r_is_astronomical_and_capped():
    assert eps_to_r(1) > 10**9
    with pytest.raises(CapExceededError):
        eptas_solve(grid(4, 4), eps=1)


def test_eptas_argument_validation():
    with pytest.raises(ValueError):
        eptas_solve(grid(4, 4))
    with pytest.raises(ValueError):
        eptas_solve(grid(4, 4), r=9, eps=1)
    nonplanar = Instance(grid(4, 4).graph, 0, 15, declared_class="general")
    with pytest.raises(ValueError):
        eptas_solve(nonplanar, r=9)
