"""Decorated-graph canonical forms and the orbit-count dimension."""

import random

import pytest

from catalogs import ROUTE_120
from thetadim.burnside import burnside_dims
from thetadim.diagrams import DEFAULT_DIAGRAM_MAX_ORDER, ResourceLimitError, dim_A2, normalize
from thetadim.group_core import group_from_expr

WALK_CATALOG = ["Z(2)", "Z(6)", "Dstar(2)", "Dstar(3)", "Dprime(0,3)", "Tstar"]


def triple_moves(G, t, g):
    a, b, c = t
    return [
        (b, a, c),
        (a, c, b),
        (c, b, a),
        (G.inv(a), G.inv(b), G.inv(c)),
        (G.mul(g, a), G.mul(g, b), G.mul(g, c)),
        (G.mul(a, g), G.mul(b, g), G.mul(c, g)),
    ]


@pytest.mark.parametrize("expr", WALK_CATALOG)
def test_normalize_constant_on_random_orbit_walks(expr):
    G = group_from_expr(expr)
    rng = random.Random(G.order * 7 + 1)
    for _ in range(25):
        start = tuple(rng.randrange(G.order) for _ in range(3))
        canon = normalize(start, G)
        assert canon[0] == 0
        assert normalize(canon, G) == canon
        t = start
        for _ in range(20):
            t = rng.choice(triple_moves(G, t, rng.randrange(G.order)))
            assert normalize(t, G) == canon


@pytest.mark.parametrize("expr", WALK_CATALOG)
def test_canonical_form_is_the_orbit_minimum(expr):
    G = group_from_expr(expr)
    rng = random.Random(G.order)
    for _ in range(10):
        start = tuple(rng.randrange(G.order) for _ in range(3))
        canon = normalize(start, G)
        # the canonical form never exceeds any member of a sampled suborbit
        t = start
        for _ in range(40):
            t = rng.choice(triple_moves(G, t, rng.randrange(G.order)))
            assert canon <= t


def test_identity_decoration_is_fixed():
    G = group_from_expr("Dstar(3)")
    assert normalize((0, 0, 0), G) == (0, 0, 0)


def brute_orbit_count(G):
    """Union-find over all triples under the full relation set."""
    n = G.order
    parent = list(range(n**3))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    gens = G.generators or [0]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                code = (a * n + b) * n + c
                nbrs = [(b, a, c), (a, c, b), (G.inv(a), G.inv(b), G.inv(c))]
                for g in gens:
                    nbrs.append((G.mul(g, a), G.mul(g, b), G.mul(g, c)))
                    nbrs.append((G.mul(a, g), G.mul(b, g), G.mul(c, g)))
                for x, y, z in nbrs:
                    union(code, (x * n + y) * n + z)
    return len({find(x) for x in range(n**3)})


@pytest.mark.parametrize("expr", ["Z(1)", "Z(2)", "Z(4)", "Z(6)", "Dstar(2)", "Dstar(3)", "Z(2) x Z(2)", "Tprime(1)"])
def test_dimension_matches_brute_force_triple_orbits(expr):
    G = group_from_expr(expr)
    assert dim_A2(G) == brute_orbit_count(G)


def test_dimension_agrees_with_averaging_route():
    for expr in ["Z(12)", "Dstar(5)", "Dprime(1,3)", "Tstar", "Ostar", "Istar"]:
        G = group_from_expr(expr)
        assert dim_A2(G) == burnside_dims(G).dim_full, expr


def test_known_dimension_values():
    assert dim_A2(group_from_expr("Z(3)")) == 3
    assert dim_A2(group_from_expr("Tstar")) == 15
    assert dim_A2(group_from_expr("Istar")) == 65


def test_diagram_budget():
    assert DEFAULT_DIAGRAM_MAX_ORDER == 120
    with pytest.raises(ResourceLimitError):
        dim_A2(group_from_expr("Z(121)"))
    assert dim_A2(group_from_expr("Z(121)"), max_order=121) == 1281


def test_route_catalog_fits_diagram_budget():
    for expr in ROUTE_120:
        assert group_from_expr(expr).order <= DEFAULT_DIAGRAM_MAX_ORDER
