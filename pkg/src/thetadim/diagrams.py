"""Theta-diagram decorations over a finite group.

A decoration is a triple of edge labels.  Two decorations are equivalent under
edge permutations, simultaneous left or right translation of all three labels,
and simultaneous inversion.  Every orbit meets the slice of triples whose
first label is the identity, and left translation acts freely there, so the
walk runs over pairs (u, v) standing for (e, u, v).  Right translations by
group generators, the three transpositions and inversion all map this slice
to itself after re-normalizing the first label, and together they connect
exactly the original orbits.
"""

from __future__ import annotations

from .group_core import FiniteGroup, ResourceLimitError

__all__ = ["DEFAULT_DIAGRAM_MAX_ORDER", "ThetaDecoration", "dim_A2", "normalize"]

DEFAULT_DIAGRAM_MAX_ORDER = 120

ThetaDecoration = tuple[int, int, int]


def _pair_moves(group: FiniteGroup):
    """Neighbor function on the slice: all images of (e, u, v) re-normalized."""
    n = group.order
    mul = group._mul
    inv = group.inverses
    gen_pairs = [(s, inv[s]) for s in group.generators]

    def neighbors(u: int, v: int) -> list[tuple[int, int]]:
        ui = inv[u]
        vi = inv[v]
        out = [
            (ui, mul[ui * n + v]),  # swap first two labels, then renormalize
            (v, u),  # swap last two labels
            (mul[vi * n + u], vi),  # swap outer labels, then renormalize
            (ui, vi),  # invert all labels
        ]
        for s, si in gen_pairs:
            out.append((mul[mul[si * n + u] * n + s], mul[mul[si * n + v] * n + s]))
        return out

    return neighbors


def _reduce(d: ThetaDecoration, group: FiniteGroup) -> tuple[int, int]:
    a, b, c = d
    ai = group.inv(a)
    return group.mul(ai, b), group.mul(ai, c)


def normalize(d: ThetaDecoration, group: FiniteGroup) -> ThetaDecoration:
    """Lexicographically smallest decoration equivalent to d."""
    neighbors = _pair_moves(group)
    start = _reduce(d, group)
    seen = {start}
    stack = [start]
    best = start
    while stack:
        state = stack.pop()
        if state < best:
            best = state
        for nxt in neighbors(*state):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return (0, best[0], best[1])


def dim_A2(group: FiniteGroup, max_order: int | None = None) -> int:
    """Number of decoration orbits; equals the full invariant dimension."""
    n = group.order
    budget = DEFAULT_DIAGRAM_MAX_ORDER if max_order is None else max_order
    if n > budget:
        raise ResourceLimitError(
            f"order {n} exceeds the diagram-enumeration budget {budget}"
        )
    neighbors = _pair_moves(group)
    visited = bytearray(n * n)
    count = 0
    for u0 in range(n):
        for v0 in range(n):
            if visited[u0 * n + v0]:
                continue
            count += 1
            visited[u0 * n + v0] = 1
            stack = [(u0, v0)]
            while stack:
                u, v = stack.pop()
                for x, y in neighbors(u, v):
                    r = x * n + y
                    if not visited[r]:
                        visited[r] = 1
                        stack.append((x, y))
    return count
