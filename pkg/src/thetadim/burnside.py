"""Character-free dimension oracles via fixed-point counting and orbit enumeration.

The basis of the group algebra carries two permutation actions per pair (g, h):
the plain one x -> g*x*h^-1 and the twisted one x -> h*x^-1*g^-1 (pair action
followed by inversion).  Averaging symmetric-cube traces over all pairs gives
d1 (plain) and d2 (twisted); the target dimension is their mean.  The kernel
variant replaces every power trace t_k by t_k - 1, since the trivial summand
contributes exactly 1 to each.

Two evaluation modes: "naive" iterates all |G|^2 pairs reading fixed-point
counts from two literally-counted tables, and is the trusted reference;
"class" reduces the plain sum to class pairs and the twisted sum to a single
sum over classes weighted by square-root counts.  Orbit enumeration on sorted
monomial triples provides a third, lemma-free count of the same dimension.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from fractions import Fraction

from .conjugacy import compute_classes
from .expr import GroupExpr
from .group_core import FiniteGroup, ResourceLimitError, group_from_expr

__all__ = [
    "ActionElement",
    "BurnsideResult",
    "DEFAULT_PAIR_MAX_ORDER",
    "DEFAULT_ORBIT_MAX_ORDER",
    "burnside_dims",
    "orbit_count_dims",
    "plain_action",
    "sym3_trace",
    "twisted_action",
]

DEFAULT_PAIR_MAX_ORDER = 2000
DEFAULT_ORBIT_MAX_ORDER = 150

# naive mode switches to class reduction above this order when mode="auto"
_AUTO_NAIVE_MAX_ORDER = 300


@dataclass(frozen=True)
class ActionElement:
    """One permutation of the element set, tagged by how it was built."""

    kind: str
    g: int
    h: int
    perm: tuple[int, ...]


def plain_action(group: FiniteGroup, g: int, h: int) -> ActionElement:
    """Permutation x -> g*x*h^-1."""
    hi = group.inv(h)
    perm = tuple(group.mul(group.mul(g, x), hi) for x in range(group.order))
    return ActionElement(kind="plain", g=g, h=h, perm=perm)


def twisted_action(group: FiniteGroup, g: int, h: int) -> ActionElement:
    """Permutation x -> h*x^-1*g^-1, the plain pair action followed by inversion."""
    gi = group.inv(g)
    perm = tuple(
        group.mul(group.mul(h, group.inv(x)), gi) for x in range(group.order)
    )
    return ActionElement(kind="twisted", g=g, h=h, perm=perm)


def sym3_trace(action: ActionElement) -> Fraction:
    """Trace on the symmetric cube: (t1^3 + 3*t1*t2 + 2*t3) / 6.

    t_k counts fixed points of the k-th compositional power of the permutation.
    """
    perm = action.perm
    t1 = t2 = t3 = 0
    for x, y in enumerate(perm):
        if y == x:
            t1 += 1
        z = perm[y]
        if z == x:
            t2 += 1
        if perm[z] == x:
            t3 += 1
    return Fraction(t1**3 + 3 * t1 * t2 + 2 * t3, 6)


@dataclass
class BurnsideResult:
    group_name: str
    order: int
    d1: Fraction
    d2: Fraction
    dim_full: Fraction
    dim_ker: Fraction
    ker_d1: Fraction
    ker_d2: Fraction
    mode: str


def _ker_terms(t1: int, t2: int, t3: int) -> int:
    u1, u2, u3 = t1 - 1, t2 - 1, t3 - 1
    return u1**3 + 3 * u1 * u2 + 2 * u3


def _naive_sums(group: FiniteGroup) -> tuple[int, int, int, int]:
    """Sym-cube trace sums over all pairs, via two counted fixed-point tables.

    pl[u*n + v] counts solutions of x^-1*u*x = v, the fixed points of the
    plain action of any pair (g, h) with g in the role of u at x-conjugate v.
    tw[u*n + v] counts solutions of x*u*x = v, the twisted fixed points.
    Power traces reduce to table lookups: the square of the twisted action of
    (g, h) is the plain action of (h*g, g*h), and its cube is the twisted
    action of (g*h*g, h*g*h).
    """
    n = group.order
    mul = group._mul
    inv = group.inverses
    pl = array("i", [0]) * (n * n)
    tw = array("i", [0]) * (n * n)
    for u in range(n):
        base = u * n
        for x in range(n):
            pl[base + mul[mul[inv[x] * n + u] * n + x]] += 1
            tw[base + mul[mul[x * n + u] * n + x]] += 1

    sq = [mul[x * n + x] for x in range(n)]
    cu = [mul[sq[x] * n + x] for x in range(n)]

    plain_sum = plain_ker = 0
    twist_sum = twist_ker = 0
    for g in range(n):
        row = g * n
        sq_row = sq[g] * n
        cu_row = cu[g] * n
        for h in range(n):
            t1 = pl[row + h]
            t2 = pl[sq_row + sq[h]]
            t3 = pl[cu_row + cu[h]]
            plain_sum += t1**3 + 3 * t1 * t2 + 2 * t3
            plain_ker += _ker_terms(t1, t2, t3)

            gh = mul[row + h]
            hg = mul[h * n + g]
            u1 = tw[row + h]
            u2 = pl[hg * n + gh]
            u3 = tw[mul[gh * n + g] * n + mul[hg * n + h]]
            twist_sum += u1**3 + 3 * u1 * u2 + 2 * u3
            twist_ker += _ker_terms(u1, u2, u3)
    return plain_sum, plain_ker, twist_sum, twist_ker


def _class_sums(group: FiniteGroup) -> tuple[int, int, int, int]:
    """Same four sums as _naive_sums, reduced to conjugacy class data.

    Plain traces are class functions of the pair, so the pair sum collapses to
    class pairs weighted by size products.  Twisted traces are not: they are
    functions of the product h*g alone, and summing over pairs with a fixed
    product gives |G| times a single sum over classes, with t1 the number of
    square roots of the representative, t2 its centralizer size, and t3 the
    square-root count of its cube.
    """
    n = group.order
    mul = group._mul
    cd = compute_classes(group)
    k = cd.num_classes
    sizes = cd.sizes
    cent = [n // s for s in sizes]
    sq_cls = cd.square_class
    cu_cls = cd.cube_class

    plain_sum = plain_ker = 0
    for i in range(k):
        cent_sq = cent[sq_cls[i]]
        cent_cu = cent[cu_cls[i]]
        for j in range(k):
            t1 = cent[i] if j == i else 0
            t2 = cent_sq if sq_cls[j] == sq_cls[i] else 0
            t3 = cent_cu if cu_cls[j] == cu_cls[i] else 0
            w = sizes[i] * sizes[j]
            plain_sum += w * (t1**3 + 3 * t1 * t2 + 2 * t3)
            plain_ker += w * _ker_terms(t1, t2, t3)

    root_count = [0] * n
    for y in range(n):
        root_count[mul[y * n + y]] += 1

    twist_sum = twist_ker = 0
    for c in range(k):
        rep = cd.representatives[c]
        r1 = root_count[rep]
        r3 = root_count[group.power(rep, 3)]
        twist_sum += sizes[c] * (r1**3 + 3 * r1 * cent[c] + 2 * r3)
        twist_ker += sizes[c] * _ker_terms(r1, cent[c], r3)
    # pair sums carry one more factor of |G| than the class-collapsed twisted sum
    return plain_sum, plain_ker, n * twist_sum, n * twist_ker


def _as_group(group: FiniteGroup | GroupExpr | str) -> FiniteGroup:
    if isinstance(group, FiniteGroup):
        return group
    return group_from_expr(group)


def burnside_dims(
    group: FiniteGroup | GroupExpr | str,
    mode: str = "auto",
    max_order: int | None = None,
) -> BurnsideResult:
    """Both dimensions by pair-averaged symmetric-cube traces.

    mode "naive" sums all |G|^2 pairs, "class" uses the conjugacy reduction,
    "auto" picks naive for small orders and class otherwise.
    """
    group = _as_group(group)
    n = group.order
    budget = DEFAULT_PAIR_MAX_ORDER if max_order is None else max_order
    if n > budget:
        raise ResourceLimitError(
            f"order {n} exceeds the pair-counting budget {budget}; "
            "use the character or closed-form route instead"
        )
    if mode == "auto":
        mode = "naive" if n <= _AUTO_NAIVE_MAX_ORDER else "class"
    if mode == "naive":
        plain_sum, plain_ker, twist_sum, twist_ker = _naive_sums(group)
    elif mode == "class":
        plain_sum, plain_ker, twist_sum, twist_ker = _class_sums(group)
    else:
        raise ValueError(f"mode must be auto, naive or class, got {mode!r}.")

    denom = 6 * n * n
    d1 = Fraction(plain_sum, denom)
    d2 = Fraction(twist_sum, denom)
    ker_d1 = Fraction(plain_ker, denom)
    ker_d2 = Fraction(twist_ker, denom)
    dim_full = (d1 + d2) / 2
    dim_ker = (ker_d1 + ker_d2) / 2
    for label, value in (
        ("d1", d1),
        ("d2", d2),
        ("dim", dim_full),
        ("kernel dim", dim_ker),
    ):
        if value.denominator != 1 or value < 0:
            raise AssertionError(
                f"{label} for {group.family_tag} is not a nonnegative integer: {value}"
            )
    return BurnsideResult(
        group_name=group.family_tag,
        order=n,
        d1=d1,
        d2=d2,
        dim_full=dim_full,
        dim_ker=dim_ker,
        ker_d1=ker_d1,
        ker_d2=ker_d2,
        mode=mode,
    )


def orbit_count_dims(
    group: FiniteGroup | GroupExpr | str,
    max_order: int | None = None,
) -> int:
    """Number of monomial-triple orbits under both pair actions and inversion.

    Equals the full invariant dimension, and cross-checks burnside_dims by
    Burnside's lemma.  Breadth-first closure over sorted triples, keyed by the
    combinatorial rank of the strictly increasing lift (a, b+1, c+2).
    """
    group = _as_group(group)
    n = group.order
    budget = DEFAULT_ORBIT_MAX_ORDER if max_order is None else max_order
    if n > budget:
        raise ResourceLimitError(
            f"order {n} exceeds the orbit-enumeration budget {budget}"
        )

    perms: list[list[int]] = []
    for s in group.generators:
        perms.append([group.mul(s, x) for x in range(n)])
        si = group.inv(s)
        perms.append([group.mul(x, si) for x in range(n)])
    perms.append(list(group.inverses))

    c2 = [i * (i - 1) // 2 for i in range(n + 3)]
    c3 = [i * (i - 1) * (i - 2) // 6 for i in range(n + 3)]

    def rank(a: int, b: int, c: int) -> int:
        return c3[c + 2] + c2[b + 1] + a

    total = c3[n + 2]
    visited = bytearray(total)
    orbits = 0
    for a0 in range(n):
        for b0 in range(a0, n):
            for c0 in range(b0, n):
                if visited[rank(a0, b0, c0)]:
                    continue
                orbits += 1
                visited[rank(a0, b0, c0)] = 1
                stack = [(a0, b0, c0)]
                while stack:
                    a, b, c = stack.pop()
                    for perm in perms:
                        x, y, z = perm[a], perm[b], perm[c]
                        if x > y:
                            x, y = y, x
                        if y > z:
                            y, z = z, y
                            if x > y:
                                x, y = y, x
                        r = rank(x, y, z)
                        if not visited[r]:
                            visited[r] = 1
                            stack.append((x, y, z))
    return orbits
