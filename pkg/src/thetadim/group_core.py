"""Finite groups as dense multiplication tables, with family constructors.

Elements are integers 0..order-1 and 0 is always the identity.  The table
constructors for the cyclic, binary dihedral, split metacyclic, and twisted
quaternion-tower families build the table directly from a normal form for the
elements; the three exceptional binary polyhedral groups are built solely by
coset enumeration from their two-generator presentations.
"""

from __future__ import annotations

from array import array

from .expr import Atom, GroupExpr, parse_group_expr

__all__ = [
    "DEFAULT_PRODUCT_MAX_ENTRIES",
    "FiniteGroup",
    "ResourceLimitError",
    "binary_dihedral_group",
    "construct_family",
    "cyclic_group",
    "direct_product",
    "dprime_group",
    "group_from_expr",
    "istar_group",
    "ostar_group",
    "tprime_group",
    "tstar_group",
    "validate_spherical",
]


class ResourceLimitError(RuntimeError):
    """A computation would exceed its configured size budget."""


DEFAULT_PRODUCT_MAX_ENTRIES = 10**6


class FiniteGroup:
    """A finite group given by its full multiplication table.

    `mul_table` is row-major: the product of i and j sits at index i*order+j.
    Element 0 must be a two-sided identity; inverses are computed and checked
    at construction time.
    """

    __slots__ = ("order", "_mul", "inverses", "labels", "family_tag", "generators")

    def __init__(
        self,
        order: int,
        mul_table,
        labels=None,
        family_tag: str = "",
        generators=None,
    ) -> None:
        if order < 1:
            raise ValueError(f"order must be positive, got {order}.")
        if len(mul_table) != order * order:
            raise ValueError(
                f"table has {len(mul_table)} entries, expected {order * order}."
            )
        self.order = order
        self._mul = mul_table if isinstance(mul_table, array) else array("i", mul_table)
        mul = self._mul
        for j in range(order):
            if mul[j] != j or mul[j * order] != j:
                raise ValueError("element 0 is not a two-sided identity")
        inv = [-1] * order
        for i in range(order):
            base = i * order
            for j in range(order):
                if mul[base + j] == 0:
                    inv[i] = j
                    break
            if inv[i] < 0 or mul[inv[i] * order + i] != 0:
                raise ValueError(f"element {i} has no two-sided inverse")
        self.inverses = inv
        if labels is None:
            labels = [f"g{i}" for i in range(order)]
        else:
            labels = list(labels)
            if len(labels) != order:
                raise ValueError("label count does not match order")
        self.labels = labels
        self.family_tag = family_tag
        if generators is None:
            generators = self._greedy_generators()
        self.generators = list(generators)

    def mul(self, i: int, j: int) -> int:
        return self._mul[i * self.order + j]

    def inv(self, i: int) -> int:
        return self.inverses[i]

    def power(self, i: int, e: int) -> int:
        if e < 0:
            i = self.inverses[i]
            e = -e
        result = 0
        while e:
            if e & 1:
                result = self.mul(result, i)
            i = self.mul(i, i) if e > 1 else i
            e >>= 1
        return result

    def element_order(self, i: int) -> int:
        e = 1
        x = i
        while x != 0:
            x = self.mul(x, i)
            e += 1
        return e

    def conjugate(self, x: int, g: int) -> int:
        """x g x^-1."""
        return self.mul(self.mul(x, g), self.inverses[x])

    def row(self, i: int):
        """The slice mul(i, -) as a flat array, for hot loops."""
        return self._mul[i * self.order : (i + 1) * self.order]

    def check_associativity(self) -> None:
        """Full O(order^3) associativity check; intended for tests."""
        n = self.order
        mul = self._mul
        for i in range(n):
            for j in range(n):
                ij = mul[i * n + j]
                for k in range(n):
                    if mul[ij * n + k] != mul[i * n + mul[j * n + k]]:
                        raise AssertionError(f"associativity fails at {(i, j, k)}")

    def _closure(self, gens: list[int]) -> set[int]:
        seen = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = self.mul(x, s)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return seen

    def _greedy_generators(self) -> list[int]:
        gens: list[int] = []
        reached = {0}
        for i in range(1, self.order):
            if i not in reached:
                gens.append(i)
                reached = self._closure(gens)
                if len(reached) == self.order:
                    break
        return gens


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}.")
    table = array("i", ((i + j) % n for i in range(n) for j in range(n)))
    labels = ["e"] + [f"g^{k}" if k > 1 else "g" for k in range(1, n)]
    return FiniteGroup(
        n, table, labels=labels, family_tag=f"Z({n})",
        generators=[1] if n > 1 else [],
    )


def binary_dihedral_group(p: int) -> FiniteGroup:
    """Order 4p group with a of order 2p, x^2 = a^p, and x a x^-1 = a^-1."""
    if p < 1:
        raise ValueError(f"p must be positive, got {p}.")
    n = 4 * p
    two_p = 2 * p

    def idx(k: int, l: int) -> int:
        return k + two_p * l

    flat = [0] * (n * n)
    for k1 in range(two_p):
        for l1 in range(2):
            i = idx(k1, l1)
            base = i * n
            for k2 in range(two_p):
                for l2 in range(2):
                    if l1 == 0:
                        k = (k1 + k2) % two_p
                        l = l2
                    elif l2 == 0:
                        k = (k1 - k2) % two_p
                        l = 1
                    else:
                        k = (k1 - k2 + p) % two_p
                        l = 0
                    flat[base + idx(k2, l2)] = idx(k, l)
    labels = [""] * n
    for l in range(2):
        for k in range(two_p):
            if l == 0:
                word = "e" if k == 0 else ("a" if k == 1 else f"a^{k}")
            else:
                word = "x" if k == 0 else ("a*x" if k == 1 else f"a^{k}*x")
            labels[idx(k, l)] = word
    return FiniteGroup(
        n, flat, labels=labels, family_tag=f"Dstar({p})",
        generators=[idx(1, 0), idx(0, 1)],
    )


def dprime_group(k: int, p: int) -> FiniteGroup:
    """Order 2^(k+2) * p group with x of 2-power order inverting y of order p."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}.")
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be odd and at least 3, got {p}.")
    big_n = 2 ** (k + 2)
    n = big_n * p

    def idx(nx: int, l: int) -> int:
        return nx * p + l

    flat = [0] * (n * n)
    for n1 in range(big_n):
        for l1 in range(p):
            base = idx(n1, l1) * n
            for n2 in range(big_n):
                sign = -1 if n2 % 2 else 1
                nn = (n1 + n2) % big_n
                for l2 in range(p):
                    flat[base + idx(n2, l2)] = idx(nn, (sign * l1 + l2) % p)
    labels = []
    for nx in range(big_n):
        for l in range(p):
            xs = "" if nx == 0 else ("x" if nx == 1 else f"x^{nx}")
            ys = "" if l == 0 else ("y" if l == 1 else f"y^{l}")
            if xs and ys:
                labels.append(f"{xs}*{ys}")
            else:
                labels.append(xs or ys or "e")
    return FiniteGroup(
        n, flat, labels=labels, family_tag=f"Dprime({k},{p})",
        generators=[idx(1, 0), idx(0, 1)],
    )


# Unit group of the quaternions, indexed 0..7 in the order
# e, x, y, x^2, x*y, y*x, x^3, y^3, which is 1, i, j, -1, k, -k, -i, -j.
_QUNITS = [(1, 0), (1, 1), (1, 2), (-1, 0), (1, 3), (-1, 3), (-1, 1), (-1, 2)]
_QINDEX = {unit: w for w, unit in enumerate(_QUNITS)}
_QLABELS = ["e", "x", "y", "x^2", "x*y", "y*x", "x^3", "y^3"]

# basis products for axes (1, i, j, k)
_QBASIS = [[None] * 4 for _ in range(4)]
for _a in range(4):
    _QBASIS[0][_a] = (1, _a)
    _QBASIS[_a][0] = (1, _a)
for _a, _b, _c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
    _QBASIS[_a][_a] = (-1, 0)
    _QBASIS[_a][_b] = (1, _c)
    _QBASIS[_b][_a] = (-1, _c)


def _qmul(u: int, v: int) -> int:
    su, au = _QUNITS[u]
    sv, av = _QUNITS[v]
    sb, ab = _QBASIS[au][av]
    return _QINDEX[(su * sv * sb, ab)]


_QMUL = [[_qmul(u, v) for v in range(8)] for u in range(8)]

# the order-3 automorphism x -> y -> x*y -> x induced by conjugation by z
_QSIGMA = [0, 2, 4, 3, 1, 6, 7, 5]


def tprime_group(k: int) -> FiniteGroup:
    """Order 8*3^k group: quaternion units extended by z of order 3^k acting by _QSIGMA."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}.")
    three_k = 3**k
    n = 8 * three_k
    sigma_pows = [list(range(8))]
    for _ in range(2):
        sigma_pows.append([_QSIGMA[w] for w in sigma_pows[-1]])

    flat = [0] * (n * n)
    for w1 in range(8):
        for l1 in range(three_k):
            base = (w1 + 8 * l1) * n
            sig = sigma_pows[l1 % 3]
            row_w1 = _QMUL[w1]
            for w2 in range(8):
                w = row_w1[sig[w2]]
                for l2 in range(three_k):
                    flat[base + w2 + 8 * l2] = w + 8 * ((l1 + l2) % three_k)
    labels = [""] * n
    for l in range(three_k):
        zs = "z" if l == 1 else f"z^{l}"
        for w in range(8):
            if l == 0:
                labels[w] = _QLABELS[w]
            elif w == 0:
                labels[8 * l] = zs
            else:
                labels[w + 8 * l] = f"{_QLABELS[w]}*{zs}"
    return FiniteGroup(
        n, flat, labels=labels, family_tag=f"Tprime({k})",
        generators=[1, 8],
    )


def _polyhedral(b_order: int, expected: int, tag: str) -> FiniteGroup:
    from .coset_enum import group_from_presentation

    text = f"<a,b | (a*b)^2 = a^3 = b^{b_order}>"
    return group_from_presentation(text, expected_order=expected, family_tag=tag)


def tstar_group() -> FiniteGroup:
    return _polyhedral(3, 24, "Tstar")


def ostar_group() -> FiniteGroup:
    return _polyhedral(4, 48, "Ostar")


def istar_group() -> FiniteGroup:
    return _polyhedral(5, 120, "Istar")


def construct_family(atom: Atom) -> FiniteGroup:
    """Build the group for one expression atom."""
    kind, params = atom.kind, atom.params
    if kind == "Z":
        return cyclic_group(params[0])
    if kind == "Dstar":
        return binary_dihedral_group(params[0])
    if kind == "Dprime":
        return dprime_group(params[0], params[1])
    if kind == "Tstar":
        return tstar_group()
    if kind == "Tprime":
        return tprime_group(params[0])
    if kind == "Ostar":
        return ostar_group()
    if kind == "Istar":
        return istar_group()
    raise ValueError(f"unknown family {kind!r}")


def direct_product(
    g1: FiniteGroup,
    g2: FiniteGroup,
    max_entries: int = DEFAULT_PRODUCT_MAX_ENTRIES,
) -> FiniteGroup:
    n1, n2 = g1.order, g2.order
    n = n1 * n2
    if n * n > max_entries:
        raise ResourceLimitError(
            f"product of orders {n1} and {n2} needs {n * n} table entries, "
            f"budget is {max_entries}."
        )
    flat = [0] * (n * n)
    m1, m2 = g1._mul, g2._mul
    for i1 in range(n1):
        for i2 in range(n2):
            i = i1 * n2 + i2
            base = i * n
            row1 = i1 * n1
            row2 = i2 * n2
            for j1 in range(n1):
                k1 = m1[row1 + j1] * n2
                col = j1 * n2
                for j2 in range(n2):
                    flat[base + col + j2] = k1 + m2[row2 + j2]
    labels = [
        f"({a},{b})" for a in g1.labels for b in g2.labels
    ]
    gens = [i1 * n2 for i1 in g1.generators] + list(g2.generators)
    tag1 = g1.family_tag or "?"
    tag2 = g2.family_tag or "?"
    return FiniteGroup(
        n, flat, labels=labels, family_tag=f"{tag1}x{tag2}", generators=gens
    )


def group_from_expr(
    expr: GroupExpr | str,
    max_entries: int = DEFAULT_PRODUCT_MAX_ENTRIES,
) -> FiniteGroup:
    if isinstance(expr, str):
        expr = parse_group_expr(expr)
    group = construct_family(expr.atoms[0])
    for atom in expr.atoms[1:]:
        group = direct_product(group, construct_family(atom), max_entries=max_entries)
    return group


def validate_spherical(expr: GroupExpr | str) -> tuple[bool, str | None]:
    """Whether the expression matches a spherical space form fundamental group."""
    from .closed_forms import SphericalMatchError, spec_from_expr

    if isinstance(expr, str):
        expr = parse_group_expr(expr)
    try:
        spec_from_expr(expr)
    except SphericalMatchError as exc:
        return False, str(exc)
    return True, None
