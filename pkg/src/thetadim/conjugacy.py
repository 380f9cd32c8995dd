"""Conjugacy classes, power maps on classes, and class-level counting sums."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .group_core import FiniteGroup

__all__ = [
    "ClassData",
    "compute_classes",
    "d1_class_formula",
    "delta3_weighted_sum",
    "product_class_data",
    "z2_orbit_count",
]


@dataclass
class ClassData:
    """Conjugacy structure of a finite group.

    Classes are numbered by their smallest contained element, in increasing
    order, so class 0 is always the identity class.  `square_class[c]` is the
    class of g^2 for g in class c, and similarly for cubes and inverses; these
    maps are well defined because power maps commute with conjugation.
    """

    order: int
    class_of: list[int]
    representatives: list[int]
    sizes: list[int]
    square_class: list[int]
    cube_class: list[int]
    inverse_class: list[int]

    @property
    def num_classes(self) -> int:
        return len(self.representatives)

    def centralizer_size(self, c: int) -> int:
        return self.order // self.sizes[c]


def compute_classes(group: FiniteGroup) -> ClassData:
    n = group.order
    mul = group._mul
    inv = group.inverses
    class_of = [-1] * n
    representatives: list[int] = []
    sizes: list[int] = []
    for g in range(n):
        if class_of[g] >= 0:
            continue
        c = len(representatives)
        members = set()
        for x in range(n):
            members.add(mul[mul[x * n + g] * n + inv[x]])
        for m in members:
            class_of[m] = c
        representatives.append(g)
        sizes.append(len(members))
    square_class = []
    cube_class = []
    inverse_class = []
    for r in representatives:
        r2 = mul[r * n + r]
        square_class.append(class_of[r2])
        cube_class.append(class_of[mul[r2 * n + r]])
        inverse_class.append(class_of[inv[r]])
    return ClassData(
        order=n,
        class_of=class_of,
        representatives=representatives,
        sizes=sizes,
        square_class=square_class,
        cube_class=cube_class,
        inverse_class=inverse_class,
    )


def product_class_data(cd1: ClassData, cd2: ClassData) -> ClassData:
    """Class data of a direct product, composed without building the product group.

    Conjugacy in a direct product is componentwise, and the product class
    (c1, c2) has smallest element rep1[c1]*order2 + rep2[c2].  Sorting pairs
    by (c1, c2) therefore reproduces exactly the smallest-element numbering
    that `compute_classes` would use on the product group.
    """
    n2 = cd2.order
    k2 = cd2.num_classes
    n = cd1.order * n2

    class_of = [0] * n
    for i1 in range(cd1.order):
        base_cls = cd1.class_of[i1] * k2
        base_el = i1 * n2
        co2 = cd2.class_of
        for i2 in range(n2):
            class_of[base_el + i2] = base_cls + co2[i2]

    representatives = []
    sizes = []
    square_class = []
    cube_class = []
    inverse_class = []
    for c1 in range(cd1.num_classes):
        for c2 in range(k2):
            representatives.append(cd1.representatives[c1] * n2 + cd2.representatives[c2])
            sizes.append(cd1.sizes[c1] * cd2.sizes[c2])
            square_class.append(cd1.square_class[c1] * k2 + cd2.square_class[c2])
            cube_class.append(cd1.cube_class[c1] * k2 + cd2.cube_class[c2])
            inverse_class.append(cd1.inverse_class[c1] * k2 + cd2.inverse_class[c2])
    return ClassData(
        order=n,
        class_of=class_of,
        representatives=representatives,
        sizes=sizes,
        square_class=square_class,
        cube_class=cube_class,
        inverse_class=inverse_class,
    )


def z2_orbit_count(cd: ClassData) -> int:
    """Number of orbits of classes under inversion."""
    fixed = sum(1 for c, ic in zip(range(cd.num_classes), cd.inverse_class) if ic == c)
    moved = cd.num_classes - fixed
    if moved % 2:
        raise AssertionError("inversion must pair up the non-fixed classes")
    return fixed + moved // 2


def delta3_weighted_sum(cd: ClassData) -> Fraction:
    """Sum of |C(g)| |C(h)| / |C(g^3)| over class pairs with g^3 conjugate to h^3.

    The sum deliberately iterates over ordered class pairs; the cube-matching
    condition is symmetric, and the denominator only depends on the first
    class of the pair.
    """
    total = Fraction(0)
    sizes = cd.sizes
    cubes = cd.cube_class
    k = cd.num_classes
    for i in range(k):
        cube_i = cubes[i]
        weight = 0
        for j in range(k):
            if cubes[j] == cube_i:
                weight += sizes[j]
        total += Fraction(sizes[i] * weight, sizes[cube_i])
    return total


def d1_class_formula(cd: ClassData) -> Fraction:
    """Dimension of the invariant part of the cube of the two-sided action.

    Evaluates (1/6) * sum over classes of (|G|/|C| + 3|C|/|C^2-class|)
    plus (1/(3|G|)) * the cube-matched pair sum.
    """
    n = cd.order
    single = Fraction(0)
    for c in range(cd.num_classes):
        size = cd.sizes[c]
        single += Fraction(n, size) + Fraction(3 * size, cd.sizes[cd.square_class[c]])
    return single / 6 + delta3_weighted_sum(cd) / (3 * n)
