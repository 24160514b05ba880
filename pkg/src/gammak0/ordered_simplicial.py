"""Finite direct sums of coset permutation modules with their standard order.

A ``SimplicialGroup`` of rank n over a coset space is the ordered module
whose elements are n-tuples of coset vectors and whose cone is coordinatewise
nonnegativity.  Equality of elements is equality of the projected coordinate
classes, which makes this representation canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, NotInCone, PreorderViolated, ShapeMismatch, SumMismatch
from .finite_group import CosetSpace, Subgroup
from .group_ring import CosetVector, GroupRingElt, act, lift_vector
from . import intlinalg


@dataclass(frozen=True)
class SimplicialGroup:
    space: CosetSpace
    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")

    def zero(self) -> "GammaVector":
        return GammaVector(self, tuple(CosetVector.zero(self.space) for _ in range(self.rank)))

    def basis_vector(self, i: int) -> "GammaVector":
        if i < 0 or i >= self.rank:
            raise IndexOutOfRange(f"basis index {i} out of range for rank {self.rank}")
        coords = tuple(
            CosetVector.basis(self.space, 0) if j == i else CosetVector.zero(self.space)
            for j in range(self.rank)
        )
        return GammaVector(self, coords)

    def basis(self) -> list["GammaVector"]:
        return [self.basis_vector(i) for i in range(self.rank)]

    def element(self, coords: Sequence[CosetVector | Sequence[int]]) -> "GammaVector":
        if len(coords) != self.rank:
            raise ShapeMismatch("coordinate count does not match rank")
        vecs = []
        for c in coords:
            if isinstance(c, CosetVector):
                if c.space != self.space:
                    raise ShapeMismatch("coordinate over a different coset space")
                vecs.append(c)
            else:
                vecs.append(CosetVector(self.space, c))
        return GammaVector(self, tuple(vecs))

    def contains(self, v: "GammaVector") -> bool:
        return v.group == self

    def cone_contains(self, v: "GammaVector") -> bool:
        if v.group != self:
            raise ShapeMismatch("vector belongs to a different group")
        return all(c.is_positive() for c in v.coords)

    def flat_dim(self) -> int:
        return self.rank * self.space.num_cosets

    def __repr__(self) -> str:
        return f"SimplicialGroup(rank={self.rank}, cosets={self.space.num_cosets})"


class GammaVector:
    """Element of a simplicial group, stored by coordinate coset classes."""

    __slots__ = ("group", "coords")

    def __init__(self, group: SimplicialGroup, coords: Sequence[CosetVector]):
        coords = tuple(coords)
        if len(coords) != group.rank:
            raise ShapeMismatch("coordinate count does not match rank")
        for c in coords:
            if c.space != group.space:
                raise ShapeMismatch("coordinate over a different coset space")
        self.group = group
        self.coords = coords

    def _check(self, other: "GammaVector") -> None:
        if not isinstance(other, GammaVector) or self.group != other.group:
            raise ShapeMismatch("vectors in different groups")

    def __add__(self, other: "GammaVector") -> "GammaVector":
        self._check(other)
        return GammaVector(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "GammaVector") -> "GammaVector":
        self._check(other)
        return GammaVector(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GammaVector":
        return GammaVector(self.group, tuple(-a for a in self.coords))

    def scale(self, k: int) -> "GammaVector":
        return GammaVector(self.group, tuple(a.scale(k) for a in self.coords))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, GroupRingElt):
            return GammaVector(self.group, tuple(act(other, c) for c in self.coords))
        return NotImplemented

    def translate(self, g: int) -> "GammaVector":
        return GammaVector(self.group, tuple(c.translate(g) for c in self.coords))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def is_positive(self) -> bool:
        return all(c.is_positive() for c in self.coords)

    def positive_part(self) -> "GammaVector":
        return GammaVector(self.group, tuple(c.positive_part() for c in self.coords))

    def negative_part(self) -> "GammaVector":
        return GammaVector(self.group, tuple(c.negative_part() for c in self.coords))

    def max_abs_coeff(self) -> int:
        return max((c.max_abs_coeff() for c in self.coords), default=0)

    def flatten(self) -> tuple[int, ...]:
        out: list[int] = []
        for c in self.coords:
            out.extend(c.coeffs)
        return tuple(out)

    def lifts(self) -> list[GroupRingElt]:
        """Canonical (possibly signed) group-ring lifts of the coordinates."""
        return [lift_vector(c) for c in self.coords]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GammaVector)
            and self.group == other.group
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash(tuple(c.coeffs for c in self.coords))

    def __repr__(self) -> str:
        return "GammaVector(" + ", ".join(repr(c.coeffs) for c in self.coords) + ")"


def unflatten(group: SimplicialGroup, flat: Sequence[int]) -> GammaVector:
    nc = group.space.num_cosets
    if len(flat) != group.rank * nc:
        raise ShapeMismatch("flat length does not match group dimensions")
    coords = [CosetVector(group.space, flat[i * nc : (i + 1) * nc]) for i in range(group.rank)]
    return GammaVector(group, coords)


def cone_contains(group: SimplicialGroup, v: GammaVector) -> bool:
    return group.cone_contains(v)


def leq(x: GammaVector, y: GammaVector) -> bool:
    """x <= y in the coordinatewise order."""
    return (y - x).is_positive()


def is_order_unit(group: SimplicialGroup, u: GammaVector) -> bool:
    """True when every coordinate of u carries some positive coset mass.

    Transitivity of the coset action makes this equivalent to u dominating
    every basis element up to translates; the test suite cross-checks the
    equivalence against a bounded search over dominating coefficients.
    """
    if not group.cone_contains(u):
        raise NotInCone("order-unit candidates must lie in the cone")
    return all(not c.is_zero() for c in u.coords)


def dominating_coefficient(u: GammaVector, x: GammaVector) -> GroupRingElt:
    """Some a in the positive group-ring cone with x <= a*u, for an order unit u."""
    if x.group != u.group:
        raise ShapeMismatch("vectors in different groups")
    k = max(
        (max(c.coeffs) for c in x.coords if c.coeffs),
        default=0,
    )
    k = max(k, 0)
    a = GroupRingElt.all_ones(u.group.space.parent).scale(k)
    return a


def _slotwise(x: GammaVector, y: GammaVector, fn) -> GammaVector:
    coords = []
    for cx, cy in zip(x.coords, y.coords):
        coords.append(CosetVector(cx.space, tuple(fn(a, b) for a, b in zip(cx.coeffs, cy.coeffs))))
    return GammaVector(x.group, coords)


def interpolate(group: SimplicialGroup, lower: Iterable[GammaVector], upper: Iterable[GammaVector]) -> GammaVector:
    """Least slot-wise interpolant z with x <= z <= y for all pairs."""
    lower = list(lower)
    upper = list(upper)
    for x in lower:
        for y in upper:
            if not leq(x, y):
                raise PreorderViolated("some lower element is not below some upper element")
    if lower:
        z = lower[0]
        for x in lower[1:]:
            z = _slotwise(z, x, max)
        return z
    if upper:
        z = upper[0]
        for y in upper[1:]:
            z = _slotwise(z, y, min)
        return z
    return group.zero()


def riesz_refine(
    group: SimplicialGroup,
    x1: GammaVector,
    x2: GammaVector,
    y1: GammaVector,
    y2: GammaVector,
) -> list[list[GammaVector]]:
    """Refinement matrix for x1 + x2 = y1 + y2 with all terms in the cone.

    Greedy slot-wise minimum: z11 = min(x1, y1); the remaining entries are
    forced and stay nonnegative.
    """
    for v in (x1, x2, y1, y2):
        if not group.cone_contains(v):
            raise NotInCone("refinement inputs must lie in the cone")
    if x1 + x2 != y1 + y2:
        raise SumMismatch("row and column sums disagree")
    z11 = _slotwise(x1, y1, min)
    z12 = x1 - z11
    z21 = y1 - z11
    z22 = x2 - z21
    return [[z11, z12], [z21, z22]]


@dataclass(frozen=True)
class IdealSplit:
    """A coordinate ideal of a simplicial group and its complementary quotient."""

    ideal: SimplicialGroup
    quotient: SimplicialGroup
    ideal_indices: tuple[int, ...]
    quotient_indices: tuple[int, ...]

    def include(self, v: GammaVector) -> GammaVector:
        """Embed an ideal element into the ambient group."""
        amb = SimplicialGroup(self.ideal.space, len(self.ideal_indices) + len(self.quotient_indices))
        coords = [CosetVector.zero(amb.space) for _ in range(amb.rank)]
        for k, i in enumerate(self.ideal_indices):
            coords[i] = v.coords[k]
        return GammaVector(amb, coords)

    def project(self, v: GammaVector) -> GammaVector:
        """Project an ambient element onto the quotient coordinates."""
        coords = [v.coords[i] for i in self.quotient_indices]
        return GammaVector(self.quotient, coords)


def ideal_from_subset(group: SimplicialGroup, subset: Iterable[int]) -> IdealSplit:
    idx = sorted(set(subset))
    for i in idx:
        if i < 0 or i >= group.rank:
            raise IndexOutOfRange(f"basis index {i} out of range")
    comp = tuple(i for i in range(group.rank) if i not in set(idx))
    return IdealSplit(
        ideal=SimplicialGroup(group.space, len(idx)),
        quotient=SimplicialGroup(group.space, len(comp)),
        ideal_indices=tuple(idx),
        quotient_indices=comp,
    )


def is_gamma_ideal(group: SimplicialGroup, generators: Iterable[GammaVector]) -> bool:
    """Decide whether the submodule generated by ``generators`` is spanned by basis elements.

    The submodule is a coordinate ideal exactly when every generator is
    supported on the set of coordinates whose basis vectors it contains.
    """
    gens = list(generators)
    for g in gens:
        if g.group != group:
            raise ShapeMismatch("generator belongs to a different group")
    width = group.flat_dim()
    rows = []
    for g in gens:
        for gamma in group.space.parent.elements():
            rows.append(list(g.translate(gamma).flatten()))
    lat = intlinalg.hnf(rows, width)
    supported = set()
    for i in range(group.rank):
        if intlinalg.lattice_contains(lat, group.basis_vector(i).flatten()):
            supported.add(i)
    for g in gens:
        for i, c in enumerate(g.coords):
            if not c.is_zero() and i not in supported:
                return False
    return True


def group_stabilizer(group: SimplicialGroup) -> Subgroup:
    """Elements acting as the identity on the whole module."""
    G = group.space.parent
    if group.rank == 0:
        return Subgroup(parent=G, members=tuple(range(G.order)))
    members = [
        g
        for g in G.elements()
        if all(group.space.act(g, c) == c for c in range(group.space.num_cosets))
    ]
    return Subgroup(parent=G, members=tuple(sorted(members)))


def enumerate_interval(u: GammaVector) -> list[GammaVector]:
    """All cone elements below u; the box is finite since slots are bounded."""
    group = u.group
    slots = u.flatten()
    out = []
    for combo in product(*(range(s + 1) for s in slots)):
        out.append(unflatten(group, combo))
    return out
