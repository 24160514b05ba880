"""Decomposition witnesses for zero relations and unperforation certificates.

A simplicial group decomposes every zero relation among cone elements
through nonnegative group-ring coefficients against its basis; the witness
records those coefficients and is checked exactly.  Unperforation witnesses
are derived from the same construction applied to the split of an element
into positive and negative parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import NotInCone, NotPositive, ProductNotInCone, RelationNotZero
from .group_ring import GroupRingElt, lift_vector, project_pi
from .ordered_simplicial import GammaVector, SimplicialGroup


@dataclass(frozen=True)
class Verdict:
    """Boolean check outcome carrying a reason tag for the failing clause."""

    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class SdpWitness:
    """Decomposition data: x_i = sum_j b_ij y_j with vanishing projected column sums."""

    m: int
    b: tuple[tuple[GroupRingElt, ...], ...]  # n rows, m columns
    y: tuple  # m cone elements


@dataclass(frozen=True)
class UnperfWitness:
    m: int
    b: tuple[GroupRingElt, ...]
    y: tuple  # m cone elements


def _check_relation(group, a: Sequence[GroupRingElt], x: Sequence) -> None:
    if len(a) != len(x):
        raise RelationNotZero("coefficient and vector counts differ")
    total = group.zero()
    for ai, xi in zip(a, x):
        if not group.cone_contains(xi):
            raise NotInCone("relation vectors must lie in the cone")
        total = total + ai * xi
    if not total.is_zero():
        raise RelationNotZero("relation does not sum to zero")


def sdp_witness(group: SimplicialGroup, a: Sequence[GroupRingElt], x: Sequence[GammaVector]) -> SdpWitness:
    """Witness for a zero relation, with the basis as decomposition targets.

    The coefficients are the canonical nonnegative lifts of the coordinates
    of each x_i; the projected column sums vanish because the relation does,
    coordinate by coordinate.
    """
    _check_relation(group, a, x)
    if group.rank == 0:
        b = tuple((GroupRingElt.zero(group.space.parent),) for _ in x)
        return SdpWitness(m=1, b=b, y=(group.zero(),))
    y = tuple(group.basis())
    b = tuple(tuple(lift_vector(c) for c in xi.coords) for xi in x)
    return SdpWitness(m=group.rank, b=b, y=y)


def verify_sdp_witness(group, a: Sequence[GroupRingElt], x: Sequence, w: SdpWitness) -> Verdict:
    """Exact check of both witness equations; never raises on bad data."""
    n = len(x)
    if len(a) != n or len(w.b) != n or len(w.y) != w.m:
        return Verdict(False, "shape")
    for row in w.b:
        if len(row) != w.m:
            return Verdict(False, "shape")
        for entry in row:
            if not entry.is_positive():
                return Verdict(False, "coefficient_not_positive")
    for yj in w.y:
        if not group.cone_contains(yj):
            return Verdict(False, "target_not_in_cone")
    for i in range(n):
        total = group.zero()
        for j in range(w.m):
            total = total + w.b[i][j] * w.y[j]
        if total != x[i]:
            return Verdict(False, f"decomposition_mismatch_row_{i}")
    space = group.space
    for j in range(w.m):
        col_sum = GroupRingElt.zero(space.parent)
        for i in range(n):
            col_sum = col_sum + a[i] * w.b[i][j]
        if not project_pi(col_sum, space).is_zero():
            return Verdict(False, f"column_sum_nonzero_{j}")
    return Verdict(True)


def unperforation_witness(group: SimplicialGroup, a: GroupRingElt, x: GammaVector) -> UnperfWitness:
    """Decomposition of x with projected products a*b_j nonnegative.

    Splits x into positive and negative parts and runs the zero-relation
    witness on a*x+ - a*x- - (a*x) = 0.
    """
    if not a.is_positive():
        raise NotPositive("coefficient must lie in the positive cone of the group ring")
    ax = a * x
    if not group.cone_contains(ax):
        raise ProductNotInCone("a*x must lie in the cone")
    xp = x.positive_part()
    xn = x.negative_part()
    w = sdp_witness(
        group,
        [a, -a, -GroupRingElt.one(group.space.parent)],
        [xp, xn, ax],
    )
    b = tuple(w.b[0][j] - w.b[1][j] for j in range(w.m))
    return UnperfWitness(m=w.m, b=b, y=w.y)


def verify_unperforation_witness(group, a: GroupRingElt, x, w: UnperfWitness) -> Verdict:
    if len(w.b) != w.m or len(w.y) != w.m:
        return Verdict(False, "shape")
    for yj in w.y:
        if not group.cone_contains(yj):
            return Verdict(False, "target_not_in_cone")
    total = group.zero()
    for bj, yj in zip(w.b, w.y):
        total = total + bj * yj
    if total != x:
        return Verdict(False, "decomposition_mismatch")
    space = group.space
    for j, bj in enumerate(w.b):
        if not project_pi(a * bj, space).is_positive():
            return Verdict(False, f"projected_product_negative_{j}")
    return Verdict(True)


def search_unperforation_witness_m1(
    group: SimplicialGroup,
    a: GroupRingElt,
    x: GammaVector,
    bound: int | None = None,
    budget: int = 10_000_000,
) -> UnperfWitness | None:
    """Exhaustive bounded search for a single-term witness x = b*y.

    Coefficients of b and entries of y range over a box bounded by the
    largest absolute coefficient in the instance plus two.  Since b acts on
    each coordinate independently, candidates for y are enumerated per
    coordinate.  This is a desk-scale certificate: a None result refutes
    witnesses inside the box only.
    """
    if bound is None:
        bound = max(a.max_abs_coeff(), x.max_abs_coeff()) + 2
    G = group.space.parent
    space = group.space
    nc = space.num_cosets
    b_count = (2 * bound + 1) ** G.order
    y_count = (bound + 1) ** nc
    if b_count * max(1, group.rank) * y_count > budget:
        raise ValueError(
            f"search space {b_count * max(1, group.rank) * y_count} exceeds "
            f"budget {budget}; reduce the instance or raise the budget"
        )
    targets = [list(c.coeffs) for c in x.coords]
    for b_coeffs in product(range(-bound, bound + 1), repeat=G.order):
        b = GroupRingElt(G, dict(enumerate(b_coeffs)))
        if not project_pi(a * b, space).is_positive():
            continue
        action = [[0] * nc for _ in range(nc)]
        for g, k in b.coeffs.items():
            for c in range(nc):
                action[space.act(g, c)][c] += k
        solution = []
        for target in targets:
            found = None
            for y_vals in product(range(bound + 1), repeat=nc):
                if all(
                    sum(action[d][c] * y_vals[c] for c in range(nc)) == target[d]
                    for d in range(nc)
                ):
                    found = y_vals
                    break
            if found is None:
                break
            solution.append(list(found))
        else:
            y = group.element(solution)
            return UnperfWitness(m=1, b=(b,), y=(y,))
    return None
