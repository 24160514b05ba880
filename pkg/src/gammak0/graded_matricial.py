"""Symbolic graded matricial rings over a group-ring division coefficient ring.

A descriptor lists matrix components by size and shift tuple; the base field
is a formal tag, since supports, homogeneous dimensions, class groups, and
graded isomorphism depend only on the stabilizer subgroup and the shifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DeltaMismatch
from .finite_group import CosetSpace
from .group_ring import CosetVector
from .ordered_simplicial import GammaVector, SimplicialGroup


@dataclass(frozen=True)
class MatricialComponent:
    size: int
    shifts: tuple[int, ...]

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("component size must be at least 1")
        if len(self.shifts) != self.size:
            raise ValueError("one shift per diagonal slot required")


@dataclass(frozen=True)
class MatricialRingDesc:
    space: CosetSpace
    components: tuple[MatricialComponent, ...]

    def __post_init__(self):
        order = self.space.parent.order
        for comp in self.components:
            for s in comp.shifts:
                if s < 0 or s >= order:
                    raise ValueError(f"shift {s} out of range")

    @property
    def num_components(self) -> int:
        return len(self.components)

    def describe(self) -> str:
        G = self.space.parent
        parts = []
        for comp in self.components:
            shift_names = ",".join(G.name_of(s) for s in comp.shifts)
            parts.append(f"M{comp.size}({shift_names})")
        return " (+) ".join(parts) if parts else "0"


def matricial_ring(space: CosetSpace, components: Sequence[tuple[int, Sequence[int]]]) -> MatricialRingDesc:
    comps = tuple(MatricialComponent(size=p, shifts=tuple(sh)) for p, sh in components)
    return MatricialRingDesc(space=space, components=comps)


def homog_dim(ring: MatricialRingDesc, d: int) -> int:
    """Dimension of the degree-d homogeneous component over the base field.

    Entry (k, l) of a component contributes exactly when the conjugated
    degree lands in the stabilizer subgroup.
    """
    G = ring.space.parent
    sub = set(ring.space.sub.members)
    count = 0
    for comp in ring.components:
        for gk in comp.shifts:
            for gl in comp.shifts:
                if G.mul[G.mul[gk][d]][G.inv[gl]] in sub:
                    count += 1
    return count


@dataclass(frozen=True)
class K0Data:
    """Class group of a matricial descriptor with its distinguished classes."""

    group: SimplicialGroup
    unit_class: GammaVector

    @property
    def basis_classes(self) -> tuple[GammaVector, ...]:
        return tuple(self.group.basis())


def k0_of_matricial(ring: MatricialRingDesc) -> K0Data:
    """Class data: one basis class per component; the unit class collects the
    left cosets of the inverted shifts."""
    space = ring.space
    G = space.parent
    group = SimplicialGroup(space, ring.num_components)
    coords = []
    for comp in ring.components:
        row = [0] * space.num_cosets
        for s in comp.shifts:
            row[space.elt_to_coset[G.inv[s]]] += 1
        coords.append(CosetVector(space, row))
    return K0Data(group=group, unit_class=GammaVector(group, tuple(coords)))


def right_coset_id(space: CosetSpace, g: int) -> int:
    """Canonical id of the right coset (sub)*g: the left-coset index of g^{-1}."""
    return space.elt_to_coset[space.parent.inv[g]]


def component_key(space: CosetSpace, comp: MatricialComponent) -> tuple[int, tuple[int, ...]]:
    return comp.size, tuple(sorted(right_coset_id(space, s) for s in comp.shifts))


def graded_iso(r: MatricialRingDesc, s: MatricialRingDesc) -> bool:
    """Graded isomorphism: components match up to permutation, and matched
    components have equal sizes and equal multisets of shift right-cosets."""
    if r.space != s.space:
        raise DeltaMismatch("descriptors over different coset spaces")
    keys_r = sorted(component_key(r.space, c) for c in r.components)
    keys_s = sorted(component_key(s.space, c) for c in s.components)
    return keys_r == keys_s


def component_matching(r: MatricialRingDesc, s: MatricialRingDesc) -> list[int] | None:
    """A permutation matching components with equal keys, or None."""
    if r.space != s.space:
        raise DeltaMismatch("descriptors over different coset spaces")
    remaining: dict[tuple, list[int]] = {}
    for j, comp in enumerate(s.components):
        remaining.setdefault(component_key(s.space, comp), []).append(j)
    matching = []
    for comp in r.components:
        key = component_key(r.space, comp)
        slots = remaining.get(key)
        if not slots:
            return None
        matching.append(slots.pop(0))
    return matching


def corner_descriptor(space: CosetSpace, classes: GammaVector) -> MatricialRingDesc:
    """Descriptor of the corner ring carried by a vector of projective classes.

    Coordinate i with multiplicity m at coset c contributes m diagonal slots
    whose shift is the inverse of the canonical coset representative.
    """
    G = space.parent
    comps = []
    for c in classes.coords:
        if not c.is_positive():
            raise ValueError("projective classes must be nonnegative")
        shifts: list[int] = []
        for coset, mult in enumerate(c.coeffs):
            shifts.extend([G.inv[space.reps[coset]]] * mult)
        if shifts:
            comps.append(MatricialComponent(size=len(shifts), shifts=tuple(shifts)))
    return MatricialRingDesc(space=space, components=tuple(comps))
