"""Factoring a positive map through a fresh simplicial group with the same kernel.

Given a positive map g1 out of a simplicial group over a normal stabilizer,
each integer kernel generator is pushed through a decomposition witness in
the target; iterating over all generators yields a factorization
g1 = g2 * g12 with ker g12 = ker g1.  Both postconditions are re-verified
exactly before anything is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DeltaNotNormal,
    InternalVerificationFailed,
    NotPositiveMap,
    TargetLacksSdp,
)
from .gamma_maps import (
    GammaLinearMap,
    identity_map,
    is_positive_map,
    kernels_equal,
    map_apply,
    map_compose,
    map_kernel,
    map_new,
)
from .group_ring import project_pi
from .ordered_simplicial import GammaVector, SimplicialGroup
from .sdp_engine import sdp_witness


@dataclass(frozen=True)
class ShenFactorization:
    middle: SimplicialGroup
    g12: GammaLinearMap
    g2: GammaLinearMap


def _single_step(g_h: GammaLinearMap, w: GammaVector) -> tuple[GammaLinearMap, GammaLinearMap]:
    """Factor g_h so that the single kernel element w dies in the first leg."""
    H = g_h.source
    target = g_h.target
    space = H.space
    a = w.lifts()
    x = list(g_h.columns)
    witness = sdp_witness(target, a, x)
    middle = SimplicialGroup(space, witness.m)
    cols_12 = []
    for i in range(H.rank):
        coords = [project_pi(witness.b[i][j], space) for j in range(witness.m)]
        cols_12.append(middle.element(coords))
    g_hm = map_new(H, middle, cols_12)
    g_m = map_new(middle, target, list(witness.y))
    return g_hm, g_m


def shen_step(g1: GammaLinearMap) -> ShenFactorization:
    """Factor g1 = g2 * g12 with ker g12 = ker g1, both legs positive."""
    src = g1.source
    tgt = g1.target
    if not isinstance(tgt, SimplicialGroup) or tgt.space != src.space:
        raise TargetLacksSdp(
            "target must be a simplicial group over the same coset space"
        )
    if not src.space.is_normal:
        raise DeltaNotNormal("the basis stabilizer must be normal")
    if not is_positive_map(g1):
        raise NotPositiveMap("g1 must be a positive map")

    generators = map_kernel(g1)
    g_1h = identity_map(src)
    g_h = g1
    for z in generators:
        w = map_apply(g_1h, z)
        g_hm, g_m = _single_step(g_h, w)
        g_1h = map_compose(g_hm, g_1h)
        g_h = g_m

    if map_compose(g_h, g_1h) != g1:
        raise InternalVerificationFailed("composition does not reproduce g1")
    if not kernels_equal(g_1h, g1):
        raise InternalVerificationFailed("kernel lattices differ")
    return ShenFactorization(middle=g_1h.target, g12=g_1h, g2=g_h)
