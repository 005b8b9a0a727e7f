"""Maximal m-rigid objects of type A higher cluster categories and their gentle algebras.

Arcs are ``(i, j)`` pairs of 1-based polygon vertices. A quiver is
``(vertex_count, [(id, source, target), ...], [(a, b), ...])`` where a
relation ``(a, b)`` says the path ``a`` then ``b`` is zero.
"""

from ._mrigid import (
    InputError,
    PreconditionError,
    ResourceError,
    ag_invariant,
    all_diagonals,
    cluster_profile,
    enumerate,
    ext_nonzero,
    gorenstein_dimension,
    is_connected,
    is_end_algebra,
    is_gentle,
    is_m_rigid,
    is_maximal,
    quiver_isomorphic,
    reconstruct,
    render_svg,
    satisfies_criterion,
    tiling_algebra,
    vertex_count,
)

__all__ = [
    "InputError",
    "PreconditionError",
    "ResourceError",
    "ag_invariant",
    "all_diagonals",
    "cluster_profile",
    "enumerate",
    "ext_nonzero",
    "gorenstein_dimension",
    "is_connected",
    "is_end_algebra",
    "is_gentle",
    "is_m_rigid",
    "is_maximal",
    "quiver_isomorphic",
    "reconstruct",
    "render_svg",
    "satisfies_criterion",
    "tiling_algebra",
    "vertex_count",
]
