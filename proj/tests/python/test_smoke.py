import pytest

import mrigid


def test_counts():
    assert mrigid.vertex_count(3, 2) == 10
    assert len(mrigid.all_diagonals(3, 2)) == 15
    assert len(mrigid.enumerate(3, 1, connected=True)) == 6


def test_rigidity_and_criterion():
    arcs = [(1, 4), (1, 2), (4, 5)]
    assert mrigid.is_m_rigid(3, 1, arcs)
    assert mrigid.is_maximal(3, 1, arcs)
    assert mrigid.is_connected(3, 1, arcs)
    assert mrigid.satisfies_criterion(3, 1, arcs)
    assert not mrigid.is_m_rigid(4, 1, [(1, 2), (1, 6), (2, 5), (5, 6)])


def test_ext():
    # Adjacent short arcs: the shifted arc has an Ext^m into the original.
    assert mrigid.ext_nonzero(3, 2, (3, 5), (1, 3), 2)
    assert not mrigid.ext_nonzero(3, 2, (3, 5), (1, 3), 1)
    with pytest.raises(ValueError):
        mrigid.ext_nonzero(3, 2, (1, 2), (4, 9), 1)


def test_algebra_round_trip():
    for arcs in mrigid.enumerate(4, 2, connected=True):
        q = mrigid.tiling_algebra(mrigid.vertex_count(4, 2), arcs)
        assert mrigid.is_gentle(q)
        assert mrigid.is_end_algebra(q, 2)
        points, rebuilt = mrigid.reconstruct(q, m=2)
        assert points == mrigid.vertex_count(4, 2)
        assert mrigid.quiver_isomorphic(mrigid.tiling_algebra(points, rebuilt), q)


def test_invariants():
    q = mrigid.tiling_algebra(8, [(1, 4), (1, 2), (4, 5), (4, 7)])
    pairs = mrigid.ag_invariant(q)
    assert sum(b for _, b in pairs) == len(q[1])
    assert isinstance(mrigid.gorenstein_dimension(q), int)
    single = (1, [], [])
    assert mrigid.gorenstein_dimension(single) == 0


def test_profile_and_render():
    arcs = mrigid.enumerate(4, 1, connected=True)[0]
    profile = mrigid.cluster_profile(4, 1, arcs)
    assert (profile["x"] - 4) % 2 == 0
    svg = mrigid.render_svg(8, arcs, m=1)
    assert svg.startswith("<svg") or svg.startswith("<?xml")


def test_errors():
    with pytest.raises(mrigid.InputError):
        mrigid.tiling_algebra(4, [(1, 9)])
    with pytest.raises(mrigid.PreconditionError):
        mrigid.reconstruct((2, [], []))
    with pytest.raises(mrigid.ResourceError):
        mrigid.enumerate(12, 3)
