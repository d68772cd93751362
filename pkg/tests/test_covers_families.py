"""Tests for branched cover bounds and pretzel links."""

import pytest

from app.bounds.covers import cover_bound
from app.bounds.families import pretzel_bound, pretzel_spine
from app.common.errors import CoverDegreeError, PretzelError, TooShortError
from app.links.two_bridge import normalize


class TestCoverBound:
    """Tests for meridian-cyclic branched cover bounds."""

    @pytest.mark.parametrize("d", range(2, 11))
    def test_figure_eight(self, d):
        """Test K(5,2) gives 3d (r = 1, upper 2)."""
        bound = cover_bound(normalize(5, 2), d)
        assert bound.r == 1
        assert bound.upper_thm1 == 2
        assert bound.value == 3 * d

    @pytest.mark.parametrize("d", range(2, 11))
    def test_whitehead(self, d):
        """Test K(8,3) gives 7d (r = 3, upper 4)."""
        bound = cover_bound(normalize(8, 3), d)
        assert bound.r == 3
        assert bound.upper_thm1 == 4
        assert bound.value == 7 * d

    def test_examples(self):
        """Test single values."""
        assert cover_bound(normalize(5, 2), 3).value == 9
        assert cover_bound(normalize(8, 3), 2).value == 14
        assert cover_bound(normalize(13, 5), 2).value == 14

    def test_decomposition(self):
        """Test lifted and disk vertices add up to the value."""
        bound = cover_bound(normalize(121, 36), 4)
        assert bound.lifted_vertices == 4 * 15
        assert bound.disk_vertices == 4
        assert bound.value == bound.lifted_vertices + bound.disk_vertices

    def test_divisible_by_degree(self):
        """Test value mod d = 0 across links and degrees."""
        for p, q in [(5, 2), (8, 3), (13, 5), (121, 36), (10, 3), (17, 7)]:
            for d in range(2, 8):
                assert cover_bound(normalize(p, q), d).value % d == 0

    def test_rejects_trivial_cover(self):
        """Test d < 2 is rejected."""
        with pytest.raises(CoverDegreeError):
            cover_bound(normalize(5, 2), 1)
        with pytest.raises(CoverDegreeError):
            cover_bound(normalize(5, 2), 0)

    def test_rejects_torus(self):
        """Test n = 1 is rejected."""
        with pytest.raises(TooShortError):
            cover_bound(normalize(7, 1), 2)


class TestPretzel:
    """Tests for pretzel link bounds."""

    @pytest.mark.parametrize(
        "twists, expected",
        [((2, 2), 10), ((-2, 3, -2), 17), ((3, 1, 3), 19)],
    )
    def test_bound(self, twists, expected):
        """Test |a_1| + 2 sum|a_i| + |a_n| + n - 4."""
        assert pretzel_bound(twists) == expected

    def test_spine_summary(self):
        """Test tube and disk counts."""
        spine = pretzel_spine((-2, 3, -2))
        assert spine.twists == [-2, 3, -2]
        assert spine.tubes == 5
        assert spine.disks == 3
        assert spine.vertices == 17

    @pytest.mark.parametrize(
        "twists",
        [(2,), (), (2, 0, 2), (1, 3, 2), (2, 3, -1)],
    )
    def test_rejects(self, twists):
        """Test magnitude constraints."""
        with pytest.raises(PretzelError):
            pretzel_bound(twists)
