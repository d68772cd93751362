"""Tests for the closed-form complexity bounds."""

import pytest
from pydantic import ValidationError as PydanticValidationError

from app.bounds.complexity import (
    V3,
    BoundReport,
    complexity_interval,
    lemma1_bound,
    lower_bound,
    report_for,
    sakuma_weeks_bound,
    sakuma_weeks_gap,
    theorem1_bound,
    torus_report,
)
from app.bounds.families import cor2_family, cor2_fraction, cor2_members
from app.common.errors import (
    LowerBoundUnavailableError,
    NonCanonicalError,
    TooShortError,
    ValidationError,
)
from app.links.continued_fraction import (
    ContinuedFraction,
    cf_expand,
    cf_value,
    iter_canonical,
    reverse,
)
from app.links.two_bridge import normalize


def cf(*entries):
    return ContinuedFraction(entries)


class TestUpperBounds:
    """Tests for Lemma 1, Theorem 1 and Sakuma-Weeks values."""

    @pytest.mark.parametrize(
        "entries, lemma1, thm1, sw",
        [
            ((2, 2), 2, 2, 2),
            ((3, 2, 1, 3, 3), 16, 15, 18),
            ((2, 1, 2), 5, 4, 4),
        ],
    )
    def test_examples(self, entries, lemma1, thm1, sw):
        """Test values computed by hand."""
        fraction = cf(*entries)
        assert lemma1_bound(fraction) == lemma1
        assert theorem1_bound(fraction) == thm1
        assert sakuma_weeks_bound(fraction) == sw

    def test_gap(self, worked_example):
        """Test the Sakuma-Weeks gap of the worked example."""
        assert sakuma_weeks_gap(worked_example) == 3
        assert sakuma_weeks_gap(cf(2, 1, 1, 2)) == 0

    def test_rejects_torus(self):
        """Test n = 1 is rejected by every upper bound."""
        for bound in (lemma1_bound, theorem1_bound, sakuma_weeks_bound):
            with pytest.raises(TooShortError):
                bound(cf(5))

    def test_rejects_non_canonical(self):
        """Test an end entry of 1 is rejected."""
        with pytest.raises(NonCanonicalError):
            theorem1_bound(cf(1, 2, 2))


class TestInequalities:
    """Exhaustive checks over every canonical cf with sum <= 14."""

    @pytest.fixture(scope="class")
    def fractions(self):
        return list(iter_canonical(14))

    def test_theorem1_is_lemma1_minus_ones(self, fractions):
        """Test theorem1 = lemma1 - #{a_i = 1}."""
        for fraction in fractions:
            assert theorem1_bound(fraction) == lemma1_bound(fraction) - fraction.ones
            assert theorem1_bound(fraction) <= lemma1_bound(fraction)

    def test_theorem1_below_sakuma_weeks(self, fractions):
        """Test theorem1 <= sw with equality iff every a_i <= 2."""
        for fraction in fractions:
            gap = sakuma_weeks_gap(fraction)
            assert gap >= 0
            assert gap == fraction.total - (2 * fraction.n - fraction.ones)
            assert (gap == 0) == all(a <= 2 for a in fraction)

    def test_reversal_invariance(self, fractions):
        """Test theorem1 is invariant under reversal."""
        for fraction in fractions:
            assert theorem1_bound(reverse(fraction)) == theorem1_bound(fraction)

    def test_interval_non_empty(self, fractions):
        """Test lower <= upper for every hyperbolic link."""
        for fraction in fractions:
            link = normalize(*cf_value(fraction))
            assert link.cf == fraction
            lower, _ = lower_bound(link)
            assert lower <= theorem1_bound(fraction)


class TestLowerBound:
    """Tests for the volume lower bound."""

    @pytest.mark.parametrize("p, q, expected", [(5, 2, 2), (8, 3, 4), (13, 5, 6)])
    def test_integer_part(self, p, q, expected):
        """Test ceil(max(2, 2n - 2.6667))."""
        assert lower_bound(normalize(p, q))[0] == expected

    def test_real_part(self):
        """Test the real part is v3 times the max."""
        assert lower_bound(normalize(5, 2))[1] == pytest.approx(2 * V3)
        assert lower_bound(normalize(13, 5))[1] == pytest.approx(V3 * (8 - 2.6667))

    def test_simplifies_to_2n_minus_2(self):
        """Test the integer part equals max(2, 2n - 2)."""
        for fraction in iter_canonical(12):
            link = normalize(*cf_value(fraction))
            assert lower_bound(link)[0] == max(2, 2 * link.n - 2)

    def test_torus_unavailable(self):
        """Test non-hyperbolic links have no lower bound."""
        with pytest.raises(LowerBoundUnavailableError):
            lower_bound(normalize(7, 1))


class TestComplexityInterval:
    """Tests for BoundReport assembly."""

    def test_figure_eight(self):
        """Test K(5,2) is determined exactly."""
        report = complexity_interval(normalize(5, 2))
        assert report.cf == [2, 2]
        assert (report.lower, report.upper_thm1, report.exact) == (2, 2, 2)
        assert report.hyperbolic is True

    def test_whitehead(self):
        """Test K(8,3) is determined exactly."""
        report = complexity_interval(normalize(8, 3))
        assert (report.lower, report.upper_thm1, report.exact) == (4, 4, 4)

    def test_cor2_n4(self):
        """Test K(13,5) = C(2,1,1,2)."""
        report = complexity_interval(normalize(13, 5))
        assert report.cf == [2, 1, 1, 2]
        assert (report.lower, report.upper_thm1, report.exact) == (6, 6, 6)

    def test_worked_example(self):
        """Test K(121,36) gives the interval [8, 15]."""
        report = complexity_interval(normalize(121, 36))
        assert report.interval == (8, 15)
        assert report.upper_lemma1 == 16
        assert report.upper_sw == 18
        assert report.exact is None
        assert report.link == normalize(121, 36)

    def test_rejects_torus(self):
        """Test n = 1 is rejected."""
        with pytest.raises(TooShortError):
            complexity_interval(normalize(7, 1))

    def test_json_shape(self):
        """Test the flat JSON object."""
        data = complexity_interval(normalize(5, 2)).to_dict()
        assert list(data) == [
            "p",
            "q",
            "cf",
            "n",
            "upper_thm1",
            "upper_lemma1",
            "upper_sw",
            "lower",
            "lower_volume",
            "exact",
            "hyperbolic",
        ]
        assert data["lower_volume"] == round(2 * V3, 6)

    def test_validator_rejects_inconsistent_report(self):
        """Test the report checks its own invariants."""
        with pytest.raises(PydanticValidationError):
            BoundReport(
                p=5,
                q=2,
                cf=[2, 2],
                n=2,
                upper_thm1=3,
                upper_lemma1=2,
                upper_sw=2,
                lower=2,
                lower_volume=None,
                exact=None,
                hyperbolic=True,
            )


class TestTorusReport:
    """Tests for rows of non-hyperbolic links."""

    def test_torus_report(self):
        """Test uppers are unset and lower is 0."""
        report = torus_report(normalize(7, 1))
        assert report.cf == [7]
        assert report.upper_thm1 is None
        assert report.lower == 0
        assert report.lower_volume is None
        assert report.hyperbolic is False

    def test_rejects_hyperbolic(self):
        """Test torus_report refuses n >= 2."""
        with pytest.raises(ValidationError):
            torus_report(normalize(5, 2))

    def test_report_for_dispatches(self):
        """Test report_for picks the right builder."""
        assert report_for(normalize(7, 1)).upper_thm1 is None
        assert report_for(normalize(5, 2)).exact == 2


class TestCor2Family:
    """Tests for the family [2,1,...,1,2]."""

    @pytest.mark.parametrize("n, p, q", [(2, 5, 2), (3, 8, 3), (4, 13, 5), (5, 21, 8)])
    def test_members(self, n, p, q):
        """Test the first members."""
        link, exact = cor2_family(n)
        assert (link.p, link.q) == (p, q)
        assert exact == 2 * n - 2

    def test_bounds_meet_up_to_50(self):
        """Test upper = lower = 2n - 2 for n = 2..50."""
        for n in range(2, 51):
            link, exact = cor2_family(n)
            assert link.cf == cor2_fraction(n)
            assert theorem1_bound(link.cf) == exact
            assert lower_bound(link)[0] == exact
            assert complexity_interval(link).exact == exact

    def test_fibonacci_recurrence(self):
        """Test p and q follow the Fibonacci recurrence."""
        pairs = [cor2_family(n)[0] for n in range(2, 51)]
        for a, b, c in zip(pairs, pairs[1:], pairs[2:]):
            assert c.p == a.p + b.p
            assert c.q == a.q + b.q
        for link in pairs:
            assert cf_expand(link.p, link.q) == link.cf

    def test_members_up_to(self):
        """Test cor2_members stops at max_p."""
        assert [link.p for link, _ in cor2_members(21)] == [5, 8, 13, 21]
        assert list(cor2_members(4)) == []

    def test_rejects_short(self):
        """Test n < 2 is rejected."""
        with pytest.raises(TooShortError):
            cor2_family(1)
