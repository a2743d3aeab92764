import pytest
from hypothesis import given, strategies as st

from hankellab import (
    AvoidingSet,
    EventuallyPeriodic,
    contains,
    normalize,
    parse_set_literal,
    render_set_literal,
    shift,
)


class TestAvoidingSet:
    def test_residues_sorted_and_deduped(self):
        s = AvoidingSet(10, (8, 2, 8, 4))
        assert s.residues == (2, 4, 8)

    def test_empty_residues_allowed(self):
        assert AvoidingSet(7).residues == ()

    def test_modulus_lower_bound(self):
        with pytest.raises(ValueError, match="modulus must be >= 2"):
            AvoidingSet(1, (1,))

    def test_residue_range_checked(self):
        with pytest.raises(ValueError, match="residue 0"):
            AvoidingSet(5, (0,))
        with pytest.raises(ValueError, match="residue 6"):
            AvoidingSet(5, (6,))

    def test_zero_class_spelled_as_modulus(self):
        s = AvoidingSet(3, (3,))
        assert 3 in s and 6 in s and 9 in s
        assert 1 not in s and 2 not in s

    def test_membership(self):
        s = AvoidingSet(10, (2, 8))
        assert [k for k in range(1, 13) if k in s] == [2, 8, 12]

    def test_contains_rejects_nonpositive(self):
        with pytest.raises(ValueError, match="height must be positive"):
            contains(AvoidingSet(4, (2,)), 0)

    def test_str_is_literal(self):
        assert str(AvoidingSet(10, (2, 8))) == "10:2,8"
        assert str(AvoidingSet(4)) == "4:"


@given(
    m=st.integers(2, 20),
    k=st.integers(1, 200),
    data=st.data(),
)
def test_contains_depends_only_on_residue(m, k, data):
    residues = data.draw(st.sets(st.integers(1, m)))
    s = AvoidingSet(m, residues)
    assert contains(s, k) == contains(s, k + m)


class TestShift:
    def test_shift_wraps_into_residue_range(self):
        s = AvoidingSet(10, (2, 8))
        assert shift(s, -2).residues == (6, 10)
        assert shift(s, 2).residues == (4, 10)

    def test_shift_by_modulus_is_identity(self):
        s = AvoidingSet(6, (1, 4))
        assert shift(s, 6) == s

    @given(
        m=st.integers(2, 15),
        t=st.integers(-30, 30),
        data=st.data(),
    )
    def test_shift_roundtrip(self, m, t, data):
        residues = data.draw(st.sets(st.integers(1, m)))
        s = AvoidingSet(m, residues)
        assert shift(shift(s, t), -t) == s

    @given(m=st.integers(2, 15), t=st.integers(-30, 30), k=st.integers(1, 60), data=st.data())
    def test_shift_moves_membership(self, m, t, k, data):
        # k is forbidden for the shifted set iff k - t is for the original.
        residues = data.draw(st.sets(st.integers(1, m)))
        s = AvoidingSet(m, residues)
        reference = contains(s, ((k - t - 1) % m) + 1)
        assert contains(shift(s, t), k) == reference


class TestEventuallyPeriodic:
    def test_rejects_empty_period(self):
        with pytest.raises(ValueError, match="nonempty"):
            EventuallyPeriodic((), ())

    def test_rejects_repeated_block(self):
        with pytest.raises(ValueError, match="repeats a shorter block"):
            EventuallyPeriodic((), (1, 0, 1, 0))

    def test_rejects_rollable_preperiod(self):
        with pytest.raises(ValueError, match="normalize first"):
            EventuallyPeriodic((2, 1), (0, 1))

    def test_expand(self):
        ep = EventuallyPeriodic((9,), (1, 2))
        assert ep.expand(0) == []
        assert ep.expand(6) == [9, 1, 2, 1, 2, 1]
        with pytest.raises(ValueError):
            ep.expand(-1)

    def test_render(self):
        assert EventuallyPeriodic((), (1, 0, -1)).render() == "(1,0,-1)*"
        assert EventuallyPeriodic((1,), (0,)).render() == "(1 | 0)*"

    def test_parse_forms(self):
        assert EventuallyPeriodic.parse("(1,0,-1)*") == EventuallyPeriodic((), (1, 0, -1))
        assert EventuallyPeriodic.parse(" (1 | 0)* ") == EventuallyPeriodic((1,), (0,))

    def test_parse_normalizes(self):
        assert EventuallyPeriodic.parse("(1,0,1,0)*") == EventuallyPeriodic((), (1, 0))

    def test_parse_rejects_garbage(self):
        for bad in ("1,0", "()*", "(1,0)", "(1|2|3)*"):
            with pytest.raises(ValueError):
                EventuallyPeriodic.parse(bad)


values = st.integers(-3, 3)


@given(
    pre=st.lists(values, max_size=5),
    per=st.lists(values, min_size=1, max_size=6),
    count=st.integers(0, 40),
)
def test_normalize_preserves_the_sequence(pre, per, count):
    reference = list(pre) + [per[i % len(per)] for i in range(count)]
    assert normalize(pre, per).expand(len(pre) + count) == reference[: len(pre) + count]


@given(
    pre=st.lists(values, max_size=5),
    per=st.lists(values, min_size=1, max_size=6),
)
def test_normalize_is_canonical(pre, per):
    first = normalize(pre, per)
    # Re-normalizing any re-rolled presentation gives the same value.
    rolled = normalize(list(pre) + list(per), list(per))
    assert rolled == first


@given(
    pre=st.lists(values, max_size=4),
    per=st.lists(values, min_size=1, max_size=5),
)
def test_render_parse_roundtrip(pre, per):
    ep = normalize(pre, per)
    assert EventuallyPeriodic.parse(ep.render()) == ep


class TestSetLiteral:
    def test_parse_with_residues(self):
        assert parse_set_literal("10:2,8") == AvoidingSet(10, (2, 8))

    def test_parse_empty_residues(self):
        assert parse_set_literal("7:") == AvoidingSet(7)

    def test_render_roundtrip(self):
        for s in (AvoidingSet(2, (2,)), AvoidingSet(5), AvoidingSet(14, (1, 5, 8, 12))):
            assert parse_set_literal(render_set_literal(s)) == s

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("", "position 0"),
            ("abc", "position 0"),
            ("1:1", "modulus must be >= 2"),
            ("5:0", "residue 0 outside"),
            ("5:6", "residue 6 outside"),
            ("5:2,x", "bad residue"),
            ("5:2,,3", "bad residue"),
        ],
    )
    def test_parse_errors_carry_position(self, text, fragment):
        with pytest.raises(ValueError, match=fragment):
            parse_set_literal(text)
