import pytest
from hypothesis import given

from blc.terms import (
    Abs,
    App,
    Index,
    ParseError,
    TrailingBits,
    Truncated,
    decode,
    encode,
    is_closed,
    max_free_index,
    parse_text,
    render,
    size,
)

from conftest import term_strategy

IDENTITY = Abs(Index(1))
K = Abs(Abs(Index(2)))
SELF_APPLY = Abs(App(Index(1), Index(1)))


@pytest.mark.parametrize(
    "term,bits",
    [
        (Index(1), "10"),
        (Index(4), "11110"),
        (IDENTITY, "0010"),
        (K, "0000110"),
        (SELF_APPLY, "00011010"),
        (App(IDENTITY, IDENTITY), "0100100010"),
        (Abs(Abs(App(Index(2), Index(1)))), "00000111010"),
    ],
)
def test_encode_golden(term, bits):
    assert encode(term) == bits
    assert size(term) == len(bits)
    assert decode(bits) == term


def test_size_splits_by_node_kind():
    # index i costs i + 1, each abstraction or application adds 2
    assert size(Index(9)) == 10
    assert size(Abs(Index(9))) == 12
    assert size(App(Index(9), Index(1))) == 14


def test_no_terms_below_size_two():
    assert size(Index(1)) == 2  # the smallest term there is


@pytest.mark.parametrize("bad", ["", "1", "0", "00", "01", "001", "0111", "010010"])
def test_decode_truncated(bad):
    with pytest.raises(Truncated):
        decode(bad)


@pytest.mark.parametrize("bad", ["100", "00101", "0010" + "0010"])
def test_decode_trailing(bad):
    with pytest.raises(TrailingBits):
        decode(bad)


def test_decode_rejects_other_characters():
    with pytest.raises(ValueError):
        decode("0a10")


def test_index_starts_at_one():
    with pytest.raises(ValueError):
        Index(0)


@pytest.mark.parametrize(
    "term,expected",
    [
        (Index(3), 3),
        (IDENTITY, 0),
        (Abs(Index(2)), 1),
        (Abs(Abs(App(Index(1), Index(3)))), 1),
        (App(Index(2), Abs(Index(4))), 3),
    ],
)
def test_max_free_index(term, expected):
    assert max_free_index(term) == expected
    assert is_closed(term) == (expected == 0)


def test_max_free_index_agrees_with_set_of_free_indices():
    # independent recursive computation of the whole free-index set
    def free(term, depth=0):
        if type(term) is Index:
            return {term.i - depth} if term.i > depth else set()
        if type(term) is Abs:
            return free(term.body, depth + 1)
        return free(term.fun, depth) | free(term.arg, depth)

    samples = [
        IDENTITY,
        K,
        Index(5),
        Abs(App(Index(3), Abs(Index(1)))),
        App(Abs(Index(2)), App(Index(1), Index(4))),
    ]
    for term in samples:
        indices = free(term)
        assert max_free_index(term) == (max(indices) if indices else 0)


@pytest.mark.parametrize(
    "term,text",
    [
        (IDENTITY, "\\1"),
        (App(Index(1), Index(2)), "(1 2)"),
        (SELF_APPLY, "\\(1 1)"),
        (Abs(Abs(App(App(Index(2), Index(1)), Index(3)))), "\\\\((2 1) 3)"),
    ],
)
def test_render_golden(term, text):
    assert render(term) == text
    assert parse_text(text) == term


def test_parse_ignores_whitespace():
    assert parse_text(" ( 1   2 ) ") == App(Index(1), Index(2))
    assert parse_text("\\ \\ 2") == K


@pytest.mark.parametrize(
    "bad",
    ["", "()", "(1 2", "1 2", "\\", "(1 2))", "0", "x", "(1)", "\\0"],
)
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_text(bad)


def test_parse_error_has_position():
    with pytest.raises(ParseError) as err:
        parse_text("(1 x)")
    assert err.value.position == 3


def test_codec_bijection_exhaustive(codes_by_size):
    # every string that decodes must re-encode to itself
    for n in range(13):
        for bits, _ in codes_by_size[n]:
            assert encode(decode(bits)) == bits


def test_deeply_nested_terms_are_fine():
    term = Index(1)
    for _ in range(5000):
        term = Abs(term)
    bits = encode(term)
    assert size(term) == 2 + 2 * 5000
    assert decode(bits) == term
    assert max_free_index(term) == 0
    assert parse_text(render(term)) == term


@given(term_strategy)
def test_codec_round_trip(term):
    bits = encode(term)
    assert len(bits) == size(term)
    assert decode(bits) == term


@given(term_strategy)
def test_text_round_trip(term):
    assert parse_text(render(term)) == term
