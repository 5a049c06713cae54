import pytest
from gmpy2 import mpq

from dialgebra import (COMPLEX, RATIONAL, FileFormatError, HomDialgebra,
                       Satellite, get, ids, load, parse, save, serialize)

from conftest import DATA

MALFORMED = DATA / "malformed"

# file -> (line number, fragment of the message)
EXPECTED_ERRORS = {
    "missing_name.alg": (1, "expected 'algebra'"),
    "bad_dim.alg": (2, "dim must be an integer"),
    "zero_dim.alg": (2, "dim must be >= 1"),
    "bad_scalars.alg": (3, "rational or complex"),
    "index_range.alg": (4, "out of range"),
    "duplicate_entry.alg": (5, "duplicate left entry"),
    "zero_denominator.alg": (4, "division by zero"),
    "bad_value.alg": (4, "bad rational value"),
    "unknown_directive.alg": (4, "unknown directive"),
    "short_line.alg": (4, "takes i j k value"),
    "missing_end.alg": (5, "missing 'end'"),
    "content_after_end.alg": (5, "content after 'end'"),
    "zinbiel_right_op.alg": (5, "single product"),
    "dipterous_no_side.alg": (4, "needs a side"),
}


def test_malformed_corpus_is_big_enough():
    files = sorted(p.name for p in MALFORMED.glob("*.alg"))
    assert len(files) >= 10
    assert files == sorted(EXPECTED_ERRORS)


@pytest.mark.parametrize("name", sorted(EXPECTED_ERRORS))
def test_malformed_file_gives_line_numbered_error(name):
    lineno, fragment = EXPECTED_ERRORS[name]
    with pytest.raises(FileFormatError) as err:
        load(str(MALFORMED / name))
    assert err.value.lineno == lineno
    assert fragment in err.value.message
    assert str(err.value).startswith("line %d:" % lineno)


def test_minimal_file():
    # unlisted coefficients are zero -- for the twist map too
    A = parse("algebra tiny\ndim 1\nscalars rational\nend\n")
    assert isinstance(A, HomDialgebra)
    assert A.n == 1 and A.left.is_zero() and A.alpha.is_zero()


def test_comments_and_blank_lines():
    text = """\
# a comment
algebra c   # trailing comment
dim 2

scalars rational
left 1 1 2 1/2
end
"""
    A = parse(text)
    assert A.left.coeff(1, 1, 2) == mpq(1, 2)


def test_complex_values():
    A = parse("algebra z\ndim 1\nscalars complex\n"
              "alpha 1 1 0.5-0.25i\nend\n")
    assert A.backend == COMPLEX
    assert A.alpha.m[0][0] == 0.5 - 0.25j


def test_kind_round_trip():
    text = ("algebra d\ndim 2\nscalars rational\nkind dipterous right\n"
            "left 1 1 2 1\nright 1 1 2 1\nend\n")
    sat = parse(text)
    assert isinstance(sat, Satellite)
    assert sat.kind == "dipterous" and sat.side == "right"
    assert serialize(sat) == text.replace("algebra d", "algebra d")
    assert parse(serialize(sat)).ops.keys() == sat.ops.keys()


def test_serialize_is_canonical():
    shuffled = ("algebra s\ndim 2\nscalars rational\n"
                "right 2 1 1 3\nalpha 2 2 5\nleft 2 2 1 1\nleft 1 1 2 1\n"
                "alpha 1 1 1\nend\n")
    A = parse(shuffled)
    text = serialize(A)
    assert text.index("alpha") < text.index("left") < text.index("right")
    lines = text.splitlines()
    assert lines[-1] == "end"
    assert parse(text).left == A.left
    assert serialize(parse(text)) == text  # fixed point


@pytest.mark.parametrize("name", ids())
def test_catalog_round_trips_bit_exact(name):
    obj = get(name)
    text = serialize(obj)
    again = parse(text)
    assert serialize(again) == text
    if isinstance(obj, HomDialgebra):
        assert again.left == obj.left and again.right == obj.right
        assert again.alpha.m == obj.alpha.m
    else:
        assert again.ops.keys() == obj.ops.keys()
        for role, tab in obj.ops.items():
            assert again.ops[role] == tab
        assert again.side == obj.side


def test_save_and_load(tmp_path):
    target = tmp_path / "a.alg"
    A = get("Hd2.5")
    save(str(target), A)
    B = load(str(target))
    assert B.left == A.left and B.name == A.name


def test_unlisted_alpha_entries_are_zero():
    A = parse("algebra t\ndim 3\nscalars rational\nalpha 1 2 1\nend\n")
    assert A.alpha.m[0][1] == 1
    assert A.alpha.m[0][0] == 0 and A.alpha.m[2][2] == 0
