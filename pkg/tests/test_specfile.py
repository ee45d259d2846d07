from pathlib import Path

import pytest

from supercartan.cartan import CartanSpec
from supercartan.errors import InvariantViolation, SpecSyntaxError
from supercartan.families import make_D210
from supercartan.scalar import Scalar
from supercartan.specfile import orbit_to_dot, parse_spec, parse_specfile, print_spec, print_specfile, to_dot

GOLDEN = sorted((Path(__file__).parent / "golden").glob("*.spec"))


@pytest.mark.parametrize("path", GOLDEN, ids=lambda p: p.stem)
def test_golden_round_trip(path):
    text = path.read_text(encoding="utf-8")
    assert print_specfile(parse_specfile(text)) == text


def test_golden_ratio_entry():
    text = "cartan-spec v1\nn: 2\nparity: 00\nentries:\n2 (1/2)+(1/2)*sqrt(5)\n-1 2\n"
    a = parse_spec(text)
    assert a.entries[0][1] == (1 + Scalar.sqrt(5)) / 2


def test_comments_and_blank_lines():
    text = "# leading comment\ncartan-spec v1\n\nn: 1\n# inside\nparity: 1\nentries:\n2\n"
    f = parse_specfile(text)
    assert f.spec == CartanSpec.from_rows([[2]], (1,)) and f.name is None


def test_parity_length_mismatch():
    with pytest.raises(InvariantViolation):
        parse_spec("cartan-spec v1\nn: 3\nparity: 11\nentries:\n0 1 0\n1 0 1\n0 1 0\n")


def test_row_length_mismatch():
    with pytest.raises(InvariantViolation):
        parse_spec("cartan-spec v1\nn: 2\nparity: 11\nentries:\n0 1\n1\n")


@pytest.mark.parametrize("text, line, col", [
    ("", 1, 1),
    ("cartan-spec v2\n", 1, 1),
    ("cartan-spec v1\nn: x\n", 2, 4),
    ("cartan-spec v1\nn: 2\nparity: 12\n", 3, 9),
    ("cartan-spec v1\nn: 2\nparity: 11\nentries:\n0 1\n1 zz\n", 6, 3),
    ("cartan-spec v1\nn: 2\nparity: 11\n", 4, 1),
])
def test_syntax_errors(text, line, col):
    with pytest.raises(SpecSyntaxError) as exc:
        parse_spec(text)
    assert (exc.value.line, exc.value.column) == (line, col)


def test_print_named():
    a = CartanSpec.from_rows([[0, 1], [1, 0]], (1, 1))
    assert print_spec(a, "sl(1|2)") == "cartan-spec v1\nname: sl(1|2)\nn: 2\nparity: 11\nentries:\n0 1\n1 0\n"


def test_dot_sl12():
    dot = to_dot(CartanSpec.from_rows([[0, 1], [1, 0]], (1, 1)))
    assert dot.count("⊗") == 2
    assert 'v1 -> v2 [label="1"]' in dot and 'v2 -> v1 [label="1"]' in dot


def test_dot_d210_keeps_zero_label():
    dot = to_dot(make_D210())
    assert 'v2 -> v1 [label="0"]' in dot
    assert 'v1 -> v2 [label="-1"]' in dot


def test_dot_single_vertex():
    dot = to_dot(CartanSpec.from_rows([[2]], (0,)))
    assert "->" not in dot and "◯" in dot and "white" in dot


def test_dot_deterministic():
    a = make_D210()
    assert to_dot(a) == to_dot(a)


def test_orbit_dot():
    a = CartanSpec.from_rows([[0, 1], [1, 0]], (1, 1))
    b = CartanSpec.from_rows([[0, 1], [-1, 2]], (1, 0))
    dot = orbit_to_dot([a, b], [(1, 2, 1, "odd", False), (2, 1, 1, "odd", False)])
    assert "m1 -> m2" in dot and "m2 -> m1" in dot
    assert dot.startswith("digraph") and dot.rstrip().endswith("}")
