import pytest

from decat.core.cartan import GraphData, Weight, build_cartan
from decat.qlaurent import QLaurent, qint
from decat.udot import (
    Generator,
    UdotTerm,
    a,
    e,
    f,
    normalize_idempotents,
    parse_combination,
    parse_letter,
    parse_term,
)

SL2 = build_cartan(GraphData(("1",)))
A2 = build_cartan(GraphData(("1", "2"), (("1", "2"),)))


def test_parse_term():
    term = parse_term("E1^(2) F2 a[w=1,0;v=0,0]")
    assert term.word == (e(1, 2), f(2), a(Weight((1, 0), (0, 0))))
    assert str(term) == "E1^(2) F2 a[w=1,0;v=0,0]"
    assert str(parse_term("")) == "1"
    assert str(parse_term("F1", scalar=qint(2))) == "(q + q^-1) F1"


@pytest.mark.parametrize("token", ["G1", "E", "E1^2", "a[1,0]", "e1"])
def test_malformed_letters(token):
    with pytest.raises(ValueError):
        parse_letter(token)


def test_generator_validation():
    with pytest.raises(ValueError):
        Generator("E", "1", 0)
    with pytest.raises(ValueError):
        Generator("H", "1")
    assert e(1, 2).root_shift(A2) == (-2, 0)
    assert f("2").root_shift(A2) == (0, 1)


def test_term_algebra():
    product = UdotTerm.of(e(1), scalar=qint(2)) * UdotTerm.of(f(1), scalar=2)
    assert product.word == (e(1), f(1))
    assert product.scalar == 2 * qint(2)
    assert (-product).scalar == -2 * qint(2)
    assert product.generators == (e(1), f(1))


def test_parse_combination():
    terms = parse_combination("- E1 F1 a[w=1;v=0] + F1 E1 a[w=1;v=0]")
    assert [t.scalar for t in terms] == [QLaurent.constant(-1), QLaurent.constant(1)]
    for bad in ["E1 + + F1", "E1 -", "+ E1", ""]:
        with pytest.raises(ValueError):
            parse_combination(bad)


def test_normalize_idempotents():
    lam = Weight((2,), (1,))
    normalized = normalize_idempotents(UdotTerm.of(a(lam), e(1), f(1), a(lam)), SL2)
    assert normalized.source == lam
    assert normalized.target == lam
    assert [(str(step.source), str(step.target)) for step in normalized.flow] == [
        ("w=2;v=1", "w=2;v=2"),
        ("w=2;v=2", "w=2;v=1"),
    ]
    assert normalize_idempotents(UdotTerm.of(e(1), f(1)), SL2).source is None
    assert normalize_idempotents(UdotTerm.of(a(lam), e(1), a(lam)), SL2) is None
    with pytest.raises(ValueError):
        normalize_idempotents(UdotTerm.of(a(Weight((1, 0), (0, 0)))), SL2)
