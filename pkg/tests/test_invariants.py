import random

import pytest
from hypothesis import given, settings, strategies as st

from slmonoid.braid import BraidWord, to_string_link
from slmonoid.corpus import TREFOIL_PD, add_kink, add_r2, apply_r3, clasp, plant_r3, random_word, trefoil
from slmonoid.invariants import (
    DELTA,
    LinkDiagram,
    PDError,
    certifies_not_unknot,
    format_pd,
    jones,
    kauffman_bracket,
    parse_pd,
    writhe,
)
from slmonoid.laurent import A, LaurentPoly, format_terms, parse_laurent
from slmonoid.stringlink import closure
from oracles import naive_bracket

UNKNOT = LinkDiagram((), 1, ())
TREFOIL_JONES = parse_laurent("-A^-16 + A^-12 + A^-4")
FIGURE_EIGHT_PD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"


def random_diagram(rng, n_max=4, length=8):
    n = rng.randint(1, n_max)
    return to_string_link(random_word(rng, n, rng.randint(0, length)))


def test_normalization():
    assert kauffman_bracket(UNKNOT) == 1
    assert kauffman_bracket(LinkDiagram((), 2, ())) == DELTA == -A**2 - A**-2
    with pytest.raises(PDError):
        kauffman_bracket(LinkDiagram((), 0, ()))


def test_trefoil_values():
    T = trefoil()
    assert kauffman_bracket(T) == naive_bracket(T.crossings)
    assert kauffman_bracket(T) == parse_laurent("A^-7 - A^-3 - A^5")
    assert jones(T) == TREFOIL_JONES
    assert format_terms(jones(T).substitute_t().items(), "t") == "t + t^3 - t^4"
    assert certifies_not_unknot(T)


def test_mirror_trefoil():
    mirror = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
    assert jones(mirror) == parse_laurent("A^4 + A^12 - A^16")


def test_figure_eight():
    L = parse_pd(FIGURE_EIGHT_PD)
    assert writhe(L) == 0
    assert jones(L) == parse_laurent("A^-8 - A^-4 + 1 - A^4 + A^8")


def test_hopf_link():
    L = parse_pd("X(4,1,3,2) X(2,3,1,4)")
    assert L.component_count() == 2
    assert jones(L) in (parse_laurent("-A^2 - A^10"), parse_laurent("-A^-2 - A^-10"))


def test_writhe_examples():
    assert writhe(UNKNOT) == 0
    assert writhe(closure(to_string_link(BraidWord(2, (1,))), "trace")) == 1
    assert writhe(closure(to_string_link(BraidWord(2, (-1, 1))), "trace")) == 0
    with pytest.raises(PDError):
        writhe(LinkDiagram(((1, 1, 2, 2),)))


def test_kink_normalizes_away():
    rng = random.Random(5)
    d = to_string_link(BraidWord(2, (1,)))
    k = add_kink(rng, d)
    assert jones(closure(d, "trace")) == jones(closure(k, "trace"))
    unknot = closure(add_kink(rng, add_kink(rng, to_string_link(BraidWord(1, ())))), "trace")
    assert not certifies_not_unknot(unknot)


def test_plait_of_clasp_is_trefoil():
    assert jones(closure(clasp(2), "plait")) == jones(trefoil())


def test_certifies_requires_a_knot():
    with pytest.raises(PDError):
        certifies_not_unknot(LinkDiagram((), 2, ()))


def test_disjoint_union_multiplies_by_delta():
    T = trefoil()
    assert kauffman_bracket(T.disjoint_union_unknot()) == DELTA * kauffman_bracket(T)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_bracket_matches_naive_oracle(seed):
    rng = random.Random(seed)
    L = closure(random_diagram(rng), "trace")
    assert kauffman_bracket(L) == naive_bracket(L.crossings, L.free_loops)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_reidemeister_moves(seed):
    rng = random.Random(seed)
    d = random_diagram(rng)
    L = closure(d, "trace")
    base = kauffman_bracket(L)
    k = add_kink(rng, d)
    Lk = closure(k, "trace")
    ratio = {-(A**3) * base, -(A**-3) * base}
    assert kauffman_bracket(Lk) in ratio
    assert jones(Lk) == jones(L)
    r2 = add_r2(rng, d)
    if r2 is not None:
        assert kauffman_bracket(closure(r2, "trace")) == base
    r3 = plant_r3(rng, d)
    moved = apply_r3(rng, r3)
    if moved is not None:
        assert kauffman_bracket(closure(moved, "trace")) == kauffman_bracket(closure(r3, "trace"))
        assert jones(closure(moved, "trace")) == jones(closure(r3, "trace"))


def test_pd_round_trip_and_errors():
    T = trefoil()
    assert format_pd(T) == TREFOIL_PD
    assert parse_pd(format_pd(T)) == T
    L = LinkDiagram(T.crossings, 2, T.signs)
    assert format_pd(L).endswith("O(2)")
    assert parse_pd(format_pd(L)) == L
    with pytest.raises(PDError):
        parse_pd("X(1,2,3)")
    with pytest.raises(PDError):
        parse_pd("X(1,2,3,4)")
    with pytest.raises(PDError):
        parse_pd("Y(1,1,2,2)")


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32))
def test_parse_pd_recovers_signs(seed):
    rng = random.Random(seed)
    L = closure(random_diagram(rng), "trace")
    assert parse_pd(format_pd(L)).signs == L.signs


@given(st.dictionaries(st.integers(-20, 20), st.integers(-5, 5)))
def test_laurent_text_round_trip(terms):
    p = LaurentPoly(terms)
    assert parse_laurent(str(p)) == p


def test_laurent_arithmetic():
    assert str(LaurentPoly({-4: -1, 0: 1, 6: 2})) == "-A^-4 + 1 + 2A^6"
    assert str(LaurentPoly()) == "0"
    assert (A + 1) * (A - 1) == A**2 - 1
    assert A**-2 * A**2 == 1
    with pytest.raises(ValueError):
        (A + 1) ** -1
    with pytest.raises(ValueError):
        (A**2).substitute_t()
