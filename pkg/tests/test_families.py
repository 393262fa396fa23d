import pytest

from hopfkernel.families import BigD, Lifted, Limit, Taft, parse_mono, verify_hopf
from hopfkernel.families.core import Element, antipode, delta, element_mul, epsilon
from hopfkernel.scalars import FieldSpec, field_make

F4 = field_make(FieldSpec.cyclotomic(4))
F6 = field_make(FieldSpec.cyclotomic(6))


def mono(fam, text):
    return fam.parse_mono(text)


def el(fam, *pairs):
    return Element({mono(fam, m): fam.field.coerce(c) for m, c in pairs})


def test_sweedler_structure():
    H = Taft(F4, 2, -1)
    x, u = mono(H, "x"), mono(H, "u")
    assert H.delta_closed(x) == {(u, x): F4.one, (x, H.one): F4.one}
    assert antipode(H, {x: F4.one}) == el(H, ("x u", 1))
    # ux = -xu
    assert element_mul(H, {u: F4.one}, {x: F4.one}) == el(H, ("x u", -1))
    assert verify_hopf(H).passed


def test_limit_coproducts_of_a():
    # Delta(a^{±1}) = a^{±1} ⊗ a^{±1} ± x u a^{±1} ⊗ x a^{±1}
    L = Limit(F4, 2, -1, [1])
    a, ai = mono(L, "a1"), mono(L, "a1^-1")
    assert L.delta_closed(a) == {(a, a): F4.one, (mono(L, "x u a1"), mono(L, "x a1")): F4.one}
    assert L.delta_closed(ai) == {(ai, ai): F4.one, (mono(L, "x u a1^-1"), mono(L, "x a1^-1")): -F4.one}


def test_limit_axioms():
    L = Limit(F4, 2, -1, [1])
    assert verify_hopf(L, support=1, max_exp=3).passed


def test_bigd_with_generic_q():
    fam = BigD(F6, 3, 3, F6.zeta(2), {1: F6.t, 2: F6.t ** 2}, 1)
    rep = verify_hopf(fam, support=2, max_exp=1)
    assert rep.passed, rep.summary_lines()
    # a x = q x a
    a, x = mono(fam, "a1"), mono(fam, "x")
    assert element_mul(fam, {a: F6.one}, {x: F6.one}) == Element({mono(fam, "x a1"): F6.t})


def test_counit_and_antipode_of_grouplike_tail():
    fam = BigD(F6, 3, 3, F6.zeta(2), {1: F6.zeta(2)}, 1)
    g = mono(fam, "u a1^2")
    assert fam.delta_closed(g) == {(g, g): F6.one}
    assert element_mul(fam, antipode(fam, {g: F6.one}), {g: F6.one}) == fam.unit_element()


class DoubledTwist(BigD):
    def _delta_closed(self, m):
        out = super()._delta_closed(m)
        return Element({k: (c + c if k[0][0] + k[1][0] > m[0] else c) for k, c in out.items()})


def test_closed_formula_cross_check_catches_a_wrong_twist():
    fam = DoubledTwist(F4, 2, 2, -1, {1: F4.t}, 1)
    rep = verify_hopf(fam, support=1, max_exp=1)
    assert not rep.check("delta.closed_equals_generated").passed
    assert rep.check("delta.closed_equals_generated").witness["monomial"]


def test_parameter_validation():
    with pytest.raises(ValueError):
        BigD(F4, 2, 2, F4.zeta(1), {1: F4.t}, 1)  # i is not a square root of unity
    with pytest.raises(ValueError):
        BigD(F4, 4, 2, -1, {1: F4.t}, 1)  # alpha != 0 needs m = n
    with pytest.raises(ValueError):
        BigD(F4, 2, 2, -1, {1: F4.zero}, 0)


def test_lifted_cyclic():
    H = Lifted.cyclic(F4, 4, -1, 1)
    assert H.dim == 8 and H.n == 2
    rep = verify_hopf(H)
    assert rep.passed, rep.summary_lines()
    x = (1, H.identity)
    # x^2 = 1 - g^2
    sq = element_mul(H, {x: F4.one}, {x: F4.one})
    assert sq == {H.one: F4.one, (0, H.gpow(H.g, 2)): -F4.one}


def test_lifted_product_group():
    H = Lifted(F4, 2, (2,), (0,), -1, 1, (0,), 0)
    assert H.dim == 8
    assert verify_hopf(H).passed


def test_text_round_trip():
    fam = BigD(F4, 2, 2, -1, {1: F4.t, 3: F4.t}, 1)
    for m in fam.window(support=2, max_exp=1)[:50]:
        assert fam.parse_mono(fam.format_mono(m)) == m
    with pytest.raises(ValueError):
        parse_mono("a1 x")


def test_epsilon_of_elements():
    H = Taft(F6, 3, F6.zeta(2))
    e = el(H, ("1", 2), ("u", 3), ("x", 5))
    assert epsilon(H, e) == F6.coerce(5)
    assert delta(H, {}) == {}
