import pytest

from hopfkernel.comodules import (Comodule, ComoduleError, CoefficientSpace, coefficient_space, dual_comodule,
                                  find_isomorphism, hom_dim, is_morphism, one_dimensional, regular_comodule,
                                  span_of_monomials, tensor_comodules, trivial_comodule)
from hopfkernel.families import BigD, Limit, Taft
from hopfkernel.families.bigd import merge_tails
from hopfkernel.fusion import (grouplike_comodule, matrix_comodule, simple_comodules, taft_block_comodule,
                               tensor_is_semisimple, verify_fusion, verify_limit_rules)
from hopfkernel.scalars import FieldSpec, field_make
from hopfkernel.smash import (SmashHopf, SmashSpec, expected_example_rule, simple_smash, smash_blocks,
                              smash_build, smash_coradical, smash_fusion)

F6 = field_make(FieldSpec.cyclotomic(6))
W = F6.zeta(2)


@pytest.fixture(scope="module")
def generic():
    return BigD(F6, 3, 3, W, {1: F6.t}, 1)


def test_matrix_comodule_axioms(generic):
    for tail in (((1, 1),), ((1, -1),), ((1, 2),)):
        assert matrix_comodule(generic, tail).verify().passed


def test_comodule_rejects_broken_coaction(generic):
    with pytest.raises(ComoduleError):
        Comodule(generic, [[{(1, 0, ()): F6.one}]])


def test_unit_is_neutral(generic):
    S = matrix_comodule(generic, ((1, 1),))
    k = trivial_comodule(generic)
    for T in (tensor_comodules(k, S), tensor_comodules(S, k)):
        assert T.dim == 3 and find_isomorphism(T, S) is not None


def test_tensor_dims_and_hom_against_wrong_target(generic):
    S1 = matrix_comodule(generic, ((1, 1),))
    S2 = matrix_comodule(generic, ((1, 2),))
    T = tensor_comodules(S1, S1)
    assert T.dim == 9
    assert hom_dim(S2, T) == 3
    assert hom_dim(matrix_comodule(generic, ((1, -1),)), T) == 0


def test_matrix_dual_is_negated_tail(generic):
    S = matrix_comodule(generic, ((1, 1),))
    D = dual_comodule(S)
    assert find_isomorphism(D, matrix_comodule(generic, ((1, -1),))) is not None
    assert find_isomorphism(D, S) is None


def test_phi_counit(generic):
    S = matrix_comodule(generic, ((1, 2),))
    for i in range(3):
        for j in range(3):
            e = sum((c * generic.epsilon_mono(m) for m, c in S.C[i][j].items()), F6.zero)
            assert e == (F6.one if i == j else F6.zero)


def test_coefficient_spaces(generic):
    S = matrix_comodule(generic, ((1, 1),))
    cf = coefficient_space(S)
    assert cf.dim == 9 and cf.is_subcoalgebra()
    assert cf == span_of_monomials(generic, generic.block_monomials(((1, 1),)))
    T = tensor_comodules(S, matrix_comodule(generic, ((1, -1),)))
    assert coefficient_space(T) == span_of_monomials(generic, generic.block_monomials(()))


def test_semisimplicity_both_directions(generic):
    S = matrix_comodule(generic, ((1, 1),))
    S2 = matrix_comodule(generic, ((1, 2),))
    Sm = matrix_comodule(generic, ((1, -1),))
    monos = []
    for tail in (((1, 2),), ((1, 1),), ((1, -1),)):
        monos += generic.block_monomials(tail)
    monos += [(0, t, ()) for t in range(3)]
    cor = span_of_monomials(generic, monos)
    assert tensor_is_semisimple(S, S, cor)
    assert not tensor_is_semisimple(S, Sm, cor)


def test_grouplike_rule(generic):
    A = grouplike_comodule(generic, 1, ())
    B = grouplike_comodule(generic, 2, ())
    assert find_isomorphism(tensor_comodules(A, B), grouplike_comodule(generic, 0, ())) is not None


def test_fusion_report_generic(generic):
    rep = verify_fusion(generic, generic.tails(1, 2))
    assert rep.passed, [c.name for c in rep.failures()]
    assert rep.meta["pairs"] == len(simple_comodules(generic, generic.tails(1, 2))) ** 2


def test_fusion_with_translated_taft_target():
    fam = BigD(F6, 3, 3, W, {1: F6.zeta(1)}, 1)
    tail = ((1, 1),)
    assert fam.mu(tail) and not fam.mu(merge_tails(tail, tail))
    T = tensor_comodules(matrix_comodule(fam, tail), matrix_comodule(fam, tail))
    assert find_isomorphism(T, taft_block_comodule(fam, ((1, 2),))) is not None


def test_limit_rules():
    F = field_make(FieldSpec.cyclotomic(2))
    rep = verify_limit_rules(Limit(F, 2, F.coerce(-1), [1]), zmax=3)
    assert rep.passed, [c.name for c in rep.failures()]


# smash preset over F_2


@pytest.fixture(scope="module")
def smash():
    fam, hopf = smash_build(SmashSpec.z_c2(zmax=4))
    assert hopf.passed
    return fam


def test_smash_delta_example(smash):
    one = smash.field.one
    assert smash.delta_closed((1, 1)) == {((1, 0), (1, 1)): one, ((1, 1), (-1, 0)): one}


def test_smash_antipode_squared_and_counit(smash):
    for mono in smash.window(3):
        twice = {}
        for m1, c1 in smash.antipode_mono(mono).items():
            for m2, c2 in smash.antipode_mono(m1).items():
                twice[m2] = twice.get(m2, smash.field.zero) + c1 * c2
        assert {k: v for k, v in twice.items() if v} == {mono: smash.field.one}
        assert smash.epsilon_mono(mono) == (smash.field.one if mono[1] == 0 else smash.field.zero)


def test_smash_blocks_certified(smash):
    for b in smash_blocks(smash):
        assert b.report.passed


@pytest.mark.parametrize("g,h", [(1, 1), (1, 2), (2, 1), (3, 3), (1, -1), (2, -3)])
def test_smash_fusion(smash, g, h):
    res = smash_fusion(smash, g, h, smash_coradical(smash, 8))
    assert res.report.passed
    assert res.semisimple_flag == (abs(g) != abs(h))
    if g > 0 and h > 0:
        assert res.summands == expected_example_rule(g, h)


def test_smash_simple_is_comodule(smash):
    assert simple_smash(smash, 2).verify().passed
