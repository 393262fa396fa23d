import pytest

from hopfkernel.dualization import (DualSpec, StructureConstants, finite_dual, function_algebra, group_algebra,
                                    taft_self_duality, verify_dual, verify_dual_basis_independence,
                                    verify_dual_coproduct, verify_dual_relations)
from hopfkernel.families import Lifted, Taft
from hopfkernel.scalars import FieldSpec, field_make

F4 = field_make(FieldSpec.cyclotomic(4))
F2 = field_make(FieldSpec.prime(2))


@pytest.fixture(scope="module")
def c4():
    return DualSpec(Lifted.cyclic(F4, 4, -1, 1))


@pytest.fixture(scope="module")
def klein():
    return DualSpec(Lifted(F4, 2, (2,), (0,), -1, 1, (0,), 0))


def test_xi_is_a_primitive_root_with_the_right_power(c4):
    xi = c4.xi
    assert xi ** 4 == F4.one and xi ** 2 != F4.one
    assert xi ** c4.p == c4.eta


@pytest.mark.parametrize("name", ["c4", "klein"])
def test_dual_relations_and_coproduct(name, request):
    dspec = request.getfixturevalue(name)
    for rep in (verify_dual_relations(dspec), verify_dual_coproduct(dspec)):
        assert rep.passed, rep.summary_lines()


@pytest.mark.parametrize("name", ["c4", "klein"])
def test_pairing_matrix_nonsingular(name, request):
    rep = verify_dual_basis_independence(request.getfixturevalue(name), seed=3)
    assert rep.check("pairing_matrix.nonsingular").passed


def test_full_suite_is_deterministic(c4):
    a = verify_dual(c4, seed=1).dumps()
    b = verify_dual(c4, seed=1).dumps()
    assert a == b


def test_double_dual_is_the_original():
    H = Lifted.cyclic(F4, 4, -1, 1)
    sc = StructureConstants.from_family(H, H.basis())
    assert sc.check_hopf_axioms().passed
    assert finite_dual(finite_dual(sc)) == sc


def test_group_and_function_algebras_are_dual():
    assert finite_dual(function_algebra(F2, 2)) == group_algebra(F2, 2)
    assert finite_dual(group_algebra(F4, 3)) == function_algebra(F4, 3)


def test_finite_dual_refuses_broken_input():
    sc = group_algebra(F4, 2)
    sc.counit = {}
    with pytest.raises(ValueError):
        finite_dual(sc)


def test_taft_is_self_dual():
    assert taft_self_duality(Taft(F4, 2, -1)).passed


def test_size_cap():
    with pytest.raises(ValueError):
        DualSpec(Lifted.cyclic(F4, 4, -1, 1), size_cap=4)
