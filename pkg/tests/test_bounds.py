import json

import pytest

from hopfkernel.bounds import (E1, CategoryData, CategoryDataError, b_of, bound_cor1, bound_refined,
                               category_data_from_kernel, category_data_from_smash, check_bounds,
                               load_category_data)
from hopfkernel.config import ConfigError
from hopfkernel.families import Taft
from hopfkernel.scalars import FieldSpec, field_make
from hopfkernel.smash import SmashHopf, SmashSpec


@pytest.fixture
def uq():
    return load_category_data()


def test_fixture_values(uq):
    # dims 1, 2, 3; E(k) has V0 and V1 twice each, so dim 6
    assert uq.simples == {"V0": 1, "V1": 2, "V2": 3}
    assert uq.dim_e1 == 6 and uq.dim_of(uq.comp_e1) == 6
    assert uq.max_dim(uq.comp_e1) == 2 and uq.one_dim_count(uq.comp_e1) == 2
    assert b_of(uq, E1) == 3
    assert uq.length_of(uq.inj_envelope["V1"]) == 4


def test_bound_arithmetic(uq):
    assert bound_refined(uq) == 2 * 6 == 12
    assert bound_cor1(uq, E1) == 3 * 6 - 2 * (3 - 1) == 14


def test_check_bounds_report(uq):
    rep = check_bounds(uq)
    assert rep.passed
    row = {r["simple"]: r for r in rep.meta["rows"]}["V1"]
    assert (row["length"], row["refined"], row["cor1"]) == (4, 12, 14)
    assert not row["tight"]


def test_invariant_violation_is_reported(uq):
    uq.dim_e1 = 7
    rep = check_bounds(uq)
    assert not rep.passed and rep.checks[0].name == "data.invariants"


def test_malformed_data_rejected():
    obj = load_category_data().to_json()
    obj["simples"][0]["dim"] = 0
    with pytest.raises(ConfigError):
        CategoryData.from_json(obj)


def test_round_trip(uq, tmp_path):
    p = tmp_path / "d.json"
    p.write_text(json.dumps(uq.to_json()))
    assert load_category_data(str(p)) == uq


def test_cor1_monotone_in_r(uq):
    vals = [bound_cor1(uq, E1, r) for r in range(0, 5)]
    assert vals == sorted(vals, reverse=True)
    assert vals[2] == 14


def test_missing_tensor_data(uq):
    uq.b = None
    with pytest.raises(CategoryDataError):
        b_of(uq, E1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pointed_collapse_taft(n):
    F = field_make(FieldSpec.cyclotomic(12))
    data = category_data_from_kernel(Taft(F, n, F.zeta(12 // n)))
    assert data.dim_e1 == n
    rep = check_bounds(data)
    assert rep.passed
    assert (rep.meta["d"], rep.meta["b"], rep.meta["r"]) == (1, 1, n)
    for row in rep.meta["rows"]:
        assert row["length"] == row["refined"] == row["cor1"] == n and row["tight"]


def test_smash_data():
    data = category_data_from_smash(SmashHopf(SmashSpec.z_c2(zmax=2)))
    assert data.dim_e1 == 2 and data.comp_e1 == {"k": 2}
    assert check_bounds(data).passed
