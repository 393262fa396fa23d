"""Length bounds for injective hulls of simple comodules.

Category data is plain bookkeeping: simples with dimensions, composition
factors (as multisets) of the injective hulls, and a few optional extras.
Every field can carry a provenance tag ("PAPER", "DERIVED" or "KERNEL").
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Dict, List, Optional

from .report import CheckResult, VerificationReport

Multiset = Dict[str, int]

E1 = "E(1)"


class CategoryDataError(ValueError):
    pass


@dataclass
class CategoryData:
    simples: Dict[str, int]
    unit: str
    inj_envelope: Dict[str, Multiset]
    dim_e1: int
    comp_e1: Multiset
    comp_e1_tensor_e1_dual: Optional[Multiset] = None
    b: Optional[int] = None
    per_tensor: Dict[str, Multiset] = field(default_factory=dict)
    object_dims: Dict[str, int] = field(default_factory=dict)
    distinguished_grouplike: Optional[str] = None
    provenance: Dict[str, str] = field(default_factory=dict)
    name: str = ""

    # -- derived quantities ---------------------------------------------------
    def dim_of(self, factors: Multiset) -> int:
        return sum(self.simples[s] * k for s, k in factors.items())

    def length_of(self, factors: Multiset) -> int:
        return sum(factors.values())

    def max_dim(self, factors: Multiset) -> int:
        return max((self.simples[s] for s, k in factors.items() if k), default=0)

    def one_dim_count(self, factors: Multiset) -> int:
        return sum(k for s, k in factors.items() if self.simples[s] == 1)

    def object_dim(self, X: str) -> int:
        if X == E1:
            return self.dim_e1
        if X in self.object_dims:
            return self.object_dims[X]
        if X in self.simples:
            return self.simples[X]
        raise CategoryDataError(f"no dimension known for {X}")

    def object_factors(self, X: str) -> Multiset:
        if X == E1:
            return self.comp_e1
        if X in self.simples:
            return {X: 1}
        raise CategoryDataError(f"no composition factors known for {X}")

    def invariant_violations(self) -> List[str]:
        out = []
        unknown = {s for m in [self.comp_e1, *self.inj_envelope.values(), *self.per_tensor.values(),
                               self.comp_e1_tensor_e1_dual or {}] for s in m} - set(self.simples)
        if unknown:
            out.append(f"unknown simples {sorted(unknown)}")
            return out
        if self.unit not in self.simples or self.simples[self.unit] != 1:
            out.append("the unit object must be a 1-dimensional simple")
        if self.dim_of(self.comp_e1) != self.dim_e1:
            out.append(f"dimE1 = {self.dim_e1} but composition factors of E(1) sum to {self.dim_of(self.comp_e1)}")
        if self.unit in self.inj_envelope and self.inj_envelope[self.unit] != self.comp_e1:
            out.append("injEnvelope of the unit differs from compE1")
        if any(k < 0 for m in [self.comp_e1, *self.inj_envelope.values()] for k in m.values()):
            out.append("negative multiplicity")
        return out

    # -- serialization ----------------------------------------------------------
    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "simples": [{"name": s, "dim": d} for s, d in self.simples.items()],
            "unit": self.unit,
            "injEnvelope": self.inj_envelope,
            "dimE1": self.dim_e1,
            "compE1": self.comp_e1,
            "provenance": self.provenance,
        }
        if self.comp_e1_tensor_e1_dual is not None:
            out["compE1tensorE1dual"] = self.comp_e1_tensor_e1_dual
        if self.b is not None:
            out["b"] = self.b
        if self.per_tensor:
            out["perTensor"] = self.per_tensor
        if self.object_dims:
            out["objectDims"] = self.object_dims
        if self.distinguished_grouplike is not None:
            out["distinguishedGrouplike"] = self.distinguished_grouplike
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "CategoryData":
        from .config import validate_category_data

        validate_category_data(obj)
        return cls(
            simples={s["name"]: int(s["dim"]) for s in obj["simples"]},
            unit=obj["unit"],
            inj_envelope={k: dict(v) for k, v in obj["injEnvelope"].items()},
            dim_e1=int(obj["dimE1"]),
            comp_e1=dict(obj["compE1"]),
            comp_e1_tensor_e1_dual=obj.get("compE1tensorE1dual"),
            b=obj.get("b"),
            per_tensor={k: dict(v) for k, v in obj.get("perTensor", {}).items()},
            object_dims=dict(obj.get("objectDims", {})),
            distinguished_grouplike=obj.get("distinguishedGrouplike"),
            provenance=dict(obj.get("provenance", {})),
            name=obj.get("name", ""),
        )


def load_category_data(path: Optional[str] = None) -> CategoryData:
    if path is None:
        text = resources.files("hopfkernel").joinpath("data/uqsl2_q3.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return CategoryData.from_json(json.loads(text))


# ---------------------------------------------------------------------------
# the bounds


def bound_refined(data: CategoryData) -> int:
    """d * dim E(1), d the largest dimension of a composition factor of E(1)."""
    if not data.comp_e1:
        raise CategoryDataError("compE1 missing")
    return data.max_dim(data.comp_e1) * data.dim_e1


def b_of(data: CategoryData, X: str) -> int:
    """Largest dimension of a composition factor of E(1) ⊗ X*."""
    if X in data.per_tensor:
        return data.max_dim(data.per_tensor[X])
    if X == E1:
        if data.comp_e1_tensor_e1_dual is not None:
            return data.max_dim(data.comp_e1_tensor_e1_dual)
        if data.b is not None:
            return data.b
    raise CategoryDataError(f"no tensor data for {X}")


def bound_tensor(data: CategoryData, X: str) -> int:
    return b_of(data, X) * data.object_dim(X)


def bound_cor1(data: CategoryData, X: str, r_x: Optional[int] = None) -> int:
    """b_X dim X - r_X (b_X - 1), r_X the number of 1-dimensional factors of X."""
    b = b_of(data, X)
    r = data.one_dim_count(data.object_factors(X)) if r_x is None else r_x
    return b * data.object_dim(X) - r * (b - 1)


def check_bounds(data: CategoryData) -> VerificationReport:
    rep = VerificationReport(f"length bounds: {data.name or 'category'}")
    bad = data.invariant_violations()
    rep.add(CheckResult("data.invariants", not bad, 1, {"violations": bad} if bad else None))
    if bad:
        return rep
    if not data.inj_envelope:
        raise CategoryDataError("injEnvelope needs at least one simple")
    refined = bound_refined(data)
    b = b_of(data, E1)
    r = data.one_dim_count(data.comp_e1)
    cor = bound_cor1(data, E1, r)
    rows = []
    for S in sorted(data.inj_envelope):
        length = data.length_of(data.inj_envelope[S])
        ok1 = length <= refined
        ok2 = length <= cor
        rep.add(CheckResult(f"{S}.refined", ok1, 1, None if ok1 else {"length": length, "bound": refined},
                            {"length": length, "bound": refined, "margin": refined - length,
                             "tight": refined == length}))
        rep.add(CheckResult(f"{S}.cor1", ok2, 1, None if ok2 else {"length": length, "bound": cor},
                            {"length": length, "bound": cor, "margin": cor - length, "tight": cor == length}))
        rows.append({"simple": S, "length": length, "refined": refined, "cor1": cor,
                     "tight": refined == length and cor == length})
    e1_simple = data.length_of(data.comp_e1) == 1
    if not e1_simple:
        rep.add(CheckResult("r_at_least_2", r >= 2, 1, None if r >= 2 else {"r": r}))
    weak = b * data.dim_e1 - 2 * (b - 1)
    ok = cor <= weak if r >= 2 else True
    rep.add(CheckResult("cor1_below_r2_form", ok, 1, None if ok else {"cor1": cor, "r2_form": weak},
                        {"cor1": cor, "r2_form": weak}))
    rep.meta.update({"d": data.max_dim(data.comp_e1), "b": b, "r": r, "dimE1": data.dim_e1,
                     "bound_refined": refined, "bound_cor1": cor, "rows": rows})
    return rep


# ---------------------------------------------------------------------------
# data computed by the kernel


def _layers_to_multiset(ls, rename) -> Multiset:
    out: Multiset = {}
    for layer in ls.layers:
        for name, k in layer.items():
            key = rename(name)
            out[key] = out.get(key, 0) + k
    return out


def category_data_from_kernel(fam, window=None, tensor_data: bool = True) -> CategoryData:
    """Category data for a BigD spec read off from the blocks in the window.

    Injective hulls of the group-like simples of the empty-tail block are the
    subcomodules E_c = span{x^l u^(c-l)}; their composition factors come from
    Loewy series over the block's coradical filtration.  Matrix simples are
    injective, translates of the empty-tail block contribute translated hulls.
    """
    from .coanalysis import _tails_of, filtration_for, loewy_series
    from .comodules import dual_comodule, regular_comodule, tensor_comodules
    from .fusion import grouplike_comodule

    n, m = fam.n, fam.m
    block = fam.block_monomials(())
    simples_t = [grouplike_comodule(fam, t, ()) for t in range(m)]
    filt = filtration_for(fam, block, simples=simples_t)
    tails = _tails_of(window) if window is not None else [()]
    if () not in tails:
        raise CategoryDataError("window too small: the empty tail block must be present")

    def rename(name: str) -> str:
        return name

    simples: Dict[str, int] = {}
    inj: Dict[str, Multiset] = {}
    hulls = {}
    for c in range(m):
        basis = [(l, (c - l) % m, ()) for l in range(n)]
        E = regular_comodule(fam, basis, f"E[{fam.format_mono((0, c, ()))}]")
        ls = loewy_series(E, filt)
        if ls.composition_length is None:
            raise CategoryDataError("could not account for the composition factors of an injective hull")
        hulls[c] = (E, ls)
        name = simples_t[c].name
        simples[name] = 1
        inj[name] = _layers_to_multiset(ls, rename)
    for tail in tails:
        if tail == ():
            continue
        if fam.mu(tail):
            from .fusion import matrix_comodule

            S = matrix_comodule(fam, tail)
            simples[S.name] = S.dim
            inj[S.name] = {S.name: 1}
        else:
            for t in range(m):
                R = grouplike_comodule(fam, t, tail)
                simples[R.name] = 1
                # E(R) = E(k_{u^t}) translated by a_F^E: same shape, translated factors
                base = inj[simples_t[t].name]
                shifted = {}
                for fname, k in base.items():
                    src = next(S for S in simples_t if S.name == fname)
                    g = src.monomials()[0]
                    shifted[grouplike_comodule(fam, g[1], tail).name] = k
                for fname in shifted:
                    simples.setdefault(fname, 1)
                inj[R.name] = shifted
    unit = simples_t[0].name
    E1_mod, _ = hulls[0]
    comp_e1 = inj[unit]
    data = CategoryData(simples=simples, unit=unit, inj_envelope=inj, dim_e1=E1_mod.dim, comp_e1=comp_e1,
                        provenance={"simples": "KERNEL", "injEnvelope": "KERNEL", "dimE1": "KERNEL",
                                    "compE1": "KERNEL"},
                        name=f"{fam.kind} n={n}")
    if tensor_data:
        T = tensor_comodules(E1_mod, dual_comodule(E1_mod))
        ls = loewy_series(T, filt)
        if ls.composition_length is None:
            raise CategoryDataError("could not decompose E(1) ⊗ E(1)*")
        data.comp_e1_tensor_e1_dual = _layers_to_multiset(ls, rename)
        data.provenance["compE1tensorE1dual"] = "KERNEL"
    return data


def category_data_from_smash(fam) -> CategoryData:
    """E(1) = k^K for the smash preset; matrix simples are injective."""
    from .coanalysis import filtration_for, loewy_series
    from .comodules import dual_comodule, tensor_comodules
    from .smash import function_comodule, simple_smash

    E = function_comodule(fam)
    basis = [(0, k) for k in range(fam.nK)]
    filt = filtration_for(fam, basis, c0_monos=[fam.unit_element()])
    ls = loewy_series(E, filt)
    comp = _layers_to_multiset(ls, lambda s: s)
    simples = {"k": 1}
    inj = {"k": comp}
    for z in range(1, fam.spec.zmax + 1):
        simples[f"S_{z}"] = fam.nK
        inj[f"S_{z}"] = {f"S_{z}": 1}
    T = tensor_comodules(E, dual_comodule(E))
    lt = loewy_series(T, filt)
    return CategoryData(simples=simples, unit="k", inj_envelope=inj, dim_e1=E.dim, comp_e1=comp,
                        comp_e1_tensor_e1_dual=_layers_to_multiset(lt, lambda s: s),
                        provenance={"simples": "KERNEL", "injEnvelope": "KERNEL", "dimE1": "KERNEL",
                                    "compE1": "KERNEL", "compE1tensorE1dual": "KERNEL"},
                        name="smash Z # k^C2")
