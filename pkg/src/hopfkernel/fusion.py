"""Simple comodules of the BigD family and their multiplication rules."""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .coanalysis import (MATRIX, Block, _tails_of, classify_block, format_tail, phi_matrix)
from .comodules import (CoefficientSpace, Comodule, certify_isomorphism, coefficient_space, direct_sum,
                        dual_comodule, find_isomorphism, hom_space, one_dimensional, regular_comodule,
                        span_of_monomials, tensor_comodules)
from .families.bigd import BigD, Tail, merge_tails, negate_tail, tail_order
from .families.core import Element
from .report import CheckResult, Tally, VerificationReport


def grouplike_comodule(fam: BigD, t: int, tail: Tail) -> Comodule:
    return one_dimensional(fam, (0, t % fam.m, tail), f"R[{fam.format_mono((0, t % fam.m, tail))}]")


def matrix_comodule(fam: BigD, tail: Tail) -> Comodule:
    """The simple comodule of a matrix block: coefficients Phi(c_kj)."""
    phi = phi_matrix(fam, tail)
    n = fam.n
    C = [[phi[(k, j)] for j in range(1, n + 1)] for k in range(1, n + 1)]
    return Comodule(fam, C, f"S[{format_tail(tail)}]")


def simple_comodule(fam: BigD, block: Block) -> List[Comodule]:
    """Simples attached to a block: one for a matrix block, the m group-like rows otherwise."""
    if block.tag is None:
        classify_block(fam, block)
    if block.tag == MATRIX:
        return [matrix_comodule(fam, block.tail)]
    return [grouplike_comodule(fam, t, block.tail) for t in range(fam.m)]


def simple_comodules(fam: BigD, window) -> List[Tuple[str, Comodule, Tail]]:
    out = []
    for tail in _tails_of(window):
        if fam.mu(tail):
            M = matrix_comodule(fam, tail)
            out.append((M.name, M, tail))
        else:
            for t in range(fam.m):
                M = grouplike_comodule(fam, t, tail)
                out.append((M.name, M, tail))
    return out


def taft_block_comodule(fam: BigD, tail: Tail = ()) -> Comodule:
    return regular_comodule(fam, fam.block_monomials(tail), f"T[{format_tail(tail)}]")


def tensor_is_semisimple(M: Comodule, N: Comodule, coradical: CoefficientSpace) -> bool:
    """Semisimple iff all coefficients lie in the coradical."""
    return coefficient_space(tensor_comodules(M, N)).issubspace(coradical)


def _iso_check(name: str, M: Comodule, N: Comodule, seed: int = 0) -> CheckResult:
    return certify_isomorphism(M, N, find_isomorphism(M, N, seed=seed), name)


def verify_fusion(fam: BigD, window, seed: int = 0, max_pairs: Optional[int] = None,
                  labels: Optional[Dict[str, str]] = None) -> VerificationReport:
    """Check the multiplication rules for every ordered pair of windowed simples.

    Isomorphisms are certified by an explicit invertible comodule map found in
    the Hom space (exact nullspace, then a seeded combination).
    """
    tails = _tails_of(window)
    simples = simple_comodules(fam, tails)
    labels = labels or {}
    rep = VerificationReport(f"fusion rules: {fam.kind}", meta={"tails": [format_tail(t) for t in tails]})
    rules = Tally("fusion.isomorphism")
    coeff = Tally("fusion.coefficient_space")
    dims = Tally("fusion.dimensions")
    hom_once = Tally("fusion.taft_grouplikes_once")
    pairs = []
    for a in simples:
        for b in simples:
            pairs.append((a, b))
    if max_pairs is not None:
        pairs = pairs[:max_pairs]
    rows = []
    for (na, A, ta), (nb, B, tb) in pairs:
        T = tensor_comodules(A, B)
        merged = merge_tails(ta, tb)
        a_mat, b_mat = bool(fam.mu(ta)), bool(fam.mu(tb))
        cf = coefficient_space(T)
        if not a_mat and not b_mat:
            ga, gb = A.monomials()[0], B.monomials()[0]
            expected = grouplike_comodule(fam, ga[1] + gb[1], merged)
            summands = [expected.name]
            target = expected
            cf_target = span_of_monomials(fam, expected.monomials())
        elif a_mat != b_mat:
            target = matrix_comodule(fam, merged)
            summands = [target.name]
            cf_target = span_of_monomials(fam, fam.block_monomials(merged))
        elif merged == ():
            target = taft_block_comodule(fam, ())
            summands = [f"T[1]"]
            cf_target = span_of_monomials(fam, fam.block_monomials(()))
            for t in range(fam.m):
                d = len(hom_space(grouplike_comodule(fam, t, ()), T))
                hom_once.record(d == 1, lambda: {"pair": [na, nb], "t": t, "hom_dim": d})
        elif fam.mu(merged):
            S = matrix_comodule(fam, merged)
            target = direct_sum([S] * fam.n)
            summands = [S.name] * fam.n
            cf_target = span_of_monomials(fam, fam.block_monomials(merged))
        else:
            # merged tail is group-like but not empty: a translate of the Taft block
            target = taft_block_comodule(fam, merged)
            summands = [target.name]
            cf_target = span_of_monomials(fam, fam.block_monomials(merged))
        res = _iso_check(f"{na} ⊗ {nb}", T, target, seed)
        rules.record(res.passed, lambda: {"pair": [na, nb], "expected": summands, **(res.witness or {})})
        coeff.record(cf == cf_target, lambda: {"pair": [na, nb], "dim": cf.dim, "expected": cf_target.dim})
        dims.record(T.dim == A.dim * B.dim == target.dim, lambda: {"pair": [na, nb]})
        rows.append({"pair": [labels.get(na, na), labels.get(nb, nb)],
                     "summands": [labels.get(s, s) for s in summands], "certified": res.passed})
    for t in (rules, coeff, dims):
        rep.add(t.result())
    if hom_once.count:
        rep.add(hom_once.result())
    dual = Tally("fusion.dual")
    have = set(tails)
    for name, M, tail in simples:
        if fam.mu(tail) and negate_tail(tail) in have:
            res = _iso_check(f"{name}*", dual_comodule(M), matrix_comodule(fam, negate_tail(tail)), seed)
            dual.record(res.passed, lambda: {"simple": name})
    if dual.count:
        rep.add(dual.result())
    rep.meta["pairs"] = len(pairs)
    rep.meta["rules"] = rows
    return rep


def limit_labels(fam: BigD) -> Dict[str, str]:
    """Names k, k_chi and S_z for the limit family with one index."""
    out = {grouplike_comodule(fam, 0, ()).name: "k", grouplike_comodule(fam, 1, ()).name: "k_chi"}
    return out


def verify_limit_rules(fam: BigD, zmax: int = 4, seed: int = 0) -> VerificationReport:
    """The rules for k, k_chi, S_z (z != 0) of the n = 2 limit family."""
    if not fam.limit or fam.n != 2 or len(fam.index) != 1:
        raise ValueError("needs the limit family with n = 2 and a single index")
    i = fam.index[0]
    rep = VerificationReport("limit family rules", meta={"zmax": zmax})
    k = grouplike_comodule(fam, 0, ())
    kchi = grouplike_comodule(fam, 1, ())
    S = {z: matrix_comodule(fam, ((i, z),)) for z in range(-zmax, zmax + 1) if z}
    H4 = taft_block_comodule(fam, ())
    t1 = Tally("k_chi⊗k_chi≅k")
    res = _iso_check("k_chi⊗k_chi", tensor_comodules(kchi, kchi), k, seed)
    t1.record(res.passed)
    rep.add(t1.result())
    t2 = Tally("k_chi⊗S_z≅S_z≅S_z⊗k_chi")
    for z, Sz in S.items():
        for T in (tensor_comodules(kchi, Sz), tensor_comodules(Sz, kchi)):
            res = _iso_check(f"k_chi⊗S_{z}", T, Sz, seed)
            t2.record(res.passed, lambda: {"z": z})
    rep.add(t2.result())
    t3 = Tally("S_z⊗S_-z≅H4")
    t4 = Tally("S_z⊗S_w≅S_(z+w)^2")
    for z, Sz in S.items():
        for w, Sw in S.items():
            T = tensor_comodules(Sz, Sw)
            if w == -z:
                res = _iso_check(f"S_{z}⊗S_{w}", T, H4, seed)
                t3.record(res.passed, lambda: {"z": z, "w": w})
            else:
                target = matrix_comodule(fam, ((i, z + w),))
                res = _iso_check(f"S_{z}⊗S_{w}", T, direct_sum([target, target]), seed)
                t4.record(res.passed, lambda: {"z": z, "w": w})
    rep.add(t3.result())
    rep.add(t4.result())
    return rep
