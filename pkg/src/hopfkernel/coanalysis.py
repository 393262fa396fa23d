"""Coalgebra structure of the BigD family over finite windows.

Blocks are the subcoalgebras V_(F,E) spanned by x^s u^t a_F^E for a fixed
tail.  A block with a non-trivial twist is a full matrix coalgebra (certified
through an explicit map Phi), otherwise it is a translate of the block of the
empty tail.  The coradical filtration and Loewy series are computed by exact
linear algebra on structure constants.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .comodules import Comodule, CoefficientSpace, change_basis, hom_space, one_dimensional, trivial_comodule
from .dualization import StructureConstants
from .families.bigd import BigD, Tail, format_mono, merge_tails, negate_tail, tail_order
from .families.core import Element, acc, antipode, element_mul
from .report import CheckResult, Tally, VerificationReport
from .scalars import Scalar, root_of_unity_order

TAFT = "TaftBlock"
MATRIX = "MatrixBlock"
FUNCTION = "FunctionAlgebraBlock"


class BlockError(RuntimeError):
    """A coproduct escaped its block: a bug in the family, never a user error."""


class FiltrationError(ValueError):
    pass


def format_tail(tail: Tail) -> str:
    return format_mono((0, 0, tail)) if tail else "1"


# ---------------------------------------------------------------------------
# windows


@dataclass
class SupportWindow:
    tails: List[Tail]
    support: int = 1
    max_exp: int = 2

    @classmethod
    def build(cls, fam: BigD, support: int = 1, max_exp: int = 2, merge_closed: bool = False) -> "SupportWindow":
        tails = fam.tails(support, max_exp)
        if merge_closed:
            have = set(tails)
            for a, b in itertools.product(list(tails), repeat=2):
                have.add(merge_tails(a, b))
            tails = sorted(have, key=tail_order)
        return cls(tails, support, max_exp)

    def is_negation_closed(self) -> bool:
        have = set(self.tails)
        return all(negate_tail(t) in have for t in self.tails)

    def merge_pairs(self) -> List[Tuple[Tail, Tail]]:
        """Ordered pairs whose merged tail stays in the window."""
        have = set(self.tails)
        return [(a, b) for a in self.tails for b in self.tails if merge_tails(a, b) in have]

    def monomials(self, fam: BigD) -> List:
        return fam.window(tails=self.tails)

    def to_json(self) -> dict:
        return {"tails": [format_tail(t) for t in self.tails], "support": self.support, "max_exp": self.max_exp}


def _tails_of(window) -> List[Tail]:
    if isinstance(window, SupportWindow):
        return list(window.tails)
    return sorted(window, key=tail_order)


# ---------------------------------------------------------------------------
# blocks


@dataclass
class Block:
    tail: Tail
    monomials: List
    tag: Optional[str] = None
    phi: Optional[Dict[Tuple[int, int], Element]] = None
    translate: Optional[tuple] = None
    report: Optional[VerificationReport] = None

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def to_json(self, fam: BigD) -> dict:
        out = {"tail": format_tail(self.tail), "dim": self.dim, "class": self.tag}
        if self.phi is not None:
            n = max(s for s, _ in self.phi)
            out["iso"] = [[fam.format_element(self.phi[(s, t)]) for t in range(1, n + 1)]
                          for s in range(1, n + 1)]
        elif self.translate is not None:
            out["iso"] = f"right translation by {fam.format_mono(self.translate)}"
        if self.report is not None:
            out["certificate"] = [c.to_json() for c in self.report.checks]
        return out


def block_decompose(fam: BigD, window) -> List[Block]:
    """Partition the windowed basis into blocks, checking each is Delta-closed."""
    blocks = []
    for tail in _tails_of(window):
        monos = fam.block_monomials(tail)
        members = set(monos)
        for mono in monos:
            for (a, b) in fam.delta_closed(mono):
                if a not in members or b not in members:
                    raise BlockError(f"Delta({fam.format_mono(mono)}) leaves block {format_tail(tail)}")
        blocks.append(Block(tail, monos))
    return blocks


def phi_matrix(fam: BigD, tail: Tail) -> Dict[Tuple[int, int], Element]:
    """Phi(c_st), 1-based indices, for a block with nonzero twist."""
    n = fam.n
    ctx = fam.qctx
    mu = fam.mu(tail)
    out = {}
    for s in range(1, n + 1):
        for t in range(1, n + 1):
            if s >= t:
                c = ctx.q_binomial(s - 1, t - 1)
                mono = (s - t, (t - 1) % fam.m, tail)
            else:
                c = mu * ctx.q_factorial(s - 1) * ctx.inv_factorial(t - 1) * ctx.inv_factorial(n + s - t)
                mono = (n + s - t, (t - 1) % fam.m, tail)
            out[(s, t)] = Element({mono: c}) if c else Element()
    return out


def certify_matrix_block(fam: BigD, tail: Tail, phi: Dict[Tuple[int, int], Element]) -> VerificationReport:
    n = fam.n
    F = fam.field
    rep = VerificationReport(f"matrix block {format_tail(tail)}")
    images = set()
    bij = Tally("phi.bijective")
    for key, e in phi.items():
        ok = len(e) == 1 and next(iter(e.values())) != F.zero
        bij.record(ok, lambda: {"c": list(key), "image": fam.format_element(e)})
        images.update(e)
    bij.record(images == set(fam.block_monomials(tail)) and len(images) == n * n,
               lambda: {"images": len(images), "block": len(fam.block_monomials(tail))})
    rep.add(bij.result())
    cnt = Tally("phi.counit")
    com = Tally("phi.comultiplicative")
    for (s, t), e in sorted(phi.items()):
        eps = sum((fam.epsilon_mono(m) * c for m, c in e.items()), F.zero)
        cnt.record(eps == (F.one if s == t else F.zero), lambda: {"c": [s, t], "eps": str(eps)})
        lhs: Dict = {}
        for m, c in e.items():
            for pair, d in fam.delta_closed(m).items():
                acc(lhs, pair, c * d)
        rhs: Dict = {}
        for k in range(1, n + 1):
            for a, ca in phi[(s, k)].items():
                for b, cb in phi[(k, t)].items():
                    acc(rhs, (a, b), ca * cb)
        com.record(lhs == rhs, lambda: {"c": [s, t], "lhs": str(len(lhs)), "rhs": str(len(rhs))})
    rep.add(cnt.result())
    rep.add(com.result())
    return rep


def certify_translate(fam: BigD, tail: Tail) -> VerificationReport:
    """x^s u^t -> x^s u^t a_F^E is a coalgebra isomorphism from the empty-tail block."""
    rep = VerificationReport(f"translate block {format_tail(tail)}")
    g = (0, 0, tail)
    tr = Tally("translate.grouplike")
    tr.record(fam.delta_closed(g) == {(g, g): fam.field.one} and fam.epsilon_mono(g).is_one(),
              lambda: {"a": format_tail(tail)})
    rep.add(tr.result())
    com = Tally("translate.comultiplicative")
    cnt = Tally("translate.counit")
    for (s, t, _) in fam.block_monomials(()):
        src = fam.delta_closed((s, t, ()))
        moved = {((a[0], a[1], tail), (b[0], b[1], tail)): c for (a, b), c in src.items()}
        got = fam.delta_closed((s, t, tail))
        com.record(moved == got, lambda: {"monomial": fam.format_mono((s, t, tail))})
        cnt.record(fam.epsilon_mono((s, t, tail)) == fam.epsilon_mono((s, t, ())),
                   lambda: {"monomial": fam.format_mono((s, t, tail))})
    rep.add(com.result())
    rep.add(cnt.result())
    return rep


def classify_block(fam: BigD, block: Block) -> Block:
    """Tag the block and attach its certificate (in place; also returned)."""
    mu = fam.mu(block.tail)
    if mu:
        if fam.m != fam.n:
            raise ValueError("matrix blocks need m = n")
        phi = phi_matrix(fam, block.tail)
        block.tag = MATRIX
        block.phi = phi
        block.report = certify_matrix_block(fam, block.tail, phi)
    else:
        block.tag = TAFT
        block.translate = (0, 0, block.tail)
        block.report = certify_translate(fam, block.tail)
    return block


def classify_window(fam: BigD, window) -> List[Block]:
    return [classify_block(fam, b) for b in block_decompose(fam, window)]


def blocks_report(fam: BigD, blocks: Sequence[Block]) -> VerificationReport:
    rep = VerificationReport("block classification", meta={"blocks": len(blocks)})
    for b in blocks:
        if b.report is not None:
            rep.extend(b.report, prefix=f"{format_tail(b.tail)}/")
    return rep


# ---------------------------------------------------------------------------
# group-likes, socle, finite type


def is_grouplike(fam, mono) -> bool:
    F = fam.field
    if fam.delta_closed(mono) != {(mono, mono): F.one} or not fam.epsilon_mono(mono).is_one():
        return False
    return element_mul(fam, fam.antipode_mono(mono), {mono: F.one}) == fam.unit_element()


def group_likes(fam: BigD, window) -> List:
    out = []
    for tail in _tails_of(window):
        for t in range(fam.m):
            mono = (0, t, tail)
            if is_grouplike(fam, mono):
                out.append(mono)
    return out


def lambda_tails(fam: BigD, window) -> List[Tail]:
    return [t for t in _tails_of(window) if not fam.mu(t)]


@dataclass
class HopfSocle:
    grouplikes: List
    dim: int
    finite_dimensional_hint: bool
    fusion_socle: Optional[List] = None
    obstructions: List[dict] = field(default_factory=list)

    def to_json(self, fam: BigD) -> dict:
        out = {
            "grouplikes": [fam.format_mono(g) for g in self.grouplikes],
            "dim": self.dim,
            "only_empty_tail": self.finite_dimensional_hint,
            "obstructions": self.obstructions,
        }
        if self.fusion_socle is not None:
            out["fusion_socle"] = [fam.format_mono(g) for g in self.fusion_socle]
        return out


def hopf_socle(fam: BigD, window, check_fusion: bool = True) -> HopfSocle:
    """Windowed Hopf socle.

    With ``check_fusion`` the socle is also computed from its definition: the
    simples W whose products with every windowed simple V (both orders) have
    coefficients inside the windowed coradical; the result is stored as
    ``fusion_socle`` (a monomial basis, since every such coefficient space is
    monomial here).
    """
    tails = _tails_of(window)
    gl = group_likes(fam, tails)
    only_empty = all(not g[2] for g in gl)
    soc = HopfSocle(gl, len(gl), only_empty)
    if not check_fusion:
        return soc
    from .fusion import simple_comodules, tensor_is_semisimple

    simples = simple_comodules(fam, tails)
    have = set(tails)
    coradical = _windowed_coradical(fam, tails)
    socle_monos = set()
    for name_w, W, tail_w in simples:
        ok = True
        witness = None
        for name_v, V, tail_v in simples:
            if merge_tails(tail_v, tail_w) not in have:
                continue
            for left, right in ((V, W), (W, V)):
                if not tensor_is_semisimple(left, right, coradical):
                    ok = False
                    witness = {"simple": name_w, "partner": name_v,
                               "product": f"{left.name} ⊗ {right.name}"}
                    break
            if not ok:
                break
        if ok:
            socle_monos.update(W.monomials())
        elif fam.mu(tail_w):
            soc.obstructions.append(witness)
    soc.fusion_socle = sorted(socle_monos)
    return soc


def _windowed_coradical(fam: BigD, tails: Sequence[Tail]) -> CoefficientSpace:
    monos = []
    for tail in tails:
        if fam.mu(tail):
            monos.extend(fam.block_monomials(tail))
        else:
            monos.extend((0, t, tail) for t in range(fam.m))
    return CoefficientSpace(fam, [{m: fam.field.one} for m in monos])


@dataclass
class FiniteType:
    value: bool
    certificate: dict

    def to_json(self) -> dict:
        return {"finite_type": self.value, "certificate": self.certificate}


def finite_type(fam: BigD) -> FiniteType:
    """Finite type over the Hopf socle (I finite)."""
    if fam.limit:
        return FiniteType(False, {
            "reason": "twist of a_F^E is the exponent sum, so group-likes are the tails with sum 0; "
                      "the powers a_i^k lie in pairwise distinct cosets of the socle",
            "index": list(fam.index),
        })
    if not fam.alpha:
        return FiniteType(True, {"reason": "alpha = 0, every u^t a_F^E is group-like"})
    orders = {}
    bad = []
    for i in fam.index:
        nu = root_of_unity_order(fam.q[i])
        if nu is None:
            bad.append(i)
        else:
            orders[i] = nu
    if bad:
        return FiniteType(False, {"not_roots_of_unity": {str(i): str(fam.q[i]) for i in bad}})
    J = [i for i in fam.index if fam.n % orders[i]]
    return FiniteType(True, {"J": J, "orders": {str(i): orders[i] for i in fam.index}})


# ---------------------------------------------------------------------------
# coradical filtration


def _dual_product(sc: StructureConstants, a: Sequence[Scalar], b: Sequence[Scalar]) -> List[Scalar]:
    F = sc.field
    out = [F.zero] * sc.dim
    for k, row in sc.comult.items():
        total = F.zero
        for (i, j), c in row.items():
            if a[i] and b[j]:
                total = total + a[i] * b[j] * c
        out[k] = total
    return out


def trace_form(sc: StructureConstants) -> List[List[Scalar]]:
    """(f_i, f_j) -> Tr(L_{f_i f_j}) on the dual algebra."""
    F = sc.field
    tr = [F.zero] * sc.dim
    for l, row in sc.comult.items():
        for (k, l2), c in row.items():
            if l2 == l:
                tr[k] = tr[k] + c
    T = [[F.zero] * sc.dim for _ in range(sc.dim)]
    for k, row in sc.comult.items():
        if not tr[k]:
            continue
        for (i, j), c in row.items():
            T[i][j] = T[i][j] + c * tr[k]
    return T


def dual_radical_char0(sc: StructureConstants) -> List[List[Scalar]]:
    if sc.field.characteristic:
        raise ValueError("the trace-form radical is only valid in characteristic 0; supply C_0 instead")
    return linalg.nullspace(sc.field, trace_form(sc), sc.dim)


def annihilator(sc: StructureConstants, vectors: Sequence[Sequence[Scalar]]) -> List[List[Scalar]]:
    rows = [list(v) for v in vectors if any(v)]
    return linalg.nullspace(sc.field, rows, sc.dim)


def coradical_char0(sc: StructureConstants) -> List[List[Scalar]]:
    """Basis of C_0 (coordinates in the structure-constant basis)."""
    return linalg.rref(sc.field, annihilator(sc, dual_radical_char0(sc)))[0]


@dataclass
class CoradicalFiltration:
    sc: StructureConstants
    basis: List
    radical_powers: List[List[List[Scalar]]]
    levels: List[List[List[Scalar]]]
    length: int
    simples: Optional[List[Comodule]] = None

    def level_dims(self) -> List[int]:
        return [len(l) for l in self.levels]

    def to_json(self) -> dict:
        return {"dim": self.sc.dim, "levels": self.level_dims(), "length": self.length}


def coradical_filtration(sc: StructureConstants, basis: Optional[Sequence] = None,
                         c0: Optional[Sequence[Sequence[Scalar]]] = None,
                         simples: Optional[List[Comodule]] = None) -> CoradicalFiltration:
    """C_k = (J^{k+1})^perp with J the radical of the dual algebra.

    J comes from the trace form in characteristic 0, otherwise from a supplied C_0.
    """
    F = sc.field
    if c0 is None:
        J = dual_radical_char0(sc)
    else:
        J = annihilator(sc, c0)
    J = linalg.rref(F, J)[0] if J else []
    powers = []
    P = J
    while P:
        powers.append(P)
        prods = [_dual_product(sc, a, b) for a in P for b in J]
        P = linalg.rref(F, [p for p in prods if any(p)])[0] if any(any(p) for p in prods) else []
        if len(powers) > sc.dim + 1:
            raise FiltrationError("radical is not nilpotent")
    levels = [linalg.rref(F, annihilator(sc, p))[0] for p in powers]
    full = [[F.one if i == j else F.zero for i in range(sc.dim)] for j in range(sc.dim)]
    levels.append(full)
    return CoradicalFiltration(sc, list(basis) if basis is not None else list(range(sc.dim)),
                               powers, levels, len(powers) + 1, simples)


def filtration_for(fam, monomials: Sequence, c0_monos: Optional[Sequence] = None,
                   simples: Optional[List[Comodule]] = None) -> CoradicalFiltration:
    sc = StructureConstants.from_family(fam, monomials, coalgebra_only=True)
    c0 = None
    if c0_monos is not None:
        idx = {m: i for i, m in enumerate(monomials)}
        F = fam.field
        c0 = []
        for v in c0_monos:
            vec = [F.zero] * len(monomials)
            items = v.items() if isinstance(v, dict) else ((v, F.one),)
            for m, c in items:
                vec[idx[m]] = c
            c0.append(vec)
    return coradical_filtration(sc, monomials, c0, simples)


# ---------------------------------------------------------------------------
# Loewy series


@dataclass
class LoewySeries:
    socles: List[List[List[Scalar]]]
    dims: List[int]
    loewy_length: int
    composition_length: Optional[int]
    layers: List[Dict[str, int]]

    def to_json(self) -> dict:
        return {"dims": self.dims, "loewy_length": self.loewy_length,
                "composition_length": self.composition_length, "layers": self.layers}


def _coefficient_table(M: Comodule, basis: Sequence) -> List[List[List[Scalar]]]:
    idx = {b: i for i, b in enumerate(basis)}
    F = M.fam.field
    out = []
    for i in range(M.dim):
        row = []
        for j in range(M.dim):
            vec = [F.zero] * len(basis)
            for m, c in M.C[i][j].items():
                if m not in idx:
                    raise FiltrationError(f"coefficient {M.fam.format_mono(m)} lies outside the filtration window")
                vec[idx[m]] = c
            row.append(vec)
        out.append(row)
    return out


def _grouplike_simples(fam, basis: Sequence) -> List[Comodule]:
    out = [one_dimensional(fam, m, f"k[{fam.format_mono(m)}]") for m in basis if is_grouplike(fam, m)]
    unit = fam.unit_element()
    if len(unit) > 1 and all(m in set(basis) for m in unit):
        out.append(trivial_comodule(fam))
    return out


def loewy_series(M: Comodule, filt: CoradicalFiltration, simples: Optional[List[Comodule]] = None) -> LoewySeries:
    """Socle series Soc^{k+1} = rho^{-1}(M ⊗ C_k) with lengths.

    ``simples`` (or ``filt.simples``) are the candidate simple comodules used to
    count composition factors; by default the 1-dimensional comodules of the
    group-like basis monomials of the window.
    """
    fam = M.fam
    F = fam.field
    table = _coefficient_table(M, filt.basis)
    socles = []
    dims = []
    for k in range(len(filt.levels)):
        if k < len(filt.radical_powers):
            rows = []
            for phi in filt.radical_powers[k]:
                for i in range(M.dim):
                    row = []
                    for j in range(M.dim):
                        v = table[i][j]
                        s = F.zero
                        for a, b in zip(phi, v):
                            if a and b:
                                s = s + a * b
                        row.append(s)
                    if any(row):
                        rows.append(row)
            sub = linalg.nullspace(F, rows, M.dim)
        else:
            sub = [[F.one if i == j else F.zero for i in range(M.dim)] for j in range(M.dim)]
        socles.append(sub)
        dims.append(len(sub))
        if len(sub) == M.dim:
            break
    if not dims or dims[-1] != M.dim:
        raise FiltrationError("filtration window too small to stabilize")
    ll = len(dims)
    cands = simples if simples is not None else filt.simples
    if cands is None:
        cands = _grouplike_simples(fam, filt.basis)
    length, layers = _composition_length(M, socles, cands)
    return LoewySeries(socles, dims, ll, length, layers)


def _adapted_basis(F, socles: List[List[List[Scalar]]], dim: int) -> Tuple[List[List[Scalar]], List[int]]:
    chosen: List[List[Scalar]] = []
    cuts = []
    for sub in socles:
        for v in sub:
            if not linalg.in_span(F, chosen, v):
                chosen.append(v)
        cuts.append(len(chosen))
    return chosen, cuts


def _composition_length(M: Comodule, socles, simples: List[Comodule]):
    fam = M.fam
    F = fam.field
    vecs, cuts = _adapted_basis(F, socles, M.dim)
    P = [[vecs[j][i] for j in range(M.dim)] for i in range(M.dim)]
    Pinv = linalg.inverse(F, P)
    Madapted = change_basis(M, P, Pinv)
    total = 0
    layers = []
    lo = 0
    for hi in cuts:
        Q = Comodule(fam, [row[lo:hi] for row in Madapted.C[lo:hi]], f"layer{len(layers) + 1}", check=False)
        counted = 0
        mult: Dict[str, int] = {}
        for S in simples:
            d = len(hom_space(S, Q))
            if d:
                mult[S.name] = d
                counted += d * S.dim
        if counted != Q.dim:
            return None, layers
        layers.append(mult)
        total += sum(mult.values())
        lo = hi
    return total, layers
