"""Smash coproducts kG # k^K for a finite abelian K acting freely on G.

The shipped preset is G = Z (written additively, element z standing for x^z)
with K = C_2 acting by inversion, over F_p with p | |K|.  A monomial is
``(z, k)`` for ``z # delta_k``; K elements are indices into a multiplication
table with 0 the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import linalg
from .comodules import (CoefficientSpace, Comodule, certify_isomorphism, coefficient_space, direct_sum,
                        is_morphism, regular_comodule, span_of_monomials, tensor_comodules)
from .dualization import function_algebra
from .families.core import Element, HopfFamily, acc, verify_hopf
from .report import CheckResult, Tally, VerificationReport
from .scalars import Field, FieldSpec, Scalar, field_make

Mono = Tuple[int, int]


@dataclass(frozen=True)
class SmashSpec:
    """Acting group given by a multiplication table; G = Z with K acting through ``signs``.

    ``signs[k]`` is +1 or -1: the automorphism z -> signs[k] * z of Z.
    """

    p: int
    kmul: Tuple[Tuple[int, ...], ...]
    signs: Tuple[int, ...]
    zmax: int = 8

    @classmethod
    def z_c2(cls, p: int = 2, zmax: int = 8) -> "SmashSpec":
        return cls(p, ((0, 1), (1, 0)), (1, -1), zmax)

    @property
    def order(self) -> int:
        return len(self.kmul)

    def validate(self) -> None:
        n = self.order
        if self.order % self.p:
            raise ValueError(f"characteristic {self.p} must divide |K| = {n}")
        if any(len(r) != n for r in self.kmul) or len(self.signs) != n:
            raise ValueError("malformed group table")
        if self.signs[0] != 1:
            raise ValueError("the identity must act trivially")
        for a in range(n):
            for b in range(n):
                if self.kmul[a][b] != self.kmul[b][a]:
                    raise ValueError("K must be abelian")
                if self.signs[self.kmul[a][b]] != self.signs[a] * self.signs[b]:
                    raise ValueError("signs do not define an action")
        # freeness on Z \ {0}: only the identity may fix a nonzero z
        fixers = [k for k in range(n) if self.signs[k] == 1]
        if fixers != [0]:
            raise ValueError("the action is not free away from 0")

    def to_json(self) -> dict:
        return {"p": self.p, "K_order": self.order, "action": "inversion" if self.signs == (1, -1) else list(self.signs),
                "zmax": self.zmax}


class SmashHopf(HopfFamily):
    kind = "smash"

    def __init__(self, spec: SmashSpec):
        spec.validate()
        super().__init__(field_make(FieldSpec.prime(spec.p)))
        self.spec = spec
        self.nK = spec.order
        self.kinv = [next(b for b in range(self.nK) if spec.kmul[a][b] == 0) for a in range(self.nK)]
        self.one = None

    def act(self, k: int, z: int) -> int:
        return self.spec.signs[k] * z

    def kmul(self, a: int, b: int) -> int:
        return self.spec.kmul[a][b]

    def is_mono(self, x) -> bool:
        return isinstance(x, tuple) and len(x) == 2 and all(isinstance(v, int) for v in x)

    def unit_element(self) -> Element:
        return Element({(0, k): self.field.one for k in range(self.nK)})

    def mul_pairs(self, a: Mono, b: Mono):
        if a[1] != b[1]:
            return ()
        return (((a[0] + b[0], a[1]), self.field.one),)

    def _delta_closed(self, mono: Mono) -> Element:
        z, k = mono
        one = self.field.one
        return Element({((z, t), (self.act(t, z), self.kmul(self.kinv[t], k))): one for t in range(self.nK)})

    def epsilon_mono(self, mono: Mono) -> Scalar:
        return self.field.one if mono[1] == 0 else self.field.zero

    def _antipode(self, mono: Mono) -> Element:
        z, k = mono
        return Element({(self.act(k, -z), self.kinv[k]): self.field.one})

    def relations(self):
        return []

    def window(self, zmax: Optional[int] = None, **_ignored) -> List[Mono]:
        zm = self.spec.zmax if zmax is None else zmax
        return [(z, k) for z in range(-zm, zm + 1) for k in range(self.nK)]

    def format_mono(self, mono: Mono) -> str:
        z, k = mono
        g = "1" if z == 0 else ("x" if z == 1 else f"x^{z}")
        return f"{g}#d{k}"

    def describe(self) -> dict:
        return {"kind": "smash", **self.spec.to_json()}

    # orbits: representative is |z|
    def orbit(self, z: int) -> List[int]:
        return sorted({self.act(k, z) for k in range(self.nK)})

    def representative(self, z: int) -> int:
        return abs(z)

    def block_monomials(self, rep: int) -> List[Mono]:
        if rep == 0:
            return [(0, k) for k in range(self.nK)]
        return [(self.act(i, rep), j) for i in range(self.nK) for j in range(self.nK)]


def smash_build(spec: SmashSpec) -> Tuple[SmashHopf, VerificationReport]:
    fam = SmashHopf(spec)
    return fam, verify_hopf(fam, cross_check=False)


# ---------------------------------------------------------------------------
# blocks


@dataclass
class SmashBlock:
    rep: int
    monomials: List[Mono]
    tag: str
    phi: Dict[Mono, Tuple[int, int]]
    report: VerificationReport

    def to_json(self, fam: SmashHopf) -> dict:
        return {
            "tail": fam.format_mono((self.rep, 0)).split("#")[0],
            "dim": len(self.monomials),
            "class": self.tag,
            "iso": [[fam.format_mono(m), list(v)] for m, v in sorted(self.phi.items())],
            "certificate": [c.to_json() for c in self.report.checks],
        }


def _matrix_block(fam: SmashHopf, rep: int) -> SmashBlock:
    """(k_i . g) # delta_{k_j} -> e_{il} with k_i k_j = k_l."""
    n = fam.nK
    F = fam.field
    phi: Dict[Mono, Tuple[int, int]] = {}
    for i in range(n):
        for j in range(n):
            phi[(fam.act(i, rep), j)] = (i, fam.kmul(i, j))
    rep_ = VerificationReport(f"smash matrix block {rep}")
    bij = Tally("phi.bijective")
    bij.record(len(set(phi.values())) == n * n and len(phi) == n * n)
    rep_.add(bij.result())
    cnt = Tally("phi.counit")
    com = Tally("phi.comultiplicative")
    for mono, (i, l) in sorted(phi.items()):
        cnt.record(fam.epsilon_mono(mono) == (F.one if i == l else F.zero), lambda: {"monomial": fam.format_mono(mono)})
        image: Dict = {}
        for (a, b), c in fam.delta_closed(mono).items():
            if a not in phi or b not in phi:
                image = None
                break
            acc(image, (phi[a], phi[b]), c)
        expected = {((i, r), (r, l)): F.one for r in range(n)}
        com.record(image == expected, lambda: {"monomial": fam.format_mono(mono)})
    rep_.add(cnt.result())
    rep_.add(com.result())
    return SmashBlock(rep, sorted(phi), f"MatrixBlock({n})", phi, rep_)


def _function_block(fam: SmashHopf) -> SmashBlock:
    """1 # delta_k -> delta_k in k^K (cyclic K: compared with the function-algebra tables)."""
    n = fam.nK
    sc = function_algebra(fam.field, n)
    phi = {(0, k): (k, k) for k in range(n)}
    rep_ = VerificationReport("smash identity block")
    com = Tally("function_algebra.comultiplicative")
    cnt = Tally("function_algebra.counit")
    for k in range(n):
        got = {(a[1], b[1]): c for (a, b), c in fam.delta_closed((0, k)).items()}
        com.record(got == sc.comult[k], lambda: {"k": k})
        cnt.record(fam.epsilon_mono((0, k)) == sc.counit.get(k, fam.field.zero), lambda: {"k": k})
    rep_.add(com.result())
    rep_.add(cnt.result())
    return SmashBlock(0, [(0, k) for k in range(n)], "FunctionAlgebraBlock", phi, rep_)


def smash_blocks(fam: SmashHopf, zmax: Optional[int] = None) -> List[SmashBlock]:
    zm = fam.spec.zmax if zmax is None else zmax
    return [_function_block(fam)] + [_matrix_block(fam, r) for r in range(1, zm + 1)]


def smash_coradical(fam: SmashHopf, zmax: Optional[int] = None) -> CoefficientSpace:
    """C_0 over the window: the matrix blocks plus the unit (the only group-like of k^K when p | |K|)."""
    zm = fam.spec.zmax if zmax is None else zmax
    vecs = [fam.unit_element()]
    for r in range(1, zm + 1):
        vecs.extend({m: fam.field.one} for m in fam.block_monomials(r))
    return CoefficientSpace(fam, vecs)


# ---------------------------------------------------------------------------
# simples and fusion


def simple_smash(fam: SmashHopf, z: int) -> Comodule:
    """S_g = span{g # delta_k}."""
    return regular_comodule(fam, [(z, k) for k in range(fam.nK)], f"S_{z}")


def function_comodule(fam: SmashHopf) -> Comodule:
    return regular_comodule(fam, [(0, k) for k in range(fam.nK)], "k^K")


def representative_iso(fam: SmashHopf, z: int) -> Tuple[List[List[Scalar]], int]:
    """(k . g) # delta_j -> g # delta_{kj} from S_z to S_rep."""
    F = fam.field
    rep = fam.representative(z)
    k = next(k for k in range(fam.nK) if fam.act(k, rep) == z)
    n = fam.nK
    P = [[F.zero] * n for _ in range(n)]
    for j in range(n):
        P[fam.kmul(k, j)][j] = F.one
    return P, rep


@dataclass
class SmashFusion:
    g: int
    h: int
    summands: List[str]
    semisimple_flag: bool
    report: VerificationReport

    def to_json(self) -> dict:
        return {"pair": [f"S_{self.g}", f"S_{self.h}"], "summands": self.summands,
                "semisimple": self.semisimple_flag, "certified": self.report.passed}


def smash_fusion(fam: SmashHopf, g: int, h: int, coradical: Optional[CoefficientSpace] = None) -> SmashFusion:
    F = fam.field
    n = fam.nK
    Sg, Sh = simple_smash(fam, g), simple_smash(fam, h)
    T = tensor_comodules(Sg, Sh)
    targets = []
    for r in range(n):
        targets.append(fam.act(r, g) + h)
    parts = [simple_smash(fam, z) for z in targets]
    D = direct_sum(parts)
    # f: (g#d_l) ⊗ (h#d_m) -> (k_r.g)h # d_m with k_r = k_m^{-1} k_l
    f = [[F.zero] * (n * n) for _ in range(n * n)]
    for l in range(n):
        for m in range(n):
            r = fam.kmul(fam.kinv[m], l)
            f[r * n + m][l * n + m] = F.one
    rep = VerificationReport(f"S_{g} ⊗ S_{h}")
    rep.add(certify_isomorphism(T, D, f, "posdecomp.f"))
    names = []
    reps = Tally("orbit_representative")
    for z, S in zip(targets, parts):
        P, r0 = representative_iso(fam, z)
        if r0 == 0:
            target = function_comodule(fam)
            names.append("k^K")
        else:
            target = simple_smash(fam, r0)
            names.append(f"S_{r0}")
        ok = linalg.rank(F, P) == n and is_morphism(P, S, target)
        reps.record(ok, lambda: {"from": f"S_{z}", "to": names[-1]})
    rep.add(reps.result())
    nonss = any(fam.representative(z) == 0 for z in targets)
    orbit_rule = fam.representative(g) == fam.representative(-h)
    rep.add(CheckResult("flag_matches_orbit_rule", nonss == orbit_rule, 1))
    if coradical is not None:
        ss = coefficient_space(T).issubspace(coradical)
        rep.add(CheckResult("semisimplicity_by_coefficients", ss == (not nonss), 1,
                            None if ss == (not nonss) else {"coefficients_in_coradical": ss}))
    return SmashFusion(g, h, sorted(names, key=_summand_key), not nonss, rep)


def _summand_key(name: str):
    return (1, 0) if name == "k^K" else (0, -int(name.split("_")[1]))


def expected_example_rule(n: int, m: int) -> List[str]:
    """S_n ⊗ S_m for the Z, C_2 preset with n, m > 0."""
    if n == m:
        return sorted([f"S_{2 * n}", "k^K"], key=_summand_key)
    return sorted([f"S_{n + m}", f"S_{abs(m - n)}"], key=_summand_key)


def verify_smash(spec: SmashSpec, pair_max: Optional[int] = None) -> VerificationReport:
    fam, hopf = smash_build(spec)
    rep = VerificationReport("smash coproduct", meta={"spec": spec.to_json()})
    rep.extend(hopf, prefix="hopf/")
    for b in smash_blocks(fam):
        rep.extend(b.report, prefix=f"block{b.rep}/")
    cor = smash_coradical(fam, 2 * spec.zmax)
    pm = spec.zmax if pair_max is None else pair_max
    rules = Tally("example_rules")
    certs = Tally("posdecomp")
    rows = []
    for a in range(1, pm + 1):
        for b in range(1, pm + 1):
            res = smash_fusion(fam, a, b, cor)
            certs.record(res.report.passed, lambda: {"pair": [a, b], "failed": [c.name for c in res.report.failures()]})
            exp = expected_example_rule(a, b)
            rules.record(res.summands == exp, lambda: {"pair": [a, b], "got": res.summands, "expected": exp})
            rows.append(res.to_json())
    rep.add(certs.result())
    rep.add(rules.result())
    rep.meta["fusion"] = rows
    return rep
