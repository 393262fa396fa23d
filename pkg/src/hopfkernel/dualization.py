"""The dual D(G, g, chi, alpha) of a lifting H(G, g, chi, alpha), built by pairing.

Functionals on H are dicts ``{basis monomial: value}``.  Products of
functionals are convolutions through the coproduct of H, so every relation is
checked by evaluating both sides on the whole basis.

The module also handles finite-dimensional Hopf algebras given by structure
constants (:class:`StructureConstants`) and their duals.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .families.bigd import BigD
from .families.core import Element, HopfFamily, acc
from .families.lifted import Lifted
from .report import CheckResult, Tally, VerificationReport
from .scalars import Field, Scalar, root_of_unity_order

Functional = Dict[object, Scalar]


class DualSpec:
    """Derived data for the dual of a Lifted family."""

    def __init__(self, H: Lifted, size_cap: int = 512):
        if H.dim > size_cap:
            raise ValueError(f"dim H = {H.dim} exceeds the size cap {size_cap}")
        if H.alpha and not (H.m == H.n and H.gamma == 1 and not any(H.f)):
            raise ValueError("alpha != 0 needs the presentation u = g (m = n, gamma = 1, f = 0)")
        self.H = H
        F = H.field
        self.field = F
        self.m, self.n = H.m, H.n
        self.p_list = H.p
        self.p = math.prod(H.p)
        self.d = tuple(self.p // pi for pi in H.p)
        self.theta = H.theta
        self.gamma, self.f = H.gamma, H.f
        self.eta = H.eta
        self.omega = H.omega
        self.order = H.order
        self.xi = self._find_xi()
        self.basis = H.basis()
        self.index = {b: i for i, b in enumerate(self.basis)}

    def _find_xi(self) -> Scalar:
        F = self.field
        G = self.order
        if F.is_prime:
            raise ValueError("duality checks run over cyclotomic fields")
        N = F.spec.modulus
        if N % G:
            raise ValueError(f"conductor {N} must be a multiple of |G| = {G}")
        for k in range(1, G + 1):
            if math.gcd(k, G) != 1:
                continue
            cand = F.zeta((N // G) * k)
            if cand ** self.p == self.eta:
                return cand
        raise ValueError("no primitive |G|-th root xi with xi^p = eta")

    def describe(self) -> dict:
        return {
            "m": self.m, "n": self.n, "p": list(self.p_list), "d": list(self.d),
            "theta": list(self.theta), "gamma": self.gamma, "f": list(self.f),
            "eta": str(self.eta), "xi": str(self.xi), "omega": str(self.omega),
        }

    # -- generators as functionals ------------------------------------------
    def U(self) -> Functional:
        return {b: self.eta ** b[1][0] for b in self.basis if b[0] == 0}

    def X(self) -> Functional:
        return {b: self.field.one for b in self.basis if b[0] == 1}

    def A(self, i: int) -> Functional:
        """A_i with i 0-based."""
        out = {}
        for b in self.basis:
            if b[0] == 0:
                t, e = b[1]
                out[b] = self.xi ** (self.d[i] * (self.theta[i] * t + self.m * e[i]))
        return out

    def one(self) -> Functional:
        return {b: self.field.one for b in self.basis if b[0] == 0}

    def zero(self) -> Functional:
        return {}

    def q_dual(self, i: int) -> Scalar:
        """The commutation scalar of A_i past X."""
        return self.xi ** (self.d[i] * (self.theta[i] * self.gamma + self.m * self.f[i]))

    # -- algebra of functionals ----------------------------------------------
    def conv(self, f: Functional, g: Functional) -> Functional:
        out: Functional = {}
        if not f or not g:
            return out
        H = self.H
        for b in self.basis:
            total = self.field.zero
            for (b1, b2), c in H.delta_closed(b).items():
                v1 = f.get(b1)
                if v1 is None:
                    continue
                v2 = g.get(b2)
                if v2 is None:
                    continue
                total = total + c * v1 * v2
            if total:
                out[b] = total
        return out

    def power(self, f: Functional, k: int) -> Functional:
        out = self.one()
        for _ in range(k):
            out = self.conv(out, f)
        return out

    def word(self, j: int, t: int, e: Sequence[int]) -> Functional:
        """X^j U^t A^e by convolution."""
        out = self.power(self.X(), j)
        out = self.conv(out, self.power(self.U(), t))
        for i, ei in enumerate(e):
            out = self.conv(out, self.power(self.A(i), ei))
        return out

    def dual_eval(self, jp: int, tp: int, ep: Sequence[int], b) -> Scalar:
        """Closed evaluation of X^{j'}U^{t'}A^{e'} at the basis monomial b."""
        j, (t, e) = b
        if j != jp:
            return self.field.zero
        val = self.H.qctx.q_factorial(jp) * self.eta ** (t * tp)
        for i, epi in enumerate(ep):
            val = val * self.xi ** (self.d[i] * epi * (self.theta[i] * t + self.m * e[i]))
        return val

    def dual_exponents(self) -> List[Tuple[int, int, Tuple[int, ...]]]:
        return [(j, t, e) for j in range(self.n) for t in range(self.m)
                for e in itertools.product(*(range(pi) for pi in self.p_list))]

    def scale(self, f: Functional, c: Scalar) -> Functional:
        return {k: v * c for k, v in f.items()} if c else {}

    def add(self, f: Functional, g: Functional) -> Functional:
        out = dict(f)
        for k, v in g.items():
            acc(out, k, v)
        return out


def _fmt_b(dspec: DualSpec, b) -> str:
    return dspec.H.format_mono(b)


def _func_eq(dspec: DualSpec, name: str, f: Functional, g: Functional, tally: Tally) -> None:
    ok = f == g
    def wit():
        bad = next(b for b in dspec.basis if f.get(b, dspec.field.zero) != g.get(b, dspec.field.zero))
        return {"relation": name, "basis": _fmt_b(dspec, bad),
                "lhs": str(f.get(bad, dspec.field.zero)), "rhs": str(g.get(bad, dspec.field.zero))}
    tally.record(ok, wit)


def verify_dual_relations(dspec: DualSpec) -> VerificationReport:
    rep = VerificationReport("dual relations", meta={"dual": dspec.describe(), "dim": len(dspec.basis)})
    t = Tally("relations")
    U, X = dspec.U(), dspec.X()
    one = dspec.one()
    _func_eq(dspec, "U^m=1", dspec.power(U, dspec.m), one, t)
    _func_eq(dspec, "X^n=0", dspec.power(X, dspec.n), {}, t)
    _func_eq(dspec, "UX=wXU", dspec.conv(U, X), dspec.scale(dspec.conv(X, U), dspec.omega), t)
    s = len(dspec.p_list)
    for i in range(s):
        Ai = dspec.A(i)
        _func_eq(dspec, f"A{i+1}^p=U^theta", dspec.power(Ai, dspec.p_list[i]), dspec.power(U, dspec.theta[i]), t)
        _func_eq(dspec, f"UA{i+1}=A{i+1}U", dspec.conv(U, Ai), dspec.conv(Ai, U), t)
        _func_eq(dspec, f"A{i+1}X=qXA{i+1}", dspec.conv(Ai, X),
                 dspec.scale(dspec.conv(X, Ai), dspec.q_dual(i)), t)
        for r in range(i + 1, s):
            Ar = dspec.A(r)
            _func_eq(dspec, f"A{i+1}A{r+1}=A{r+1}A{i+1}", dspec.conv(Ai, Ar), dspec.conv(Ar, Ai), t)
    rep.add(t.result())

    # the evaluation formula against convolution words
    ev = Tally("evaluation_formula")
    for jp, tp, ep in dspec.dual_exponents():
        w = dspec.word(jp, tp, ep)
        closed = {}
        for b in dspec.basis:
            v = dspec.dual_eval(jp, tp, ep, b)
            if v:
                closed[b] = v
        _func_eq(dspec, f"X^{jp}U^{tp}A^{list(ep)}", w, closed, ev)
    rep.add(ev.result())
    return rep


def verify_dual_coproduct(dspec: DualSpec) -> VerificationReport:
    """<Delta_D(Y), b (x) b'> = <Y, b b'> for Y in {U, X, A_i}, plus counit and antipode."""
    rep = VerificationReport("dual coproduct", meta={"dual": dspec.describe()})
    H = dspec.H
    F = dspec.field
    U, X, one = dspec.U(), dspec.X(), dspec.one()
    ctx = H.qctx
    n = dspec.n

    def pair_prod(f: Functional, b1, b2) -> Scalar:
        total = F.zero
        for k, c in H.mul_pairs(b1, b2):
            v = f.get(k)
            if v is not None:
                total = total + c * v
        return total

    def check(name: str, f: Functional, terms: List[Tuple[Scalar, Functional, Functional]]):
        tl = Tally(name)
        for b1 in dspec.basis:
            for b2 in dspec.basis:
                lhs = pair_prod(f, b1, b2)
                rhs = F.zero
                for c, g, h in terms:
                    v1 = g.get(b1)
                    if v1 is None:
                        continue
                    v2 = h.get(b2)
                    if v2 is None:
                        continue
                    rhs = rhs + c * v1 * v2
                tl.record(lhs == rhs, lambda: {"pair": f"{_fmt_b(dspec, b1)} | {_fmt_b(dspec, b2)}",
                                               "lhs": str(lhs), "rhs": str(rhs)})
        rep.add(tl.result())

    check("delta.U", U, [(F.one, U, U)])
    check("delta.X", X, [(F.one, U, X), (F.one, X, one)])
    eps = Tally("counit")
    eps.record(U.get(H.one) == F.one)
    eps.record(X.get(H.one, F.zero) == F.zero)
    for i in range(len(dspec.p_list)):
        Ai = dspec.A(i)
        mu = H.alpha * (F.one - dspec.xi ** (dspec.d[i] * dspec.theta[i] * dspec.m))
        terms = [(F.one, Ai, Ai)]
        if mu:
            for k in range(1, n):
                c = mu * ctx.inv_factorial(k) * ctx.inv_factorial(n - k)
                left = dspec.conv(dspec.conv(dspec.power(X, n - k), dspec.power(U, k)), Ai)
                right = dspec.conv(dspec.power(X, k), Ai)
                terms.append((c, left, right))
        check(f"delta.A{i + 1}", Ai, terms)
        eps.record(Ai.get(H.one) == F.one, lambda: {"generator": f"A{i + 1}"})
        # antipode: <S_D(A_i), b> = <A_i, S_H(b)>
        claimed = dspec.conv(dspec.power(Ai, dspec.p_list[i] - 1), dspec.power(U, dspec.m - dspec.theta[i]))
        via_h = {}
        for b in dspec.basis:
            v = F.zero
            for k, c in H.antipode_mono(b).items():
                a = Ai.get(k)
                if a is not None:
                    v = v + c * a
            if v:
                via_h[b] = v
        st = Tally(f"antipode.A{i + 1}")
        _func_eq(dspec, f"S(A{i + 1})", claimed, via_h, st)
        rep.add(st.result())
    rep.add(eps.result())
    return rep


def pairing_matrix(dspec: DualSpec) -> List[List[Scalar]]:
    return [[dspec.dual_eval(j, t, e, b) for b in dspec.basis] for (j, t, e) in dspec.dual_exponents()]


def averaging_element(dspec: DualSpec, j: int, t: int, e: Sequence[int]) -> Dict[object, Scalar]:
    """The element of H whose pairing with sum(lambda X^j'U^t'A^e') extracts lambda_{j,t,e}."""
    H = dspec.H
    F = dspec.field
    pref = (H.qctx.q_factorial(j) * F.coerce(dspec.p * dspec.m)).inv()
    out: Dict[object, Scalar] = {}
    for l in range(dspec.m):
        for ks in itertools.product(*(range(pi) for pi in dspec.p_list)):
            c = dspec.eta ** (-t * l)
            for r, kr in enumerate(ks):
                c = c * dspec.xi ** (-dspec.d[r] * e[r] * (dspec.m * kr + dspec.theta[r] * l))
            acc(out, (j, H.gnorm(l, ks)), c * pref)
    return out


def verify_dual_basis_independence(dspec: DualSpec, seed: int = 0) -> VerificationReport:
    rep = VerificationReport("dual basis independence", meta={"dual": dspec.describe(), "seed": seed})
    F = dspec.field
    mat = pairing_matrix(dspec)
    r = linalg.rank(F, mat)
    rep.add(CheckResult("pairing_matrix.nonsingular", r == len(mat), 1,
                        None if r == len(mat) else {"rank": r, "size": len(mat)},
                        {"size": len(mat), "rank": r}))
    rng = random.Random(seed)
    exps = dspec.dual_exponents()
    lam = {ex: F.coerce(rng.randint(-9, 9)) for ex in exps}
    combo: Functional = {}
    for ex, row in zip(exps, mat):
        for b, v in zip(dspec.basis, row):
            if v:
                acc(combo, b, v * lam[ex])
    tl = Tally("averaging_identity")
    for ex in exps:
        avg = averaging_element(dspec, *ex)
        val = F.zero
        for b, c in avg.items():
            v = combo.get(b)
            if v is not None:
                val = val + v * c
        tl.record(val == lam[ex], lambda: {"index": str(ex), "got": str(val), "want": str(lam[ex])})
    rep.add(tl.result())
    return rep


def verify_dual_against_bigd(dspec: DualSpec) -> VerificationReport:
    """The relations and generator coproducts of D agree with those of the BigD member
    with q_i = xi^{d_i(theta_i gamma + m f_i)}, sending u, x, a_i to U, X, A_i."""
    rep = VerificationReport("dual vs bigd", meta={"dual": dspec.describe()})
    H = dspec.H
    F = dspec.field
    if not dspec.p_list:
        rep.add(CheckResult("skipped.no_a_generators", True, 0))
        return rep
    alpha = H.alpha if dspec.m == dspec.n else F.zero
    q = {i + 1: dspec.q_dual(i) for i in range(len(dspec.p_list))}
    B = BigD(F, dspec.m, dspec.n, dspec.omega, q, alpha)
    A = [dspec.A(i) for i in range(len(dspec.p_list))]
    Ainv = [dspec.power(a, dspec.order - 1) for a in A]
    cache: Dict[object, Functional] = {}

    def image(mono) -> Functional:
        hit = cache.get(mono)
        if hit is None:
            s, t, tail = mono
            hit = dspec.conv(dspec.power(dspec.X(), s), dspec.power(dspec.U(), t))
            for i, e in tail:
                base = A[i - 1] if e > 0 else Ainv[i - 1]
                hit = dspec.conv(hit, dspec.power(base, abs(e)))
            cache[mono] = hit
        return hit

    def elem_image(e) -> Functional:
        out: Functional = {}
        for mono, c in e.items():
            for b, v in image(mono).items():
                acc(out, b, v * c)
        return out

    rel = Tally("bigd_relations_hold_in_dual")
    from .families.core import element_mul, word_value
    for r in B.relations():
        sides = []
        for terms in (r.lhs, r.rhs):
            tot = Element()
            for c, word in terms:
                w = word_value(B, word, B.gen_mono, lambda a, b: element_mul(B, a, b), B.unit_element())
                for k, v in w.items():
                    acc(tot, k, v * c)
            sides.append(elem_image(tot))
        _func_eq(dspec, r.name, sides[0], sides[1], rel)
    rep.add(rel.result())

    cop = Tally("bigd_generator_coproducts_match")
    for g in B.generators():
        gimg = elem_image(B.gen_mono(g))
        dgen = B.gen_delta(g)
        for b1 in dspec.basis:
            for b2 in dspec.basis:
                lhs = F.zero
                for k, c in H.mul_pairs(b1, b2):
                    v = gimg.get(k)
                    if v is not None:
                        lhs = lhs + c * v
                rhs = F.zero
                for (m1, m2), c in dgen.items():
                    v1 = image(m1).get(b1)
                    if v1 is None:
                        continue
                    v2 = image(m2).get(b2)
                    if v2 is not None:
                        rhs = rhs + c * v1 * v2
                cop.record(lhs == rhs, lambda: {"generator": g, "pair": f"{_fmt_b(dspec, b1)} | {_fmt_b(dspec, b2)}"})
    rep.add(cop.result())
    return rep


def verify_dual(dspec: DualSpec, seed: int = 0) -> VerificationReport:
    rep = VerificationReport("dual suite", meta={"dual": dspec.describe(), "dim": len(dspec.basis)})
    rep.extend(verify_dual_relations(dspec), "relations/")
    rep.extend(verify_dual_coproduct(dspec), "coproduct/")
    rep.extend(verify_dual_basis_independence(dspec, seed), "independence/")
    rep.extend(verify_dual_against_bigd(dspec), "bigd/")
    return rep


# ---------------------------------------------------------------------------
# structure constants


@dataclass
class StructureConstants:
    """A finite-dimensional Hopf algebra (or coalgebra, when mult is None) on basis 0..dim-1."""

    field: Field
    dim: int
    mult: Optional[Dict[Tuple[int, int], Dict[int, Scalar]]]
    unit: Optional[Dict[int, Scalar]]
    comult: Dict[int, Dict[Tuple[int, int], Scalar]]
    counit: Dict[int, Scalar]
    antipode: Optional[Dict[int, Dict[int, Scalar]]] = None
    labels: List[str] = dc_field(default_factory=list)

    @classmethod
    def from_family(cls, fam: HopfFamily, basis: Sequence, coalgebra_only: bool = False) -> "StructureConstants":
        idx = {b: i for i, b in enumerate(basis)}
        F = fam.field
        comult = {}
        for i, b in enumerate(basis):
            row = {}
            for (b1, b2), c in fam.delta_closed(b).items():
                if b1 not in idx or b2 not in idx:
                    raise ValueError(f"basis is not a subcoalgebra: {fam.format_mono(b)}")
                row[(idx[b1], idx[b2])] = c
            comult[i] = row
        counit = {i: fam.epsilon_mono(b) for i, b in enumerate(basis) if fam.epsilon_mono(b)}
        labels = [fam.format_mono(b) for b in basis]
        if coalgebra_only:
            return cls(F, len(basis), None, None, comult, counit, None, labels)
        mult = {}
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                row = {}
                for k, c in fam.mul_pairs(a, b):
                    if k not in idx:
                        raise ValueError("basis is not closed under multiplication")
                    acc(row, idx[k], c)
                if row:
                    mult[(i, j)] = row
        unit = {idx[fam.one]: F.one}
        antipode = {}
        for i, b in enumerate(basis):
            antipode[i] = {idx[k]: c for k, c in fam.antipode_mono(b).items()}
        return cls(F, len(basis), mult, unit, comult, counit, antipode, labels)

    def dual(self) -> "StructureConstants":
        """Transpose every structure map (basis of dual functionals)."""
        F = self.field
        mult = {}
        for k, row in self.comult.items():
            for (i, j), c in row.items():
                mult.setdefault((i, j), {})[k] = c
        unit = dict(self.counit)
        comult: Dict[int, Dict[Tuple[int, int], Scalar]] = {k: {} for k in range(self.dim)}
        if self.mult is None:
            raise ValueError("the dual of a coalgebra is an algebra; use dual_algebra")
        for (i, j), row in self.mult.items():
            for k, c in row.items():
                comult[k][(i, j)] = c
        counit = dict(self.unit or {})
        antipode = None
        if self.antipode is not None:
            antipode = {i: {} for i in range(self.dim)}
            for j, row in self.antipode.items():
                for i, c in row.items():
                    antipode[i][j] = c
        labels = [f"{l}*" if not l.endswith("*") else l[:-1] for l in self.labels]
        return StructureConstants(F, self.dim, mult, unit, comult, counit, antipode, labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureConstants):
            return NotImplemented
        def clean(d):
            return None if d is None else {k: v for k, v in d.items() if v}
        return (self.dim == other.dim and clean(self.mult) == clean(other.mult)
                and self.unit == other.unit and clean(self.comult) == clean(other.comult)
                and self.counit == other.counit and clean(self.antipode) == clean(other.antipode))

    # -- helpers on vectors (dicts index -> Scalar) ----------------------------
    def mul_vec(self, a: Dict[int, Scalar], b: Dict[int, Scalar]) -> Dict[int, Scalar]:
        out: Dict[int, Scalar] = {}
        for i, ca in a.items():
            for j, cb in b.items():
                row = self.mult.get((i, j))
                if row:
                    c = ca * cb
                    for k, v in row.items():
                        acc(out, k, v * c)
        return out

    def comult_vec(self, a: Dict[int, Scalar]) -> Dict[Tuple[int, int], Scalar]:
        out: Dict[Tuple[int, int], Scalar] = {}
        for i, c in a.items():
            for k, v in self.comult[i].items():
                acc(out, k, v * c)
        return out

    def counit_vec(self, a: Dict[int, Scalar]) -> Scalar:
        tot = self.field.zero
        for i, c in a.items():
            e = self.counit.get(i)
            if e:
                tot = tot + e * c
        return tot

    def tensor_mul_vec(self, A, B):
        out = {}
        for (i, j), ca in A.items():
            for (k, l), cb in B.items():
                left = self.mult.get((i, k))
                right = self.mult.get((j, l))
                if not left or not right:
                    continue
                c = ca * cb
                for x, vx in left.items():
                    for y, vy in right.items():
                        acc(out, (x, y), vx * vy * c)
        return out

    def check_hopf_axioms(self) -> VerificationReport:
        F = self.field
        rep = VerificationReport("structure constants: hopf axioms", meta={"dim": self.dim})
        e = lambda i: {i: F.one}
        rng = range(self.dim)
        t = Tally("coassociativity")
        for i in rng:
            left, right = {}, {}
            for (a, b), c in self.comult[i].items():
                for (a1, a2), c1 in self.comult[a].items():
                    acc(left, (a1, a2, b), c * c1)
                for (b1, b2), c2 in self.comult[b].items():
                    acc(right, (a, b1, b2), c * c2)
            t.record(left == right, lambda: {"basis": i})
        rep.add(t.result())
        t = Tally("counit")
        for i in rng:
            l, r = {}, {}
            for (a, b), c in self.comult[i].items():
                if self.counit.get(a):
                    acc(l, b, c * self.counit[a])
                if self.counit.get(b):
                    acc(r, a, c * self.counit[b])
            t.record(l == e(i) and r == e(i), lambda: {"basis": i})
        rep.add(t.result())
        if self.mult is None:
            return rep
        t = Tally("associativity")
        for i in rng:
            for j in rng:
                for k in rng:
                    t.record(self.mul_vec(self.mul_vec(e(i), e(j)), e(k)) == self.mul_vec(e(i), self.mul_vec(e(j), e(k))),
                             lambda: {"basis": [i, j, k]})
        rep.add(t.result())
        t = Tally("unit")
        for i in rng:
            t.record(self.mul_vec(self.unit, e(i)) == e(i) == self.mul_vec(e(i), self.unit), lambda: {"basis": i})
        rep.add(t.result())
        t = Tally("delta_multiplicative")
        for i in rng:
            for j in rng:
                lhs = self.comult_vec(self.mul_vec(e(i), e(j)))
                rhs = self.tensor_mul_vec(self.comult[i], self.comult[j])
                t.record(lhs == rhs, lambda: {"basis": [i, j]})
        rep.add(t.result())
        t = Tally("counit_multiplicative")
        for i in rng:
            for j in rng:
                t.record(self.counit_vec(self.mul_vec(e(i), e(j))) == self.counit_vec(e(i)) * self.counit_vec(e(j)),
                         lambda: {"basis": [i, j]})
        t.record(self.counit_vec(self.unit) == F.one)
        rep.add(t.result())
        t = Tally("delta_unit")
        t.record(self.comult_vec(self.unit) == self.tensor_unit())
        rep.add(t.result())
        if self.antipode is not None:
            t = Tally("antipode")
            for i in rng:
                l, r = {}, {}
                for (a, b), c in self.comult[i].items():
                    for k, v in self.mul_vec(self.antipode[a], e(b)).items():
                        acc(l, k, v * c)
                    for k, v in self.mul_vec(e(a), self.antipode[b]).items():
                        acc(r, k, v * c)
                target = {k: v * self.counit_vec(e(i)) for k, v in self.unit.items()} if self.counit_vec(e(i)) else {}
                t.record(l == target and r == target, lambda: {"basis": i})
            rep.add(t.result())
        return rep

    def tensor_unit(self):
        out = {}
        for i, a in self.unit.items():
            for j, b in self.unit.items():
                acc(out, (i, j), a * b)
        return out

    def to_json(self) -> dict:
        def trip(d):
            rows = []
            for key in sorted(d):
                for k2 in sorted(d[key]):
                    idx = list(key) if isinstance(key, tuple) else [key]
                    idx += list(k2) if isinstance(k2, tuple) else [k2]
                    rows.append(idx + [str(d[key][k2])])
            return rows
        out = {
            "dim": self.dim,
            "field": self.field.spec.to_json(),
            "labels": self.labels,
            "comult": trip(self.comult),
            "counit": [[i, str(c)] for i, c in sorted(self.counit.items())],
        }
        if self.mult is not None:
            out["mult"] = trip(self.mult)
            out["unit"] = [[i, str(c)] for i, c in sorted(self.unit.items())]
        if self.antipode is not None:
            out["antipode"] = trip(self.antipode)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def finite_dual(sc: StructureConstants, check: bool = True, size_cap: int = 512) -> StructureConstants:
    """Dual Hopf structure constants; refuses inputs that fail the Hopf axioms."""
    if sc.dim > size_cap:
        raise ValueError(f"dimension {sc.dim} exceeds the cap {size_cap}")
    if check:
        rep = sc.check_hopf_axioms()
        if not rep.passed:
            raise ValueError(f"input fails the Hopf axioms: {[c.name for c in rep.failures()]}")
    return sc.dual()


def group_algebra(field: Field, order: int) -> StructureConstants:
    """kC_n on basis g^0..g^{n-1}."""
    F = field
    mult = {(i, j): {(i + j) % order: F.one} for i in range(order) for j in range(order)}
    comult = {i: {(i, i): F.one} for i in range(order)}
    return StructureConstants(F, order, mult, {0: F.one}, comult, {i: F.one for i in range(order)},
                              {i: {(-i) % order: F.one} for i in range(order)},
                              [f"g^{i}" for i in range(order)])


def function_algebra(field: Field, order: int) -> StructureConstants:
    """k^{C_n} on basis delta_0..delta_{n-1}."""
    F = field
    mult = {(i, i): {i: F.one} for i in range(order)}
    comult = {k: {(i, (k - i) % order): F.one for i in range(order)} for k in range(order)}
    return StructureConstants(F, order, mult, {i: F.one for i in range(order)}, comult, {0: F.one},
                              {i: {(-i) % order: F.one} for i in range(order)},
                              [f"d_{i}" for i in range(order)])


def _vectors(field: Field, dim: int, values=(-1, 0, 1)):
    for combo in itertools.product(values, repeat=dim):
        if any(combo):
            yield {i: field.coerce(v) for i, v in enumerate(combo) if v}


def find_taft_generators(sc: StructureConstants, n: int, omega: Scalar
                         ) -> Optional[Tuple[Dict[int, Scalar], Dict[int, Scalar]]]:
    """Search {-1,0,1}-vectors for a group-like g of order n and a nilpotent
    (g,1)-skew-primitive y with g y = omega y g."""
    F = sc.field

    def power(v, k):
        out = dict(sc.unit)
        for _ in range(k):
            out = sc.mul_vec(out, v)
        return out

    grouplikes = []
    for v in _vectors(F, sc.dim):
        if v == sc.unit:
            continue
        d = sc.comult_vec(v)
        gg = {}
        for i, a in v.items():
            for j, b in v.items():
                acc(gg, (i, j), a * b)
        if d == gg and sc.counit_vec(v) == F.one and power(v, n) == sc.unit:
            grouplikes.append(v)
    for g in grouplikes:
        span = [[v.get(i, F.zero) for i in range(sc.dim)] for v in (sc.unit, g)]
        for y in _vectors(F, sc.dim):
            if linalg.in_span(F, span, [y.get(i, F.zero) for i in range(sc.dim)]):
                continue  # g - 1 and friends are trivially skew-primitive
            d = sc.comult_vec(y)
            want = {}
            for i, a in g.items():
                for j, b in y.items():
                    acc(want, (i, j), a * b)
            for i, a in y.items():
                for j, b in sc.unit.items():
                    acc(want, (i, j), a * b)
            if d != want or power(y, n):
                continue
            gy = sc.mul_vec(g, y)
            if gy == {k: omega * c for k, c in sc.mul_vec(y, g).items()}:
                return g, y
    return None


def is_hopf_isomorphism(A: StructureConstants, B: StructureConstants, images: List[Dict[int, Scalar]]) -> VerificationReport:
    """Check the linear map e_i -> images[i] from A to B."""
    F = A.field
    rep = VerificationReport("hopf isomorphism", meta={"dim": A.dim})
    mat = [[images[i].get(j, F.zero) for j in range(B.dim)] for i in range(A.dim)]
    rep.add(CheckResult("bijective", A.dim == B.dim and linalg.rank(F, mat) == A.dim, 1))

    def apply(v):
        out = {}
        for i, c in v.items():
            for j, x in images[i].items():
                acc(out, j, x * c)
        return out

    def apply2(t):
        out = {}
        for (i, j), c in t.items():
            for a, x in images[i].items():
                for b, y in images[j].items():
                    acc(out, (a, b), x * y * c)
        return out

    t = Tally("multiplicative")
    for i in range(A.dim):
        for j in range(A.dim):
            t.record(apply(A.mul_vec({i: F.one}, {j: F.one})) == B.mul_vec(images[i], images[j]),
                     lambda: {"basis": [i, j]})
    t.record(apply(A.unit) == B.unit)
    rep.add(t.result())
    t = Tally("comultiplicative")
    for i in range(A.dim):
        t.record(apply2(A.comult[i]) == B.comult_vec(images[i]), lambda: {"basis": i})
    rep.add(t.result())
    t = Tally("counit")
    for i in range(A.dim):
        t.record(A.counit.get(i, F.zero) == B.counit_vec(images[i]), lambda: {"basis": i})
    rep.add(t.result())
    return rep


def taft_self_duality(fam: BigD) -> VerificationReport:
    """Exhibit T_n(w) ≅ T_n(w)* by searching generators of the dual and checking the induced map."""
    basis = fam.window()
    A = StructureConstants.from_family(fam, basis)
    D = finite_dual(A)
    found = find_taft_generators(D, fam.n, fam.omega)
    rep = VerificationReport("taft self-duality", meta={"n": fam.n})
    if found is None:
        rep.add(CheckResult("generators_found", False, 1))
        return rep
    g, y = found
    rep.add(CheckResult("generators_found", True, 1, detail={"g": {str(k): str(v) for k, v in g.items()},
                                                            "y": {str(k): str(v) for k, v in y.items()}}))
    images = []
    for (s, t, _) in basis:
        v = dict(D.unit)
        for _ in range(s):
            v = D.mul_vec(v, y)
        for _ in range(t):
            v = D.mul_vec(v, g)
        images.append(v)
    rep.extend(is_hopf_isomorphism(A, D, images), "iso/")
    return rep
