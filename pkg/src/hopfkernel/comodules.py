"""Finite-dimensional right comodules given by a matrix of coefficients.

A comodule of dimension d over a family H is a d x d matrix ``C`` of elements
of H with ``rho(e_j) = sum_i e_i ⊗ C[i][j]``.  The comodule axioms become
``Delta(C_ij) = sum_k C_ik ⊗ C_kj`` and ``eps(C_ij) = delta_ij``.
"""

from __future__ import annotations

import random
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .families.core import Element, HopfFamily, acc, add_into, antipode, delta, element_mul, epsilon
from .report import CheckResult, Tally, VerificationReport
from .scalars import Scalar

Matrix = List[List[Element]]


class ComoduleError(ValueError):
    pass


class Comodule:
    def __init__(self, fam: HopfFamily, matrix: Sequence[Sequence[Dict]], name: str = "M",
                 check: bool = True):
        self.fam = fam
        self.C: Matrix = [[Element(c) for c in row] for row in matrix]
        self.dim = len(self.C)
        self.name = name
        if any(len(row) != self.dim for row in self.C):
            raise ComoduleError("coefficient matrix must be square")
        if check:
            rep = self.verify()
            if not rep.passed:
                raise ComoduleError(f"{name} fails the comodule axioms: "
                                    f"{[c.witness for c in rep.failures()][:1]}")

    # -- axioms -----------------------------------------------------------------
    def verify(self) -> VerificationReport:
        fam = self.fam
        F = fam.field
        rep = VerificationReport(f"comodule axioms: {self.name}", meta={"dim": self.dim})
        coass = Tally("coassociativity")
        counit = Tally("counit")
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = delta(fam, self.C[i][j])
                rhs: Dict = {}
                for k in range(self.dim):
                    for a, ca in self.C[i][k].items():
                        for b, cb in self.C[k][j].items():
                            acc(rhs, (a, b), ca * cb)
                coass.record(lhs == rhs, lambda: {"entry": [i, j]})
                e = epsilon(fam, self.C[i][j])
                counit.record(e == (F.one if i == j else F.zero), lambda: {"entry": [i, j], "eps": str(e)})
        rep.add(coass.result())
        rep.add(counit.result())
        return rep

    # -- views ----------------------------------------------------------------
    def coaction(self) -> List[Tuple[int, List[Tuple[int, object, Scalar]]]]:
        out = []
        for j in range(self.dim):
            terms = []
            for i in range(self.dim):
                for mono, c in sorted(self.C[i][j].items(), key=lambda kv: kv[0]):
                    terms.append((i, mono, c))
            out.append((j, terms))
        return out

    def to_json(self) -> dict:
        fmt = self.fam.format_mono
        return {
            "name": self.name,
            "dim": self.dim,
            "coaction": [[j, [[w, fmt(m), str(c)] for w, m, c in terms]] for j, terms in self.coaction()],
        }

    @classmethod
    def from_coaction(cls, fam: HopfFamily, dim: int, table, name: str = "M") -> "Comodule":
        C = [[Element() for _ in range(dim)] for _ in range(dim)]
        for v, terms in table:
            for w, mono, c in terms:
                acc(C[w][v], mono, fam.field.coerce(c))
        return cls(fam, C, name)

    def monomials(self) -> List:
        seen = set()
        for row in self.C:
            for e in row:
                seen.update(e)
        return sorted(seen)

    def __repr__(self) -> str:
        return f"Comodule({self.name}, dim={self.dim})"


def regular_comodule(fam: HopfFamily, basis: Sequence, name: str = "regular") -> Comodule:
    """A subcoalgebra (spanned by monomials) as a right comodule over itself."""
    idx = {b: i for i, b in enumerate(basis)}
    C = [[Element() for _ in basis] for _ in basis]
    for j, b in enumerate(basis):
        for (b1, b2), c in fam.delta_closed(b).items():
            if b1 not in idx:
                raise ComoduleError(f"{fam.format_mono(b)} leaves the span under Delta")
            acc(C[idx[b1]][j], b2, c)
    return Comodule(fam, C, name)


def subcomodule_by_monomials(fam: HopfFamily, basis: Sequence, name: str = "sub") -> Comodule:
    """Same as regular_comodule, for spans closed only on the left leg."""
    return regular_comodule(fam, basis, name)


def one_dimensional(fam: HopfFamily, grouplike, name: str = "k") -> Comodule:
    return Comodule(fam, [[Element({grouplike: fam.field.one})]], name)


def trivial_comodule(fam: HopfFamily) -> Comodule:
    return Comodule(fam, [[fam.unit_element()]], "k")


def tensor_comodules(M: Comodule, N: Comodule, name: Optional[str] = None) -> Comodule:
    """Codiagonal coaction; index (i, i') -> i * dim N + i'."""
    fam = M.fam
    dM, dN = M.dim, N.dim
    C = [[Element() for _ in range(dM * dN)] for _ in range(dM * dN)]
    for i in range(dM):
        for j in range(dM):
            a = M.C[i][j]
            if not a:
                continue
            for ip in range(dN):
                for jp in range(dN):
                    b = N.C[ip][jp]
                    if b:
                        C[i * dN + ip][j * dN + jp] = element_mul(fam, a, b)
    return Comodule(fam, C, name or f"({M.name})⊗({N.name})")


def dual_comodule(M: Comodule, name: Optional[str] = None) -> Comodule:
    """M* with coefficients S(C_ji)."""
    fam = M.fam
    C = [[antipode(fam, M.C[j][i]) for j in range(M.dim)] for i in range(M.dim)]
    return Comodule(fam, C, name or f"({M.name})*")


def direct_sum(mods: Sequence[Comodule], name: Optional[str] = None) -> Comodule:
    fam = mods[0].fam
    d = sum(m.dim for m in mods)
    C = [[Element() for _ in range(d)] for _ in range(d)]
    off = 0
    for m in mods:
        for i in range(m.dim):
            for j in range(m.dim):
                C[off + i][off + j] = Element(m.C[i][j])
        off += m.dim
    return Comodule(fam, C, name or " ⊕ ".join(m.name for m in mods), check=False)


def change_basis(M: Comodule, P: List[List[Scalar]], Pinv: List[List[Scalar]], name: Optional[str] = None) -> Comodule:
    """The matrix Pinv C P (new basis vectors are the columns of P)."""
    fam = M.fam
    d = M.dim
    F = fam.field
    tmp = [[Element() for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                c = P[k][j]
                if c:
                    add_into(tmp[i][j], M.C[i][k], c)
    out = [[Element() for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                c = Pinv[i][k]
                if c:
                    add_into(out[i][j], tmp[k][j], c)
    return Comodule(fam, out, name or M.name, check=False)


# ---------------------------------------------------------------------------
# morphisms


def is_morphism(F_: List[List[Scalar]], M: Comodule, N: Comodule) -> bool:
    """F (dim N x dim M) satisfies C^N F = F C^M."""
    fam = M.fam
    for b in range(N.dim):
        for j in range(M.dim):
            lhs: Dict = {}
            for a in range(N.dim):
                c = F_[a][j]
                if c:
                    add_into(lhs, N.C[b][a], c)
            rhs: Dict = {}
            for i in range(M.dim):
                c = F_[b][i]
                if c:
                    add_into(rhs, M.C[i][j], c)
            if lhs != rhs:
                return False
    return True


def hom_space(M: Comodule, N: Comodule) -> List[List[List[Scalar]]]:
    """Basis of Hom^H(M, N) as dim N x dim M matrices."""
    fam = M.fam
    Fd = fam.field
    dM, dN = M.dim, N.dim
    nvar = dN * dM
    rows: List[List[Scalar]] = []
    seen = set()
    for b in range(dN):
        for j in range(dM):
            eqs: Dict[object, Dict[int, Scalar]] = {}
            for a in range(dN):
                for mono, c in N.C[b][a].items():
                    acc(eqs.setdefault(mono, {}), a * dM + j, c)
            for i in range(dM):
                for mono, c in M.C[i][j].items():
                    acc(eqs.setdefault(mono, {}), b * dM + i, -c)
            for row in eqs.values():
                if not row:
                    continue
                key = tuple(sorted(row.items(), key=lambda kv: kv[0]))
                if key in seen:
                    continue
                seen.add(key)
                dense = [Fd.zero] * nvar
                for k, v in row.items():
                    dense[k] = v
                rows.append(dense)
    null = linalg.nullspace(Fd, rows, nvar)
    return [[vec[a * dM:(a + 1) * dM] for a in range(dN)] for vec in null]


def hom_dim(M: Comodule, N: Comodule) -> int:
    return len(hom_space(M, N))


def find_isomorphism(M: Comodule, N: Comodule, seed: int = 0, tries: int = 8) -> Optional[List[List[Scalar]]]:
    """An invertible element of Hom(M, N), from a seeded random combination of a basis."""
    if M.dim != N.dim:
        return None
    basis = hom_space(M, N)
    if not basis:
        return None
    Fd = M.fam.field
    rng = random.Random(seed)
    for attempt in range(tries):
        coeffs = [Fd.coerce(1 if attempt == 0 and k == 0 else rng.randint(-5, 5)) for k in range(len(basis))]
        if attempt == 0 and len(basis) > 1:
            coeffs = [Fd.coerce(rng.randint(1, 7)) for _ in basis]
        mat = [[Fd.zero] * M.dim for _ in range(N.dim)]
        for c, B in zip(coeffs, basis):
            if not c:
                continue
            for a in range(N.dim):
                for i in range(M.dim):
                    if B[a][i]:
                        mat[a][i] = mat[a][i] + c * B[a][i]
        if linalg.rank(Fd, mat) == M.dim:
            return mat
    return None


def certify_isomorphism(M: Comodule, N: Comodule, F_: Optional[List[List[Scalar]]], name: str) -> CheckResult:
    if F_ is None:
        return CheckResult(name, False, 1, {"reason": "no invertible comodule map found",
                                            "dims": [M.dim, N.dim]})
    Fd = M.fam.field
    ok = M.dim == N.dim and linalg.rank(Fd, F_) == M.dim and is_morphism(F_, M, N)
    return CheckResult(name, ok, 1, None if ok else {"reason": "map is not an isomorphism"})


# ---------------------------------------------------------------------------
# coefficient spaces


class CoefficientSpace:
    """The span of a set of elements, stored in reduced echelon form over sorted monomials."""

    def __init__(self, fam: HopfFamily, elements: Sequence[Dict]):
        self.fam = fam
        monos = sorted({m for e in elements for m in e})
        self.monomials = monos
        idx = {m: i for i, m in enumerate(monos)}
        Fd = fam.field
        rows = []
        for e in elements:
            if e:
                r = [Fd.zero] * len(monos)
                for m, c in e.items():
                    r[idx[m]] = c
                rows.append(r)
        self.rows, _ = linalg.rref(Fd, rows) if rows else ([], [])
        self.dim = len(self.rows)

    def vectors(self) -> List[Dict]:
        out = []
        for r in self.rows:
            out.append({m: c for m, c in zip(self.monomials, r) if c})
        return out

    def contains(self, e: Dict) -> bool:
        if not e:
            return True
        if any(m not in set(self.monomials) for m in e):
            return False
        idx = {m: i for i, m in enumerate(self.monomials)}
        Fd = self.fam.field
        v = [Fd.zero] * len(self.monomials)
        for m, c in e.items():
            v[idx[m]] = c
        return linalg.in_span(Fd, self.rows, v)

    def issubspace(self, other: "CoefficientSpace") -> bool:
        return all(other.contains(v) for v in self.vectors())

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoefficientSpace):
            return NotImplemented
        return self.dim == other.dim and self.issubspace(other)

    def is_subcoalgebra(self) -> bool:
        # Delta(c) must lie in C ⊗ C: check with left and right contractions
        for v in self.vectors():
            d = delta(self.fam, v)
            lefts: Dict = {}
            rights: Dict = {}
            for (a, b), c in d.items():
                acc(lefts.setdefault(b, {}), a, c)
                acc(rights.setdefault(a, {}), b, c)
            if not all(self.contains(x) for x in lefts.values()):
                return False
            if not all(self.contains(x) for x in rights.values()):
                return False
        return True


def coefficient_space(M: Comodule) -> CoefficientSpace:
    return CoefficientSpace(M.fam, [e for row in M.C for e in row])


def span_of_monomials(fam: HopfFamily, monos: Sequence) -> CoefficientSpace:
    return CoefficientSpace(fam, [{m: fam.field.one} for m in monos])
