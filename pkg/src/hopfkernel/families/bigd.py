"""The infinite family D(m, w, (q_i), alpha), its q -> 1 limit and Taft algebras.

A monomial is ``(s, t, tail)`` standing for ``x^s u^t a_F^E`` where ``tail`` is
a tuple of ``(i, e)`` pairs with ascending ``i`` and ``e != 0``.
"""

from __future__ import annotations

import itertools
import re
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..qcombo import QContext
from ..scalars import Field, Scalar, root_of_unity_order
from .core import Element, HopfFamily, Relation, acc, element_mul, tensor_mul

Tail = Tuple[Tuple[int, int], ...]
Mono = Tuple[int, int, Tail]


def merge_tails(a: Tail, b: Tail) -> Tail:
    if not b:
        return a
    if not a:
        return b
    d = dict(a)
    for i, e in b:
        v = d.get(i, 0) + e
        if v:
            d[i] = v
        else:
            d.pop(i, None)
    return tuple(sorted(d.items()))


def negate_tail(a: Tail) -> Tail:
    return tuple((i, -e) for i, e in a)


class BigD(HopfFamily):
    """D(m, omega, (q_i)_{i in I}, alpha).

    ``q`` maps integer labels (the ordered index set I) to nonzero scalars.
    With ``limit=True`` all q_i act as 1 and the twist of a_F^E is the exponent
    sum of E, which is the q -> 1 limit of alpha(1 - q_F^{nE}) at
    alpha = (n(1 - q))^{-1}.
    """

    kind = "bigd"

    def __init__(self, field: Field, m: int, n: int, omega: Scalar, q: Mapping[int, Scalar],
                 alpha: Scalar, limit: bool = False):
        super().__init__(field)
        omega = field.coerce(omega)
        alpha = field.coerce(alpha)
        if n < 2:
            raise ValueError(f"n must be at least 2, got {n}")
        if m < 1 or m % n:
            raise ValueError(f"n = {n} must divide m = {m}")
        if root_of_unity_order(omega) != n:
            raise ValueError(f"omega = {omega} is not a primitive {n}-th root of unity")
        if alpha and m != n:
            raise ValueError("alpha != 0 requires m = n")
        qq = {int(i): field.coerce(v) for i, v in q.items()}
        for i, v in qq.items():
            if not v:
                raise ValueError(f"q_{i} must be nonzero")
        self.m, self.n = m, n
        self.omega = omega
        self.alpha = alpha
        self.limit = limit
        self.index = sorted(qq)
        self.q = qq
        self.qctx = QContext(omega, n)
        self.one = (0, 0, ())
        self._mu_cache: Dict[Tail, Scalar] = {}
        self._qpow_cache: Dict[Tuple[Tail, int], Scalar] = {}
        if limit:
            self.kind = "limit"

    # -- scalars attached to tails ----------------------------------------
    def q_tail_power(self, tail: Tail, k: int) -> Scalar:
        """q_F^{kE}; identically 1 in the limit family."""
        if not tail or not k or self.limit:
            return self.field.one
        key = (tail, k)
        hit = self._qpow_cache.get(key)
        if hit is None:
            hit = self.field.one
            for i, e in tail:
                hit = hit * self.q[i] ** (k * e)
            self._qpow_cache[key] = hit
        return hit

    def mu(self, tail: Tail) -> Scalar:
        """Twist coefficient alpha(1 - q_F^{nE}) (or sum(E) for the limit family)."""
        hit = self._mu_cache.get(tail)
        if hit is None:
            F = self.field
            if not tail:
                hit = F.zero
            elif self.limit:
                hit = F.coerce(sum(e for _, e in tail))
            elif not self.alpha:
                hit = F.zero
            else:
                hit = self.alpha * (F.one - self.q_tail_power(tail, self.n))
            self._mu_cache[tail] = hit
        return hit

    def is_grouplike_tail(self, tail: Tail) -> bool:
        return not self.mu(tail)

    # -- algebra ------------------------------------------------------------
    def is_mono(self, x) -> bool:
        return (isinstance(x, tuple) and len(x) == 3 and isinstance(x[0], int)
                and isinstance(x[2], tuple))

    def check_mono(self, mono: Mono) -> None:
        s, t, tail = mono
        if not (0 <= s < self.n and 0 <= t < self.m):
            raise ValueError(f"exponents out of range in {mono}")
        keys = [i for i, _ in tail]
        if keys != sorted(set(keys)) or any(e == 0 for _, e in tail):
            raise ValueError(f"tail not in normal form: {tail}")
        if any(i not in self.q for i in keys):
            raise ValueError(f"unknown index in {tail}")

    def mul_pairs(self, a: Mono, b: Mono):
        s1, t1, tail1 = a
        s2, t2, tail2 = b
        s = s1 + s2
        if s >= self.n:
            return ()
        coef = self.qctx.power(t1 * s2)
        if s2 and tail1:
            coef = coef * self.q_tail_power(tail1, s2)
        return (((s, (t1 + t2) % self.m, merge_tails(tail1, tail2)), coef),)

    # -- coalgebra ----------------------------------------------------------
    def _delta_closed(self, mono: Mono) -> Element:
        s, t, tail = mono
        n, m = self.n, self.m
        ctx = self.qctx
        out = Element()
        for l in range(s + 1):
            acc(out, ((l, (s - l + t) % m, tail), (s - l, t, tail)), ctx.q_binomial(s, l))
        mu = self.mu(tail)
        if mu:
            lead = ctx.q_factorial(s) * mu
            for k in range(s + 1, n):
                c = lead * ctx.inv_factorial(k) * ctx.inv_factorial(n - k + s)
                acc(out, ((n - k + s, (k + t) % m, tail), (k, t, tail)), c)
        return out

    def _delta_generated(self, mono: Mono) -> Element:
        s, t, tail = mono
        if s:
            return tensor_mul(self, self.gen_delta("x"), self.delta_generated((s - 1, t, tail)))
        if t:
            return tensor_mul(self, self.gen_delta("u"), self.delta_generated((0, t - 1, tail)))
        if not tail:
            F = self.field
            return Element({(self.one, self.one): F.one})
        i, e = tail[-1]
        sign = 1 if e > 0 else -1
        rest = tail[:-1] + (((i, e - sign),) if e != sign else ())
        return tensor_mul(self, self.delta_generated((0, 0, rest)), self._gen_delta_a(i, sign))

    def epsilon_mono(self, mono: Mono) -> Scalar:
        return self.field.one if mono[0] == 0 else self.field.zero

    def _antipode(self, mono: Mono) -> Element:
        s, t, tail = mono
        F = self.field
        out = Element({(0, 0, negate_tail(tail)): F.one})
        if t:
            out = element_mul(self, out, {(0, (-t) % self.m, ()): F.one})
        sx = self.gen_antipode("x")
        for _ in range(s):
            out = element_mul(self, out, sx)
        return out

    # -- generators and relations --------------------------------------------
    def generators(self) -> List[str]:
        gens = ["u", "x"]
        for i in self.index:
            gens += [f"a{i}", f"a{i}^-1"]
        return gens

    def _parse_gen(self, name: str) -> Tuple[str, int, int]:
        if name in ("u", "x"):
            return name, 0, 0
        mt = re.fullmatch(r"a(\d+)(\^-1)?", name)
        if not mt or int(mt.group(1)) not in self.q:
            raise KeyError(f"unknown generator {name!r}")
        return "a", int(mt.group(1)), -1 if mt.group(2) else 1

    def gen_mono(self, name: str) -> Element:
        kind, i, sign = self._parse_gen(name)
        F = self.field
        if kind == "u":
            return Element({(0, 1 % self.m, ()): F.one})
        if kind == "x":
            return Element({(1, 0, ()): F.one})
        return Element({(0, 0, ((i, sign),)): F.one})

    def _gen_delta_a(self, i: int, sign: int) -> Element:
        a = (0, 0, ((i, sign),))
        n = self.n
        out = Element({(a, a): self.field.one})
        mu = self.mu(((i, sign),))
        if mu:
            ctx = self.qctx
            for k in range(1, n):
                c = mu * ctx.inv_factorial(k) * ctx.inv_factorial(n - k)
                acc(out, ((n - k, k % self.m, ((i, sign),)), (k, 0, ((i, sign),))), c)
        return out

    def gen_delta(self, name: str) -> Element:
        kind, i, sign = self._parse_gen(name)
        F = self.field
        if kind == "u":
            u = (0, 1 % self.m, ())
            return Element({(u, u): F.one})
        if kind == "x":
            return Element({((0, 1 % self.m, ()), (1, 0, ())): F.one, ((1, 0, ()), self.one): F.one})
        return self._gen_delta_a(i, sign)

    def gen_epsilon(self, name: str) -> Scalar:
        kind, _, _ = self._parse_gen(name)
        return self.field.zero if kind == "x" else self.field.one

    def gen_antipode(self, name: str) -> Element:
        kind, i, sign = self._parse_gen(name)
        F = self.field
        if kind == "u":
            return Element({(0, (self.m - 1) % self.m, ()): F.one})
        if kind == "x":
            return element_mul(self, {(0, (self.m - 1) % self.m, ()): -F.one}, {(1, 0, ()): F.one})
        return Element({(0, 0, ((i, -sign),)): F.one})

    def relations(self) -> List[Relation]:
        F = self.field
        one, zero = F.one, ()
        rels = [
            Relation("u^m=1", ((one, ("u",) * self.m),), ((one, ()),)),
            Relation("x^n=0", ((one, ("x",) * self.n),), zero),
            Relation("ux=wxu", ((one, ("u", "x")),), ((self.omega, ("x", "u")),)),
        ]
        for i in self.index:
            a, ai = f"a{i}", f"a{i}^-1"
            qi = F.one if self.limit else self.q[i]
            rels += [
                Relation(f"{a}{ai}=1", ((one, (a, ai)),), ((one, ()),)),
                Relation(f"{ai}{a}=1", ((one, (ai, a)),), ((one, ()),)),
                Relation(f"u{a}={a}u", ((one, ("u", a)),), ((one, (a, "u")),)),
                Relation(f"{a}x=q{i}x{a}", ((one, (a, "x")),), ((qi, ("x", a)),)),
            ]
        for i, j in itertools.combinations(self.index, 2):
            rels.append(Relation(f"a{i}a{j}=a{j}a{i}", ((one, (f"a{i}", f"a{j}")),),
                                 ((one, (f"a{j}", f"a{i}")),)))
        return rels

    # -- windows and text ---------------------------------------------------
    def tails(self, support: int = 2, max_exp: int = 2) -> List[Tail]:
        exps = [e for e in range(-max_exp, max_exp + 1) if e]
        out: List[Tail] = [()]
        for r in range(1, min(support, len(self.index)) + 1):
            for F_ in itertools.combinations(self.index, r):
                for E in itertools.product(exps, repeat=r):
                    out.append(tuple(zip(F_, E)))
        return sorted(out, key=tail_order)

    def window(self, support: int = 2, max_exp: int = 2, tails: Optional[Iterable[Tail]] = None,
               **_ignored) -> List[Mono]:
        tl = list(tails) if tails is not None else self.tails(support, max_exp)
        return [(s, t, tail) for tail in tl for s in range(self.n) for t in range(self.m)]

    def block_monomials(self, tail: Tail) -> List[Mono]:
        return [(s, t, tail) for s in range(self.n) for t in range(self.m)]

    def format_mono(self, mono: Mono) -> str:
        return format_mono(mono)

    def parse_mono(self, text: str) -> Mono:
        mono = parse_mono(text, self.m)
        self.check_mono(mono)
        return mono

    def describe(self) -> dict:
        return {
            "kind": self.kind,
            "m": self.m,
            "n": self.n,
            "omega": str(self.omega),
            "alpha": str(self.alpha),
            "q": {str(i): str(self.q[i]) for i in self.index},
            "field": self.field.spec.to_json(),
        }


def tail_order(tail: Tail):
    return (len(tail), tuple(i for i, _ in tail), tuple(e for _, e in tail))


class Taft(BigD):
    """T_n(omega): the alpha = 0, I = {} member with m = n."""

    kind = "taft"

    def __init__(self, field: Field, n: int, omega: Scalar):
        super().__init__(field, n, n, omega, {}, field.zero)
        self.kind = "taft"

    def describe(self) -> dict:
        return {"kind": "taft", "n": self.n, "omega": str(self.omega),
                "field": self.field.spec.to_json()}

    def basis(self) -> List[Mono]:
        return self.window()


def Limit(field: Field, n: int, omega: Scalar, index: Sequence[int]) -> BigD:
    """The q -> 1 limit family (m = n)."""
    return BigD(field, n, n, omega, {int(i): field.one for i in index}, field.one, limit=True)


# ---------------------------------------------------------------------------
# text syntax: x^s u^t a{i}^e ...


def format_mono(mono: Mono) -> str:
    s, t, tail = mono
    parts = []
    if s:
        parts.append("x" if s == 1 else f"x^{s}")
    if t:
        parts.append("u" if t == 1 else f"u^{t}")
    for i, e in tail:
        parts.append(f"a{i}" if e == 1 else f"a{i}^{e}")
    return " ".join(parts) if parts else "1"


_TOKEN = re.compile(r"\s*(x|u|a(\d+))(?:\^(-?\d+))?")


def parse_mono(text: str, m: Optional[int] = None) -> Mono:
    text = text.strip()
    if text == "1":
        return (0, 0, ())
    s = t = 0
    tail: Dict[int, int] = {}
    pos = 0
    order = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise ValueError(f"cannot parse monomial {text!r} at {pos}")
        pos = mt.end()
        exp = int(mt.group(3)) if mt.group(3) else 1
        sym = mt.group(1)
        rank = 0 if sym == "x" else 1 if sym == "u" else 2
        if rank < order:
            raise ValueError(f"monomial {text!r} is not in x u a order")
        order = rank
        if sym == "x":
            s += exp
        elif sym == "u":
            t += exp
        else:
            tail[int(mt.group(2))] = tail.get(int(mt.group(2)), 0) + exp
        while pos < len(text) and text[pos].isspace():
            pos += 1
    if m:
        t %= m
    return (s, t, tuple(sorted((i, e) for i, e in tail.items() if e)))
