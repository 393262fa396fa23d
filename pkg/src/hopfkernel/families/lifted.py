"""Liftings of quantum lines H(G, g, chi, alpha).

G is presented as ``<u, a_1..a_s | a_i^{p_i} = 1, u^m = a^theta>`` (abelian),
with chi(u) = eta a primitive m-th root of unity and chi(a_i) = 1.  A group
element is ``(t, e)`` with ``0 <= t < m`` and ``0 <= e_i < p_i``; a monomial is
``(j, (t, e))`` meaning ``x^j u^t a^e``.
"""

from __future__ import annotations

import itertools
import math
import re
from typing import Dict, List, Sequence, Tuple

from ..qcombo import QContext
from ..scalars import Field, Scalar, root_of_unity_order
from .core import Element, HopfFamily, Relation, acc, element_mul, tensor_mul

Group = Tuple[int, Tuple[int, ...]]
Mono = Tuple[int, Group]


class Lifted(HopfFamily):
    """H(G, g, chi, alpha) with g = u^gamma a^f."""

    kind = "lifted"

    def __init__(self, field: Field, m: int, p: Sequence[int], theta: Sequence[int], eta: Scalar,
                 gamma: int, f: Sequence[int], alpha: Scalar):
        super().__init__(field)
        p, theta, f = tuple(int(x) for x in p), tuple(int(x) for x in theta), tuple(int(x) for x in f)
        if not (len(p) == len(theta) == len(f)):
            raise ValueError("p, theta and f must have the same length")
        if m < 1 or any(x < 1 for x in p):
            raise ValueError("group orders must be positive")
        eta = field.coerce(eta)
        alpha = field.coerce(alpha)
        if root_of_unity_order(eta) != m:
            raise ValueError(f"eta = {eta} is not a primitive {m}-th root of unity")
        self.m, self.p = m, p
        self.theta = tuple(th % pi for th, pi in zip(theta, p))
        self.identity: Group = (0, (0,) * len(p))
        self.eta = eta
        self.alpha = alpha
        self.g: Group = self.gnorm(gamma, f)
        self.gamma, self.f = self.g[0], self.g[1]
        self.omega = self.chi(self.g)
        n = root_of_unity_order(self.omega)
        if n is None or n < 2:
            raise ValueError("chi(g) must have finite order n > 1")
        self.n = n
        if alpha:
            if m != n:
                raise ValueError("alpha != 0 requires chi^n = 1, i.e. m = n")
            if self.gpow(self.g, n) == self.identity:
                raise ValueError("alpha != 0 requires g^n != 1")
        self.qctx = QContext(self.omega, n)
        self.one = (0, self.identity)
        self.order = m * math.prod(p)
        self._gn = self.gpow(self.g, n)
        self._ginv = self.ginv(self.g)

    @classmethod
    def cyclic(cls, field: Field, N: int, omega: Scalar, alpha: Scalar) -> "Lifted":
        """G = C_N = <g>, chi(g) = omega; presented with u = g and a_1 = g^n."""
        omega = field.coerce(omega)
        n = root_of_unity_order(omega)
        if n is None or N % n:
            raise ValueError(f"ord(omega) must divide N = {N}")
        if N == n:
            return cls(field, n, (), (), omega, 1, (), alpha)
        return cls(field, n, (N // n,), (1,), omega, 1, (0,), alpha)

    # -- the group --------------------------------------------------------
    def gnorm(self, t: int, e: Sequence[int]) -> Group:
        q, t = divmod(t, self.m)
        return (t, tuple((ei + q * th) % pi for ei, th, pi in zip(e, self.theta, self.p)))

    def gmul(self, a: Group, b: Group) -> Group:
        return self.gnorm(a[0] + b[0], [x + y for x, y in zip(a[1], b[1])])

    def ginv(self, a: Group) -> Group:
        t, e = a
        if t == 0:
            return (0, tuple((-x) % pi for x, pi in zip(e, self.p)))
        return self.gnorm(self.m - t, [-x - th for x, th in zip(e, self.theta)])

    def gpow(self, a: Group, k: int) -> Group:
        out = (0, (0,) * len(self.p))
        if k < 0:
            a, k = self.ginv(a), -k
        for _ in range(k):
            out = self.gmul(out, a)
        return out

    def group_elements(self) -> List[Group]:
        return [(t, e) for t in range(self.m) for e in itertools.product(*(range(pi) for pi in self.p))]

    def chi(self, a: Group) -> Scalar:
        return self.eta ** a[0]

    # -- algebra ------------------------------------------------------------
    def is_mono(self, x) -> bool:
        return isinstance(x, tuple) and len(x) == 2 and isinstance(x[0], int) and isinstance(x[1], tuple)

    def mul_pairs(self, a: Mono, b: Mono):
        j1, s1 = a
        j2, s2 = b
        coef = self.chi(s1) ** j2 if j2 else self.field.one
        J = j1 + j2
        prod = self.gmul(s1, s2)
        if J < self.n:
            return (((J, prod), coef),)
        if not self.alpha:
            return ()
        r = J - self.n
        c = coef * self.alpha
        return (((r, prod), c), ((r, self.gmul(self._gn, prod)), -c))

    def _delta_closed(self, mono: Mono) -> Element:
        j, s = mono
        out = Element()
        gk = s
        for k in range(j + 1):
            acc(out, ((j - k, gk), (k, s)), self.qctx.q_binomial(j, k))
            gk = self.gmul(self.g, gk)
        return out

    def _delta_generated(self, mono: Mono) -> Element:
        j, s = mono
        if j:
            return tensor_mul(self, self.gen_delta("x"), self.delta_generated((j - 1, s)))
        return Element({((0, s), (0, s)): self.field.one})

    def epsilon_mono(self, mono: Mono) -> Scalar:
        return self.field.one if mono[0] == 0 else self.field.zero

    def _antipode(self, mono: Mono) -> Element:
        j, s = mono
        out = Element({(0, self.ginv(s)): self.field.one})
        sx = self.gen_antipode("x")
        for _ in range(j):
            out = element_mul(self, out, sx)
        return out

    # -- generators -----------------------------------------------------------
    def generators(self) -> List[str]:
        return ["u", "x"] + [f"a{i + 1}" for i in range(len(self.p))]

    def _gen_group(self, name: str) -> Group:
        if name == "u":
            return self.gnorm(1, (0,) * len(self.p))
        mt = re.fullmatch(r"a(\d+)", name)
        if not mt or not 1 <= int(mt.group(1)) <= len(self.p):
            raise KeyError(f"unknown generator {name!r}")
        i = int(mt.group(1)) - 1
        e = [0] * len(self.p)
        e[i] = 1
        return self.gnorm(0, e)

    def gen_mono(self, name: str) -> Element:
        if name == "x":
            return Element({(1, self.identity): self.field.one})
        return Element({(0, self._gen_group(name)): self.field.one})

    def gen_delta(self, name: str) -> Element:
        F = self.field
        if name == "x":
            return Element({((0, self.g), (1, self.identity)): F.one,
                            ((1, self.identity), (0, self.identity)): F.one})
        s = self._gen_group(name)
        return Element({((0, s), (0, s)): F.one})

    def gen_epsilon(self, name: str) -> Scalar:
        return self.field.zero if name == "x" else self.field.one

    def gen_antipode(self, name: str) -> Element:
        F = self.field
        if name == "x":
            return element_mul(self, {(0, self._ginv): -F.one}, {(1, self.identity): F.one})
        return Element({(0, self.ginv(self._gen_group(name))): F.one})

    def _group_word(self, a: Group) -> Tuple[str, ...]:
        t, e = a
        word = ("u",) * t
        for i, ei in enumerate(e):
            word += (f"a{i + 1}",) * ei
        return word

    def relations(self) -> List[Relation]:
        F = self.field
        one = F.one
        rels = [
            Relation("u^m=a^theta", ((one, ("u",) * self.m),),
                     ((one, self._group_word((0, self.theta))),)),
            Relation("ux=etaxu", ((one, ("u", "x")),), ((self.eta, ("x", "u")),)),
        ]
        for i, pi in enumerate(self.p):
            a = f"a{i + 1}"
            rels += [
                Relation(f"{a}^p=1", ((one, (a,) * pi),), ((one, ()),)),
                Relation(f"u{a}={a}u", ((one, ("u", a)),), ((one, (a, "u")),)),
                Relation(f"{a}x=x{a}", ((one, (a, "x")),), ((one, ("x", a)),)),
            ]
        for i, j in itertools.combinations(range(len(self.p)), 2):
            a, b = f"a{i + 1}", f"a{j + 1}"
            rels.append(Relation(f"{a}{b}={b}{a}", ((one, (a, b)),), ((one, (b, a)),)))
        gn_word = self._group_word(self.g) * self.n
        rhs = ((self.alpha, ()), (-self.alpha, gn_word)) if self.alpha else ()
        rels.append(Relation("x^n=alpha(1-g^n)", ((one, ("x",) * self.n),), rhs))
        return rels

    # -- basis ------------------------------------------------------------------
    def basis(self) -> List[Mono]:
        return [(j, s) for j in range(self.n) for s in self.group_elements()]

    def window(self, **_ignored) -> List[Mono]:
        return self.basis()

    @property
    def dim(self) -> int:
        return self.n * self.order

    def format_mono(self, mono: Mono) -> str:
        j, (t, e) = mono
        parts = []
        if j:
            parts.append("x" if j == 1 else f"x^{j}")
        if t:
            parts.append("u" if t == 1 else f"u^{t}")
        for i, ei in enumerate(e):
            if ei:
                parts.append(f"a{i + 1}" if ei == 1 else f"a{i + 1}^{ei}")
        return " ".join(parts) if parts else "1"

    def parse_mono(self, text: str) -> Mono:
        text = text.strip()
        if text == "1":
            return self.one
        j = t = 0
        e = [0] * len(self.p)
        for tok in text.split():
            mt = re.fullmatch(r"(x|u|a(\d+))(?:\^(-?\d+))?", tok)
            if not mt:
                raise ValueError(f"cannot parse {tok!r}")
            k = int(mt.group(3)) if mt.group(3) else 1
            if mt.group(1) == "x":
                j += k
            elif mt.group(1) == "u":
                t += k
            else:
                e[int(mt.group(2)) - 1] += k
        if j >= self.n:
            raise ValueError(f"x exponent {j} out of range")
        return (j, self.gnorm(t, e))

    def describe(self) -> dict:
        return {
            "kind": "lifted",
            "m": self.m,
            "p": list(self.p),
            "theta": list(self.theta),
            "eta": str(self.eta),
            "g": {"gamma": self.gamma, "f": list(self.f)},
            "n": self.n,
            "omega": str(self.omega),
            "alpha": str(self.alpha),
            "field": self.field.spec.to_json(),
        }
