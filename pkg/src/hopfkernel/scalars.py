"""Exact scalars: the rational function field Q(zeta_N)(t) and prime fields F_p.

A cyclotomic coefficient is stored as a tuple ``(c_0, ..., c_{phi-1}, d)`` of
Python ints meaning ``(sum c_j z^j) / d`` with ``d > 0`` and the whole tuple
reduced by its gcd.  Reduction modulo the cyclotomic polynomial keeps the
``c_j`` integral because the modulus is monic over Z.

A :class:`Scalar` over a cyclotomic field is ``N(t) / D(t)`` where ``N`` is a
Laurent polynomial and ``D`` is either absent (``D = 1``) or a monic
polynomial of degree >= 1 with nonzero constant term, coprime to ``N``.
Every value has exactly one such representation, so equality is tuple
equality.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple, Union

__all__ = [
    "FieldSpec",
    "Field",
    "Scalar",
    "field_make",
    "primitive_root",
    "root_of_unity_order",
    "parse_scalar",
    "ScalarParseError",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divexact_int(num: List[int], den: List[int]) -> List[int]:
    # integer polynomials, low degree first, den monic
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    assert not any(num), "inexact division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n):
        if d < n:
            poly = _poly_divexact_int(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class FieldSpec:
    """Where the scalars live: ``FieldSpec.cyclotomic(N)`` or ``FieldSpec.prime(p)``."""

    __slots__ = ("kind", "modulus")

    def __init__(self, kind: str, modulus: int):
        self.kind = kind
        self.modulus = modulus

    @classmethod
    def cyclotomic(cls, conductor: int) -> "FieldSpec":
        return cls("cyclotomic", conductor)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p)

    def to_json(self) -> dict:
        if self.kind == "cyclotomic":
            return {"kind": "cyclotomic", "conductor": self.modulus}
        return {"kind": "prime", "p": self.modulus}

    @classmethod
    def from_json(cls, obj: dict) -> "FieldSpec":
        if obj["kind"] == "cyclotomic":
            return cls.cyclotomic(int(obj["conductor"]))
        if obj["kind"] == "prime":
            return cls.prime(int(obj["p"]))
        raise ValueError(f"unknown field kind {obj['kind']!r}")

    def __repr__(self) -> str:
        return f"FieldSpec({self.kind!r}, {self.modulus})"


# ---------------------------------------------------------------------------
# coefficient fields


class _CyclotomicCoefficients:
    """Arithmetic in Q(zeta_N) on normalized int tuples."""

    def __init__(self, conductor: int):
        self.N = conductor
        self.modpoly = cyclotomic_polynomial(conductor)
        self.phi = len(self.modpoly) - 1
        phi = self.phi
        # z^i mod Phi_N for i < 2*phi - 1 (and up to N for power lookups)
        table = []
        for i in range(max(2 * phi - 1, conductor + 1)):
            vec = [0] * max(i + 1, phi)
            vec[i] = 1
            table.append(tuple(self._reduce(vec)))
        self._ztable = table
        self.zero = (0,) * phi + (1,)
        self.one = (1,) + (0,) * (phi - 1) + (1,)
        self._inv_cache: Dict[tuple, tuple] = {}

    def _reduce(self, vec: List[int]) -> List[int]:
        phi = self.phi
        mp = self.modpoly
        vec = list(vec)
        for i in range(len(vec) - 1, phi - 1, -1):
            c = vec[i]
            if c:
                base = i - phi
                for j in range(phi + 1):
                    vec[base + j] -= c * mp[j]
        out = vec[:phi]
        out.extend([0] * (phi - len(out)))
        return out

    @staticmethod
    def _norm(cs: List[int], d: int) -> tuple:
        g = math.gcd(d, *cs)
        if g != 1:
            cs = [c // g for c in cs]
            d //= g
        if d < 0:
            cs = [-c for c in cs]
            d = -d
        cs.append(d)
        return tuple(cs)

    def from_fraction(self, value: Union[int, Fraction]) -> tuple:
        value = Fraction(value)
        return self._norm([value.numerator] + [0] * (self.phi - 1), value.denominator)

    def zeta_power(self, k: int) -> tuple:
        k %= self.N
        return tuple(self._ztable[k]) + (1,)

    def is_zero(self, a: tuple) -> bool:
        return not any(a[:-1])

    def is_one(self, a: tuple) -> bool:
        return a == self.one

    def neg(self, a: tuple) -> tuple:
        return tuple(-c for c in a[:-1]) + (a[-1],)

    def add(self, a: tuple, b: tuple) -> tuple:
        da, db = a[-1], b[-1]
        if da == db:
            cs = [x + y for x, y in zip(a[:-1], b[:-1])]
            if da == 1:
                cs.append(1)
                return tuple(cs)
            return self._norm(cs, da)
        cs = [x * db + y * da for x, y in zip(a[:-1], b[:-1])]
        return self._norm(cs, da * db)

    def sub(self, a: tuple, b: tuple) -> tuple:
        return self.add(a, self.neg(b))

    def mul(self, a: tuple, b: tuple) -> tuple:
        phi = self.phi
        if phi == 1:
            return self._norm([a[0] * b[0]], a[1] * b[1])
        conv = [0] * (2 * phi - 1)
        for i in range(phi):
            ai = a[i]
            if ai:
                for j in range(phi):
                    bj = b[j]
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:phi]
        zt = self._ztable
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                row = zt[k]
                for j in range(phi):
                    out[j] += c * row[j]
        return self._norm(out, a[-1] * b[-1])

    def inv(self, a: tuple) -> tuple:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        hit = self._inv_cache.get(a)
        if hit is not None:
            return hit
        phi = self.phi
        # columns: a * z^j for j < phi; solve M v = e_0 over Q
        cols = [self.mul(a, self.zeta_power(j)) for j in range(phi)]
        rows = [[Fraction(cols[j][i], cols[j][-1]) for j in range(phi)] + [Fraction(int(i == 0))]
                for i in range(phi)]
        for c in range(phi):
            piv = next(r for r in range(c, phi) if rows[r][c] != 0)
            rows[c], rows[piv] = rows[piv], rows[c]
            pv = rows[c][c]
            rows[c] = [x / pv for x in rows[c]]
            for r in range(phi):
                if r != c and rows[r][c] != 0:
                    f = rows[r][c]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
        sol = [rows[i][phi] for i in range(phi)]
        den = 1
        for s in sol:
            den = den * s.denominator // math.gcd(den, s.denominator)
        res = self._norm([int(s * den) for s in sol], den)
        if len(self._inv_cache) < 100000:
            self._inv_cache[a] = res
        return res

    def fmt(self, a: tuple) -> str:
        d = a[-1]
        terms = []
        for j, c in enumerate(a[:-1]):
            if not c:
                continue
            r = Fraction(c, d)
            mag = abs(r)
            if j == 0:
                body = str(mag)
            else:
                zp = "z" if j == 1 else f"z^{j}"
                body = zp if mag == 1 else f"{mag}*{zp}"
            terms.append(("-" if r < 0 else "+", body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def is_rational(self, a: tuple) -> bool:
        return not any(a[1:-1])

    def to_json(self, a: tuple) -> list:
        return [str(Fraction(c, a[-1])) for c in a[:-1]]


class _PrimeCoefficients:
    def __init__(self, p: int):
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def from_fraction(self, value: Union[int, Fraction]) -> int:
        value = Fraction(value)
        den = value.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(f"denominator divisible by {self.p}")
        return value.numerator * pow(den, -1, self.p) % self.p

    def is_zero(self, a: int) -> bool:
        return a == 0

    def is_one(self, a: int) -> bool:
        return a == self.one

    def neg(self, a: int) -> int:
        return -a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def fmt(self, a: int) -> str:
        return str(a)

    def is_rational(self, a: int) -> bool:
        return True


# ---------------------------------------------------------------------------
# dense polynomial helpers over a coefficient field (lists, low degree first)


def _ptrim(K, a: list) -> list:
    while a and K.is_zero(a[-1]):
        a.pop()
    return a


def _pmonic(K, a: list) -> Tuple[list, object]:
    lc = a[-1]
    if K.is_one(lc):
        return a, K.one
    inv = K.inv(lc)
    return [K.mul(c, inv) for c in a], lc


def _pdivmod(K, a: list, b: list) -> Tuple[list, list]:
    # b monic
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], _ptrim(K, a)
    q = [K.zero] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if K.is_zero(c):
            continue
        q[i - db] = c
        for j in range(db + 1):
            if not K.is_zero(b[j]):
                a[i - db + j] = K.sub(a[i - db + j], K.mul(c, b[j]))
    return q, _ptrim(K, a[:db])


def _pgcd_monic(K, a: list, b: list) -> list:
    a = _pmonic(K, _ptrim(K, list(a)))[0]
    b = _ptrim(K, list(b))
    while b:
        b = _pmonic(K, b)[0]
        _, r = _pdivmod(K, a, b)
        a, b = b, r
    return a


def _pmul(K, a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [K.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if K.is_zero(x):
            continue
        for j, y in enumerate(b):
            if not K.is_zero(y):
                out[i + j] = K.add(out[i + j], K.mul(x, y))
    return out


# ---------------------------------------------------------------------------


class Field:
    """A field handle.  Build with :func:`field_make`."""

    def __init__(self, spec: FieldSpec):
        if spec.kind == "cyclotomic":
            if spec.modulus < 1:
                raise ValueError(f"conductor must be >= 1, got {spec.modulus}")
            self.K = _CyclotomicCoefficients(spec.modulus)
            self.characteristic = 0
        elif spec.kind == "prime":
            if not _is_prime(spec.modulus):
                raise ValueError(f"{spec.modulus} is not prime")
            self.K = _PrimeCoefficients(spec.modulus)
            self.characteristic = spec.modulus
        else:
            raise ValueError(f"unknown field kind {spec.kind!r}")
        self.spec = spec
        self.zero = Scalar(self, (), None)
        self.one = Scalar(self, ((0, self.K.one),), None)
        self._int_cache: Dict[int, Scalar] = {}

    @property
    def is_prime(self) -> bool:
        return self.spec.kind == "prime"

    @property
    def conductor(self) -> int:
        return self.spec.modulus if not self.is_prime else 1

    @property
    def modulus_polynomial(self) -> Tuple[int, ...]:
        if self.is_prime:
            return (0, 1)
        return self.K.modpoly

    def __repr__(self) -> str:
        if self.is_prime:
            return f"F_{self.spec.modulus}"
        if self.spec.modulus == 1:
            return "Q(t)"
        return f"Q(zeta_{self.spec.modulus})(t)"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and other.spec.kind == self.spec.kind \
            and other.spec.modulus == self.spec.modulus

    def __hash__(self) -> int:
        return hash((self.spec.kind, self.spec.modulus))

    def __call__(self, value) -> "Scalar":
        return self.coerce(value)

    def coerce(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field is not self and value.field != self:
                raise ValueError(f"scalar from {value.field} used in {self}")
            return value
        if isinstance(value, int):
            hit = self._int_cache.get(value)
            if hit is None:
                hit = self._const(self.K.from_fraction(value))
                if len(self._int_cache) < 4096:
                    self._int_cache[value] = hit
            return hit
        if isinstance(value, Fraction):
            return self._const(self.K.from_fraction(value))
        if isinstance(value, str):
            return parse_scalar(self, value)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def _const(self, k) -> "Scalar":
        if self.K.is_zero(k):
            return self.zero
        return Scalar(self, ((0, k),), None)

    def zeta(self, k: int = 1) -> "Scalar":
        if self.is_prime:
            raise ValueError("z is not available in a prime field")
        return self._const(self.K.zeta_power(k))

    @property
    def t(self) -> "Scalar":
        if self.is_prime:
            raise ValueError("the transcendental t is disabled in prime fields")
        return Scalar(self, ((1, self.K.one),), None)


def field_make(spec: FieldSpec) -> Field:
    return Field(spec)


def _normalize(field: Field, num: Dict[int, object], den: Optional[list]) -> "Scalar":
    """Canonical form of num/den; num is a Laurent dict, den a dense poly or None."""
    K = field.K
    num = {e: c for e, c in num.items() if not K.is_zero(c)}
    if not num:
        return field.zero
    if den is not None:
        den = _ptrim(K, list(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        # move t-powers of den into the Laurent shift
        low = 0
        while K.is_zero(den[low]):
            low += 1
        if low:
            den = den[low:]
            num = {e - low: c for e, c in num.items()}
        if len(den) == 1:
            inv = K.inv(den[0])
            return Scalar(field, tuple(sorted((e, K.mul(c, inv)) for e, c in num.items())), None)
        den, lc = _pmonic(K, den)
        if not K.is_one(lc):
            inv = K.inv(lc)
            num = {e: K.mul(c, inv) for e, c in num.items()}
        lowest = min(num)
        dense = [K.zero] * (max(num) - lowest + 1)
        for e, c in num.items():
            dense[e - lowest] = c
        g = _pgcd_monic(K, dense, den)
        if len(g) > 1:
            dense, _ = _pdivmod(K, dense, g)
            den, _ = _pdivmod(K, den, g)
            dense = _ptrim(K, dense)
        num = {i + lowest: c for i, c in enumerate(dense) if not K.is_zero(c)}
        if len(den) == 1:
            return Scalar(field, tuple(sorted(num.items())), None)
        return Scalar(field, tuple(sorted(num.items())), tuple(den))
    return Scalar(field, tuple(sorted(num.items())), None)


class Scalar:
    """Immutable exact scalar; see the module docstring for the canonical form."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: Field, num: tuple, den: Optional[tuple]):
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.den is None and len(self.num) == 1 and self.num[0][0] == 0 \
            and self.field.K.is_one(self.num[0][1])

    def is_constant(self) -> bool:
        """True when the value does not depend on t."""
        return self.den is None and (not self.num or (len(self.num) == 1 and self.num[0][0] == 0))

    def is_rational(self) -> bool:
        return self.is_constant() and all(self.field.K.is_rational(c) for _, c in self.num)

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == self.field.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic -------------------------------------------------------
    def _other(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            return other
        return self.field.coerce(other)

    def __add__(self, other) -> "Scalar":
        other = self._other(other)
        if not other.num:
            return self
        if not self.num:
            return other
        K = self.field.K
        if self.den is None and other.den is None:
            acc = dict(self.num)
            for e, c in other.num:
                prev = acc.get(e)
                if prev is None:
                    acc[e] = c
                else:
                    s = K.add(prev, c)
                    if K.is_zero(s):
                        del acc[e]
                    else:
                        acc[e] = s
            if not acc:
                return self.field.zero
            return Scalar(self.field, tuple(sorted(acc.items())), None)
        return self._general_add(other)

    def _general_add(self, other: "Scalar") -> "Scalar":
        K = self.field.K
        d1 = list(self.den) if self.den else [K.one]
        d2 = list(other.den) if other.den else [K.one]
        n1 = _laurent_times_poly(K, self.num, d2)
        n2 = _laurent_times_poly(K, other.num, d1)
        for e, c in n2.items():
            n1[e] = K.add(n1[e], c) if e in n1 else c
        return _normalize(self.field, n1, _pmul(K, d1, d2))

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        K = self.field.K
        return Scalar(self.field, tuple((e, K.neg(c)) for e, c in self.num), self.den)

    def __sub__(self, other) -> "Scalar":
        return self + (-self._other(other))

    def __rsub__(self, other) -> "Scalar":
        return self._other(other) + (-self)

    def __mul__(self, other) -> "Scalar":
        other = self._other(other)
        if not self.num or not other.num:
            return self.field.zero
        K = self.field.K
        if self.den is None and other.den is None:
            a, b = self.num, other.num
            if len(a) == 1 and len(b) == 1:
                (ea, ca), (eb, cb) = a[0], b[0]
                return Scalar(self.field, ((ea + eb, K.mul(ca, cb)),), None)
            acc: Dict[int, object] = {}
            for ea, ca in a:
                for eb, cb in b:
                    e = ea + eb
                    p = K.mul(ca, cb)
                    prev = acc.get(e)
                    acc[e] = p if prev is None else K.add(prev, p)
            items = tuple(sorted((e, c) for e, c in acc.items() if not K.is_zero(c)))
            if not items:
                return self.field.zero
            return Scalar(self.field, items, None)
        num = _laurent_product(K, self.num, other.num)
        d1 = list(self.den) if self.den else [K.one]
        d2 = list(other.den) if other.den else [K.one]
        return _normalize(self.field, num, _pmul(K, d1, d2))

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if not self.num:
            raise ZeroDivisionError("division by zero scalar")
        K = self.field.K
        if self.den is None and len(self.num) == 1:
            e, c = self.num[0]
            return Scalar(self.field, ((-e, K.inv(c)),), None)
        num = {0: K.one} if self.den is None else {i: c for i, c in enumerate(self.den)}
        lowest = self.num[0][0]
        dense = [K.zero] * (self.num[-1][0] - lowest + 1)
        for e, c in self.num:
            dense[e - lowest] = c
        num = {e - lowest: c for e, c in num.items()}
        return _normalize(self.field, num, dense)

    def __truediv__(self, other) -> "Scalar":
        return self * self._other(other).inv()

    def __rtruediv__(self, other) -> "Scalar":
        return self._other(other) * self.inv()

    def __pow__(self, k: int) -> "Scalar":
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            return self.inv() ** (-k)
        if k == 0:
            return self.field.one
        # root-of-unity constants: reduce the exponent
        if self.is_constant() and not self.field.is_prime and len(self.num) == 1:
            c = self.num[0][1]
            K = self.field.K
            if sum(1 for x in c[:-1] if x) == 1 and c[-1] == 1:
                j = next(i for i, x in enumerate(c[:-1]) if x)
                if abs(c[j]) == 1:
                    # +-z^j is a root of unity
                    order = _root_order_cached(self.field, self)
                    if order:
                        k %= order
                        if k == 0:
                            return self.field.one
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def normalize(self) -> "Scalar":
        if self.den is None:
            return _normalize(self.field, dict(self.num), None)
        return _normalize(self.field, dict(self.num), list(self.den))

    # -- views --------------------------------------------------------------
    def numerator(self) -> Tuple[int, list]:
        """(shift, dense coefficients) with value = t^shift * poly / den."""
        if not self.num:
            return 0, []
        lowest = self.num[0][0]
        dense = [self.field.K.zero] * (self.num[-1][0] - lowest + 1)
        for e, c in self.num:
            dense[e - lowest] = c
        return lowest, dense

    def denominator(self) -> list:
        return list(self.den) if self.den else [self.field.K.one]

    def constant_value(self):
        """The coefficient-field value of a t-free scalar."""
        if not self.is_constant():
            raise ValueError("scalar depends on t")
        if not self.num:
            return self.field.K.zero
        return self.num[0][1]

    def to_fraction(self) -> Fraction:
        if self.field.is_prime:
            raise ValueError("prime-field scalars have no rational value")
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        if not self.num:
            return Fraction(0)
        c = self.num[0][1]
        return Fraction(c[0], c[-1])

    def __int__(self) -> int:
        if self.field.is_prime:
            return self.constant_value() if self.num else 0
        f = self.to_fraction()
        if f.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return f.numerator

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"


def _laurent_product(K, a, b) -> Dict[int, object]:
    acc: Dict[int, object] = {}
    for ea, ca in a:
        for eb, cb in b:
            e = ea + eb
            p = K.mul(ca, cb)
            acc[e] = K.add(acc[e], p) if e in acc else p
    return acc


def _laurent_times_poly(K, a, poly: list) -> Dict[int, object]:
    return _laurent_product(K, a, [(i, c) for i, c in enumerate(poly) if not K.is_zero(c)])


# ---------------------------------------------------------------------------
# roots of unity


def _root_order_cached(field: Field, s: Scalar) -> Optional[int]:
    cache = field.__dict__.setdefault("_order_cache", {})
    if s in cache:
        return cache[s]
    bound = math.lcm(2, field.conductor)
    found = None
    for k in _divisors(bound):
        if _plain_pow(s, k).is_one():
            found = k
            break
    cache[s] = found
    return found


def _plain_pow(s: Scalar, k: int) -> Scalar:
    result = s.field.one
    for _ in range(k):
        result = result * s
    return result


def root_of_unity_order(s: Scalar) -> Optional[int]:
    """Least k >= 1 with s^k = 1, or None when s is not a root of unity."""
    if s.is_zero():
        raise ValueError("zero is not a root of unity")
    if not s.is_constant():
        return None
    field = s.field
    if field.is_prime:
        p = field.spec.modulus
        for k in _divisors(p - 1):
            if pow(s.constant_value(), k, p) == 1:
                return k
        return None
    return _root_order_cached(field, s)


def primitive_root(field: Field, order: int) -> Scalar:
    """A primitive ``order``-th root of unity of the field."""
    if order < 1:
        raise ValueError("order must be positive")
    if field.is_prime:
        p = field.spec.modulus
        if (p - 1) % order:
            raise ValueError(f"{order} does not divide p - 1 = {p - 1}")
        gen = next(g for g in range(1, p) if _prime_generator(g, p))
        return field.coerce(pow(gen, (p - 1) // order, p))
    N = field.spec.modulus
    if N % order:
        raise ValueError(f"{order} does not divide the conductor {N}")
    return field.zeta(N // order)


def _prime_generator(g: int, p: int) -> bool:
    if p == 2:
        return g == 1
    n = p - 1
    return all(pow(g, n // q, p) != 1 for q in range(2, n + 1) if n % q == 0 and _is_prime(q))


# ---------------------------------------------------------------------------
# text syntax


def _fmt_coeff_group(K, c, force_parens: bool) -> str:
    s = K.fmt(c)
    if force_parens and (" " in s or s.startswith("-")):
        return f"({s})"
    return s


def _fmt_laurent(field: Field, items) -> str:
    K = field.K
    if not items:
        return "0"
    parts = []
    for e, c in items:
        if e == 0:
            body = K.fmt(c)
            parts.append(body if " " not in body else f"({body})")
            continue
        tpart = "t" if e == 1 else f"t^{e}"
        if K.is_one(c):
            parts.append(tpart)
        elif K.is_one(K.neg(c)):
            parts.append("-" + tpart)
        else:
            parts.append(f"{_fmt_coeff_group(K, c, True)}*{tpart}")
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-") and not p.startswith("-("):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


def format_scalar(s: Scalar) -> str:
    """Canonical text; ``parse_scalar(field, format_scalar(s)) == s``."""
    if s.field.is_prime:
        return str(s.constant_value()) if s.num else "0"
    num = _fmt_laurent(s.field, s.num)
    if s.den is None:
        return num
    den = _fmt_laurent(s.field, [(i, c) for i, c in enumerate(s.den) if not s.field.K.is_zero(c)])
    return f"({num})/({den})"


class ScalarParseError(ValueError):
    pass


class _Parser:
    def __init__(self, field: Field, text: str):
        self.field = field
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def error(self, msg: str):
        raise ScalarParseError(f"{msg} at position {self.pos} in {self.text!r}")

    def parse(self) -> Scalar:
        if not self.text.strip():
            self.error("empty scalar")
        value = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return value

    def expr(self) -> Scalar:
        value = self.term()
        while True:
            if self.take("+"):
                value = value + self.term()
            elif self.take("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> Scalar:
        value = self.unary()
        while True:
            if self.take("*"):
                value = value * self.unary()
            elif self.take("/"):
                rhs = self.unary()
                if rhs.is_zero():
                    self.error("division by zero")
                value = value / rhs
            else:
                return value

    def unary(self) -> Scalar:
        if self.take("-"):
            return -self.unary()
        if self.take("+"):
            return self.unary()
        return self.power()

    def power(self) -> Scalar:
        base = self.atom()
        if self.take("^"):
            neg = False
            if self.take("("):
                neg = self.take("-")
                k = self.integer()
                if not self.take(")"):
                    self.error("expected ')'")
            else:
                neg = self.take("-")
                k = self.integer()
            if neg:
                if base.is_zero():
                    self.error("negative power of zero")
                k = -k
            return base ** k
        return base

    def integer(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def atom(self) -> Scalar:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if not self.take(")"):
                self.error("expected ')'")
            return value
        if ch.isdigit():
            return self.field.coerce(self.integer())
        if ch == "z":
            self.pos += 1
            try:
                return self.field.zeta(1)
            except ValueError as exc:
                self.error(str(exc))
        if ch == "t":
            self.pos += 1
            try:
                return self.field.t
            except ValueError as exc:
                self.error(str(exc))
        self.error(f"unexpected {ch!r}" if ch else "unexpected end")


def parse_scalar(field: Field, text: str) -> Scalar:
    """Parse ``z^k``, ``t``, integers, ``+ - * / ^ ( )`` into a Scalar of ``field``."""
    return _Parser(field, str(text)).parse()


def scalar_to_json(s: Scalar) -> str:
    return format_scalar(s)


def scalars_sum(field: Field, items: Iterable[Scalar]) -> Scalar:
    total = field.zero
    for x in items:
        total = total + x
    return total
