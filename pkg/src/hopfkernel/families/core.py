"""Sparse elements and the generic Hopf-family interface.

Elements are plain dicts ``{key: Scalar}`` with no zero values; for H the keys
are monomials, for H⊗H pairs of monomials and for H⊗H⊗H triples.  The
:class:`Element` subclass only adds convenience methods, every routine here
accepts plain dicts too.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from ..report import CheckResult, Tally, VerificationReport
from ..scalars import Field, Scalar

Mono = Hashable
Sparse = Dict[Any, Scalar]


class Element(dict):
    """A sparse linear combination.  Equality is dict equality."""

    def __add__(self, other):
        out = Element(self)
        for k, c in other.items():
            acc(out, k, c)
        return out

    def __sub__(self, other):
        out = Element(self)
        for k, c in other.items():
            acc(out, k, -c)
        return out

    def scale(self, c: Scalar) -> "Element":
        if not c:
            return Element()
        return Element({k: v * c for k, v in self.items()})

    def sorted_items(self):
        return sorted(self.items(), key=lambda kv: kv[0])


TensorElement = Element
Tensor3Element = Element


def acc(d: Sparse, key, c: Scalar) -> None:
    """d[key] += c, dropping the key if the result is zero."""
    if not c:
        return
    prev = d.get(key)
    if prev is None:
        d[key] = c
    else:
        s = prev + c
        if s:
            d[key] = s
        else:
            del d[key]


def scale(d: Sparse, c: Scalar) -> Element:
    if not c:
        return Element()
    if c.is_one():
        return Element(d)
    return Element({k: v * c for k, v in d.items()})


def add_into(target: Sparse, d: Sparse, c: Optional[Scalar] = None) -> None:
    for k, v in d.items():
        acc(target, k, v if c is None else v * c)


@dataclass(frozen=True)
class Relation:
    """``lhs = rhs`` with each side a list of (coefficient, generator word)."""

    name: str
    lhs: Tuple[Tuple[Scalar, Tuple[str, ...]], ...]
    rhs: Tuple[Tuple[Scalar, Tuple[str, ...]], ...]


class HopfFamily:
    """Interface shared by every concrete family.

    Subclasses provide ``mul_pairs``, ``delta_closed``, ``epsilon_mono``,
    ``antipode_mono``, ``one``, the generator data and text formatting.
    """

    kind = "abstract"
    field: Field

    def __init__(self, field: Field):
        self.field = field
        self._delta_cache: Dict[Mono, Element] = {}
        self._delta_gen_cache: Dict[Mono, Element] = {}
        self._antipode_cache: Dict[Mono, Element] = {}

    # -- to implement ----------------------------------------------------
    one: Mono

    def mul_pairs(self, a: Mono, b: Mono) -> Sequence[Tuple[Mono, Scalar]]:
        raise NotImplementedError

    def _delta_closed(self, m: Mono) -> Element:
        raise NotImplementedError

    def _delta_generated(self, m: Mono) -> Element:
        return self._delta_closed(m)

    def epsilon_mono(self, m: Mono) -> Scalar:
        raise NotImplementedError

    def _antipode(self, m: Mono) -> Element:
        raise NotImplementedError

    def generators(self) -> List[str]:
        raise NotImplementedError

    def gen_mono(self, name: str) -> Element:
        raise NotImplementedError

    def gen_delta(self, name: str) -> Element:
        raise NotImplementedError

    def gen_epsilon(self, name: str) -> Scalar:
        raise NotImplementedError

    def gen_antipode(self, name: str) -> Element:
        raise NotImplementedError

    def relations(self) -> List[Relation]:
        raise NotImplementedError

    def window(self, **bounds) -> List[Mono]:
        raise NotImplementedError

    def format_mono(self, m: Mono) -> str:
        return repr(m)

    def describe(self) -> dict:
        return {"kind": self.kind}

    # -- cached structure maps ----------------------------------------------
    def delta_closed(self, m: Mono) -> Element:
        hit = self._delta_cache.get(m)
        if hit is None:
            hit = self._delta_closed(m)
            self._delta_cache[m] = hit
        return hit

    def delta_generated(self, m: Mono) -> Element:
        hit = self._delta_gen_cache.get(m)
        if hit is None:
            hit = self._delta_generated(m)
            self._delta_gen_cache[m] = hit
        return hit

    def antipode_mono(self, m: Mono) -> Element:
        hit = self._antipode_cache.get(m)
        if hit is None:
            hit = self._antipode(m)
            self._antipode_cache[m] = hit
        return hit

    def mono_mul(self, a: Mono, b: Mono) -> Element:
        out = Element()
        for k, c in self.mul_pairs(a, b):
            acc(out, k, c)
        return out

    def unit_element(self) -> Element:
        return Element({self.one: self.field.one})

    def format_element(self, e: Sparse) -> str:
        return format_element(e, self.format_mono)


# ---------------------------------------------------------------------------
# bilinear extensions


def element_mul(fam: HopfFamily, e1: Sparse, e2: Sparse) -> Element:
    out = Element()
    for a, ca in e1.items():
        for b, cb in e2.items():
            cab = ca * cb
            for k, c in fam.mul_pairs(a, b):
                acc(out, k, c * cab)
    return out


def tensor_mul(fam: HopfFamily, A: Sparse, B: Sparse) -> Element:
    """Componentwise product in H⊗H (no sign, H is ungraded)."""
    out = Element()
    mp = fam.mul_pairs
    for (a1, a2), ca in A.items():
        for (b1, b2), cb in B.items():
            left = mp(a1, b1)
            if not left:
                continue
            right = mp(a2, b2)
            if not right:
                continue
            cab = ca * cb
            for k1, c1 in left:
                for k2, c2 in right:
                    acc(out, (k1, k2), c1 * c2 * cab)
    return out


def delta(fam: HopfFamily, e: Sparse) -> Element:
    out = Element()
    for m, c in e.items():
        add_into(out, fam.delta_closed(m), c)
    return out


def delta_generated(fam: HopfFamily, e: Sparse) -> Element:
    out = Element()
    for m, c in e.items():
        add_into(out, fam.delta_generated(m), c)
    return out


def epsilon(fam: HopfFamily, e: Sparse) -> Scalar:
    total = fam.field.zero
    for m, c in e.items():
        v = fam.epsilon_mono(m)
        if v:
            total = total + v * c
    return total


def antipode(fam: HopfFamily, e: Sparse) -> Element:
    out = Element()
    for m, c in e.items():
        add_into(out, fam.antipode_mono(m), c)
    return out


def word_value(fam: HopfFamily, word: Sequence[str], image: Callable[[str], Sparse],
               mul: Callable[[Sparse, Sparse], Sparse], unit: Sparse, anti: bool = False) -> Sparse:
    value = unit
    seq = reversed(word) if anti else word
    for g in seq:
        value = mul(value, image(g))
    return value


def format_element(e: Sparse, fmt_key: Callable[[Any], str]) -> str:
    if not e:
        return "0"
    parts = []
    for k, c in sorted(e.items(), key=lambda kv: kv[0]):
        cs = str(c)
        body = fmt_key(k)
        if c.is_one():
            parts.append(body)
        elif (-c).is_one():
            parts.append(f"-{body}")
        elif " " in cs or "/" in cs:
            parts.append(f"({cs})*{body}")
        else:
            parts.append(f"{cs}*{body}")
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def sparse_to_json(e: Sparse, fmt_key: Callable[[Any], Any]) -> List[list]:
    return [[fmt_key(k), str(c)] for k, c in sorted(e.items(), key=lambda kv: kv[0])]


# ---------------------------------------------------------------------------
# verification


def _witness(fam: HopfFamily, m, lhs, rhs) -> Dict[str, str]:
    return {
        "monomial": fam.format_mono(m),
        "lhs": _fmt_any(fam, lhs),
        "rhs": _fmt_any(fam, rhs),
    }


def _fmt_any(fam: HopfFamily, e) -> str:
    if isinstance(e, Scalar):
        return str(e)
    if not e:
        return "0"
    key = next(iter(e))
    if isinstance(key, tuple) and len(key) in (2, 3) and all(_is_family_mono(fam, x) for x in key):
        return format_element(e, lambda k: " ⊗ ".join(fam.format_mono(x) for x in k))
    return format_element(e, fam.format_mono)


def _is_family_mono(fam: HopfFamily, x) -> bool:
    try:
        return fam.is_mono(x)
    except AttributeError:
        return False


def coassociativity_sides(fam: HopfFamily, m) -> Tuple[Element, Element]:
    d = fam.delta_closed(m)
    left = Element()
    right = Element()
    for (a, b), c in d.items():
        for (a1, a2), c1 in fam.delta_closed(a).items():
            acc(left, (a1, a2, b), c * c1)
        for (b1, b2), c2 in fam.delta_closed(b).items():
            acc(right, (a, b1, b2), c * c2)
    return left, right


def counit_sides(fam: HopfFamily, m) -> Tuple[Element, Element]:
    d = fam.delta_closed(m)
    left = Element()
    right = Element()
    for (a, b), c in d.items():
        ea = fam.epsilon_mono(a)
        if ea:
            acc(left, b, c * ea)
        eb = fam.epsilon_mono(b)
        if eb:
            acc(right, a, c * eb)
    return left, right


def antipode_sides(fam: HopfFamily, m) -> Tuple[Element, Element]:
    d = fam.delta_closed(m)
    left = Element()
    right = Element()
    for (a, b), c in d.items():
        add_into(left, element_mul(fam, fam.antipode_mono(a), {b: c}))
        add_into(right, element_mul(fam, {a: c}, fam.antipode_mono(b)))
    return left, right


def relation_checks(fam: HopfFamily) -> List[CheckResult]:
    """Each defining relation holds in the algebra and is respected by Δ, ε and S."""
    F = fam.field
    one = fam.unit_element()
    rels = fam.relations()
    if not rels:
        return []
    one2 = Element({(fam.one, fam.one): F.one})
    alg = Tally("relations.algebra")
    dlt = Tally("relations.delta")
    eps = Tally("relations.epsilon")
    ant = Tally("relations.antipode")

    def side(terms, image, mul, unit, anti=False):
        total = Element()
        for coef, word in terms:
            add_into(total, word_value(fam, word, image, mul, unit, anti), coef)
        return total

    def side_eps(terms):
        total = F.zero
        for coef, word in terms:
            v = F.one
            for g in word:
                v = v * fam.gen_epsilon(g)
            total = total + coef * v
        return total

    emul = lambda a, b: element_mul(fam, a, b)
    tmul = lambda a, b: tensor_mul(fam, a, b)
    for rel in rels:
        l, r = side(rel.lhs, fam.gen_mono, emul, one), side(rel.rhs, fam.gen_mono, emul, one)
        alg.record(l == r, lambda: {"relation": rel.name, "lhs": _fmt_any(fam, l), "rhs": _fmt_any(fam, r)})
        l, r = side(rel.lhs, fam.gen_delta, tmul, one2), side(rel.rhs, fam.gen_delta, tmul, one2)
        dlt.record(l == r, lambda: {"relation": rel.name, "lhs": _fmt_any(fam, l), "rhs": _fmt_any(fam, r)})
        le, re_ = side_eps(rel.lhs), side_eps(rel.rhs)
        eps.record(le == re_, lambda: {"relation": rel.name, "lhs": str(le), "rhs": str(re_)})
        l, r = side(rel.lhs, fam.gen_antipode, emul, one, True), side(rel.rhs, fam.gen_antipode, emul, one, True)
        ant.record(l == r, lambda: {"relation": rel.name, "lhs": _fmt_any(fam, l), "rhs": _fmt_any(fam, r)})
    return [alg.result(), dlt.result(), eps.result(), ant.result()]


def verify_hopf(fam: HopfFamily, window: Optional[Iterable] = None, cross_check: bool = True,
                **bounds) -> VerificationReport:
    """Exhaustive Hopf-axiom check over a finite window of monomials."""
    monos = list(window) if window is not None else fam.window(**bounds)
    report = VerificationReport(f"hopf axioms: {fam.kind}", meta={"family": fam.describe(),
                                                                 "window_size": len(monos)})
    coass = Tally("coassociativity")
    cl = Tally("counit.left")
    cr = Tally("counit.right")
    sl = Tally("antipode.left")
    sr = Tally("antipode.right")
    cc = Tally("delta.closed_equals_generated")
    F = fam.field
    for m in monos:
        l, r = coassociativity_sides(fam, m)
        coass.record(l == r, lambda: _witness(fam, m, l, r))
        target = Element({m: F.one})
        l, r = counit_sides(fam, m)
        cl.record(l == target, lambda: _witness(fam, m, l, target))
        cr.record(r == target, lambda: _witness(fam, m, r, target))
        e = fam.epsilon_mono(m)
        unit = scale(fam.unit_element(), e)
        l, r = antipode_sides(fam, m)
        sl.record(l == unit, lambda: _witness(fam, m, l, unit))
        sr.record(r == unit, lambda: _witness(fam, m, r, unit))
        if cross_check:
            dc, dg = fam.delta_closed(m), fam.delta_generated(m)
            cc.record(dc == dg, lambda: _witness(fam, m, dc, dg))
    for t in (coass, cl, cr, sl, sr) + ((cc,) if cross_check else ()):
        report.add(t.result())
    for res in relation_checks(fam):
        report.add(res)
    return report
