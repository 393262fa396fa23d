"""omega-integers, omega-factorials and omega-binomials at a fixed root of unity."""

from __future__ import annotations

from typing import List

from .scalars import Scalar, root_of_unity_order

__all__ = ["QContext", "q_int", "q_factorial", "q_binomial"]


class QContext:
    """Tables of (k)_w, (k)!_w and binom(a,k)_w for a <= cap.

    ``omega`` must be a primitive ``n``-th root of unity.  ``omega = 1`` with
    ``n = 1`` is accepted (ordinary integers).
    """

    def __init__(self, omega: Scalar, n: int, cap: int | None = None):
        if n < 1:
            raise ValueError("n must be positive")
        if omega.is_zero() or root_of_unity_order(omega) != n:
            raise ValueError(f"{omega} is not a primitive {n}-th root of unity")
        self.omega = omega
        self.n = n
        self.field = omega.field
        self.cap = cap if cap is not None else max(4 * n, 8)
        F = self.field
        self._pow: List[Scalar] = [F.one]
        for _ in range(1, n):
            self._pow.append(self._pow[-1] * omega)
        ints = [F.zero]
        for k in range(1, self.cap + 1):
            ints.append(ints[-1] + self.power(k - 1))
        facts = [F.one]
        for k in range(1, self.cap + 1):
            facts.append(facts[-1] * ints[k])
        self._int = ints
        self._fact = facts
        binom = [[F.one]]
        for a in range(1, self.cap + 1):
            prev = binom[-1]
            row = [F.one]
            for k in range(1, a):
                row.append(prev[k - 1] + self.power(k) * prev[k])
            row.append(F.one)
            binom.append(row)
        self._binom = binom
        self._inv_fact = [f.inv() if f else None for f in facts]

    def power(self, k: int) -> Scalar:
        return self._pow[k % self.n]

    def q_int(self, k: int) -> Scalar:
        if k < 0:
            raise ValueError("k must be nonnegative")
        if k <= self.cap:
            return self._int[k]
        return sum((self.power(j) for j in range(k)), self.field.zero)

    def q_factorial(self, k: int) -> Scalar:
        if k < 0:
            raise ValueError("k must be nonnegative")
        if k <= self.cap:
            return self._fact[k]
        if self.n > 1:
            return self.field.zero
        out = self._fact[self.cap]
        for j in range(self.cap + 1, k + 1):
            out = out * self.field.coerce(j)
        return out

    def inv_factorial(self, k: int) -> Scalar:
        """1/(k)!_w; only defined for k < n (or any k when n = 1)."""
        f = self._inv_fact[k] if k <= self.cap else None
        if f is None:
            raise ZeroDivisionError(f"({k})!_w vanishes")
        return f

    def q_binomial(self, a: int, k: int) -> Scalar:
        if k < 0 or a < 0 or k > a:
            raise ValueError(f"binomial needs 0 <= k <= a, got a={a}, k={k}")
        if a <= self.cap:
            return self._binom[a][k]
        # extend row by row past the cap (rare)
        rows = self._binom
        while len(rows) <= a:
            prev = rows[-1]
            row = [self.field.one]
            for j in range(1, len(prev)):
                row.append(prev[j - 1] + self.power(j) * prev[j])
            row.append(self.field.one)
            rows.append(row)
        return rows[a][k]


def q_int(k: int, ctx: QContext) -> Scalar:
    return ctx.q_int(k)


def q_factorial(k: int, ctx: QContext) -> Scalar:
    return ctx.q_factorial(k)


def q_binomial(a: int, k: int, ctx: QContext) -> Scalar:
    return ctx.q_binomial(a, k)
