import pytest

from hopfkernel.qcombo import QContext
from hopfkernel.scalars import FieldSpec, field_make

F = field_make(FieldSpec.cyclotomic(12))


def _mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _divexact(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        q[i] = c
        for j, y in enumerate(b):
            a[i + j] -= c * y
    assert not any(a)
    return q


def gaussian(a, k):
    """Integer coefficients of the Gaussian polynomial, from the product formula."""
    num, den = [1], [1]
    for i in range(k):
        num = _mul(num, [1] + [0] * (a - i - 1) + [-1])
        den = _mul(den, [1] + [0] * i + [-1])
    return _divexact(num, den)


def evaluate(coeffs, w):
    total = F.zero
    for i, c in enumerate(coeffs):
        if c:
            total = total + F.coerce(c) * w ** i
    return total


@pytest.mark.parametrize("n,step", [(2, 6), (3, 4), (4, 3), (6, 2), (12, 1), (6, 10)])
def test_binomials_match_gaussian_polynomials(n, step):
    w = F.zeta(step)
    ctx = QContext(w, n)
    for a in range(9):
        for k in range(a + 1):
            assert ctx.q_binomial(a, k) == evaluate(gaussian(a, k), w), (a, k)


def test_small_values():
    w = F.zeta(4)  # primitive cube root
    ctx = QContext(w, 3)
    assert gaussian(4, 2) == [1, 1, 2, 1, 1]
    assert ctx.q_int(3) == F.zero
    assert ctx.q_factorial(2) == F.one + w
    assert ctx.q_factorial(3) == F.zero
    assert ctx.q_binomial(3, 1) == F.zero


def test_inverse_factorials():
    ctx = QContext(F.zeta(3), 4)
    for k in range(4):
        assert ctx.q_factorial(k) * ctx.inv_factorial(k) == F.one


def test_rejects_non_primitive_root():
    with pytest.raises(ValueError):
        QContext(F.zeta(2), 3)
