"""Truncated power series in q with exact arbitrary-precision integer coefficients.

A :class:`SeriesQ` stores the coefficients of q^0 .. q^(order-1); everything
from q^order on is *unknown*, not zero.  All arithmetic is exact and never
reads or writes past the truncation order, so two series may only be compared
on the overlap of their orders.

Infinite products and sums are truncated by the rule "exponent >= order means
the factor is 1 (resp. the summand is 0) modulo q^order"; every constructor
here has eventually monotone exponents, so no tail estimates are needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NegativeExponent, NonUnitConstantTerm, OrderExceeded


class SeriesQ:
    """Dense truncated integer power series."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence[int], order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs)
        if order < 1:
            raise ValueError("order must be >= 1")
        if len(coeffs) < order:
            coeffs.extend([0] * (order - len(coeffs)))
        elif len(coeffs) > order:
            del coeffs[order:]
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be exact ints, got {type(c).__name__}")
        self.coeffs = tuple(coeffs)
        self.order = order

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order > 8 else ""
        return f"SeriesQ([{head}{tail}], order={self.order})"

    def __eq__(self, other):
        """Equality on the overlap of the two truncation orders."""
        if not isinstance(other, SeriesQ):
            return NotImplemented
        m = min(self.order, other.order)
        return self.coeffs[:m] == other.coeffs[:m]

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __getitem__(self, n: int) -> int:
        if not 0 <= n < self.order:
            raise OrderExceeded(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "SeriesQ":
        if order > self.order:
            raise OrderExceeded(f"cannot extend order {self.order} to {order}")
        return SeriesQ(self.coeffs[:order], order)

    def nonzero(self):
        """(exponent, coefficient) pairs of the nonzero entries."""
        return [(n, c) for n, c in enumerate(self.coeffs) if c]

    # -- serialization -----------------------------------------------------

    def to_csv_rows(self):
        """Rows (n, coefficient-as-decimal-string); big values exceed 64 bits."""
        return [(n, str(c)) for n, c in enumerate(self.coeffs)]

    def to_json_obj(self):
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    # -- operator sugar (thin wrappers over the ps_* functions) -------------

    def __add__(self, other):
        return ps_add(self, other)

    def __sub__(self, other):
        return ps_sub(self, other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ps_scale(self, other)
        return ps_mul(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return ps_scale(self, -1)


def ps_one(order: int) -> SeriesQ:
    return SeriesQ([1], order)

def ps_zero(order: int) -> SeriesQ:
    return SeriesQ([0], order)

def ps_monomial(exponent: int, order: int, coeff: int = 1) -> SeriesQ:
    c = [0] * order
    if 0 <= exponent < order:
        c[exponent] = coeff
    return SeriesQ(c, order)


def ps_add(a: SeriesQ, b: SeriesQ) -> SeriesQ:
    order = min(a.order, b.order)
    return SeriesQ([a.coeffs[n] + b.coeffs[n] for n in range(order)], order)


def ps_sub(a: SeriesQ, b: SeriesQ) -> SeriesQ:
    order = min(a.order, b.order)
    return SeriesQ([a.coeffs[n] - b.coeffs[n] for n in range(order)], order)


def ps_scale(a: SeriesQ, c: int) -> SeriesQ:
    return SeriesQ([c * x for x in a.coeffs], a.order)


def ps_scale_divexact(a: SeriesQ, c: int) -> SeriesQ:
    """Divide every coefficient by c, requiring exactness (coefficients stay ints)."""
    out = []
    for n, x in enumerate(a.coeffs):
        q, r = divmod(x, c)
        if r:
            raise ValueError(f"coefficient {x} at q^{n} not divisible by {c}")
        out.append(q)
    return SeriesQ(out, a.order)


def ps_mul(a: SeriesQ, b: SeriesQ) -> SeriesQ:
    """Cauchy product truncated to min(a.order, b.order).

    The outer loop runs over the factor with fewer nonzero coefficients, so
    sparse-by-dense products cost O(order * nnz).
    """
    order = min(a.order, b.order)
    na = sum(1 for c in a.coeffs[:order] if c)
    nb = sum(1 for c in b.coeffs[:order] if c)
    if na > nb:
        a, b = b, a
    c = [0] * order
    bc = b.coeffs
    for i, ai in enumerate(a.coeffs[:order]):
        if not ai:
            continue
        for j in range(order - i):
            bj = bc[j]
            if bj:
                c[i + j] += ai * bj
    return SeriesQ(c, order)


def ps_div(a: SeriesQ, b: SeriesQ) -> SeriesQ:
    """a/b by the standard coefficient recurrence; b must have constant term +-1.

    Cost is O(order * nnz(b)), which keeps divisions by sparse products
    (pentagonal-type series, single binomial factors) cheap.
    """
    order = min(a.order, b.order)
    b0 = b.coeffs[0]
    if b0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {b0} is not a unit")
    nz = [(k, bk) for k, bk in enumerate(b.coeffs[:order]) if k > 0 and bk]
    out: list[int] = []
    for n in range(order):
        s = a.coeffs[n]
        for k, bk in nz:
            if k > n:
                break
            s -= bk * out[n - k]
        out.append(s if b0 == 1 else -s)
    return SeriesQ(out, order)


def ps_inv(a: SeriesQ) -> SeriesQ:
    """Multiplicative inverse: ps_mul(a, ps_inv(a)) == 1 up to the order."""
    return ps_div(ps_one(a.order), a)


def ps_negate_q(a: SeriesQ) -> SeriesQ:
    """Substitute q -> -q: coefficient at n picks up the sign of (-1)^n."""
    return SeriesQ([-c if n & 1 else c for n, c in enumerate(a.coeffs)], a.order)


def ps_subseq(a: SeriesQ, stride: int, offset: int) -> SeriesQ:
    """Coefficient subsequence: result[n] = a[stride*n + offset]."""
    if stride < 1:
        raise ValueError("stride must be positive")
    if not 0 <= offset < stride:
        raise ValueError("offset must satisfy 0 <= offset < stride")
    order = (a.order - offset + stride - 1) // stride
    if order < 1:
        raise OrderExceeded("subsequence is empty at this truncation order")
    return SeriesQ([a.coeffs[stride * n + offset] for n in range(order)], order)


def ps_inflate(a: SeriesQ, k: int) -> SeriesQ:
    """Substitute q -> q^k.  Result order is k*a.order: every exponent below
    that is either a known multiple of k or a known zero."""
    if k < 1:
        raise ValueError("inflation factor must be positive")
    order = k * a.order
    c = [0] * order
    for n, x in enumerate(a.coeffs):
        c[k * n] = x
    return SeriesQ(c, order)


def ps_shift(a: SeriesQ, e: int, order: int | None = None) -> SeriesQ:
    """Multiply by q^e (e >= 0), keeping the given truncation order."""
    if e < 0:
        raise NegativeExponent("shift exponent must be non-negative")
    if order is None:
        order = a.order
    c = [0] * order
    for n, x in enumerate(a.coeffs):
        if x and n + e < order:
            c[n + e] = x
    return SeriesQ(c, order)


# ---------------------------------------------------------------------------
# sparse constructors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PochSpec:
    """One q-Pochhammer-style product: prod_j (1 - sign*q^(base + j*step)).

    sign=+1 gives factors (1 - q^e), sign=-1 gives (1 + q^e).  count=None
    means the infinite product, truncated once base + j*step >= order.
    """

    sign: int
    base: int
    step: int
    count: int | None = None

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.base < 1:
            raise ValueError("base must be >= 1 so every factor is a unit perturbation")
        if self.step < 1:
            raise ValueError("step must be >= 1")
        if self.count is not None and self.count < 0:
            raise ValueError("count must be non-negative")


def pochhammer(spec: PochSpec, order: int) -> SeriesQ:
    """Build the product literally, factor by factor.

    Kept deliberately simple: this is the oracle the sparse identities are
    tested against.  Factors with exponent >= order are 1 mod q^order and are
    skipped.
    """
    c = [0] * order
    c[0] = 1
    j = 0
    while True:
        if spec.count is not None and j >= spec.count:
            break
        e = spec.base + j * spec.step
        if e >= order:
            if spec.count is None:
                break
            j += 1
            continue
        # in-place multiply by (1 - sign*q^e)
        if spec.sign == 1:
            for n in range(order - 1, e - 1, -1):
                c[n] -= c[n - e]
        else:
            for n in range(order - 1, e - 1, -1):
                c[n] += c[n - e]
        j += 1
    return SeriesQ(c, order)


def theta_gap(a: int, b: int, order: int, two_sided: bool = False) -> SeriesQ:
    """Sparse theta series sum q^(a*n^2 + b*n) over n >= 0, or n in Z if two_sided."""
    if a < 1:
        raise ValueError("quadratic coefficient must be positive")
    c = [0] * order
    n = 0
    while True:
        hit = False
        for m in ([n] if (n == 0 or not two_sided) else [n, -n]):
            e = a * m * m + b * m
            if e < 0:
                raise NegativeExponent(f"exponent {e} at n={m}")
            if e < order:
                c[e] += 1
                hit = True
        if not hit and a * n * n - abs(b) * n >= order:
            break
        n += 1
    return SeriesQ(c, order)


def pentagonal_signed(order: int) -> SeriesQ:
    """Euler's pentagonal series: sum over n in Z of (-1)^n q^(n(3n+1)/2)."""
    c = [0] * order
    n = 0
    while True:
        hit = False
        for m in ([n] if n == 0 else [n, -n]):
            e = m * (3 * m + 1) // 2
            if e < order:
                c[e] += -1 if n & 1 else 1
                hit = True
        if not hit and n > 0:
            break
        n += 1
    return SeriesQ(c, order)


def euler_product(k: int, order: int) -> SeriesQ:
    """(q^k; q^k)_inf as a sparse series, via the pentagonal expansion.

    Used as the fast route inside the generating-function builds; equality
    with the literal pochhammer product is itself a tested invariant.
    """
    return ps_inflate(pentagonal_signed((order + k - 1) // k), k).truncate(order)


# ---------------------------------------------------------------------------
# Eulerian-form sums: mock theta f, phi and Ramanujan's sigma
# ---------------------------------------------------------------------------

def mock_f(order: int) -> SeriesQ:
    """Third-order mock theta function f(q) = sum q^(n^2) / (-q;q)_n^2.

    The running 1/(-q;q)_n^2 is updated by two divisions by (1+q^n) per step,
    so the whole sum costs O(order^1.5).
    """
    total = [0] * order
    inv_sq = ps_one(order)
    n = 0
    while n * n < order:
        if n > 0:
            fac = _binomial_factor(n, order)
            inv_sq = ps_div(ps_div(inv_sq, fac), fac)
        _accumulate_shifted(total, inv_sq, n * n)
        n += 1
    return SeriesQ(total, order)


def sigma_series(order: int) -> SeriesQ:
    """Ramanujan's sigma(q) = sum q^(n(n+1)/2) / (-q;q)_n."""
    total = [0] * order
    inv = ps_one(order)
    n = 0
    while n * (n + 1) // 2 < order:
        if n > 0:
            inv = ps_div(inv, _binomial_factor(n, order))
        _accumulate_shifted(total, inv, n * (n + 1) // 2)
        n += 1
    return SeriesQ(total, order)


def phi_series(order: int) -> SeriesQ:
    """Mock theta function phi(q) = sum q^(n^2) / (-q^2;q^2)_n."""
    total = [0] * order
    inv = ps_one(order)
    n = 0
    while n * n < order:
        if n > 0:
            inv = ps_div(inv, _binomial_factor(2 * n, order))
        _accumulate_shifted(total, inv, n * n)
        n += 1
    return SeriesQ(total, order)


def binomial_factor(e: int, order: int) -> SeriesQ:
    """(1 + q^e) as a series."""
    c = [0] * order
    c[0] = 1
    if e < order:
        c[e] = 1
    return SeriesQ(c, order)


def _accumulate_shifted(total: list, s: SeriesQ, e: int) -> None:
    for n, x in enumerate(s.coeffs):
        if x and n + e < len(total):
            total[n + e] += x


def mock_f_appell(order: int) -> SeriesQ:
    """Second form of f(q): (2/(q;q)_inf) * sum over n in Z of
    (-1)^n q^(n(3n+1)/2) / (1+q^n).

    The n=0 summand is exactly 1/2 (the factor q^0 = 1 needs no limit); the
    n and -n summands coincide, so the doubled sum stays integral:
    f = (1/(q;q)_inf) * (1 + 4 * sum_{m>=1} (-1)^m q^(m(3m+1)/2)/(1+q^m)).
    """
    acc = ps_one(order)
    m = 1
    while m * (3 * m + 1) // 2 < order:
        t = ps_monomial(m * (3 * m + 1) // 2, order, -4 if m & 1 else 4)
        acc = ps_add(acc, ps_div(t, _binomial_factor(m, order)))
        m += 1
    return ps_div(acc, euler_product(1, order))


def mock_f_appell_third(order: int) -> SeriesQ:
    """Third form of f(q): 2 - (2/(q;q)_inf) * sum over n in Z of
    (-1)^n q^(3n(n+1)/2) / (1+q^n), n=0 summand again exactly 1/2."""
    acc = ps_one(order)  # doubled n=0 term
    m = 1
    while m * (3 * m - 1) // 2 < order:
        t = ps_add(
            ps_monomial(3 * m * (m + 1) // 2, order),
            ps_monomial(m * (3 * m - 1) // 2, order),
        )
        t = ps_div(t, _binomial_factor(m, order))
        acc = ps_add(acc, ps_scale(t, -2 if m & 1 else 2))
        m += 1
    return ps_sub(ps_scale(ps_one(order), 2), ps_div(acc, euler_product(1, order)))


# ---------------------------------------------------------------------------
# Hecke-type double sums
# ---------------------------------------------------------------------------

def hecke_sigma(order: int) -> SeriesQ:
    """sigma(q) as the indefinite double sum
    sum_{n>=0, -n<=j<=n} (-1)^(n+j) (1 - q^(2n+1)) q^(n(3n+1)/2 - j^2)."""
    c = [0] * order
    n = 0
    while n * (n + 1) // 2 < order:  # minimal exponent over j is n(n+1)/2
        for j in range(-n, n + 1):
            e = n * (3 * n + 1) // 2 - j * j
            s = -1 if (n + j) & 1 else 1
            if e < order:
                c[e] += s
            e2 = e + 2 * n + 1
            if e2 < order:
                c[e2] -= s
        n += 1
    return SeriesQ(c, order)


def _hecke_phi(order: int, lin: int, gap: int) -> SeriesQ:
    c = [0] * order
    n = 0
    while 3 * n * n + lin * n < order:  # minimal exponent over j, at j = +-n
        base = 4 * n * n + lin * n
        g = gap * n + (3 if gap == 6 else 1)
        for j in range(-n, n + 1):
            e = base - j * j
            s = -1 if j & 1 else 1
            if e < order:
                c[e] += s
            if e + g < order:
                c[e + g] -= s
        n += 1
    return ps_div(SeriesQ(c, order), euler_product(2, order))


def hecke_phi0(order: int) -> SeriesQ:
    """Phi_0(q) = (1/(q^2;q^2)_inf) sum (-1)^j q^(4n^2+n-j^2) (1 - q^(6n+3))."""
    return _hecke_phi(order, lin=1, gap=6)


def hecke_phi1(order: int) -> SeriesQ:
    """Phi_1(q) = (1/(q^2;q^2)_inf) sum (-1)^j q^(4n^2+3n-j^2) (1 - q^(2n+1))."""
    return _hecke_phi(order, lin=3, gap=2)
