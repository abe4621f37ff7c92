"""Exact generating functions for the eight families.

Each family's series is assembled from its product / theta / mock-theta
identity.  Identities that the source states at -q are transcribed literally
in q and then flipped with ps_negate_q, which keeps each transcription close
to the printed formula.  Where a second representation exists it is built too
and compared coefficient-wise; disagreement raises IdentityMismatch because it
can only mean a transcription bug.

Performance note: prefactors like 1/(q^2;q^2)_inf are handled by *dividing*
by the sparse pentagonal-type series (O(N^1.5) total), never by multiplying
with a dense inverse, so order-4000 builds stay in the seconds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import IdentityMismatch, OrderExceeded
from .family import FAMILIES, FamilyCode, parse_family
from . import qseries as qs
from .qseries import SeriesQ, PochSpec

# q-Pochhammer building blocks, by (sign, base, step), truncated products:
#   (q;q^2)   = poch(+1, 1, 2)     (-q;q^2)  = poch(-1, 1, 2)
#   (-q^2;q^2)= poch(-1, 2, 2)     (-q;q)    = poch(-1, 1, 1)


def _one_minus_q(order: int) -> SeriesQ:
    return qs.ps_sub(qs.ps_one(order), qs.ps_monomial(1, order))


def _one_plus_q(order: int) -> SeriesQ:
    return qs.ps_add(qs.ps_one(order), qs.ps_monomial(1, order))


def _neg_q_q2(order: int) -> SeriesQ:
    """(-q;q^2)_inf = (q^2;q^2)^2 / ((q;q)(q^4;q^4)), all sparse operations."""
    e2 = qs.euler_product(2, order)
    num = qs.ps_mul(e2, e2)
    return qs.ps_div(qs.ps_div(num, qs.euler_product(1, order)), qs.euler_product(4, order))


def _neg_q2_q2(order: int) -> SeriesQ:
    """(-q^2;q^2)_inf = (q^4;q^4)/(q^2;q^2)."""
    return qs.ps_div(qs.euler_product(4, order), qs.euler_product(2, order))


def _q_neg_q(order: int) -> SeriesQ:
    """(q;-q)_inf = (q;q)(q^4;q^4)/(q^2;q^2)^2."""
    num = qs.ps_mul(qs.euler_product(1, order), qs.euler_product(4, order))
    e2 = qs.euler_product(2, order)
    return qs.ps_div(qs.ps_div(num, e2), e2)


def _inv_q_q2(order: int) -> SeriesQ:
    """1/(q;q^2)_inf = (q^2;q^2)/(q;q)."""
    return qs.ps_div(qs.euler_product(2, order), qs.euler_product(1, order))


# -- the eight primary builders ---------------------------------------------

def _build_eu_ou(order: int) -> SeriesQ:
    # 1 / ((1-q)(q^2;q^2)_inf)
    den = qs.ps_mul(_one_minus_q(order), qs.euler_product(2, order))
    return qs.ps_div(qs.ps_one(order), den)


def _build_eu_od(order: int) -> SeriesQ:
    # (1/(q^2;q^2)_inf) * sum_{n>=0} q^(n^2)
    return qs.ps_div(qs.theta_gap(1, 0, order), qs.euler_product(2, order))


def _double_sum_od_eu(order: int) -> SeriesQ:
    # sum_{n>=j>=1} (-1)^(n+j) (1 - q^(2n+1)) q^(n(3n+1)/2 - j^2)
    c = [0] * order
    n = 1
    while n * (n + 1) // 2 < order:
        for j in range(1, n + 1):
            e = n * (3 * n + 1) // 2 - j * j
            s = -1 if (n + j) & 1 else 1
            if e < order:
                c[e] += s
            if e + 2 * n + 1 < order:
                c[e + 2 * n + 1] -= s
        n += 1
    return SeriesQ(c, order)


def _build_od_eu(order: int) -> SeriesQ:
    # F(-q) = (1/(q^2;q^2)) (1 - double sum); flip q -> -q afterwards
    num = qs.ps_sub(qs.ps_one(order), _double_sum_od_eu(order))
    return qs.ps_negate_q(qs.ps_div(num, qs.euler_product(2, order)))


def _build_od_eu_sigma(order: int) -> SeriesQ:
    # (1/(q^2;q^2)) (1 - sigma(-q)/2 + (-q;-q)_inf/2); (-q;-q)_inf is the
    # pentagonal series with q -> -q, still sparse.
    sig = qs.ps_negate_q(qs.sigma_series(order))
    pent = qs.ps_negate_q(qs.pentagonal_signed(order))
    num = qs.ps_add(qs.ps_sub(qs.ps_scale(qs.ps_one(order), 2), sig), pent)
    return qs.ps_div(qs.ps_scale_divexact(num, 2), qs.euler_product(2, order))


def _pent_like_sum(order: int, signed: bool) -> SeriesQ:
    """sum_{n>=0} (1 - q^n) q^(n(3n-1)/2), or its q -> -q transcription
    sum (1 - (-1)^n q^n) (-1)^(n(3n-1)/2) q^(n(3n-1)/2) when signed."""
    c = [0] * order
    n = 1  # the n=0 summand vanishes
    while n * (3 * n - 1) // 2 < order:
        e1 = n * (3 * n - 1) // 2
        e2 = e1 + n
        if not signed:
            c[e1] += 1
            if e2 < order:
                c[e2] -= 1
        else:
            s1 = -1 if e1 & 1 else 1
            c[e1] += s1
            if e2 < order:
                s2 = s1 if n % 2 == 0 else -s1
                c[e2] -= s2
        n += 1
    return SeriesQ(c, order)


def _build_ed_ou(order: int) -> SeriesQ:
    # F(-q) = ((-q;q)_inf + 1 - pent-like sum) / (2 (-q;q^2)_inf), then flip.
    # (-q;q)_inf = (q^2;q^2)/(q;q); the division by (-q;q^2) goes through its
    # pentagonal-quotient identity to stay sparse.
    neg_q_q = _inv_q_q2(order)  # (-q;q)_inf by Euler's identity
    num = qs.ps_sub(qs.ps_add(neg_q_q, qs.ps_one(order)), _pent_like_sum(order, signed=False))
    e2 = qs.euler_product(2, order)
    num = qs.ps_mul(num, qs.euler_product(1, order))
    num = qs.ps_mul(num, qs.euler_product(4, order))
    num = qs.ps_div(qs.ps_div(num, e2), e2)
    return qs.ps_negate_q(qs.ps_scale_divexact(num, 2))


def _build_ed_ou_qform(order: int) -> SeriesQ:
    # the same identity transcribed directly at q
    q_neg_q = _q_neg_q(order)
    num = qs.ps_sub(qs.ps_add(q_neg_q, qs.ps_one(order)), _pent_like_sum(order, signed=True))
    num = qs.ps_mul(num, qs.euler_product(1, order))
    num = qs.ps_mul(num, qs.euler_product(4, order))
    e2 = qs.euler_product(2, order)
    num = qs.ps_div(qs.ps_div(num, e2), e2)
    return qs.ps_scale_divexact(num, 2)


def _build_ed_od(order: int) -> SeriesQ:
    # (-q;q^2)/(1-q) - q(-q^2;q^2)/(1-q)
    num = qs.ps_sub(_neg_q_q2(order), qs.ps_shift(_neg_q2_q2(order), 1))
    return qs.ps_div(num, _one_minus_q(order))


def _build_ou_eu(order: int) -> SeriesQ:
    # (1/(1-q)) (1/(q;q^2) - q/(q^2;q^2))
    inv_e2 = qs.ps_div(qs.ps_one(order), qs.euler_product(2, order))
    num = qs.ps_sub(_inv_q_q2(order), qs.ps_shift(inv_e2, 1))
    return qs.ps_div(num, _one_minus_q(order))


def _build_ou_ed(order: int) -> SeriesQ:
    # ((-q^2;q^2)/2) (2 - f(-q) + 1/(q;-q)); multiply by the sparse (q^4;q^4)
    # first and divide by (q^2;q^2) to avoid a dense-by-dense product.
    bracket = qs.ps_sub(qs.ps_scale(qs.ps_one(order), 2), qs.ps_negate_q(qs.mock_f(order)))
    bracket = qs.ps_add(bracket, qs.ps_div(qs.ps_one(order), _q_neg_q(order)))
    num = qs.ps_mul(qs.euler_product(4, order), bracket)
    num = qs.ps_div(num, qs.euler_product(2, order))
    return qs.ps_scale_divexact(num, 2)


def _build_ou_ed_double(order: int) -> SeriesQ:
    # F(-q) = (-q^2;q^2)/(2(-q;q)) + ((-q^2;q^2)/(q;q)) * A(q), where A is the
    # Appell-type sum over n in Z of (-1)^n q^(3n(n+1)/2)/(1+q^n) with the
    # n = 0 summand equal to 1/2; doubled throughout to stay integral.
    two_A = qs.ps_one(order)
    m = 1
    while m * (3 * m - 1) // 2 < order:
        t = qs.ps_add(
            qs.ps_monomial(3 * m * (m + 1) // 2, order),
            qs.ps_monomial(m * (3 * m - 1) // 2, order),
        )
        t = qs.ps_div(t, qs._binomial_factor(m, order))
        two_A = qs.ps_add(two_A, qs.ps_scale(t, -2 if m & 1 else 2))
        m += 1
    mq2 = _neg_q2_q2(order)
    term1 = qs.ps_div(mq2, qs.pochhammer(PochSpec(-1, 1, 1), order))
    term2 = qs.ps_div(qs.ps_mul(mq2, two_A), qs.euler_product(1, order))
    return qs.ps_negate_q(qs.ps_scale_divexact(qs.ps_add(term1, term2), 2))


def _build_od_ed(order: int) -> SeriesQ:
    # (1+q)(-q^2;q^2)/(1-q) - q(-q;q^2)/(1-q)
    t1 = qs.ps_mul(_one_plus_q(order), _neg_q2_q2(order))
    num = qs.ps_sub(t1, qs.ps_shift(_neg_q_q2(order), 1))
    return qs.ps_div(num, _one_minus_q(order))


_PRIMARY = {
    "ou/eu": _build_eu_ou,
    "od/eu": _build_eu_od,
    "eu/od": _build_od_eu,
    "ou/ed": _build_ed_ou,
    "od/ed": _build_ed_od,
    "eu/ou": _build_ou_eu,
    "ed/ou": _build_ou_ed,
    "ed/od": _build_od_ed,
}

_ALTERNATES = {
    "eu/od": [("sigma-form", _build_od_eu_sigma)],
    "ou/ed": [("direct-q-form", _build_ed_ou_qform)],
    "ed/ou": [("hecke-double-sum-form", _build_ou_ed_double)],
}

# Families whose full coefficient sequence is not weakly increasing; their
# even/odd subsequences are handled at stride 2.
STRIDE2 = ("od/eu", "od/ed")


@dataclass(frozen=True)
class FamilySeries:
    family: FamilyCode
    primary_form: SeriesQ
    alternate_forms: tuple[tuple[str, SeriesQ], ...]

    @property
    def coeffs(self):
        return self.primary_form.coeffs


@lru_cache(maxsize=64)
def build(fam: FamilyCode | str, order: int, with_alternates: bool = True) -> FamilySeries:
    """Build a family's series to the given truncation order.

    Alternate representations (where the source gives more than one) are
    built alongside and must agree on the full order; a mismatch is an
    implementation bug and raises IdentityMismatch.  Pass
    with_alternates=False for large orders where only coefficients matter.
    """
    if isinstance(fam, str):
        fam = parse_family(fam)
    if order < 1:
        raise ValueError("order must be >= 1")
    primary = _PRIMARY[fam.name](order)
    alts = []
    if with_alternates:
        for label, builder in _ALTERNATES.get(fam.name, []):
            alt = builder(order)
            _require_equal(primary, alt, fam, label)
            alts.append((label, alt))
        if fam.name in STRIDE2:
            for label, s in _split_closed_forms(fam, order):
                alts.append((label, s))
    return FamilySeries(fam, primary, tuple(alts))


def _require_equal(a: SeriesQ, b: SeriesQ, fam: FamilyCode, label: str):
    m = min(a.order, b.order)
    for n in range(m):
        if a.coeffs[n] != b.coeffs[n]:
            raise IdentityMismatch(
                f"{fam.name} alternate {label!r} differs at q^{n}: "
                f"{a.coeffs[n]} vs {b.coeffs[n]}"
            )


def coefficient(fam: FamilyCode | str, n: int, order: int | None = None) -> int:
    """p(n) for the family, exactly."""
    if order is None:
        order = n + 1
    if n >= order:
        raise OrderExceeded(f"n={n} needs order > n, got {order}")
    return build(fam, order, with_alternates=False).primary_form[n]


# -- stride-2 subsequences ---------------------------------------------------

def _split_closed_forms(fam: FamilyCode, order: int):
    """Closed forms of the even/odd coefficient subsequences, as full series
    in q (even exponents carry p(2n), odd exponents p(2n+1)); returned so the
    build can cross-check them against the primary form.

    For the theta-quotient family the halves have one-series closed forms;
    for the product family they are the four-term (1 +- q) combinations.
    """
    half = (order + 1) // 2
    out = []
    if fam.name == "od/eu":
        ev = qs.ps_div(qs.theta_gap(2, 0, half), qs.euler_product(1, half))
        od = qs.ps_div(qs.theta_gap(2, 2, half), qs.euler_product(1, half))
        merged = _merge_halves(ev, od, order)
        _require_equal(_PRIMARY[fam.name](order), merged, fam, "theta-split")
        out.append(("theta-split", merged))
    elif fam.name == "od/ed":
        one_m, one_p = _one_minus_q(order), _one_plus_q(order)
        A = qs.ps_div(_neg_q_q2(order), one_m)
        B = qs.ps_div(qs.ps_shift(_neg_q2_q2(order), 1), one_m)
        C = qs.ps_div(qs.pochhammer(PochSpec(1, 1, 2), order), one_p)
        D = qs.ps_div(qs.ps_shift(_neg_q2_q2(order), 1), one_p)
        g_ev = qs.ps_scale_divexact(qs.ps_add(qs.ps_sub(A, B), qs.ps_add(C, D)), 2)
        g_od = qs.ps_scale_divexact(qs.ps_sub(qs.ps_sub(A, B), qs.ps_add(C, D)), 2)
        merged = qs.ps_add(g_ev, g_od)
        _require_equal(_PRIMARY[fam.name](order), merged, fam, "four-term-split")
        out.append(("four-term-split", merged))
    return out


def _merge_halves(ev: SeriesQ, od: SeriesQ, order: int) -> SeriesQ:
    c = [0] * order
    for n, x in enumerate(ev.coeffs):
        if 2 * n < order:
            c[2 * n] = x
    for n, x in enumerate(od.coeffs):
        if 2 * n + 1 < order:
            c[2 * n + 1] = x
    return SeriesQ(c, order)


def split_parity_subsequences(fam: FamilyCode | str, order: int):
    """(sum p(2n) q^n, sum p(2n+1) q^n) for the two stride-2 families.

    The closed forms are re-verified here at the subsequence level, not just
    via the merged series inside build().
    """
    if isinstance(fam, str):
        fam = parse_family(fam)
    if fam.name not in STRIDE2:
        raise ValueError(f"{fam.name} has weakly increasing coefficients; no stride-2 split")
    fs = build(fam, order)
    ev = qs.ps_subseq(fs.primary_form, 2, 0)
    od = qs.ps_subseq(fs.primary_form, 2, 1)
    if fam.name == "od/eu":
        half = min(ev.order, od.order)
        ev_cf = qs.ps_div(qs.theta_gap(2, 0, half), qs.euler_product(1, half))
        od_cf = qs.ps_div(qs.theta_gap(2, 2, half), qs.euler_product(1, half))
        _require_equal(ev, ev_cf, fam, "even closed form")
        _require_equal(od, od_cf, fam, "odd closed form")
    return ev, od


# -- monotonicity and the inequality chain -----------------------------------

def weakly_increasing_prefix(coeffs) -> int | None:
    """Index of the first descent, or None if weakly increasing throughout."""
    for i in range(len(coeffs) - 1):
        if coeffs[i] > coeffs[i + 1]:
            return i
    return None


def monotone_report(fam: FamilyCode | str, order: int) -> dict:
    """Monotonicity facts for one family: the full sequence for the six
    increasing families, the stride-2 subsequences (plus the descent
    witnesses) for the other two."""
    if isinstance(fam, str):
        fam = parse_family(fam)
    fs = build(fam, order, with_alternates=False)
    c = fs.coeffs
    rep = {"family": fam.name, "order": order, "stride": 2 if fam.name in STRIDE2 else 1}
    first_descent = weakly_increasing_prefix(c)
    rep["weakly_increasing"] = first_descent is None
    if first_descent is not None:
        rep["descent_witness"] = {
            "n": first_descent,
            "value": str(c[first_descent]),
            "next": str(c[first_descent + 1]),
        }
    if fam.name in STRIDE2:
        ev = c[0::2]
        od = c[1::2]
        rep["even_weakly_increasing"] = weakly_increasing_prefix(ev) is None
        rep["odd_weakly_increasing"] = weakly_increasing_prefix(od) is None
    return rep


# Strict inequality chain implied by the eight main terms, smallest first.
# Note this order swaps the two middle entries relative to one printed
# source display, which its own asymptotics contradict.
CHAIN_ORDER = ("od/ed", "ed/od", "eu/od", "od/eu", "ou/ed", "ou/eu", "ed/ou", "eu/ou")


def chain_scan(order: int) -> dict:
    """Scan the strict eight-term chain over exact coefficients.

    Returns the smallest n0 such that the chain holds for every n0 <= n < order,
    together with the failures below n0.
    """
    series = {name: build(name, order, with_alternates=False).coeffs for name in CHAIN_ORDER}
    failures = []
    last_fail = -1
    for n in range(order):
        vals = [series[name][n] for name in CHAIN_ORDER]
        bad = [i for i in range(7) if not vals[i] < vals[i + 1]]
        if bad:
            last_fail = n
            failures.append({"n": n, "violations": [
                {"left": CHAIN_ORDER[i], "right": CHAIN_ORDER[i + 1],
                 "left_value": str(vals[i]), "right_value": str(vals[i + 1])}
                for i in bad]})
    return {
        "order": order,
        "chain": list(CHAIN_ORDER),
        "n0": last_fail + 1,
        "holds_from_n0": last_fail + 1 < order,
        "failure_count": len(failures),
        "failures_up_to_n0": failures[-5:],
    }
