"""Brute-force enumeration of parity-separated partitions.

This is the ground truth every coefficient claim is checked against, so it is
kept deliberately dumb: recursive descent over the largest part, no memoised
counting, usable up to n of a few dozen.
"""

from __future__ import annotations

from .family import EVEN, ODD, FamilyCode

Partition = tuple[int, ...]

ORACLE_CAP = 60  # hard cap; beyond this the series is the counter


def is_member(fam: FamilyCode, parts) -> bool:
    """Constraint checker, independent of the enumerator's generation order."""
    parts = tuple(parts)
    if any(p < 1 for p in parts):
        return False
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        return False
    up_par = 1 if fam.upper.parity == ODD else 0
    uppers = [p for p in parts if p % 2 == up_par]
    lowers = [p for p in parts if p % 2 != up_par]
    if uppers and lowers and max(lowers) >= min(uppers):
        return False
    if fam.upper.distinct and len(set(uppers)) != len(uppers):
        return False
    if fam.lower.distinct and len(set(lowers)) != len(lowers):
        return False
    return True


def enumerate_partitions(fam: FamilyCode, n: int) -> list[Partition]:
    """All partitions of n in the family, parts weakly decreasing.

    Parts are generated largest-first; once a lower-class part has been
    placed, no upper-class part may follow (it would sit below a lower-class
    part).  Equal parts always share a class because the classes
    have opposite parities, so per-class distinctness is just "next part may
    not equal the previous one when its class is flagged distinct".
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > ORACLE_CAP:
        raise ValueError(f"oracle bound is {ORACLE_CAP}; use the series for larger n")
    up_par = 1 if fam.upper.parity == ODD else 0
    dist_up, dist_lo = fam.upper.distinct, fam.lower.distinct
    out: list[Partition] = []
    acc: list[int] = []

    def rec(remaining: int, cap: int, lower_started: bool, prev: int):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for k in range(min(remaining, cap), 0, -1):
            is_upper = k % 2 == up_par
            if is_upper and lower_started:
                continue
            if k == prev and (dist_up if is_upper else dist_lo):
                continue
            acc.append(k)
            rec(remaining - k, k, lower_started or not is_upper, k)
            acc.pop()

    rec(n, n if n else 1, False, 0)
    return out


def count(fam: FamilyCode, n: int) -> int:
    return len(enumerate_partitions(fam, n))


def count_dp(fam: FamilyCode, n: int) -> int:
    """Independent memoised counter for cross-checks beyond the enumeration
    budget.  Same descent as the enumerator but counting only; distinctness is
    folded into the cap (a distinct-class part k forces the next part < k,
    which is harmless for the other class since it can never equal k anyway).
    """
    up_par = 1 if fam.upper.parity == ODD else 0
    dist_up, dist_lo = fam.upper.distinct, fam.lower.distinct
    memo: dict[tuple[int, int, bool], int] = {}

    def rec(remaining: int, cap: int, lower_started: bool) -> int:
        if remaining == 0:
            return 1
        cap = min(cap, remaining)
        if cap == 0:
            return 0
        key = (remaining, cap, lower_started)
        if key in memo:
            return memo[key]
        total = 0
        for k in range(cap, 0, -1):
            is_upper = k % 2 == up_par
            if is_upper and lower_started:
                continue
            nxt_cap = k - 1 if (dist_up if is_upper else dist_lo) else k
            total += rec(remaining - k, nxt_cap, lower_started or not is_upper)
        memo[key] = total
        return total

    return rec(n, n if n else 1, False)
