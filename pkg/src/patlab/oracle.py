"""Brute-force joint distributions over pattern-avoiding permutations.

These are the ground truth that every solved generating function is checked
against: full enumeration of an avoidance class, counting descents and
consecutive matches per permutation, accumulated into an exact polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .perms import (
    Perm,
    avoider_list,
    reduce_word,
    window3_counts,
)
from .series import Poly, pack

ORACLE_MAX_N = 12


@dataclass(frozen=True)
class DistributionSlice:
    """Joint statistic polynomial for one n: sum over the avoiders of
    y^des * prod x_i^(matches of gamma_i)."""

    n: int
    avoided: Perm
    tracked: tuple[Perm, ...]
    variables: tuple[str, ...]
    poly: Poly


def _match_count(p: Perm, pat: Perm, win3: dict[Perm, int] | None) -> int:
    k = len(pat)
    if k == 3 and win3 is not None:
        return win3.get(pat, 0)
    if k == 2:
        if pat == (2, 1):
            return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1])
        return sum(1 for i in range(len(p) - 1) if p[i] < p[i + 1])
    count = 0
    for i in range(len(p) - k + 1):
        if reduce_word(p[i:i + k]) == pat:
            count += 1
    return count


@lru_cache(maxsize=None)
def _distribution(avoided: Perm, tracked: tuple[Perm, ...], n: int,
                  variables: tuple[str, ...], track_des: bool) -> Poly:
    want3 = any(len(g) == 3 for g in tracked)
    counter: dict[int, int] = {}
    for p in avoider_list(avoided, n):
        win3 = window3_counts(p) if want3 else None
        exps = {}
        if track_des:
            des = sum(1 for i in range(n - 1) if p[i] > p[i + 1])
            if des:
                exps["y"] = des
        for var, g in zip(variables, tracked):
            c = _match_count(p, g, win3)
            if c:
                exps[var] = c
        key = pack(exps)
        counter[key] = counter.get(key, 0) + 1
    return Poly(counter)


def brute_distribution(avoided: Perm, tracked, n: int,
                       variables=None, track_des: bool = True) -> DistributionSlice:
    """Exact joint polynomial over S_n(avoided).

    tracked is a sequence of consecutive patterns; variables names the
    polynomial variable carrying each one (default "x" for a single pattern,
    "x1".. otherwise).  Descents are tracked in y unless disabled.
    """
    if n < 0 or n > ORACLE_MAX_N:
        raise ValueError(f"oracle n = {n} outside [0, {ORACLE_MAX_N}]")
    tracked = tuple(tuple(g) for g in tracked)
    if variables is None:
        variables = ("x",) if len(tracked) == 1 else tuple(
            f"x{i + 1}" for i in range(len(tracked)))
    variables = tuple(variables)
    if len(variables) != len(tracked):
        raise ValueError("one variable per tracked pattern is required")
    poly = _distribution(tuple(avoided), tracked, n, variables, track_des)
    return DistributionSlice(n=n, avoided=tuple(avoided), tracked=tracked,
                             variables=variables, poly=poly)
