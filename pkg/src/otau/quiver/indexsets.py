"""Integer index families that label the columns of the square fixed point.

For each k >= 1 the families S1..S4 partition {1..k^2} and T1..T4
partition {1..k(k-1)}.  Each set is produced together with the (i, j)
pair that generated every element, since the column formulas need it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

Labelled = Dict[int, Tuple[int, int]]


def _triangle(i: int, j: int) -> int:
    return i * (i + 1) - j + 1


def _square(i: int, j: int) -> int:
    return (i + 1) ** 2 - j


def _collect(pairs, fn) -> Labelled:
    out: Labelled = {}
    for i, j in pairs:
        val = fn(i, j)
        if val in out:
            raise AssertionError(f"duplicate index {val} from {(i, j)} and {out[val]}")
        out[val] = (i, j)
    return out


def s1_pairs(k):
    return [(i, j) for j in range(1, k // 2 + 1) for i in range(j, k - j + 1)]


def s2_pairs(k):
    return [(i, j) for j in range(0, (k - 1) // 2 + 1) for i in range(j, k - j)]


def s3_pairs(k):
    return [(i, j) for i in range(k // 2 + 1, k) for j in range(k - i + 1, i + 1)]


def s4_pairs(k):
    return [(i, j) for i in range((k + 1) // 2, k) for j in range(k - i, i + 1)]


def t1_pairs(k):
    return [(i, j) for j in range(1, (k - 1) // 2 + 1) for i in range(j, k - j)]


def t2_pairs(k):
    return [(i, j) for j in range(0, (k - 1) // 2 + 1) for i in range(j, k - j - 1)]


def t3_pairs(k):
    return [(i, j) for i in range((k + 1) // 2, k) for j in range(k - i, i + 1)]


def t4_pairs(k):
    return [(i, j) for i in range(k // 2, k - 1) for j in range(k - i - 1, i + 1)]


@dataclass
class IndexSets:
    k: int
    S: List[Labelled] = field(default_factory=list)
    T: List[Labelled] = field(default_factory=list)

    def s(self, l: int) -> set:
        return set(self.S[l - 1])

    def t(self, l: int) -> set:
        return set(self.T[l - 1])

    @property
    def s4_prime(self) -> set:
        k = self.k
        return {k * (k - 1) + i for i in range(1, k)}

    @property
    def s4_double_prime(self) -> set:
        return self.s(4) - self.s4_prime

    def s_label(self, idx: int):
        """(family number, (i, j)) for an index of {1..k^2}."""
        for l, fam in enumerate(self.S, 1):
            if idx in fam:
                return l, fam[idx]
        raise KeyError(idx)

    def t_label(self, idx: int):
        for l, fam in enumerate(self.T, 1):
            if idx in fam:
                return l, fam[idx]
        raise KeyError(idx)


def build_index_sets(k: int) -> IndexSets:
    if k < 1:
        raise ValueError("k must be positive")
    S = [_collect(s1_pairs(k), _triangle), _collect(s2_pairs(k), _square),
         _collect(s3_pairs(k), _triangle), _collect(s4_pairs(k), _square)]
    T = [_collect(t1_pairs(k), _triangle), _collect(t2_pairs(k), _square),
         _collect(t3_pairs(k), _triangle), _collect(t4_pairs(k), _square)]
    return IndexSets(k, S, T)


# closed descriptions of the overlaps, used as cross-checks

def t3_cap_s1_closed(k: int) -> set:
    return {(k - j) * (k - j + 1) - j + 1 for j in range(1, k // 2 + 1)}


def t4_cap_s2_closed(k: int) -> set:
    return {(k - j) ** 2 - j for j in range(1, (k - 1) // 2 + 1)}


def t3_diag(k: int) -> set:
    return {i * i + 1 for i in range((k + 1) // 2, k)}


def t4_diag(k: int) -> set:
    return {(i + 1) ** 2 - i for i in range(k // 2, k - 1)}


def s3_diag(k: int) -> set:
    return {i * i + 1 for i in range(k // 2 + 1, k)}


def s4_diag(k: int) -> set:
    return {(i + 1) ** 2 - i for i in range((k + 1) // 2, k)}


def check_index_sets(k: int) -> dict:
    """Evaluate every structural identity for the families at ``k``."""
    sets = build_index_sets(k)
    S = [sets.s(l) for l in range(1, 5)]
    T = [sets.t(l) for l in range(1, 5)]
    results = {}
    results["S_partition"] = (sum(len(s) for s in S) == k * k
                              and set().union(*S) == set(range(1, k * k + 1)))
    results["T_partition"] = (sum(len(t) for t in T) == k * (k - 1)
                              and set().union(*T) == set(range(1, k * (k - 1) + 1)))
    results["S4_prime_subset"] = sets.s4_prime <= S[3]
    lhs = S[0] | (S[1] - {k * k}) | S[2] | sets.s4_double_prime
    results["S_T_union"] = lhs == set().union(*T) and (
        len(S[0]) + len(S[1]) - 1 + len(S[2]) + len(sets.s4_double_prime) == k * (k - 1))
    results["T3_cap_S1"] = (T[2] & S[0]) == (S[0] - T[0]) == t3_cap_s1_closed(k)
    results["T4_cap_S2"] = (T[3] & S[1]) == (S[1] - (T[1] | {k * k})) == t4_cap_s2_closed(k)
    results["T3_split"] = T[2] == S[2] | (T[2] & S[0]) and not (S[2] & S[0])
    results["T4_split"] = T[3] == sets.s4_double_prime | (T[3] & S[1])
    return results
