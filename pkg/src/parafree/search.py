"""Bounded exhaustive discovery of half-relations with exact pruning.

The enumeration is depth-first over exponent prefixes; the defect is an
affine function of the final exponent, so the last position is solved
exactly instead of enumerated (O(B^{l-1}) instead of O(B^l)).  All matrix
arithmetic is done on integer matrices scaled by q^(#h-letters), where
tau = p/q, so the hot loop never touches rational numbers.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .halfrel import Candidate, defect


class SignMode(enum.Enum):
    NONZERO_ANY = "nonzero_any"
    ALL_POSITIVE = "all_positive"
    ALTERNATING = "alternating"


MAX_LEN_LIMIT = 12
DEFAULT_RESULT_LIMIT = 1000


@dataclass(frozen=True)
class SearchQuery:
    tau: Fraction
    max_len: int
    bound: int
    sign_mode: SignMode = SignMode.NONZERO_ANY
    result_limit: int = DEFAULT_RESULT_LIMIT

    def __post_init__(self) -> None:
        if not 1 <= self.max_len <= MAX_LEN_LIMIT:
            raise ValueError(f"max_len must be in [1, {MAX_LEN_LIMIT}]")
        if self.bound < 1:
            raise ValueError("bound must be >= 1")
        if self.result_limit is not None and self.result_limit < 1:
            raise ValueError("result_limit must be >= 1")


@dataclass(frozen=True)
class SearchReport:
    query: SearchQuery
    hits: tuple[Candidate, ...]
    exhausted: bool


def _allowed_values(position: int, bound: int, mode: SignMode) -> range | list[int]:
    """Allowed exponents at 1-indexed position under the sign mode.

    ALTERNATING is canonicalized to the orientation with a_1 < 0."""
    if mode is SignMode.ALL_POSITIVE:
        return range(1, bound + 1)
    if mode is SignMode.ALTERNATING:
        if position % 2 == 1:
            return range(-bound, 0)
        return range(1, bound + 1)
    return [a for a in range(-bound, bound + 1) if a != 0]


def _value_allowed(a: int, position: int, bound: int, mode: SignMode) -> bool:
    if abs(a) > bound or a == 0:
        return False
    if mode is SignMode.ALL_POSITIVE:
        return a > 0
    if mode is SignMode.ALTERNATING:
        return a < 0 if position % 2 == 1 else a > 0
    return True


def _dfs(p: int, q: int, exps: tuple[int, ...],
         n11: int, n12: int, n21: int, n22: int,
         max_len: int, bound: int, mode: SignMode,
         out: list[Candidate]) -> None:
    l = len(exps) + 1  # length completed by solving the final position
    if l % 2 == 1:
        # final letter g^a: defect ~ p*(n11*a + n12) - q*n21
        coeff, const = p * n11, p * n12 - q * n21
    else:
        # final letter h^a: defect ~ (n11 - n22)*q + n12*p*a
        coeff, const = p * n12, q * (n11 - n22)
    if coeff != 0:
        if const % coeff == 0:
            a = -const // coeff
            if _value_allowed(a, l, bound, mode):
                out.append(exps + (a,))
    elif const == 0:
        for a in _allowed_values(l, bound, mode):
            out.append(exps + (a,))
    if l < max_len:
        if l % 2 == 1:
            for a in _allowed_values(l, bound, mode):
                _dfs(p, q, exps + (a,),
                     n11, n11 * a + n12, n21, n21 * a + n22,
                     max_len, bound, mode, out)
        else:
            for a in _allowed_values(l, bound, mode):
                _dfs(p, q, exps + (a,),
                     n11 * q + n12 * a * p, n12 * q, n21 * q + n22 * a * p, n22 * q,
                     max_len, bound, mode, out)


def _search_branch(args: tuple) -> list[Candidate]:
    """One top-level branch (fixed a_1); the parallelization unit."""
    p, q, a1, max_len, bound, mode_value = args
    mode = SignMode(mode_value)
    out: list[Candidate] = []
    if max_len >= 2:
        _dfs(p, q, (a1,), 1, a1, 0, 1, max_len, bound, mode, out)
    return out


def search_half_relations(query: SearchQuery, workers: int = 1) -> SearchReport:
    """Enumerate all half-relations for the query, in shortlex order.

    Deterministic and worker-count independent: branches are split on the
    value of a_1 and merged with a canonical sort.
    """
    p, q = query.tau.numerator, query.tau.denominator
    hits: list[Candidate] = []
    # length-1 hits (empty prefix, solve the single position)
    _dfs(p, q, (), 1, 0, 0, 1, 1, query.bound, query.sign_mode, hits)
    branch_args = [
        (p, q, a1, query.max_len, query.bound, query.sign_mode.value)
        for a1 in _allowed_values(1, query.bound, query.sign_mode)
    ]
    if query.max_len >= 2:
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for branch_hits in pool.map(_search_branch, branch_args):
                    hits.extend(branch_hits)
        else:
            for args in branch_args:
                hits.extend(_search_branch(args))
    hits = sorted(set(hits), key=lambda c: (len(c), c))
    exhausted = True
    if query.result_limit is not None and len(hits) > query.result_limit:
        hits = hits[: query.result_limit]
        exhausted = False
    return SearchReport(query, tuple(hits), exhausted)


def search_len4_positive(n_from: int, n_to: int, bound: int) -> dict[int, list[Candidate]]:
    """All-positive length-4 half-relations for tau = ((n-1)/n)^2.

    For positive solutions, a_1*a_4 < (n/(n-1))^2 is forced, so a_1 and
    a_4 are tiny; the relation is then affine in a_3 for each a_2, and a_3
    is solved exactly (a_2 enumerated up to the bound, the solved a_3
    accepted at any positive size so that no solution pair is missed).
    Returns only n with a nonempty hit list.
    """
    if not 2 <= n_from <= n_to:
        raise ValueError("need 2 <= n_from <= n_to")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    found: dict[int, list[Candidate]] = {}
    for n in range(n_from, n_to + 1):
        n2 = n * n
        m2 = (n - 1) * (n - 1)
        hits: list[Candidate] = []
        a1 = 1
        while a1 * m2 < n2:
            a4 = 1
            while True:
                c = n2 - a1 * a4 * m2
                if c <= 0:
                    break
                # a3 * (c*a2 - a4*n2) = a1*(a2 + a4)*n2, need a3 >= 1
                a2_min = a4 * n2 // c + 1
                for a2 in range(max(1, a2_min), bound + 1):
                    den = c * a2 - a4 * n2
                    num = a1 * (a2 + a4) * n2
                    if num % den == 0:
                        hits.append((a1, a2, num // den, a4))
                a4 += 1
            a1 += 1
        if hits:
            tau = Fraction(m2, n2)
            for hit in hits:
                if defect(hit, tau) != 0:  # post-hoc soundness re-check
                    raise AssertionError(f"solver produced a bad hit {hit} for n={n}")
            found[n] = sorted(set(hits))
    return found
