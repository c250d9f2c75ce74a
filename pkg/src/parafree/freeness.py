"""Top-level classification of a rational tau: Schottky thresholds, exact
family-formula inversion, and bounded search fallback.

"Unknown" is a first-class outcome: failure to find a relation within the
effort bounds is never reported as freeness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

from .families import (
    FamilyInstance,
    family_instance,
    family_n,
    family_tau,
    fib,
    instance_witness,
    pell,
)
from .halfrel import (
    RelationKind,
    RelationWitness,
    build_relation,
    build_semigroup_witness,
    classify_signs,
    minus_tau_transform,
)
from .search import SearchQuery, SignMode, search_half_relations

FREE_SCHOTTKY = "free_schottky"
NON_FREE = "non_free"
NON_SEMIGROUP_FREE = "non_semigroup_free"
UNKNOWN = "unknown"

_SIGMA_PAIRS = [(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)]


@dataclass(frozen=True)
class SearchEffort:
    max_len: int = 4
    bound: int = 8
    workers: int = 1


@dataclass(frozen=True)
class TauClassification:
    tau: Fraction
    group_status: str
    group_witness: Optional[RelationWitness]
    semigroup_status: str
    semigroup_witness: Optional[RelationWitness]
    effort: SearchEffort


def _square_root_of(tau: Fraction) -> Optional[Fraction]:
    if tau <= 0:
        return None
    sp, sq = isqrt(tau.numerator), isqrt(tau.denominator)
    if sp * sp != tau.numerator or sq * sq != tau.denominator:
        return None
    return Fraction(sp, sq)


def family_lookup(tau: Fraction) -> list[FamilyInstance]:
    """All family instances whose tau equals the input, found by exact
    inversion of each family formula; each is verified before return."""
    out: list[FamilyInstance] = []
    s = _square_root_of(tau)
    if s is not None:
        # family A: s = (2k-1)/(2k) in lowest terms, negative k folds (2k+1)/(2k)
        if s.denominator % 2 == 0:
            half = s.denominator // 2
            if s.numerator == s.denominator - 1:
                out.append(family_instance("A", half))
            elif s.numerator == s.denominator + 1:
                out.append(family_instance("A", -half))
        # family B: s = (n-1)/n, then match n against each u-sequence product
        if s.numerator == s.denominator - 1:
            n = s.denominator
            for sigma in _SIGMA_PAIRS:
                for step in (1, -1):
                    k = 0 if step == 1 else -1
                    while True:
                        nv = family_n(sigma, k)
                        if nv == n and nv != 1:
                            out.append(family_instance("B", k, sigma=sigma))
                        if nv > n:
                            break
                        k += step
    # family C: k = 1/(tau - 2)
    if tau != 2:
        inv = 1 / (tau - 2)
        if inv.denominator == 1:
            k = inv.numerator
            out.append(family_instance("C_general", k))
            if k % 2 == 0:
                out.append(family_instance("C_even", k))
            disc = 8 * k + 9
            if disc >= 0 and isqrt(disc) ** 2 == disc and isqrt(disc) % 2 == 1:
                out.append(family_instance("C_quad", k))
    # families D and E: scan k until the sequence outgrows tau's terms
    limit = max(abs(tau.numerator), tau.denominator)
    for direction in (1, -1):
        k = direction
        while True:
            if not (k == 0 or (k == -2)):
                f_k, f_k2 = fib(k), fib(k + 2)
                if f_k != 0 and Fraction(f_k2, f_k) == tau:
                    out.append(family_instance("D", k))
                if min(abs(f_k), abs(f_k2)) > limit:
                    break
            k += direction
            if abs(k) > 300:
                break
    for direction in (1, -1):
        k = direction
        while True:
            h_next, _ = pell(k + 1)
            _, p_k = pell(k)
            if p_k != 0 and Fraction(h_next, p_k) == tau:
                out.append(family_instance("E", k))
            if min(abs(p_k), abs(h_next)) > limit and abs(k) > 2:
                break
            k += direction
            if abs(k) > 300:
                break
    return out


def _group_witness_from_instance(inst: FamilyInstance, at_minus_tau: bool) -> RelationWitness:
    w = instance_witness(inst)
    if not at_minus_tau:
        return w
    # rewrite the relation at -tau into one at tau via diag(1,-1) conjugation
    lhs = minus_tau_transform(w.lhs)
    rhs = minus_tau_transform(w.rhs)
    new = RelationWitness(-inst.tau, lhs, rhs, RelationKind.GROUP_NONTRIVIAL, True)
    if not new.check():
        raise AssertionError("minus-tau rewrite failed to verify")
    return new


def classify_tau(tau: Fraction, effort: SearchEffort = SearchEffort()) -> TauClassification:
    """Classify the group and semigroup at tau.

    Thresholds first (|tau| >= 4 group-Schottky, tau >= 1 semigroup-Schottky,
    tau <= -4 semigroup-free via the free group at |tau|), then family
    lookup at tau and -tau, then bounded search.
    """
    group_status, group_witness = UNKNOWN, None
    semi_status, semi_witness = UNKNOWN, None

    if abs(tau) >= 4:
        group_status = FREE_SCHOTTKY
    elif tau != 0:
        insts = family_lookup(tau)
        if insts:
            group_status, group_witness = NON_FREE, _group_witness_from_instance(insts[0], False)
        else:
            mirror = family_lookup(-tau)
            if mirror:
                group_status = NON_FREE
                group_witness = _group_witness_from_instance(mirror[0], True)
            else:
                report = search_half_relations(
                    SearchQuery(tau, effort.max_len, effort.bound, SignMode.NONZERO_ANY),
                    workers=effort.workers,
                )
                if report.hits:
                    group_status = NON_FREE
                    group_witness = build_relation(report.hits[0], tau)

    if tau >= 1 or tau <= -4:
        semi_status = FREE_SCHOTTKY
    elif tau != 0:
        semi_witness = _find_semigroup_witness(tau, effort)
        if semi_witness is not None:
            semi_status = NON_SEMIGROUP_FREE

    if group_witness is not None and not group_witness.check():
        raise AssertionError("group witness failed re-verification")
    if semi_witness is not None and not semi_witness.check():
        raise AssertionError("semigroup witness failed re-verification")
    return TauClassification(tau, group_status, group_witness, semi_status, semi_witness, effort)


def _find_semigroup_witness(tau: Fraction, effort: SearchEffort) -> Optional[RelationWitness]:
    # positive words at tau, directly
    for inst in family_lookup(tau):
        if not inst.exceptional and inst.kind is RelationKind.SEMIGROUP_AT_TAU:
            return build_semigroup_witness(inst.candidate, tau)
    # alternating half-relation at -tau gives positive words at tau
    for inst in family_lookup(-tau):
        if not inst.exceptional and inst.kind is RelationKind.SEMIGROUP_AT_MINUS_TAU:
            return build_semigroup_witness(inst.candidate, -tau)
    report = search_half_relations(
        SearchQuery(tau, effort.max_len, effort.bound, SignMode.ALL_POSITIVE),
        workers=effort.workers,
    )
    for hit in report.hits:
        if classify_signs(hit) is RelationKind.SEMIGROUP_AT_TAU:
            return build_semigroup_witness(hit, tau)
    report = search_half_relations(
        SearchQuery(-tau, effort.max_len, effort.bound, SignMode.ALTERNATING),
        workers=effort.workers,
    )
    for hit in report.hits:
        if classify_signs(hit) is RelationKind.SEMIGROUP_AT_MINUS_TAU:
            return build_semigroup_witness(hit, -tau)
    return None
