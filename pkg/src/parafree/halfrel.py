"""Half-relation defect computation, the factored defect polynomials, and
construction of the induced group/semigroup relations.

A candidate is a plain tuple of integers (a_1, ..., a_l), used with the
implicit word g^{a_1} h^{a_2} g^{a_3} ... starting at g.  The defect is
tau*c12 - c21 for odd length and c11 - c22 for even length; it vanishes
exactly when the candidate yields the symmetric relation

    g^{a_1} h^{a_2} ... = h^{a_l} g^{a_{l-1}} ...

which is a nontrivial group relation when all a_i != 0, a semigroup
relation at tau when all a_i > 0, and a semigroup relation at -tau when
the signs alternate starting negative.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (
    G,
    H,
    ExpWord,
    Mat2,
    UniPoly,
    eval_word,
    eval_word_symbolic,
    word_from_exponents,
)

Candidate = tuple[int, ...]


class RelationKind(enum.Enum):
    GROUP_NONTRIVIAL = "group_nontrivial"
    SEMIGROUP_AT_TAU = "semigroup_at_tau"
    SEMIGROUP_AT_MINUS_TAU = "semigroup_at_minus_tau"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class RelationWitness:
    """A verified pair of words with equal matrix value.

    `tau` is the parameter of the originating half-relation; `word_tau`
    is the parameter at which the two words evaluate equal (these differ
    only for the diag(1,-1)-transformed semigroup relations, whose words
    are positive words in g and h_{-tau}).
    """

    tau: Fraction
    lhs: ExpWord
    rhs: ExpWord
    kind: RelationKind
    verified: bool
    word_tau: Fraction = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.word_tau is None:
            object.__setattr__(self, "word_tau", self.tau)

    def check(self) -> bool:
        return eval_word(self.lhs, self.word_tau) == eval_word(self.rhs, self.word_tau)


def defect(candidate: Sequence[int], tau: Fraction) -> Fraction:
    """tau*c12 - c21 (odd length) or c11 - c22 (even length) of the word."""
    m = eval_word(word_from_exponents(candidate), tau)
    if len(candidate) % 2 == 1:
        return tau * m.e12 - m.e21
    return m.e11 - m.e22


def symbolic_defect(candidate: Sequence[int]) -> UniPoly:
    m = eval_word_symbolic(word_from_exponents(candidate))
    if len(candidate) % 2 == 1:
        return UniPoly.var() * m.e12 - m.e21
    return m.e11 - m.e22


def poly_hr(candidate: Sequence[int]) -> UniPoly:
    """The defect polynomial with the universal factor tau divided out.

    Raises ArithmeticError if the symbolic defect has a nonzero constant
    term, which would contradict the divisibility of the defect by tau.
    """
    return symbolic_defect(candidate).divide_by_var()


def is_half_relation(candidate: Sequence[int], tau: Fraction) -> bool:
    return defect(candidate, tau) == 0


def negate(candidate: Sequence[int]) -> Candidate:
    return tuple(-a for a in candidate)


def is_alternating(candidate: Sequence[int]) -> bool:
    """True iff (-1)^i a_i > 0 for all i (1-indexed): odd positions negative."""
    return all(a < 0 if i % 2 == 0 else a > 0 for i, a in enumerate(candidate))


def classify_signs(candidate: Sequence[int]) -> RelationKind:
    """Most specific sign classification; alternating patterns are accepted
    in either orientation (the negation of a half-relation is one too)."""
    if any(a == 0 for a in candidate):
        return RelationKind.TRIVIAL
    if all(a > 0 for a in candidate):
        return RelationKind.SEMIGROUP_AT_TAU
    if is_alternating(candidate) or is_alternating(negate(candidate)):
        return RelationKind.SEMIGROUP_AT_MINUS_TAU
    return RelationKind.GROUP_NONTRIVIAL


def relation_words(candidate: Sequence[int]) -> tuple[ExpWord, ExpWord]:
    """The two sides of the symmetric relation induced by a half-relation."""
    exps = tuple(candidate)
    return ExpWord(G, exps), ExpWord(H, tuple(reversed(exps)))


def relator(candidate: Sequence[int]) -> ExpWord:
    """lhs * rhs^{-1}; evaluates to the identity iff the candidate is a
    half-relation (and tau != 0 for odd length)."""
    lhs, rhs = relation_words(candidate)
    return lhs.concat(rhs.inverse())


def minus_tau_transform(word: ExpWord) -> ExpWord:
    """Conjugation by diag(1,-1): g^a -> g^{-a} and h_tau^b -> h_{-tau}^b.

    The result is a word whose evaluation at -tau equals diag(1,-1) *
    eval(word, tau) * diag(1,-1).
    """
    exps = []
    for tag, a in word.letters():
        exps.append(-a if tag == G else a)
    return ExpWord(word.start, tuple(exps))


def build_relation(candidate: Sequence[int], tau: Fraction) -> RelationWitness:
    """Build and verify the symmetric relation induced by a half-relation.

    Rejects candidates that are not half-relations for tau, and tau = 0
    (for which the odd-length symmetry argument degenerates).
    """
    exps = tuple(candidate)
    if tau == 0:
        raise ValueError("tau = 0 is degenerate; no relation is built")
    if not is_half_relation(exps, tau):
        raise ValueError(f"{exps} is not a half-relation for tau = {tau}")
    lhs, rhs = relation_words(exps)
    m_lhs = eval_word(lhs, tau)
    if m_lhs != eval_word(rhs, tau):
        raise AssertionError("half-relation did not induce a matrix identity")
    if not eval_word(relator(exps), tau).is_identity():
        raise AssertionError("relator did not evaluate to the identity")
    return RelationWitness(tau, lhs, rhs, classify_signs(exps), True)


def build_semigroup_witness(candidate: Sequence[int], tau: Fraction) -> RelationWitness:
    """Turn a suitably signed half-relation into a pair of equal positive words.

    All-positive candidates give the symmetric relation at tau directly.
    Alternating candidates are conjugated letterwise by diag(1,-1), which
    negates g-exponents and flips the sign of tau, yielding two positive
    words in g and h_{-tau}; for odd length the symmetric pair is not
    positive on both sides, so the relation is presented as (w * g, g)
    where w is the (positive) conjugated relator.
    """
    exps = tuple(candidate)
    if tau == 0:
        raise ValueError("tau = 0 is degenerate; no relation is built")
    if not is_half_relation(exps, tau):
        raise ValueError(f"{exps} is not a half-relation for tau = {tau}")
    kind = classify_signs(exps)
    if kind is RelationKind.SEMIGROUP_AT_TAU:
        lhs, rhs = relation_words(exps)
        if eval_word(lhs, tau) != eval_word(rhs, tau):
            raise AssertionError("positive relation failed to verify")
        return RelationWitness(tau, lhs, rhs, kind, True)
    if kind is not RelationKind.SEMIGROUP_AT_MINUS_TAU:
        raise ValueError(
            f"{exps} has mixed signs ({kind.value}); no semigroup relation"
        )
    if not is_alternating(exps):
        exps = negate(exps)  # normalize to odd positions negative
    l = len(exps)
    if l % 2 == 0:
        lhs, rhs = relation_words(exps)
        pos_lhs = minus_tau_transform(lhs)
        pos_rhs = minus_tau_transform(rhs)
    else:
        # conjugated relator: positive word equal to Id at -tau
        w = minus_tau_transform(relator(exps))
        one_g = ExpWord(G, (1,))
        pos_lhs = w.concat(one_g)
        pos_rhs = one_g
    if not (pos_lhs.is_positive and pos_rhs.is_positive):
        raise AssertionError("semigroup transformation produced a non-positive word")
    if eval_word(pos_lhs, -tau) != eval_word(pos_rhs, -tau):
        raise AssertionError("transformed relation failed to verify at -tau")
    return RelationWitness(
        tau, pos_lhs, pos_rhs, RelationKind.SEMIGROUP_AT_MINUS_TAU, True, word_tau=-tau
    )
