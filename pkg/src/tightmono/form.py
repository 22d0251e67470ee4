"""The symmetric bilinear form on the positive part of the quantized
enveloping algebra, evaluated exactly on words and divided-power monomials.

The form is the unique one with (1, 1) = 1 and (E_i x, y) = (x, phi_i y),
where phi_i acts on words by

    phi_i(empty) = 0,
    phi_i(E_j w) = delta_ij * w + v^(a_ij) * E_j * phi_i(w).

That recursion follows from the defining commutator of phi_i together with
E_j K_i = v^(-a_ij) K_i E_j; its base cases (E_i, E_i) = 1 and
phi_i(E_j) = delta_ij are checked in the test suite before anything relies
on it. Values on words stay inside Z[v, v^-1]; denominators only enter when
dividing by the q-factorials of divided powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .laurent import ZERO, LaurentPoly, RatFunc, eval_at_vinv0, qfact, v_power
from .roots import CartanSpec, Monomial, weight_of_monomial

Word = tuple[int, ...]

DEFAULT_DEGREE_CAP = 14
DEFAULT_WORD_CAP = 10**6

SOURCE_ORACLE = "oracle"
SOURCE_CLOSED_FORM = "closed_form"


class DegreeCapExceeded(RuntimeError):
    """The monomial's degree is beyond the configured cap for form evaluation."""


class WeightTooLarge(RuntimeError):
    """Enumerating every word of the weight would exceed the configured cap."""


class ConstantTermNotPositiveInteger(RuntimeError):
    """A regular (x, x) whose value at v^-1 = 0 is not a positive integer.

    This cannot happen for genuine monomials; it signals an implementation bug.
    """


class VerdictKind(Enum):
    TIGHT = "tight"
    SEMITIGHT = "semitight"
    NOT_SEMITIGHT = "not_semitight"


@dataclass(frozen=True)
class Verdict:
    """Classification of a monomial by the value of (x, x) at v^-1 = 0."""

    kind: VerdictKind
    constant_term: int | None
    source: str

    @staticmethod
    def tight(source: str) -> "Verdict":
        return Verdict(VerdictKind.TIGHT, 1, source)

    @staticmethod
    def semitight(k: int, source: str) -> "Verdict":
        return Verdict(VerdictKind.SEMITIGHT, k, source)

    @staticmethod
    def not_semitight(source: str) -> "Verdict":
        return Verdict(VerdictKind.NOT_SEMITIGHT, None, source)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "constant_term": self.constant_term,
            "source": self.source,
        }


@dataclass
class Combination:
    """A finite linear combination of words with rational-function coefficients.

    Zero coefficients are never stored. Instances are treated as immutable.
    """

    terms: dict[Word, RatFunc] = field(default_factory=dict)

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "Combination":
        return cls({tuple(word): RatFunc(1)})

    @classmethod
    def of(cls, terms: dict[Word, RatFunc]) -> "Combination":
        return cls({w: c for w, c in terms.items() if not c.is_zero})

    @property
    def is_zero(self) -> bool:
        return not self.terms


def _phi_word(i: int, word: Word, cartan: CartanSpec) -> dict[Word, LaurentPoly]:
    """phi_i of a single word, as {shorter word: v-power coefficient sum}.

    Deleting the occurrence of i at position p contributes
    v^(sum of a_{i, letter} over letters before p); equal deletions merge.
    """
    out: dict[Word, LaurentPoly] = {}
    shift = 0
    for p, letter in enumerate(word):
        if letter == i:
            shorter = word[:p] + word[p + 1 :]
            out[shorter] = out.get(shorter, ZERO) + v_power(shift)
        shift += cartan.a(i, letter)
    return out


def phi(i: int, x: "Combination | Sequence[int]", cartan: CartanSpec) -> Combination:
    """Linear extension of phi_i to combinations of words."""
    if not isinstance(x, Combination):
        x = Combination.from_word(x)
    out: dict[Word, RatFunc] = {}
    for word, coeff in x.terms.items():
        for shorter, power in _phi_word(i, word, cartan).items():
            acc = out.get(shorter, RatFunc(0)) + coeff * RatFunc(power)
            out[shorter] = acc
    return Combination.of(out)


def _content(word: Iterable[int], rank: int) -> tuple[int, ...]:
    counts = [0] * rank
    for letter in word:
        counts[letter - 1] += 1
    return tuple(counts)


class _FormEvaluator:
    """Pairs one fixed left word against arbitrary right words.

    Memoizes on (position in the left word, remaining right word); the cache
    belongs to this evaluator alone, so distinct evaluators never share
    mutable state.
    """

    def __init__(self, left: Word, cartan: CartanSpec) -> None:
        self.left = left
        self.cartan = cartan
        self._memo: dict[tuple[int, Word], LaurentPoly] = {}

    def value(self, right: Word) -> LaurentPoly:
        if _content(self.left, self.cartan.rank) != _content(right, self.cartan.rank):
            return ZERO
        return self._rec(0, right)

    def _rec(self, k: int, w: Word) -> LaurentPoly:
        # Each phi step removes one letter matching left[k], so w always has
        # the content of left[k:]; at the end w is empty and (1, 1) = 1.
        if k == len(self.left):
            return LaurentPoly({0: 1})
        key = (k, w)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        acc = ZERO
        for shorter, power in _phi_word(self.left[k], w, self.cartan).items():
            sub = self._rec(k + 1, shorter)
            if not sub.is_zero:
                acc = acc + power * sub
        self._memo[key] = acc
        return acc


def form_words(x: Sequence[int], y: Sequence[int], cartan: CartanSpec) -> RatFunc:
    """The form of two words (all exponents 1); 0 when their contents differ."""
    return RatFunc(_FormEvaluator(tuple(x), cartan).value(tuple(y)))


def _qfact_product(m: Monomial) -> LaurentPoly:
    out = LaurentPoly({0: 1})
    for _, a in m.factors:
        out = out * qfact(a)
    return out


def form_monomials(m1: Monomial, m2: Monomial, cartan: CartanSpec) -> RatFunc:
    """The form of two divided-power monomials.

    Flattens to words and divides by the q-factorials of every exponent on
    both sides.
    """
    raw = _FormEvaluator(m1.flatten(), cartan).value(m2.flatten())
    return RatFunc(raw, _qfact_product(m1) * _qfact_product(m2))


def classify_form(f: RatFunc, source: str) -> Verdict:
    """Classify from an already computed (x, x) value."""
    reg = eval_at_vinv0(f)
    if not reg.regular:
        return Verdict.not_semitight(source)
    value = reg.value
    if value is None or value.denominator != 1 or value <= 0:
        raise ConstantTermNotPositiveInteger(f"constant term {value} of a regular (x, x)")
    k = int(value)
    return Verdict.tight(source) if k == 1 else Verdict.semitight(k, source)


def classify_oracle(m: Monomial, cartan: CartanSpec, max_degree: int = DEFAULT_DEGREE_CAP) -> Verdict:
    """Tight / semitight / neither for a monomial, by direct form evaluation."""
    if m.degree > max_degree:
        raise DegreeCapExceeded(
            f"monomial degree {m.degree} exceeds the oracle degree cap {max_degree}"
        )
    return classify_form(form_monomials(m, m, cartan), SOURCE_ORACLE)


def multinomial(counts: Sequence[int]) -> int:
    """Number of distinct words with the given letter multiplicities."""
    out, total = 1, 0
    for c in counts:
        total += c
        out *= math.comb(total, c)
    return out


def words_of_content(counts: Sequence[int]) -> Iterator[Word]:
    """All words with the given letter multiplicities, in lexicographic order."""
    remaining = list(counts)
    total = sum(remaining)
    word: list[int] = []

    def rec() -> Iterator[Word]:
        if len(word) == total:
            yield tuple(word)
            return
        for i, left in enumerate(remaining):
            if left:
                remaining[i] -= 1
                word.append(i + 1)
                yield from rec()
                word.pop()
                remaining[i] += 1

    return rec()


def equal_by_pairing(
    m1: Monomial,
    m2: Monomial,
    cartan: CartanSpec,
    max_words: int = DEFAULT_WORD_CAP,
) -> bool:
    """Decide m1 = m2 in the positive part by pairing against a weight space.

    Two elements of the same weight are equal exactly when their pairings
    with every word of that weight agree; this rests on the standard fact
    that the form is nondegenerate there. Monomials of different weights are
    unequal outright.
    """
    w1 = weight_of_monomial(m1, cartan)
    if w1 != weight_of_monomial(m2, cartan):
        return False
    total = multinomial(w1.coords)
    if total > max_words:
        raise WeightTooLarge(f"{total} words of weight {w1.coords} exceed the cap {max_words}")
    left1 = _FormEvaluator(m1.flatten(), cartan)
    left2 = _FormEvaluator(m2.flatten(), cartan)
    q1, q2 = _qfact_product(m1), _qfact_product(m2)
    for u in words_of_content(w1.coords):
        # f1/q1 == f2/q2 without building rational functions per word.
        if left1.value(u) * q2 != left2.value(u) * q1:
            return False
    return True
