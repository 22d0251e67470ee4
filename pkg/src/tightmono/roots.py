"""Cartan data, weights and Weyl reflections, reduced words for the longest
element, and the divided-power monomial attached to a dominant weight.

Weights live in fundamental-weight coordinates and roots in simple-root
coordinates; the Cartan matrix converts between the two, so everything is
integer arithmetic. All types are frozen and all operations pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class NonDominantWeight(ValueError):
    """Raised when an operation requires a dominant weight."""


class InvalidWord(ValueError):
    """Raised when a word is not a reduced expression of the longest element."""


@dataclass(frozen=True)
class CartanSpec:
    """A symmetric Cartan matrix of type A_n or D4, with its positive-root count."""

    kind: str
    matrix: tuple[tuple[int, ...], ...]
    positive_root_count: int

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def a(self, i: int, j: int) -> int:
        """Cartan entry a_ij for 1-based generator indices."""
        return self.matrix[i - 1][j - 1]

    @staticmethod
    def type_a(n: int) -> "CartanSpec":
        if n < 1:
            raise ValueError("type A rank must be at least 1")
        rows = tuple(
            tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n))
            for i in range(n)
        )
        return CartanSpec(f"A{n}", rows, n * (n + 1) // 2)

    @staticmethod
    def type_d4() -> "CartanSpec":
        # Node 2 is the trivalent centre, adjacent to 1, 3 and 4.
        rows = [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]]
        for i, j in ((0, 1), (1, 2), (1, 3)):
            rows[i][j] = rows[j][i] = -1
        return CartanSpec("D4", tuple(tuple(r) for r in rows), 12)

    @staticmethod
    def from_name(name: str) -> "CartanSpec":
        if name == "D4":
            return CartanSpec.type_d4()
        m = re.fullmatch(r"A([1-9][0-9]*)", name)
        if m:
            return CartanSpec.type_a(int(m.group(1)))
        raise ValueError(f"unknown Cartan type {name!r}")

    def standard_w0_word(self) -> "ReducedWord":
        """A fixed reduced word for the longest element of the Weyl group."""
        if self.kind == "D4":
            return ReducedWord((2, 1, 3, 4) * 3)
        letters: list[int] = []
        for k in range(1, self.rank + 1):
            letters.extend(range(k, 0, -1))
        return ReducedWord(tuple(letters))


@dataclass(frozen=True)
class Weight:
    """An integral weight in fundamental-weight coordinates."""

    coords: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> "Weight":
        return cls(tuple(int(part) for part in text.split(",")))

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)


@dataclass(frozen=True)
class ReducedWord:
    """A sequence of simple-reflection indices."""

    letters: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> "ReducedWord":
        return cls(tuple(int(part) for part in text.split(",")))

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class Monomial:
    """An ordered product of divided powers, as (generator, exponent) pairs."""

    factors: tuple[tuple[int, int], ...]

    def drop_zeros(self) -> "Monomial":
        """Remove factors with exponent 0 (they are the identity)."""
        return Monomial(tuple(f for f in self.factors if f[1] != 0))

    def flatten(self) -> tuple[int, ...]:
        """The underlying word, each generator repeated by its exponent."""
        out: list[int] = []
        for i, a in self.factors:
            out.extend((i,) * a)
        return tuple(out)

    @property
    def degree(self) -> int:
        """Total exponent sum, i.e. the height of the monomial's weight."""
        return sum(a for _, a in self.factors)


@dataclass(frozen=True)
class RootVec:
    """A vector in simple-root coordinates."""

    coords: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coords)


def pairing(lam: Weight, i: int) -> int:
    """The pairing of lam with the i-th simple coroot (1-based index)."""
    if not 1 <= i <= len(lam.coords):
        raise IndexError(f"generator index {i} out of range 1..{len(lam.coords)}")
    return lam.coords[i - 1]


def reflect(lam: Weight, i: int, cartan: CartanSpec) -> Weight:
    """Apply the simple reflection s_i to a weight.

    In fundamental-weight coordinates s_i subtracts <lam, alpha_i^v> times
    the i-th column of the Cartan matrix.
    """
    if len(lam.coords) != cartan.rank:
        raise ValueError("weight length does not match the Cartan rank")
    c = pairing(lam, i)
    return Weight(tuple(x - c * cartan.a(j, i) for j, x in enumerate(lam.coords, start=1)))


def _reflect_root(coords: list[int], i: int, cartan: CartanSpec) -> list[int]:
    # s_i on a vector in simple-root coordinates changes only entry i.
    out = list(coords)
    out[i - 1] -= sum(cartan.a(i, j) * coords[j - 1] for j in range(1, cartan.rank + 1))
    return out


def validate_w0_word(word: ReducedWord, cartan: CartanSpec) -> bool:
    """Check that a word is a reduced expression of the longest element.

    Uses positive-root tracking: the word is reduced exactly when every root
    s_{i_1}...s_{i_(j-1)}(alpha_{i_j}) is positive; a reduced word of length
    equal to the number of positive roots is automatically a word for w0.
    """
    letters = word.letters
    if len(letters) != cartan.positive_root_count:
        return False
    if any(not 1 <= i <= cartan.rank for i in letters):
        return False
    seen: set[tuple[int, ...]] = set()
    for j, i in enumerate(letters):
        root = [1 if k == i - 1 else 0 for k in range(cartan.rank)]
        for t in range(j - 1, -1, -1):
            root = _reflect_root(root, letters[t], cartan)
        if any(c < 0 for c in root):
            return False
        seen.add(tuple(root))
    return len(seen) == len(letters)


def exponent_sequence(word: ReducedWord, lam: Weight, cartan: CartanSpec) -> tuple[int, ...]:
    """Exponents a_j = <s_{i_(j-1)}...s_{i_1} lam, alpha_{i_j}^v> along a w0 word.

    For a dominant weight and a reduced word for w0 every a_j is nonnegative.
    """
    if len(lam.coords) != cartan.rank:
        raise ValueError("weight length does not match the Cartan rank")
    if not lam.is_dominant:
        raise NonDominantWeight(f"weight {lam.coords} is not dominant")
    if not validate_w0_word(word, cartan):
        raise InvalidWord(f"{word.letters} is not a reduced word for w0 in {cartan.kind}")
    exps: list[int] = []
    mu = lam
    for i in word.letters:
        a = pairing(mu, i)
        assert a >= 0
        exps.append(a)
        mu = reflect(mu, i, cartan)
    return tuple(exps)


def xlambda(word: ReducedWord, lam: Weight, cartan: CartanSpec) -> Monomial:
    """The canonical monomial of a dominant weight along a w0 word.

    Zero exponents are kept so the factor list matches the word position by
    position; use Monomial.drop_zeros to discard them.
    """
    exps = exponent_sequence(word, lam, cartan)
    return Monomial(tuple(zip(word.letters, exps)))


def weight_of_monomial(m: Monomial, cartan: CartanSpec) -> RootVec:
    """Exponent sums per generator, as a vector in simple-root coordinates."""
    coords = [0] * cartan.rank
    for i, a in m.factors:
        if not 1 <= i <= cartan.rank:
            raise IndexError(f"generator index {i} out of range 1..{cartan.rank}")
        coords[i - 1] += a
    return RootVec(tuple(coords))
