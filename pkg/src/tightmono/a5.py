"""Closed-form tightness analysis in type A5.

For a dominant weight (a1..a5) the self-pairing of the canonical monomial
expands over a ten-variable integer summation domain as a sum of terms
v^(-defect) times factors with value 1 at v^-1 = 0, where the defect is a
nonnegative integer quadratic form. Its zero count over the domain is
therefore exactly the constant term of the pairing: 1 means tight, k >= 2
means semitight with constant term k.

The domain is a product D2 x D3 x D4 of three independent blocks
(z21,z22,z23), (z31,z32,z33,z34) and (z41,z42,z43), and the defect splits as

    defect = g2(z2-block; z33, z34) + g3(z3-block) + g4(z4-block; z32, z34)

with g2, g4 sums of four squares each (hence >= 0) and g3 = y1^2 + y2^2 - A^2.
Zero counting and exact minimisation therefore reduce to per-block value
histograms convolved over the z3-block, which covers every domain tuple
without materialising the product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .form import SOURCE_CLOSED_FORM, Verdict
from .roots import NonDominantWeight, Weight


class TightConditionsMismatch(RuntimeError):
    """Zero-count verdict disagrees with the eight-condition tightness test.

    Both derive from the same analysis, so a mismatch signals a
    transcription bug, never a valid outcome.
    """


class ZTuple(NamedTuple):
    """A point of the ten-variable summation domain."""

    z21: int
    z22: int
    z23: int
    z31: int
    z32: int
    z33: int
    z34: int
    z41: int
    z42: int
    z43: int


@dataclass(frozen=True)
class SosDecomp:
    """Square decomposition of the defect: sum(x_i^2) + y1^2 + y2^2 - a^2.

    The bookkeeping identities x1 + ... + x8 = 2a and y1 + y2 = a force the
    whole expression to be nonnegative.
    """

    x: tuple
    y: tuple
    a: int


@dataclass(frozen=True)
class A5Report:
    """Outcome of the closed-form classification of one dominant weight."""

    weight: Weight
    domain_size: int
    zero_count: int
    verdict: Verdict
    zero_set: tuple[ZTuple, ...] | None

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.weight.coords),
            "domain_size": self.domain_size,
            "zero_count": self.zero_count,
            "verdict": self.verdict.to_dict(),
            "zero_set": None if self.zero_set is None else [list(z) for z in self.zero_set],
        }


def _coords5(lam: "Weight | Sequence[int]") -> tuple:
    coords = tuple(lam.coords if isinstance(lam, Weight) else lam)
    if len(coords) != 5:
        raise ValueError(f"need 5 weight coordinates, got {len(coords)}")
    return coords


def _dominant5(lam: "Weight | Sequence[int]") -> tuple[int, ...]:
    coords = _coords5(lam)
    if any(c < 0 for c in coords):
        raise NonDominantWeight(f"weight {coords} is not dominant")
    return coords


def in_domain(lam: "Weight | Sequence[int]", z: ZTuple) -> bool:
    """Membership in the summation domain for a dominant 5-coordinate weight."""
    a1, a2, a3, a4, a5 = _dominant5(lam)
    z21, z22, z23, z31, z32, z33, z34, z41, z42, z43 = z
    return (
        # z2-block
        0 <= z21 <= a4 + a5
        and 0 <= z22 <= min(a2 + a3 + a4 + a5 - z21, a3 + a4)
        and 0 <= z23 <= min(a2 + a3 + a4 + a5 - z21 - z22, a2 + a3)
        and z21 + z22 + z23 >= a3 + a4 + a5 - a1
        # z3-block
        and 0 <= z31 <= a3 + a4 + a5
        and 0 <= z32 <= min(a3 + a4 + a5 - z31, a2 + a3 + a4)
        and a4 + a5 - z31 - z32 <= a1 + a2
        and 0 <= z33 <= min(a3 + a4 + a5 - z31, a2 + a3 + a4)
        and 0 <= z34 <= min(a2 + a3 + a4 - z33, a2 + a3 + a4 - z32)
        and z31 + z32 + z33 + z34 >= a3 + 2 * a4 + a5 - a1
        # z4-block
        and 0 <= z41 <= a4 + a5
        and a5 - z41 <= a1 + a2 + a3
        and 0 <= z42 <= min(a2 + a3 + a4 + a5 - z41, a3 + a4)
        and z41 + z42 >= a4 + a5 - a1 - a2
        and 0 <= z43 <= min(a2 + a3 + a4 + a5 - z41 - z42, a2 + a3)
        and z41 + z42 + z43 >= a3 + a4 + a5 - a1
    )


def defect_expanded(lam: "Weight | Sequence[int]", z: ZTuple) -> int:
    """The defect as a sum of 25 products, defined for all integer tuples."""
    a1, a2, a3, a4, a5 = _coords5(lam)
    z21, z22, z23, z31, z32, z33, z34, z41, z42, z43 = z
    return (
        (a4 + a5 - z41) * (a5 - z41)
        + a4 * (z41 - a5)
        + (a3 + a4 + a5 - z31 - z32) * (a4 + a5 - z31 - z32)
        + z32 * (z41 - z31)
        + (a3 + a4 - z42) * (z31 + z32 - z41 - z42)
        + z42 * (z31 - z41)
        + a3 * (z41 + z42 - a4 - a5)
        + (a2 + a3 + a4 + a5 - z21 - z22 - z23) * (a3 + a4 + a5 - z21 - z22 - z23)
        + z23 * (z31 + z32 - z21 - z22)
        + z22 * (z31 - z21)
        + (a2 + a3 + a4 - z33 - z34) * (a4 + z21 + z22 + z23 - z31 - z32 - z33 - z34)
        + z34 * (z21 + z22 + z41 + z42 - 2 * z31 - z32 - z33)
        + z33 * (z21 - z31)
        + (a2 + a3 - z43) * (z31 + z32 + z33 + z34 - a4 - z41 - z42 - z43)
        + z43 * (z31 + z33 - z41 - z42)
        + a2 * (z41 + z42 + z43 - a3 - a4 - a5)
        + a2 * (z21 + z22 + z23 - a3 - a4 - a5)
        + a3 * (z21 + z22 - a4 - a5)
        + a4 * (z21 - a5)
        + (a2 + a3 - z23) * (z31 + z32 + z33 + z34 - (a4 + z21 + z22 + z23))
        + (a3 + a4 - z22) * (z31 + z33 - z21 - z22)
        + (a4 + a5 - z21) * (a5 - z21)
        + (a2 + a3 + a4 - z32 - z34) * (a4 + z41 + z42 + z43 - (z31 + z32 + z33 + z34))
        + (a3 + a4 + a5 - z31 - z33) * (a4 + a5 - z31 - z33)
        + (a2 + a3 + a4 + a5 - z41 - z42 - z43) * (a3 + a4 + a5 - z41 - z42 - z43)
    )


def defect_sos(lam: "Weight | Sequence[int]", z: ZTuple) -> tuple[int, SosDecomp]:
    """The defect rearranged as squares, with its bookkeeping decomposition.

    Agrees with defect_expanded on every integer tuple (the identity is
    checked symbolically and on random samples in the test suite).
    """
    a1, a2, a3, a4, a5 = _coords5(lam)
    z21, z22, z23, z31, z32, z33, z34, z41, z42, z43 = z
    x = (
        a3 + a4 + a5 - (z21 + z22 + z23),
        (z41 + z42 + z43) - (a3 + a4 + a5),
        z32 + z34 - z43 - a4,
        z23 + a4 - z33 - z34,
        a5 - z41,
        z21 - a5,
        z22 - z33,
        z32 - z42,
    )
    y = (z31 + z32 - a4 - a5, a4 + a5 - z31 - z33)
    a = z32 - z33
    value = sum(t * t for t in x) + y[0] * y[0] + y[1] * y[1] - a * a
    return value, SosDecomp(x, y, a)


# -- block enumeration --------------------------------------------------------
#
# Upper bounds are applied at the loop that fixes their variables; lower
# bounds become loop floors as soon as every other variable in them is fixed.


def _block2(a: tuple[int, ...]) -> list[tuple[int, int, int]]:
    a1, a2, a3, a4, a5 = a
    out = []
    rest = a2 + a3 + a4 + a5
    for z21 in range(0, a4 + a5 + 1):
        for z22 in range(0, min(rest - z21, a3 + a4) + 1):
            lo = max(0, a3 + a4 + a5 - a1 - z21 - z22)
            hi = min(rest - z21 - z22, a2 + a3)
            for z23 in range(lo, hi + 1):
                out.append((z21, z22, z23))
    return out


def _block3(a: tuple[int, ...]) -> list[tuple[int, int, int, int]]:
    a1, a2, a3, a4, a5 = a
    out = []
    for z31 in range(0, a3 + a4 + a5 + 1):
        z32_lo = max(0, a4 + a5 - a1 - a2 - z31)
        for z32 in range(z32_lo, min(a3 + a4 + a5 - z31, a2 + a3 + a4) + 1):
            for z33 in range(0, min(a3 + a4 + a5 - z31, a2 + a3 + a4) + 1):
                z34_lo = max(0, a3 + 2 * a4 + a5 - a1 - z31 - z32 - z33)
                z34_hi = min(a2 + a3 + a4 - z33, a2 + a3 + a4 - z32)
                for z34 in range(z34_lo, z34_hi + 1):
                    out.append((z31, z32, z33, z34))
    return out


def _block4(a: tuple[int, ...]) -> list[tuple[int, int, int]]:
    a1, a2, a3, a4, a5 = a
    out = []
    rest = a2 + a3 + a4 + a5
    for z41 in range(max(0, a5 - a1 - a2 - a3), a4 + a5 + 1):
        z42_lo = max(0, a4 + a5 - a1 - a2 - z41)
        for z42 in range(z42_lo, min(rest - z41, a3 + a4) + 1):
            z43_lo = max(0, a3 + a4 + a5 - a1 - z41 - z42)
            z43_hi = min(rest - z41 - z42, a2 + a3)
            for z43 in range(z43_lo, z43_hi + 1):
                out.append((z41, z42, z43))
    return out


def _g2(z2: tuple[int, int, int], z33: int, z34: int, a: tuple[int, ...]) -> int:
    a1, a2, a3, a4, a5 = a
    z21, z22, z23 = z2
    x1 = a3 + a4 + a5 - (z21 + z22 + z23)
    x4 = z23 + a4 - z33 - z34
    x6 = z21 - a5
    x7 = z22 - z33
    return x1 * x1 + x4 * x4 + x6 * x6 + x7 * x7


def _g4(z4: tuple[int, int, int], z32: int, z34: int, a: tuple[int, ...]) -> int:
    a1, a2, a3, a4, a5 = a
    z41, z42, z43 = z4
    x2 = (z41 + z42 + z43) - (a3 + a4 + a5)
    x3 = z32 + z34 - z43 - a4
    x5 = a5 - z41
    x8 = z32 - z42
    return x2 * x2 + x3 * x3 + x5 * x5 + x8 * x8


def _g3(z3: tuple[int, int, int, int], a: tuple[int, ...]) -> int:
    a1, a2, a3, a4, a5 = a
    z31, z32, z33, _ = z3
    y1 = z31 + z32 - a4 - a5
    y2 = a4 + a5 - z31 - z33
    d = z32 - z33
    return y1 * y1 + y2 * y2 - d * d


def iter_domain(lam: "Weight | Sequence[int]") -> Iterator[ZTuple]:
    """Every tuple of the summation domain (the literal block product)."""
    a = _dominant5(lam)
    d3 = _block3(a)
    d4 = _block4(a)
    for z2 in _block2(a):
        for z3 in d3:
            for z4 in d4:
                yield ZTuple(*z2, *z3, *z4)


def domain_size(lam: "Weight | Sequence[int]") -> int:
    a = _dominant5(lam)
    return len(_block2(a)) * len(_block3(a)) * len(_block4(a))


def _hists(
    a: tuple[int, ...], d3: list[tuple[int, int, int, int]]
) -> tuple[dict, dict, list, list]:
    d2, d4 = _block2(a), _block4(a)
    if not d2 or not d4:
        return {}, {}, d2, d4
    h2: dict[tuple[int, int], dict[int, int]] = {}
    for pair in {(z33, z34) for _, _, z33, z34 in d3}:
        hist: dict[int, int] = {}
        for z2 in d2:
            val = _g2(z2, pair[0], pair[1], a)
            hist[val] = hist.get(val, 0) + 1
        h2[pair] = hist
    h4: dict[tuple[int, int], dict[int, int]] = {}
    for pair in {(z32, z34) for _, z32, _, z34 in d3}:
        hist = {}
        for z4 in d4:
            val = _g4(z4, pair[0], pair[1], a)
            hist[val] = hist.get(val, 0) + 1
        h4[pair] = hist
    return h2, h4, d2, d4


def count_defect_zeros(lam: "Weight | Sequence[int]") -> int:
    """Exact number of domain tuples with defect 0.

    This is the constant term of the monomial's self-pairing at v^-1 = 0.
    """
    a = _dominant5(lam)
    d3 = _block3(a)
    h2, h4, d2, d4 = _hists(a, d3)
    if not d2 or not d4:
        return 0
    total = 0
    for z3 in d3:
        target = -_g3(z3, a)
        if target < 0:
            continue
        hist2 = h2[(z3[2], z3[3])]
        hist4 = h4[(z3[1], z3[3])]
        for s in range(target + 1):
            c2 = hist2.get(s)
            if c2:
                total += c2 * hist4.get(target - s, 0)
    return total


def min_defect(lam: "Weight | Sequence[int]") -> int | None:
    """Exact minimum of the defect over the whole domain (None when empty).

    The domain is the product of the three blocks and the defect is
    g2 + g3 + g4 with the cross terms fixed by the z3-block alone, so the
    minimum over all tuples is the minimum over z3 of g3 plus the per-block
    minima. This inspects every tuple's value without enumerating them.
    """
    a = _dominant5(lam)
    d3 = _block3(a)
    h2, h4, d2, d4 = _hists(a, d3)
    if not d2 or not d4 or not d3:
        return None
    min2 = {pair: min(hist) for pair, hist in h2.items()}
    min4 = {pair: min(hist) for pair, hist in h4.items()}
    return min(
        _g3(z3, a) + min2[(z3[2], z3[3])] + min4[(z3[1], z3[3])] for z3 in d3
    )


def enumerate_defect_zeros(lam: "Weight | Sequence[int]") -> list[ZTuple]:
    """The defect's zero set over the domain, sorted."""
    a = _dominant5(lam)
    d3 = _block3(a)
    h2, h4, d2, d4 = _hists(a, d3)
    if not d2 or not d4:
        return []
    targets = [(z3, -_g3(z3, a)) for z3 in d3]
    max_target = max((t for _, t in targets), default=-1)
    if max_target < 0:
        return []
    by2: dict[tuple[int, int], dict[int, list]] = {}
    for pair in h2:
        groups: dict[int, list] = {}
        for z2 in d2:
            val = _g2(z2, pair[0], pair[1], a)
            if val <= max_target:
                groups.setdefault(val, []).append(z2)
        by2[pair] = groups
    by4: dict[tuple[int, int], dict[int, list]] = {}
    for pair in h4:
        groups = {}
        for z4 in d4:
            val = _g4(z4, pair[0], pair[1], a)
            if val <= max_target:
                groups.setdefault(val, []).append(z4)
        by4[pair] = groups
    out: list[ZTuple] = []
    for z3, target in targets:
        if target < 0:
            continue
        g2s = by2[(z3[2], z3[3])]
        g4s = by4[(z3[1], z3[3])]
        for s in range(target + 1):
            for z2 in g2s.get(s, ()):
                for z4 in g4s.get(target - s, ()):
                    out.append(ZTuple(*z2, *z3, *z4))
    out.sort()
    return out


def defect_zero_family(lam: "Weight | Sequence[int]") -> list[ZTuple]:
    """The zero set through its two-parameter description, sorted.

    Setting every x_i to a/4 and every y_j to a/2 solves defect = 0; with
    a = z32 - z33 this pins the other eight coordinates:

        z21 = a/4 + a5          z31 = a/2 + a4 + a5 - z32
        z22 = a/4 + z33         z34 = a3 + 2*a4 - a - 2*z33
        z23 = a3 + a4 - 3a/4 - z33
        z41 = a5 - a/4          z42 = z32 - a/4
        z43 = a3 + a4 - 5a/4 + z32 - 2*z33

    Integrality forces a = 0 (mod 4); the surviving tuples are exactly the
    in-domain assemblies with all coordinates nonnegative.
    """
    a1, a2, a3, a4, a5 = _dominant5(lam)
    bound = a2 + a3 + a4
    out: list[ZTuple] = []
    for z32 in range(0, bound + 1):
        for z33 in range(0, bound + 1):
            diff = z32 - z33
            if diff % 4:
                continue
            q = diff // 4
            z = ZTuple(
                z21=q + a5,
                z22=q + z33,
                z23=a3 + a4 - 3 * q - z33,
                z31=2 * q + a4 + a5 - z32,
                z32=z32,
                z33=z33,
                z34=a3 + 2 * a4 - 4 * q - 2 * z33,
                z41=a5 - q,
                z42=z32 - q,
                z43=a3 + a4 - 5 * q + z32 - 2 * z33,
            )
            if all(c >= 0 for c in z) and in_domain(lam, z):
                out.append(z)
    out.sort()
    return out


def tight_conditions(lam: "Weight | Sequence[int]") -> bool:
    """The eight zero-pattern conditions equivalent to tightness in type A5."""
    a1, a2, a3, a4, a5 = _dominant5(lam)
    return (
        (a1 == 0 and a2 == 0)
        or (a1 == 0 and a4 == 0)
        or (a2 == 0 and a3 == 0)
        or (a2 == 0 and a5 == 0)
        or (a3 == 0 and a4 == 0)
        or (a4 == 0 and a5 == 0)
        or (a2 == 0 and a3 == 1)
        or (a4 == 0 and a3 == 1)
    )


def classify(lam: "Weight | Sequence[int]", zero_set_cap: int = 10_000) -> A5Report:
    """Closed-form classification of the canonical monomial of a dominant weight.

    Cross-checks the zero count against the eight-condition test; the zero
    set is attached only when its size stays within zero_set_cap.
    """
    coords = _dominant5(lam)
    weight = Weight(coords)
    count = count_defect_zeros(coords)
    if count < 1:
        raise TightConditionsMismatch(f"no defect zeros for dominant weight {coords}")
    tight = count == 1
    if tight != tight_conditions(coords):
        raise TightConditionsMismatch(
            f"zero count {count} contradicts the tightness conditions at {coords}"
        )
    verdict = (
        Verdict.tight(SOURCE_CLOSED_FORM)
        if tight
        else Verdict.semitight(count, SOURCE_CLOSED_FORM)
    )
    zero_set = tuple(enumerate_defect_zeros(coords)) if count <= zero_set_cap else None
    return A5Report(weight, domain_size(coords), count, verdict, zero_set)
