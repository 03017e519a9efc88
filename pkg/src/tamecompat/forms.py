"""Coordinates on exterior powers.

The basis of the k-th exterior power of an n-dimensional space is indexed by
strictly increasing index tuples in lexicographic order. For n = 4, k = 2 the
order is 12, 13, 14, 23, 24, 34. Indices are 0-based internally and printed
1-based. ``e^{ij}(e_i, e_j) = 1`` (determinant convention), so the pairing of
dual bases is the Kronecker delta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Sequence

from .exactla import Q, Vector, dot, vec


@lru_cache(maxsize=None)
def index_tuples(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(n), k))


@lru_cache(maxsize=None)
def index_position(n: int, k: int) -> dict[tuple[int, ...], int]:
    return {t: i for i, t in enumerate(index_tuples(n, k))}


def label(t: Sequence[int]) -> str:
    return "".join(str(i + 1) for i in t)


def parse_label(s: str) -> tuple[int, ...]:
    """``"12"`` -> ``(0, 1)``. Only single-digit indices are supported."""
    t = tuple(int(c) - 1 for c in s)
    if any(i < 0 for i in t) or list(t) != sorted(set(t)):
        raise ValueError(f"bad index label {s!r}")
    return t


def sort_sign(seq: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the permutation sorting ``seq`` (0 on repeats) and the sorted tuple."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, ()
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign, tuple(sorted(seq))


def wedge_coords(n: int, a: Sequence, ka: int, b: Sequence, kb: int) -> Vector:
    """Coordinates of ``a ∧ b`` for a of degree ka and b of degree kb."""
    out = [Fraction(0)] * len(index_tuples(n, ka + kb))
    pos = index_position(n, ka + kb)
    for ca, ta in zip(a, index_tuples(n, ka)):
        if ca == 0:
            continue
        for cb, tb in zip(b, index_tuples(n, kb)):
            if cb == 0:
                continue
            s, t = sort_sign(ta + tb)
            if s:
                out[pos[t]] += s * ca * cb
    return tuple(out)


@dataclass(frozen=True)
class _Multi:
    n: int
    degree: int
    coords: Vector

    def __post_init__(self):
        coords = vec(self.coords)
        if len(coords) != len(index_tuples(self.n, self.degree)):
            raise ValueError(
                f"degree-{self.degree} element on dimension {self.n} needs "
                f"{len(index_tuples(self.n, self.degree))} coordinates, got {len(coords)}"
            )
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[str, object]):
        """``KForm.from_terms(4, {"12": 1, "34": 1})`` is e^{12} + e^{34}."""
        keys = [parse_label(k) for k in terms]
        degrees = {len(k) for k in keys}
        if len(degrees) != 1:
            raise ValueError("all terms must have the same degree")
        k = degrees.pop()
        pos = index_position(n, k)
        coords = [Fraction(0)] * len(pos)
        for t, c in zip(keys, terms.values()):
            coords[pos[t]] += Q(c)
        return cls(n, k, tuple(coords))

    @classmethod
    def basis(cls, n: int, lbl: str):
        return cls.from_terms(n, {lbl: 1})

    def _same(self, other) -> None:
        if type(other) is not type(self) or (other.n, other.degree) != (self.n, self.degree):
            raise TypeError(f"cannot combine {self!r} and {other!r}")

    def __add__(self, other):
        self._same(other)
        return type(self)(self.n, self.degree, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._same(other)
        return type(self)(self.n, self.degree, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return type(self)(self.n, self.degree, tuple(-a for a in self.coords))

    def __mul__(self, c):
        c = Q(c)
        return type(self)(self.n, self.degree, tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def terms(self) -> dict[str, Fraction]:
        return {label(t): c for t, c in zip(index_tuples(self.n, self.degree), self.coords) if c != 0}

    def __repr__(self) -> str:
        sym = "e^" if isinstance(self, KForm) else "e_"
        body = " + ".join(f"{c}*{sym}{{{k}}}" for k, c in self.terms().items()).replace("+ -", "- ") or "0"
        return f"{type(self).__name__}({body})"


class KForm(_Multi):
    """Exterior form in coordinates of the dual basis."""

    def wedge(self, other: "KForm") -> "KForm":
        if not isinstance(other, KForm) or other.n != self.n:
            raise TypeError("wedge of forms on different spaces")
        return KForm(self.n, self.degree + other.degree,
                     wedge_coords(self.n, self.coords, self.degree, other.coords, other.degree))

    def evaluate(self, *vectors: Sequence) -> Fraction:
        """Value on ``degree`` vectors (determinant convention)."""
        if len(vectors) != self.degree:
            raise ValueError("wrong number of arguments")
        total = Fraction(0)
        vs = [vec(v) for v in vectors]
        for c, t in zip(self.coords, index_tuples(self.n, self.degree)):
            if c:
                total += c * _det([[v[i] for v in vs] for i in t])
        return total


class KVector(_Multi):
    """Multivector in coordinates of the basis ``e_I``."""

    def wedge(self, other: "KVector") -> "KVector":
        if not isinstance(other, KVector) or other.n != self.n:
            raise TypeError("wedge of multivectors on different spaces")
        return KVector(self.n, self.degree + other.degree,
                       wedge_coords(self.n, self.coords, self.degree, other.coords, other.degree))


def _det(rows: list[list[Fraction]]) -> Fraction:
    if not rows:
        return Fraction(1)
    total = Fraction(0)
    for j, c in enumerate(rows[0]):
        if c:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * c * _det(minor)
    return total


def pairing(u: KVector, a: KForm) -> Fraction:
    """Natural pairing of k-vectors and k-forms: ``a(u)``."""
    if not isinstance(u, KVector) or not isinstance(a, KForm):
        raise TypeError("pairing takes a KVector and a KForm")
    if (u.n, u.degree) != (a.n, a.degree):
        raise ValueError(f"degree mismatch: vector of degree {u.degree}, form of degree {a.degree}")
    return dot(u.coords, a.coords)
