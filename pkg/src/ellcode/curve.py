"""Short-Weierstrass elliptic curves over F_q towers.

The curve is fixed over its base field k = F_q (q = p^e, p >= 5); points
carry an explicit field-level tag and cross-level arithmetic requires an
explicit embedding step.  Point counts over extensions come from the trace
recurrence; enumeration is exhaustive with a guard.

Canonical point order: affine points ascending by the integer encodings of
(x, y), with the point at infinity sorting last.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass

from ellcode.errors import GuardExceeded
from ellcode.fields import Embedding, FiniteField, embed_field, make_field

ENUM_GUARD = 10 ** 7


@functools.lru_cache(maxsize=None)
def _cached_embedding(p: int, src_deg: int, tgt_deg: int) -> Embedding:
    return embed_field(make_field(p, src_deg), make_field(p, tgt_deg))


@dataclass(frozen=True)
class Point:
    """A point of E over some tower level; `inf` marks the identity."""

    inf: bool
    x: tuple | None
    y: tuple | None
    level: FiniteField

    def key(self):
        if self.inf:
            return (1, 0, 0)
        return (0, self.level.to_int(self.x), self.level.to_int(self.y))

    def __repr__(self):
        if self.inf:
            return "O"
        return f"({self.level.to_int(self.x)},{self.level.to_int(self.y)})"


def infinity(level: FiniteField) -> Point:
    return Point(True, None, None, level)


class Curve:
    """y^2 = x^3 + a x + b over F_q, with the Frobenius trace computed at
    construction by exhaustive count of E(F_q)."""

    def __init__(self, a, b, base: FiniteField):
        if base.p < 5:
            raise ValueError("characteristic must be at least 5")
        a = base.element(a)
        b = base.element(b)
        disc = base.add(
            base.smul(4, base.mul(a, base.mul(a, a))),
            base.smul(27, base.mul(b, b)),
        )
        if disc == base.zero:
            raise ValueError("singular curve: 4a^3 + 27b^2 = 0")
        self.base = base
        self.a = a
        self.b = b
        self.q = base.size
        self._ab_cache: dict[FiniteField, tuple] = {base: (a, b)}
        n1 = len(self.points(base))
        self.t = self.q + 1 - n1

    # -- levels --------------------------------------------------------------

    def level(self, m: int) -> FiniteField:
        """The field k_m = F_{q^m} of the tower."""
        if m < 1:
            raise ValueError("level index must be >= 1")
        return make_field(self.base.p, self.base.degree * m)

    def level_index(self, field: FiniteField) -> int:
        if field.p != self.base.p or field.degree % self.base.degree:
            raise ValueError("field is not a tower level of the base")
        return field.degree // self.base.degree

    def coeffs_at(self, level: FiniteField):
        if level not in self._ab_cache:
            emb = _cached_embedding(self.base.p, self.base.degree, level.degree)
            self._ab_cache[level] = (emb.apply(self.a), emb.apply(self.b))
        return self._ab_cache[level]

    def embed_point(self, P: Point, level: FiniteField) -> Point:
        if P.level == level:
            return P
        if P.inf:
            return infinity(level)
        emb = _cached_embedding(P.level.p, P.level.degree, level.degree)
        return Point(False, emb.apply(P.x), emb.apply(P.y), level)

    # -- predicates ----------------------------------------------------------

    def contains(self, P: Point) -> bool:
        if P.inf:
            return True
        K = P.level
        a, b = self.coeffs_at(K)
        lhs = K.mul(P.y, P.y)
        rhs = K.add(K.mul(P.x, K.mul(P.x, P.x)), K.add(K.mul(a, P.x), b))
        return lhs == rhs

    def point(self, x, y, level: FiniteField | None = None) -> Point:
        K = level if level is not None else self.base
        P = Point(False, K.element(x), K.element(y), K)
        if not self.contains(P):
            raise ValueError(f"{P!r} is not on the curve")
        return P

    # -- group law -----------------------------------------------------------

    def neg(self, P: Point) -> Point:
        if P.inf:
            return P
        return Point(False, P.x, P.level.neg(P.y), P.level)

    def add(self, P: Point, Q: Point) -> Point:
        if P.inf:
            return Q
        if Q.inf:
            return P
        if P.level != Q.level:
            raise ValueError("points at different levels; embed first")
        K = P.level
        if P.x == Q.x:
            if K.add(P.y, Q.y) == K.zero:
                return infinity(K)
            # doubling
            a, _ = self.coeffs_at(K)
            num = K.add(K.smul(3, K.mul(P.x, P.x)), a)
            lam = K.div(num, K.smul(2, P.y))
        else:
            lam = K.div(K.sub(Q.y, P.y), K.sub(Q.x, P.x))
        x3 = K.sub(K.sub(K.mul(lam, lam), P.x), Q.x)
        y3 = K.sub(K.mul(lam, K.sub(P.x, x3)), P.y)
        return Point(False, x3, y3, K)

    def sub(self, P: Point, Q: Point) -> Point:
        return self.add(P, self.neg(Q))

    def smul(self, n: int, P: Point) -> Point:
        if n < 0:
            return self.smul(-n, self.neg(P))
        R = infinity(P.level)
        Q = P
        while n:
            if n & 1:
                R = self.add(R, Q)
            Q = self.add(Q, Q)
            n >>= 1
        return R

    def frobenius(self, P: Point, i: int = 1) -> Point:
        """The q-power endomorphism applied i times."""
        if P.inf:
            return P
        K = P.level
        return Point(False, K.frobenius(P.x, self.q, i), K.frobenius(P.y, self.q, i), K)

    # -- counting and enumeration ---------------------------------------------

    def trace_power_sum(self, m: int) -> int:
        """s_m = alpha^m + beta^m via s_m = t s_{m-1} - q s_{m-2}."""
        s0, s1 = 2, self.t
        if m == 0:
            return s0
        for _ in range(m - 1):
            s0, s1 = s1, self.t * s1 - self.q * s0
        return s1

    def count_points(self, m: int) -> int:
        """|E(k_m)| = q^m + 1 - s_m."""
        if m < 1:
            raise ValueError("extension index must be >= 1")
        return self.q ** m + 1 - self.trace_power_sum(m)

    def points(self, level: FiniteField, guard: int = ENUM_GUARD) -> list[Point]:
        """All points of E over the level, canonically ordered, O last."""
        K = level
        if K.size > guard:
            raise GuardExceeded(f"field size {K.size} exceeds enumeration guard {guard}")
        a, b = self.coeffs_at(K)
        out = []
        if K.size <= 2 * 10 ** 6:
            # square table: y^2 -> the pair of roots
            table: dict[tuple, list] = {}
            for n in range(K.size):
                y = K.from_int(n)
                table.setdefault(K.mul(y, y), []).append(y)
            for n in range(K.size):
                x = K.from_int(n)
                rhs = K.add(K.mul(x, K.mul(x, x)), K.add(K.mul(a, x), b))
                for y in table.get(rhs, ()):
                    out.append(Point(False, x, y, K))
        else:
            for n in range(K.size):
                x = K.from_int(n)
                rhs = K.add(K.mul(x, K.mul(x, x)), K.add(K.mul(a, x), b))
                r = K.sqrt(rhs)
                if r is None:
                    continue
                out.append(Point(False, x, r, K))
                if r != K.zero:
                    out.append(Point(False, x, K.neg(r), K))
        out.sort(key=Point.key)
        out.append(infinity(K))
        return out

    def random_point(self, level: FiniteField, rng: random.Random) -> Point:
        """Uniform-ish affine point: random x accepted when x^3+ax+b is a
        square, canonical root, then a random sign."""
        K = level
        a, b = self.coeffs_at(K)
        while True:
            x = K.random_element(rng)
            rhs = K.add(K.mul(x, K.mul(x, x)), K.add(K.mul(a, x), b))
            r = K.sqrt(rhs)
            if r is None:
                continue
            if r != K.zero and rng.randrange(2):
                r = K.neg(r)
            return Point(False, x, r, K)

    def group_sum(self, D: "Divisor") -> Point:
        total = infinity(D.level)
        for P, mult in D.items():
            if not P.inf:
                total = self.add(total, self.smul(mult, P))
        return total

    def __repr__(self):
        return (
            f"Curve(y^2 = x^3 + {self.base.to_int(self.a)}x + {self.base.to_int(self.b)}"
            f" over F_{self.q}, t={self.t})"
        )


class Divisor:
    """Effective divisor: finite map Point -> positive multiplicity, at one level."""

    def __init__(self, entries, level: FiniteField):
        norm: dict[Point, int] = {}
        for P, mult in entries.items() if isinstance(entries, dict) else entries:
            mult = int(mult)
            if mult < 0:
                raise ValueError("effective divisors only")
            if mult == 0:
                continue
            if P.level != level:
                raise ValueError("divisor points must share the divisor's level")
            norm[P] = norm.get(P, 0) + mult
        self._entries = dict(sorted(norm.items(), key=lambda kv: kv[0].key()))
        self.level = level

    @classmethod
    def from_points(cls, points, level: FiniteField) -> "Divisor":
        return cls([(P, 1) for P in points], level)

    def items(self):
        return self._entries.items()

    def points(self):
        return list(self._entries.keys())

    def multiplicity(self, P: Point) -> int:
        return self._entries.get(P, 0)

    @property
    def degree(self) -> int:
        return sum(self._entries.values())

    def support(self) -> set[Point]:
        return set(self._entries.keys())

    def affine_sequence(self) -> list[Point]:
        """Affine support points repeated by multiplicity, canonical order."""
        out = []
        for P, mult in self._entries.items():
            if not P.inf:
                out.extend([P] * mult)
        return out

    def __add__(self, other: "Divisor") -> "Divisor":
        if self.level != other.level:
            raise ValueError("divisors at different levels")
        merged = dict(self._entries)
        for P, m in other.items():
            merged[P] = merged.get(P, 0) + m
        return Divisor(merged, self.level)

    def __eq__(self, other):
        return (
            isinstance(other, Divisor)
            and self.level == other.level
            and self._entries == other._entries
        )

    def __len__(self):
        return len(self._entries)

    def __repr__(self):
        inside = " + ".join(
            (f"{m}*" if m > 1 else "") + repr(P) for P, m in self._entries.items()
        )
        return f"Divisor({inside or '0'})"
