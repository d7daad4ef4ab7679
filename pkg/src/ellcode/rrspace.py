"""Riemann-Roch spaces L(D) on an elliptic curve, with explicit bases.

A function is stored as a polynomial numerator over the monomial basis of
L(M(O)) divided by a product of lines (chords, tangents, verticals) with
signed exponents; the line product comes from a deterministic chord-tangent
reduction of the divisor in canonical point order.  Evaluation is exact;
at the point at infinity it uses pole orders and leading coefficients in
the normalized uniformizer (x ~ s^-2, y ~ s^-3, both with coefficient 1).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from ellcode import gflinalg as gla
from ellcode.curve import Curve, Divisor, Point, infinity
from ellcode.errors import IndeterminateEvaluation, PoleEvaluation
from ellcode.fields import FiniteField


def monomial_exponents(M: int) -> list[tuple[int, int]]:
    """Exponent pairs (i, j) of the monomials x^i y^j spanning L(M(O)):
    j <= 1 and 2i + 3j <= M, ordered by pole order at O."""
    if M < 1:
        raise ValueError("pole bound must be >= 1")
    out = [(0, 0)]
    for d in range(2, M + 1):
        out.append((d // 2, 0) if d % 2 == 0 else ((d - 3) // 2, 1))
    return out


def eval_monomials(K: FiniteField, M: int, x, y) -> list:
    """Values of the L(M(O)) monomials at an affine point."""
    imax = M // 2
    xp = [K.one]
    for _ in range(imax):
        xp.append(K.mul(xp[-1], x))
    out = []
    for i, j in monomial_exponents(M):
        v = xp[i]
        if j:
            v = K.mul(v, y)
        out.append(v)
    return out


def line_value(K: FiniteField, line, x, y):
    u, v, w = line
    return K.add(K.add(K.mul(u, x), K.mul(v, y)), w)


def line_order_at_infinity(K: FiniteField, line):
    """(pole order, leading coefficient) of u x + v y + w at O."""
    u, v, w = line
    if v != K.zero:
        return -3, v
    if u != K.zero:
        return -2, u
    if w == K.zero:
        raise ValueError("zero line")
    return 0, w


@dataclass(frozen=True)
class RationalFunction:
    """numerator (coefficients over the L(M(O)) monomials) / product of lines."""

    level: FiniteField
    pole_bound: int
    numerator: tuple  # tuple of element tuples
    lines: tuple  # ((u, v, w), exponent) pairs

    def value(self, z: Point):
        K = self.level
        if z.level != K:
            raise ValueError("point level differs from function level")
        if z.inf:
            return self._value_at_infinity()
        mono = eval_monomials(K, self.pole_bound, z.x, z.y)
        num = K.zero
        for c, mv in zip(self.numerator, mono):
            if c != K.zero:
                num = K.add(num, K.mul(c, mv))
        top, bot = K.one, K.one
        for line, e in self.lines:
            b = line_value(K, line, z.x, z.y)
            if b == K.zero:
                raise IndeterminateEvaluation(f"line vanishes at {z!r}")
            if e > 0:
                top = K.mul(top, K.pow(b, e))
            else:
                bot = K.mul(bot, K.pow(b, -e))
        return K.div(K.mul(num, bot), top)

    def _value_at_infinity(self):
        K = self.level
        exps = monomial_exponents(self.pole_bound)
        num_ord, num_lead = None, None
        for (i, j), c in zip(exps, self.numerator):
            if c != K.zero:
                num_ord, num_lead = -(2 * i + 3 * j), c  # orders ascend, keep last
        if num_ord is None:
            return K.zero
        den_ord, den_lead = 0, K.one
        for line, e in self.lines:
            o, lead = line_order_at_infinity(K, line)
            den_ord += e * o
            den_lead = K.mul(den_lead, K.pow(lead, e))
        order = num_ord - den_ord
        if order > 0:
            return K.zero
        if order == 0:
            return K.div(num_lead, den_lead)
        raise PoleEvaluation("function has a pole at O")


def _chord(E: Curve, K: FiniteField, A: Point, P: Point):
    """Line through A and P (tangent if equal); both affine, P != -A."""
    a, _ = E.coeffs_at(K)
    if A.x == P.x and A.y == P.y:
        lam = K.div(K.add(K.smul(3, K.mul(A.x, A.x)), a), K.smul(2, A.y))
    else:
        lam = K.div(K.sub(P.y, A.y), K.sub(P.x, A.x))
    w = K.sub(K.mul(lam, A.x), A.y)
    return (K.neg(lam), K.one, w)


def reduce_to_principal(E: Curve, D: Divisor):
    """Chord-tangent reduction of an effective divisor, in canonical order.

    Returns (lines, Q) such that the line product h satisfies
    div(h) = D - deg(D)(O) when Q is the identity, and otherwise
    div(h) = D + (Q) - (deg(D)+1)(O) with Q the negated divisor sum.
    """
    K = D.level
    lines: list = []
    A = infinity(K)
    for P in D.affine_sequence():
        if A.inf:
            A = P
            continue
        if A.x == P.x and K.add(A.y, P.y) == K.zero:
            lines.append(((K.one, K.zero, K.neg(A.x)), 1))
            A = infinity(K)
            continue
        ln = _chord(E, K, A, P)
        A2 = E.add(A, P)
        lines.append((ln, 1))
        lines.append(((K.one, K.zero, K.neg(A2.x)), -1))
        A = A2
    if A.inf:
        return tuple(lines), infinity(K)
    lines.append(((K.one, K.zero, K.neg(A.x)), 1))
    return tuple(lines), E.neg(A)


class RRBasis:
    """Basis of L(D) (or of its subspace vanishing at a base point).

    All functions share one line-product denominator; the matrix `coeff`
    (functions x monomials x field degree) holds their numerators.
    """

    def __init__(self, E: Curve, divisor: Divisor, pole_bound: int, lines, coeff,
                 constraint_point=None, base_point=None):
        self.curve = E
        self.divisor = divisor
        self.level = divisor.level
        self.pole_bound = pole_bound
        self.lines = lines
        self.coeff = coeff % divisor.level.p
        self.constraint_point = constraint_point
        self.base_point = base_point
        self._one_coords = None

    @property
    def dim(self) -> int:
        return self.coeff.shape[0]

    def function(self, i: int) -> RationalFunction:
        return RationalFunction(
            self.level, self.pole_bound,
            tuple(tuple(int(v) for v in row) for row in self.coeff[i]),
            self.lines,
        )

    def functions(self) -> list[RationalFunction]:
        return [self.function(i) for i in range(self.dim)]

    def combo(self, coeffs) -> RationalFunction:
        """The function with the given coordinates in this basis."""
        vec = np.asarray(coeffs, dtype=np.int64)
        num = gla.vecmat(self.level, vec, self.coeff)
        return RationalFunction(
            self.level, self.pole_bound,
            tuple(tuple(int(v) for v in row) for row in num),
            self.lines,
        )

    def values_at(self, z: Point) -> np.ndarray:
        """Values of every basis function at z, as a (dim, m) array."""
        K = self.level
        if z.inf:
            vals = [self.function(i).value(z) for i in range(self.dim)]
            return np.array(vals, dtype=np.int64)
        mono = np.array(eval_monomials(K, self.pole_bound, z.x, z.y), dtype=np.int64)
        nums = gla.conv_matmul(K, self.coeff, mono[:, None, :])[:, 0, :]
        top, bot = K.one, K.one
        for line, e in self.lines:
            b = line_value(K, line, z.x, z.y)
            if b == K.zero:
                raise IndeterminateEvaluation(f"line vanishes at {z!r}")
            if e > 0:
                top = K.mul(top, K.pow(b, e))
            else:
                bot = K.mul(bot, K.pow(b, -e))
        return gla.scale(K, nums, K.div(bot, top))

    def eval_matrix(self, points) -> np.ndarray:
        """(dim, n_points, m) matrix of basis values across the points."""
        cols = [self.values_at(z) for z in points]
        return np.stack(cols, axis=1)

    def constant_one(self) -> np.ndarray:
        """Coordinates of the constant function 1 in this basis."""
        if self.base_point is not None:
            raise ValueError("constants do not lie in a vanishing subspace")
        if self._one_coords is None:
            K = self.level
            rng = random.Random(0xC0157A7 ^ self.divisor.degree)
            need = self.dim
            rows, used = [], set()
            attempts = 0
            sol = None
            while True:
                attempts += 1
                if attempts > 200 * need:
                    raise RuntimeError("could not interpolate the constant function")
                z = self.curve.random_point(K, rng)
                if z in self.divisor.support() or z in used:
                    continue
                try:
                    rows.append(self.values_at(z))
                except IndeterminateEvaluation:
                    continue
                used.add(z)
                if len(rows) < need + 2:
                    continue
                A = np.stack(rows, axis=0)  # (samples, dim, m)
                ones = gla.zeros(K, A.shape[0])
                ones[:] = np.array(K.one, dtype=np.int64)
                res = gla.solve(K, A, ones)
                if res is not None and res[1]:
                    sol = res[0]
                    break
                rows = rows[: need // 2]
            self._one_coords = sol
        return self._one_coords


def basis_at_infinity(E: Curve, d: int, level: FiniteField) -> RRBasis:
    """Basis of L(d(O)): the monomials themselves."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    D = Divisor({infinity(level): d}, level)
    return RRBasis(E, D, d, (), gla.eye(level, d))


def function_space_basis(E: Curve, D: Divisor) -> RRBasis:
    """Basis of L(D) for an effective divisor of degree >= 1."""
    d = D.degree
    if d < 1:
        raise ValueError("divisor degree must be >= 1")
    K = D.level
    lines, Q = reduce_to_principal(E, D)
    if Q.inf:
        return RRBasis(E, D, d, lines, gla.eye(K, d), constraint_point=None)
    M = d + 1
    mono_at_q = np.array(eval_monomials(K, M, Q.x, Q.y), dtype=np.int64)
    ns = gla.nullspace(K, mono_at_q[None, :, :])
    return RRBasis(E, D, M, lines, ns, constraint_point=Q)


def vanishing_subspace_basis(E: Curve, D: Divisor, P: Point) -> RRBasis:
    """Basis of the subspace of L(D) vanishing at P (dimension deg D - 1)."""
    if D.degree < 2:
        raise ValueError("divisor degree must be >= 2")
    if P in D.support():
        raise ValueError("base point lies in the divisor support")
    base = function_space_basis(E, D)
    row = base.values_at(P)  # (dim, m)
    ns = gla.nullspace(base.level, row[None, :, :])
    coeff = gla.conv_matmul(base.level, ns, base.coeff)
    return RRBasis(E, D, base.pole_bound, base.lines, coeff,
                   constraint_point=base.constraint_point, base_point=P)
