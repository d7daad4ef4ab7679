"""Trace maps of Frobenius, their kernels, and the support divisors they cut out.

For a tower index r, the trace map sends P to P + F(P) + ... + F^(r-1)(P),
where F is the q-power endomorphism.  Its kernel is a finite reduced
subgroup of E(k_r); unions of prime-index kernels give the support sets and
divisors the evaluation codes are built from.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ellcode.curve import Curve, Divisor, Point, infinity
from ellcode.errors import GuardExceeded
from ellcode.fields import FiniteField, is_squarefree, prime_factors


@dataclass(frozen=True)
class KernelData:
    """Kernel of a trace-type endomorphism, embedded at a working level."""

    index: int
    points: tuple
    level: FiniteField

    @property
    def order(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class SupportSet:
    """Union of prime-index trace kernels with its reduced divisor."""

    index: int
    points: tuple
    divisor: Divisor
    level: FiniteField


def trace_map(E: Curve, P: Point, m: int, step: int = 1) -> Point:
    """Sum of F^(i*step)(P) for i in [0, m); step=1 gives the plain trace."""
    if m < 1 or step < 1:
        raise ValueError("trace index and step must be >= 1")
    acc = P
    cur = P
    for _ in range(m - 1):
        cur = E.frobenius(cur, step)
        acc = E.add(acc, cur)
    return acc


def trace_kernel(E: Curve, r: int, level: FiniteField, guard: int = 10 ** 7) -> KernelData:
    """Kernel of the index-r trace map, found by exhaustive filter of E(k_r)
    and embedded into the working level."""
    kr = E.level(r)
    if kr.size > guard:
        raise GuardExceeded(f"|k_{r}| = {kr.size} exceeds the enumeration guard")
    if level.degree % kr.degree:
        raise ValueError("working level must contain k_r")
    kernel = [P for P in E.points(kr) if trace_map(E, P, r).inf]
    expected, rem = divmod(E.count_points(r), E.count_points(1))
    if rem or len(kernel) != expected:
        raise AssertionError(
            f"kernel order {len(kernel)} != |E(k_{r})|/|E(k)| = {expected}; "
            "trace map implementation bug"
        )
    embedded = sorted((E.embed_point(P, level) for P in kernel), key=Point.key)
    return KernelData(r, tuple(embedded), level)


def product_trace_map(E: Curve, P: Point, m: int) -> Point:
    """Composition of the prime-index trace maps over the primes dividing m."""
    if not is_squarefree(m):
        raise ValueError("index must be square-free")
    out = P
    for r in prime_factors(m):
        out = trace_map(E, out, r)
    return out


def product_kernel(E: Curve, m: int, level: FiniteField, guard: int = 10 ** 7) -> KernelData:
    """Kernel of the product map: the internal direct sum of the prime-index
    kernels, realized by summing one element from each."""
    if not is_squarefree(m):
        raise ValueError("index must be square-free")
    primes = prime_factors(m)
    if not primes:
        return KernelData(1, (infinity(level),), level)
    partial = [infinity(level)]
    for r in primes:
        G = trace_kernel(E, r, level, guard)
        partial = [E.add(s, g) for s in partial for g in G.points]
    expected = 1
    for r in primes:
        expected *= trace_kernel(E, r, level, guard).order
    pts = sorted(set(partial), key=Point.key)
    if len(pts) != expected:
        raise AssertionError("direct-sum kernel order mismatch; kernels not independent")
    return KernelData(m, tuple(pts), level)


def support_set(E: Curve, m: int, level: FiniteField, guard: int = 10 ** 7) -> SupportSet:
    """The deduplicated union of prime-index kernels with its divisor."""
    if not is_squarefree(m):
        raise ValueError("index must be square-free")
    primes = prime_factors(m)
    pts = {infinity(level)}
    total = 1
    for r in primes:
        G = trace_kernel(E, r, level, guard)
        total += G.order - 1
        pts.update(G.points)
    if len(pts) != total:
        raise AssertionError("prime kernels intersect beyond the identity")
    spts = tuple(sorted(pts, key=Point.key))
    return SupportSet(m, spts, Divisor.from_points(spts, level), level)


def kernel_orders_coprime_to_char(E: Curve, m: int) -> bool:
    """True when every prime-index kernel order divides out the characteristic;
    the projector construction requires this."""
    if not is_squarefree(m):
        raise ValueError("index must be square-free")
    p = E.base.p
    for r in prime_factors(m):
        order, rem = divmod(E.count_points(r), E.count_points(1))
        if rem:
            raise AssertionError("kernel order must divide |E(k_r)| exactly")
        if gcd(order, p) != 1:
            return False
    return True


def product_degree(E: Curve, m: int) -> int:
    """Degree of the product map = product of the prime-index kernel orders."""
    out = 1
    for r in prime_factors(m):
        out *= E.count_points(r) // E.count_points(1)
    return out
