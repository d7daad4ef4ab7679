"""Evaluation codes on the curve: construction, MDS verification, duals.

The MDS criterion for C_L(D, Sigma) is checked exhaustively: no size-deg(D)
subset of Sigma may have the same group sum as D.  Subsets are enumerated in
revolving-door order so each step updates the running sum with O(1) group
operations; the hot loop runs on packed-integer Jacobian coordinates.

Point-set search (`sigma_search`) rejection-samples candidate sets and, in
exact mode, screens the subset-sum condition with a meet-in-the-middle pass;
`verify_point_set` is the independent exhaustive re-verification.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

from ellcode import gflinalg as gla
from ellcode.curve import Curve, Divisor, Point, infinity
from ellcode.errors import GuardExceeded, SearchExhausted
from ellcode.fields import FiniteField
from ellcode.rrspace import RRBasis, vanishing_subspace_basis

SUBSET_GUARD = 10 ** 8
CODEWORD_GUARD = 10 ** 7


@dataclass
class LinearCode:
    """A linear code with its generator matrix and construction provenance."""

    field: FiniteField
    n: int
    k: int
    generator: np.ndarray  # (k, n, m)
    designed_distance: int
    provenance: dict = field(default_factory=dict)

    def encode(self, message: np.ndarray) -> np.ndarray:
        """message (k, m) -> codeword (n, m)."""
        return gla.vecmat(self.field, np.asarray(message, dtype=np.int64), self.generator)

    def unencode(self, word: np.ndarray) -> np.ndarray | None:
        """Recover the message of an exact codeword (None if not in the code)."""
        res = gla.solve(self.field, self.generator.transpose(1, 0, 2), np.asarray(word, dtype=np.int64))
        if res is None or not res[1]:
            return None
        return res[0]

    def contains(self, word: np.ndarray) -> bool:
        return self.unencode(word) is not None


# ---------------------------------------------------------------------------
# code construction

def evaluation_matrix(basis: RRBasis, points) -> np.ndarray:
    """Row i = values of basis function i across the points."""
    support = basis.divisor.support()
    for z in points:
        if z in support:
            raise ValueError(f"evaluation point {z!r} lies in the divisor support")
    return basis.eval_matrix(points)


def build_code(E: Curve, D: Divisor, sigma, P: Point | None = None) -> LinearCode:
    """The code of the vanishing subspace of L(D), evaluated on sigma minus
    its base point P (default: the canonically smallest point of sigma)."""
    sigma = list(sigma)
    if len(sigma) <= D.degree:
        raise ValueError("need |sigma| > deg(D) for an injective evaluation")
    if D.support() & set(sigma):
        raise ValueError("sigma must avoid the divisor support")
    if P is None:
        P = min(sigma, key=Point.key)
    if P not in sigma:
        raise ValueError("the base point must belong to sigma")
    sigma_star = [z for z in sigma if z != P]
    basis = vanishing_subspace_basis(E, D, P)
    gen = evaluation_matrix(basis, sigma_star)
    n, k = len(sigma_star), basis.dim
    code = LinearCode(
        field=D.level,
        n=n,
        k=k,
        generator=gen,
        designed_distance=n - D.degree + 1,
        provenance={"divisor": D, "sigma": sigma, "base_point": P, "basis": basis},
    )
    if gla.rank(D.level, gen) != k:
        raise AssertionError("generator rank deficient; evaluation not injective")
    return code


def dual_code(code: LinearCode) -> LinearCode:
    """Null space of the generator under the coordinate-sum bilinear form."""
    ns = gla.nullspace(code.field, code.generator)
    return LinearCode(
        field=code.field,
        n=code.n,
        k=code.n - code.k,
        generator=ns,
        designed_distance=0,
        provenance={"dual_of": code.provenance},
    )


def min_distance_bruteforce(code: LinearCode, guard: int = CODEWORD_GUARD) -> int:
    """Exact minimum weight over all nonzero codewords."""
    if code.k == 0:
        raise ValueError("zero-dimensional code has no minimum distance")
    total = code.field.size ** code.k
    if total > guard:
        raise GuardExceeded(f"{total} codewords exceed the guard {guard}")
    K = code.field
    best = code.n + 1
    chunk = 2048
    msgs = []
    for idx in range(1, total):
        digits = []
        t = idx
        for _ in range(code.k):
            digits.append(K.from_int(t % K.size))
            t //= K.size
        msgs.append(digits)
        if len(msgs) == chunk or idx == total - 1:
            block = np.array(msgs, dtype=np.int64)  # (b, k, m)
            words = gla.conv_matmul(K, block, code.generator)  # (b, n, m)
            weights = (words.any(axis=2)).sum(axis=1)
            best = min(best, int(weights.min()))
            msgs = []
    return best


# ---------------------------------------------------------------------------
# revolving-door subset enumeration

def revolving_door_swaps(n: int, k: int, forward: bool = True):
    """Yield (index_in, index_out) transitions visiting every k-subset of
    range(n) exactly once, starting from {0..k-1}, one swap per step."""
    if k <= 0 or k >= n:
        return
    out_elem = k - 2 if k >= 2 else n - 2
    if forward:
        yield from revolving_door_swaps(n - 1, k, True)
        yield (n - 1, out_elem)
        yield from revolving_door_swaps(n - 1, k - 1, False)
    else:
        yield from revolving_door_swaps(n - 1, k - 1, True)
        yield (out_elem, n - 1)
        yield from revolving_door_swaps(n - 1, k, False)


def _scan_generic(E: Curve, points, d: int, target: Point, early_exit: bool):
    """Tuple-arithmetic subset-sum scan; returns the best witness or None."""
    n = len(points)
    level = points[0].level
    acc = infinity(level)
    member = bytearray(n)
    for i in range(d):
        acc = E.add(acc, points[i])
        member[i] = 1
    best = None

    def record():
        nonlocal best
        idxs = tuple(i for i in range(n) if member[i])
        if best is None or idxs < best:
            best = idxs

    if acc == target:
        record()
        if early_exit:
            return best
    for i_in, i_out in revolving_door_swaps(n, d):
        acc = E.add(acc, points[i_in])
        acc = E.sub(acc, points[i_out])
        member[i_in] = 1
        member[i_out] = 0
        if acc == target:
            record()
            if early_exit:
                return best
    return best


def _scan_packed(E: Curve, points, d: int, target: Point, early_exit: bool):
    """Packed-integer Jacobian scan; same contract as _scan_generic."""
    level = points[0].level
    pk = level.packed
    mul = pk.mul
    norm = pk.norm
    fives = pk.fives
    p = pk.p
    mbytes = pk.m

    def nsub(a, b):
        return norm(a + fives - b)

    def nadd(a, b):
        return norm(a + b)

    a_coeff, _ = E.coeffs_at(level)
    a_pk = pk.pack(a_coeff)

    # difference table diff[i*n+j] = points[i] - points[j], affine packed
    n = len(points)
    negs = [E.neg(P) for P in points]
    diff = [None] * (n * n)
    for i in range(n):
        Pi = points[i]
        for j in range(n):
            if i != j:
                Q = E.add(Pi, negs[j])
                diff[i * n + j] = (pk.pack(Q.x), pk.pack(Q.y))

    if target.inf:
        t_aff = None
    else:
        t_aff = (pk.pack(target.x), pk.pack(target.y))

    def jdouble(X, Y, Z):
        if Z == 0 or Y == 0:
            return (0, 0, 0)
        YY = mul(Y, Y)
        YYYY = mul(YY, YY)
        S = mul(X, YY)
        S = nadd(nadd(S, S), nadd(S, S))
        XX = mul(X, X)
        M = nadd(nadd(XX, XX), XX)
        if a_pk:
            ZZ = mul(Z, Z)
            M = nadd(M, mul(a_pk, mul(ZZ, ZZ)))
        X3 = nsub(mul(M, M), nadd(S, S))
        E8 = nadd(YYYY, YYYY)
        E8 = nadd(E8, E8)
        E8 = nadd(E8, E8)
        Y3 = nsub(mul(M, nsub(S, X3)), E8)
        Z3 = mul(nadd(Y, Y), Z)
        return (X3, Y3, Z3)

    def jadd_affine(X1, Y1, Z1, x2, y2):
        if Z1 == 0:
            return (x2, y2, 1)
        Z1Z1 = mul(Z1, Z1)
        U2 = mul(x2, Z1Z1)
        S2 = mul(y2, mul(Z1, Z1Z1))
        H = nsub(U2, X1)
        R = nsub(S2, Y1)
        if H == 0:
            if R == 0:
                return jdouble(X1, Y1, Z1)
            return (0, 0, 0)
        HH = mul(H, H)
        HHH = mul(H, HH)
        V = mul(X1, HH)
        X3 = nsub(nsub(mul(R, R), HHH), nadd(V, V))
        Y3 = nsub(mul(R, nsub(V, X3)), mul(Y1, HHH))
        Z3 = mul(Z1, H)
        return (X3, Y3, Z3)

    def matches(X, Y, Z):
        if Z == 0:
            return t_aff is None
        if t_aff is None:
            return False
        ZZ = mul(Z, Z)
        if mul(t_aff[0], ZZ) != X:
            return False
        return mul(t_aff[1], mul(ZZ, Z)) == Y

    # initial subset {0..d-1}
    member = bytearray(n)
    state = (0, 0, 0)
    for i in range(d):
        member[i] = 1
        state = jadd_affine(*state, pk.pack(points[i].x), pk.pack(points[i].y))
    best = None

    def record():
        nonlocal best
        idxs = tuple(i for i in range(n) if member[i])
        if best is None or idxs < best:
            best = idxs

    if matches(*state):
        record()
        if early_exit:
            return best
    X, Y, Z = state
    for i_in, i_out in revolving_door_swaps(n, d):
        dx, dy = diff[i_in * n + i_out]
        X, Y, Z = jadd_affine(X, Y, Z, dx, dy)
        member[i_in] = 1
        member[i_out] = 0
        if Z == 0:
            if t_aff is None:
                record()
                if early_exit:
                    return best
        elif t_aff is not None:
            ZZ = mul(Z, Z)
            if mul(t_aff[0], ZZ) == X and mul(t_aff[1], mul(ZZ, Z)) == Y:
                record()
                if early_exit:
                    return best
    return best


def subset_sum_scan(E: Curve, points, d: int, target: Point,
                    early_exit: bool = False, guard: int = SUBSET_GUARD):
    """Find a size-d subset of `points` whose group sum equals `target`.

    Returns the lexicographically smallest index tuple (or the first one
    found when early_exit) or None.  Enumerates all C(n, d) subsets.
    """
    n = len(points)
    if d < 0 or d > n:
        return None
    if d == 0:
        return () if target.inf else None
    if math.comb(n, d) > guard:
        raise GuardExceeded(f"C({n},{d}) exceeds the subset guard {guard}")
    level = points[0].level
    pk = level.packed
    if pk is not None and pk.ok and all(not P.inf for P in points):
        return _scan_packed(E, points, d, target, early_exit)
    return _scan_generic(E, points, d, target, early_exit)


def is_mds(E: Curve, D: Divisor, sigma, guard: int = SUBSET_GUARD):
    """MDS test for the evaluation code of L(D) on sigma.

    Checks that no size-deg(D) subset of sigma has the group sum of D;
    returns (True, None) or (False, witness point list in canonical subset
    order).  Degree 0 passes vacuously.
    """
    d = D.degree
    if d == 0:
        return True, None
    sigma = list(sigma)
    target = E.group_sum(D)
    witness = subset_sum_scan(E, sigma, d, target, early_exit=False, guard=guard)
    if witness is None:
        return True, None
    return False, [sigma[i] for i in witness]


# ---------------------------------------------------------------------------
# point-set search

def _mitm_collision(E: Curve, points, d: int, target: Point) -> bool:
    """Meet-in-the-middle test: does some size-d subset sum to target?

    Mathematically exhaustive (every subset is covered by a half split) but
    organized as dictionary lookups instead of enumeration.
    """
    n = len(points)
    if d < 0 or d > n:
        return False
    if d == 0:
        return target.inf
    half = n // 2
    A, B = points[:half], points[half:]

    def all_sums(side):
        """list of dicts: popcount -> set of point keys, plus key->point map."""
        k = len(side)
        sums = [dict() for _ in range(k + 1)]
        cur = infinity(side[0].level)
        state = 0
        sums[0][cur.key()] = cur
        for g in range(1, 1 << k):
            bit = (g ^ (g >> 1)) ^ ((g - 1) ^ ((g - 1) >> 1))
            idx = bit.bit_length() - 1
            if (g ^ (g >> 1)) & bit:
                cur = E.add(cur, side[idx])
            else:
                cur = E.sub(cur, side[idx])
            state = g ^ (g >> 1)
            sums[state.bit_count()].setdefault(cur.key(), cur)
        return sums

    sums_a = all_sums(A)
    sums_b = all_sums(B)
    for j in range(max(0, d - len(B)), min(d, len(A)) + 1):
        da, db = sums_a[j], sums_b[d - j]
        if not da or not db:
            continue
        small, big = (da, db) if len(da) <= len(db) else (db, da)
        for pt in small.values():
            need = E.sub(target, pt)
            if need.key() in big:
                return True
    return False


def sigma_search(E: Curve, y_family, m: int, level: FiniteField, mode: str,
                 seed: int, max_attempts: int = 40):
    """Sample m distinct points of E(level), disjoint from every family set,
    such that (exact mode) no size-|Y_i| subset shares Y_i's group sum.

    Probabilistic mode skips the subset-sum condition entirely.  Raises
    SearchExhausted when the retry budget runs out, which signals that the
    field is too small for a set of this size.
    """
    if mode not in ("exact", "probabilistic"):
        raise ValueError("mode must be 'exact' or 'probabilistic'")
    y_family = [list(Y) for Y in y_family]
    forbidden = set()
    for Y in y_family:
        for P in Y:
            forbidden.add(E.embed_point(P, level))
    targets = [
        (len(Y), E.group_sum(Divisor.from_points([E.embed_point(P, level) for P in Y], level)))
        for Y in y_family
    ]
    if m <= len(forbidden):
        raise ValueError("need more points than the family union")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        chosen: list[Point] = []
        seen = set(forbidden)
        stall = 0
        while len(chosen) < m and stall < 50 * m + 1000:
            P = E.random_point(level, rng)
            if P in seen:
                stall += 1
                continue
            seen.add(P)
            chosen.append(P)
        if len(chosen) < m:
            raise SearchExhausted(
                "could not sample enough distinct points; the field is too small"
            )
        chosen.sort(key=Point.key)
        if mode == "probabilistic":
            return chosen
        if all(not _mitm_collision(E, chosen, d, t) for d, t in targets):
            return chosen
    raise SearchExhausted(
        f"no admissible point set after {max_attempts} attempts; "
        "the evaluation field is likely too small for this size"
    )


def verify_point_set(E: Curve, y_family, sigma, guard: int = SUBSET_GUARD):
    """Exhaustive re-verification of a searched point set with a fresh
    revolving-door enumerator.  Returns None, or (family_index, witness)."""
    sigma = list(sigma)
    level = sigma[0].level
    if len(set(sigma)) != len(sigma):
        return -1, []
    for i, Y in enumerate(y_family):
        pts = [E.embed_point(P, level) for P in Y]
        if set(pts) & set(sigma):
            return i, []
        target = E.group_sum(Divisor.from_points(pts, level))
        w = subset_sum_scan(E, sigma, len(pts), target, early_exit=True, guard=guard)
        if w is not None:
            return i, [sigma[j] for j in w]
    return None


# ---------------------------------------------------------------------------
# field-size sufficiency arithmetic (supersingular instances)

def _neg_q_geometric(q: int, r: int) -> int:
    """((-q)^r - 1) / (-q - 1), the degree of the index-r support divisor
    in the odd-supersingular case."""
    return ((-q) ** r - 1) // (-q - 1)


def _sqrt_q_geometric_sq(q: int, r: int) -> int:
    s = math.isqrt(q)
    if s * s != q:
        raise ValueError("variant 2 needs square q")
    return ((s ** r - 1) // (s - 1)) ** 2


def support_degree_terms(q: int, N: int, variant: int) -> dict[int, int]:
    """r -> deg of the index-r support divisor, per supersingular variant."""
    from ellcode.fields import is_squarefree, prime_factors

    if N % 2 == 0 or not is_squarefree(N):
        raise ValueError("N must be odd and square-free")
    if variant == 1:
        return {r: _neg_q_geometric(q, r) for r in prime_factors(N)}
    if variant == 2:
        return {r: _sqrt_q_geometric_sq(q, r) for r in prime_factors(N)}
    raise ValueError("variant must be 1 or 2")


def field_size_bound(q: int, N: int, m: int, variant: int):
    """Smallest odd n > N whose field satisfies the sufficiency inequality
    for an exact MDS point set of size m; exact big-integer arithmetic.

    Returns (n_min, rhs): the bound index and the inequality's right side.
    """
    terms = support_degree_terms(q, N, variant)
    deg_bound = 1 + sum(t - 1 for t in terms.values())
    if m <= deg_bound:
        raise ValueError(f"m must exceed the support degree bound {deg_bound}")
    rhs = m + math.comb(m, 2) + sum(
        m * (t - 1) + math.comb(m, t) for t in terms.values()
    )
    if variant == 1:
        rhs -= 1
        cond = lambda n: q ** n > rhs
    else:
        s = math.isqrt(q)
        cond = lambda n: (1 + s ** n) ** 2 > rhs
    n = N + 2 if N % 2 else N + 1
    while not cond(n):
        n += 2
    return n, rhs


def sample_space_lower_bound(q: int, N: int, m: int, variant: int, n: int) -> int:
    """Lower bound on the number of admissible m-tuples over E(k_n)."""
    terms = support_degree_terms(q, N, variant)
    bulk = m + math.comb(m, 2) + sum(
        m * (t - 1) + math.comb(m, t) for t in terms.values()
    )
    if variant == 1:
        group = 1 + q ** n
        return group ** (m - 1) * (group - bulk)
    s = math.isqrt(q)
    group = (1 + s ** n) ** 2
    return (1 + s ** n) ** (2 * (m - 1)) * (group - bulk)
