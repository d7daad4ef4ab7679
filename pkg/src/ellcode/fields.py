"""Exact arithmetic in F_p and its extensions, with deterministic tower embeddings.

A field F_{p^d} is represented by the lexicographically smallest monic
irreducible modulus of degree d over F_p (scan order: constant term
fastest-varying), so two runs always build identical fields.  Elements are
dense coefficient tuples over F_p, canonically reduced; the canonical order
on elements is by the integer encoding sum(c_i * p^i).

Embeddings between tower levels send the source generator to the
lexicographically smallest root of the source modulus in the target.
Only direct embeddings are constructed; the pipeline never composes them.
"""

from __future__ import annotations

import functools
import random

import numpy as np


def is_prime(n: int) -> bool:
    """Trial-division primality check, adequate for desk-scale p."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        if n % d == 0:
            n //= d
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (coefficient lists, low degree first, no
# trailing zeros; [] is the zero polynomial)

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    return _ptrim(out)


def _psub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return _ptrim(out)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _ptrim([v % p for v in out])


def _pmod(a, f, p):
    # f monic
    a = list(a)
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        c = a[-1] % p
        k = len(a) - 1 - df
        if c:
            for i in range(df):
                a[k + i] = (a[k + i] - c * f[i]) % p
        a.pop()
    return _ptrim(a)


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        # make b monic for _pmod
        lc = b[-1]
        if lc != 1:
            inv = pow(lc, -1, p)
            b = [(v * inv) % p for v in b]
        a, b = b, _pmod(a, b, p)
    if a:
        lc = a[-1]
        if lc != 1:
            inv = pow(lc, -1, p)
            a = [(v * inv) % p for v in a]
    return a


def _ppowmod_xq(f, p, times):
    """x^(p^times) mod f, via repeated p-th powers in F_p[x]/(f)."""
    r = _pmod([0, 1], f, p)
    for _ in range(times):
        r = _ppow(r, p, f, p)
    return r


def _ppow(a, e, f, p):
    r = [1]
    b = list(a)
    while e:
        if e & 1:
            r = _pmod(_pmul(r, b, p), f, p)
        b = _pmod(_pmul(b, b, p), f, p)
        e >>= 1
    return r


def is_irreducible_poly(coeffs, p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p.

    Uses the classical criterion: x^(p^n) = x mod f, and for every prime
    divisor l of n the gcd of x^(p^(n/l)) - x with f is trivial.
    """
    f = list(coeffs)
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        raise ValueError("monic polynomial of degree >= 1 expected")
    if n == 1:
        return True
    # iterate x -> x^p, caching the needed stations
    need = {n // ell for ell in prime_factors(n)}
    r = _pmod([0, 1], f, p)
    for i in range(1, n + 1):
        r = _ppow(r, p, f, p)
        if i in need:
            g = _pgcd(_psub(r, [0, 1], p), f, p)
            if len(g) != 1:
                return False
    return r == _pmod([0, 1], f, p)


@functools.lru_cache(maxsize=None)
def smallest_irreducible(p: int, degree: int) -> tuple:
    """Lexicographically smallest monic irreducible of given degree over F_p.

    Candidates are scanned with the constant term varying fastest, i.e. in
    increasing order of the integer encoding of the coefficient vector.
    """
    if degree == 1:
        return (0, 1)  # x, the degree-1 convention
    n = 0
    while True:
        cs = []
        t = n
        for _ in range(degree):
            cs.append(t % p)
            t //= p
        cand = tuple(cs) + (1,)
        if is_irreducible_poly(cand, p):
            return cand
        n += 1


# ---------------------------------------------------------------------------

class FiniteField:
    """F_{p^degree} with canonical modulus; all element ops work on tuples.

    Elements are coefficient tuples of length `degree` with entries in
    [0, p).  The class is immutable after construction and safe to share.
    """

    def __init__(self, p: int, degree: int, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if degree < 1:
            raise ValueError("degree must be >= 1")
        self.p = p
        self.degree = degree
        self.size = p ** degree
        if modulus is None:
            modulus = smallest_irreducible(p, degree)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != degree + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of the stated degree")
        if degree > 1 and not is_irreducible_poly(modulus, p):
            raise ValueError("modulus is reducible")
        self.modulus = modulus
        self.zero = (0,) * degree
        self.one = ((1,) + (0,) * (degree - 1)) if degree >= 1 else ()
        self._xpow = self._reduction_rows()
        self._frob_mats: dict[int, np.ndarray] = {}
        self._pack = _PackedOps(self) if degree > 1 else None
        self._sqrt_nonresidue = None

    # -- basics ------------------------------------------------------------

    def _reduction_rows(self):
        """x^k mod modulus for k in [degree, 2*degree-2], as tuples."""
        m, p = self.degree, self.p
        rows = {}
        r = [0] * m
        r[0] = 1
        cur = list(r)
        # walk x^0 .. x^(2m-2)
        for k in range(2 * m - 1):
            if k >= m:
                rows[k] = tuple(cur)
            top = cur[m - 1]
            cur = [0] + cur[: m - 1]
            if top:
                for i in range(m):
                    cur[i] = (cur[i] - top * self.modulus[i]) % p
        return rows

    def element(self, value) -> tuple:
        """Coerce an int (reduced mod p if degree 1, else base-p digits) or a
        coefficient sequence to a canonical element tuple."""
        if isinstance(value, tuple) and len(value) == self.degree:
            return tuple(v % self.p for v in value)
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise ValueError("element of a different field")
            return value.coeffs
        if isinstance(value, int):
            if self.degree == 1:
                return (value % self.p,)
            return self.from_int(value % self.size)
        if isinstance(value, (list, np.ndarray)):
            vs = [int(v) % self.p for v in value]
            if len(vs) > self.degree:
                raise ValueError("too many coefficients")
            vs += [0] * (self.degree - len(vs))
            return tuple(vs)
        raise TypeError(f"cannot coerce {value!r}")

    def from_int(self, n: int) -> tuple:
        """Inverse of to_int: base-p digits, low first."""
        cs = []
        for _ in range(self.degree):
            cs.append(n % self.p)
            n //= self.p
        return tuple(cs)

    def to_int(self, a) -> int:
        """Canonical integer encoding sum(c_i * p^i); defines element order."""
        n = 0
        for c in reversed(a):
            n = n * self.p + c
        return n

    def random_element(self, rng: random.Random) -> tuple:
        return tuple(rng.randrange(self.p) for _ in range(self.degree))

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def smul(self, c: int, a):
        p = self.p
        c %= p
        return tuple((c * x) % p for x in a)

    def mul(self, a, b):
        m, p = self.degree, self.p
        if m == 1:
            return ((a[0] * b[0]) % p,)
        z = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    z[i + j] += ai * bj
        rows = self._xpow
        out = z[:m]
        for k in range(m, 2 * m - 1):
            c = z[k] % p
            if c:
                row = rows[k]
                for i in range(m):
                    out[i] += c * row[i]
        return tuple(v % p for v in out)

    def inv(self, a):
        if all(v == 0 for v in a):
            raise ZeroDivisionError("inverse of zero")
        p = self.p
        if self.degree == 1:
            return (pow(a[0], -1, p),)
        # extended Euclid in F_p[x]
        r0, r1 = list(self.modulus), _ptrim(list(a))
        s0, s1 = [], [1]
        while r1:
            lc = pow(r1[-1], -1, p)
            rm = [(v * lc) % p for v in r1]
            q = []
            rem = list(r0)
            dq = len(rem) - len(rm)
            q = [0] * (dq + 1)
            while len(rem) >= len(rm) and rem:
                c = rem[-1] % p
                k = len(rem) - len(rm)
                if c:
                    q[k] = c
                    for i in range(len(rm)):
                        rem[k + i] = (rem[k + i] - c * rm[i]) % p
                rem.pop()
                _ptrim(rem)
                if len(rem) < len(rm):
                    break
            q = _ptrim([(v * lc) % p for v in q])
            r0, r1 = r1, rem
            s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        lc = pow(r0[-1], -1, p)
        s0 = [(v * lc) % p for v in s0]
        s0 = _pmod(s0, self.modulus, p)
        s0 += [0] * (self.degree - len(s0))
        return tuple(s0)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            a = self.inv(a)
            e = -e
        r = self.one
        b = a
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    # -- squares -------------------------------------------------------------

    def is_square(self, a) -> bool:
        if self.p == 2:
            return True
        if all(v == 0 for v in a):
            return True
        return self.pow(a, (self.size - 1) // 2) == self.one

    def sqrt(self, a):
        """Canonical square root (the smaller of the two in canonical order),
        or None for a non-residue.  Characteristic must be odd."""
        if self.p == 2:
            raise ValueError("square roots unsupported in characteristic 2")
        if all(v == 0 for v in a):
            return self.zero
        if not self.is_square(a):
            return None
        S = self.size
        if S % 4 == 3:
            r = self.pow(a, (S + 1) // 4)
        else:
            r = self._tonelli_shanks(a)
        r2 = self.neg(r)
        return r if self.to_int(r) <= self.to_int(r2) else r2

    def _nonresidue(self):
        if self._sqrt_nonresidue is None:
            n = 2
            while True:
                c = self.from_int(n)
                if not self.is_square(c):
                    self._sqrt_nonresidue = c
                    break
                n += 1
        return self._sqrt_nonresidue

    def _tonelli_shanks(self, a):
        S = self.size
        q, s = S - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = self.pow(self._nonresidue(), q)
        m, c, t = s, z, self.pow(a, q)
        r = self.pow(a, (q + 1) // 2)
        while t != self.one:
            i, t2 = 0, t
            while t2 != self.one:
                t2 = self.mul(t2, t2)
                i += 1
            b = self.pow(c, 1 << (m - i - 1))
            m, c = i, self.mul(b, b)
            t = self.mul(t, c)
            r = self.mul(r, b)
        return r

    # -- Frobenius -----------------------------------------------------------

    def _frob_matrix(self, k: int) -> np.ndarray:
        """Matrix of a -> a^(p^k) as an F_p-linear map on coefficient vectors."""
        k %= self.degree
        if k not in self._frob_mats:
            m = self.degree
            cols = []
            for j in range(m):
                basis = tuple(1 if i == j else 0 for i in range(m))
                cols.append(self.pow(basis, self.p ** k))
            mat = np.array(cols, dtype=np.int64)  # row j = image of e_j
            self._frob_mats[k] = mat
        return self._frob_mats[k]

    def frobenius(self, a, q: int, i: int = 1):
        """a^(q^i) where q is a power of the characteristic."""
        e = 0
        qq = q
        while qq % self.p == 0 and qq > 1:
            qq //= self.p
            e += 1
        if qq != 1 or e == 0:
            raise ValueError(f"{q} is not a power of the characteristic {self.p}")
        k = (e * i) % self.degree
        if k == 0:
            return tuple(a)
        mat = self._frob_matrix(k)
        vec = np.asarray(a, dtype=np.int64) @ mat
        return tuple(int(v) % self.p for v in vec)

    # -- misc ----------------------------------------------------------------

    @property
    def packed(self):
        """Packed-integer fast ops (hot loops); None for prime fields."""
        return self._pack

    def describe(self) -> dict:
        return {"p": self.p, "degree": self.degree, "modulus": list(self.modulus)}

    def __repr__(self):
        return f"FiniteField(p={self.p}, degree={self.degree})"

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.degree == other.degree
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.degree, self.modulus))


class _PackedOps:
    """Field elements packed into a single int, one byte lane per coefficient.

    Valid while degree * (p-1)^2 < 256, which covers the desk-scale towers
    this library targets; hot loops (subset scans) use these directly.
    """

    def __init__(self, field: FiniteField):
        m, p = field.degree, field.p
        if m * (p - 1) * (p - 1) > 255:
            self.ok = False
            return
        self.ok = True
        self.field = field
        self.m = m
        self.p = p
        self.lowmask = (1 << (8 * m)) - 1
        self.nbytes = 2 * m - 1
        # TABLE[k-m][c] = packed representation of c * (x^k mod f), c in [0,p)
        self.table = [
            [
                int.from_bytes(bytes((c * v) % p for v in field._xpow[k]), "little")
                for c in range(p)
            ]
            for k in range(m, 2 * m - 1)
        ]
        self.fives = int.from_bytes(bytes([p] * m), "little")
        self.zero = 0
        self.one = 1

    def pack(self, t) -> int:
        return int.from_bytes(bytes(t), "little")

    def unpack(self, v: int) -> tuple:
        return tuple(v.to_bytes(self.m, "little"))

    def norm(self, v: int) -> int:
        p = self.p
        return int.from_bytes(bytes(b % p for b in v.to_bytes(self.m + 2, "little")[: self.m]), "little")

    def mul(self, a: int, b: int) -> int:
        z = a * b
        zb = z.to_bytes(self.nbytes, "little")
        acc = z & self.lowmask
        table = self.table
        p = self.p
        for k in range(self.m - 1):
            c = zb[self.m + k]
            if c:
                acc += table[k][c % p]
        return int.from_bytes(bytes(v % p for v in acc.to_bytes(self.m, "little")), "little")

    def add(self, a: int, b: int) -> int:
        return self.norm(a + b)

    def sub(self, a: int, b: int) -> int:
        return self.norm(a + self.fives - b)

    def neg(self, a: int) -> int:
        return self.norm(self.fives - a)

    def inv(self, a: int) -> int:
        return self.pack(self.field.inv(self.unpack(a)))


class FieldElement:
    """Convenience wrapper pairing a coefficient tuple with its field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, value):
        self.field = field
        self.coeffs = field.element(value)

    def _lift(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.coeffs
        return self.field.element(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.coeffs, self._lift(other)))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.coeffs, self._lift(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._lift(other), self.coeffs))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.coeffs, self._lift(other)))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.coeffs, self._lift(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._lift(other), self.coeffs))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.coeffs, e))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        try:
            return self.coeffs == self._lift(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if self.field.degree == 1:
            return str(self.coeffs[0])
        return f"FieldElement{list(self.coeffs)}"


def make_field(p: int, degree: int) -> FiniteField:
    """Build F_{p^degree} with the canonical (deterministic) modulus."""
    return FiniteField(p, degree)


# ---------------------------------------------------------------------------
# embeddings

class Embedding:
    """A ring homomorphism between tower levels, fixing the prime field.

    Determined by the image of the source generator: the lexicographically
    smallest root of the source modulus in the target field.
    """

    def __init__(self, source: FiniteField, target: FiniteField, image_of_generator):
        if source.p != target.p:
            raise ValueError("different characteristics")
        if target.degree % source.degree != 0:
            raise ValueError("source degree must divide target degree")
        self.source = source
        self.target = target
        self.image_of_generator = tuple(image_of_generator)
        # power matrix: row i = image_of_generator^i
        rows = []
        acc = target.one
        for _ in range(source.degree):
            rows.append(acc)
            acc = target.mul(acc, self.image_of_generator)
        self._powmat = np.array(rows, dtype=np.int64)

    def apply(self, a) -> tuple:
        vec = np.asarray(a, dtype=np.int64) @ self._powmat
        return tuple(int(v) % self.target.p for v in vec)

    def __repr__(self):
        return f"Embedding({self.source!r} -> {self.target!r})"


def _subfield_elements(target: FiniteField, d: int):
    """All elements of the degree-d subfield of target, via the fixed space
    of the d-th Frobenius power (a linear condition over F_p)."""
    p, M = target.p, target.degree
    if d % M == 0:
        basis = list(np.eye(M, dtype=np.int64))
    else:
        A = (target._frob_matrix(d) - np.eye(M, dtype=np.int64)) % p
        basis = _nullspace_fp(A.T % p, p)  # v @ frob == v  <=>  (frob^T - I) v = 0
    out = []
    k = len(basis)
    for n in range(p ** k):
        cs = np.zeros(M, dtype=np.int64)
        t = n
        for i in range(k):
            c = t % p
            t //= p
            if c:
                cs = (cs + c * basis[i]) % p
        out.append(tuple(int(v) for v in cs))
    return out


def _nullspace_fp(A: np.ndarray, p: int):
    """Basis of the right null space of A over F_p (rows of the result)."""
    A = A.copy() % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        sel = None
        for rr in range(r, rows):
            if A[rr, c] % p:
                sel = rr
                break
        if sel is None:
            continue
        A[[r, sel]] = A[[sel, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        for rr in range(rows):
            if rr != r and A[rr, c]:
                A[rr] = (A[rr] - A[rr, c] * A[r]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = np.zeros(cols, dtype=np.int64)
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-A[i, fc]) % p
        basis.append(v % p)
    return basis


_SUBFIELD_ENUM_LIMIT = 10 ** 6


def embed_field(source: FiniteField, target: FiniteField) -> Embedding:
    """Canonical embedding: generator maps to the lexicographically smallest
    root of the source modulus in the target."""
    if source.p != target.p:
        raise ValueError("different characteristics")
    if target.degree % source.degree != 0:
        raise ValueError(f"degree {source.degree} does not divide {target.degree}")
    if source.degree == 1:
        img = target.zero  # generator of F_p is x = 0 under the x-0 convention
        return Embedding(source, target, img)
    if source == target:
        gen = target.from_int(target.p)
        return Embedding(source, target, gen)
    roots = _modulus_roots(source, target)
    img = min(roots, key=target.to_int)
    return Embedding(source, target, img)


def _modulus_roots(source: FiniteField, target: FiniteField):
    """All roots of source.modulus in target."""
    d = source.degree
    f = [(c % target.p,) + (0,) * (target.degree - 1) for c in source.modulus]
    f = [target.element(list(c)) for c in f]
    if source.p ** d <= _SUBFIELD_ENUM_LIMIT:
        roots = []
        for e in _subfield_elements(target, d):
            acc = target.zero
            for c in reversed(f):
                acc = target.add(target.mul(acc, e), c)
            if acc == target.zero:
                roots.append(e)
        if len(roots) != d:
            raise RuntimeError("root count mismatch; embedding construction bug")
        return roots
    return _cz_roots(f, target)


def _cz_roots(f, K: FiniteField):
    """Cantor-Zassenhaus root extraction of a squarefree, fully-split monic
    polynomial over K (odd characteristic)."""
    rng = random.Random(K.size ^ 0x5EED)

    def kp_trim(a):
        while a and a[-1] == K.zero:
            a.pop()
        return a

    def kp_mulmod(a, b, g):
        out = [K.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai != K.zero:
                for j, bj in enumerate(b):
                    out[i + j] = K.add(out[i + j], K.mul(ai, bj))
        return kp_mod(out, g)

    def kp_mod(a, g):
        a = list(a)
        dg = len(g) - 1
        while len(a) - 1 >= dg and a:
            c = a[-1]
            k = len(a) - 1 - dg
            if c != K.zero:
                for i in range(dg):
                    a[k + i] = K.sub(a[k + i], K.mul(c, g[i]))
            a.pop()
            kp_trim(a)
        return a

    def kp_gcd(a, b):
        a, b = list(a), list(b)
        while kp_trim(b):
            lc = K.inv(b[-1])
            bm = [K.mul(v, lc) for v in b]
            a, b = b, kp_mod(a, bm)
        if a:
            lc = K.inv(a[-1])
            a = [K.mul(v, lc) for v in a]
        return a

    def kp_powmod(a, e, g):
        r = [K.one]
        b = list(a)
        while e:
            if e & 1:
                r = kp_mulmod(r, b, g)
            b = kp_mulmod(b, b, g)
            e >>= 1
        return r

    def split(g):
        deg = len(g) - 1
        if deg == 1:
            return [K.neg(g[0])]
        while True:
            shift = K.random_element(rng)
            base = [shift, K.one]
            w = kp_powmod(base, (K.size - 1) // 2, g)
            w = kp_trim(list(w))
            if not w:
                continue
            w[0] = K.sub(w[0], K.one)
            h = kp_gcd(w, g)
            if 0 < len(h) - 1 < deg:
                rest = kp_quotient(g, h)
                return split(h) + split(rest)

    def kp_quotient(a, b):
        a = list(a)
        q = [K.zero] * (len(a) - len(b) + 1)
        while len(a) >= len(b) and kp_trim(a):
            c = K.div(a[-1], b[-1])
            k = len(a) - len(b)
            q[k] = c
            for i in range(len(b)):
                a[k + i] = K.sub(a[k + i], K.mul(c, b[i]))
            a.pop()
        return q

    return split(list(f))
