"""Exact arithmetic in GF(2^m) for 2 <= m <= 20.

Field elements are plain Python ints in the polynomial basis: bit i of an
element holds the coefficient of x^i, so addition is XOR and the constants
0 and 1 are the additive and multiplicative identities.  The same encoding
is used for polynomials over GF(2), e.g. x^3 + x + 1 <-> 0b1011 = 11.

A FieldCtx bundles the irreducible modulus, the smallest primitive element,
and the log/antilog/trace tables that every downstream enumeration leans on.
Tables are numpy arrays so batch kernels can index them directly; the scalar
operations below cast back to int.
"""

from __future__ import annotations

import numpy as np

MIN_DEGREE = 2
MAX_DEGREE = 20


# ---------------------------------------------------------------------------
# Polynomials over GF(2), encoded as ints (bit i = coefficient of x^i).
# ---------------------------------------------------------------------------

def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def poly_mul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials."""
    r = 0
    while a:
        if a & 1:
            r ^= b
        a >>= 1
        b <<= 1
    return r


def poly_mod(a: int, mod: int) -> int:
    dm = poly_degree(mod)
    da = poly_degree(a)
    while da >= dm:
        a ^= mod << (da - dm)
        da = poly_degree(a)
    return a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_str(p: int) -> str:
    """Human-readable form of a bit-encoded polynomial, e.g. 11 -> 'x^3 + x + 1'."""
    if p == 0:
        return "0"
    terms = []
    for i in range(poly_degree(p), -1, -1):
        if (p >> i) & 1:
            terms.append("x^%d" % i if i > 1 else ("x" if i == 1 else "1"))
    return " + ".join(terms)


def irreducibility_witness(p: int) -> tuple[int, int] | None:
    """Return (k, g) showing p reducible, or None when p is irreducible.

    A polynomial of degree d is reducible iff it shares a factor with
    x^(2^k) - x for some k <= d/2, because that product covers every
    irreducible polynomial of degree <= d/2.  The witness g is the
    offending gcd.
    """
    d = poly_degree(p)
    s = 0b10  # the polynomial x
    for k in range(1, d // 2 + 1):
        s = poly_mod(poly_mul(s, s), p)  # x^(2^k) mod p
        g = poly_gcd(p, s ^ 0b10)
        if g != 1:
            return k, g
    return None


def is_irreducible(p: int) -> bool:
    return poly_degree(p) >= 1 and irreducibility_witness(p) is None


def smallest_irreducible(m: int) -> int:
    """Smallest (by integer encoding) irreducible polynomial of degree m."""
    for p in range(1 << m, 1 << (m + 1)):
        if irreducibility_witness(p) is None:
            return p
    raise AssertionError("irreducible polynomials exist for every degree")


# ---------------------------------------------------------------------------
# GF(2) linear algebra on bit-packed vectors.
# ---------------------------------------------------------------------------

def gf2_rank(vecs) -> int:
    """Rank over GF(2) of a collection of bit-packed vectors."""
    pivots: dict[int, int] = {}
    rank = 0
    for v in vecs:
        v = int(v)
        while v:
            msb = v.bit_length() - 1
            if msb in pivots:
                v ^= pivots[msb]
            else:
                pivots[msb] = v
                rank += 1
                break
    return rank


def gf2_solve(cols: list[int], rhs: int, m: int) -> tuple[int, list[int]] | None:
    """Solve M x = rhs over GF(2) with M given column-wise.

    Bit i of cols[j] is M[i][j]; solutions are ints with bit j = x_j.
    Returns (particular_solution, kernel_basis) or None when inconsistent.
    """
    rows = []
    for i in range(m):
        r = 0
        for j in range(m):
            r |= ((cols[j] >> i) & 1) << j
        rows.append((r, (rhs >> i) & 1))
    used = [False] * m
    pivots: list[tuple[int, int]] = []  # (column, row index)
    for col in range(m):
        piv = next(
            (i for i in range(m) if not used[i] and (rows[i][0] >> col) & 1), None
        )
        if piv is None:
            continue
        used[piv] = True
        pivots.append((col, piv))
        pr, pb = rows[piv]
        for i in range(m):
            if i != piv and (rows[i][0] >> col) & 1:
                rows[i] = (rows[i][0] ^ pr, rows[i][1] ^ pb)
    if any(not used[i] and rows[i][1] for i in range(m)):
        return None
    x0 = 0
    for col, piv in pivots:
        x0 |= rows[piv][1] << col
    pivot_cols = {col for col, _ in pivots}
    kernel = []
    for free in range(m):
        if free in pivot_cols:
            continue
        v = 1 << free
        for col, piv in pivots:
            v |= ((rows[piv][0] >> free) & 1) << col
        kernel.append(v)
    return x0, kernel


# ---------------------------------------------------------------------------
# Field context.
# ---------------------------------------------------------------------------

def _raw_mul(a: int, b: int, modulus: int, m: int) -> int:
    # Table-free multiply, used only while the tables are being built.
    r = 0
    top = 1 << m
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= modulus
    return r


def _raw_pow(a: int, k: int, modulus: int, m: int) -> int:
    r = 1
    while k:
        if k & 1:
            r = _raw_mul(r, a, modulus, m)
        a = _raw_mul(a, a, modulus, m)
        k >>= 1
    return r


def _prime_factors(n: int) -> list[int]:
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


class FieldCtx:
    """GF(2^m) with precomputed tables; treat as immutable after build_field.

    Attributes:
        m: extension degree.
        modulus: bit-encoded irreducible polynomial of degree m.
        generator: smallest primitive element, as an integer.
        q: field size 2^m.
        n_units: multiplicative group order 2^m - 1.
        log_table: int64[q]; discrete log base `generator`, -1 at index 0.
        antilog_table: int64[n_units]; antilog_table[i] = generator^i.
        trace_table: uint8[q]; absolute trace to GF(2).
    """

    def __init__(self, m, modulus, generator, log_table, antilog_table, trace_table):
        self.m = m
        self.modulus = modulus
        self.generator = generator
        self.q = 1 << m
        self.n_units = self.q - 1
        self.log_table = log_table
        self.antilog_table = antilog_table
        self.trace_table = trace_table
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"FieldCtx(m={self.m}, modulus={self.modulus:#b}, generator={self.generator})"


def build_field(m: int, modulus: int | None = None) -> FieldCtx:
    """Construct GF(2^m), validating the modulus and choosing a generator.

    With no modulus, the smallest irreducible polynomial of degree m (by
    integer encoding) is used.  The generator is the smallest element of
    multiplicative order 2^m - 1.
    """
    if not isinstance(m, int) or not MIN_DEGREE <= m <= MAX_DEGREE:
        raise ValueError(f"m must be an integer in [{MIN_DEGREE}, {MAX_DEGREE}], got {m!r}")
    if modulus is None:
        modulus = smallest_irreducible(m)
    else:
        modulus = int(modulus)
        if poly_degree(modulus) != m:
            raise ValueError(
                f"modulus {poly_str(modulus)} has degree {poly_degree(modulus)}, expected {m}"
            )
        witness = irreducibility_witness(modulus)
        if witness is not None:
            k, g = witness
            raise ValueError(
                f"modulus {poly_str(modulus)} ({modulus:#b}) is reducible: "
                f"gcd with x^(2^{k}) - x is {poly_str(g)}"
            )
    q = 1 << m
    n_units = q - 1
    primes = _prime_factors(n_units)
    generator = next(
        a for a in range(2, q)
        if all(_raw_pow(a, n_units // p, modulus, m) != 1 for p in primes)
    )

    antilog = [0] * n_units
    log = [-1] * q
    v = 1
    for i in range(n_units):
        antilog[i] = v
        log[v] = i
        v = _raw_mul(v, generator, modulus, m)
    if v != 1:
        raise AssertionError("generator order check failed")

    log_np = np.array(log, dtype=np.int64)
    alog_np = np.array(antilog, dtype=np.int64)

    # Absolute trace of every element via m-1 vectorized squarings.
    xs = np.arange(q, dtype=np.int64)
    cur = xs.copy()
    tr = xs.copy()
    for _ in range(m - 1):
        cur[1:] = alog_np[(2 * log_np[cur[1:]]) % n_units]
        tr ^= cur
    if not np.all((tr == 0) | (tr == 1)) or int((tr == 0).sum()) != q // 2:
        raise AssertionError("trace table failed its balance check")

    return FieldCtx(m, modulus, generator, log_np, alog_np, tr.astype(np.uint8))


def _validate_subfield_degree(ctx: FieldCtx, h: int) -> None:
    if not isinstance(h, int) or not 1 <= h < ctx.m or ctx.m % h:
        raise ValueError(f"h={h!r} must be a positive proper divisor of m={ctx.m}")


def _check_element(ctx: FieldCtx, a: int, name: str = "element") -> int:
    a = int(a)
    if not 0 <= a < ctx.q:
        raise ValueError(f"{name}={a} is not an element of GF(2^{ctx.m})")
    return a


# ---------------------------------------------------------------------------
# Scalar operations.
# ---------------------------------------------------------------------------

def mul(ctx: FieldCtx, a: int, b: int) -> int:
    a = _check_element(ctx, a)
    b = _check_element(ctx, b)
    if a == 0 or b == 0:
        return 0
    i = int(ctx.log_table[a]) + int(ctx.log_table[b])
    return int(ctx.antilog_table[i % ctx.n_units])


def inv(ctx: FieldCtx, a: int) -> int:
    a = _check_element(ctx, a)
    if a == 0:
        raise ValueError("0 has no multiplicative inverse")
    return int(ctx.antilog_table[-int(ctx.log_table[a]) % ctx.n_units])


def pow(ctx: FieldCtx, a: int, k: int) -> int:  # noqa: A001 - field exponentiation
    a = _check_element(ctx, a)
    if k < 0:
        raise ValueError("negative exponents are not supported; combine with inv")
    if a == 0:
        return 1 if k == 0 else 0
    return int(ctx.antilog_table[(int(ctx.log_table[a]) * k) % ctx.n_units])


def trace(ctx: FieldCtx, a: int) -> int:
    return int(ctx.trace_table[_check_element(ctx, a)])


def relative_trace(ctx: FieldCtx, h: int, a: int) -> int:
    """Trace of a from GF(2^m) onto the subfield GF(2^h), h a proper divisor of m."""
    _validate_subfield_degree(ctx, h)
    a = _check_element(ctx, a)
    r = 0
    cur = a
    for _ in range(ctx.m // h):
        r ^= cur
        cur = pow(ctx, cur, 1 << h)
    return r


def solve_affine_linearized(ctx: FieldCtx, h: int, a: int, rhs: int) -> set[int]:
    """All x with a^(2^h) * x^(2^(2h)) + a * x = rhs, a != 0.

    The left side is GF(2)-linear in x, so the equation reduces to an
    m x m linear system over GF(2) on the coordinate bits; the solution
    set is either empty or a coset of the kernel (size a power of two).
    """
    _validate_subfield_degree(ctx, h)
    a = _check_element(ctx, a, "a")
    rhs = _check_element(ctx, rhs, "rhs")
    if a == 0:
        raise ValueError("a must be nonzero")
    m = ctx.m
    a2h = pow(ctx, a, 1 << h)
    t = 1 << ((2 * h) % m)  # x^(2^(2h)) = x^(2^(2h mod m))

    def apply(x: int) -> int:
        return mul(ctx, a2h, pow(ctx, x, t)) ^ mul(ctx, a, x)

    cols = [apply(1 << j) for j in range(m)]
    sol = gf2_solve(cols, rhs, m)
    if sol is None:
        return set()
    x0, kernel = sol
    out = set()
    for mask in range(1 << len(kernel)):
        v = x0
        for j, kb in enumerate(kernel):
            if (mask >> j) & 1:
                v ^= kb
        out.add(v)
    return out


# ---------------------------------------------------------------------------
# Vectorized tables, cached per field.  These back the batch kernels in the
# weil and code modules; all of them are derived from the core tables above.
# ---------------------------------------------------------------------------

def _cached(ctx: FieldCtx, key, build):
    try:
        return ctx._cache[key]
    except KeyError:
        value = build()
        ctx._cache[key] = value
        return value


def antilog_doubled(ctx: FieldCtx) -> np.ndarray:
    """antilog over exponents 0 .. 2*(q-1)-2, so log sums need no reduction."""
    def build():
        return np.concatenate([ctx.antilog_table, ctx.antilog_table[:-1]])
    return _cached(ctx, "alog2", build)


def trace_of_antilog(ctx: FieldCtx) -> np.ndarray:
    """trace_table composed with antilog_doubled (uint8)."""
    def build():
        return ctx.trace_table[antilog_doubled(ctx)]
    return _cached(ctx, "tr_alog", build)


def power_table(ctx: FieldCtx, t: int) -> np.ndarray:
    """x^t for every x in the field, t >= 1."""
    if t < 1:
        raise ValueError("power_table needs t >= 1")

    def build():
        out = np.zeros(ctx.q, dtype=np.int64)
        out[1:] = ctx.antilog_table[(ctx.log_table[1:] * t) % ctx.n_units]
        return out

    return _cached(ctx, ("pow", t), build)


def mul_vec(ctx: FieldCtx, c: int, v: np.ndarray) -> np.ndarray:
    """c * v elementwise for an array of field elements."""
    c = _check_element(ctx, c)
    if c == 0:
        return np.zeros_like(v)
    out = np.zeros_like(v)
    nz = v != 0
    out[nz] = antilog_doubled(ctx)[int(ctx.log_table[c]) + ctx.log_table[v[nz]]]
    return out


def relative_trace_table(ctx: FieldCtx, h: int) -> np.ndarray:
    """relative_trace(ctx, h, x) for every x, as an int64 array."""
    _validate_subfield_degree(ctx, h)

    def build():
        xs = np.arange(ctx.q, dtype=np.int64)
        cur = xs.copy()
        rt = xs.copy()
        for _ in range(ctx.m // h - 1):
            cur[1:] = ctx.antilog_table[(ctx.log_table[cur[1:]] << h) % ctx.n_units]
            rt ^= cur
        return rt

    return _cached(ctx, ("reltrace", h), build)


def dual_coordinates(ctx: FieldCtx) -> np.ndarray:
    """B[x] with bit i = trace(e_i * x); a GF(2)-linear bijection of the field.

    Writing b = sum b_i e_i in the polynomial basis gives
    trace(b*x) = parity(bits(b) & B[x]), which turns trace pairings into
    plain bit inner products for the Walsh transform kernels.
    """
    def build():
        xs = np.arange(ctx.q, dtype=np.int64)
        out = np.zeros(ctx.q, dtype=np.int64)
        for i in range(ctx.m):
            bits = ctx.trace_table[mul_vec(ctx, 1 << i, xs)].astype(np.int64)
            out |= bits << i
        return out

    return _cached(ctx, "dual", build)
