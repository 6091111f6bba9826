"""Defining-set code construction and exact weight enumeration.

A defining set D = {d_1 < ... < d_n} over GF(2^m) and an exponent map
phi(d) = d^(2^h+1) (or the identity for punctured codes) give the binary
code whose codeword for message x is (Tr(x * phi(d_1)), ..., Tr(x * phi(d_n))).

Weight distributions are message-indexed: counts[w] is the number of
messages x in GF(2^m) whose codeword has weight w, so the counts always
sum to 2^m and the weight-0 entry is 2^(m-k).  For full-rank codes (k = m,
the generic situation) this coincides with counting distinct codewords.
When m = 2h the power map lands inside the subfield GF(2^h) and the rank
genuinely drops to h; the enumeration does not mask that, it reports k and
the inflated zero-weight count as they are.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import gf2m, weil

D0 = "d0"
D1 = "d1"
FULL_STAR = "full"
PUNCTURED_IMAGE = "punctured"

KINDS = (D0, D1, FULL_STAR, PUNCTURED_IMAGE)

#: Work cap for weight_distribution: 2^m * n must not exceed this.
#: The default admits every code up to m = 16.
DEFAULT_BUDGET = 1 << 32

_CHUNK_ELEMS = 1 << 22


@dataclass(frozen=True)
class DefiningSet:
    """Coordinate index set, elements in ascending integer order."""

    kind: str
    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)


def defining_set(ctx: gf2m.FieldCtx, kind: str, h: int = 0) -> DefiningSet:
    """Build one of the four defining sets.

    d0 / d1: nonzero elements of absolute trace 0 resp. 1 (sizes
    2^(m-1) - 1 and 2^(m-1)).  full: all of GF(2^m)^*.  punctured: the image
    {x^(2^h+1) : x != 0} as a set, which needs m/h even; when m/h is odd the
    power map is a bijection (gcd(2^h+1, 2^m - 1) = 1) and there is nothing
    to puncture.
    """
    xs = np.arange(ctx.q, dtype=np.int64)
    if kind == D0:
        els = xs[(ctx.trace_table == 0) & (xs > 0)]
    elif kind == D1:
        els = xs[ctx.trace_table == 1]
    elif kind == FULL_STAR:
        els = xs[1:]
    elif kind == PUNCTURED_IMAGE:
        gf2m._validate_subfield_degree(ctx, h)
        if (ctx.m // h) % 2:
            raise ValueError(
                f"punctured image needs m/h even; for m={ctx.m}, h={h} the map "
                f"x -> x^(2^{h}+1) is a bijection (gcd(2^{h}+1, 2^{ctx.m}-1) = 1)"
            )
        els = np.unique(gf2m.power_table(ctx, (1 << h) + 1)[1:])
    else:
        raise ValueError(f"unknown defining-set kind {kind!r}; expected one of {KINDS}")
    return DefiningSet(kind, tuple(int(x) for x in els))


@dataclass(eq=False)
class LinearCode:
    """A constructed code: context, exponent marker, columns, length, rank.

    h = 0 marks the identity column map (punctured codes); otherwise columns
    are phi(d) = d^(2^h+1) over the defining set.  phis holds the evaluated
    column multipliers in defining-set order; k is the GF(2) rank of their
    span, which equals the code dimension because the trace form is
    nondegenerate.
    """

    ctx: gf2m.FieldCtx
    h: int
    defset: DefiningSet
    phis: tuple[int, ...]
    n: int
    k: int


@dataclass(frozen=True)
class WeightDistribution:
    """Message-indexed weight counts; see the module docstring."""

    counts: dict[int, int]
    n: int
    k: int
    d_min: int

    @property
    def nonzero(self) -> dict[int, int]:
        return {w: c for w, c in self.counts.items() if w > 0}

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def build_code(ctx: gf2m.FieldCtx, h: int, defset: DefiningSet) -> LinearCode:
    """Code with columns phi(d) = d^(2^h+1) over the given defining set."""
    gf2m._validate_subfield_degree(ctx, h)
    if not defset.elements:
        raise ValueError("defining set is empty")
    els = np.asarray(defset.elements, dtype=np.int64)
    t = (1 << h) + 1
    phis = ctx.antilog_table[(ctx.log_table[els] * t) % ctx.n_units]
    return LinearCode(
        ctx=ctx,
        h=h,
        defset=defset,
        phis=tuple(int(p) for p in phis),
        n=len(defset),
        k=gf2m.gf2_rank(phis),
    )


def punctured_code(ctx: gf2m.FieldCtx, h: int) -> LinearCode:
    """Code of length (2^m - 1)/(2^h + 1) on the power-map image, identity columns."""
    gf2m._validate_subfield_degree(ctx, h)
    if ctx.m <= 2:
        raise ValueError("punctured construction needs m > 2")
    ds = defining_set(ctx, PUNCTURED_IMAGE, h)
    return LinearCode(
        ctx=ctx,
        h=0,
        defset=ds,
        phis=ds.elements,
        n=len(ds),
        k=gf2m.gf2_rank(ds.elements),
    )


def codeword_weight_direct(code: LinearCode, x: int) -> int:
    """Hamming weight of the codeword of message x, one trace per coordinate."""
    ctx = code.ctx
    x = gf2m._check_element(ctx, x, "x")
    return sum(gf2m.trace(ctx, gf2m.mul(ctx, x, p)) for p in code.phis)


def codeword_weight_formula(ctx: gf2m.FieldCtx, h: int, a: int, b: int) -> int:
    """Weight of the codeword of message b in the trace-a code, via Weil sums.

    wt = 2^(m-2) - (S_h(b, 0) + (-1)^a * S_h(b, 1)) / 4.  Closed-form values
    are used when exact; the odd-regime sign ambiguity falls back to direct
    summation.
    """
    if a not in (0, 1):
        raise ValueError("a selects the trace-0 or trace-1 defining set; use 0 or 1")
    b = gf2m._check_element(ctx, b, "b")
    if b == 0:
        raise ValueError("b = 0 is the zero codeword; its weight is 0 by definition")
    s0 = weil.weil_sum_closed(ctx, h, b, 0)
    s1 = weil.weil_sum_closed(ctx, h, b, 1)
    v0 = s0.value if s0.is_exact else weil.weil_sum_direct(ctx, h, b, 0)
    v1 = s1.value if s1.is_exact else weil.weil_sum_direct(ctx, h, b, 1)
    num = v0 + (v1 if a == 0 else -v1)
    if num % 4:
        raise RuntimeError(f"character-sum combination {num} is not divisible by 4")
    return (1 << (ctx.m - 2)) - num // 4


def _weights_by_message(code: LinearCode) -> np.ndarray:
    """int64[q] with entry x = weight of the codeword of message x.

    Enumeration is partitioned over contiguous message ranges; each chunk
    is a table-lookup pass (one log add + one trace-of-antilog gather per
    coordinate), and the per-chunk counts merge deterministically.
    """
    ctx = code.ctx
    lphi = ctx.log_table[np.asarray(code.phis, dtype=np.int64)]
    tr_alog = gf2m.trace_of_antilog(ctx)
    out = np.zeros(ctx.q, dtype=np.int64)
    logs = ctx.log_table[1:]
    rows = max(1, _CHUNK_ELEMS // max(1, code.n))
    for start in range(0, ctx.q - 1, rows):
        blk = logs[start : start + rows]
        bits = tr_alog[blk[:, None] + lphi[None, :]]
        out[1 + start : 1 + start + blk.size] = bits.sum(axis=1, dtype=np.int64)
    return out


def weight_distribution(code: LinearCode, budget: int | None = None) -> WeightDistribution:
    """Exact message-indexed weight counts by full enumeration.

    Refuses when 2^m * n exceeds the work budget; per-codeword questions
    stay answerable through codeword_weight_formula.
    """
    limit = DEFAULT_BUDGET if budget is None else int(budget)
    work = (1 << code.ctx.m) * code.n
    if work > limit:
        raise ValueError(
            f"enumeration work 2^{code.ctx.m} * {code.n} = {work} exceeds the "
            f"budget {limit}; use codeword_weight_formula for single codewords "
            f"or raise the budget"
        )
    w = _weights_by_message(code)
    counts = np.bincount(w)
    table = {int(i): int(c) for i, c in enumerate(counts) if c}
    d_min = min((x for x in table if x > 0), default=0)
    return WeightDistribution(counts=table, n=code.n, k=code.k, d_min=d_min)


def generator_matrix(code: LinearCode) -> np.ndarray:
    """k x n generator matrix (uint8), rows in reduced row-echelon form.

    Rows start as the codewords of the message basis 1, x, ..., x^(m-1) and
    are reduced over GF(2); zero rows are dropped, leaving rank-many rows.
    """
    ctx = code.ctx
    lphi = ctx.log_table[np.asarray(code.phis, dtype=np.int64)]
    tr_alog = gf2m.trace_of_antilog(ctx)
    rows = np.empty((ctx.m, code.n), dtype=np.uint8)
    for i in range(ctx.m):
        rows[i] = tr_alog[int(ctx.log_table[1 << i]) + lphi]
    reduced = _gf2_rref(rows)
    if reduced.shape[0] != code.k:
        raise RuntimeError("generator rank disagrees with the span rank")
    return reduced


def _gf2_rref(rows: np.ndarray) -> np.ndarray:
    a = rows.copy()
    r = 0
    for c in range(a.shape[1]):
        piv = next((i for i in range(r, a.shape[0]) if a[i, c]), None)
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        hits = a[:, c].astype(bool)
        hits[r] = False
        a[hits] ^= a[r]
        r += 1
        if r == a.shape[0]:
            break
    return a[:r]


def write_generator_matrix(code: LinearCode, dest) -> None:
    """Export the generator matrix as text: header 'n k m h modulus', then
    one '0'/'1' row per line.  dest is a path or a writable file object."""
    g = generator_matrix(code)
    lines = [f"{code.n} {code.k} {code.ctx.m} {code.h} {code.ctx.modulus}"]
    lines.extend("".join("1" if b else "0" for b in row) for row in g)
    text = "\n".join(lines) + "\n"
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text)
