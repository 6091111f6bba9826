"""Code construction and weight enumeration tests.

The three worked reference codes pin the enumerator down exactly; everything
else is checked by route-vs-route agreement (per-coordinate scalar weights vs
the batch enumeration, formula vs enumeration, two moduli per degree).
"""

from __future__ import annotations

import io

import numpy as np
import pytest

from tracecodes import code as code_mod
from tracecodes import gf2m


def _dist(ctx, h, kind):
    lc = code_mod.build_code(ctx, h, code_mod.defining_set(ctx, kind))
    return lc, code_mod.weight_distribution(lc)


# ---------------------------------------------------------------------------
# Defining sets.
# ---------------------------------------------------------------------------

def test_defining_set_sizes_and_membership():
    for m in range(2, 9):
        ctx = gf2m.build_field(m)
        d0 = code_mod.defining_set(ctx, code_mod.D0)
        d1 = code_mod.defining_set(ctx, code_mod.D1)
        full = code_mod.defining_set(ctx, code_mod.FULL_STAR)
        assert len(d0) == (1 << (m - 1)) - 1
        assert len(d1) == 1 << (m - 1)
        assert len(full) == (1 << m) - 1
        assert all(x and gf2m.trace(ctx, x) == 0 for x in d0.elements)
        assert all(gf2m.trace(ctx, x) == 1 for x in d1.elements)
        for ds in (d0, d1, full):
            assert list(ds.elements) == sorted(ds.elements)
        assert set(d0.elements) | set(d1.elements) == set(full.elements)


def test_defining_set_m2_is_degenerate_but_well_defined():
    ctx = gf2m.build_field(2)
    assert code_mod.defining_set(ctx, code_mod.D0).elements == (1,)
    assert code_mod.defining_set(ctx, code_mod.D1).elements == (2, 3)


def test_punctured_image_sizes():
    for m, h in ((4, 1), (6, 1), (8, 2), (6, 3), (8, 4), (10, 1)):
        ctx = gf2m.build_field(m)
        ds = code_mod.defining_set(ctx, code_mod.PUNCTURED_IMAGE, h)
        assert len(ds) == ((1 << m) - 1) // ((1 << h) + 1)
        t = (1 << h) + 1
        assert set(ds.elements) == {gf2m.pow(ctx, x, t) for x in range(1, ctx.q)}


def test_punctured_image_rejects_odd_ratio():
    ctx = gf2m.build_field(6)
    with pytest.raises(ValueError, match="bijection"):
        code_mod.defining_set(ctx, code_mod.PUNCTURED_IMAGE, 2)
    with pytest.raises(ValueError, match="m > 2"):
        code_mod.punctured_code(gf2m.build_field(2), 1)


def test_unknown_kind_and_empty_set():
    ctx = gf2m.build_field(4)
    with pytest.raises(ValueError, match="unknown"):
        code_mod.defining_set(ctx, "d2")
    with pytest.raises(ValueError, match="empty"):
        code_mod.build_code(ctx, 1, code_mod.DefiningSet(code_mod.D0, ()))


# ---------------------------------------------------------------------------
# Reference codes: the three worked examples.
# ---------------------------------------------------------------------------

def test_reference_code_m5_trace0():
    ctx = gf2m.build_field(5)
    lc, dist = _dist(ctx, 1, code_mod.D0)
    assert (lc.n, lc.k, dist.d_min) == (15, 5, 6)
    assert dist.counts == {0: 1, 6: 10, 8: 15, 10: 6}


def test_reference_code_m5_trace1():
    ctx = gf2m.build_field(5)
    lc, dist = _dist(ctx, 1, code_mod.D1)
    assert (lc.n, lc.k) == (16, 5)
    assert dist.counts == {0: 1, 6: 6, 8: 15, 10: 10}
    # the enumerator's lowest weight is 6, so that is the minimum distance,
    # whatever any secondary parameter claim might suggest
    assert dist.d_min == 6


def test_reference_code_m8_both_trace_sets():
    ctx = gf2m.build_field(8)
    lc0, dist0 = _dist(ctx, 2, code_mod.D0)
    assert (lc0.n, lc0.k, dist0.d_min) == (127, 8, 56)
    assert dist0.counts == {0: 1, 56: 108, 64: 98, 80: 48, 96: 1}
    lc1, dist1 = _dist(ctx, 2, code_mod.D1)
    assert (lc1.n, lc1.k) == (128, 8)
    assert dist1.counts == {0: 1, 56: 96, 64: 109, 80: 48, 96: 2}


def test_reference_code_m6_full_and_punctured():
    ctx = gf2m.build_field(6)
    lc, dist = _dist(ctx, 1, code_mod.FULL_STAR)
    assert (lc.n, lc.k, dist.d_min) == (63, 6, 24)
    assert dist.counts == {0: 1, 24: 21, 36: 42}
    pc = code_mod.punctured_code(ctx, 1)
    pdist = code_mod.weight_distribution(pc)
    assert (pc.n, pc.k, pdist.d_min) == (21, 6, 8)
    assert pdist.counts == {0: 1, 8: 21, 12: 42}


# ---------------------------------------------------------------------------
# Structural properties.
# ---------------------------------------------------------------------------

def test_dimension_is_m_outside_the_norm_collapse():
    for m in range(3, 9):
        ctx = gf2m.build_field(m)
        for h in [h for h in range(1, m) if m % h == 0]:
            for kind in (code_mod.D0, code_mod.D1, code_mod.FULL_STAR):
                lc = code_mod.build_code(ctx, h, code_mod.defining_set(ctx, kind))
                if m == 2 * h:
                    assert lc.k == h
                else:
                    assert lc.k == m


def test_norm_collapse_m4_h2():
    # x^(2^h+1) is the norm onto GF(2^h) when m = 2h: the columns all live
    # in the subfield, so the rank drops to h and messages collapse 4-to-1
    ctx = gf2m.build_field(4)
    lc, dist = _dist(ctx, 2, code_mod.FULL_STAR)
    assert (lc.n, lc.k) == (15, 2)
    assert dist.counts == {0: 4, 10: 12}
    _, d0 = _dist(ctx, 2, code_mod.D0)
    assert d0.counts == {0: 4, 4: 8, 6: 4}
    pc = code_mod.punctured_code(ctx, 2)
    assert (pc.n, pc.k) == (3, 2)
    assert code_mod.weight_distribution(pc).counts == {0: 4, 2: 12}


def test_distribution_totals_and_zero_count():
    for m, h, kind in ((5, 1, code_mod.D0), (6, 2, code_mod.D1), (8, 4, code_mod.FULL_STAR)):
        ctx = gf2m.build_field(m)
        _, dist = _dist(ctx, h, kind)
        assert dist.total == 1 << m
        assert dist.counts[0] == 1 << (m - dist.k)
        assert dist.nonzero == {w: c for w, c in dist.counts.items() if w}


def test_punctured_weights_scale_per_message():
    for m, h in ((6, 1), (8, 2), (8, 4)):
        ctx = gf2m.build_field(m)
        full = code_mod.build_code(ctx, h, code_mod.defining_set(ctx, code_mod.FULL_STAR))
        punct = code_mod.punctured_code(ctx, h)
        wf = code_mod._weights_by_message(full)
        wp = code_mod._weights_by_message(punct)
        assert np.array_equal(wf, ((1 << h) + 1) * wp)


def test_single_element_defining_set():
    ctx = gf2m.build_field(5)
    lc = code_mod.build_code(ctx, 1, code_mod.DefiningSet(code_mod.D0, (3,)))
    assert (lc.n, lc.k) == (1, 1)
    dist = code_mod.weight_distribution(lc)
    assert dist.counts == {0: 16, 1: 16}


def test_codeword_weight_direct():
    ctx = gf2m.build_field(6)
    lc = code_mod.build_code(ctx, 1, code_mod.defining_set(ctx, code_mod.D1))
    assert code_mod.codeword_weight_direct(lc, 0) == 0
    w = code_mod._weights_by_message(lc)
    for x in (1, 2, 17, 40, 63):
        assert code_mod.codeword_weight_direct(lc, x) == int(w[x])


def test_weight_formula_equals_direct_small_m():
    for m in range(3, 9):
        ctx = gf2m.build_field(m)
        for h in [h for h in range(1, m) if m % h == 0]:
            by_msg = {}
            for a, kind in ((0, code_mod.D0), (1, code_mod.D1)):
                lc = code_mod.build_code(ctx, h, code_mod.defining_set(ctx, kind))
                by_msg[a] = code_mod._weights_by_message(lc)
            for b in range(1, ctx.q):
                for a in (0, 1):
                    assert code_mod.codeword_weight_formula(ctx, h, a, b) == int(
                        by_msg[a][b]
                    ), (m, h, a, b)


def test_weight_formula_validation():
    ctx = gf2m.build_field(5)
    with pytest.raises(ValueError, match="zero codeword"):
        code_mod.codeword_weight_formula(ctx, 1, 0, 0)
    with pytest.raises(ValueError, match="0 or 1"):
        code_mod.codeword_weight_formula(ctx, 1, 2, 3)


def test_basis_independence_of_distributions():
    # same degree, different irreducible modulus: coordinates permute but
    # the weight data cannot change
    for m, other in ((3, 13), (5, 41), (6, 73)):
        base = gf2m.build_field(m)
        alt = gf2m.build_field(m, other)
        for kind in (code_mod.D0, code_mod.D1, code_mod.FULL_STAR):
            _, d1 = _dist(base, 1, kind)
            _, d2 = _dist(alt, 1, kind)
            assert d1.counts == d2.counts, (m, kind)


def test_budget_rejection_mentions_formula_path():
    ctx = gf2m.build_field(8)
    lc = code_mod.build_code(ctx, 2, code_mod.defining_set(ctx, code_mod.D0))
    with pytest.raises(ValueError, match="codeword_weight_formula"):
        code_mod.weight_distribution(lc, budget=100)


def test_at_most_four_nonzero_weights():
    for m in range(3, 11):
        ctx = gf2m.build_field(m)
        for h in [h for h in range(1, m) if m % h == 0]:
            for kind in (code_mod.D0, code_mod.D1):
                _, dist = _dist(ctx, h, kind)
                assert len(dist.nonzero) <= 4, (m, h, kind)


# ---------------------------------------------------------------------------
# Generator matrices and export.
# ---------------------------------------------------------------------------

def test_generator_matrix_row_space_is_the_code():
    ctx = gf2m.build_field(4)
    lc = code_mod.build_code(ctx, 1, code_mod.defining_set(ctx, code_mod.D0))
    g = code_mod.generator_matrix(lc)
    assert g.shape == (lc.k, lc.n)
    span = set()
    for mask in range(1 << g.shape[0]):
        row = np.zeros(lc.n, dtype=np.uint8)
        for i in range(g.shape[0]):
            if (mask >> i) & 1:
                row ^= g[i]
        span.add(row.tobytes())
    words = set()
    for x in range(ctx.q):
        words.add(
            np.array(
                [gf2m.trace(ctx, gf2m.mul(ctx, x, p)) for p in lc.phis], dtype=np.uint8
            ).tobytes()
        )
    assert span == words
    assert len(span) == 1 << lc.k


def test_generator_matrix_is_reduced():
    ctx = gf2m.build_field(6)
    lc = code_mod.build_code(ctx, 1, code_mod.defining_set(ctx, code_mod.D1))
    g = code_mod.generator_matrix(lc)
    pivots = [int(np.argmax(row)) for row in g]  # first 1 in each row
    assert pivots == sorted(pivots)
    for i, p in enumerate(pivots):
        assert g[i, p] == 1
        col = g[:, p].copy()
        col[i] = 0
        assert not col.any()


def test_export_format_and_roundtrip(tmp_path):
    ctx = gf2m.build_field(5)
    lc = code_mod.build_code(ctx, 1, code_mod.defining_set(ctx, code_mod.D0))
    out = tmp_path / "g.txt"
    code_mod.write_generator_matrix(lc, out)
    lines = out.read_text().splitlines()
    assert lines[0] == "15 5 5 1 37"
    rows = lines[1:]
    assert len(rows) == 5 and all(len(r) == 15 and set(r) <= {"0", "1"} for r in rows)
    parsed = np.array([[int(c) for c in r] for r in rows], dtype=np.uint8)
    assert np.array_equal(parsed, code_mod.generator_matrix(lc))
    buf = io.StringIO()
    code_mod.write_generator_matrix(lc, buf)
    assert buf.getvalue() == out.read_text()
