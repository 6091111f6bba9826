"""Closed-form weight tables, verification against enumeration, power
moments, and the secret-sharing suitability test.

Prediction sources, keyed by the parameter regime they cover:

    T1   m/h odd,  trace-0 set,   length 2^(m-1) - 1, three weights
    T2   m/h odd,  trace-1 set,   length 2^(m-1), as printed upstream
    T2C  m/h odd,  trace-1 set,   multiplicities re-derived from the first
         two power moments given the middle-weight count
    T3   m/h even > 2, trace-0 set (two multiplicities re-derived; one
         published statement misplaces the sign factor, see the inline note)
    T4   m/h even > 2, trace-1 set
    T5   m/h even, m > 2, all of GF(2^m)^*
    C6   m/h even, m > 2, punctured image (T5 weights / (2^h + 1))

T2 as printed fails the second power moment (e.g. (5,1): 252 != 256) and
at (3,1) even evaluates to non-integer multiplicities, so it is shipped for
documentation and adjudication only; T2C is what sweeps and acceptance use.

When m = 2h the power map is the norm onto GF(2^h), the code rank drops to
h, and the T5/C6 tables evaluate with a zero-weight row whose multiplicity
is exactly the number of extra messages mapping to the zero codeword.
Verification merges that row with the zero codeword and still compares
exactly; the rank discrepancy is surfaced in the report, never hidden.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import code as code_mod
from . import gf2m

T1 = "T1"
T2 = "T2"
T2C = "T2C"
T3 = "T3"
T4 = "T4"
T5 = "T5"
C6 = "C6"
SOURCES = (T1, T2, T2C, T3, T4, T5, C6)

MATCH = "match"
MISMATCH = "mismatch"
INAPPLICABLE = "inapplicable"


class Inapplicable(ValueError):
    """The requested table's hypothesis does not hold for these parameters."""


@dataclass(frozen=True)
class TheoremPrediction:
    """An evaluated closed-form table: weight -> multiplicity.

    Zero-multiplicity rows are dropped and numerically coinciding weights
    are merged.  Multiplicities are ints except for T2 as printed, which can
    evaluate to exact rationals (one symptom of its defect).  counts never
    include the zero codeword itself; a weight-0 entry, possible only when
    m = 2h, counts additional messages predicted to hit the zero codeword.
    """

    source: str
    m: int
    h: int
    n: int
    counts: dict
    hypothesis: str


@dataclass
class VerificationReport:
    m: int
    h: int
    variant: str
    source: str
    status: str
    n: int
    k: int
    d_min: int
    counts: dict[int, int]
    details: list[tuple[int, object, int]] = field(default_factory=list)
    moment_check: str = "n/a"
    ss_ratio: Fraction | None = None
    ss_suitable: bool | None = None
    informational: bool = False
    note: str = ""


def _validate_params(m: int, h: int) -> None:
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"m must be an integer >= 2, got {m!r}")
    if not isinstance(h, int) or not 1 <= h < m or m % h:
        raise ValueError(f"h={h!r} must be a positive proper divisor of m={m}")


def _eps(m: int, h: int) -> int:
    return -1 if ((m // 2) // h) % 2 else 1


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise RuntimeError(f"table arithmetic: {num} is not divisible by {den}")
    return q


def _merge(rows: Iterable[tuple[int, object]]) -> dict:
    out: dict = {}
    for w, a in rows:
        if a < 0:
            raise RuntimeError(f"table arithmetic: negative multiplicity {a} at weight {w}")
        if a:
            out[w] = out.get(w, 0) + a
    return dict(sorted(out.items()))


def _pow2(exp: int):
    """2^exp as int, or an exact Fraction when exp < 0 (T2-as-printed only)."""
    return 1 << exp if exp >= 0 else Fraction(1, 1 << -exp)


def predict_distribution(m: int, h: int, source: str) -> TheoremPrediction:
    """Evaluate the named table for (m, h); Inapplicable when its hypothesis fails."""
    _validate_params(m, h)
    if source not in SOURCES:
        raise ValueError(f"unknown source {source!r}; expected one of {SOURCES}")
    mh = m // h

    if source in (T1, T2, T2C):
        if mh % 2 == 0:
            raise Inapplicable(f"{source} needs m/h odd; m={m}, h={h} gives m/h={mh}")
        w_mid = 1 << (m - 2)
        spread = 1 << ((m + h - 4) // 2)
        a_mid = (1 << m) - 1 - (1 << (m - h))
        half = 1 << (m - h - 1)
        if source == T1:
            n = (1 << (m - 1)) - 1
            dev = 1 << ((m - h - 2) // 2)
            rows = [(w_mid - spread, half + dev), (w_mid, a_mid), (w_mid + spread, half - dev)]
            hyp = "m/h odd, trace-0 set"
        elif source == T2:
            n = 1 << (m - 1)
            dev = _pow2((m - h - 4) // 2)
            rows = [(w_mid - spread, half - dev), (w_mid, a_mid), (w_mid + spread, half + dev)]
            hyp = "m/h odd, trace-1 set (as printed; fails the second power moment)"
        else:
            n = 1 << (m - 1)
            dev = 1 << ((m - h - 2) // 2)
            rows = [(w_mid - spread, half - dev), (w_mid, a_mid), (w_mid + spread, half + dev)]
            hyp = "m/h odd, trace-1 set (moment-corrected)"
        return TheoremPrediction(source, m, h, n, _merge(rows), hyp)

    if mh % 2:
        raise Inapplicable(f"{source} needs m/h even; m={m}, h={h} gives m/h={mh}")
    e = m // 2
    eps = _eps(m, h)
    den = (1 << h) + 1

    if source in (T3, T4):
        if mh == 2:
            raise Inapplicable(f"{source} needs m/h > 2; m={m}, h={h} gives m/h=2")
        w1 = (1 << (m - 2)) + eps * (1 << (e + h - 1))
        w2 = (1 << (m - 2)) + eps * (1 << (e + h - 2))
        w3 = 1 << (m - 2)
        w4 = (1 << (m - 2)) - eps * (1 << (e - 1))
        a2 = ((1 << h) - 1) << (m - 2 * h)
        if source == T3:
            n = (1 << (m - 1)) - 1
            a1 = _exact_div((1 << (m - 2 * h - 1)) - 1 - eps * (1 << (e - h - 1)), den)
            # One published statement of this table applies the sign factor to
            # both terms of the 2^(m-2) multiplicity (and compensates in the
            # low-weight row).  That version fails the first power moment and
            # enumeration whenever the sign is negative, e.g. (6,1): it gives
            # {16: 42, 20: 2} where the code has {16: 26, 20: 18}.  The sign
            # belongs on the 2^(e-h-1) term only; the low-weight multiplicity
            # then collapses to the simple quotient below.
            a3 = (1 << (m - 1)) - ((1 << h) - 1) * (
                (1 << (m - 2 * h - 1)) + eps * (1 << (e - h - 1))
            )
            a4 = _exact_div(((1 << (m - 1)) - 1 + eps * (1 << (e - 1))) << h, den)
            hyp = "m/h even > 2, trace-0 set"
        else:
            n = 1 << (m - 1)
            a1 = _exact_div((1 << (m - 2 * h - 1)) + eps * (1 << (e - h - 1)), den)
            a3 = (
                (1 << (m - 1))
                - 1
                + eps * ((1 << h) - 1) * (1 << (e - h - 1))
                - ((1 << h) - 1) * (1 << (m - 2 * h - 1))
            )
            a4 = _exact_div(((1 << e) - eps) << (e + h - 1), den)
            hyp = "m/h even > 2, trace-1 set"
        rows = [(w1, a1), (w2, a2), (w3, a3), (w4, a4)]
        return TheoremPrediction(source, m, h, n, _merge(rows), hyp)

    # T5 / C6
    if m <= 2:
        raise Inapplicable(f"{source} needs m > 2, got m={m}")
    units = (1 << m) - 1
    w_low = (1 << (m - 1)) - eps * (1 << (e - 1))
    w_high = (1 << (m - 1)) + eps * (1 << (e + h - 1))
    a_low = _exact_div(units << h, den)
    a_high = _exact_div(units, den)
    if source == T5:
        return TheoremPrediction(
            T5, m, h, units, _merge([(w_low, a_low), (w_high, a_high)]),
            "m/h even, m > 2, all nonzero elements",
        )
    rows = [(_exact_div(w_low, den), a_low), (_exact_div(w_high, den), a_high)]
    return TheoremPrediction(
        C6, m, h, _exact_div(units, den), _merge(rows),
        "m/h even, m > 2, punctured image",
    )


def table2_as_printed(m: int, h: int) -> TheoremPrediction:
    """The verbatim odd-regime trace-1 table; see the module docstring."""
    return predict_distribution(m, h, T2)


def pless_check(dist) -> bool:
    """First two power-moment identities for a distribution of full rank.

    Accepts a WeightDistribution (dimension = its k) or a TheoremPrediction
    (dimension = its m): sum of nonzero-weight multiplicities must be
    2^dim - 1 and their weighted sum must be n * 2^(dim-1).
    """
    dim = dist.m if isinstance(dist, TheoremPrediction) else dist.k
    nz = {w: c for w, c in dist.counts.items() if w > 0}
    if sum(nz.values()) != (1 << dim) - 1:
        return False
    return sum(w * c for w, c in nz.items()) == dist.n * (1 << (dim - 1))


def secret_sharing_ratio(dist) -> tuple[Fraction, bool]:
    """(w_min / w_max, ratio > 1/2) over nonzero weights, exact arithmetic.

    Ratio above 1/2 means every nonzero codeword of the dual's complement
    setup is minimal, the regime where the derived secret-sharing scheme
    has clean access structure; at or below 1/2 the code is reported as
    unsuitable.
    """
    nz = [w for w, c in dist.counts.items() if w > 0 and c > 0]
    if not nz:
        raise ValueError("distribution has no nonzero weights")
    ratio = Fraction(min(nz), max(nz))
    return ratio, ratio > Fraction(1, 2)


def verify(
    pred: TheoremPrediction,
    dist: code_mod.WeightDistribution,
    variant: str = "",
) -> VerificationReport:
    """Compare a predicted table with an enumerated distribution, exactly.

    The prediction covers nonzero messages; the implicit zero codeword is
    added to its weight-0 entry before comparison.  Multiplicities are
    message-indexed on both sides.
    """
    if pred.n != dist.n:
        raise ValueError(f"parameter mismatch: predicted n={pred.n}, enumerated n={dist.n}")
    if dist.total != 1 << pred.m:
        raise ValueError(
            f"parameter mismatch: distribution covers {dist.total} messages, "
            f"expected 2^{pred.m}"
        )
    expected = dict(pred.counts)
    expected[0] = expected.get(0, 0) + 1
    keys = sorted(set(expected) | set(dist.counts))
    details = [(w, expected.get(w, 0), dist.counts.get(w, 0)) for w in keys]
    status = MATCH if all(e == a for _, e, a in details) else MISMATCH

    if dist.k == pred.m:
        moment = "pass" if pless_check(dist) else "fail"
    else:
        moment = f"skipped (rank {dist.k} < m={pred.m})"
    note = "" if dist.k == pred.m else (
        f"rank collapse: enumerated k={dist.k}, table assumes {pred.m}"
    )
    ratio, suitable = secret_sharing_ratio(dist)
    return VerificationReport(
        m=pred.m,
        h=pred.h,
        variant=variant,
        source=pred.source,
        status=status,
        n=dist.n,
        k=dist.k,
        d_min=dist.d_min,
        counts=dist.nonzero,
        details=details,
        moment_check=moment,
        ss_ratio=ratio,
        ss_suitable=suitable,
        note=note,
    )


def _proper_divisors(m: int) -> list[int]:
    return [h for h in range(1, m) if m % h == 0]


def _inapplicable_report(m, h, variant, dist, reason) -> VerificationReport:
    ratio, suitable = secret_sharing_ratio(dist)
    moment = "pass" if pless_check(dist) else (
        f"skipped (rank {dist.k} < m={m})" if dist.k < m else "fail"
    )
    return VerificationReport(
        m=m,
        h=h,
        variant=variant,
        source="",
        status=INAPPLICABLE,
        n=dist.n,
        k=dist.k,
        d_min=dist.d_min,
        counts=dist.nonzero,
        moment_check=moment,
        ss_ratio=ratio,
        ss_suitable=suitable,
        note=reason,
    )


def sweep(
    ms: Iterable[int],
    budget: int | None = None,
    moduli: dict[int, int] | None = None,
) -> list[VerificationReport]:
    """Construct, enumerate and verify every variant for every (m, h).

    For each m in ms and each proper divisor h: the trace-0, trace-1 and
    full codes are built with the power-map columns, plus the punctured
    code when it exists (m/h even, m > 2).  Each is checked against the
    applicable table; cases with no applicable table are reported as
    inapplicable, and the trace-1 odd cases additionally carry an
    informational row adjudicating the table as printed.  Failures are
    collected in the reports, not raised.
    """
    reports: list[VerificationReport] = []
    for m in sorted(set(int(m) for m in ms)):
        ctx = gf2m.build_field(m, (moduli or {}).get(m))
        sets = {
            code_mod.D0: code_mod.defining_set(ctx, code_mod.D0),
            code_mod.D1: code_mod.defining_set(ctx, code_mod.D1),
            code_mod.FULL_STAR: code_mod.defining_set(ctx, code_mod.FULL_STAR),
        }
        for h in _proper_divisors(m):
            mh = m // h
            cases: list[tuple[str, code_mod.LinearCode]] = [
                (v, code_mod.build_code(ctx, h, sets[v]))
                for v in (code_mod.D0, code_mod.D1, code_mod.FULL_STAR)
            ]
            if mh % 2 == 0 and m > 2:
                cases.append((code_mod.PUNCTURED_IMAGE, code_mod.punctured_code(ctx, h)))
            for variant, lc in cases:
                dist = code_mod.weight_distribution(lc, budget)
                source = _applicable_source(variant, mh, m)
                if source is None:
                    reports.append(
                        _inapplicable_report(m, h, variant, dist, _gap_reason(variant, mh))
                    )
                    continue
                pred = predict_distribution(m, h, source)
                reports.append(verify(pred, dist, variant))
                if variant == code_mod.D1 and mh % 2:
                    adj = verify(table2_as_printed(m, h), dist, variant)
                    adj.informational = True
                    adj.note = "as-printed adjudication; expected to fail"
                    reports.append(adj)
    return reports


def _applicable_source(variant: str, mh: int, m: int) -> str | None:
    if variant == code_mod.D0:
        return T1 if mh % 2 else (T3 if mh > 2 else None)
    if variant == code_mod.D1:
        return T2C if mh % 2 else (T4 if mh > 2 else None)
    if variant == code_mod.FULL_STAR:
        return T5 if mh % 2 == 0 and m > 2 else None
    return C6 if mh % 2 == 0 and m > 2 else None


def _gap_reason(variant: str, mh: int) -> str:
    if variant == code_mod.FULL_STAR:
        return "m/h odd: single-weight regime, no table applies"
    if mh == 2:
        return "m/h = 2: no table covers the trace-split codes here"
    return "no table applies"


def format_sweep(reports: list[VerificationReport]) -> str:
    """Deterministic text report: one line per case, then adjudication and
    summary comment blocks.  Line fields: m h variant status n k d w:count...
    """
    lines = []
    for r in reports:
        if r.informational:
            continue
        weights = " ".join(f"{w}:{c}" for w, c in sorted(r.counts.items()))
        lines.append(f"{r.m} {r.h} {r.variant} {r.status} {r.n} {r.k} {r.d_min} {weights}")

    adj = [r for r in reports if r.informational]
    if adj:
        lines.append("# table2-as-printed adjudication (expected mismatches):")
        for r in adj:
            pred = table2_as_printed(r.m, r.h)
            moment = "pass" if pless_check(pred) else "fail"
            expected = " ".join(f"{w}:{c}" for w, c in pred.counts.items())
            lines.append(
                f"# {r.m} {r.h} {r.variant} {r.status} moment={moment} expected {expected}"
            )
        failures = sum(1 for r in adj if r.status == MISMATCH)
        corrected = [
            r for r in reports
            if not r.informational and r.source == T2C and r.variant == code_mod.D1
        ]
        matched = sum(1 for r in corrected if r.status == MATCH)
        lines.append(
            f"# table2-as-printed mismatched enumeration in {failures}/{len(adj)} odd "
            f"cases; moment-corrected variant matched in {matched}/{len(corrected)}"
        )

    main = [r for r in reports if not r.informational]
    lines.append(
        "# summary cases={} match={} mismatch={} inapplicable={}".format(
            len(main),
            sum(1 for r in main if r.status == MATCH),
            sum(1 for r in main if r.status == MISMATCH),
            sum(1 for r in main if r.status == INAPPLICABLE),
        )
    )
    return "\n".join(lines) + "\n"
