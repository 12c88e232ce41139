"""Rate-memory tradeoff curves: exact closed forms, envelopes, CSV emission.

Two families of straight lines are proven exact for large caches. When most
files have a dedicated requester (2N >= K+1, N >= 2) the segment

    R(M) = (KN-1)/(K(N-1)) - M/(N-1)      on [M_A, N(K-1)/K]

is exact, where M_A is the coded-placement scheme's memory point. When files
are few (2N <= K+1, N >= 2) the exact segment is

    R(M) = (K^2+K-2)/(K(K-1)) - (K+1)M/(N(K-1))   on [N(K-2)/K, N(K-1)/K].

At 2N = K+1 the two formulas coincide. Beyond N(K-1)/K the classical
R(M) = 1 - M/N takes over; for a single file the exact curve is simply
1 - M. Everything is carried as exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .baselines import rate_chen, yu_point
from .coded_placement import scheme_point
from .errors import DegenerateInput, OutOfRange, OutsideCharacterizedRegion

Point = tuple[Fraction, Fraction]


def case1_applies(n: int, k: int) -> bool:
    """Most users want distinct files: N >= ceil((K+1)/2), N >= 2."""
    return k >= 2 and n >= 2 and 2 * n >= k + 1 and n <= k


def case2_applies(n: int, k: int) -> bool:
    """Few files regime: 2N - 1 <= K, N >= 2."""
    return n >= 2 and 2 * n <= k + 1


def case1_line(n: int, k: int) -> tuple[Fraction, Fraction]:
    """(intercept, slope) of the exact segment for the many-files regime."""
    return Fraction(k * n - 1, k * (n - 1)), -Fraction(1, n - 1)


def case2_line(n: int, k: int) -> tuple[Fraction, Fraction]:
    return Fraction(k * k + k - 2, k * (k - 1)), -Fraction(k + 1, n * (k - 1))


@dataclass(frozen=True)
class Segment:
    m_lo: Fraction
    m_hi: Fraction
    intercept: Fraction
    slope: Fraction
    provenance: str

    def value(self, m: Fraction) -> Fraction:
        return self.intercept + self.slope * m


@dataclass(frozen=True)
class TradeoffCurve:
    """Contiguous convex non-increasing piecewise-linear segments."""

    segments: tuple[Segment, ...]
    vertices: tuple[tuple[Fraction, Fraction, str], ...] = ()

    def __post_init__(self):
        segs = self.segments
        for seg in segs:
            if not seg.m_lo < seg.m_hi:
                raise DegenerateInput(f"empty segment [{seg.m_lo}, {seg.m_hi}]")
            if seg.slope > 0:
                raise DegenerateInput("rate must be non-increasing in memory")
        for left, right in zip(segs, segs[1:]):
            if left.m_hi != right.m_lo:
                raise DegenerateInput("segments not contiguous")
            if left.value(left.m_hi) != right.value(right.m_lo):
                raise DegenerateInput("segments disagree at a junction")
            if left.slope > right.slope:
                raise DegenerateInput("curve is not convex")

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return self.segments[0].m_lo, self.segments[-1].m_hi

    def evaluate(self, m) -> Fraction:
        m = Fraction(m)
        lo, hi = self.domain
        if not lo <= m <= hi:
            raise OutOfRange(f"M={m} outside curve domain [{lo}, {hi}]")
        for seg in self.segments:
            if m <= seg.m_hi:
                return seg.value(m)
        raise AssertionError("unreachable")

    def segment_at(self, m: Fraction) -> Segment:
        for seg in self.segments:
            if seg.m_lo <= m < seg.m_hi:
                return seg
        return self.segments[-1]

    def vertex_tag(self, m: Fraction) -> str | None:
        for vm, _, tag in self.vertices:
            if vm == m and tag:
                return tag
        return None


def _cross(a: Point, b: Point, c: Point) -> Fraction:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def lower_envelope(points: Sequence[Point],
                   labels: Sequence[str] | None = None) -> TradeoffCurve:
    """Lower convex hull of (M, R) points, exact rational arithmetic.

    Points strictly above a chord between neighbours are dropped; collinear
    interior points are merged into one segment, so consecutive segment
    slopes strictly increase.
    """
    pts = [(Fraction(m), Fraction(r)) for m, r in points]
    tags = list(labels) if labels is not None else [""] * len(pts)
    if labels is not None and len(tags) != len(pts):
        raise DegenerateInput("labels and points differ in length")
    best: dict[Fraction, tuple[Fraction, str]] = {}
    for (m, r), tag in zip(pts, tags):
        if m not in best or r < best[m][0]:
            best[m] = (r, tag)
        elif r == best[m][0] and tag and tag not in best[m][1]:
            joined = f"{best[m][1]}+{tag}" if best[m][1] else tag
            best[m] = (r, joined)
    if len(best) < 2:
        raise DegenerateInput("need at least two distinct memory values")

    ordered = sorted((m, r, tag) for m, (r, tag) in best.items())
    hull: list[tuple[Fraction, Fraction, str]] = []
    for m, r, tag in ordered:
        while len(hull) >= 2 and _cross(hull[-2][:2], hull[-1][:2], (m, r)) <= 0:
            hull.pop()
        hull.append((m, r, tag))

    segments = []
    for (m0, r0, _), (m1, r1, _) in zip(hull, hull[1:]):
        slope = (r1 - r0) / (m1 - m0)
        if slope > 0:
            raise DegenerateInput("points do not describe a non-increasing tradeoff")
        segments.append(Segment(m0, m1, r0 - slope * m0, slope, "memory-sharing"))
    return TradeoffCurve(tuple(segments), tuple(hull))


def _split_curve(curve: TradeoffCurve, cuts: Iterable[Fraction],
                 cut_tags: dict[Fraction, str]) -> TradeoffCurve:
    lo, hi = curve.domain
    interior = sorted({c for c in cuts if lo < c < hi})
    segments = []
    for seg in curve.segments:
        inner = [c for c in interior if seg.m_lo < c < seg.m_hi]
        edges = [seg.m_lo] + inner + [seg.m_hi]
        for a, b in zip(edges, edges[1:]):
            segments.append(Segment(a, b, seg.intercept, seg.slope, seg.provenance))
    vertices = {(m, r): tag for m, r, tag in curve.vertices}
    for c in interior:
        key = (c, curve.evaluate(c))
        extra = cut_tags.get(c, "")
        old = vertices.get(key, "")
        if extra and extra not in old:
            vertices[key] = f"{old}+{extra}" if old else extra
        else:
            vertices.setdefault(key, old)
    ordered = tuple(sorted((m, r, tag) for (m, r), tag in vertices.items()))
    return TradeoffCurve(tuple(segments), ordered)


def exact_regions(n: int, k: int) -> list[Segment]:
    """The memory regions where the exact tradeoff is known, with formulas."""
    if not 1 <= n <= k:
        raise OutOfRange(f"need 1 <= N <= K, got ({n}, {k})")
    regions = []
    man_m = Fraction(n * (k - 1), k)
    if n == 1:
        if k >= 2:
            lo = Fraction(max(0, k - 2), k)
            if lo < man_m:
                regions.append(Segment(lo, man_m, Fraction(1), Fraction(-1), "yu"))
    else:
        if case1_applies(n, k):
            m_a, _ = scheme_point(n, k)
            intercept, slope = case1_line(n, k)
            regions.append(Segment(m_a, man_m, intercept, slope, "theorem-case1"))
        if case2_applies(n, k):
            intercept, slope = case2_line(n, k)
            regions.append(Segment(Fraction(n * (k - 2), k), man_m,
                                   intercept, slope, "theorem-case2"))
    if man_m < n:
        regions.append(Segment(man_m, Fraction(n), Fraction(1), -Fraction(1, n), "man"))
    return regions


def exact_tradeoff(n: int, k: int, memory) -> Fraction:
    """R*(M) where it is characterized; clamped at 0 for M >= N."""
    m = Fraction(memory)
    if m >= n:
        return Fraction(0)
    if m < 0:
        raise OutOfRange("memory cannot be negative")
    values = [reg.value(m) for reg in exact_regions(n, k)
              if reg.m_lo <= m <= reg.m_hi]
    if not values:
        raise OutsideCharacterizedRegion(
            f"M={m} below the characterized region for ({n}, {k})")
    return min(values)


def _yu_chord(n: int, k: int, r: int) -> tuple[Fraction, Fraction]:
    (m0, r0), (m1, r1) = yu_point(n, k, r), yu_point(n, k, r + 1)
    slope = (r1 - r0) / (m1 - m0)
    return r0 - slope * m0, slope


def _matches_yu_envelope(n: int, k: int, seg: Segment) -> bool:
    for r in range(k):
        lo, hi = Fraction(n * r, k), Fraction(n * (r + 1), k)
        if hi <= seg.m_lo or lo >= seg.m_hi:
            continue
        if _yu_chord(n, k, r) != (seg.intercept, seg.slope):
            return False
    return True


def assemble_known_curve(n: int, k: int) -> TradeoffCurve:
    """Best known achievable curve from the assembled corner points.

    Sources: the full-library corner and the coded-delivery corner of the
    N - NM line, every uncoded-prefetching corner, the coded-placement
    scheme's point where it applies, and full caching at (N, 0).
    """
    if not 1 <= n <= k or k < 2:
        raise OutOfRange(f"need 1 <= N <= K and K >= 2, got ({n}, {k})")
    points = [(Fraction(0), Fraction(n)), (Fraction(1, k), rate_chen(n, k, Fraction(1, k)))]
    labels = ["chen-left", "chen-corner"]
    for r in range(1, k + 1):
        points.append(yu_point(n, k, r))
        labels.append(f"yu-r{r}")
    if case1_applies(n, k):
        points.append(scheme_point(n, k))
        labels.append("theorem-1-point")

    curve = lower_envelope(points, labels)

    man_m = Fraction(n * (k - 1), k)
    cuts: dict[Fraction, str] = {Fraction(1, k): "chen-corner", man_m: "man-corner"}
    if case1_applies(n, k):
        cuts[scheme_point(n, k)[0]] = "theorem-1-point"
    if case2_applies(n, k) or n == 1:
        cuts[Fraction(n * (k - 2), k)] = f"yu-r{k - 2}"
    curve = _split_curve(curve, cuts.keys(), cuts)

    relabeled = []
    exact = exact_regions(n, k)
    for seg in curve.segments:
        tag = None
        if seg.m_hi <= Fraction(1, k) and (seg.intercept, seg.slope) == (Fraction(n), Fraction(-n)):
            tag = "chen"
        if tag is None:
            for reg in exact:
                if reg.provenance.startswith("theorem") and reg.m_lo <= seg.m_lo \
                        and seg.m_hi <= reg.m_hi \
                        and (reg.intercept, reg.slope) == (seg.intercept, seg.slope):
                    tag = reg.provenance
                    break
        if tag is None and seg.m_lo >= man_m \
                and (seg.intercept, seg.slope) == (Fraction(1), -Fraction(1, n)):
            tag = "man"
        if tag is None and _matches_yu_envelope(n, k, seg):
            tag = "yu"
        if tag is None:
            tag = seg.provenance
        relabeled.append(Segment(seg.m_lo, seg.m_hi, seg.intercept, seg.slope, tag))
    return TradeoffCurve(tuple(relabeled), curve.vertices)


def _decimal(x: Fraction) -> str:
    return f"{float(x):.10g}"


CSV_HEADER = "M_exact,M_decimal,R_exact,R_decimal,provenance"


def emit_csv(curve: TradeoffCurve, sample_count: int) -> str:
    """CSV rows at segment endpoints plus a uniform sample grid; LF endings."""
    if sample_count < 2:
        raise OutOfRange("need at least two samples")
    lines = [CSV_HEADER]
    if curve.segments:
        lo, hi = curve.domain
        ms = {seg.m_lo for seg in curve.segments} | {hi}
        ms |= {lo + Fraction(t, sample_count - 1) * (hi - lo)
               for t in range(sample_count)}
        for m in sorted(ms):
            r = curve.evaluate(m)
            tag = curve.vertex_tag(m) or curve.segment_at(m).provenance
            lines.append(f"{m},{_decimal(m)},{r},{_decimal(r)},{tag}")
    return "\n".join(lines) + "\n"
