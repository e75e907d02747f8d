"""Formula evaluators and verification sweeps for the Jaco-graph identities.

Each check pits a recursive or closed formula against an independent
recomputation on the constructed graphs and returns an exact-integer record;
sweeps aggregate records into a machine-readable report.  All comparisons
are exact (integer equality or <=), never approximate.

Check ids
---------
``thm21``    growth recursion for irr_t:  value of J*_{n+1} from J*_n
``thm31``    growth recursion for firr_t: value of J*_{n+1} from J*_n
``thm32``    disjoint union of J*_n and J*_m: equality 4x for n = m, an
             upper bound with a correction sum for n > m
``cor31``    same union statement for firr_t
``lemma31``  joining two Jaco graphs by an edge between their first vertices
             leaves firr_t at the union value (both endpoint weights stay 1)
``thm33``    printed delta formula for joining at an arbitrary vertex v_i,
             i >= 2; evaluated literally and compared per instance against
             the exact recomputation, which is the ground truth

For ``thm32``/``cor31`` with n > m the cut parameter of the correction sum
is evaluated under two documented readings, the maximum degree of J*_m and
its prime Jaconian index, and the record keeps both; the instance counts as
matched when at least one reading upholds the bound.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Any

from .fibonacci import fib
from .graphs import degree_sequence, disjoint_union, edge_joint
from .irregularity import firr_t, irr_t, pair_sum_naive
from .jaco import JacoProfile, build_profile, prime_jaconian_index, underlying_degrees, underlying_graph

__all__ = [
    "THEOREM_IDS",
    "CheckRecord",
    "VerifyReport",
    "thm21_rhs",
    "thm31_rhs",
    "thm32_check",
    "cor31_check",
    "lemma31_check",
    "thm33_exact",
    "thm33_literal",
    "thm33_check",
    "verify_sweep",
]

THEOREM_IDS = ("thm21", "thm31", "thm32", "cor31", "lemma31", "thm33")

RELATION_EQUALITY = "equality"
RELATION_UPPER_BOUND = "upper-bound"


@dataclass(frozen=True)
class CheckRecord:
    """One verified instance: parameters, oracle value, formula value, verdict."""

    theorem: str
    params: dict[str, int]
    relation: str
    lhs: int
    rhs: int
    matched: bool
    detail: dict[str, Any] | None = None

    def as_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "theorem": self.theorem,
            "params": dict(self.params),
            "relation": self.relation,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "matched": self.matched,
        }
        if self.detail is not None:
            out["detail"] = dict(self.detail)
        return out


def _record_sort_key(rec: CheckRecord) -> tuple:
    p = rec.params
    return (rec.theorem, p.get("n", 0), p.get("m", -1), p.get("i", -1))


@dataclass
class VerifyReport:
    """Accumulated check records plus summary counts, sorted by parameters."""

    records: list[CheckRecord] = field(default_factory=list)

    def add(self, record: CheckRecord) -> None:
        self.records.append(record)

    def finalize(self) -> "VerifyReport":
        self.records.sort(key=_record_sort_key)
        return self

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def mismatch_count(self) -> int:
        return sum(1 for r in self.records if not r.matched)

    @property
    def all_matched(self) -> bool:
        return self.mismatch_count == 0

    def by_theorem(self) -> dict[str, tuple[int, int]]:
        """theorem id -> (checks, mismatches), in record order."""
        out: dict[str, tuple[int, int]] = {}
        for rec in self.records:
            total, bad = out.get(rec.theorem, (0, 0))
            out[rec.theorem] = (total + 1, bad + (0 if rec.matched else 1))
        return out

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "checks": [rec.as_dict() for rec in self.records],
            "summary": {
                "total": self.total,
                "mismatched": self.mismatch_count,
                "by_theorem": {
                    tid: {"total": tot, "mismatched": bad}
                    for tid, (tot, bad) in sorted(self.by_theorem().items())
                },
            },
            "all_matched": self.all_matched,
        }

    def summary_text(self, mismatch_cap: int = 20) -> str:
        lines = []
        for tid, (total, bad) in sorted(self.by_theorem().items()):
            lines.append(f"{tid}: {total} checks, {bad} mismatches")
        shown = 0
        for rec in self.records:
            if rec.matched:
                continue
            if shown == mismatch_cap:
                lines.append(f"  ... {self.mismatch_count - shown} more mismatches")
                break
            params = " ".join(f"{k}={v}" for k, v in rec.params.items())
            lines.append(
                f"  mismatch {rec.theorem} {params}: lhs={rec.lhs} rhs={rec.rhs} ({rec.relation})"
            )
            shown += 1
        verdict = "PASS" if self.all_matched else "FAIL"
        lines.append(f"overall: {verdict} ({self.total} checks, {self.mismatch_count} mismatches)")
        return "\n".join(lines) + "\n"


def _profile_for(n_needed: int, profile: JacoProfile | None) -> JacoProfile:
    if profile is None:
        return build_profile(n_needed)
    if profile.n_max < n_needed:
        raise ValueError(f"profile covers 1..{profile.n_max}, need {n_needed}")
    return profile


def thm21_rhs(n: int, profile: JacoProfile | None = None) -> int:
    """Predicted irr_t of J*_{n+1} from the state of J*_n.

    With k the prime Jaconian index of J*_n, vertex n+1 arrives with degree
    n - k and bumps the degrees of exactly v_{k+1}..v_n by one.  Each bumped
    vertex shifts its pair differences against the untouched block v_1..v_k
    by +1 (old degree at most its own) or -1 (strictly larger), and the new
    vertex contributes its own pair sum against the updated degrees.
    """
    if n < 2:
        raise ValueError(f"thm21_rhs needs n >= 2, got {n}")
    prof = _profile_for(n + 1, profile)
    old = underlying_degrees(n, prof)
    new = underlying_degrees(n + 1, prof)
    k = prime_jaconian_index(n, prof)
    head = sorted(old[:k])
    count_term = 0
    for j in range(k, n):
        at_most = bisect_right(head, old[j])
        count_term += at_most - (k - at_most)
    arrival = n - k
    new_vertex = sum(abs(arrival - d) for d in new[:n])
    return irr_t(old).value + count_term + new_vertex


def thm31_rhs(n: int, profile: JacoProfile | None = None) -> int:
    """Predicted firr_t of J*_{n+1} from the state of J*_n.

    Same vertex-arrival structure as :func:`thm21_rhs`, in weight space:
    the new vertex's pair sum uses weight f_{n-k}; each bumped vertex shifts
    pairs against the untouched block by +-(f_{d+1} - f_d); and pairs of two
    bumped vertices move by the change between consecutive weight gaps,
    which is non-negative for degrees >= 1, so its absolute value is exact.
    """
    if n < 2:
        raise ValueError(f"thm31_rhs needs n >= 2, got {n}")
    prof = _profile_for(n + 1, profile)
    old = underlying_degrees(n, prof)
    new = underlying_degrees(n + 1, prof)
    k = prime_jaconian_index(n, prof)
    arrival_weight = fib(n - k)
    new_vertex = sum(abs(arrival_weight - fib(d)) for d in new[:n])
    head = sorted(old[:k])
    cross = 0
    for i in range(k, n):
        below = bisect_left(head, new[i])  # head degrees strictly under the bumped degree
        gap = fib(old[i] + 1) - fib(old[i])
        cross += (below - (k - below)) * gap
    tail = old[k:n]
    bumped_pairs = 0
    for a in range(len(tail)):
        fa, fa1 = fib(tail[a]), fib(tail[a] + 1)
        for b in range(a + 1, len(tail)):
            fb, fb1 = fib(tail[b]), fib(tail[b] + 1)
            bumped_pairs += abs(abs(fa - fb) - abs(fa1 - fb1))
    return firr_t(old).value + new_vertex + cross + bumped_pairs


def _union_check(
    theorem: str,
    n: int,
    m: int,
    profile: JacoProfile | None,
    fibonacci_weights: bool,
) -> CheckRecord:
    if m < 1:
        raise ValueError(f"{theorem} needs m >= 1, got {m}")
    if n < m:
        raise ValueError(f"{theorem} needs n >= m; swap arguments ({n}, {m})")
    prof = _profile_for(n, profile)
    dn = underlying_degrees(n, prof)
    dm = underlying_degrees(m, prof)
    metric = firr_t if fibonacci_weights else irr_t
    lhs = metric(dn + dm).value
    if n == m:
        rhs = 4 * metric(dn).value
        return CheckRecord(
            theorem=theorem,
            params={"n": n, "m": m},
            relation=RELATION_EQUALITY,
            lhs=lhs,
            rhs=rhs,
            matched=lhs == rhs,
        )
    base = 2 * (metric(dn).value + metric(dm).value)
    weight = fib if fibonacci_weights else (lambda d: d)
    cuts: dict[str, int | None] = {"degree": max(dm)}
    cuts["index"] = prime_jaconian_index(m, prof) if m >= 2 else None
    corr_by_cut: dict[int, int] = {}
    detail: dict[str, Any] = {}
    holds_any = False
    rhs_primary = 0
    for reading in ("degree", "index"):
        cut = cuts[reading]
        if cut is None:
            detail[f"rhs_{reading}_reading"] = None
            detail[f"holds_{reading}_reading"] = None
            continue
        if cut not in corr_by_cut:
            corr = 0
            for i in range(cut, n):
                wi = weight(dn[i])
                for j in range(cut, m):
                    corr += abs(wi - weight(dm[j]))
            corr_by_cut[cut] = corr
        rhs_reading = base + corr_by_cut[cut]
        holds = lhs <= rhs_reading
        detail[f"rhs_{reading}_reading"] = rhs_reading
        detail[f"holds_{reading}_reading"] = holds
        holds_any = holds_any or holds
        if reading == "degree":
            rhs_primary = rhs_reading
    return CheckRecord(
        theorem=theorem,
        params={"n": n, "m": m},
        relation=RELATION_UPPER_BOUND,
        lhs=lhs,
        rhs=rhs_primary,
        matched=holds_any,
        detail=detail,
    )


def thm32_check(n: int, m: int, profile: JacoProfile | None = None) -> CheckRecord:
    """Union statement for irr_t: lhs computed on the union degree sequence.

    n = m asserts lhs = 4 * irr_t(J*_n); n > m asserts the upper bound with
    the correction sum over vertices beyond the cut in both copies.
    """
    return _union_check("thm32", n, m, profile, fibonacci_weights=False)


def cor31_check(n: int, m: int, profile: JacoProfile | None = None) -> CheckRecord:
    """Union statement for firr_t, same shape as :func:`thm32_check`."""
    return _union_check("cor31", n, m, profile, fibonacci_weights=True)


def lemma31_check(n: int, m: int, profile: JacoProfile | None = None) -> CheckRecord:
    """firr_t is unchanged by joining the two first vertices, n, m >= 2.

    Both first vertices have degree 1, and f_1 = f_2, so raising both to
    degree 2 moves no weight.  Both sides are recomputed from actually
    constructed graphs.
    """
    if n < 2 or m < 2:
        raise ValueError(f"lemma31 needs n, m >= 2, got ({n}, {m})")
    prof = _profile_for(max(n, m), profile)
    gn = underlying_graph(n, prof)
    gm = underlying_graph(m, prof)
    lhs = firr_t(degree_sequence(disjoint_union(gn, gm))).value
    rhs = firr_t(degree_sequence(edge_joint(gn, 1, gm, 1))).value
    return CheckRecord(
        theorem="lemma31",
        params={"n": n, "m": m},
        relation=RELATION_EQUALITY,
        lhs=lhs,
        rhs=rhs,
        matched=lhs == rhs,
    )


def _check_thm33_args(n: int, m: int, i: int) -> None:
    if n < 3:
        raise ValueError(f"thm33 needs n >= 3, got {n}")
    if m < 1:
        raise ValueError(f"thm33 needs m >= 1, got {m}")
    if not 2 <= i <= n:
        raise ValueError(f"thm33 needs 2 <= i <= n, got i={i} (i = 1 is the first-vertex joint)")


def thm33_exact(n: int, m: int, i: int, profile: JacoProfile | None = None) -> int:
    """Ground truth: firr_t of the graph joined at v_i and the first vertex
    of the second copy, recomputed by the pairwise oracle on the joined graph."""
    _check_thm33_args(n, m, i)
    prof = _profile_for(max(n, m), profile)
    joined = edge_joint(underlying_graph(n, prof), i, underlying_graph(m, prof), 1)
    return pair_sum_naive([fib(d) for d in degree_sequence(joined)])


def thm33_literal(n: int, m: int, i: int, profile: JacoProfile | None = None) -> int:
    """The printed delta formula, evaluated literally under the documented
    reading: the pivot weight is taken at the pre-join degree of v_i, the
    +/- partitions run over the first copy without v_i and over the whole
    second copy, and each side contributes |pivot - weight| with sign + for
    weights at most the pivot and - for strictly larger weights."""
    _check_thm33_args(n, m, i)
    prof = _profile_for(max(n, m), profile)
    dn = underlying_degrees(n, prof)
    dm = underlying_degrees(m, prof)
    wn = [fib(d) for d in dn]
    wm = [fib(d) for d in dm]
    pivot = wn[i - 1]
    base = firr_t(dn).value + firr_t(dm).value
    cross = 0
    for wa in wn:
        for wb in wm:
            cross += abs(wa - wb)
    side_sum = 0
    for idx, w in enumerate(wn):
        if idx == i - 1:
            continue
        side_sum += pivot - w if w <= pivot else -(w - pivot)
    for w in wm:
        side_sum += pivot - w if w <= pivot else -(w - pivot)
    return base + cross + side_sum


def thm33_check(n: int, m: int, i: int, profile: JacoProfile | None = None) -> CheckRecord:
    """Record whether the literal formula agrees with the exact recomputation."""
    prof = _profile_for(max(n, m), profile)
    lhs = thm33_exact(n, m, i, prof)
    rhs = thm33_literal(n, m, i, prof)
    return CheckRecord(
        theorem="thm33",
        params={"n": n, "m": m, "i": i},
        relation=RELATION_EQUALITY,
        lhs=lhs,
        rhs=rhs,
        matched=lhs == rhs,
    )


def _check_range(rng: tuple[int, int], name: str) -> tuple[int, int]:
    lo, hi = rng
    if lo > hi or lo < 1:
        raise ValueError(f"{name} range must satisfy 1 <= lo <= hi, got {lo}..{hi}")
    return lo, hi


def verify_sweep(
    theorems: list[str] | tuple[str, ...],
    n_range: tuple[int, int],
    m_range: tuple[int, int] | None = None,
    i_range: tuple[int, int] | None = None,
) -> VerifyReport:
    """Run every requested check over the given inclusive ranges.

    Instances outside a check's domain are skipped (for example thm21 skips
    n < 2 and thm32 skips n < m); for thm33 the join vertex runs over
    ``i_range`` clipped to [2, n], the whole interval when not given.
    Records are emitted sorted by (theorem, n, m, i).
    """
    ids = []
    for tid in theorems:
        if tid not in THEOREM_IDS:
            raise ValueError(f"unknown check id {tid!r}; valid: {', '.join(THEOREM_IDS)}")
        if tid not in ids:
            ids.append(tid)
    if not ids:
        raise ValueError("no check ids given")
    n_lo, n_hi = _check_range(n_range, "n")
    m_lo, m_hi = _check_range(m_range if m_range is not None else n_range, "m")
    if i_range is not None:
        _check_range(i_range, "i")

    needs_successor = any(tid in ("thm21", "thm31") for tid in ids)
    profile = build_profile(max(n_hi + (1 if needs_successor else 0), m_hi))
    report = VerifyReport()

    for tid in ids:
        if tid == "thm21":
            for n in range(max(2, n_lo), n_hi + 1):
                lhs = pair_sum_naive(list(underlying_degrees(n + 1, profile)))
                rhs = thm21_rhs(n, profile)
                report.add(
                    CheckRecord("thm21", {"n": n}, RELATION_EQUALITY, lhs, rhs, lhs == rhs)
                )
        elif tid == "thm31":
            for n in range(max(2, n_lo), n_hi + 1):
                lhs = pair_sum_naive([fib(d) for d in underlying_degrees(n + 1, profile)])
                rhs = thm31_rhs(n, profile)
                report.add(
                    CheckRecord("thm31", {"n": n}, RELATION_EQUALITY, lhs, rhs, lhs == rhs)
                )
        elif tid in ("thm32", "cor31"):
            check = thm32_check if tid == "thm32" else cor31_check
            for n in range(n_lo, n_hi + 1):
                for m in range(m_lo, min(m_hi, n) + 1):
                    report.add(check(n, m, profile))
        elif tid == "lemma31":
            for n in range(max(2, n_lo), n_hi + 1):
                for m in range(max(2, m_lo), m_hi + 1):
                    report.add(lemma31_check(n, m, profile))
        elif tid == "thm33":
            for n in range(max(3, n_lo), n_hi + 1):
                i_lo, i_hi = (2, n) if i_range is None else i_range
                i_lo, i_hi = max(2, i_lo), min(n, i_hi)
                for m in range(max(1, m_lo), m_hi + 1):
                    for i in range(i_lo, i_hi + 1):
                        report.add(thm33_check(n, m, i, profile))
    return report.finalize()
