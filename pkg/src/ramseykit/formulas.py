"""Bound formulas and proof-chain verifiers, all in sound log2 arithmetic.

Exponential bounds are handled as LogQty values (intervals around log2).
Threshold comparisons that can be settled in integers (anything of the form
x vs (a/b)*sqrt(m) or r vs log2(m)/4) are done exactly; everything else is
three-valued interval arithmetic with automatic precision widening.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt

from .exact import (geq_scaled_sqrt, icbrt, is_perfect_cube, is_perfect_square,
                    leq_scaled_sqrt, lt_quarter_log2)
from .intervals import (DEFAULT_PRECISIONS, Indecisive, LogQty,
                        PrecisionError, RInterval, interval_to_decimals,
                        log2_int, must, resolve)
from .reports import FAIL, INFO, NOT_APPLICABLE, PASS, HypothesisReport


class DomainError(ValueError):
    """Parameters outside the domain a formula is stated for."""


def _sqrt_iv(m: int | Fraction, prec: int) -> RInterval:
    return RInterval.exact(m, prec).sqrt()


def _log2_iv(m: int | Fraction, prec: int) -> RInterval:
    if isinstance(m, Fraction):
        return log2_int(m.numerator, prec) - log2_int(m.denominator, prec)
    return log2_int(m, prec)


def _decimals(iv: RInterval) -> dict:
    lo, hi = interval_to_decimals(iv)
    return {"lo": lo, "hi": hi}


# --- classical bounds (closed formulas) --------------------------------------


def bound_erdos_szekeres(n: int, prec: int = 128) -> LogQty:
    """Upper bound 2^(2n) for the diagonal complete-graph Ramsey number."""
    if n < 1:
        raise DomainError("need n >= 1")
    return LogQty.from_exponent(2 * n, prec)


def bound_erdos_lower(n: int, prec: int = 128) -> LogQty:
    """Probabilistic lower bound 2^(n/2); only stated for n > 2."""
    if n <= 2:
        raise DomainError("lower bound requires n > 2")
    return LogQty.from_exponent(Fraction(n, 2), prec)


def bound_sudakov(m: int, prec: int = 128) -> LogQty:
    """Upper bound 2^(250*sqrt(m)) for a graph with m edges."""
    if m < 1:
        raise DomainError("need m >= 1")
    return LogQty(_sqrt_iv(m, prec).scale(250))


def bound_alon(h: int, p: int, k: int, r: int, prec: int = 128) -> LogQty:
    """Bounded-degree-coloring vs clique bound.

    (100p/ln p)^((2r-k+2)(k-1)/2) * (ln p)^a * h^r with a = 1 if k > r else 0.
    The ln-p factors are combined first, so when the net ln-p exponent is
    zero (e.g. k=2, r=1) the result is exactly (100p)^e * h^r.
    """
    if r == 0:
        raise DomainError("r = 0 is handled by the separate r=0 branch")
    if h < 1 or p < 2 or k < 2 or r < 1 or r >= h:
        raise DomainError("need h >= 1, p >= 2, k >= 2, 1 <= r < h")
    e = Fraction((2 * r - k + 2) * (k - 1), 2)
    a = 1 if k > r else 0
    exponent = _log2_iv(100 * p, prec).scale(e) + _log2_iv(h, prec).scale(r)
    lnp_power = a - e
    if lnp_power != 0:
        lnp = RInterval.exact(p, prec).log()
        exponent = exponent + lnp.log2().scale(lnp_power)
    return LogQty(exponent)


# --- corollaries --------------------------------------------------------------


def bound_corollary_edges(m1: int, m2: int,
                          precisions=DEFAULT_PRECISIONS) -> tuple[LogQty, HypothesisReport]:
    """Off-diagonal edge bound 2^(250*sqrt(max(m1,m2)))."""
    if m1 < 1 or m2 < 1:
        raise DomainError("need m1, m2 >= 1")
    m = max(m1, m2)

    def build(prec):
        report = HypothesisReport("corollary-edges")
        report.precision = prec
        report.meta = {"m1": m1, "m2": m2, "m": m}
        sqrt_m = _sqrt_iv(m, prec)
        small = m <= 3600
        if small:
            ok = leq_scaled_sqrt(4 * m, 250, 1, m)
            report.add("fallback-4m", "4m <= 250*sqrt(m) (small-m regime m <= 60^2)",
                       ok, {"4m": 4 * m, "250sqrt_m": _decimals(sqrt_m.scale(250)),
                            "exact": sqrt_m.is_exact})
            report.add("main-path", "iterated-pair path (m > 60^2)", NOT_APPLICABLE,
                       {"reason": "small-m regime active"})
        else:
            report.add("fallback-4m", "4m <= 250*sqrt(m) (small-m regime m <= 60^2)",
                       NOT_APPLICABLE, {"reason": "m > 60^2"})
            report.add("main-path", "iterated-pair path (m > 60^2)", PASS,
                       {"note": "degree peeling meets the per-alpha cap for any "
                                "graph with at most m edges"})
        return LogQty(sqrt_m.scale(250)), report

    return resolve(build, precisions)


def bound_corollary_vertices(n: int, prec: int = 128) -> LogQty:
    """Order-based bound 2^(250 * n^(1/3))."""
    if n < 1:
        raise DomainError("need n >= 1")
    if is_perfect_cube(n):
        exponent = RInterval.exact(250 * icbrt(n), prec)
    else:
        exponent = RInterval.exact(n, prec).cbrt().scale(250)
    return LogQty(exponent)


def _join_clauses(report: HypothesisReport, m: int | Fraction,
                  p: int, l: int, q: int, prec: int, prefix: str = "") -> RInterval:
    """Shared threshold clauses for K_p versus K_l + q*K_1; returns sqrt(m)."""
    sqrt_m = _sqrt_iv(m, prec)
    log_m = _log2_iv(m, prec)
    p_cap = sqrt_m.scale(27) + sqrt_m.scale(16) / log_m.cube()
    report.add(prefix + "p-cap", "p <= 27*sqrt(m) + 16*sqrt(m)/log^3(m)",
               must(RInterval.exact(p, prec).leq(p_cap), "p-cap"),
               {"p": p, "cap": _decimals(p_cap)})
    l_ok = (leq_scaled_sqrt(l, 27, 1, m) if isinstance(m, int)
            else Fraction(l) ** 2 <= 27 * 27 * m)
    report.add(prefix + "l-cap", "l <= 27*sqrt(m)", l_ok,
               {"l": l, "cap": _decimals(sqrt_m.scale(27))})
    q_cap = sqrt_m.scale(106) / log_m
    report.add(prefix + "q-cap", "q <= 2^(106*sqrt(m)/log m)",
               must(log2_int(q, prec).leq(q_cap), "q-cap"),
               {"log2_q": _decimals(log2_int(q, prec)), "cap": _decimals(q_cap)})
    return sqrt_m


def bound_corollary_join(m: int | Fraction, p: int, l: int, q: int,
                         precisions=DEFAULT_PRECISIONS) -> tuple[HypothesisReport, LogQty]:
    """Clique joined with isolated vertices: K_p versus K_l + q*K_1."""
    if m < 27:
        raise DomainError("need m >= 27")
    if p < 1 or l < 0 or q < 1:
        raise DomainError("need p >= 1, l >= 0, q >= 1")

    def build(prec):
        report = HypothesisReport("corollary-join")
        report.precision = prec
        report.meta = {"m": str(m), "p": p, "l": l, "q": q}
        sqrt_m = _join_clauses(report, m, p, l, q, prec)
        return report, LogQty(sqrt_m.scale(250))

    return resolve(build, precisions)


def bound_corollary_bipartite(p: int, q: int,
                              precisions=DEFAULT_PRECISIONS) -> tuple[HypothesisReport, LogQty]:
    """Complete bipartite target via K_p + q*K_1, with m = (p/27)^2.

    For 27 < p < 27^(3/2) the instantiated m falls below the m >= 27
    hypothesis of the join corollary; the published derivation glosses over
    this, so it is surfaced as an informational clause instead of an error.
    """
    if p <= 27:
        raise DomainError("need p > 27 so that log(p/27) is positive")
    if q < 1:
        raise DomainError("need q >= 1")
    m = Fraction(p, 27) ** 2

    def build(prec):
        report = HypothesisReport("corollary-bipartite")
        report.precision = prec
        report.meta = {"p": p, "q": q, "inner_m": str(m)}
        ratio_log = _log2_iv(Fraction(p, 27), prec)
        cap = RInterval.exact(Fraction(53 * p, 27), prec) / ratio_log
        report.add("q-cap", "q <= 2^(53p / (27*log(p/27)))",
                   must(log2_int(q, prec).leq(cap), "q-cap"),
                   {"cap": _decimals(cap)})
        report.add("inner-m-hypothesis",
                   "instantiated m = (p/27)^2 >= 27 (hypothesis of the join "
                   "corollary; needs p >= 27^(3/2))",
                   INFO, {"m": str(m), "holds": m >= 27})
        _join_clauses(report, m, p, p, q, prec, prefix="join:")
        exponent = RInterval.exact(Fraction(250 * p, 27), prec)
        return report, LogQty(exponent)

    return resolve(build, precisions)


# --- the alpha recursion -------------------------------------------------------


@dataclass
class AlphaStage:
    i: int
    alpha_exact: int | None
    alpha: RInterval
    log2_alpha: RInterval
    inv_cbrt: RInterval
    partial_sum: RInterval
    y_coef: RInterval  # Y-exponent divided by sqrt(m); starts at 196

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "alpha_exact": self.alpha_exact,
            "alpha": _decimals(self.alpha),
            "log2_alpha": _decimals(self.log2_alpha),
            "inv_cbrt_partial_sum": _decimals(self.partial_sum),
            "y_exponent_over_sqrt_m": _decimals(self.y_coef),
        }


@dataclass
class AlphaTrace:
    m: int
    stages: list[AlphaStage]
    threshold: RInterval          # log^3(m)/8
    threshold_exact: Fraction | None
    final_inv_cbrt: RInterval     # (log^3 m / 8)^(-1/3) = 2/log m
    checks: dict = field(default_factory=dict)
    precision: int = 0

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "precision": self.precision,
            "threshold_log3m_over_8": _decimals(self.threshold),
            "stages": [s.to_dict() for s in self.stages],
            "checks": self.checks,
        }


def alpha_sequence(m: int, precisions=DEFAULT_PRECISIONS) -> AlphaTrace:
    """Trace alpha_1 = 27, alpha_{i+1} = 2^(2*alpha_i^(1/3)) until the cap.

    Stops at the first stage with alpha_i >= log^3(m)/8 and records, for
    every stage, the growth factor check against (4/3)^3, the partial sums
    of alpha_j^(-1/3) against 4/3, and the Y-exponent coefficient against 36.
    """
    if m < 27:
        raise DomainError("alpha trace needs m >= 27")

    def build(prec):
        log_m = _log2_iv(m, prec)
        threshold = log_m.cube().scale(Fraction(1, 8))
        threshold_exact = (Fraction((m.bit_length() - 1) ** 3, 8)
                           if m & (m - 1) == 0 else None)
        four_thirds = RInterval.exact(Fraction(4, 3), prec)
        thirty_six = RInterval.exact(36, prec)
        growth_ok = True
        sum_ok = True
        y_ok = True

        stages: list[AlphaStage] = []
        alpha_exact: int | None = 27
        alpha = RInterval.exact(27, prec)
        log2_alpha = RInterval.exact(27, prec).log2()
        partial = RInterval.exact(0, prec)
        y_coef = RInterval.exact(196, prec)
        for i in range(1, 80):
            if alpha_exact is not None and is_perfect_cube(alpha_exact):
                inv = RInterval.exact(Fraction(1, icbrt(alpha_exact)), prec)
            else:
                inv = RInterval.exact(1, prec) / alpha.cbrt()
            partial = partial + inv
            stages.append(AlphaStage(i, alpha_exact, alpha, log2_alpha,
                                     inv, partial, y_coef))
            sum_ok = sum_ok and must(partial.leq(four_thirds), "partial-sum")
            y_ok = y_ok and must(y_coef.geq(thirty_six), "y-exponent")

            if alpha_exact is not None and threshold_exact is not None:
                done = Fraction(alpha_exact) >= threshold_exact
            else:
                done = must(alpha.geq(threshold), "termination")
            if done:
                break

            # next stage
            if alpha_exact is not None and is_perfect_cube(alpha_exact):
                c = icbrt(alpha_exact)
                nxt_exact = 1 << (2 * c)
                nxt = RInterval.exact(nxt_exact, prec)
                nxt_log = RInterval.exact(2 * c, prec)
            else:
                nxt_exact = None
                nxt_log = alpha.cbrt().scale(2)
                nxt = nxt_log.exp2()
            if alpha_exact is not None and nxt_exact is not None:
                step_ok = 27 * nxt_exact >= 64 * alpha_exact
            else:
                step_ok = must(nxt.scale(27).geq(alpha.scale(64)), "growth")
            growth_ok = growth_ok and step_ok
            y_coef = y_coef - inv.scale(120)
            alpha_exact, alpha, log2_alpha = nxt_exact, nxt, nxt_log
        else:
            raise RuntimeError("alpha recursion failed to terminate")

        final_inv = RInterval.exact(2, prec) / log_m
        trace = AlphaTrace(m, stages, threshold, threshold_exact, final_inv,
                           precision=prec)
        trace.checks = {
            "growth_ge_4_3_cubed": growth_ok,
            "partial_sums_le_4_3": sum_ok,
            "y_exponent_ge_36_sqrt_m": y_ok,
        }
        return trace

    return resolve(build, precisions)


# --- Theorem "main": arithmetic of the iterated proof -------------------------


def verify_main_arithmetic(m: int, n: int,
                           precisions=DEFAULT_PRECISIONS) -> HypothesisReport:
    """Check every numeric step the iterated-pair proof relies on.

    The final Lemma-4 application needs 36*log2(m) >= 250; below that the
    bound is still covered by the explicit small-m fallback (m <= 60^2 gives
    4m <= 250*sqrt(m)), mirroring the published case split, and the clause
    is reported as not applicable rather than failed.
    """
    if m < 1 or n < 1:
        raise DomainError("need m >= 1 and n >= 1")

    def build(prec):
        report = HypothesisReport("main-arithmetic")
        report.precision = prec
        report.meta = {"m": m, "n": n}
        sqrt_m = _sqrt_iv(m, prec)

        # order precondition 2^(106 sqrt(m)/log m) >= n - 27 sqrt(m)
        if m == 1:
            report.add("order-precondition",
                       "2^(106*sqrt(m)/log m) >= n - 27*sqrt(m)",
                       NOT_APPLICABLE, {"reason": "log m = 0 at m = 1"})
        elif leq_scaled_sqrt(n, 27, 1, m):
            report.add("order-precondition",
                       "2^(106*sqrt(m)/log m) >= n - 27*sqrt(m)",
                       PASS, {"note": "n <= 27*sqrt(m): right side nonpositive"})
        else:
            log_m = _log2_iv(m, prec)
            lhs = sqrt_m.scale(106) / log_m
            rhs = RInterval.exact(n, prec) - sqrt_m.scale(27)
            if rhs.lo <= 0:
                raise Indecisive("order-precondition-sign")
            report.add("order-precondition",
                       "2^(106*sqrt(m)/log m) >= n - 27*sqrt(m)",
                       must(lhs.geq(rhs.log2()), "order-precondition"),
                       {"exponent": _decimals(lhs),
                        "log2_rhs": _decimals(rhs.log2())})

        # the proof may assume n >= 125 sqrt(m): otherwise 2^(2n) suffices
        big_n = geq_scaled_sqrt(n, 125, 1, m)
        small_n = leq_scaled_sqrt(2 * n, 250, 1, m)
        report.add("case-split-125",
                   "n >= 125*sqrt(m) or 2n <= 250*sqrt(m) (cases cover)",
                   big_n or small_n,
                   {"n_ge_125sqrt": big_n, "2n_le_250sqrt": small_n})

        # base pair: 4^(-27 sqrt(m)) * 2^(250 sqrt(m)) = 2^(196 sqrt(m))
        coeff_ok = -2 * 27 + 250 == 196
        lhs_q = LogQty(sqrt_m.scale(-54)) * LogQty(sqrt_m.scale(250))
        rhs_q = LogQty(sqrt_m.scale(196))
        report.add("base-pair-exponent",
                   "4^(-27*sqrt(m)) * 2^(250*sqrt(m)) = 2^(196*sqrt(m))",
                   coeff_ok,
                   {"lhs": _decimals(lhs_q.exponent),
                    "rhs": _decimals(rhs_q.exponent),
                    "exact_equal": lhs_q.exponent.is_exact
                                   and lhs_q.exponent.lo == rhs_q.exponent.lo})

        range_nonempty = m >= 64  # log^3(m)/8 >= 27 iff log2(m) >= 6
        report.add("alpha-range", "alpha interval [27, log^3(m)/8] nonempty",
                   INFO, {"nonempty": range_nonempty, "m": m})

        if m >= 27:
            try:
                trace = alpha_sequence(m, (prec,))
            except PrecisionError:
                raise Indecisive("alpha-trace") from None
            checks = trace.checks
            report.add("y-exponent-trace",
                       "Y-exponent stays >= 36*sqrt(m) along the alpha trace",
                       checks["y_exponent_ge_36_sqrt_m"]
                       and checks["partial_sums_le_4_3"]
                       and checks["growth_ge_4_3_cubed"],
                       {"stages": len(trace.stages), **checks})
        else:
            trace = None
            report.add("y-exponent-trace",
                       "Y-exponent stays >= 36*sqrt(m) along the alpha trace",
                       NOT_APPLICABLE, {"reason": "m < 27"})

        # final application at alpha = log^3(m)/8 needs 36 >= 250/log m
        log_m = _log2_iv(m, prec) if m > 1 else None
        final_active = (range_nonempty and log_m is not None and
                        must(log_m.scale(36).geq(RInterval.exact(250, prec)),
                             "final-regime"))
        if final_active:
            assert trace is not None
            total = trace.stages[-1].partial_sum + trace.final_inv_cbrt
            ok_sum = must(total.leq(RInterval.exact(Fraction(4, 3), prec)),
                          "final-total-sum")
            # X' size: 2^(2*alpha^(1/3)) * sqrt(m) at alpha = log^3(m)/8,
            # where alpha^(1/3) = log(m)/2, so the exponent is
            # log m + log(m)/2 = (3/2) log m, i.e. exactly m^(3/2).
            xprime_ok = Fraction(2, 1) * Fraction(1, 2) + Fraction(1, 2) == Fraction(3, 2)
            xprime_iv = LogQty(log_m + log_m.scale(Fraction(1, 2)))
            m32 = LogQty(log_m.scale(Fraction(3, 2)))
            report.add("final-application",
                       "one more amplification at alpha = log^3(m)/8: "
                       "36*sqrt(m) >= 125*alpha^(-1/3)*sqrt(m), Y' >= 2^(36*sqrt(m)), "
                       "and X' size 2^(2*alpha^(1/3))*sqrt(m) = m^(3/2)",
                       ok_sum and xprime_ok,
                       {"total_inv_cbrt_sum": _decimals(total),
                        "x_prime_log2": _decimals(xprime_iv.exponent),
                        "m_3_2_log2": _decimals(m32.exponent)})
            fb = leq_scaled_sqrt(4 * m, 250, 1, m) if m <= 3600 else None
            report.add("small-m-fallback", "m <= 60^2 and 4m <= 250*sqrt(m)",
                       INFO if fb is None else (PASS if fb else FAIL),
                       {"active": False, "m_le_3600": m <= 3600})
        else:
            report.add("final-application",
                       "one more amplification at alpha = log^3(m)/8",
                       NOT_APPLICABLE,
                       {"reason": "36*log2(m) < 250: proof operates in the "
                                  "small-m fallback regime"})
            fb_ok = m <= 3600 and leq_scaled_sqrt(4 * m, 250, 1, m)
            report.add("small-m-fallback",
                       "m <= 60^2 and 4m <= 250*sqrt(m): 2^(2n) <= 2^(4m) "
                       "<= 2^(250*sqrt(m)) for isolated-vertex-free inputs",
                       fb_ok, {"4m": 4 * m,
                               "250sqrt_m": _decimals(sqrt_m.scale(250))})
        return report

    return resolve(build, precisions)


# --- Theorem "main2": the two inequality chains --------------------------------


def verify_main2_arithmetic(m: int, p: int, l: int, q: int, k: int, r: int,
                            precisions=DEFAULT_PRECISIONS) -> HypothesisReport:
    """Verify the r = 0 and r >= 1 chains bounding R(H - S, K_p) by 2^(36*sqrt(m))."""
    if m < 27:
        raise DomainError("need m >= 27")
    if p < 1 or l < 0 or q < 1 or r < 0:
        raise DomainError("need p >= 1, l >= 0, q >= 1, r >= 0")

    def build(prec):
        report = HypothesisReport("main2-arithmetic")
        report.precision = prec
        report.meta = {"m": m, "p": p, "l": l, "q": q, "k": k, "r": r}
        sqrt_m = _sqrt_iv(m, prec)
        log_m = _log2_iv(m, prec)
        target = sqrt_m.scale(36)

        report.add("p-le-40sqrt", "p <= 40*sqrt(m) (from m >= 27)",
                   leq_scaled_sqrt(p, 40, 1, m), {"p": p})
        q_cap = sqrt_m.scale(106) / log_m
        report.add("q-cap", "q <= 2^(106*sqrt(m)/log m)",
                   must(log2_int(q, prec).leq(q_cap), "q-cap"),
                   {"log2_q": _decimals(log2_int(q, prec)), "cap": _decimals(q_cap)})

        if r == 0:
            if p < 1 or q < 1:
                raise DomainError("r=0 branch needs p, q >= 1")
            direct = log2_int(100 * p * q, prec)
            report.add("r0-direct", "100*p*q < 2^(36*sqrt(m))",
                       must(direct.lt(target), "r0-direct"),
                       {"log2_100pq": _decimals(direct), "36sqrt_m": _decimals(target)})
            report.add("r0-log4000", "log2(4000) <= 13 (4000 <= 2^13)",
                       4000 <= 1 << 13, {})
            tail = (RInterval.exact(13, prec) + log_m.scale(Fraction(1, 2))
                    + sqrt_m.scale(106) / log_m)
            report.add("r0-chain-tail",
                       "13 + log(m)/2 + 106*sqrt(m)/log m < 36*sqrt(m)",
                       must(tail.lt(target), "r0-chain-tail"),
                       {"lhs": _decimals(tail), "rhs": _decimals(target)})
            return report

        # r >= 1 branch
        ok_r = lt_quarter_log2(r, m)
        report.add("r-threshold", "r < log2(m)/4 (2^(4r) < m)", ok_r,
                   {"r": r, "m": m})
        if not ok_r:
            return report  # rejected before the chain

        if k < 2:
            report.add("chromatic-floor", "k = chi(H-S) >= 2 when r >= 1",
                       FAIL, {"k": k})
            return report

        e_actual = Fraction((2 * r - k + 2) * (k - 1), 2)
        e_weak = Fraction(r * r + r, 2)
        report.add("exponent-weakening",
                   "(2r-k+2)(k-1)/2 <= (r^2+r)/2", e_actual <= e_weak,
                   {"actual": str(e_actual), "weakened": str(e_weak)})

        if r < q:
            alon = bound_alon(q, p, k, r, prec)
            report.add("alon-direct",
                       "Theorem-7 bound with the given (q, p, k, r) <= 2^(36*sqrt(m))",
                       must(alon.exponent.leq(target), "alon-direct"),
                       {"log2_bound": _decimals(alon.exponent),
                        "36sqrt_m": _decimals(target)})
        else:
            report.add("alon-direct", "Theorem-7 bound needs r < q", FAIL,
                       {"r": r, "q": q})

        # the displayed chain: (r^2+r)/2 * log(4000*sqrt(m)) + 106*r*sqrt(m)/log m
        log4000sqrt = _log2_iv(4000, prec) + log_m.scale(Fraction(1, 2))
        chain = (log4000sqrt.scale(e_weak)
                 + (sqrt_m.scale(106 * r) / log_m))
        report.add("rsq-chain",
                   "(r^2+r)/2*log(4000*sqrt(m)) + 106*r*sqrt(m)/log m < 36*sqrt(m)",
                   must(chain.lt(target), "rsq-chain"),
                   {"lhs": _decimals(chain), "rhs": _decimals(target)})

        # the intermediate steps the published chain uses
        report.add("step-log4000", "log2(4000) < 12 (4000 <= 2^12)",
                   4000 <= 1 << 12, {})
        rr8 = RInterval.exact(8 * (r * r + r), prec)
        report.add("step-rr-log2",
                   "r^2 + r <= log^2(m)/8 (from r < log m / 4, m >= 16)",
                   must(rr8.leq(log_m * log_m), "step-rr-log2"),
                   {"8(r^2+r)": 8 * (r * r + r), "log^2 m": _decimals(log_m * log_m)})
        report.add("step-106r", "106*r/log m <= 26.5 (4r <= log m)",
                   (1 << (4 * r)) <= m, {})
        tail = log_m * log_m * RInterval.exact(Fraction(3, 4), prec) \
            + log_m.cube().scale(Fraction(1, 32))
        report.add("step-tail",
                   "(3/4)*log^2(m) + (1/32)*log^3(m) < 9.5*sqrt(m)",
                   must(tail.lt(sqrt_m.scale(Fraction(19, 2))), "step-tail"),
                   {"lhs": _decimals(tail),
                    "rhs": _decimals(sqrt_m.scale(Fraction(19, 2)))})

        # y = (ln p)^(-(r^2+r-2)/2) <= 1 requires ln p >= 1 unless the
        # exponent vanishes (r = 1); recorded, not resolved
        y_exp = Fraction(r * r + r - 2, 2)
        y_le_1 = (y_exp == 0) or p >= 3
        report.add("y-factor", "y = (ln p)^(-(r^2+r-2)/2) <= 1",
                   INFO, {"holds": y_le_1, "exponent": str(y_exp), "p": p})

        # the q-substitution exactly as printed, flagged when it disagrees
        printed = (sqrt_m.scale(27) + (sqrt_m.scale(106) / log_m).exp2()
                   - sqrt_m * RInterval.exact(m, prec))
        discrepancy = None
        if printed.hi < 0:
            discrepancy = True  # printed bound negative, q >= 1 always exceeds
        else:
            tri = RInterval.exact(q, prec).leq(printed)
            discrepancy = None if tri is None else not tri
        report.add("q-as-printed",
                   "q <= 27*sqrt(m) + 2^(106*sqrt(m)/log m) - sqrt(m^3) "
                   "(as printed; sign structure suggests a typo)",
                   INFO, {"q": q, "printed_bound": _decimals(printed),
                          "discrepancy": discrepancy})
        return report

    return resolve(build, precisions)


# --- Lemma 1 bound helper -------------------------------------------------------


def lemma1_lower_bound(n: int, k: int, l: int) -> int:
    """ceil(C(k+l,k)^(-1) * n) - k - l; may be nonpositive."""
    c = comb(k + l, k)
    return -((-n) // c) - k - l


def base_budget(m: int) -> int:
    """ceil(27*sqrt(m)), the X-budget used by the extraction pipeline."""
    f = isqrt(27 * 27 * m)
    return f if f * f == 27 * 27 * m else f + 1
