"""Command-line front end: parse a pair, classify, report.

Exit codes encode the verdict and nothing else: 0 Hyperbolic,
10 HasLowGenusComponent, 20 Inconclusive, 1 usage/parse error.

The ``--json`` report is deterministic (sorted keys, no timestamps) so
golden files can be byte-compared; ``--timings`` adds wall-clock fields
and is therefore kept out of golden runs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from .classify import Outcome, Verdict, classify
from .critical import PairMatching, PolynomialPair, corollary1_lhs, match_pairs, theorem1_lhs
from .geometry import genus_if_supported
from .instances import (
    CASE_IDS,
    case_instance,
    inconclusive_pair,
    theorem1_pair,
    theorem2_pair,
    theorem3_pair,
)
from .numoracle import DEFAULT_PRECISION, verify_pair_counts
from .oneforms import verify_witnesses
from .parsepoly import ParseError, parse_poly

EXIT_BY_OUTCOME = {
    Outcome.HYPERBOLIC: 0,
    Outcome.HAS_LOW_GENUS_COMPONENT: 10,
    Outcome.INCONCLUSIVE: 20,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the contract wants 1.
    def error(self, message):
        raise _UsageError(message)


def _critical_summary(pair: PolynomialPair, matching: PairMatching) -> dict:
    def classes(cs):
        return [
            {"multiplicity": c.multiplicity, "degree": c.factor.degree}
            for c in cs.classes
        ]

    return {
        "p_classes": classes(pair.critical_p()),
        "q_classes": classes(pair.critical_q()),
        "matched_points": [list(pq) for pq in matching.matched_points],
        "unmatched_p": list(matching.unmatched_p_points),
        "unmatched_q": list(matching.unmatched_q_points),
        "unmatched_p_mass": matching.unmatched_p_mass,
        "unmatched_q_mass": matching.unmatched_q_mass,
    }


def _witness_texts(verdict: Verdict, matching: PairMatching) -> list:
    forms, _reports = verify_witnesses(verdict, matching)
    return [f.to_text() for f in forms]


def _oracle_block(
    pair: PolynomialPair,
    matching: PairMatching,
    which: str,
    precision: int,
) -> dict:
    block = {}
    if which in ("geometry", "both"):
        rep = genus_if_supported(pair, matching)
        block["geometry"] = {
            "delta": rep.delta,
            "genus": rep.genus,
            "method": rep.method.value,
        }
    if which in ("numeric", "both"):
        rep = verify_pair_counts(
            pair, matching, precision_bits=precision, cap=max(4096, precision)
        )
        block["numeric"] = {
            "outcome": rep.outcome.value,
            "precision_bits": rep.precision_bits,
            "l0": rep.l0_numeric,
        }
    return block


def build_report(
    p_text: str,
    q_text: str,
    verdict: Verdict,
    matching: PairMatching,
    *,
    witness: bool = False,
    oracle: Optional[str] = None,
    precision: int = DEFAULT_PRECISION,
    timings: Optional[dict] = None,
) -> dict:
    """Assemble the machine-readable report for one classified pair.

    The critical summary describes the normalized orientation (degree of
    P at least degree of Q); ``swapped`` records whether that orientation
    reversed the inputs.
    """
    pair = verdict.pair
    witness_forms = []
    if witness and verdict.outcome is Outcome.HYPERBOLIC:
        witness_forms = _witness_texts(verdict, matching)
    return {
        "schema": 1,
        "input": {"p": p_text, "q": q_text},
        "verdict": verdict.outcome.value,
        "rule": verdict.rule,
        "case": verdict.case,
        "swapped": pair.swapped,
        "l0": matching.matched_pair_count,
        "l": matching.p_point_count,
        "h": matching.q_point_count,
        "theorem1_lhs": theorem1_lhs(matching),
        "corollary1_lhs": corollary1_lhs(matching),
        "witness_forms": witness_forms,
        "linear_witness": (
            verdict.linear_witness.description if verdict.linear_witness else None
        ),
        "critical": _critical_summary(pair, matching),
        "oracle": (
            _oracle_block(pair, matching, oracle, precision) if oracle else None
        ),
        "timings": timings,
    }


def render_text(report: dict) -> str:
    lines = [
        f"P: {report['input']['p']}",
        f"Q: {report['input']['q']}",
        f"verdict: {report['verdict']} (rule: {report['rule']})",
    ]
    if report["case"] is not None:
        lines.append(f"exceptional case: {report['case']}")
    if report["linear_witness"]:
        lines.append(f"linear factor: {report['linear_witness']}")
    lines.append(
        "counts: l0={l0}, l={l}, h={h}, theorem1_lhs={theorem1_lhs}, "
        "corollary1_lhs={corollary1_lhs}".format(**report)
    )
    if report["witness_forms"]:
        lines.append("holomorphic one-forms:")
        lines.extend(f"  {t}" for t in report["witness_forms"])
    oracle = report["oracle"] or {}
    if "geometry" in oracle:
        g = oracle["geometry"]
        lines.append(
            f"geometry oracle: delta={g['delta']}, genus={g['genus']},"
            f" method={g['method']}"
        )
    if "numeric" in oracle:
        o = oracle["numeric"]
        lines.append(
            f"numeric oracle: {o['outcome']} at {o['precision_bits']} bits"
            f" (l0={o['l0']})"
        )
    if report["timings"]:
        pieces = ", ".join(f"{k}={v}ms" for k, v in sorted(report["timings"].items()))
        lines.append(f"timings: {pieces}")
    return "\n".join(lines)


def _build_argparser() -> _Parser:
    ap = _Parser(prog="sepcurve", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    cl = sub.add_parser("classify", help="classify one pair P(x) - Q(y)")
    cl.add_argument("--p", required=True, metavar="POLY", help="P, a polynomial in x")
    cl.add_argument(
        "--q", required=True, metavar="POLY",
        help="Q, a polynomial in x (the y-side of the curve)",
    )
    cl.add_argument("--json", action="store_true", help="machine-readable report")
    cl.add_argument(
        "--witness", action="store_true",
        help="emit holomorphic one-forms for hyperbolic verdicts",
    )
    cl.add_argument(
        "--oracle", choices=("geometry", "numeric", "both"),
        help="cross-check with the genus count and/or certified numerics",
    )
    cl.add_argument(
        "--precision", type=int, default=DEFAULT_PRECISION, metavar="BITS",
        help=f"numeric oracle working precision (default {DEFAULT_PRECISION})",
    )
    cl.add_argument(
        "--timings", action="store_true",
        help="include wall-clock timings (excluded from golden output)",
    )

    sub.add_parser("selftest", help="run the pinned golden instances")
    return ap


def _run_classify(args) -> int:
    t0 = time.perf_counter()
    p = parse_poly(args.p)
    q = parse_poly(args.q)
    pair = PolynomialPair(p, q)
    t1 = time.perf_counter()
    verdict = classify(pair)
    matching = verdict.matching or match_pairs(pair)
    t2 = time.perf_counter()
    timings = None
    if args.timings:
        timings = {
            "parse_ms": round((t1 - t0) * 1000, 3),
            "classify_ms": round((t2 - t1) * 1000, 3),
        }
    report = build_report(
        p.to_string(),
        q.to_string(),
        verdict,
        matching,
        witness=args.witness,
        oracle=args.oracle,
        precision=args.precision,
        timings=timings,
    )
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(render_text(report))
    return EXIT_BY_OUTCOME[verdict.outcome]


def _selftest_items():
    for cid in CASE_IDS:
        expected_case = 1 if cid == 7 else cid
        yield (
            f"case {cid}",
            case_instance(cid),
            Outcome.HAS_LOW_GENUS_COMPONENT,
            None,
            expected_case,
        )
    yield "gap rule", theorem2_pair(), Outcome.HYPERBOLIC, "Theorem 2", None
    yield "count threshold", theorem1_pair(), Outcome.HYPERBOLIC, "Theorem 1", None
    yield "below thresholds", inconclusive_pair(), Outcome.INCONCLUSIVE, "inconclusive", None
    for k in range(3, 9):
        yield f"generic degree {k + 2}", theorem3_pair(k), Outcome.HYPERBOLIC, "Theorem 3", None


def _run_selftest() -> int:
    failures = 0
    for name, pair, outcome, rule, case in _selftest_items():
        verdict = classify(pair)
        problems = []
        if verdict.outcome is not outcome:
            problems.append(f"outcome {verdict.outcome.value} != {outcome.value}")
        if rule is not None and verdict.rule != rule:
            problems.append(f"rule {verdict.rule!r} != {rule!r}")
        if case is not None and verdict.case != case:
            problems.append(f"case {verdict.case} != {case}")
        if verdict.outcome is Outcome.HYPERBOLIC:
            try:
                _forms, reports = verify_witnesses(verdict)
                if not all(r.overall for r in reports):
                    problems.append("witness regularity check failed")
            except ValueError as exc:
                problems.append(f"witness emission failed: {exc}")
        status = "ok" if not problems else "FAIL (" + "; ".join(problems) + ")"
        print(f"{name:24s} {status}")
        failures += bool(problems)
    print(f"selftest: {failures} failure(s)")
    return 0 if failures == 0 else 1


def main(argv=None) -> int:
    ap = _build_argparser()
    try:
        args = ap.parse_args(argv)
        if args.command == "selftest":
            return _run_selftest()
        return _run_classify(args)
    except (_UsageError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
