"""Command line front end.

Subcommands mirror the library layers: classify and scan decide pairs,
certificate shows the recipe trace, model builds a cyclic selector witness,
catalog lists small structures up to isomorphism, fraisse runs the staged
construction, and verify reruns the exhaustive checks (pair-to-four rule,
cycle gcd claim, ternary Goldbach sweep).

Exit codes: 0 success, 1 a verification or search came back negative,
2 usage errors, 3 a configured bound or cap was exceeded.  Default output
is deterministic; timing is opt-in so byte-for-byte comparisons stay valid.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass

from .certificates import Recipe, build_certificate
from .decomposition import (
    EXHAUSTIVE_BOUND,
    Decomposition,
    Verdict,
    classify_detailed,
)
from .errors import (
    BoundExceeded,
    CapExceeded,
    CertificateSearchFailed,
    EmptyResult,
    InvalidPart,
    NotBlocking,
    OracleDisagreement,
    PreconditionViolated,
    RamseyChoiceError,
)
from .numtheory import GOLDBACH_SEARCH_BOUND, goldbach_triples
from .rc24 import check_equivariance, verify_rc24
from .selector_models import (
    StageCaps,
    build_cyclic_model,
    catalog_models,
    check_one_point_extension,
    run_fraisse_stages,
    verify_equivariance,
    verify_gcd_claim,
    witness_no_invariant_choice,
)


@dataclass(frozen=True)
class ScanRow:
    m: int
    n: int
    verdict: str
    reason: str
    recipe: str | None = None
    parts: tuple[int, ...] | None = None


def _reason_for(m: int, n: int, verdict: str) -> str:
    if verdict == Verdict.PROVABLE.value:
        return "diagonal" if m == n else "rc24"
    return "certificate"


@dataclass
class ScanReport:
    """Grid classification result with JSON and CSV round trips."""

    max_m: int
    max_n: int
    rows: list[ScanRow]

    @property
    def total(self) -> int:
        return len(self.rows)

    @property
    def provable(self) -> int:
        return sum(1 for r in self.rows if r.verdict == Verdict.PROVABLE.value)

    @property
    def not_provable(self) -> int:
        return self.total - self.provable

    def recipe_counts(self) -> dict[str, int]:
        counts = {r.value: 0 for r in Recipe}
        for row in self.rows:
            if row.recipe is not None:
                counts[row.recipe] += 1
        return counts

    def to_json_obj(self) -> dict:
        pairs = []
        for r in self.rows:
            obj = {"m": r.m, "n": r.n, "verdict": r.verdict, "reason": r.reason}
            if r.recipe is not None:
                obj["recipe"] = r.recipe
                obj["parts"] = list(r.parts)
            pairs.append(obj)
        return {"max_m": self.max_m, "max_n": self.max_n, "pairs": pairs}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "ScanReport":
        rows = []
        for p in obj["pairs"]:
            rows.append(
                ScanRow(
                    p["m"],
                    p["n"],
                    p["verdict"],
                    p["reason"],
                    p.get("recipe"),
                    tuple(p["parts"]) if "parts" in p else None,
                )
            )
        return cls(obj["max_m"], obj["max_n"], rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "n", "verdict", "recipe", "parts"])
        for r in self.rows:
            writer.writerow(
                [
                    r.m,
                    r.n,
                    r.verdict,
                    r.recipe or "",
                    "+".join(map(str, r.parts)) if r.parts else "",
                ]
            )
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, max_m: int, max_n: int) -> "ScanReport":
        reader = csv.reader(text.splitlines())
        header = next(reader)
        if header != ["m", "n", "verdict", "recipe", "parts"]:
            raise ValueError(f"unexpected CSV header {header}")
        rows = []
        for raw in reader:
            m, n = int(raw[0]), int(raw[1])
            verdict = raw[2]
            recipe = raw[3] or None
            parts = tuple(int(x) for x in raw[4].split("+")) if raw[4] else None
            rows.append(ScanRow(m, n, verdict, _reason_for(m, n, verdict), recipe, parts))
        return cls(max_m, max_n, rows)

    def summary_lines(self) -> list[str]:
        lines = [
            f"scan m=2..{self.max_m} n=2..{self.max_n}",
            f"pairs: {self.total}",
            f"provable: {self.provable}",
            f"not provable: {self.not_provable}",
            "certificates by recipe:",
        ]
        for name, count in self.recipe_counts().items():
            lines.append(f"  {name}: {count}")
        return lines


def run_scan(max_m: int, max_n: int, *, bound: int = EXHAUSTIVE_BOUND, oracle: bool = False):
    """Classify the grid 2..max_m x 2..max_n.

    Returns (report, disagreements); with oracle=True every pair is also
    checked against the direct decomposition search.
    """
    if max_m < 2 or max_n < 2:
        raise ValueError("scan needs max_m >= 2 and max_n >= 2")
    rows = []
    disagreements = []
    for m in range(2, max_m + 1):
        for n in range(2, max_n + 1):
            try:
                cls_, trace = classify_detailed(m, n, oracle=oracle, bound=bound)
            except OracleDisagreement as exc:
                disagreements.append((m, n, str(exc)))
                cls_, trace = classify_detailed(m, n, oracle=False, bound=bound)
            recipe = trace.recipe.value if trace is not None else None
            parts = trace.decomposition.parts if trace is not None else None
            rows.append(
                ScanRow(m, n, cls_.verdict.value, cls_.reason.value, recipe, parts)
            )
    return ScanReport(max_m, max_n, rows), disagreements


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_classify(args) -> int:
    cls_, _ = classify_detailed(args.m, args.n, oracle=args.oracle, bound=args.bound)
    if args.json:
        _print_json(cls_.to_json_obj())
        return 0
    if cls_.verdict == Verdict.PROVABLE:
        tag = "diagonal" if cls_.m == cls_.n else "pair-to-four construction"
        print(f"RC_{cls_.m} => RC_{cls_.n}: provable ({tag})")
    else:
        print(f"RC_{cls_.m} => RC_{cls_.n}: not provable (blocked by {cls_.certificate})")
    return 0


def cmd_scan(args) -> int:
    report, disagreements = run_scan(
        args.max_m, args.max_n, bound=args.bound, oracle=args.oracle
    )
    fallback = [r for r in report.rows if r.recipe == Recipe.EXHAUSTIVE.value]
    if args.csv:
        sys.stdout.write(report.to_csv())
    elif args.json:
        obj = report.to_json_obj()
        if args.oracle:
            obj["oracle"] = {
                "checked": report.total,
                "agree": report.total - len(disagreements),
            }
        _print_json(obj)
    else:
        for line in report.summary_lines():
            print(line)
        if args.oracle:
            print(f"oracle agreement: {report.total - len(disagreements)}/{report.total}")
        if args.constructive_only:
            if fallback:
                listed = " ".join(f"({r.m},{r.n})" for r in fallback)
                print(f"fallback pairs: {listed}")
            else:
                print("fallback pairs: none")
    for m, n, msg in disagreements:
        print(f"oracle disagreement at ({m},{n}): {msg}", file=sys.stderr)
    if disagreements:
        return 1
    if args.constructive_only and fallback:
        return 1
    return 0


def cmd_certificate(args) -> int:
    try:
        trace = build_certificate(args.m, args.n, bound=args.bound)
    except PreconditionViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        _print_json(trace.to_json_obj())
        return 0
    print(
        f"RC_{trace.m} => RC_{trace.n}: blocked by {trace.decomposition} "
        f"({trace.recipe.value})"
    )
    for line in trace.narrative:
        print(f"  - {line}")
    return 0


def cmd_model(args) -> int:
    d = Decomposition(args.parts)
    c = build_cyclic_model(args.m, args.S, d)
    ok_eq, counter = verify_equivariance(c)
    ok_free = witness_no_invariant_choice(c, d.total)
    if args.json:
        obj = {
            "m": args.m,
            "S_size": args.S,
            "parts": list(d.parts),
            "domain": len(c.model.domain),
            "fixed": list(c.fixed),
            "cycles": [list(cyc) for cyc in c.cycles],
            "sel": [
                {"subset": list(P), "choice": c.model.sel[P]}
                for P in sorted(c.model.sel)
            ],
            "equivariant": ok_eq,
            "fixed_point_free": ok_free,
        }
        _print_json(obj)
    else:
        print(c.dump())
        print("equivariance: " + ("ok" if ok_eq else f"FAIL at {counter}"))
        print(
            "fixed-point-free region: "
            + ("ok" if ok_free else "FAIL")
            + f" ({d.total} atoms)"
        )
    return 0 if ok_eq and ok_free else 1


def cmd_catalog(args) -> int:
    models = catalog_models(args.m, args.k)
    subsets = sorted(models[0].sel) if models and models[0].sel else []
    if args.json:
        obj = {
            "m": args.m,
            "k": args.k,
            "classes": len(models),
            "subsets": [list(s) for s in subsets],
            "tables": [[mod.sel[s] for s in subsets] for mod in models],
        }
        _print_json(obj)
        return 0
    print(f"catalog m={args.m} k={args.k}: {len(models)} classes")
    for i, mod in enumerate(models):
        cells = " ".join(
            "{%s}->%d" % (",".join(map(str, s)), mod.sel[s]) for s in subsets
        )
        print(f"class {i}:" + (f" {cells}" if cells else " (no m-subsets)"))
    return 0


def cmd_fraisse(args) -> int:
    caps = StageCaps(
        ground_limit=args.ground_limit,
        max_new_atoms=args.max_atoms,
        max_domain=args.max_domain,
    )
    chain = run_fraisse_stages(args.m, args.stages, caps)
    complete = None
    missing = []
    if args.check is not None:
        complete, missing = check_one_point_extension(chain[-1], args.m, args.check)
    if args.json:
        obj = {
            "m": args.m,
            "stages": args.stages,
            "sizes": [len(mod.domain) for mod in chain],
        }
        if args.check is not None:
            obj["check_k"] = args.check
            obj["complete"] = complete
            obj["missing"] = len(missing)
        _print_json(obj)
    else:
        for i, mod in enumerate(chain):
            print(f"stage {i}: {len(mod.domain)} atoms")
        if args.check is not None:
            state = "complete" if complete else f"missing {len(missing)}"
            print(f"one-point extensions up to k={args.check}: {state}")
    if args.check is not None and not complete:
        return 1
    return 0


def cmd_verify(args) -> int:
    if args.target == "rc24":
        ok, census = verify_rc24()
        eq_ok, counter = check_equivariance()
        if args.json:
            _print_json(
                {
                    "ok": ok and eq_ok,
                    "census": census,
                    "equivariance_ok": eq_ok,
                    "equivariance_checks": 64 * 24,
                }
            )
        else:
            print(f"orientations: {census['total']}/64 " + ("ok" if ok else "FAIL"))
            print(
                "cases: singleton=%d pair=%d triple=%d"
                % (
                    census["case_singleton_min"],
                    census["case_pair_min"],
                    census["case_triple_min"],
                )
            )
            print(
                ("equivariance: ok (1536 checks)")
                if eq_ok
                else f"equivariance: FAIL at {counter}"
            )
        return 0 if ok and eq_ok else 1
    if args.target == "claim":
        ok, log = verify_gcd_claim(args.qmax)
        total = sum(entry["invariant_proper_subsets"] for entry in log.values())
        if args.json:
            _print_json(
                {
                    "q_max": args.qmax,
                    "ok": ok,
                    "per_q": [
                        {"q": q, **entry} for q, entry in sorted(log.items())
                    ],
                }
            )
        else:
            print(f"cycle lengths 2..{args.qmax}: " + ("ok" if ok else "FAIL"))
            print(f"invariant subsets checked: {total}")
        return 0 if ok else 1
    # target == "goldbach"
    failures = []
    checked = 0
    for n in range(7, args.max + 1, 2):
        checked += 1
        try:
            goldbach_triples(n, bound=args.bound)
        except EmptyResult:
            failures.append(n)
    ok = not failures
    if args.json:
        _print_json(
            {"max": args.max, "checked": checked, "ok": ok, "failures": failures}
        )
    else:
        state = "all admit a prime triple" if ok else f"failures: {failures}"
        print(f"odd targets 7..{args.max}: {state} ({checked} checked)")
    return 0 if ok else 1


def _add_common(sub, *, csv_flag=False, oracle=False, bound=None):
    sub.add_argument("--json", action="store_true", help="machine readable output")
    if csv_flag:
        sub.add_argument("--csv", action="store_true", help="CSV table output")
    if oracle:
        sub.add_argument(
            "--oracle",
            action="store_true",
            help="cross-check against the direct decomposition search",
        )
    if bound is not None:
        sub.add_argument(
            "--bound", type=int, default=bound, help="search bound (default %(default)s)"
        )
    sub.add_argument("--timing", action="store_true", help="print elapsed time")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramseychoice",
        description="Exact search and verification for Ramsey choice implications.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("classify", help="decide one implication pair")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    _add_common(p, oracle=True, bound=EXHAUSTIVE_BOUND)
    p.set_defaults(func=cmd_classify)

    p = subs.add_parser("scan", help="classify a whole grid of pairs")
    p.add_argument("max_m", type=int)
    p.add_argument("max_n", type=int)
    _add_common(p, csv_flag=True, oracle=True, bound=EXHAUSTIVE_BOUND)
    p.add_argument(
        "--constructive-only",
        action="store_true",
        help="fail when any pair needs the exhaustive fallback",
    )
    p.set_defaults(func=cmd_scan)

    p = subs.add_parser("certificate", help="blocking certificate with its recipe trace")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    _add_common(p, bound=EXHAUSTIVE_BOUND)
    p.set_defaults(func=cmd_certificate)

    p = subs.add_parser("model", help="cyclic selector model for a decomposition")
    p.add_argument("m", type=int)
    p.add_argument("S", type=int, help="number of pointwise-fixed atoms")
    p.add_argument("parts", type=int, nargs="+", help="cycle lengths, each >= 2")
    _add_common(p)
    p.set_defaults(func=cmd_model)

    p = subs.add_parser("catalog", help="selector structures up to isomorphism")
    p.add_argument("m", type=int)
    p.add_argument("k", type=int)
    _add_common(p)
    p.set_defaults(func=cmd_catalog)

    p = subs.add_parser("fraisse", help="staged homogeneous construction")
    p.add_argument("m", type=int)
    p.add_argument("stages", type=int)
    p.add_argument("--check", type=int, default=None, metavar="K",
                   help="verify one-point extensions for substructures below K")
    p.add_argument("--ground-limit", type=int, default=None)
    p.add_argument("--max-atoms", type=int, default=512)
    p.add_argument("--max-domain", type=int, default=4096)
    _add_common(p)
    p.set_defaults(func=cmd_fraisse)

    p = subs.add_parser("verify", help="rerun an exhaustive verification")
    p.add_argument("target", choices=("rc24", "claim", "goldbach"))
    p.add_argument("--qmax", type=int, default=12, help="cycle length cap for claim")
    p.add_argument("--max", type=int, default=1001, help="largest odd target for goldbach")
    _add_common(p, bound=GOLDBACH_SEARCH_BOUND)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.func(args)
    except (BoundExceeded, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (CertificateSearchFailed, OracleDisagreement, NotBlocking) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InvalidPart, PreconditionViolated, EmptyResult, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RamseyChoiceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.timing:
        print(f"elapsed: {time.perf_counter() - start:.3f}s")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
