"""Verification checks run by the CLI, each producing one CheckRecord."""
from __future__ import annotations

import logging
import random
from fractions import Fraction
from typing import Callable, Optional, Sequence, TypeVar

from gldouble.config import settings
from gldouble.errors import (
    DegreeBoundError,
    MutationError,
    ResampleExhausted,
    ResampleRequired,
    StructuralError,
    UsageError,
)
from gldouble.exact import Mat
from gldouble.family import (
    casimir,
    corrupted_family,
    enumerate_family,
    pencil_exchange_sign,
    phi,
    psi,
    sample_diagonal_point,
    sample_double_point,
    sample_dual_point,
    sign_skl,
)
from gldouble.identity import PencilDeterminant, verify_corollary, verify_long_identity
from gldouble.mutation import (
    ExchangeNumerator,
    MutationState,
    check_divisibility,
    exchange_value,
    mutate_matrix,
    mutate_seed,
    point_matrices,
)
from gldouble.poisson import BracketRouter, LogCanonicalViolation, casimir_check, log_canonical_check
from gldouble.schemas.reports import CheckRecord, Report, rational
from gldouble.seeds import (
    Seed,
    build_dual_seed,
    build_initial_seed,
    certify_string,
    diagonal_reduce,
    stable_tau_monomials,
)
from gldouble.tracking.timing import CheckTimer

logger = logging.getLogger(__name__)

T = TypeVar("T")

# n >= 5 checks a random subset of pairs
PAIR_BUDGET = 200
FULL_PAIRS_MAX_N = 4


def with_resampling(attempt: Callable[[], T], what: str) -> T:
    """Run `attempt` until it stops asking for a new sample point.

    Raises:
        ResampleExhausted: More than `settings.resample_limit` resamples
    """
    for tries in range(settings.resample_limit + 1):
        try:
            return attempt()
        except ResampleRequired as exc:
            logger.info("Resampling", extra={"check": what, "attempt": tries, "reason": str(exc)})
    raise ResampleExhausted(f"{what}: resample limit {settings.resample_limit} exhausted")


def seed_for(n: int, space: str) -> Seed:
    if space == "double":
        return build_initial_seed(n)
    if space == "diagonal":
        return diagonal_reduce(build_initial_seed(n))
    if space == "dual":
        return build_dual_seed(n)
    raise UsageError(f"unknown space {space}")


SPACE_OF_BRACKET = {"double": "double", "std": "diagonal", "dual": "dual"}


def _violation_witness(violation: LogCanonicalViolation, points: Sequence) -> dict:
    i, j = violation.points
    return {
        "pair": list(violation.pair),
        "points": [points[i].to_strings(), points[j].to_strings()],
        "ratios": [rational(r) for r in violation.ratios],
    }


# -- Poisson checks ---------------------------------------------------------


def check_log_canonical(
    n: int,
    points: int,
    rng: random.Random,
    bracket: str = "double",
    corrupted: bool = False,
    pair_budget: Optional[int] = None,
) -> CheckRecord:
    """The extended cluster of the seed on the bracket's space has constant Omega."""
    if points < 2:
        raise UsageError("log-canonicality needs at least 2 points")
    if corrupted and bracket != "double":
        raise UsageError("the corrupted family is defined on the double only")
    seed = seed_for(n, SPACE_OF_BRACKET[bracket])
    fns = corrupted_family(n) if corrupted else seed.cluster
    if pair_budget is None and n > FULL_PAIRS_MAX_N:
        pair_budget = PAIR_BUDGET
    br = BracketRouter().get_bracket(bracket)

    def attempt():
        sample = [br.sample_point(n, rng) for _ in range(points)]
        return sample, log_canonical_check(fns, sample, br, pair_budget=pair_budget, rng=rng)

    sample, result = with_resampling(attempt, "log-canonical")
    name = f"log-canonical[{bracket}]"
    if isinstance(result, LogCanonicalViolation):
        return CheckRecord(
            name=name, status="fail", detail=result.describe(), witness=_violation_witness(result, sample)
        )

    values = {
        "labels": list(result.labels),
        "omega": result.to_strings(),
        "skew_symmetric": result.is_skew_symmetric(),
        "integral": result.is_integral(),
        "pairs": "all" if pair_budget is None else pair_budget,
    }
    if seed.isolated and not corrupted:
        values["isolated_rows_zero"] = all(result.is_zero_row(c) for c in seed.isolated)
    if "extra_stable" in seed.notes:
        values["extra_stable"] = seed.notes["extra_stable"]
    status = "pass" if result.is_skew_symmetric() and values.get("isolated_rows_zero", True) else "fail"
    return CheckRecord(name=name, status=status, values=values)


def check_casimirs(n: int, points: int, rng: random.Random, bracket: str = "double") -> CheckRecord:
    """{c_r, f} = 0 for every non-isolated function of the seed on the bracket's space."""
    br = BracketRouter().get_bracket(bracket)
    space = SPACE_OF_BRACKET[bracket]
    seed = seed_for(n, space)
    casimirs = [casimir(n, r, on_u=(space == "dual")) for r in range(1, n)]
    fns = [seed.function(label) for label in seed.labels if label not in seed.isolated]

    sample = [br.sample_point(n, rng) for _ in range(points)]
    witnesses = casimir_check(casimirs, fns, sample, br)
    name = f"casimirs[{bracket}]"
    if witnesses:
        first = witnesses[0]
        return CheckRecord(
            name=name,
            status="fail",
            detail=f"{{{first.casimir}, {first.function}}} = {rational(first.value)} at point {first.point}",
            witness={
                "casimir": first.casimir,
                "function": first.function,
                "point": sample[first.point].to_strings(),
                "value": rational(first.value),
            },
        )
    return CheckRecord(
        name=name,
        status="pass",
        values={"casimirs": [c.label for c in casimirs], "functions": len(fns), "points": points},
    )


def check_diagonal_vanishing(n: int, points: int, rng: random.Random) -> CheckRecord:
    """f_kl and phi_kl vanish identically on the diagonal X = Y."""
    fns = [fn for fn in enumerate_family(n) if fn.kind in ("f", "phi")]
    for idx in range(points):
        p = sample_diagonal_point(n, rng)
        for fn in fns:
            value = fn(p.X, p.Y)
            if value != 0:
                return CheckRecord(
                    name="diagonal-vanishing",
                    status="fail",
                    detail=f"{fn.label} = {rational(value)} at diagonal point {idx}",
                    witness={"function": fn.label, "point": p.to_strings()},
                )
    return CheckRecord(
        name="diagonal-vanishing", status="pass", values={"functions": len(fns), "points": points}
    )


# -- determinantal identities ----------------------------------------------


def _random_rational_matrix(rows: int, cols: int, rng: random.Random) -> Mat:
    bound = settings.sample_bound
    return Mat(
        [[Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(cols)] for _ in range(rows)]
    )


def check_identity(n: int, trials: int, rng: random.Random) -> CheckRecord:
    """The long determinantal identity at random rational (A, u, v)."""
    if n < 2:
        raise UsageError("the identity campaign needs n >= 2")
    for trial in range(trials):
        A = _random_rational_matrix(n, n, rng)
        u, v = _random_rational_matrix(n, 1, rng), _random_rational_matrix(n, 1, rng)
        result = verify_long_identity(A, u, v)
        if not result.equal:
            return CheckRecord(
                name="long-identity",
                status="fail",
                detail=f"sides differ at trial {trial}",
                witness={
                    "A": A.to_strings(),
                    "u": u.to_strings(),
                    "v": v.to_strings(),
                    "lhs": rational(result.lhs),
                    "rhs": rational(result.rhs),
                },
            )
    return CheckRecord(name="long-identity", status="pass", values={"trials": trials})


def check_corollary(n: int, trials: int, rng: random.Random, regularity: bool = True) -> list[CheckRecord]:
    """Pencil factorization, its agreement with the exchange relation at phi_11, and divisibility."""
    if n <= 2:
        raise UsageError("the pencil factorization is stated for n > 2")
    state = MutationState.initial(build_initial_seed(n))
    signs = []
    records = []
    failure = None

    for trial in range(trials):
        def attempt():
            p = sample_double_point(n, rng)
            return p, verify_corollary(p.X, p.Y, state)

        p, result = with_resampling(attempt, "corollary")
        signs.append(result.measured_sign)
        if not result.equal:
            failure = CheckRecord(
                name="corollary",
                status="fail",
                detail=f"det pencil != phi_1_1 P at trial {trial}",
                witness={
                    "point": p.to_strings(),
                    "pencil": rational(result.pencil_det),
                    "phi_1_1": rational(result.phi11),
                    "P": rational(result.P),
                },
            )
            break

    expected = pencil_exchange_sign(n)
    records.append(failure or CheckRecord(name="corollary", status="pass", values={"trials": trials}))
    # recorded, not asserted
    records.append(
        CheckRecord(
            name="corollary-exchange-sign",
            status="evidence",
            values={"expected": expected, "measured": signs, "consistent": all(s == expected for s in signs)},
        )
    )

    if regularity:
        records.append(
            _divisibility("divisibility[pencil/phi_1_1]", PencilDeterminant(n), phi(n, 1, 1), n, rng)
        )
    return records


def _divisibility(name: str, N, D, n: int, rng: random.Random, fixed_x: bool = False) -> CheckRecord:
    try:
        verdict = check_divisibility(N, D, n, rng=rng, fixed_x=fixed_x)
    except DegreeBoundError as exc:
        return CheckRecord(name=name, status="fail", detail=str(exc))
    values = {"trials": verdict.trials, "resamples": verdict.resamples}
    if verdict.divisible:
        return CheckRecord(name=name, status="evidence", values=values)
    return CheckRecord(name=name, status="fail", detail="non-zero remainder", values=values, witness=verdict.witness)


# -- seeds ------------------------------------------------------------------


def _expected_counts(n: int, space: str) -> dict[str, int]:
    if space == "double":
        return {"vertices": 2 * n * n - n + 1, "isolated": n - 1}
    if space == "diagonal":
        return {"vertices": n * n, "isolated": 0}
    return {"vertices": n * n - n + 1, "isolated": n - 1}


def check_quiver(seed: Seed) -> CheckRecord:
    """Vertex counts, multiple arrows and the representability of B~."""
    quiver, n = seed.quiver, seed.n
    counts = {
        "vertices": len(quiver.labels) - len(quiver.isolated),
        "isolated": len(quiver.isolated),
        "mutable": len(quiver.mutable),
        "stable": len(quiver.stable),
        "arrows": quiver.arrow_count,
    }
    multiple = [f"{s}->{t}" for s, t, m in quiver.arrows() if m > 1]
    values = {**counts, "multiple_arrows": multiple}
    name = f"quiver[{seed.space}]"

    problems = []
    try:
        quiver.validate()
        seed.exchange.validate()
    except StructuralError as exc:
        problems.append(str(exc))
    for key, want in _expected_counts(n, seed.space).items():
        if counts[key] != want:
            problems.append(f"{key} = {counts[key]}, expected {want}")
    if seed.space == "double" and n >= 3:
        want_multiple = ["phi_2_1->phi_1_2"] if n > 3 else []
        if multiple != want_multiple:
            problems.append(f"multiple arrows {multiple}, expected {want_multiple}")

    if problems:
        return CheckRecord(name=name, status="fail", detail="; ".join(problems), values=values)
    return CheckRecord(name=name, status="pass", values=values)


def _variable_values(seed: Seed, p) -> dict[str, Fraction]:
    X, Y = point_matrices(p)
    return {label: seed.function(label)(X, Y) for label in seed.labels}


def check_strings(n: int, points: int, rng: random.Random, space: str = "double") -> CheckRecord:
    """Exact d-th roots of p_r v_>^r v_<^(d-r) equal the stable endpoints and the Casimirs."""
    seed = seed_for(n, space)
    sampler = sample_dual_point if space == "dual" else sample_double_point
    prefix = "cU" if space == "dual" else "c"
    special = [k for k in seed.mutable if seed.exchange.order(k) > 1]
    name = f"strings[{space}]"

    for idx in range(points):
        p = sampler(n, rng)
        values = _variable_values(seed, p)
        for k in special:
            string = seed.strings[k]
            d = string.order
            v_greater, v_less = stable_tau_monomials(seed.exchange, k)
            expected = [v_less.evaluate(values)]
            expected += [values[f"{prefix}_{r}"] for r in range(1, d)]
            expected.append(v_greater.evaluate(values))
            failures = certify_string(string, seed.exchange, values, expected)
            if failures:
                return CheckRecord(
                    name=name,
                    status="fail",
                    detail=f"{k}: {failures[0]}",
                    witness={"vertex": k, "point": p.to_strings(), "failures": failures},
                )
    return CheckRecord(
        name=name,
        status="pass",
        values={"special": special, "strings": {k: seed.strings[k].to_strings() for k in special}},
    )


# -- mutation ---------------------------------------------------------------


def check_mutation_algebra(seed: Seed) -> CheckRecord:
    """Involutivity, row gcd preservation and stable congruence for every mutable vertex."""
    B = seed.exchange
    problems = []
    for k in B.rows:
        once = mutate_matrix(B, k)
        if mutate_matrix(once, k).entries != B.entries:
            problems.append(f"mutation at {k} is not an involution")
        for label in B.rows:
            if once.row_gcd(label) != B.row_gcd(label):
                problems.append(f"row gcd of {label} changes under mutation at {k}")
            d = B.order(label)
            for col in B.stable:
                if (once.entry(label, col) - B.entry(label, col)) % d:
                    problems.append(f"b[{label},{col}] not congruent mod {d} after mutation at {k}")
    if problems:
        return CheckRecord(name="mutation-algebra", status="fail", detail=problems[0], values={"problems": problems})
    return CheckRecord(name="mutation-algebra", status="pass", values={"vertices": len(B.rows)})


def _is_integer(value: Fraction) -> bool:
    return Fraction(value).denominator == 1


def check_mutation(
    n: int,
    sequence: Sequence[str],
    points: int,
    rng: random.Random,
    regularity: bool = False,
    space: str = "double",
) -> list[CheckRecord]:
    """Mutate along `sequence` and certify the reached seed."""
    if not sequence:
        raise UsageError("mutation needs at least one vertex")
    initial = MutationState.initial(seed_for(n, space))
    states = [initial]
    try:
        for k in sequence:
            states.append(mutate_seed(states[-1], k))
    except MutationError as exc:
        raise UsageError(str(exc)) from exc
    final = states[-1]
    bracket = {"double": "double", "dual": "dual"}[space]
    br = BracketRouter().get_bracket(bracket)
    history = ".".join(sequence)
    records = []

    def attempt():
        sample = [br.sample_point(n, rng) for _ in range(points)]
        return sample, log_canonical_check(final.seed.cluster, sample, br)

    sample, result = with_resampling(attempt, "adjacent log-canonical")
    if isinstance(result, LogCanonicalViolation):
        records.append(
            CheckRecord(
                name=f"adjacent-log-canonical[{history}]",
                status="fail",
                detail=result.describe(),
                witness=_violation_witness(result, sample),
            )
        )
    else:
        records.append(
            CheckRecord(
                name=f"adjacent-log-canonical[{history}]",
                status="pass",
                values={"labels": list(result.labels), "omega": result.to_strings(), "flags": list(final.flags)},
            )
        )

    # mutating again at the last vertex restores the previous variable
    last, before = sequence[-1], states[-2]
    mismatches = []
    for idx, p in enumerate(sample):
        try:
            back = exchange_value(final, last, p)
        except ResampleRequired:
            continue
        old = _variable_values_at(before, last, p)
        if back != old:
            mismatches.append({"point": idx, "value": rational(back), "expected": rational(old)})
    records.append(
        CheckRecord(
            name=f"involution[{last}]",
            status="fail" if mismatches else "pass",
            witness={"mismatches": mismatches} if mismatches else None,
        )
    )

    if space == "double":
        record = _integrality_record(final, n, rng)
        if record is not None:
            records.append(record)
    if regularity:
        for step, k in enumerate(sequence):
            state = states[step]
            name = f"divisibility[{k}@{step + 1}]"
            denominator = state.variable(k)
            if getattr(denominator, "depth", 0):
                # only initial cluster variables are known polynomials
                records.append(CheckRecord(name=name, status="skipped", detail=f"{denominator.label} is mutated"))
                continue
            numerator = ExchangeNumerator(state.seed, k)
            records.append(_divisibility(name, numerator, denominator, n, rng, fixed_x=(space == "dual")))
    return records


def _variable_values_at(state: MutationState, label: str, p) -> Fraction:
    X, Y = point_matrices(p)
    return state.variable(label)(X, Y)


def _integrality_record(state: MutationState, n: int, rng: random.Random) -> CheckRecord | None:
    """Depth-one mutated variables take integer values at integer points."""
    trials = settings.divisibility_trials
    mutated = [label for label in state.seed.labels if getattr(state.variable(label), "depth", 0) == 1]
    if not mutated:
        return None
    for _ in range(trials):
        p = sample_double_point(n, rng)
        for label in mutated:
            try:
                value = _variable_values_at(state, label, p)
            except ZeroDivisionError:
                continue
            if not _is_integer(value):
                return CheckRecord(
                    name="integrality",
                    status="fail",
                    detail=f"{label} = {rational(value)} at an integer point",
                    witness={"vertex": label, "point": p.to_strings()},
                )
    return CheckRecord(name="integrality", status="evidence", values={"points": trials, "vertices": mutated})


# -- dual group -------------------------------------------------------------


def check_dual_exchange(n: int, points: int, rng: random.Random) -> CheckRecord:
    """det(s_12 psi_12 I + s_21 psi_21 U) = psi_11 Pi with Pi the exchange value at psi_11 up to sign."""
    if n < 3:
        raise UsageError("the dual exchange relation at psi_1_1 needs n >= 3")
    state = MutationState.initial(build_dual_seed(n))
    psi11, psi12, psi21 = psi(n, 1, 1), psi(n, 1, 2), psi(n, 2, 1)
    s12, s21 = sign_skl(n, 1, 2), sign_skl(n, 2, 1)
    measured = []

    for idx in range(points):
        def attempt():
            q = sample_dual_point(n, rng)
            U = q.u
            lhs = (U.identity_like().scale(s12 * psi12.at_u(U)) + U.scale(s21 * psi21.at_u(U))).det()
            rhs = psi11.at_u(U) * exchange_value(state, "psi_1_1", q)
            if rhs == 0:
                raise ResampleRequired("the dual exchange value vanishes")
            return q, lhs, rhs

        q, lhs, rhs = with_resampling(attempt, "dual exchange")
        ratio = lhs / rhs
        if ratio not in (1, -1):
            return CheckRecord(
                name="dual-exchange",
                status="fail",
                detail=f"pencil / (psi_1_1 x') is not a sign at point {idx}",
                witness={"point": q.to_strings(), "lhs": rational(lhs), "rhs": rational(rhs)},
            )
        measured.append(int(ratio))

    status = "pass" if len(set(measured)) == 1 else "fail"
    return CheckRecord(
        name="dual-exchange",
        status=status,
        values={"measured_sign": measured[0] if measured else None, "expected": pencil_exchange_sign(n)},
    )


def check_exponent_identity(n: int, points: int, rng: random.Random) -> CheckRecord:
    """phi_kl(X, Y) = (det X)^(n-k-l+1) psi_kl(X^-1 Y) for every (k, l)."""
    pairs = [(k, l) for k in range(1, n) for l in range(1, n - k + 1)]
    for idx in range(points):
        p = sample_double_point(n, rng)
        U, dX = p.X.inverse() @ p.Y, p.X.det()
        for k, l in pairs:
            lhs = phi(n, k, l)(p.X, p.Y)
            rhs = dX ** (n - k - l + 1) * psi(n, k, l).at_u(U)
            if lhs != rhs:
                return CheckRecord(
                    name="exponent-identity",
                    status="fail",
                    detail=f"phi_{k}_{l} at point {idx}",
                    witness={"point": p.to_strings(), "phi": rational(lhs), "psi_scaled": rational(rhs)},
                )
    return CheckRecord(name="exponent-identity", status="pass", values={"pairs": len(pairs), "points": points})


# -- orchestration ----------------------------------------------------------


class Campaign:
    """Runs checks in order against one rng and collects them in a Report."""

    def __init__(self, command: list[str], n: Optional[int], seed: int):
        self.n = n
        self.rng = random.Random(seed)
        self.report = Report(command=command, n=n, seed=seed)

    def run(self, name: str, check: Callable[[], CheckRecord | list[CheckRecord]]) -> list[CheckRecord]:
        """Run one check under a CheckTimer and append its records."""
        with CheckTimer(name, n=self.n) as timer:
            result = check()
        records = result if isinstance(result, list) else [result]
        for record in records:
            record.timing = timer.timing
            self.report.add(record)
        return records

    @property
    def passed(self) -> bool:
        return self.report.passed

    def finish(self, duration_ms: int) -> Report:
        self.report.timing.duration_ms = duration_ms
        failed = [c.name for c in self.report.checks if c.failed]
        if failed:
            logger.warning("Campaign found violations", extra={"failed": failed})
        else:
            logger.info("Campaign passed", extra={"checks": len(self.report.checks)})
        return self.report

