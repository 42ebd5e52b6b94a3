"""
Tests for the command-line surface, campaign orchestration and exit codes.
"""
import json
import random
from unittest.mock import patch

import pytest

from gldouble.config import settings
from gldouble.errors import ResampleExhausted, ResampleRequired, UsageError
from gldouble.harness import campaign
from gldouble.harness.cli import build_parser, execute, normalize_vertex, resolve_options
from gldouble.main import EXIT_PASS, EXIT_RESAMPLE, EXIT_USAGE, EXIT_VIOLATION, run
from gldouble.schemas.reports import CheckRecord


def _report(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def _check(report: dict, name: str) -> dict:
    matches = [c for c in report["checks"] if c["name"] == name]
    assert matches, f"no check named {name}"
    return matches[0]


def test_verify_log_canonical_passes(capsys):
    """The initial seed for n=2 is log-canonical and exits 0."""
    code = run(["verify", "log-canonical", "--n", "2", "--points", "5", "--seed", "1"])

    assert code == EXIT_PASS
    report = _report(capsys)
    assert report["schema"] == settings.schema_version
    assert report["n"] == 2
    assert report["seed"] == 1
    check = _check(report, "log-canonical[double]")
    assert check["status"] == "pass"
    assert check["values"]["skew_symmetric"] is True
    assert check["values"]["isolated_rows_zero"] is True
    labels = check["values"]["labels"]
    omega = check["values"]["omega"]
    assert omega[labels.index("g_2_2")][labels.index("h_1_2")] == "-1/2"


def test_verify_log_canonical_corrupted_is_violation(capsys):
    """Replacing phi_1_1 by phi_1_1 + g_1_1 breaks log-canonicality."""
    code = run(["verify", "log-canonical", "--n", "2", "--points", "5", "--seed", "1", "--corrupted"])

    assert code == EXIT_VIOLATION
    check = _check(_report(capsys), "log-canonical[double]")
    assert check["status"] == "fail"
    assert len(check["witness"]["pair"]) == 2
    assert len(check["witness"]["points"]) == 2


def test_verify_log_canonical_std_runs_diagonal_vanishing(capsys):
    """The standard bracket also checks the diagonal-vanishing functions."""
    code = run(["verify", "log-canonical", "--n", "3", "--points", "4", "--bracket", "std"])

    assert code == EXIT_PASS
    report = _report(capsys)
    assert _check(report, "log-canonical[std]")["status"] == "pass"
    assert _check(report, "diagonal-vanishing")["status"] == "pass"


def test_corrupted_rejected_off_the_double(capsys):
    """The corrupted family only exists on the double."""
    code = run(["verify", "log-canonical", "--n", "2", "--bracket", "dual", "--corrupted"])

    assert code == EXIT_USAGE
    error = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert error["code"] == "usage_error"


def test_corollary_needs_n_above_two(capsys):
    """The pencil factorization is stated for n > 2."""
    code = run(["verify", "corollary", "--n", "2"])

    assert code == EXIT_USAGE


def test_verify_dual_rejects_small_n_before_running(capsys):
    """verify dual at n=2 is refused up front, so no partial report is written."""
    with patch("gldouble.harness.campaign.check_exponent_identity") as exponent_identity:
        code = run(["verify", "dual", "--n", "2", "--points", "3"])

    assert code == EXIT_USAGE
    exponent_identity.assert_not_called()
    captured = capsys.readouterr()
    assert captured.out == ""
    error = json.loads(captured.err.strip().splitlines()[-1])
    assert "--n >= 3" in error["detail"]


def test_missing_n_is_usage_error(capsys):
    """--n has no default."""
    code = run(["verify", "identity"])

    assert code == EXIT_USAGE
    error = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert error["exit_code"] == EXIT_USAGE
    assert "--n" in error["detail"]


def test_small_n_is_usage_error():
    """n = 1 is rejected before any check runs."""
    assert run(["verify", "identity", "--n", "1"]) == EXIT_USAGE


def test_unknown_flag_is_usage_error():
    """argparse errors map to exit code 1 instead of SystemExit(2)."""
    assert run(["verify", "log-canonical", "--n", "2", "--bogus"]) == EXIT_USAGE
    assert run(["frobnicate"]) == EXIT_USAGE


def test_too_few_points_is_usage_error():
    """Log-canonicality needs at least two points."""
    assert run(["verify", "log-canonical", "--n", "2", "--points", "1"]) == EXIT_USAGE


def test_resample_exhaustion_exit_code():
    """Exhausted resampling maps to exit code 3."""
    with patch("gldouble.main.execute", side_effect=ResampleExhausted("too many degenerate points")):
        assert run(["verify", "identity", "--n", "3"]) == EXIT_RESAMPLE


def test_with_resampling_retries_then_gives_up():
    """Attempts are retried up to the resample limit, then ResampleExhausted."""
    calls = []

    def attempt():
        calls.append(1)
        raise ResampleRequired("degenerate")

    with patch("gldouble.harness.campaign.settings") as mock_settings:
        mock_settings.resample_limit = 2
        with pytest.raises(ResampleExhausted):
            campaign.with_resampling(attempt, "test")

    assert len(calls) == 3


def test_with_resampling_returns_first_good_value():
    """A later attempt that succeeds ends the loop."""
    outcomes = iter([ResampleRequired("x"), ResampleRequired("y"), 42])

    def attempt():
        value = next(outcomes)
        if isinstance(value, Exception):
            raise value
        return value

    assert campaign.with_resampling(attempt, "test") == 42


def test_verify_identity_and_corollary(capsys):
    """The long identity and the pencil factorization hold on random data."""
    assert run(["verify", "identity", "--n", "3", "--trials", "3"]) == EXIT_PASS
    assert _check(_report(capsys), "long-identity")["status"] == "pass"

    assert run(["verify", "corollary", "--n", "3", "--trials", "2", "--no-regularity"]) == EXIT_PASS
    report = _report(capsys)
    assert _check(report, "corollary")["status"] == "pass"
    assert _check(report, "corollary-exchange-sign")["status"] == "evidence"
    assert not any(c["name"].startswith("divisibility") for c in report["checks"])


def test_verify_casimirs_both_brackets(capsys):
    """The diagonal g_k_k and the c_i are Casimirs of their brackets."""
    assert run(["verify", "casimirs", "--n", "2", "--points", "3"]) == EXIT_PASS
    assert _check(_report(capsys), "casimirs[double]")["status"] == "pass"

    assert run(["verify", "casimirs", "--n", "3", "--points", "3", "--bracket", "dual"]) == EXIT_PASS
    assert _check(_report(capsys), "casimirs[dual]")["status"] == "pass"


def test_verify_strings(capsys):
    """Only the phi_1_1 string is non-trivial on the double, and the dual strings reproduce detU."""
    assert run(["verify", "strings", "--n", "3", "--points", "3"]) == EXIT_PASS
    assert _check(_report(capsys), "strings[double]")["status"] == "pass"

    assert run(["verify", "strings", "--n", "3", "--points", "3", "--dual"]) == EXIT_PASS
    assert _check(_report(capsys), "strings[dual]")["status"] == "pass"


def test_verify_dual(capsys):
    """The dual exchange relation and the exponent identity hold for n=3."""
    code = run(["verify", "dual", "--n", "3", "--points", "3"])

    assert code == EXIT_PASS
    report = _report(capsys)
    assert _check(report, "exponent-identity")["status"] == "pass"
    assert _check(report, "dual-exchange")["status"] == "pass"


def test_quiver_json_to_stdout(capsys):
    """With --json - the quiver replaces the report on stdout and counts go to stderr."""
    code = run(["quiver", "--n", "4", "--json", "-"])

    assert code == EXIT_PASS
    captured = capsys.readouterr()
    doc = json.loads(captured.out)
    assert doc["counts"]["arrows"] == 58
    assert "arrows=58" in captured.err


def test_quiver_files(capsys, tmp_path):
    """DOT and report go to files when paths are given."""
    dot_path = tmp_path / "q3.dot"
    out_path = tmp_path / "report.json"

    code = run(["quiver", "--n", "3", "--dot", str(dot_path), "--out", str(out_path)])

    assert code == EXIT_PASS
    assert capsys.readouterr().out == ""
    assert dot_path.read_text().count(" -> ") == 28
    report = json.loads(out_path.read_text())
    check = _check(report, "quiver[double]")
    assert check["status"] == "pass"
    assert report["results"]["quiver"]["counts"]["vertices"] == 18


def test_quiver_diagonal_and_dual(capsys):
    """The reduced and dual quivers have n^2 vertices."""
    assert run(["quiver", "--n", "3", "--diagonal"]) == EXIT_PASS
    assert _report(capsys)["results"]["quiver"]["counts"]["vertices"] == 9

    assert run(["quiver", "--n", "3", "--dual"]) == EXIT_PASS
    assert _report(capsys)["results"]["quiver"]["counts"]["vertices"] == 9


def test_mutate_at_g22(capsys):
    """Mutation at g22 for n=2 gives a log-canonical, involutive, integral neighbour."""
    code = run(["mutate", "--n", "2", "--at", "g22", "--points", "4"])

    assert code == EXIT_PASS
    report = _report(capsys)
    assert _check(report, "mutation-algebra")["status"] == "pass"
    assert _check(report, "adjacent-log-canonical[g_2_2]")["status"] == "pass"
    assert _check(report, "involution[g_2_2]")["status"] == "pass"
    assert _check(report, "integrality")["status"] == "evidence"


def test_mutate_with_regularity(capsys):
    """--check-regularity adds a divisibility record per step."""
    code = run(["mutate", "--n", "2", "--at", "g22", "--points", "3", "--check-regularity"])

    assert code == EXIT_PASS
    assert _check(_report(capsys), "divisibility[g_2_2@1]")["status"] == "evidence"


def test_mutate_sequence_skips_mutated_denominators(capsys):
    """Returning to a mutated vertex leaves its divisibility unchecked."""
    code = run(["mutate", "--n", "2", "--sequence", "g22,g22", "--points", "3", "--check-regularity"])

    assert code == EXIT_PASS
    report = _report(capsys)
    assert _check(report, "divisibility[g_2_2@1]")["status"] == "evidence"
    assert _check(report, "divisibility[g_2_2@2]")["status"] == "skipped"


def test_mutate_rejects_stable_vertex():
    """Frozen and unknown vertices are usage errors."""
    assert run(["mutate", "--n", "2", "--at", "g11"]) == EXIT_USAGE
    assert run(["mutate", "--n", "2", "--at", "nowhere"]) == EXIT_USAGE
    assert run(["mutate", "--n", "2"]) == EXIT_USAGE


def test_normalize_vertex():
    """Compact names expand to full labels and full labels pass through."""
    assert normalize_vertex("phi11") == "phi_1_1"
    assert normalize_vertex("g22") == "g_2_2"
    assert normalize_vertex("hU23") == "hU_2_3"
    assert normalize_vertex("c1") == "c_1"
    assert normalize_vertex(" g_2_2 ") == "g_2_2"
    assert normalize_vertex("detU") == "detU"


def _execute(argv):
    return execute(resolve_options(build_parser().parse_args(argv)))


def test_reports_are_deterministic(capsys):
    """Same command and seed give byte-identical reports once timing is dropped."""
    argv = ["verify", "log-canonical", "--n", "3", "--points", "3", "--seed", "11"]

    first = _execute(argv)
    second = _execute(argv)

    assert first.to_json(with_timing=False) == second.to_json(with_timing=False)
    assert "duration_ms" not in first.to_json(with_timing=False)


def test_report_rationals_are_strings(capsys):
    """Exact values appear as p/q strings, never floats."""
    report = _execute(["verify", "log-canonical", "--n", "2", "--points", "3"])
    omega = report.checks[0].values["omega"]

    for row in omega:
        for value in row:
            assert value is None or "/" in value


def test_campaign_records_timing():
    """Each record carries the timing of the check that produced it."""
    run_ = campaign.Campaign(command=["test"], n=2, seed=5)

    records = run_.run("pair", lambda: [CheckRecord(name="a", status="pass"), CheckRecord(name="b", status="fail")])
    report = run_.finish(12)

    assert [r.name for r in records] == ["a", "b"]
    assert records[0].timing is records[1].timing
    assert report.timing.duration_ms == 12
    assert not run_.passed


def test_campaign_rng_is_seeded():
    """Two campaigns with the same seed draw the same numbers."""
    a = campaign.Campaign(command=["x"], n=2, seed=9)
    b = campaign.Campaign(command=["x"], n=2, seed=9)

    assert [a.rng.random() for _ in range(3)] == [b.rng.random() for _ in range(3)]


def test_seed_for_unknown_space():
    """Only the double, diagonal and dual spaces carry seeds."""
    with pytest.raises(UsageError):
        campaign.seed_for(2, "moon")


def test_config_file_supplies_defaults(tmp_path):
    """Config values fill unset flags, CLI flags win, and settings fields are applied."""
    config = tmp_path / "campaign.json"
    config.write_text(json.dumps({"points": 3, "seed": 7, "sample-bound": 5}))

    with patch.object(settings, "sample_bound", settings.sample_bound):
        args = resolve_options(
            build_parser().parse_args(["verify", "log-canonical", "--n", "2", "--seed", "2", "--config", str(config)])
        )
        assert settings.sample_bound == 5

    assert args.points == 3
    assert args.seed == 2
    assert args.bracket == settings.default_bracket


def test_config_file_errors_are_usage_errors(tmp_path):
    """Unreadable, malformed or invalid config files are usage errors."""
    missing = tmp_path / "missing.json"
    listing = tmp_path / "list.json"
    listing.write_text("[1, 2]")
    invalid = tmp_path / "invalid.json"
    invalid.write_text(json.dumps({"resample_limit": 0}))

    for path in (missing, listing, invalid):
        args = build_parser().parse_args(["verify", "identity", "--n", "2", "--config", str(path)])
        with pytest.raises(UsageError):
            resolve_options(args)


def test_flag_defaults_come_from_settings():
    """Unset flags take the Settings defaults."""
    args = resolve_options(build_parser().parse_args(["verify", "casimirs", "--n", "2"]))

    assert args.points == settings.default_points
    assert args.seed == settings.default_seed
    assert args.bracket == settings.default_bracket


def test_rng_draws_do_not_leak_between_commands():
    """The campaign rng is independent of the global random module."""
    random.seed(0)
    before = random.random()
    campaign.Campaign(command=["x"], n=2, seed=1).rng.random()
    random.seed(0)

    assert random.random() == before


def test_invalid_settings_are_listed_in_the_error_document(capsys, tmp_path):
    """Rejected settings come back as field/message entries on stderr."""
    config = tmp_path / "bad.json"
    config.write_text(json.dumps({"sample_bound": 0}))

    code = run(["verify", "identity", "--n", "2", "--config", str(config)])

    assert code == EXIT_USAGE
    error = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert error["code"] == "usage_error"
    assert "sample_bound" in error["errors"][0]["message"]
