"""Tests for settings validation, config files and error documents."""
import json
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from gldouble.config import Settings, build_settings, configure, load_config_file, settings
from gldouble.schemas.errors import ErrorResponse, create_error_response, settings_errors
from gldouble.schemas.reports import Report, rational, rational_matrix
from gldouble.tracking import CheckTimer


def test_defaults():
    """Defaults match the documented campaign values."""
    s = Settings()
    assert s.sample_bound == 7
    assert s.resample_limit == 32
    assert s.default_points == 5
    assert s.default_bracket == "double"
    assert s.schema_version == 1


def test_log_level_is_normalized():
    """Level names are accepted in any case."""
    assert Settings(log_level=" debug ").log_level == "DEBUG"


@pytest.mark.parametrize(
    "overrides",
    [
        {"sample_bound": 0},
        {"resample_limit": 0},
        {"max_mutation_depth": 0},
        {"divisibility_trials": 0},
        {"default_points": 0},
        {"default_bracket": "lie"},
        {"log_level": "LOUD"},
    ],
)
def test_invalid_settings_rejected(overrides):
    """Out-of-range values raise a validation error."""
    with pytest.raises(ValidationError):
        build_settings(overrides)


def test_errors_are_collected():
    """All range problems are reported together."""
    with pytest.raises(ValueError) as exc_info:
        Settings(sample_bound=0, resample_limit=0)
    message = str(exc_info.value)
    assert "sample_bound" in message
    assert "resample_limit" in message


def test_environment_is_ignored(monkeypatch):
    """Settings come from defaults and explicit overrides only."""
    monkeypatch.setenv("SAMPLE_BOUND", "3")
    assert Settings().sample_bound == 7


def test_load_config_file(tmp_path):
    """Dashed flag names are turned into field names."""
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"sample-bound": 4, "points": 9}))

    assert load_config_file(path) == {"sample_bound": 4, "points": 9}


def test_load_config_file_rejects_non_objects(tmp_path):
    """A config file must hold a JSON object."""
    path = tmp_path / "c.json"
    path.write_text("3")

    with pytest.raises(ValueError):
        load_config_file(path)


def test_configure_updates_shared_settings_in_place():
    """configure() mutates the module-level settings so every importer sees it."""
    with patch.object(settings, "divisibility_trials", settings.divisibility_trials):
        same = configure({"divisibility_trials": 3})
        assert same is settings
        assert settings.divisibility_trials == 3


def test_configure_leaves_settings_alone_on_error():
    """A rejected override changes nothing."""
    before = settings.model_dump()
    with pytest.raises(ValueError):
        configure({"sample_bound": -1})
    assert settings.model_dump() == before


def test_create_error_response():
    """Optional fields only appear when set."""
    assert create_error_response("bad flag", 1) == {"detail": "bad flag", "exit_code": 1}

    doc = create_error_response(
        "bad config", 1, code="usage_error", errors=[{"field": "sample_bound"}], command=["verify", "identity"]
    )
    assert doc["code"] == "usage_error"
    assert doc["command"] == ["verify", "identity"]
    assert ErrorResponse(**doc).errors == [{"field": "sample_bound"}]


def test_settings_errors_flattens_validation_errors():
    """Range failures become field/message entries."""
    with pytest.raises(ValidationError) as exc_info:
        Settings(sample_bound=0)

    errors = settings_errors(exc_info.value)
    assert errors[0]["field"] == "settings"
    assert "sample_bound" in errors[0]["message"]


def test_rational_formatting():
    """Rationals are always written p/q."""
    from fractions import Fraction

    assert rational(3) == "3/1"
    assert rational(Fraction(-2, 4)) == "-1/2"
    assert rational_matrix([[Fraction(1, 3), None]]) == [["1/3", None]]


def test_report_schema_alias():
    """Reports serialize the schema version under "schema"."""
    doc = json.loads(Report(command=["verify"], n=2, seed=1).to_json())
    assert doc["schema"] == settings.schema_version
    assert "schema_" not in doc


def test_check_timer_logs(caplog):
    """CheckTimer logs start and completion with the check name."""
    with caplog.at_level("INFO", logger="gldouble.tracking.timing"):
        with CheckTimer("demo", n=3) as timer:
            pass

    messages = [r.getMessage() for r in caplog.records]
    assert "Check started" in messages
    assert "Check completed" in messages
    assert caplog.records[-1].check == "demo"
    assert caplog.records[-1].n == 3
    assert timer.timing.duration_ms >= 0


def test_check_timer_logs_failures(caplog):
    """Exceptions are logged and re-raised."""
    with caplog.at_level("INFO", logger="gldouble.tracking.timing"):
        with pytest.raises(RuntimeError):
            with CheckTimer("boom"):
                raise RuntimeError("nope")

    failed = [r for r in caplog.records if r.getMessage() == "Check failed"]
    assert failed and failed[0].error == "nope"
