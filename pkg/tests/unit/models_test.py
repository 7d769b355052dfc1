"""Unit tests for Pydantic models."""

import pytest
from pydantic import ValidationError

from tradeoff_sssp.models import CSV_HEADER, ReplayStep, RunReport


def _report(**overrides: object) -> RunReport:
    data: dict[str, object] = {
        "algo": "basic",
        "n": 4,
        "m": 4,
        "t": 2,
        "ell": 0,
        "p": 0,
        "work": 120,
        "depth": 17,
        "steps": 2,
        "oracle_ok": True,
        "ms": 1.23456,
    }
    data.update(overrides)
    return RunReport.model_validate(data)


class TestRunReport:
    """Tests for the RunReport model."""

    def test_csv_row_matches_header(self) -> None:
        """The row has one field per header column."""
        row = _report().to_csv_row()
        assert len(row.split(",")) == len(CSV_HEADER.split(","))

    def test_csv_row_format(self) -> None:
        """Booleans are lowercase and wall time has three decimals."""
        assert _report().to_csv_row() == "basic,4,4,2,0,0,120,17,2,true,1.235"

    def test_failed_oracle(self) -> None:
        assert _report(oracle_ok=False).to_csv_row().split(",")[9] == "false"

    def test_requires_counters(self) -> None:
        with pytest.raises(ValidationError):
            RunReport(algo="basic", n=1, m=0)  # type: ignore[call-arg]

    def test_json_round_trip(self) -> None:
        report = _report()
        assert RunReport.model_validate_json(report.model_dump_json()) == report


class TestReplayStep:
    def test_serializes_to_dict(self) -> None:
        step = ReplayStep(line=2, ratio="3/2", cycle=[1, 0], checksum="-3")
        assert step.model_dump() == {"line": 2, "ratio": "3/2", "cycle": [1, 0], "checksum": "-3"}
