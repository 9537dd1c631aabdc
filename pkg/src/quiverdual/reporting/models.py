"""Verification report records and their JSON/text renderings."""
import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from pydantic import BaseModel, Field

from quiverdual.algebra.identity import IdentityOutcome, Witness

REPORT_SCHEMA = 1


class WitnessRecord(BaseModel):
    """One sampled point; values and assignment are kept only on failure."""

    point_index: int
    attempt: int
    passed: bool
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    assignment: Optional[Dict[str, str]] = None

    model_config = {"extra": "forbid"}

    @classmethod
    def from_witness(cls, witness: Witness) -> "WitnessRecord":
        if witness.passed:
            return cls(
                point_index=witness.point_index, attempt=witness.attempt, passed=True
            )
        return cls(
            point_index=witness.point_index,
            attempt=witness.attempt,
            passed=False,
            lhs=str(witness.lhs),
            rhs=str(witness.rhs),
            assignment=dict(witness.assignment),
        )


class CheckRecord(BaseModel):
    identity_id: str
    citation: str
    passed: bool
    shape: Optional[Tuple[int, int, int]] = None
    bx: Optional[Tuple[int, ...]] = None
    bz: Optional[Tuple[int, ...]] = None
    ample: Optional[bool] = None
    fixed_point: Optional[Tuple[int, ...]] = None
    degree: Optional[int] = None
    degrees: Optional[Tuple[int, ...]] = None
    points: int = 0
    detail: str = ""
    witnesses: List[WitnessRecord] = Field(default_factory=list)
    elapsed_ms: float = 0.0

    model_config = {"extra": "forbid"}

    def sort_key(self) -> Tuple[Any, ...]:
        return (
            self.identity_id,
            self.shape or (),
            self.bx or (),
            self.bz or (),
            self.fixed_point or (),
            self.degree if self.degree is not None else -1,
            self.degrees or (),
        )


def record_from_outcome(
    identity_id: str,
    citation: str,
    outcome: IdentityOutcome,
    **context: Any,
) -> CheckRecord:
    return CheckRecord(
        identity_id=identity_id,
        citation=citation,
        passed=outcome.passed,
        points=len(outcome.witnesses),
        witnesses=[WitnessRecord.from_witness(w) for w in outcome.witnesses],
        **context,
    )


class Report(BaseModel):
    schema_version: int = Field(default=REPORT_SCHEMA, alias="schema")
    config: Dict[str, Any] = Field(default_factory=dict)
    max_order_checked: Optional[int] = None
    records: List[CheckRecord] = Field(default_factory=list)

    model_config = {"extra": "forbid", "populate_by_name": True}

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)

    @property
    def failures(self) -> List[CheckRecord]:
        return [record for record in self.records if not record.passed]

    def sorted(self) -> "Report":
        return self.model_copy(
            update={"records": sorted(self.records, key=CheckRecord.sort_key)}
        )

    def extended(self, records: Iterable[CheckRecord]) -> "Report":
        return self.model_copy(update={"records": self.records + list(records)})

    def to_json(self, include_timing: bool = True) -> str:
        """Canonical JSON: records sorted, keys sorted, schema tag first-class."""
        exclude = None if include_timing else {"records": {"__all__": {"elapsed_ms"}}}
        payload = self.sorted().model_dump(mode="json", by_alias=True, exclude=exclude)
        return json.dumps(payload, indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = []
        for record in self.sorted().records:
            status = "PASS" if record.passed else "FAIL"
            context = []
            if record.shape is not None:
                context.append("shape=({},{},{})".format(*record.shape))
            if record.bx is not None:
                context.append(f"bx={list(record.bx)} bz={list(record.bz or ())}")
            if record.fixed_point is not None:
                context.append(f"fp={list(record.fixed_point)}")
            if record.degree is not None:
                context.append(f"a={record.degree}")
            if record.degrees is not None:
                context.append(f"d={list(record.degrees)}")
            if record.points:
                context.append(f"points={record.points}")
            if record.detail:
                context.append(record.detail)
            lines.append(" ".join([status, record.identity_id] + context))
        summary = f"{len(self.records) - len(self.failures)}/{len(self.records)} passed"
        return "\n".join(lines + [summary])

    def write_to_file(self, file_path: Union[Path, str]) -> None:
        """
        Writes the report as canonical JSON.
        """
        Path(file_path).write_text(self.to_json())

    @classmethod
    def read_from_file(cls, file_path: Union[Path, str]) -> "Report":
        """
        Reads a report written by `write_to_file`.
        """
        return cls.model_validate_json(Path(file_path).read_text())
