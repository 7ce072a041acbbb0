"""
cli/schemas.py

Pydantic models for the command line: the validated run configuration and
the `--json` payload of every command.

Invariant values always appear as their canonical strings, so the JSON view
and the text view compare equal byte for byte.
"""

from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator


# ---------------------------------------------------------------------------
# Run configuration
# ---------------------------------------------------------------------------

class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


class RunConfig(BaseModel):
    """One command invocation, validated before any work starts."""
    subcommand: str
    inputs:     List[Path]       = Field(default_factory=list, description="Input files; all must exist")
    ring:       Optional[str]    = Field(None, description="Ring descriptor: Z<n>, Z or LaurentZ")
    seed:       int              = Field(0, ge=0)
    steps:      int              = Field(0, ge=0)
    output:     OutputFormat     = OutputFormat.TEXT

    @field_validator("inputs")
    @classmethod
    def _inputs_exist(cls, paths: List[Path]) -> List[Path]:
        missing = [str(p) for p in paths if not p.exists()]
        if missing:
            raise ValueError(f"no such file: {', '.join(missing)}")
        return paths


# ---------------------------------------------------------------------------
# Payloads
# ---------------------------------------------------------------------------

class DiagramPayload(BaseModel):
    code:        str
    components:  int
    crossings:   int
    writhe:      int


class ParityPayload(BaseModel):
    parity:      str
    assignment:  Dict[str, int]


class RealizabilityPayload(BaseModel):
    code:        str
    genus:       int
    realizable:  bool


class MoveStep(BaseModel):
    step:        int
    move:        str


class PerturbPayload(BaseModel):
    seed:        int
    steps:       int
    moves:       List[MoveStep]
    code:        str


class ViolationPayload(BaseModel):
    id:          str
    witness:     str
    detail:      str


class CheckPayload(BaseModel):
    """Outcome of an axiom or relation check."""
    subject:     str
    ok:          bool
    checked:     Optional[int] = None
    violations:  List[ViolationPayload] = Field(default_factory=list)


class ColoringsPayload(BaseModel):
    biquandle:   str
    count:       int
    colorings:   List[List[int]] = Field(default_factory=list)


class MultisetEntry(BaseModel):
    value:        str
    multiplicity: int


class MultisetPayload(BaseModel):
    ring:        str
    colorings:   int
    values:      List[MultisetEntry]
    polynomial:  Optional[str] = None


class ValuePayload(BaseModel):
    ring:        str
    value:       str


class SearchPayload(BaseModel):
    ring:        str
    biquandle:   str
    solutions:   List[str]


class ComparePayload(BaseModel):
    equal:       bool
    left:        List[MultisetEntry]
    right:       List[MultisetEntry]


class SamplePayload(BaseModel):
    seed:        int
    code:        str
    equal:       bool


class EquivalencePayload(BaseModel):
    seed:        int
    invariant:   str
    baseline:    str
    ok:          bool
    samples:     List[SamplePayload]
