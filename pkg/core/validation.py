"""
Validation Report

Diagnostics collected by the manifold and surface validators. Validators
never raise; they append violations here and the caller decides.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass(frozen=True)
class Violation:
    """One broken invariant: a machine code, the offending id, and a message."""
    code: str
    subject: str
    message: str

    def __str__(self) -> str:
        return f"[{self.code}] {self.subject}: {self.message}"


@dataclass
class ValidationReport:
    """
    Errors make an object invalid; warnings are informational only
    (e.g. a gluing matrix with det = +1).
    """
    errors: List[Violation] = field(default_factory=list)
    warnings: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def error(self, code: str, subject: str, message: str) -> None:
        self.errors.append(Violation(code, subject, message))

    def warn(self, code: str, subject: str, message: str) -> None:
        self.warnings.append(Violation(code, subject, message))

    def extend(self, other: "ValidationReport") -> None:
        self.errors.extend(other.errors)
        self.warnings.extend(other.warnings)

    def codes(self) -> List[str]:
        return [v.code for v in self.errors]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ok': self.ok,
            'errors': [str(v) for v in self.errors],
            'warnings': [str(v) for v in self.warnings]
        }
