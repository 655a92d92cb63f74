"""Fixed table of worked examples with their known curvature behaviour.

Entries are stored as document text so that fractions and radicals stay
exact until the single rounding in the parser.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .specdoc import SpecDocument, parse_document, to_spec

# "monotone" accepts either direction; a direction is only pinned where the
# source states it
MONO = "monotone"
MONO_DEC = "monotone-decreasing"
NON_MONO = "non-monotone"


@dataclass(frozen=True)
class ExampleRecord:
    key: str
    example: int
    source: str
    expected_verdict: str
    figure_ref: str

    @cached_property
    def document(self) -> SpecDocument:
        return parse_document(self.source)

    @property
    def spec(self):
        return to_spec(self.document)

    @property
    def expects_monotone(self) -> bool:
        return self.expected_verdict != NON_MONO

    def matches(self, kind: str) -> bool:
        if self.expected_verdict == MONO:
            return kind in ("monotone-decreasing", "monotone-increasing")
        return kind == self.expected_verdict


def _doc(matrix: str, seed: str, degree: int) -> str:
    return f"matrix = {matrix}\nseed = {seed}\ndegree = {degree}\n"


def _eig(h: str, phi: str, seed: str, degree: int, gamma: str = "pi/2") -> str:
    return f"h = {h}\nphi = {phi}\ngamma = {gamma}\nseed = {seed}\ndegree = {degree}\n"


_M13 = (
    "3/4*(2*sqrt(2+sqrt(3)) + 2 - sqrt(3)), "
    "-3/4*(6 - sqrt(3))*sqrt(2 - sqrt(3))/sqrt(2 + sqrt(3)), "
    "3/4, "
    "3/4*(2*sqrt(2+sqrt(3)) - 2 + sqrt(3))"
)
_M14 = "3*sqrt(2)/2, -5*sqrt(2)/(2*sqrt(3)), sqrt(6)/2, sqrt(2)/2"
_M15 = "2*sqrt(3) - 1, -5/sqrt(3), sqrt(3), 2*sqrt(3) + 1"

REGISTRY: tuple[ExampleRecord, ...] = (
    ExampleRecord("1", 1, _doc("5/4, 0, 0, 1/10", "1, -1", 3), NON_MONO,
                  "cubic; curvature has one interior extremum"),
    ExampleRecord("2", 2, _doc("4, 0, 0, 1", "2/5, -5", 3), NON_MONO,
                  "cubic; seed coordinate condition violated"),
    ExampleRecord("3", 3, _doc("3/2, -3*sqrt(3)/4, 0, 3/4", "2 - sqrt(3), -1", 5), MONO,
                  "quintic; certified by the positive real eigenvalue test"),
    ExampleRecord("4", 4, _doc("3/2, 6/(5*sqrt(3)), 0, 3/10", "5/4, -sqrt(3)/4", 4), MONO,
                  "quartic; monotone although sigma1 + sigma2 < 2"),
    ExampleRecord("5", 5, _doc("3/2, 0, 0, 7/10", "1, -11/10", 3), MONO,
                  "cubic; monotone although the symmetric test fails"),
    ExampleRecord("6", 6, _doc("7/10, 0, 1, 7/10", "10, 1", 3), NON_MONO,
                  "cubic; defective with sigma < 1"),
    ExampleRecord("7", 7, _doc("1, 0, 1, 1", "1, -1", 3), NON_MONO,
                  "cubic; defective with mu1*mu2 < 0"),
    ExampleRecord("8", 8, _doc("1, 0, 1, 1", "3, 1", 3), MONO,
                  "cubic; certified by the Jordan test"),
    ExampleRecord("9", 9, _doc("1/2, -2, 0, 1/2", "3/2, -1", 3), MONO,
                  "cubic; monotone although sigma < 1"),
    ExampleRecord("10", 10, _doc("3/2, -2, 0, 3/2", "7/2, 3/4", 4), MONO,
                  "quartic; monotone although mu1*mu2 < 0"),
    ExampleRecord("11", 11, _eig("1.8", "0.925", "0.4, 0.1", 7), MONO,
                  "degree 7 typical curve, h > 1/cos(phi)"),
    ExampleRecord("12", 12, _eig("1.2", "0.925", "0.4, 0.1", 7), NON_MONO,
                  "degree 7 typical curve, cos(phi) < h < 1/cos(phi)"),
    ExampleRecord("13", 13, _doc(_M13, "10*cos(5*pi/12), 10*sin(5*pi/12)", 5), MONO_DEC,
                  "quintic; complex eigenvalues, positive decreasing curvature"),
    ExampleRecord("14", 14, _doc(_M14, "2, 2*sqrt(3)", 3), NON_MONO,
                  "cubic; complex test fails although h*cos(phi) > 1"),
    ExampleRecord("15@3", 15, _doc(_M15, "4, 0", 3), MONO_DEC,
                  "cubic; degree-dependent complex test holds"),
    ExampleRecord("15@8", 15, _doc(_M15, "4, 0", 8), NON_MONO,
                  "degree 8; degree-dependent complex test fails"),
)


class UnknownExample(KeyError):
    pass


def select(example_id: str | int | None = None) -> list[ExampleRecord]:
    """All records, or those of one example number or key (``"15"``, ``"15@8"``)."""
    if example_id is None:
        return list(REGISTRY)
    text = str(example_id).strip()
    out = [r for r in REGISTRY if r.key == text or str(r.example) == text]
    if not out:
        raise UnknownExample(text)
    return out
