# report.py – per-axiom verification outcomes, as text or PDF

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from fpdf import FPDF

from config import MAX_WITNESSES

logger = logging.getLogger(__name__)

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class Witness:
    instance: tuple[tuple[str, str], ...]
    lhs: str
    rhs: str

    def __str__(self) -> str:
        inst = ", ".join(f"{k}={v}" for k, v in self.instance)
        return f"{inst}: {self.lhs} != {self.rhs}"


@dataclass
class AxiomResult:
    axiom: str
    description: str
    instances: int = 0
    failures: int = 0
    status: str = PASS
    witnesses: list[Witness] = field(default_factory=list)
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status != FAIL


class Tally:
    """Collects the instances of one axiom."""

    def __init__(self, axiom: str, description: str, show: Callable[[object], str] = str):
        self.result = AxiomResult(axiom, description)
        self.show = show

    def check(self, instance: dict, lhs, rhs) -> bool:
        self.result.instances += 1
        if lhs == rhs:
            return True
        self._record(instance, self.show(lhs), self.show(rhs))
        return False

    def fail(self, instance: dict, lhs: str, rhs: str) -> None:
        """An instance that failed before its two sides could be compared."""
        self.result.instances += 1
        self._record(instance, lhs, rhs)

    def _record(self, instance: dict, lhs: str, rhs: str) -> None:
        r = self.result
        r.failures += 1
        r.status = FAIL
        if len(r.witnesses) < MAX_WITNESSES:
            r.witnesses.append(Witness(tuple((k, str(v)) for k, v in instance.items()), lhs, rhs))

    def skip(self, note: str) -> None:
        self.result.status = SKIP
        self.result.note = note

    def done(self) -> AxiomResult:
        return self.result


@dataclass
class Report:
    title: str
    results: list[AxiomResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, result: AxiomResult) -> None:
        self.results.append(result)

    def extend(self, other: "Report") -> None:
        self.results.extend(other.results)
        self.notes.extend(other.notes)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failed(self) -> list[AxiomResult]:
        return [r for r in self.results if r.status == FAIL]

    def result(self, axiom: str) -> AxiomResult:
        for r in self.results:
            if r.axiom == axiom:
                return r
        raise KeyError(axiom)

    def lines(self) -> list[str]:
        out = [self.title]
        out += [f"  note: {n}" for n in self.notes]
        for r in self.results:
            head = f"{r.status.upper():4}  {r.axiom}  {r.description}  [{r.instances} instances"
            head += f", {r.failures} failing]" if r.failures else "]"
            out.append(head)
            if r.note:
                out.append(f"      {r.note}")
            for w in r.witnesses:
                out.append(f"      {w}")
            if r.failures > len(r.witnesses):
                out.append(f"      ... {r.failures - len(r.witnesses)} more")
        verdict = "all axioms hold" if self.passed else f"{len(self.failed())} axioms fail"
        out.append(f"summary: {verdict}")
        return out

    def format_text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def _latin1(text: str) -> str:
    # core PDF fonts only cover latin-1
    return text.encode("latin-1", errors="replace").decode("latin-1")


def write_pdf(report: Report, path: str | Path) -> Path:
    """Write the report as a PDF document."""
    pdf = FPDF()
    pdf.set_auto_page_break(auto=True, margin=15)
    pdf.add_page()
    pdf.set_font("Arial", "B", 14)
    pdf.cell(0, 10, _latin1(report.title), ln=True)

    pdf.ln(4)
    pdf.set_font("Arial", "", 11)
    for note in report.notes:
        pdf.multi_cell(0, 6, _latin1(f"Note: {note}"))

    for r in report.results:
        pdf.set_font("Arial", "B", 11)
        pdf.multi_cell(0, 6, _latin1(f"{r.axiom} - {r.description}"))
        pdf.set_font("Arial", "", 11)
        pdf.multi_cell(0, 5, _latin1(f"{r.status.upper()}: {r.instances} instances, {r.failures} failing"))
        pdf.set_font("Arial", "I", 10)
        for w in r.witnesses:
            pdf.multi_cell(0, 5, _latin1(str(w)))
        pdf.ln(2)

    path = Path(path)
    path.write_bytes(pdf.output(dest="S").encode("latin-1"))
    logger.info("wrote report %r to %s", report.title, path)
    return path
