"""Verdict reports and their text, TSV and JSON renderings.

Every rendering is a pure function of the report, so identical inputs give
identical bytes whatever the thread count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .certify import Certification
from .core import Entry, Residual
from .fileformat import fmt_rational

PASS, FAIL, ERROR = "PASS", "FAIL", "ERROR"


def fmt_index(index: tuple[int, ...]) -> str:
    return "(" + ",".join(str(i + 1) for i in index) + ")"


def fmt_binding(binding) -> str:
    return ",".join(f"{k}={fmt_rational(v)}" for k, v in binding)


@dataclass
class Verdict:
    law: str
    status: str
    entries: tuple[Entry, ...] = ()
    message: str = ""

    @classmethod
    def of(cls, law: str, res: Residual) -> "Verdict":
        return cls(law, PASS if res.passed else FAIL, tuple(sorted(res.entries)))


@dataclass
class Run:
    source: str
    binding: tuple[tuple[str, Fraction], ...] = ()
    verdicts: list[Verdict] = field(default_factory=list)


@dataclass
class Report:
    command: str
    runs: list[Run] = field(default_factory=list)
    certifications: list[tuple[str, Certification]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        statuses = [v.status for run in self.runs for v in run.verdicts]
        if ERROR in statuses:
            return 2
        if FAIL in statuses or any(not c.passed for _, c in self.certifications):
            return 1
        return 0

    # --------------------------------------------------------------- text

    def to_text(self) -> str:
        out = [f"alia {self.command}"]
        for run in self.runs:
            head = f"file {run.source}"
            if run.binding:
                head += f" [{fmt_binding(run.binding)}]"
            out.append(head)
            for v in run.verdicts:
                out.extend(_verdict_lines(v, "  "))
        for source, cert in self.certifications:
            out.append(f"file {source}")
            out.append(f"  {cert.law}: {cert.status}")
            out.append(f"    params: {' '.join(cert.params) or '-'}")
            out.append(f"    degree bound: {cert.bound}")
            out.append(f"    points: {' '.join(str(p) for p in cert.points)}")
            ok = sum(run.residual.passed for run in cert.runs)
            out.append(f"    runs: {ok}/{len(cert.runs)} pass")
            w = cert.witness
            if w is not None:
                out.append(f"    witness: {fmt_binding(w.binding) or '-'}")
                out.extend(_verdict_lines(Verdict.of(cert.law, w.residual), "      ")[1:])
        out.extend(f"note: {n}" for n in self.notes)
        out.append(f"exit {self.exit_code}")
        return "\n".join(out) + "\n"

    # ---------------------------------------------------------------- tsv

    def to_tsv(self) -> str:
        rows = [("record", "source", "binding", "law", "status", "part", "index", "value")]
        for run in self.runs:
            b = fmt_binding(run.binding)
            for v in run.verdicts:
                rows.append(("verdict", run.source, b, v.law, v.status, "", "", v.message))
                for e in v.entries:
                    rows.append(("entry", run.source, b, v.law, v.status, e.part,
                                 fmt_index(e.index), fmt_rational(e.value)))
        for source, cert in self.certifications:
            for pr in cert.runs:
                b = fmt_binding(pr.binding)
                status = PASS if pr.residual.passed else FAIL
                rows.append(("point", source, b, cert.law, status, "", "", ""))
                for e in sorted(pr.residual.entries):
                    rows.append(("entry", source, b, cert.law, status, e.part,
                                 fmt_index(e.index), fmt_rational(e.value)))
            w = cert.witness
            detail = f"bound={cert.bound};points={','.join(map(str, cert.points))}"
            if w is not None:
                detail += f";witness={fmt_binding(w.binding)}"
            rows.append(("certification", source, "", cert.law, cert.status, "", "", detail))
        return "".join("\t".join(r) + "\n" for r in rows)

    # --------------------------------------------------------------- json

    def to_dict(self) -> dict:
        def entries(es):
            return [{"part": e.part, "index": [i + 1 for i in e.index],
                     "value": fmt_rational(e.value)} for e in es]

        return {
            "command": self.command,
            "exit": self.exit_code,
            "runs": [{
                "source": run.source,
                "binding": {k: fmt_rational(v) for k, v in run.binding},
                "verdicts": [{"law": v.law, "status": v.status, "message": v.message,
                              "entries": entries(v.entries)} for v in run.verdicts],
            } for run in self.runs],
            "certifications": [{
                "source": source, "law": c.law, "status": c.status, "params": list(c.params),
                "degree_bound": c.bound, "points": list(c.points),
                "witness": None if c.witness is None
                else {k: fmt_rational(v) for k, v in c.witness.binding},
                "runs": [{"binding": {k: fmt_rational(v) for k, v in pr.binding},
                          "status": PASS if pr.residual.passed else FAIL,
                          "entries": entries(sorted(pr.residual.entries))} for pr in c.runs],
            } for source, c in self.certifications],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def render(self, fmt: str = "text") -> str:
        return {"text": self.to_text, "tsv": self.to_tsv, "json": self.to_json}[fmt]()


def _verdict_lines(v: Verdict, pad: str) -> list[str]:
    if v.status == PASS:
        return [f"{pad}{v.law}: PASS"]
    if v.status == ERROR:
        return [f"{pad}{v.law}: ERROR {v.message}"]
    head = f"{pad}{v.law}: FAIL ({len(v.entries)} nonzero)"
    if v.message:
        head += f" {v.message}"
    lines = [head]
    for e in v.entries:
        label = e.part or "-"
        lines.append(f"{pad}  {label} {fmt_index(e.index)} = {fmt_rational(e.value)}")
    return lines
