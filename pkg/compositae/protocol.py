import csv
import io
import json
from dataclasses import asdict, dataclass, field

from beartype.typing import Dict, List, Literal, Optional

from compositae import constants
from compositae.conformance import ConformanceRecord

OutputFormat = Literal["json", "text", "csv"]
FORMATS = ("json", "text", "csv")


class Modes:
    COMPOSITA = "composita"
    BELL = "bell"
    DERIVATIVE = "derivative"
    VERIFY = "verify"


@dataclass
class OutputRecord:
    mode: str
    n: int
    k: Optional[int]
    value: str


@dataclass
class Document:
    mode: str
    expr: Optional[str] = None
    order: Optional[int] = None
    at: Optional[str] = None
    records: List[OutputRecord] = field(default_factory=list)
    checks: List[ConformanceRecord] = field(default_factory=list)
    passed: Optional[bool] = None
    seed: Optional[int] = None
    schema_version: int = constants.SCHEMA_VERSION

    def rows(self) -> Dict[int, List[OutputRecord]]:
        rows: Dict[int, List[OutputRecord]] = {}
        for r in self.records:
            rows.setdefault(r.n, []).append(r)
        return rows

    def to_json(self) -> str:
        d = asdict(self)
        ordered = {"schema_version": d.pop("schema_version")}
        ordered.update(d)
        return json.dumps(ordered, indent=2)

    @staticmethod
    def from_json(text: str) -> "Document":
        d = json.loads(text)
        version = d.get("schema_version")
        if version != constants.SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version: {version}")
        d["records"] = [OutputRecord(**r) for r in d.get("records", [])]
        d["checks"] = [ConformanceRecord(**c) for c in d.get("checks", [])]
        return Document(**d)

    def render_text(self) -> str:
        if self.mode == Modes.VERIFY:
            return self._render_report()
        lines = []
        if self.mode == Modes.DERIVATIVE:
            for r in self.records:
                lines.append(f"order {r.n}: {r.value}")
        else:
            for n, records in self.rows().items():
                lines.append(f"row {n}: " + " ; ".join(r.value for r in records))
        return "\n".join(lines) + "\n"

    def _render_report(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.status:<11} {c.entry} | {c.location} | x={c.point}"
            if c.status != "pass":
                line += f" | expected {c.expected} | computed {c.computed}"
            if c.note:
                line += f" | {c.note}"
            lines.append(line)
        counts = {s: sum(1 for c in self.checks if c.status == s) for s in ("pass", "fail", "discrepancy")}
        verdict = "PASSED" if self.passed else "FAILED"
        lines.append(
            f"{verdict}: {len(self.checks)} records, {counts['pass']} pass, "
            f"{counts['discrepancy']} discrepancy, {counts['fail']} fail"
        )
        return "\n".join(lines) + "\n"

    def render_csv(self) -> str:
        out = io.StringIO()
        if self.mode == Modes.VERIFY:
            names = list(ConformanceRecord.__dataclass_fields__)
            writer = csv.DictWriter(out, fieldnames=names, lineterminator="\n")
            writer.writeheader()
            for c in self.checks:
                writer.writerow(asdict(c))
        else:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["mode", "n", "k", "value"])
            for r in self.records:
                writer.writerow([r.mode, r.n, "" if r.k is None else r.k, r.value])
        return out.getvalue()

    def render(self, fmt: OutputFormat) -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.render_csv()
        return self.render_text()
