"""Audit reports: per-law instance counts, failures with witnesses, and the
machine-readable / delimited / figure output paths."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

REPORT_SCHEMA = "twocheck-report/1"


@dataclass
class AuditReport:
    law: str
    target: str = ""
    instances: int = 0
    failures: list = field(default_factory=list)
    sampled: bool = False

    @property
    def passed(self) -> bool:
        return not self.failures

    def count(self, n: int = 1):
        self.instances += n

    def fail(self, instance, left="", right=""):
        self.failures.append({"instance": str(instance), "left": str(left), "right": str(right)})

    def __repr__(self):
        state = "pass" if self.passed else f"FAIL({len(self.failures)})"
        return f"AuditReport({self.law}@{self.target}: {self.instances} instances, {state})"


def failing_laws(reports) -> set:
    return {r.law for r in reports if not r.passed}


def as_document(reports, seed=0, source="", max_counterexamples=5) -> dict:
    """Stable machine-readable report; wall time deliberately excluded so that
    identical inputs and seed give byte-identical output."""
    audits = []
    for r in sorted(reports, key=lambda r: (r.target, r.law)):
        audits.append(
            {
                "law": r.law,
                "target": r.target,
                "instances": r.instances,
                "passed": r.passed,
                "sampled": r.sampled,
                "failures": len(r.failures),
                "counterexamples": r.failures[:max_counterexamples],
            }
        )
    return {"schema": REPORT_SCHEMA, "seed": seed, "source": source, "audits": audits}


def render_json(document: dict) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def delimited_lines(reports, times=None):
    """One tab-separated line per audit: law, target, instances, status, ms."""
    out = []
    for r in sorted(reports, key=lambda r: (r.target, r.law)):
        ms = "" if not times else f"{times.get((r.target, r.law), 0.0):.1f}"
        status = "PASS" if r.passed else "FAIL"
        flag = "~" if r.sampled else ""
        out.append(f"{r.law}\t{r.target}\t{r.instances}{flag}\t{status}\t{ms}")
    return out


def render_figure(reports, path, title="audit summary"):
    """Horizontal bar chart of instance counts per law, colored by status."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    reports = sorted(reports, key=lambda r: (r.target, r.law))
    labels = [f"{r.law}@{r.target}" if r.target else r.law for r in reports]
    counts = [max(r.instances, 1) for r in reports]
    colors = ["#2a9d4e" if r.passed else "#c0392b" for r in reports]
    height = max(2.0, 0.32 * len(labels) + 1.2)
    fig, ax = plt.subplots(figsize=(8, height))
    ax.barh(range(len(labels)), counts, color=colors)
    ax.set_yticks(range(len(labels)))
    ax.set_yticklabels(labels, fontsize=7)
    ax.set_xscale("log")
    ax.set_xlabel("instances checked")
    ax.set_title(title)
    ax.invert_yaxis()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
