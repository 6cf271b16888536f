"""Figures for reports: nonzero residual coordinates per law part, and per sample point
for certification runs.  Uses the Agg backend so no display is needed."""

from __future__ import annotations

import os
import re

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .report import Report, fmt_binding  # noqa: E402


def _slug(text: str) -> str:
    return re.sub(r"[^A-Za-z0-9._-]+", "_", text).strip("_") or "run"


def _save(fig, path: str) -> str:
    # fixed metadata keeps repeated runs identical
    fig.savefig(path, dpi=100, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_run(run, path: str) -> str:
    labels, counts = [], []
    for v in run.verdicts:
        parts: dict[str, int] = {}
        for e in v.entries:
            parts[e.part] = parts.get(e.part, 0) + 1
        if not parts:
            labels.append(v.law)
            counts.append(0)
        for part in sorted(parts):
            labels.append(f"{v.law}/{part}" if part else v.law)
            counts.append(parts[part])
    fig, ax = plt.subplots(figsize=(max(4, 0.6 * len(labels) + 2), 3.5))
    colors = ["tab:red" if k else "tab:green" for k in counts]
    ax.bar(range(len(labels)), counts, color=colors)
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("nonzero coordinates")
    title = os.path.basename(run.source)
    if run.binding:
        title += f" [{fmt_binding(run.binding)}]"
    ax.set_title(title, fontsize=10)
    fig.tight_layout()
    return _save(fig, path)


def plot_certification(source: str, cert, path: str) -> str:
    labels = [fmt_binding(pr.binding) or "-" for pr in cert.runs]
    counts = [len(pr.residual.entries) for pr in cert.runs]
    fig, ax = plt.subplots(figsize=(max(4, 0.5 * len(labels) + 2), 3.5))
    ax.plot(range(len(labels)), counts, marker="o", color="tab:blue")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("nonzero coordinates")
    ax.set_title(f"{os.path.basename(source)}: {cert.law} {cert.status} (bound {cert.bound})",
                 fontsize=10)
    fig.tight_layout()
    return _save(fig, path)


def plot_report(report: Report, directory: str) -> list[str]:
    """Write one PNG per run and per certification; returns the paths in order."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    for i, run in enumerate(report.runs):
        name = f"{i:02d}-{_slug(os.path.basename(run.source))}"
        if run.binding:
            name += "-" + _slug(fmt_binding(run.binding))
        paths.append(plot_run(run, os.path.join(directory, name + ".png")))
    for i, (source, cert) in enumerate(report.certifications):
        name = f"cert-{i:02d}-{_slug(os.path.basename(source))}-{_slug(cert.law)}"
        paths.append(plot_certification(source, cert, os.path.join(directory, name + ".png")))
    return paths
