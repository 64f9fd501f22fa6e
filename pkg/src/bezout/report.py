"""Render verification reports: delimited per-ring rows, PNG figures, and a
plain-text summary for terminals.

The figure path imports matplotlib lazily and forces the Agg backend, so the
package stays importable on headless machines and without matplotlib unless a
report directory is actually requested.
"""

from __future__ import annotations

import csv
import json
import os

from . import sweeps

REPORT_JSON = "report.json"
SWEEP_CSV = "sweep.csv"
SUMMARY_PNG = "sweep_summary.png"
STRIP_PNG = "classification_strip.png"


def dump_json(payload):
    """Canonical serialization: sorted keys, two-space indent, one trailing
    newline.  Identical payloads give identical bytes."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def write_sweep_csv(results, path):
    """One row per (selector, ring) with a pass/FAIL verdict."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["selector", "ring", "status"])
        for res in results:
            for label, ok in res.per_ring:
                writer.writerow([res.selector, label, "pass" if ok else "FAIL"])


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_summary_figure(report, results, path):
    """Horizontal bars: rings checked per selector, violations overlaid."""
    plt = _pyplot()
    names = [r.selector for r in results]
    checked = [r.checked for r in results]
    bad = [len(r.violations) for r in results]
    fig, ax = plt.subplots(figsize=(8, 0.5 * max(len(names), 4) + 1.5))
    pos = range(len(names))
    ax.barh(pos, checked, color="#4878a8", label="rings checked")
    ax.barh(pos, bad, color="#c44e52", label="violations")
    ax.set_yticks(list(pos))
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    ax.set_xlabel("count")
    lo, hi = report["range"]
    ax.set_title(f"verification sweep over Z/a, a in [{lo}, {hi}], seed {report['seed']}")
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_classification_strip(report, path):
    """Binary strip per modulus: prime / prime power / squarefree, computed
    from the slow trial-division oracles so the figure is input-only."""
    plt = _pyplot()
    lo, hi = report["range"]
    xs = list(range(lo, hi + 1))
    rows = [
        ("prime", [sweeps.trial_prime(a) for a in xs]),
        ("prime power", [sweeps.trial_prime_power(a) for a in xs]),
        ("squarefree", [_trial_squarefree(a) for a in xs]),
    ]
    grid = [[1 if v else 0 for v in vals] for _, vals in rows]
    fig, ax = plt.subplots(figsize=(max(6, len(xs) / 12), 2.2))
    ax.imshow(grid, aspect="auto", cmap="Blues", interpolation="nearest")
    ax.set_yticks(range(len(rows)))
    ax.set_yticklabels([name for name, _ in rows])
    step = max(1, len(xs) // 12)
    ax.set_xticks(range(0, len(xs), step))
    ax.set_xticklabels([str(xs[i]) for i in range(0, len(xs), step)])
    ax.set_xlabel("modulus a")
    ax.set_title("element classes across the sweep range")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _trial_squarefree(n):
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def write_report_dir(report, results, outdir):
    """Write report.json, sweep.csv and both PNG figures; returns the paths."""
    os.makedirs(outdir, exist_ok=True)
    paths = []
    json_path = os.path.join(outdir, REPORT_JSON)
    with open(json_path, "w") as fh:
        fh.write(dump_json(report))
    paths.append(json_path)
    csv_path = os.path.join(outdir, SWEEP_CSV)
    write_sweep_csv(results, csv_path)
    paths.append(csv_path)
    png_path = os.path.join(outdir, SUMMARY_PNG)
    render_summary_figure(report, results, png_path)
    paths.append(png_path)
    strip_path = os.path.join(outdir, STRIP_PNG)
    render_classification_strip(report, strip_path)
    paths.append(strip_path)
    return paths


def render_text(payload, indent=0):
    """Generic human-readable dump used by --pretty."""
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for key in payload:
            value = payload[key]
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.extend(render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
    elif isinstance(payload, list):
        for value in payload:
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}-")
                lines.extend(render_text(value, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(value)}")
    else:
        lines.append(f"{pad}{_scalar(payload)}")
    return lines if indent else "\n".join(lines) + "\n"


def _scalar(value):
    if value is True:
        return "yes"
    if value is False:
        return "no"
    if value is None:
        return "-"
    if isinstance(value, (dict, list)):
        return "{}" if isinstance(value, dict) else "[]"
    return str(value)


def render_verify_text(report):
    """Compact per-selector summary for the verify subcommand."""
    lo, hi = report["range"]
    lines = [
        f"verification sweep: Z/a for a in [{lo}, {hi}], seed {report['seed']}",
        "",
    ]
    for name in report["selectors"]:
        res = report["results"][name]
        status = "ok" if not res["violations"] else f"{len(res['violations'])} VIOLATIONS"
        lines.append(f"  {name:<6} {res['checked']:>5} checked  {status}")
        lines.append(f"         {res['description']}")
        for v in res["violations"][:5]:
            lines.append(f"         witness: {json.dumps(v, sort_keys=True)}")
    lines.append("")
    lines.append(
        f"total: {report['total_checked']} checks, {report['total_violations']} violations"
    )
    return "\n".join(lines) + "\n"
