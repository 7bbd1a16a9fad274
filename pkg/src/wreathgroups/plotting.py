"""Write suite reports to disk: ``<suite>.json``, ``<suite>.csv`` and ``<suite>.png``."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

__all__ = ["table_rows", "write_report", "plot_report"]


def table_rows(report: dict) -> list[dict]:
    """Flat rows for the CSV companion of a report."""
    d = report.get("details", {})
    suite = report["suite"]
    if suite == "zc":
        return d["rank_table"]
    if suite in ("axioms", "com"):
        return d["by_length"]
    if suite == "cs":
        return d["words"]
    if suite == "oracle21":
        return [{"A": c["config"]["A"], "B": c["config"]["B"], "X": c["config"]["X"],
                 "order": c["config"]["order"], "effective": c["config"]["effective"],
                 "brute": c["brute_center_size"], "formula": c["formula_center_size"],
                 "probe": c["probe_centralizer_size"]} for c in d["configs"]]
    if suite == "all":
        return [{"suite": r["suite"], "trials": r["trials"], "failures": len(r["failures"]),
                 "pass": r["pass"]} for r in d["suites"]]
    return [{"suite": suite, "trials": report["trials"], "failures": len(report["failures"]),
             "pass": report["pass"]}]


def plot_report(report: dict, path: Path) -> None:
    suite = report["suite"]
    rows = table_rows(report)
    fig, ax = plt.subplots(figsize=(6, 4))
    if suite == "zc":
        b = [r["beta1"] for r in rows]
        ax.bar(b, [r["words"] for r in rows], color="0.75", label="words")
        ax.set_yscale("log")
        ax.set_xlabel("beta1 (number of Z symbols)")
        ax.set_ylabel("words")
        ax2 = ax.twinx()
        ax2.plot(b, [r["rank"] for r in rows], "o", color="C3", label="center rank")
        ax2.plot(b, b, "--", color="C0", lw=1, label="rank = beta1")
        ax2.set_ylabel("rank")
        ax2.legend(loc="upper left", frameon=False)
    elif suite == "oracle21":
        brute = [r["brute"] for r in rows]
        ax.loglog(brute, [r["formula"] for r in rows], "o", ms=5, mfc="none", label="formula")
        ax.loglog(brute, [r["probe"] for r in rows], "x", ms=5, label="probe centralizer")
        lim = [1, max(brute) * 1.5]
        ax.plot(lim, lim, "--", color="0.5", lw=1)
        ax.set_xlabel("brute-force center size")
        ax.set_ylabel("predicted center size")
        ax.legend(frameon=False)
    elif suite in ("axioms", "com"):
        lengths = [r["length"] for r in rows]
        ax.bar(lengths, [r["words"] for r in rows], color="0.75", label="words checked")
        ax.bar(lengths, [r["failing_words"] for r in rows], color="C3", label="failing")
        ax.set_yscale("log")
        ax.set_xlabel("word length")
        ax.legend(frameon=False)
    elif suite == "cs":
        names = [r["word"] for r in rows]
        ax.barh(names, [r["soundness_trials"] + r["completeness_trials"] + r["equivalence_trials"]
                        for r in rows], color="0.75", label="trials")
        ax.barh(names, [r["counterexamples"] for r in rows], color="C3", label="counterexamples")
        ax.set_xlabel("trials")
        ax.legend(frameon=False)
    else:
        names = [r["suite"] for r in rows]
        ax.bar(names, [r["trials"] for r in rows], color=["C2" if r["pass"] else "C3" for r in rows])
        ax.set_yscale("log")
        ax.set_ylabel("trials")
    ax.set_title(f"{suite}: {'pass' if report['pass'] else 'FAIL'}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_report(report: dict, directory: str | Path) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    stem = out / report["suite"]
    paths = [stem.with_suffix(".json"), stem.with_suffix(".csv"), stem.with_suffix(".png")]
    paths[0].write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    rows = table_rows(report)
    with open(paths[1], "w", newline="") as fh:
        if rows:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
    plot_report(report, paths[2])
    return paths
