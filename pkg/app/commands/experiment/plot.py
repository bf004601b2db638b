"""Log-log SVG of empirical vs predicted relative error for one selector."""

from __future__ import annotations

import math
from collections.abc import Sequence
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .models import ExperimentRow  # noqa: E402

# fixed ids so reruns produce identical files
SVG_RC = {"svg.hashsalt": "quadform-diag", "svg.fonttype": "none"}


def plot_selector(rows: Sequence[ExperimentRow], path: Path, title: str) -> Path:
    sizes = [row.N for row in rows]
    empirical = [row.emp_rel_err_mean for row in rows]
    theory = [row.theo_rel_err for row in rows]

    with plt.rc_context(SVG_RC):
        fig, ax = plt.subplots(figsize=(5.0, 3.6))
        try:
            ax.loglog(sizes, empirical, "o-", color="tab:blue", label="Empirical mean")
            ax.loglog(sizes, theory, "--", color="black", label="Theory")
            if not any(math.isfinite(v) and v > 0 for v in empirical + theory):
                ax.set_yscale("linear")
            ax.set_xlabel("N (oracle queries)")
            ax.set_ylabel("Relative error")
            ax.set_title(title)
            ax.grid(True, which="both", linewidth=0.3)
            ax.legend(fontsize="small")
            fig.tight_layout()
            fig.savefig(path, format="svg", metadata={"Date": None})
        finally:
            plt.close(fig)
    return path
