import math
from pathlib import Path
from typing import List, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402
from matplotlib.lines import Line2D  # noqa: E402

from app import logger  # noqa: E402
from app.errors import IoException, NoPlottableRecordsException  # noqa: E402
from app.services.benchmark.records import RunRecord  # noqa: E402
from app.services.missing import make_generator  # noqa: E402
from app.utils.enums import Algorithm, Metric  # noqa: E402
from app.utils.formatters import format_rate  # noqa: E402

JITTER_WIDTH = 0.3
POINT_GROUP_PREFIX = "points-rate-"


def points_path(path: Union[str, Path]) -> Path:
    path = Path(path)
    return path.with_name(f"{path.stem}_points.csv")


def plot_points(records: List[RunRecord], metric: Metric, jitter_seed: int = 0) -> pd.DataFrame:
    """One row per plottable record, with its jittered x position."""
    metric = Metric(metric)
    rows = [r for r in records if not math.isnan(getattr(r, metric.column))]
    if not rows:
        raise NoPlottableRecordsException(f"No record has a defined {metric.value}.")

    algorithms = list(dict.fromkeys(r.algorithm for r in rows))
    jitter = make_generator(jitter_seed).uniform(-JITTER_WIDTH, JITTER_WIDTH, len(rows))
    return pd.DataFrame({
        "dataset": [r.dataset for r in rows],
        "algorithm": [r.algorithm for r in rows],
        "category": [Algorithm(r.algorithm).category.value for r in rows],
        "rate": [r.rate for r in rows],
        "seed": [r.seed for r in rows],
        "metric": metric.value,
        "value": [getattr(r, metric.column) for r in rows],
        "x": [algorithms.index(r.algorithm) + j for r, j in zip(rows, jitter)],
    })


def emit_strip_plot(
    records: List[RunRecord],
    metric: Metric,
    path: Union[str, Path],
    jitter_seed: int = 0,
) -> None:
    """
    Write an SVG strip plot with one marker per record, algorithms along x and one
    color per missing data rate, plus ``<stem>_points.csv`` with the plotted points.
    Records with an undefined metric are skipped.
    """
    metric = Metric(metric)
    points = plot_points(records, metric, jitter_seed)
    algorithms = list(dict.fromkeys(points["algorithm"]))
    rates = sorted(points["rate"].unique())
    colors = plt.get_cmap("viridis")(np.linspace(0.0, 0.9, len(rates)))

    fig, ax = plt.subplots(figsize=(max(6, 1.4 * len(algorithms)), 5))
    handles = []
    for rate, color in zip(rates, colors):
        subset = points[points["rate"] == rate]
        ax.plot(
            subset["x"], subset["value"],
            linestyle="none", marker="o", markersize=3, alpha=0.7, color=color,
            gid=f"{POINT_GROUP_PREFIX}{format_rate(rate)}",
        )
        handles.append(Line2D([], [], linestyle="none", marker="o", color=color, label=f"rate {format_rate(rate)}"))

    ax.set_xticks(range(len(algorithms)))
    ax.set_xticklabels(
        [f"{a}\n({Algorithm(a).category.value})" for a in algorithms], rotation=30, ha="right", fontsize=8
    )
    ax.set_ylabel(metric.column)
    ax.legend(handles=handles, title="missing rate", fontsize=8)
    fig.tight_layout()

    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(path, format="svg")
        points.to_csv(points_path(path), index=False, float_format="%.17g")
    except OSError as e:
        raise IoException(f"Could not write {path}: {e}")
    finally:
        plt.close(fig)
    logger.debug(f"Strip plot of {len(points)} {metric.value} points written to {path}")
