"""Figure and table rendering for the standard comparison sweeps.

Writes PNG figures next to the CSV tables they are drawn from, so the
numbers behind every plot stay diffable. Uses the non-interactive
matplotlib backend; safe to run headless.
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .control import tdi_curve
from .sim import SYSTEMS, reduction_ratio, run_scenario

SYSTEM_LABELS = {
    "ghcs-only": "room system only",
    "ihcs-only": "wearables only",
    "combined": "combined",
}
SYSTEM_STYLES = {
    "ghcs-only": dict(color="tab:blue", marker="o"),
    "ihcs-only": dict(color="tab:orange", marker="s"),
    "combined": dict(color="tab:green", marker="^"),
}


def _write(path: str, text: str) -> str:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    return path


def _save(fig, path: str) -> str:
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_report(out_dir: str, cfg: dict, modes, counts) -> list:
    """Run the standard sweeps and write tables plus figures.

    Returns the list of file paths written, in a fixed order.
    """
    from .cli import (  # local import; cli pulls this module in lazily
        CURVE_HEADER,
        REDUCTION_HEADER,
        SWEEP_HEADER,
        _scenario_variant,
        fmt,
        sweep_row,
    )

    os.makedirs(out_dir, exist_ok=True)
    paths = []

    results = {
        mode: {
            system: [run_scenario(_scenario_variant(cfg, mode, system, n))
                     for n in counts]
            for system in SYSTEMS
        }
        for mode in modes
    }

    rows = [sweep_row(r)
            for mode in modes for system in SYSTEMS
            for r in results[mode][system]]
    paths.append(_write(os.path.join(out_dir, "sweep.csv"),
                        "\n".join([SWEEP_HEADER, *rows]) + "\n"))

    for mode in modes:
        fig, ax = plt.subplots(figsize=(6, 4))
        for system in SYSTEMS:
            ax.plot(counts, [r.heat.thc for r in results[mode][system]],
                    label=SYSTEM_LABELS[system], **SYSTEM_STYLES[system])
        ax.set_xlabel("occupants")
        ax.set_ylabel("total heat consumption (kJ)")
        ax.set_title(f"Energy by system, {mode}")
        ax.legend()
        fig.tight_layout()
        paths.append(_save(fig, os.path.join(out_dir, f"thc_vs_users_{mode}.png")))

        fig, ax = plt.subplots(figsize=(6, 4))
        for system in SYSTEMS:
            ax.plot(counts, [r.decision.es for r in results[mode][system]],
                    label=SYSTEM_LABELS[system], **SYSTEM_STYLES[system])
        ax.set_xlabel("occupants")
        ax.set_ylabel("summed comfort error (DI units)")
        ax.set_title(f"Comfort error by system, {mode}")
        ax.legend()
        fig.tight_layout()
        paths.append(_save(fig, os.path.join(out_dir, f"es_vs_users_{mode}.png")))

    # Comfort/energy tradeoff over the TDI grid, smallest room of the sweep.
    n_curve = counts[0]
    for mode in modes:
        scenario = _scenario_variant(cfg, mode, "combined", n_curve)
        result = run_scenario(scenario)
        points = tdi_curve(scenario.outside, scenario.room, result.population,
                           scenario.band, scenario.ihcs, scenario.thermal,
                           scenario.psychro, scenario.setpoint_rh,
                           55.0, 85.0, 0.1)
        rows = [",".join([fmt(p.tdi), fmt(p.es), fmt(p.he), fmt(p.ihcs), fmt(p.thc)])
                for p in points]
        paths.append(_write(os.path.join(out_dir, f"tdi_curve_{mode}_n{n_curve}.csv"),
                            "\n".join([CURVE_HEADER, *rows]) + "\n"))

        fig, (ax_es, ax_thc) = plt.subplots(2, 1, figsize=(6, 6), sharex=True)
        grid = [p.tdi for p in points]
        ax_es.plot(grid, [p.es for p in points], color="tab:red")
        ax_es.set_ylabel("summed comfort error")
        ax_es.axvline(result.decision.tdi, color="black", linestyle="--",
                      label=f"chosen TDI = {result.decision.tdi:g}")
        ax_es.legend()
        ax_thc.plot(grid, [p.thc for p in points], color="tab:purple")
        ax_thc.axvline(result.decision.tdi, color="black", linestyle="--")
        ax_thc.set_xlabel("room target discomfort index")
        ax_thc.set_ylabel("total heat consumption (kJ)")
        fig.suptitle(f"Optimum detection, {mode}, {n_curve} occupants")
        fig.tight_layout()
        paths.append(_save(fig, os.path.join(out_dir, f"tdi_curve_{mode}_n{n_curve}.png")))

    fig, ax = plt.subplots(figsize=(6, 4))
    for mode in modes:
        ratios = [
            reduction_ratio(base, prop)
            for base, prop in zip(results[mode]["ghcs-only"], results[mode]["combined"])
        ]
        rows = [",".join([mode, str(n), fmt(base.heat.thc), fmt(prop.heat.thc), fmt(ratio)])
                for n, base, prop, ratio in zip(counts, results[mode]["ghcs-only"],
                                                results[mode]["combined"], ratios)]
        paths.append(_write(os.path.join(out_dir, f"reduction_{mode}.csv"),
                            "\n".join([REDUCTION_HEADER, *rows]) + "\n"))
        ax.plot(counts, [100.0 * r for r in ratios], marker="o", label=mode)
    ax.set_xlabel("occupants")
    ax.set_ylabel("energy saving vs room system only (%)")
    ax.set_title("Combined-system saving")
    ax.legend()
    fig.tight_layout()
    paths.append(_save(fig, os.path.join(out_dir, "reduction.png")))

    return paths
