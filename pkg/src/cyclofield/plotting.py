"""Figures for classification runs: place spectra and zeta numerators."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _style(ax):
    ax.spines["top"].set_color("none")
    ax.spines["right"].set_color("none")
    ax.yaxis.set_ticks_position("left")
    ax.xaxis.set_ticks_position("bottom")


def _name(report) -> str:
    return report.labels[-1]


def plot_spectra(reports, path: str) -> str:
    fig, ax = plt.subplots(figsize=(6, 3.5))
    _style(ax)
    width = 0.8 / max(len(reports), 1)
    for k, r in enumerate(reports):
        xs = [i + 1 + (k - (len(reports) - 1) / 2) * width for i in range(len(r.spectrum))]
        ax.bar(xs, r.spectrum, width=width, label=_name(r))
    ax.set_xlabel("place degree", fontsize=9)
    ax.set_ylabel("number of places", fontsize=9)
    ax.set_yscale("symlog", linthresh=1)
    if reports:
        ax.set_xticks(range(1, len(reports[0].spectrum) + 1))
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_l_polynomials(reports, path: str) -> str:
    fig, ax = plt.subplots(figsize=(6, 3.5))
    _style(ax)
    for r in reports:
        if r.l_polynomial is None:
            continue
        ax.plot(range(len(r.l_polynomial)), r.l_polynomial, ".-",
                label=f"{_name(r)} (g={r.genus}, h={r.class_number})")
    ax.axhline(0, color="k", linewidth=0.5)
    ax.set_xlabel("coefficient index i", fontsize=9)
    ax.set_ylabel("a_i", fontsize=9)
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
    return path


def render_figures(reports, directory: str) -> list[str]:
    os.makedirs(directory, exist_ok=True)
    return [
        plot_spectra(reports, os.path.join(directory, "spectrum.png")),
        plot_l_polynomials(reports, os.path.join(directory, "l_polynomial.png")),
    ]
