"""Relative dispersion coefficients, histograms, kernel densities and bootstrap bands."""

from ._core import (
    ReldispError,
    band,
    crd,
    crd_bounds,
    crd_corrected,
    cv,
    cv_corrected,
    density,
    dispersion_report,
    histogram,
    nice_breaks,
    sturges_k,
    summarize,
)

__all__ = [
    "ReldispError",
    "band",
    "crd",
    "crd_bounds",
    "crd_corrected",
    "cv",
    "cv_corrected",
    "density",
    "dispersion_report",
    "histogram",
    "nice_breaks",
    "sturges_k",
    "summarize",
]
__version__ = "0.1.0"
