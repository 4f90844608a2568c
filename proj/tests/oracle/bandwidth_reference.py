"""Reference bandwidth selectors used to produce tests/fixtures/bandwidth_oracle.json.

Written directly from the published estimator definitions with numpy and
scipy, sharing no code with the C++ library:

* UCV (Rudemo / Bowman least-squares cross-validation):
      UCV(h) = R(K)/(n h) + 1/(n^2 h) sum_{i != j} [(K*K)(d_ij) - 2 K(d_ij)]
* BCV (Scott & Terrell biased cross-validation):
      BCV(h) = R(K)/(n h) + 1/(4 n^2 h) sum_{i != j} (K''*K'')(d_ij)
* SJ (Sheather & Jones solve-the-equation plug-in):
      h = [R(K) / (n S_D(alpha2(h)))]^(1/5),
      alpha2(h) = 1.357 [S_D(a) / T_D(b)]^(1/7) h^(5/7)
  with S_D / T_D the fourth / sixth derivative functional estimators.

with K the standard normal density and d_ij = (x_i - x_j)/h. Minimisation
uses scipy's bounded Brent method, root finding uses brentq.

Run:  python3 tests/oracle/bandwidth_reference.py > tests/fixtures/bandwidth_oracle.json
"""

import json
import sys

import numpy as np
from numpy.polynomial import hermite_e
from scipy import optimize, stats

SQRT2 = np.sqrt(2.0)


def pairwise(x):
    d = x[:, None] - x[None, :]
    off = ~np.eye(len(x), dtype=bool)
    return d, off


def normal_derivative(order, x, sigma=1.0):
    """order-th derivative of the N(0, sigma^2) density."""
    z = x / sigma
    coef = np.zeros(order + 1)
    coef[order] = 1.0
    sign = (-1.0) ** order
    return sign * hermite_e.hermeval(z, coef) * stats.norm.pdf(z) / sigma ** (order + 1)


def ucv(x, h):
    n = len(x)
    d, off = pairwise(x)
    u = d[off] / h
    kk = stats.norm.pdf(u, scale=SQRT2)  # K*K is N(0, 2)
    k = stats.norm.pdf(u)
    rk = 1.0 / (2.0 * np.sqrt(np.pi))
    return rk / (n * h) + np.sum(kk - 2.0 * k) / (n * n * h)


def bcv(x, h):
    n = len(x)
    d, off = pairwise(x)
    u = d[off] / h
    k4 = normal_derivative(4, u, sigma=SQRT2)  # K''*K'' = (K*K)''''
    rk = 1.0 / (2.0 * np.sqrt(np.pi))
    return rk / (n * h) + np.sum(k4) / (4.0 * n * n * h)


def functional(x, g, order):
    """sum_{i,j} phi^(order)((x_i - x_j)/g) / (n (n-1) g^(order+1))"""
    n = len(x)
    d, _ = pairwise(x)
    return np.sum(normal_derivative(order, d / g)) / (n * (n - 1) * g ** (order + 1))


def oversmoothed(x):
    return 1.144 * np.std(x, ddof=1) * len(x) ** (-0.2)


def select_cv(score, x):
    hos = oversmoothed(x)
    res = optimize.minimize_scalar(
        lambda h: score(x, h),
        bounds=(0.1 * hos, hos),
        method="bounded",
        options={"xatol": 1e-10},
    )
    return float(res.x)


def select_sj(x):
    n = len(x)
    q75, q25 = np.percentile(x, [75, 25])
    lam = min(np.std(x, ddof=1), (q75 - q25) / 1.349)
    a = 1.24 * lam * n ** (-1.0 / 7.0)
    b = 1.23 * lam * n ** (-1.0 / 9.0)
    sd_a = functional(x, a, 4)
    td_b = -functional(x, b, 6)
    alpha2 = 1.357 * (sd_a / td_b) ** (1.0 / 7.0)
    rk = 1.0 / (2.0 * np.sqrt(np.pi))

    def eq(h):
        return (rk / (n * functional(x, alpha2 * h ** (5.0 / 7.0), 4))) ** 0.2 - h

    hos = oversmoothed(x)
    lo, hi = 0.1 * hos, hos
    return float(optimize.brentq(eq, lo, hi, xtol=1e-12))


def samples():
    rng = np.random.default_rng(20211028)
    normal = rng.standard_normal(100)
    bimodal = np.concatenate([rng.normal(-1.5, 0.6, 90), rng.normal(1.5, 0.8, 60)])
    stature = rng.normal(1.75, 0.10, 60)
    return {"normal_100": normal, "bimodal_150": bimodal, "stature_60": stature}


def main():
    out = {}
    for name, x in samples().items():
        out[name] = {
            "values": [float(v) for v in x],
            "ucv": select_cv(ucv, x),
            "bcv": select_cv(bcv, x),
            "sj": select_sj(x),
            "ucv_score_at_0.5sd": float(ucv(x, 0.5 * np.std(x, ddof=1))),
            "bcv_score_at_0.5sd": float(bcv(x, 0.5 * np.std(x, ddof=1))),
        }
    json.dump(out, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
