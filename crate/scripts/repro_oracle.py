#!/usr/bin/env python3
"""Independent oracle for the nmrsim repro regression baselines.

The evolution c * rho * c^dagger is done in exact rational arithmetic on the
decimal inputs; every step that needs a square root or an eigendecomposition
is done with mpmath at 50 significant digits. Nothing here shares code with
the Rust implementation.

Usage: python3 scripts/repro_oracle.py   (prints the baseline JSON)
"""

import json
from fractions import Fraction as F

import mpmath as mp

mp.mp.dps = 50


def cplx(re, im="0"):
    return (F(re), F(im))


def parse(rows):
    return [[cplx(*e.split("|")) if "|" in e else cplx(e) for e in row] for row in rows]


Q = F(1, 4)
C_STEP = [
    [(F(3, 4), Q), (-Q, Q), (-Q, Q), (Q, Q)],
    [(-Q, Q), (F(3, 4), Q), (-Q, Q), (Q, Q)],
    [(-Q, Q), (-Q, Q), (F(3, 4), Q), (Q, Q)],
    [(-Q, Q), (-Q, Q), (-Q, Q), (Q, F(-3, 4))],
]

RHO_INITIAL = parse([
    ["0.1794", "0.1591|0.0208", "0.0601|-0.0001", "-0.0483|-0.0549"],
    ["0.1591|-0.0208", "0.2453", "0.1247|-0.0281", "-0.0514|-0.1534"],
    ["0.0601|0.0001", "0.1247|0.0281", "0.3616", "0.0099|0.0682"],
    ["-0.0483|0.0549", "-0.0514|0.1534", "0.0099|-0.0682", "0.2137"],
])
RHO_EXP_AFTER = parse([
    ["0.2278", "0.0858|0.0186", "0.0640|0.0387", "0.0691|-0.0372"],
    ["0.0858|-0.0186", "0.1006", "0.1019|-0.0062", "0.1650|-0.0893"],
    ["0.0640|-0.0387", "0.1019|0.0062", "0.3921", "0.0454|-0.0111"],
    ["0.0691|0.0372", "0.1650|0.0893", "0.0454|0.0111", "0.2794"],
])
RHO_TH_PRINTED = parse([
    ["0.1849", "0.0891|0.0599", "0.0758|0.0225", "0.1146|-0.0439"],
    ["0.0891|-0.0599", "0.0999", "0.0650|-0.0446", "0.1377|-0.0861"],
    ["0.0758|-0.0225", "0.0650|0.0446", "0.3876", "0.0018|-0.0083"],
    ["0.1146|0.0439", "0.1377|0.0861", "0.0018|0.0083", "0.3277"],
])


def cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def cadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def matmul(a, b):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = (F(0), F(0))
            for k in range(n):
                acc = cadd(acc, cmul(a[i][k], b[k][j]))
            row.append(acc)
        out.append(row)
    return out


def adjoint(a):
    n = len(a)
    return [[(a[j][i][0], -a[j][i][1]) for j in range(n)] for i in range(n)]


def to_mp(a):
    n = len(a)
    m = mp.matrix(n, n)
    for i in range(n):
        for j in range(n):
            re, im = a[i][j]
            m[i, j] = mp.mpc(mp.mpf(re.numerator) / re.denominator, mp.mpf(im.numerator) / im.denominator)
    return m


def simplex(values):
    u = sorted(values, reverse=True)
    cum = mp.mpf(0)
    theta = mp.mpf(0)
    for k, uk in enumerate(u, start=1):
        cum += uk
        t = (cum - 1) / k
        if uk - t > 0:
            theta = t
    return [max(v - theta, mp.mpf(0)) for v in values]


def eigh(m):
    w, v = mp.eighe(m)
    return [mp.re(x) for x in w], v


def rebuild(w, v):
    n = len(w)
    d = mp.matrix(n, n)
    for i in range(n):
        d[i, i] = w[i]
    return v * d * v.H


def nearest_density(m):
    w, v = eigh(m)
    if min(w) >= 0 and abs(sum(w) - 1) == 0:
        return m
    return rebuild(simplex(w), v)


def needs_projection(m):
    w, _ = eigh(m)
    return min(w) < 0


def sqrtm_psd(m):
    w, v = eigh(m)
    return rebuild([mp.sqrt(max(x, 0)) for x in w], v)


def fidelity(rho, sigma):
    s = sqrtm_psd(rho)
    inner = s * sigma * s
    inner = (inner + inner.H) / 2
    w, _ = eigh(inner)
    return sum(mp.sqrt(max(x, 0)) for x in w) ** 2


def trace_distance(rho, sigma):
    diff = rho - sigma
    diff = (diff + diff.H) / 2
    w, _ = eigh(diff)
    return sum(abs(x) for x in w) / 2


def main():
    theory = matmul(matmul(C_STEP, RHO_INITIAL), adjoint(C_STEP))
    def frac_mp(x):
        return mp.mpf(x.numerator) / x.denominator

    max_dev = max(
        mp.sqrt(frac_mp((t[0] - p[0]) ** 2 + (t[1] - p[1]) ** 2))
        for trow, prow in zip(theory, RHO_TH_PRINTED)
        for t, p in zip(trow, prow)
    )

    theory_mp = to_mp(theory)
    exp_mp = to_mp(RHO_EXP_AFTER)
    theory_ready = nearest_density(theory_mp) if needs_projection(theory_mp) else theory_mp
    exp_ready = nearest_density(exp_mp) if needs_projection(exp_mp) else exp_mp

    out = {
        "max_dev_vs_printed_th": float(max_dev),
        "fidelity_exp_vs_computed_th": float(fidelity(exp_ready, theory_ready)),
        "trace_distance_exp_vs_computed_th": float(trace_distance(exp_ready, theory_ready)),
        "exact": {
            "max_dev_vs_printed_th": mp.nstr(max_dev, 30),
            "fidelity_exp_vs_computed_th": mp.nstr(fidelity(exp_ready, theory_ready), 30),
            "trace_distance_exp_vs_computed_th": mp.nstr(trace_distance(exp_ready, theory_ready), 30),
            "theory_projected": needs_projection(theory_mp),
            "exp_projected": needs_projection(exp_mp),
        },
    }
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
