#
# Mean photon number in the ground state versus coupling strength.
#
# The quadratic field term squeezes the vacuum: even the renormalized
# rotating-wave ground state carries (Omega-1)^2 / (4 Omega) photons, all
# of them virtual squeezing photons.  The exact ground state adds the
# counter-rotating contribution on top.  Without the quadratic term
# (osc_delta = 0) the squeezing contribution vanishes identically and the
# photon number is purely counter-rotating.
#

import csv

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from qrma import ModelParams, derive_params, ground_state, photon_number_exact, rwa_photon_number

fs = np.linspace(0.0, 1.0, 41)
DELTAS = (0.0, 1.0, 2.0)

table = {}
for osc_delta in DELTAS:
    exact = []
    rwa = []
    for f in fs:
        p = ModelParams(1.0, osc_delta, float(f))
        _, _, vec = ground_state(p)
        exact.append(photon_number_exact(vec, derive_params(p).omega))
        rwa.append(rwa_photon_number(p))
    table[osc_delta] = (np.array(exact), np.array(rwa))
    print(f"osc_delta={osc_delta}: n(1.0) exact={exact[-1]:.4f} rwa={rwa[-1]:.4f}")

with open("photon_number_vs_coupling.csv", "w", newline="\n") as fh:
    writer = csv.writer(fh)
    writer.writerow(["f"] + [f"n_exact_d{d:g}" for d in DELTAS]
                    + [f"n_rwa_d{d:g}" for d in DELTAS])
    for i, f in enumerate(fs):
        writer.writerow([f] + [table[d][0][i] for d in DELTAS]
                        + [table[d][1][i] for d in DELTAS])

fig, ax = plt.subplots(figsize=(6, 4))
for osc_delta, color in zip(DELTAS, ("C0", "C1", "C2")):
    exact, rwa = table[osc_delta]
    ax.plot(fs, exact, color, label=f"exact, $\\delta$={osc_delta:g}")
    ax.plot(fs, rwa, color + "--", lw=1)
ax.set_xlabel("coupling f")
ax.set_ylabel("ground-state photon number")
ax.legend()
fig.tight_layout()
fig.savefig("photon_number_vs_coupling.png", dpi=150)
print("wrote photon_number_vs_coupling.{csv,png}")
