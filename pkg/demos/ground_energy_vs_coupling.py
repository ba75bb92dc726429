#
# Ground-state energy of the quadratic-coupled Rabi model as a function
# of the coupling strength f, for three oscillator strengths.
#
# Without the quadratic field term (osc_delta = 0) the ground energy dives
# below the uncoupled value -Delta/2.  The sum rule forces osc_delta >= 1
# as soon as the quadratic term is physical, and then the trend reverses:
# the ground energy rises with f and stays above -Delta/2.  The dotted
# curves show the closed-form variational bound -Delta/2 + (Omega-1)/2,
# which the exact energy can never exceed.
#

import csv

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from qrma import ModelParams, ground_state, rwar_ground

DELTAS = (0.0, 1.0, 2.0)
fs = np.linspace(0.0, 1.0, 41)

curves = {}
for osc_delta in DELTAS:
    exact = []
    bound = []
    for f in fs:
        p = ModelParams(1.0, osc_delta, float(f))
        exact.append(ground_state(p)[0])
        bound.append(rwar_ground(p))
    curves[osc_delta] = (np.array(exact), np.array(bound))
    print(f"osc_delta={osc_delta}: E(0)={exact[0]:+.6f}  E(1)={exact[-1]:+.6f}")

with open("ground_energy_vs_coupling.csv", "w", newline="\n") as fh:
    writer = csv.writer(fh)
    writer.writerow(["f"] + [f"E_exact_d{d:g}" for d in DELTAS]
                    + [f"E_bound_d{d:g}" for d in DELTAS])
    for i, f in enumerate(fs):
        writer.writerow([f] + [curves[d][0][i] for d in DELTAS]
                        + [curves[d][1][i] for d in DELTAS])

fig, ax = plt.subplots(figsize=(6, 4))
for osc_delta, color in zip(DELTAS, ("C0", "C1", "C2")):
    exact, bound = curves[osc_delta]
    ax.plot(fs, exact, color, label=f"exact, $\\delta$={osc_delta:g}")
    ax.plot(fs, bound, color + ":", lw=1)
ax.axhline(-0.5, color="gray", lw=0.5)
ax.set_xlabel("coupling f")
ax.set_ylabel("ground energy")
ax.legend()
fig.tight_layout()
fig.savefig("ground_energy_vs_coupling.png", dpi=150)
print("wrote ground_energy_vs_coupling.{csv,png}")
