"""Impurity dynamics of the atom pair inside a coherent-state cavity.

One atom enters excited, the other in an even superposition, and the
cavity holds a coherent field with ten photons on average. Exchanging
excitations with the field mixes the atomic pair: its impurity
1 - tr(rho^2) climbs from zero, collapses, and partially revives on the
coherent-state timescale. The two single-atom impurities trade places as
the excitation sloshes between the atoms, which is easiest to see in the
middle of the sweep where one atom purifies exactly when the other is
maximally mixed.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from cavitypair import figure_preset, run_sweep

OUT = pathlib.Path(__file__).parent / "output"


def main() -> None:
    records = run_sweep(figure_preset("fig1"))
    tau = np.array([r.tau for r in records])
    eta12 = np.array([r.eta12 for r in records])
    eta1 = np.array([r.eta1 for r in records])
    eta2 = np.array([r.eta2 for r in records])
    entangled = np.array([r.entangled_none for r in records])

    fig, (top, bottom) = plt.subplots(2, 1, figsize=(9, 6), sharex=True)
    top.plot(tau, eta12, lw=0.8, label="pair impurity")
    # shade the stretches where the pair state is actually entangled
    top.fill_between(
        tau, 0, 1, where=entangled, alpha=0.12, transform=top.get_xaxis_transform(),
        label="entangled",
    )
    top.set_ylabel("1 - tr(rho^2)")
    top.legend(loc="upper right")

    bottom.plot(tau, eta1, lw=0.8, label="atom 1")
    bottom.plot(tau, eta2, lw=0.8, label="atom 2")
    bottom.set_xlabel("scaled time")
    bottom.set_ylabel("single-atom impurity")
    bottom.legend(loc="upper right")

    OUT.mkdir(exist_ok=True)
    target = OUT / "purity_dynamics.png"
    fig.savefig(target, dpi=150, bbox_inches="tight")

    print(f"peak pair impurity {eta12.max():.4f} at tau {tau[eta12.argmax()]:.2f}")
    print(f"purest entangled sample: 1 - eta12 = {(1 - eta12)[entangled].max():.4f}")
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
