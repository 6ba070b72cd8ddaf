#!/usr/bin/env python3
"""Compare the numeric, closed-form and brute-force oracle discord routes.

Prints one line per sampled (state, scenario) pair; the oracle column is the
slow one, so the sample count is kept small by default.

Usage:
    python scripts/cross_method_check.py --samples 6 --restarts 16
"""

import argparse

import numpy as np

from gmqd.channels import ChannelKind, Locality, NoiseScenario, apply_scenario
from gmqd.measures import gmqd_closed_form, gmqd_numeric, gmqd_oracle
from gmqd.states import TwoParamState, initial_state


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=6)
    parser.add_argument("--restarts", type=int, default=16)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    print(f"{'b':>8} {'c':>8} {'scenario':<32} {'numeric':>12} {'closed':>12} "
          f"{'oracle':>12} {'max spread':>11}")
    worst = 0.0
    for _ in range(args.samples):
        b = float(rng.uniform(0.0, 1.0 / 3.0))
        c = float(rng.uniform(0.0, 1.0 - 3.0 * b))
        kind = list(ChannelKind)[rng.integers(len(ChannelKind))]
        locality = list(Locality)[rng.integers(len(Locality))]
        ga = float(rng.uniform()) if locality is not Locality.QUTRIT_ONLY else 0.0
        gb = float(rng.uniform()) if locality is not Locality.QUBIT_ONLY else 0.0
        scenario = NoiseScenario(kind, locality, ga, gb)

        evolved = apply_scenario(initial_state(TwoParamState.from_bc(b, c)), scenario)
        numeric = gmqd_numeric(evolved).value
        closed = gmqd_closed_form(scenario, b, c)
        oracle = gmqd_oracle(evolved, restarts=args.restarts, seed=args.seed).value
        spread = max(numeric, closed, oracle) - min(numeric, closed, oracle)
        worst = max(worst, spread)
        label = f"{kind.value}/{locality.value}"
        print(f"{b:8.4f} {c:8.4f} {label:<32} {numeric:12.8f} {closed:12.8f} "
              f"{oracle:12.8f} {spread:11.3e}")
    print(f"\nworst three-way spread: {worst:.3e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
