import itertools

import numpy as np


def exact_dirac_kernel(n: int, a: int) -> float:
    """`K_{n,a}` of the Dirac function for a simple walk in a Rademacher scenery."""
    total = 0.0
    for steps in itertools.product((-1, 1), repeat=n):
        positions = np.cumsum(steps)
        sites = sorted(set(positions.tolist()))
        weight = 0.5**n * 0.5 ** len(sites)
        for signs in itertools.product((-1, 1), repeat=len(sites)):
            scenery = dict(zip(sites, signs))
            z = np.cumsum([scenery[site] for site in positions.tolist()])
            total += weight * (np.sum(z == 0) - np.sum(z == a))
    return total
