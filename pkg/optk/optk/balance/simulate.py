import numpy as np
import pandas as pd

from .traditional import check_probability, traditional_baseline
from .extended import extended_baseline

BASELINE_COLUMNS = ['p', 'traditional_analytic', 'traditional_simulated',
                    'extended_analytic', 'extended_simulated']
DEFAULT_PS = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)


def _trials(n):
    if n < 1:
        raise ValueError('simulation needs at least one trial')


def simulate_traditional(p, n, seed):
    """Balanced share of n triangles whose three edges are '+' independently with probability p."""
    check_probability(p)
    _trials(n)
    rng = np.random.default_rng(seed)
    positives = (rng.random((n, 3)) < p).sum(axis=1)
    return float(np.mean((positives == 3) | (positives == 1)))


def simulate_extended(p, n, seed):
    """Balanced share of n configurations with two independent difference signs."""
    check_probability(p)
    _trials(n)
    rng = np.random.default_rng(seed)
    signs = rng.random((n, 2)) < p
    return float(np.mean(signs[:, 0] == signs[:, 1]))


def baseline_check(ps=DEFAULT_PS, n=100000, seed=0):
    rng = np.random.default_rng(seed)
    rows = []
    for p in ps:
        rows.append({'p': p,
                     'traditional_analytic': traditional_baseline(p),
                     'traditional_simulated': simulate_traditional(p, n, rng),
                     'extended_analytic': extended_baseline(p),
                     'extended_simulated': simulate_extended(p, n, rng)})
    return pd.DataFrame(rows, columns=BASELINE_COLUMNS)
