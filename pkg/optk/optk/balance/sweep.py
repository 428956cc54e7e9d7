import numpy as np
import pandas as pd

from ..app.errors import EmptyDomainError, ConfigError
from ..app.logger import get_logger
from ..graph import build_graph_from_pairs, enumerate_triangles
from ..stats.curves import CurveSeries
from .traditional import check_threshold, label_merged_edges, classify_traditional, traditional_baseline
from .extended import anchor_differences, directed_values, classify_extended, extended_baseline

MODES = ('traditional', 'extended')
CURVE_COLUMNS = ['theta', 'x_positive_fraction', 'balanced_fraction', 'baseline']
AUTO_POINTS = 41


def auto_sweep(values, n=AUTO_POINTS):
    """n evenly spaced quantiles of the observed values, opened by a threshold just below the
    minimum so that the sweep reaches x = 1."""
    values = np.asarray(values, dtype=float)
    values = values[np.isfinite(values)]
    if len(values) == 0:
        raise ValueError('cannot derive a sweep from no values')
    if n < 1:
        raise ValueError('a sweep needs at least one point')
    quantiles = np.quantile(values, np.linspace(0.0, 1.0, n))
    return [float(np.nextafter(quantiles[0], -np.inf))] + quantiles.tolist()


def parse_sweep(text):
    """'auto' or a comma separated list of thresholds."""
    text = str(text).strip()
    if text == 'auto':
        return 'auto'
    try:
        thetas = [float(t) for t in text.split(',') if t.strip()]
    except ValueError:
        raise ConfigError(f'sweep must be "auto" or a comma separated list of numbers, got {text!r}')
    if not thetas or not all(np.isfinite(thetas)):
        raise ConfigError(f'sweep must list finite thresholds, got {text!r}')
    return thetas


def _check_mode(mode):
    if mode not in MODES:
        raise ValueError(f'unknown balance mode {mode}, expected one of {MODES}')


def _configurations(nm, feature, mode, triangles):
    """Per-pair values that define x, and per-configuration values that define y."""
    if mode == 'traditional':
        merged = nm.merged(feature).dropna()
        if merged.empty:
            raise EmptyDomainError(f'no pair has both directions of {feature} defined')
        lookup = merged.to_dict()
        rows = [[lookup[e] for e in t.edges] for t in triangles if all(e in lookup for e in t.edges)]
        return merged.to_numpy(dtype=float), np.array(rows, dtype=float).reshape(-1, 3)
    diffs = nm.asymmetry[feature].dropna()
    if diffs.empty:
        raise EmptyDomainError(f'no pair has a defined {feature} asymmetry')
    values = directed_values(nm, feature)
    rows = [[d3, d1] for t in triangles for _, _, d3, d1 in anchor_differences(t, values)]
    return diffs.to_numpy(dtype=float), np.array(rows, dtype=float).reshape(-1, 2)


def _collapse(points):
    points = points.sort_values(['x_positive_fraction', 'theta'], kind='mergesort').reset_index(drop=True)
    xy = points[['x_positive_fraction', 'balanced_fraction']]
    changed = (xy != xy.shift()).any(axis=1)
    return points[changed].reset_index(drop=True)


def balance_curve(nm, feature, mode, sweep='auto', triangles=None):
    """Balanced fraction against the positive fraction while the labelling
    threshold moves, with the random baseline at the same x.

    traditional: x is the share of merged edges above theta, y the share of
    balanced triangles. extended: x is the share of pairs whose difference is
    above theta, y the share of balanced anchor configurations.
    """
    _check_mode(mode)
    if triangles is None:
        triangles = enumerate_triangles(build_graph_from_pairs(nm.unordered_pairs()))
    pair_values, configs = _configurations(nm, feature, mode, triangles)

    if isinstance(sweep, str):
        if sweep != 'auto':
            raise ValueError(f'unknown sweep {sweep}')
        thetas = auto_sweep(pair_values)
    else:
        thetas = [float(t) for t in sweep]
    if not thetas:
        raise ValueError('sweep must not be empty')
    for theta in thetas:
        check_threshold(theta)

    if len(configs) == 0:
        get_logger().warning('Balance', f'no classifiable triangle for {feature} ({mode}); curve is empty')
        return CurveSeries(pd.DataFrame(columns=CURVE_COLUMNS), 'x_positive_fraction', 'balanced_fraction',
                           name=f'{mode}_{feature}')

    rows = []
    for theta in thetas:
        x = float(np.mean(pair_values > theta))
        if mode == 'traditional':
            negatives = (configs <= theta).sum(axis=1)
            y = float(np.mean((negatives == 0) | (negatives == 2)))
            baseline = traditional_baseline(x)
        else:
            y = float(np.mean((configs[:, 0] > theta) == (configs[:, 1] > theta)))
            baseline = extended_baseline(x)
        rows.append({'theta': theta, 'x_positive_fraction': x, 'balanced_fraction': y, 'baseline': baseline})

    points = _collapse(pd.DataFrame(rows, columns=CURVE_COLUMNS))
    return CurveSeries(points, 'x_positive_fraction', 'balanced_fraction', name=f'{mode}_{feature}')


def annotate_triads(triads, nm, feature, theta, theta_prime):
    """Traditional verdict at theta and extended labels at theta_prime, in place."""
    signed = label_merged_edges(nm, feature, theta)
    values = directed_values(nm, feature)
    for triad in triads:
        signs = [signed.sign(a, b) for a, b in triad.edges]
        if None not in signs:
            triad.traditional[feature] = classify_traditional(signs)
        triad.extended[feature] = classify_extended(triad, nm, feature, theta_prime, values)
    return triads


def count_balanced(triads, feature, mode):
    _check_mode(mode)
    if mode == 'traditional':
        verdicts = [t.traditional[feature] for t in triads if feature in t.traditional]
    else:
        verdicts = [label.balanced for t in triads for label in t.extended.get(feature, [])]
    balanced = sum(verdicts)
    return {'balanced': balanced, 'unbalanced': len(verdicts) - balanced, 'total': len(verdicts)}
