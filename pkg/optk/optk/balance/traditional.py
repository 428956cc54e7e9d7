from dataclasses import dataclass
import math
import pandas as pd

from ..app.errors import EmptyDomainError

POSITIVE = '+'
NEGATIVE = '-'


def check_probability(p):
    if not 0.0 <= p <= 1.0:
        raise ValueError(f'probability must lie in [0, 1], got {p}')


def check_threshold(theta):
    if not math.isfinite(theta):
        raise ValueError(f'threshold must be finite, got {theta}')


@dataclass
class SignedEdgeSet:
    """Merged opinion m{a, b} = f'(a, b) + f'(b, a) and its sign at one threshold.

    Only pairs with both directions defined are present.
    """
    feature: str
    theta: float
    merged: pd.Series

    @property
    def signs(self):
        return self.merged.gt(self.theta).map({True: POSITIVE, False: NEGATIVE})

    @property
    def p_positive(self):
        return float(self.merged.gt(self.theta).mean())

    def __len__(self):
        return len(self.merged)

    def sign(self, a, b):
        """Sign of the unordered pair, None when undefined."""
        key = tuple(sorted((a, b)))
        if key not in self.merged.index:
            return None
        return POSITIVE if self.merged.loc[key] > self.theta else NEGATIVE


def label_merged_edges(nm, feature, theta):
    """'+' iff the merged value is strictly above theta."""
    check_threshold(theta)
    merged = nm.merged(feature).dropna()
    if merged.empty:
        raise EmptyDomainError(f'no pair has both directions of {feature} defined')
    return SignedEdgeSet(feature, float(theta), merged)


def classify_traditional(signs):
    """Balanced iff the triangle carries zero or two negative edges."""
    signs = list(signs)
    if len(signs) != 3 or any(s not in (POSITIVE, NEGATIVE) for s in signs):
        raise ValueError(f'expected three signs out of +/-, got {signs}')
    return signs.count(NEGATIVE) in (0, 2)


def traditional_baseline(p):
    check_probability(p)
    return p ** 3 + 3 * p * (1 - p) ** 2
