from dataclasses import dataclass
import numpy as np

from ..app.errors import EmptyDomainError
from .traditional import POSITIVE, NEGATIVE, check_probability, check_threshold


def difference_sign(d, theta):
    # a tie at the threshold counts as negative
    return NEGATIVE if d <= theta else POSITIVE


@dataclass(frozen=True)
class ExtendedTriadLabel:
    """One anchor configuration of a directed triad.

    d3 = |f'(a, c) - f'(b, c)| is how differently a and b see the third party,
    d1 = |f'(a, b) - f'(b, a)| how differently they see each other.
    """
    anchor: tuple
    third: str
    d3: float
    d1: float
    s3: str
    s1: str

    @property
    def balanced(self):
        return self.s3 == self.s1

    @property
    def verdict(self):
        return 'balanced' if self.balanced else 'unbalanced'


def default_extended_threshold(nm, feature):
    """Mean bidirectional difference over all defined pairs."""
    diffs = nm.asymmetry[feature].dropna()
    if diffs.empty:
        raise EmptyDomainError(f'no pair has a defined {feature} asymmetry')
    return float(diffs.mean())


def directed_values(nm, feature):
    return nm.normalized[feature].to_dict()


def anchor_differences(triad, values):
    """(anchor, third, d3, d1) per anchor choice; configurations touching an
    undefined directed value are left out. ``values`` maps (from, to) to f'."""
    out = []
    for (a, b), c in triad.anchors():
        ac, bc, ab, ba = (values.get(p, np.nan) for p in ((a, c), (b, c), (a, b), (b, a)))
        if np.isnan([ac, bc, ab, ba]).any():
            continue
        out.append(((a, b), c, abs(ac - bc), abs(ab - ba)))
    return out


def classify_extended(triad, nm, feature, theta, values=None):
    check_threshold(theta)
    if values is None:
        values = directed_values(nm, feature)
    return [ExtendedTriadLabel(anchor, third, float(d3), float(d1),
                               difference_sign(d3, theta), difference_sign(d1, theta))
            for anchor, third, d3, d1 in anchor_differences(triad, values)]


def extended_baseline(p):
    check_probability(p)
    return p ** 2 + (1 - p) ** 2
