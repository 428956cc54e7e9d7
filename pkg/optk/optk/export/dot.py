from dataclasses import dataclass
import numpy as np
from colour import Color

from .. import FEATURES
from ..graph import degree


def resolve_colour(name):
    try:
        return Color(name).hex_l
    except (ValueError, AttributeError):
        raise ValueError(f'unknown colour {name!r}')


@dataclass(frozen=True)
class ExportStyle:
    feature: str = 'length'
    min_width: float = 0.5
    max_width: float = 6.0
    highlight: str = 'red'
    base_colour: str = 'gray'
    node_scale: float = 0.15

    def __post_init__(self):
        if self.feature not in FEATURES:
            raise ValueError(f'unknown feature {self.feature}, expected one of {FEATURES}')
        if not 0 < self.min_width < self.max_width:
            raise ValueError(f'edge width range needs 0 < min < max, got ({self.min_width}, {self.max_width})')
        if self.node_scale <= 0:
            raise ValueError('node_scale must be positive')
        resolve_colour(self.highlight)
        resolve_colour(self.base_colour)

    @property
    def highlight_hex(self):
        return resolve_colour(self.highlight)

    @property
    def base_hex(self):
        return resolve_colour(self.base_colour)

    def width_map(self, values):
        """Affine map of the defined values onto [min_width, max_width]."""
        values = np.asarray([v for v in values if np.isfinite(v)], dtype=float)
        if len(values) == 0 or values.max() == values.min():
            return lambda v: self.min_width
        lo, hi = values.min(), values.max()
        return lambda v: self.min_width + (v - lo) / (hi - lo) * (self.max_width - self.min_width)


def quote(text):
    return '"%s"' % str(text).replace('\\', '\\\\').replace('"', '\\"')


def attribute_list(attrs):
    """
    Convert a dictionary into a dot-style attribute list:
    [ foo = "x", bar = "y" ]
    """
    return '[ ' + ', '.join('%s = %s' % (k, quote(v)) for k, v in attrs.items()) + ' ]'


def balanced_triads(triads, feature, mode):
    """Triads to highlight: a traditional verdict of balanced, or every
    evaluated extended configuration balanced."""
    if mode == 'traditional':
        return [t for t in triads if t.traditional.get(feature) is True]
    if mode == 'extended':
        return [t for t in triads
                if t.extended.get(feature) and all(label.balanced for label in t.extended[feature])]
    raise ValueError(f'unknown balance mode {mode}')


def export_dot(g, nm, balanced, style):
    """GraphViz digraph with one statement per vertex and per directed edge.

    penwidth is affine in f' over the observed range; an undefined f' gets
    the minimum width and nodata="true". Edges of a balanced triad carry the
    highlight colour.
    """
    col = nm.normalized[style.feature]
    highlighted = set()
    for triad in balanced:
        highlighted.update(triad.edges)

    directed = sorted([(a, b) for a, b in g.edges] + [(b, a) for a, b in g.edges])
    fprime = {pair: float(col.get(pair, np.nan)) for pair in directed}
    to_width = style.width_map(fprime.values())

    lines = ['digraph "interaction" {',
             '  graph ' + attribute_list({'feature': style.feature}) + ';',
             '  node ' + attribute_list({'shape': 'circle', 'fixedsize': 'true'}) + ';',
             '']
    for v in g.vertices:
        d = degree(g, v)
        lines.append('  %s %s;' % (quote(v), attribute_list({
            'label': v,
            'width': '%.4f' % (style.node_scale * d),
            'degree': d})))
    lines.append('')
    for a, b in directed:
        value = fprime[(a, b)]
        attrs = {'color': style.highlight_hex if tuple(sorted((a, b))) in highlighted else style.base_hex}
        if np.isfinite(value):
            attrs['penwidth'] = '%.4f' % to_width(value)
            attrs['fprime'] = '%.6g' % value
        else:
            attrs['penwidth'] = '%.4f' % style.min_width
            attrs['nodata'] = 'true'
        lines.append('  %s -> %s %s;' % (quote(a), quote(b), attribute_list(attrs)))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def write_dot(text, path):
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)
    return path
