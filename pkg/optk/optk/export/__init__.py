from .dot import ExportStyle, export_dot, write_dot, balanced_triads, attribute_list, resolve_colour
from .plot import plot_curves, plot_balance_curve, plot_correlation_curves
