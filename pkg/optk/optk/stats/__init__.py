from .curves import CurveSeries, bin_curve
from .correlation import CorrelationReport, pearson, correlation_report, correlation_curves
