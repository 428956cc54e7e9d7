from .traditional import (SignedEdgeSet, label_merged_edges, classify_traditional, traditional_baseline,
                          POSITIVE, NEGATIVE)
from .extended import (ExtendedTriadLabel, default_extended_threshold, classify_extended, extended_baseline,
                       difference_sign)
from .sweep import MODES, auto_sweep, parse_sweep, balance_curve, annotate_triads, count_balanced
from .simulate import simulate_traditional, simulate_extended, baseline_check
