import argparse
import glob
import os

from optk.app import get_logger
from optk.stats import CurveSeries
from optk.export import plot_curves

"""
This script draws the curves of a finished run as PNG files.

It reads, from the output directory of `run_asymmetry.py all`:
- every balance_<mode>_<feature>.csv (balanced fraction against the positive fraction, with the random baseline)
- report_curves.csv (average asymmetry degree binned against degree, clustering coefficient and embeddedness)

and writes one figure per balance curve and one figure per structural feature into <output dir>/plots.
The same figures are produced during the run when --plots is given.

Usage:
python visualize.py -o results
"""


def load_curves(out_dir):
    curves = []
    for path in sorted(glob.glob(os.path.join(out_dir, 'balance_*.csv'))):
        name = os.path.splitext(os.path.basename(path))[0][len('balance_'):]
        curves.append(CurveSeries.from_csv(path, 'x_positive_fraction', 'balanced_fraction', name=name))
    report_curves = os.path.join(out_dir, 'report_curves.csv')
    if os.path.isfile(report_curves):
        curves.append(CurveSeries.from_csv(report_curves, name='correlation'))
    return curves


if __name__ == '__main__':
    parser = argparse.ArgumentParser(description='Plot the curve tables of a run')
    parser.add_argument('-o', '--output-dir', type=str, default='results',
                        help='output directory of run_asymmetry.py')
    args = parser.parse_args()

    curves = load_curves(args.output_dir)
    paths = plot_curves(curves, os.path.join(args.output_dir, 'plots'))
    get_logger().log('Plot', f'Wrote {len(paths)} figures to {os.path.join(args.output_dir, "plots")}')
