import os
import pandas as pd

from .errors import MissingInputError

NA = 'N/A'
FLOAT_FORMAT = '%.12g'


def write_table(df, path):
    """CSV artifact: UTF-8, header row, comma separated, '.' decimal, '\\n' line ends,
    undefined values as N/A."""
    df.to_csv(path, index=False, float_format=FLOAT_FORMAT, na_rep=NA,
              encoding='utf-8', lineterminator='\n')
    return path


def read_table(path, what='table', **kwargs):
    if not os.path.isfile(path):
        raise MissingInputError(f'{what} file does not exist: {path}')
    return pd.read_csv(path, na_values=[NA], keep_default_na=False, encoding='utf-8', **kwargs)


def sibling_path(path, suffix, ext=None):
    """'out/report.csv', '_curves' -> 'out/report_curves.csv'."""
    stem, old_ext = os.path.splitext(path)
    return f'{stem}{suffix}{old_ext if ext is None else ext}'
