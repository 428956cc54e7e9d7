__version__ = '0.1.0'

FEATURES = ('frequency', 'length', 'quality', 'sentiment')
STRUCTURAL_FEATURES = ('degree', 'clustering', 'embeddedness')

from . import corpus
from . import langfeat
from . import normalize
from . import graph
from . import balance
from . import stats
from . import export

from .app import *
