from .errors import *
from .logger import Logger, get_logger
from .timer import Timer
from .summary import Summary
from .parse_config import HierarchyArgmentParser, dump_args, load_config, save_config
from .pipeline import Pipeline
from .tables import write_table, read_table, sibling_path
