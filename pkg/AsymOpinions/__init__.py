from .options import build_parser, parse_options
from .pipeline import OpinionPipeline
