from .base import InteractionGraph, build_graph, build_graph_from_pairs
from .metrics import *
