from .habit import *
