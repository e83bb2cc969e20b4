try:
    from ._bframe import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _bframe import *  # noqa: F401,F403  (in-tree builds)
