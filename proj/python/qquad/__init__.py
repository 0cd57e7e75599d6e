try:
    from ._qquad import *  # noqa: F401,F403  (installed wheel layout)
    from ._qquad import __version__  # noqa: F401
except ImportError:  # development layout: extension on PYTHONPATH next to the package
    from _qquad import *  # noqa: F401,F403
    from _qquad import __version__  # noqa: F401
