try:
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401
except ImportError:  # build-tree layout: extension sits next to the package
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
