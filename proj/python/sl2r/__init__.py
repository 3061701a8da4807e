from ._sl2r import *  # noqa: F401,F403
from ._sl2r import __version__  # noqa: F401
