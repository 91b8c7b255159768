"""Kernel backend selection.

The compiled Cython core is preferred when it was built; setting the
environment variable ``POLYLOC_PURE=1`` forces the pure-Python twin.  Both
expose exactly the same functions, so the rest of the engine imports names
from this package without caring which one is active.
"""

import os

if os.environ.get("POLYLOC_PURE"):
    from .pure import *  # noqa: F401,F403
    BACKEND = "pure"
else:
    try:
        from ._core import *  # noqa: F401,F403
        BACKEND = "compiled"
    except ImportError:
        from .pure import *  # noqa: F401,F403
        BACKEND = "pure"
