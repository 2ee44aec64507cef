"""Zero-uncertainty states for degenerate measurement families.

Thin wrapper over the compiled extension. Installed builds carry the
extension inside the package; in-tree builds leave it next to the build
directory on sys.path, so fall back to the top-level name.
"""

try:
    from ._zuslab import *  # noqa: F401,F403
    from ._zuslab import __version__  # noqa: F401
except ImportError:
    from _zuslab import *  # noqa: F401,F403
    from _zuslab import __version__  # noqa: F401
