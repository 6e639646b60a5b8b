"""Exact-arithmetic analysis of planar webs given as power-series jets.

All functions exchange the JSON interchange strings also used by the
`webrank` CLI; parse the results with the standard json module.
"""

from ._webrank import (
    WebError,
    build,
    cross_ratio,
    curvature,
    degree3,
    example,
    normalize,
    rank,
    verify,
    __version__,
)

__all__ = [
    "WebError",
    "build",
    "cross_ratio",
    "curvature",
    "degree3",
    "example",
    "normalize",
    "rank",
    "verify",
    "__version__",
]
