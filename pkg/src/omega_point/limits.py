"""Window-width guard shared by the symmetric-function kernels.

Resolution order for the active limit: explicit argument, then the
``OMEGA_POINT_MAX_WIDTH`` environment variable, then ``DEFAULT_MAX_WIDTH``.
"""
import os

from .errors import MalformedInput, ResourceLimit

DEFAULT_MAX_WIDTH = 512
ENV_MAX_WIDTH = "OMEGA_POINT_MAX_WIDTH"


def max_width(override=None):
    if override is not None:
        limit = int(override)
    else:
        raw = os.environ.get(ENV_MAX_WIDTH)
        if raw is None or raw.strip() == "":
            return DEFAULT_MAX_WIDTH
        try:
            limit = int(raw)
        except ValueError:
            raise MalformedInput(f"{ENV_MAX_WIDTH}={raw!r} is not an integer") from None
    if limit < 0:
        raise MalformedInput(f"window guard must be nonnegative, got {limit}")
    return limit


def check_width(width, override=None, what="window width N-M"):
    limit = max_width(override)
    if width > limit:
        raise ResourceLimit(f"{what} = {width} exceeds guard {limit}", width=width, limit=limit)
    return limit
