"""Search for (l, l)-gluing candidates between genus-2 and elliptic curves over Q."""

from ._glue import *  # noqa: F401,F403
from ._glue import __doc__  # noqa: F401
