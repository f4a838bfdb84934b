from . import notation  # noqa F401
from . import meander  # noqa F401
from . import poset  # noqa F401
from . import oracle  # noqa F401
from . import invariants  # noqa F401
from . import render  # noqa F401
from . import checks  # noqa F401
from .notation import parse_spec  # noqa F401
from .invariants import full_report  # noqa F401
import os as _os  # noqa F401

# add rudimentary version tracking
__VERSION_FILE__ = _os.path.join(_os.path.dirname(__file__), 'VERSION')
with open(__VERSION_FILE__) as _f:
    __version__ = _f.read().strip()
