from .oracle import DEFAULT_PRIME  # noqa F401
from .oracle import DEFAULT_TRIALS  # noqa F401
from .oracle import ESCALATION_TRIALS  # noqa F401
from .oracle import Kind  # noqa F401
from .oracle import BasisElement  # noqa F401
from .oracle import AlgebraBasis  # noqa F401
from .oracle import FieldConfig  # noqa F401
from .oracle import seaweed_basis  # noqa F401
from .oracle import center_basis  # noqa F401
from .oracle import nilradical_basis  # noqa F401
from .oracle import poset_algebra_basis  # noqa F401
from .oracle import bracket  # noqa F401
from .oracle import index_randomized  # noqa F401
from .oracle import lower_central_series  # noqa F401
from .oracle import is_nilpotent  # noqa F401
from .oracle import is_ideal  # noqa F401
from .oracle import center_dim_oracle  # noqa F401
from .oracle import breadth_randomized  # noqa F401
