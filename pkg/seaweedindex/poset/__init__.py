from .poset import ISOMORPHISM_CAP  # noqa F401
from .poset import Poset  # noqa F401
from .poset import PosetStats  # noqa F401
from .poset import poset_stats  # noqa F401
from .poset import chain_block_poset  # noqa F401
from .poset import index_nilpotent_poset  # noqa F401
from .poset import index_chain_block_recursive  # noqa F401
from .poset import connected_components  # noqa F401
from .poset import hasse_heights  # noqa F401
from .poset import poset_isomorphic  # noqa F401
from ._blocks import Arrow  # noqa F401
from ._blocks import BlockDiagram  # noqa F401
from ._blocks import build_block_diagram  # noqa F401
from ._blocks import poset_from_diagram  # noqa F401
from ._blocks import nilradical_poset  # noqa F401
from ._blocks import tightness_shape  # noqa F401
from ._inout import Orientation  # noqa F401
from ._inout import InOutDecomposition  # noqa F401
from ._inout import decompose_in_out  # noqa F401
from ._inout import glue_in_out  # noqa F401
