from .meander import Side  # noqa F401
from .meander import Edge  # noqa F401
from .meander import Meander  # noqa F401
from .meander import CentralComponents  # noqa F401
from .meander import build_meander  # noqa F401
from .meander import component_vertices  # noqa F401
from .meander import cycles_and_paths  # noqa F401
from .meander import index_seaweed  # noqa F401
from .meander import central_components  # noqa F401
from .meander import count_central_by_gaps  # noqa F401
from .meander import simple_edges  # noqa F401
from ._weighted import WeightedMeander  # noqa F401
from ._weighted import build_weighted  # noqa F401
from ._weighted import total_weight  # noqa F401
from ._weighted import edge_weight  # noqa F401
