from .lca_vertex_set import VertexSet
from .lca_poset import Poset
from .lca_dag import Dag, k1
from .lca_set_system import SetSystem
from .lca_report import GlobalLcaReport, LcaWitness, Route, Verdict
from .lca_trace import ConstructionTrace, TraceStep
from .lca_subdivision import K22Subdivision, XSubdivision
