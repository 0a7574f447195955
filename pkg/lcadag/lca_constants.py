"""
Constants shared by the algorithms, the command line and the tests.

Please sort this file's sections alphabetically
"""

# Section: Exit Codes
# Stable across releases, scripts depend on them
EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

# Section: Generators
# W sampling for the leaf-attachment generator: the parent count starts at 1
# and grows by one with this probability, capped by max_parents
GENERATOR_CONTINUE_PROBABILITY = 0.5
GENERATOR_MAX_PARENTS = 3
GENERATOR_RETRY_BUDGET = 32

# Edge probability for plain random DAGs and networks
RANDOM_DAG_EDGE_PROBABILITY = 0.3

# Section: Labels
# Leaves added by the leaf extension are named "<host>" + SYNTHETIC_LEAF_SUFFIX
SYNTHETIC_LEAF_SUFFIX = "__lx"

# Label of the single vertex a construction trace starts from, if not given
TRACE_DEFAULT_ORIGIN = "v0"

# Starts a comment in the edge list and trace formats
COMMENT_CHAR = "#"

# Characters a label may not hold to be written as a trace step
TRACE_RESERVED_CHARS = COMMENT_CHAR + ",{}"

# Section: Lop Policies
LOP_POLICY_SYNTHETIC_FIRST = "synthetic-first"
LOP_POLICY_LOWEST_ID = "lowest-id"
LOP_POLICY_HIGHEST_ID = "highest-id"

LOP_POLICIES = (
    LOP_POLICY_SYNTHETIC_FIRST,
    LOP_POLICY_LOWEST_ID,
    LOP_POLICY_HIGHEST_ID,
)

# Section: Minors
# Cap on certificates returned when no limit is requested
MINOR_DEFAULT_LIMIT = 64

# Section: Predicates
# Names used by "check" and in JSON reports
PREDICATE_GALLED = "galled"
PREDICATE_GLOBAL_LCA = "global-lca"
PREDICATE_JOIN_SEMILATTICE = "join-semilattice"
PREDICATE_LCA_RELEVANT = "lca-relevant"
PREDICATE_LEVEL1 = "level1"
PREDICATE_MINOR_THEOREM = "minor-theorem"
PREDICATE_PCC = "pcc"
PREDICATE_REGULAR = "regular"

PREDICATES = (
    PREDICATE_GLOBAL_LCA,
    PREDICATE_LCA_RELEVANT,
    PREDICATE_PCC,
    PREDICATE_REGULAR,
    PREDICATE_LEVEL1,
    PREDICATE_GALLED,
    PREDICATE_JOIN_SEMILATTICE,
    PREDICATE_MINOR_THEOREM,
)

# Section: Routes
# The four recognition routes for the global lca-property
ROUTE_ALL = "all"
ROUTE_DESCENDANT_CLOSED = "descendant-closed"
ROUTE_JOIN_SEMILATTICE = "join-semilattice"
ROUTE_LXT_LEAF_PAIRS = "lxt-leaf-pairs"
ROUTE_PAIRWISE_VERTEX = "pairwise-vertex"

# Section: Set Systems
SYSTEM_ANCESTORS = "ancestors"
SYSTEM_CLUSTERS = "clusters"
SYSTEM_DESCENDANTS = "descendants"
SYSTEM_INTERMEDIARIES = "intermediaries"

SYSTEMS = (
    SYSTEM_CLUSTERS,
    SYSTEM_DESCENDANTS,
    SYSTEM_ANCESTORS,
    SYSTEM_INTERMEDIARIES,
)

# Section: Transforms
TRANSFORM_HASSE_CLUSTERS = "hasse-clusters"
TRANSFORM_HASSE_DESCENDANTS = "hasse-descendants"
TRANSFORM_LOP = "lop"
TRANSFORM_LXT = "lxt"
TRANSFORM_REV = "rev"
TRANSFORM_SF = "sf"

TRANSFORMS = (
    TRANSFORM_SF,
    TRANSFORM_LXT,
    TRANSFORM_LOP,
    TRANSFORM_REV,
    TRANSFORM_HASSE_CLUSTERS,
    TRANSFORM_HASSE_DESCENDANTS,
)

# Section: Witness Types
# The "type" key of a JSON witness
WITNESS_LCA = "lca"
WITNESS_MULTIPLE_ROOTS = "multiple-roots"
WITNESS_PAIR = "pair"
WITNESS_SET_PAIR = "set-pair"
WITNESS_SUBDIVISION = "subdivision"
WITNESS_SUBSET = "subset"
WITNESS_VERTEX = "vertex"
