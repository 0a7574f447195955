# lcadag: unique least common ancestors in directed acyclic graphs.
#
# Recognizes DAGs in which every non-empty vertex subset has a unique
# least common ancestor, along four independent routes, and carries the
# surrounding machinery: leaf-extension and lopping, Hasse diagrams,
# set systems, the leaf-attachment construction, K2,2 minor certificates,
# level-1 detection and reconstruction from set systems.

# Contains information used by the build manifest and the command line
lcadag_info = {
    "name": "lcadag",
    "description": "Global lca-property recognition for directed acyclic graphs",
    "version": (1, 0, 0),
    "python": (3, 8),
}
