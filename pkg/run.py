# This is a small python script that runs the lcadag command line straight out of your GIT repo. This
# saves having to install the package first, e.g.
#
# python3 run.py check global-lca tests/utils/test_edge_list_txts/test_load_fixture_with_comments.txt
#
# --debug turns on the info and success messages of the logger.

import os
import subprocess
import sys


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]

    project_folder = os.path.dirname(os.path.realpath(__file__))
    enviro = dict(os.environ)
    enviro["PYTHONPATH"] = os.pathsep.join(
        filter(None, (project_folder, enviro.get("PYTHONPATH")))
    )

    python_args = [sys.executable, "-m", "lcadag"] + list(argv)
    return subprocess.run(python_args, env=enviro).returncode


sys.exit(main())
