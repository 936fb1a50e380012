"""Generate tests/test_readme.py from the python blocks of README.md."""

import os
from pytest_readme import setup

setup()
os.replace("test_readme.py", os.path.join("tests", "test_readme.py"))
