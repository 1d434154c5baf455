import os
import sys

sys.path.insert(0, os.path.abspath(".."))

from decat import __version__  # noqa: E402

# -- Project information -----------------------------------------------------

project = "decat"
author = "The decat developers"
release = __version__


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",  # Generates documentation from docstrings
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx.ext.doctest",  # Runs the docstring examples with `make doctest`
    "sphinx_copybutton",
]

autodoc_member_order = "bysource"
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]


# -- Options for HTML output -------------------------------------------------
html_theme = "sphinx_book_theme"
