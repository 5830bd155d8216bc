# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.

import os
import sys

sys.path.insert(0, os.path.abspath("../src"))

# -- Project information -----------------------------------------------------

project = "orbifold-fusion"
year = "2026"
author = "orbifold-fusion authors"
copyright = "{0}, {1}".format(year, author)
version = release = "0.1.0"

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
]
source_suffix = ".rst"
master_doc = "index"
exclude_patterns = ["build"]
pygments_style = "trac"

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_short_title = "%s-%s" % (project, version)
