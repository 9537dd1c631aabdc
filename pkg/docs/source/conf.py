# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Project information -----------------------------------------------------
import quiverdual

project = "quiverdual"
copyright = "2026, the quiverdual developers"
author = "the quiverdual developers"
show_authors = True
# -- General configuration ---------------------------------------------------
modindex_common_prefix = ["quiverdual."]

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "sphinx.ext.mathjax",
]

templates_path: list = []
exclude_patterns = ["build", "Thumbs.db", ".DS_Store"]

autosummary_generate = True


version = quiverdual.__version__
# The full version, including dev info
release = version.replace("_", "")

# -- Options for HTML output -------------------------------------------------

html_theme = "bizstyle"
html_static_path: list = []


html_sidebars = {
    "**": [
        "localtoc.html",
        "relations.html",
        "searchbox.html",
    ]
}
