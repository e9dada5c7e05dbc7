#
# johnsonfilt documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.

import datetime
import warnings

import johnsonfilt

# -- General configuration ------------------------------------------------

extensions = [
    "numpydoc",
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
]

autosummary_generate = True

napoleon_use_param = False
napoleon_use_rtype = False

numpydoc_class_members_toctree = True
numpydoc_show_class_members = False

templates_path = ["_templates"]

source_suffix = ".rst"

master_doc = "index"

project = "johnsonfilt"
copyright = f"{datetime.datetime.now().year}, johnsonfilt Developers"

# The short X.Y version.
version = johnsonfilt.__version__.split("+")[0]
# The full version, including alpha/beta/rc tags.
release = johnsonfilt.__version__

exclude_patterns = ["_build"]

pygments_style = "sphinx"

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"

htmlhelp_basename = "johnsonfiltdoc"

# -- Options for manual page output ---------------------------------------

man_pages = [("index", "johnsonfilt", "johnsonfilt Documentation", ["johnsonfilt Developers"], 1)]

# disable warnings
warnings.filterwarnings("ignore")
