# Sphinx configuration of the pconsistency documentation.
#
# The API pages under ``apis/`` are regenerated on every build from the
# ``__all__`` lists of the package; the worked examples are jupytext
# percent scripts paired with the notebooks that nbsphinx renders.

import os
import sys
sys.path.insert(0, os.path.abspath('../'))

import pconsistency
from docs import generate_apis

generate_apis.generate()


# -- Project information -----------------------------------------------------

project = 'pconsistency'
copyright = '2021, pconsistency developers'
author = 'pconsistency developers'
release = pconsistency.__version__
version = '.'.join(release.split('.')[:2])

needs_sphinx = '3.4.3'


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
    'nbsphinx',
]
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store', '**.ipynb_checkpoints']

autosummary_generate = True
autodoc_member_order = 'bysource'

# docstrings are numpy style with rst parameter tables
napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_use_rtype = False

# notebooks are rendered as saved
nbsphinx_execute = 'never'


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
