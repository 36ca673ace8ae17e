# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/master/config
#pylint: skip-file

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('../src'))

import sphinx_rtd_theme


# -- Project information -----------------------------------------------------

project = 'RainbowLib'
copyright = '2026, RainbowLib developers'
author = 'RainbowLib developers'

# The short X.Y version
version = '1.0.0'
# The full version, including alpha/beta/rc tags
release = ''


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = None


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_static_path = ['_static']
htmlhelp_basename = 'RainbowLibdoc'


# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'rainbowlib', 'RainbowLib Documentation',
     [author], 1),
    ('rcmanage/rcmanage', 'rc-manage', 'rc-manage Documentation',
     [author], 1),
]
