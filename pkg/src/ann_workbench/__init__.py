"""
Ann-category workbench: axioms of Ann-categories and categorical rings as
exhaustive checks over finite skeletal models.
"""

__version__ = "0.1.0"
