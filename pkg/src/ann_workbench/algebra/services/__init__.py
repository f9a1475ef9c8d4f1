"""
Constructors and law validation for rings and bimodules.
"""
