"""
Table-backed algebraic structures.
"""
