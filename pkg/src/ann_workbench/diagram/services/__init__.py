"""
Diagram catalog and checker.
"""
