"""
Terms and their evaluation.
"""
