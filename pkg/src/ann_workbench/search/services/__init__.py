"""
Search services.
"""
