"""
Services built on skeletal models.
"""
