"""
Morphisms, constraint signatures and skeletal models.
"""
