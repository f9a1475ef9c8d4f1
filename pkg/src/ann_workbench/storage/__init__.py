"""
Model files and report documents.
"""

from .model_file import ModelFile, dump_model, load_model, model_digest, model_to_document, parse_model, save_model

__all__ = [
    'ModelFile',
    'dump_model',
    'load_model',
    'model_digest',
    'model_to_document',
    'parse_model',
    'save_model',
]
