"""Kirillov-Reshetikhin crystals KR^{i,m} of type A_n^(1).

Two realizations (rectangular tableaux and FFL polytope points), operator
words reaching any point from the highest weight element, and the affine
crystal isomorphism between the models.
"""

from .core import DecodeError, ParamError, Params, decode_element, encode_element, validate_params
from .polytope import PolytopePoint, enumerate_points, highest_weight_point
from .tableau import Tableau, enumerate_tableaux, highest_weight_tableau
from .words import apply_word, parse_word, render_word, word_full_path

__all__ = [
    "DecodeError",
    "ParamError",
    "Params",
    "PolytopePoint",
    "Tableau",
    "apply_word",
    "decode_element",
    "encode_element",
    "enumerate_points",
    "enumerate_tableaux",
    "highest_weight_point",
    "highest_weight_tableau",
    "parse_word",
    "render_word",
    "validate_params",
    "word_full_path",
]
