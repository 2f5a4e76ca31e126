from .fuzzy_error import *
from .generators import GeneratorF
from .pieces import PieceKind, Piece, ConstantPiece, LinearPiece, QuadraticPiece, GeneratorPiece, HermitePiece
from .side_functions import SideTerm, SideSegment, SideCurve, SideFunctions, SumPiece
from .fuzzy_number import Branch, AlphaCut, FuzzyNumber, membership, alpha_cut, to_side_functions, from_side_functions
from .fuzzy_validator import validate, is_valid
from .fuzzy_document import FuzzyDocument, piece_from_dict, number_to_dict, number_from_dict, dumps, loads, load, save
