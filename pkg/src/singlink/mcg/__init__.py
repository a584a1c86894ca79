"""Dehn-twist words on model surfaces."""
from .words import Word, WordSyntaxError, format_word, inverse, parse_word, power
from .surface import (AbstractOpenBook, HomologyVerdict, Relation, SurfaceModel, UnknownCurve,
                      homology_action, positive_stabilization, transvection, verify_relation)
from .models import model_names, surface_model
from .rewrite import (DEFAULT_REWRITE_DEPTH, DerivationVerdict, Move, SquareVerdict,
                      check_square_identity, search_derivation, verify_derivation)
