from .continuity import check_continuity, indicator, preimage, replay_continuity
from .errors import ParseError, PreconditionError, ShapeError, TopoError
from .measure import measure_bounds
from .parser import parse
from .printer import format_script, format_set
from .render import render
from .sets import (
    build_paper_u,
    canonicalize,
    complement,
    decompose_open,
    intersect,
    member,
    normalize,
    union,
)
from .theorem import theorem1
from .topology import (
    MICHAEL,
    MICHAEL_C,
    USUAL,
    USUAL_C,
    cardinality,
    is_open,
    replay_openness,
    verify_axioms,
)

__version__ = "0.1.0"

__all__ = [
    "MICHAEL",
    "MICHAEL_C",
    "USUAL",
    "USUAL_C",
    "ParseError",
    "PreconditionError",
    "ShapeError",
    "TopoError",
    "build_paper_u",
    "canonicalize",
    "cardinality",
    "check_continuity",
    "complement",
    "decompose_open",
    "format_script",
    "format_set",
    "indicator",
    "intersect",
    "is_open",
    "measure_bounds",
    "member",
    "normalize",
    "parse",
    "preimage",
    "render",
    "replay_continuity",
    "replay_openness",
    "theorem1",
    "union",
    "verify_axioms",
]
