"""Graph sandwich toolkit: thin Python front end over the C++ core."""

try:
    from ._sandwich import (  # type: ignore[attr-defined]
        OverlapError,
        ParseError,
        RangeError,
        SignatureError,
        SizeError,
        UnsupportedClassError,
        gadget,
        gen,
        ppower,
        recognize,
        reduce,
        siggers,
        solve,
    )
except ImportError:  # build-tree layout: extension module next to the package
    from _sandwich import (  # type: ignore[no-redef]
        OverlapError,
        ParseError,
        RangeError,
        SignatureError,
        SizeError,
        UnsupportedClassError,
        gadget,
        gen,
        ppower,
        recognize,
        reduce,
        siggers,
        solve,
    )

__all__ = [
    "OverlapError",
    "ParseError",
    "RangeError",
    "SignatureError",
    "SizeError",
    "UnsupportedClassError",
    "gadget",
    "gen",
    "ppower",
    "recognize",
    "reduce",
    "siggers",
    "solve",
]
