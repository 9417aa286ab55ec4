# config.py

# Defaults shared by the library and the CLI. Every function that searches or
# enumerates takes these as keyword defaults, so a caller can override them
# per call without touching this module.


# Equality search: extra slices allowed above the longer of the two diagrams
# (room for braid insertions), and a hard cap on visited diagrams.
DEFAULT_SLACK = 4
DEFAULT_MAX_STATES = 200_000

# Sphere example: objects are integers, checked on [-window, window].
DEFAULT_WINDOW = 2
DEFAULT_VARIANT = "literal"
DEFAULT_BRAIDING = "sum"

SPHERE_VARIANTS = ("literal", "braid-trivial")
SPHERE_BRAIDINGS = ("sum", "product")

# A failing axiom keeps at most this many witnesses in its report entry.
MAX_WITNESSES = 20

# CLI exit statuses.
EXIT_OK = 0
EXIT_FALSE = 1
EXIT_UNKNOWN = 2
EXIT_INPUT = 3

# Renderings.
ASCII_COLUMN = 4
TIKZ_XSCALE = 1.0
TIKZ_YSCALE = 0.6
TIKZ_BOX_COLOR = "green"

# Names accepted by --model besides a file path.
BUILTIN_MODELS = ("q", "deloop-p")
