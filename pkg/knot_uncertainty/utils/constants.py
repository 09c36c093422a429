# Quadrature defaults
QUADRATURE_POINTS_PER_P = 256
QUADRATURE_MAX_DOUBLINGS = 8
QUADRATURE_TOL = 1e-13
QUADRATURE_MIN_POINTS = 16

# Numerical tolerances (a = hbar = 1 scale)
VARIANCE_CLAMP = 1e-14
IMAGINARY_TOL = 1e-12
UR_MARGIN_REL = 1e-10
RADIUS_RELATIVE_TOL = 1e-12
ZERO_MRL_TOL = 1e-12

# Closed form vs quadrature: |delta| <= DISCREPANCY_FACTOR * a^2 / gamma^2
DISCREPANCY_FACTOR = 5.0
LZ_EXACT_TOL = 1e-12

# Sup-norm grids
EMBED_GRID_POINTS = 10_000

# Text rendering
TEXT_SIGNIFICANT_DIGITS = 12

# CLI defaults
DEFAULT_P = 2
DEFAULT_Q = 3
DEFAULT_GAMMA = 10.0
DEFAULT_A = 1.0
DEFAULT_HBAR = 1.0
DEFAULT_MODES = (0, 2)
DEFAULT_KIND = "thin"
DEFAULT_WEIGHT = "inverse-gamma"
DEFAULT_FORMAT = "text"
DEFAULT_SEED = 42
DEFAULT_TRIALS = 200
DEFAULT_SWEEP_GAMMAS = (10.0, 20.0, 40.0)

# Random Robertson campaign
RANDOM_KNOTS = ((2, 3), (3, 4), (2, 5), (3, 5))
RANDOM_GAMMAS = (5.0, 10.0, 50.0)
RANDOM_MIN_MODES = 2
RANDOM_MAX_MODES = 5
RANDOM_MAX_ABS_MODE = 12

# Exit codes
EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INVALID = 2
