"""Numerical tolerances shared across the package.

All values are plain module constants; functions take them as keyword
defaults so callers (and the CLI ``--tol-*`` flags) can override per call.
"""

EPS_MUL = 1e-12  # relative, quaternion products
EPS_ORTH = 1e-10
EPS_ROT = 1e-9
EPS_SIM = 1e-9
EPS_UNIT = 1e-9

EPS_COEF = 1e-12  # relative zero-snapping of polynomial coefficients
EPS_GCD = 1e-9  # relative remainder size treated as zero in numeric Euclid
EPS_CLUSTER = 1e-6
ROOT_MAX_ITER = 200
ROOT_STEP_TOL = 1e-13

EPS_ROOT = 1e-7  # relative root residual
EPS_POS = 1e-9  # simple root: det must exceed this times scale
EPS_DET = 1e-6  # multiple root: |det| must stay below this times scale
EPS_CR = 1e-9  # block-pattern deviation relative to scale
EPS_NONNEG = 1e-8  # normalized determinant floor in the Monte-Carlo scan
