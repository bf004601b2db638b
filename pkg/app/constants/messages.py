"""Application messages"""

# Argument errors
DIMENSION_MISMATCH = "Vector of length {got} does not match matrix dimension {expected}"
INDEX_OUT_OF_RANGE = "Index p={p} is outside 1..{d}"
NOT_SQUARE = "Matrix must be square, got shape {shape}"
EMPTY_MATRIX = "Matrix dimension must be at least 1"
NON_POSITIVE = "{name} must be a positive integer, got {value}"
INVALID_SEED = "seed must be an unsigned 64-bit integer, got {value}"
INVALID_SAMPLE_RANGE = "Sample range must be nonnegative, got start={start}, count={count}"
INVALID_EPSILON = "eps must be positive, got {value}"
INVALID_DELTA = "delta must lie in (0, 1), got {value}"
INVALID_DELTA_PREDICTION = "delta must be positive, got {value}"
INVALID_MOMENT_ORDER = "Moment order n must be 0, 1 or 2, got {value}"
INVALID_ALPHA = "Step size alpha must be positive, got {value}"
PLAN_TOO_LARGE = "Required sample size {value} exceeds the representable range; loosen eps or delta"
INVALID_GRID = "Sample-size grid must be nonempty and strictly increasing, got {value}"
INVALID_SELECTOR = "Unknown index selector {value!r}"

# Degenerate targets
ZERO_DIAGONAL_ENTRY = "A[{p},{p}] is zero; the relative target is undefined"
ZERO_DIAGONAL = "The diagonal of A is zero; the norm-wise relative target is undefined"

# Numeric errors
NON_FINITE_VALUE = "Objective returned a non-finite value at step alpha={alpha}"

# Matrix sources
UNKNOWN_SOURCE = "Unknown matrix source {value!r}; expected gauss:D, uniform:D or mm:PATH"
UNREADABLE_SOURCE = "Cannot read matrix source {path}: {reason}"
MM_BAD_BANNER = "Missing or malformed %%MatrixMarket banner"
MM_BAD_HEADER = "Unsupported Matrix Market header {value!r}"
MM_BAD_SIZE_LINE = "Malformed size line"
MM_BAD_ENTRY = "Malformed entry line"
MM_ENTRY_OUT_OF_RANGE = "Entry index ({i}, {j}) outside a {d}x{d} matrix"
MM_SKEW_DIAGONAL = "Skew-symmetric entry ({i}, {i}) lies on the diagonal"
MM_ENTRY_COUNT = "Expected {expected} entries, found {found}"
MM_NON_SQUARE = "Matrix Market size {rows}x{cols} is not square"
MM_COMPLEX_FIELD = "Field {value!r} is not supported; only real, integer and pattern"

# Experiment
MSC10480_MISSING = "Matrix file {path} is absent; skipping experiment"
DEGENERATE_SELECTOR = "Selector {selector} hits A_pp = 0; relative errors reported as NaN"

# Generic
INTERNAL_ERROR = "Internal error"
USAGE_ERROR = "Invalid command-line usage"
ERROR_DETAIL = "Error detail: {detail}"

# Command line
CONFLICTING_FLAGS = "{first} cannot be combined with {second}"
ESTIMATE_DONE = "Estimated diagonal of {label} with {queries} queries in {seconds:.3f}s"
PLAN_DONE = "Planned {mode} for {label}: N={sample_size}, T={repeats}"
EXPERIMENT_PROGRESS = "{label}: N={sample_size} done ({done}/{total})"
EXPERIMENT_DONE = "Wrote {rows} rows and {plots} plots to {out} in {seconds:.3f}s"
