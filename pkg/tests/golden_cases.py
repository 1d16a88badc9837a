"""Golden-file cases for the command line; set CHERNRING_REGEN_GOLDEN=1 to rewrite them."""
from pathlib import Path

GOLDEN = Path(__file__).parent / "golden"

UNIVERSAL_CASES = [(n, r) for r in range(1, 6) for n in range(0, 6 - r)]
FORMATS = {"text": "txt", "latex": "tex", "json": "json"}
VERIFY_ARGS = ["verify", "--suite", "all", "--n", "1", "--r", "2", "--truncate", "5", "--format", "json"]


def universal_path(n, r, fmt):
    return GOLDEN / f"universal_poly_n{n}_r{r}.{FORMATS[fmt]}"


def universal_args(n, r, fmt):
    return ["universal-poly", "--n", str(n), "--r", str(r), "--format", fmt]


VERIFY_PATH = GOLDEN / "verify_all_n1_r2_N5.json"
