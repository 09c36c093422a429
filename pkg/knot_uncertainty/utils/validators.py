import math
from typing import Sequence, Tuple


def validate_radii(R: float, d: float) -> Tuple[bool, str]:
    """Validate major/minor radius pair"""
    if not (math.isfinite(R) and math.isfinite(d)):
        return False, "Radii must be finite"
    if d <= 0:
        return False, f"Minor radius must be positive (d={d})"
    if R <= d:
        return False, f"Major radius must exceed minor radius (R={R}, d={d})"
    return True, ""


def validate_scale(a: float, gamma: float) -> Tuple[bool, str]:
    """Validate length scale and aspect ratio"""
    if not (math.isfinite(a) and math.isfinite(gamma)):
        return False, "Scale and aspect ratio must be finite"
    if a <= 0:
        return False, f"Length scale must be positive (a={a})"
    if gamma <= 1:
        return False, f"Aspect ratio must exceed 1 (gamma={gamma})"
    return True, ""


def validate_positive_integers(p: int, q: int) -> Tuple[bool, str]:
    """Validate knot integers"""
    if p < 1 or q < 1:
        return False, f"Knot integers must be >= 1 (p={p}, q={q})"
    return True, ""


def validate_coprime(p: int, q: int) -> Tuple[bool, str]:
    """Validate gcd(p, q) == 1"""
    g = math.gcd(p, q)
    if g != 1:
        return False, f"p and q must be coprime (gcd({p},{q})={g})"
    return True, ""


def validate_distinct_modes(modes: Sequence[int]) -> Tuple[bool, str]:
    """Validate mode integers are pairwise distinct"""
    seen = set()
    for n in modes:
        if n in seen:
            return False, f"Mode n={n} appears more than once"
        seen.add(n)
    return True, ""


def validate_gamma_list(gammas: Sequence[float]) -> Tuple[bool, str]:
    """Validate sweep aspect ratios"""
    for g in gammas:
        if not math.isfinite(g) or g <= 1:
            return False, f"Every gamma must be finite and > 1 (got {g})"
    return True, ""


def validate_trials(trials: int) -> Tuple[bool, str]:
    """Validate campaign size"""
    if trials < 1:
        return False, f"Trials must be >= 1 (got {trials})"
    return True, ""
