"""Closed-form profiles of the explicit monopoles, for comparison with sampled fields."""
import numpy as np

__all__ = [
    "mzero_higgs_norm",
    "sp2_higgs_norm_sq",
    "sp2_energy_density",
    "sp4_higgs_norm_sq",
    "sp4_energy_density",
    "axial_spectral_coefficients",
    "axial_rational_eigenvalue",
    "axial_rational_map",
    "REFERENCE_PROFILES",
]


def mzero_higgs_norm(R: np.ndarray) -> np.ndarray:
    """|Φ| for M = 0."""
    return R / (1.0 + R ** 2)


def sp2_higgs_norm_sq(r: np.ndarray) -> np.ndarray:
    r2 = r ** 2
    numerator = (5 * r2 ** 4 + 12 * r2 ** 3 + 30 * r2 ** 2 + 12 * r2 + 5) * r2
    return numerator / ((3 * r2 ** 2 + 2 * r2 + 3) ** 2 * (r2 + 1) ** 2)


def sp2_energy_density(r: np.ndarray) -> np.ndarray:
    r2 = r ** 2
    polynomial = (
        135 * r2 ** 8
        + 840 * r2 ** 7
        + 5252 * r2 ** 6
        + 13304 * r2 ** 5
        + 18282 * r2 ** 4
        + 13304 * r2 ** 3
        + 5252 * r2 ** 2
        + 840 * r2
        + 135
    )
    return (1 - r2) ** 4 / (2 * (1 + r2) ** 4) * polynomial / (3 * r2 ** 2 + 2 * r2 + 3) ** 4


def sp4_higgs_norm_sq(r: np.ndarray) -> np.ndarray:
    r2 = r ** 2
    numerator = r2 ** 6 + 9 * r2 ** 5 + 33 * r2 ** 4 + 58 * r2 ** 3 + 33 * r2 ** 2 + 9 * r2 + 1
    return numerator / (16 * (r2 ** 2 + r2 + 1) ** 2 * (r2 + 1) ** 2)


def sp4_energy_density(r: np.ndarray) -> np.ndarray:
    r2 = r ** 2
    polynomial = (
        5 * r2 ** 8
        + 70 * r2 ** 7
        + 381 * r2 ** 6
        + 942 * r2 ** 5
        + 1260 * r2 ** 4
        + 942 * r2 ** 3
        + 381 * r2 ** 2
        + 70 * r2
        + 5
    )
    return 3 * (1 - r2) ** 4 / (32 * (1 + r2) ** 4) * polynomial / (r2 ** 2 + r2 + 1) ** 4


def _axial_root(A: float, s3: int) -> float:
    return s3 * float(np.sqrt(max(0.0, 1.0 - 4.0 * A * A)))


def axial_spectral_coefficients(A: float, s3: int = 1) -> np.ndarray:
    """
    Coefficients c[p, q] of η^p·ζ^q in
    2s(η² − ζ²) + 2(1 − 2A²)(η² + ζ²) − 4A²ηζ with s = ±√(1 − 4A²).
    """
    s = _axial_root(A, s3)
    coefficients = np.zeros((3, 3))
    coefficients[2, 0] = 2 * s + 2 * (1 - 2 * A * A)
    coefficients[0, 2] = -2 * s + 2 * (1 - 2 * A * A)
    coefficients[1, 1] = -4 * A * A
    return coefficients


def axial_rational_eigenvalue(A: float) -> float:
    s = _axial_root(A, 1)
    return (1 - 2 * A * A + s) / (2 * A * A)


def axial_rational_map(A: float, z: np.ndarray) -> np.ndarray:
    s = _axial_root(A, 1)
    return 1j * (2 * A * A - 1 - s) * (s - 1) / (2 * A * z ** 2 * (2 * A * A - 1 + s))


REFERENCE_PROFILES = {
    "sp2": (sp2_higgs_norm_sq, sp2_energy_density),
    "sp4": (sp4_higgs_norm_sq, sp4_energy_density),
    "mzero": (lambda r: mzero_higgs_norm(r) ** 2, None),
}
