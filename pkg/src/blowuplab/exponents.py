"""Critical-exponent algebra and damping-regime classification.

Closed-form exponents controlling blow-up of u_tt - Δu + μ(1+t)^{-β} u_t = |u|^p:
the heat-critical power 1 + 2/n, the wave-critical power p0(d) (positive root of
the quadratic γ(p, d) = 2 + (d+1)p - (d-1)p^2), the μ-threshold below which the
wave-critical window is nonempty, and the predicted lifespan exponent
-2p(p-1)/γ(p, n+2μ). Everything here is exact double-precision arithmetic on
scalars; no iteration, no state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError

__all__ = [
    "RegimeKind",
    "Regime",
    "ExponentReport",
    "gamma",
    "strauss_exponent",
    "fujita_exponent",
    "critical_exponent_mu2",
    "mu_threshold",
    "classify_damping",
    "admissible",
    "lifespan_exponent",
    "wakasugi_exponent",
    "report",
]


class RegimeKind(str, Enum):
    OVERDAMPING = "Overdamping"
    EFFECTIVE = "Effective"
    SCALE_INVARIANT = "ScaleInvariant"
    SCATTERING = "Scattering"


@dataclass(frozen=True)
class Regime:
    """Damping-regime label; `non_effective` is meaningful only at kind ScaleInvariant."""

    kind: RegimeKind
    non_effective: bool | None = None

    def __str__(self) -> str:
        if self.kind is RegimeKind.SCALE_INVARIANT:
            flag = "true" if self.non_effective else "false"
            return f"ScaleInvariant(non_effective={flag})"
        return self.kind.value


def gamma(p: float, d: float) -> float:
    """Evaluate 2 + (d+1)p - (d-1)p^2, the quadratic whose positive root is p0(d)."""
    if p <= 1.0:
        raise DomainError(f"gamma requires p > 1, got p={p}")
    if d < 1.0:
        raise DomainError(f"gamma requires d >= 1, got d={d}")
    return 2.0 + (d + 1.0) * p - (d - 1.0) * p * p


def strauss_exponent(d: float) -> float:
    """Positive root of gamma(., d): (d + 1 + sqrt(d^2 + 10d - 7)) / (2(d-1)).

    Accepts real d > 1 since the lifespan theory evaluates it at the
    non-integer shift n + 2μ.
    """
    if d <= 1.0:
        raise DomainError(f"strauss_exponent requires d > 1, got d={d}")
    return (d + 1.0 + math.sqrt(d * d + 10.0 * d - 7.0)) / (2.0 * (d - 1.0))


def fujita_exponent(n: int) -> float:
    """Heat-critical power 1 + 2/n."""
    if n < 1:
        raise DomainError(f"fujita_exponent requires n >= 1, got n={n}")
    return 1.0 + 2.0 / n


def critical_exponent_mu2(n: int) -> float:
    """Critical power max{1 + 2/n, p0(n+2)} for the borderline damping μ = 2."""
    if n < 1:
        raise DomainError(f"critical_exponent_mu2 requires n >= 1, got n={n}")
    return max(fujita_exponent(n), strauss_exponent(n + 2.0))


def mu_threshold(n: int) -> float:
    """Damping threshold (n^2 + n + 2) / (2(n+2)); below it the window
    [1 + 2/n, p0(n+2μ)) of blow-up powers is nonempty."""
    if n < 2:
        raise DomainError(f"mu_threshold requires n >= 2, got n={n}")
    return (n * n + n + 2.0) / (2.0 * (n + 2.0))


def classify_damping(beta: float, mu: float) -> Regime:
    """Classify the damping term μ(1+t)^{-β} u_t by the decay exponent β.

    β < -1 overdamping, -1 <= β < 1 effective (heat-like), β = 1 scale
    invariant (with μ in (0,1) flagged non-effective), β > 1 scattering.
    """
    if mu <= 0.0:
        raise DomainError(f"classify_damping requires mu > 0, got mu={mu}")
    if beta < -1.0:
        return Regime(RegimeKind.OVERDAMPING)
    if beta < 1.0:
        return Regime(RegimeKind.EFFECTIVE)
    if beta == 1.0:
        return Regime(RegimeKind.SCALE_INVARIANT, non_effective=0.0 < mu < 1.0)
    return Regime(RegimeKind.SCATTERING)


def admissible(n: int, mu: float, p: float) -> bool:
    """True iff n >= 2, 0 < μ < mu_threshold(n) and 1 + 2/n <= p < p0(n+2μ).

    The lower endpoint p = 1 + 2/n is included, the upper p = p0(n+2μ) is not.
    """
    if n < 1:
        raise DomainError(f"admissible requires n >= 1, got n={n}")
    if n < 2:
        return False
    if not (0.0 < mu < mu_threshold(n)):
        return False
    return fujita_exponent(n) <= p < strauss_exponent(n + 2.0 * mu)


def lifespan_exponent(n: int, mu: float, p: float, *, scattering: bool = False) -> float:
    """Predicted lifespan power: T <= C eps^k with k = -2p(p-1)/γ(p, n+2μ).

    With scattering=True the damping is treated as asymptotically negligible
    and the undamped shift is used instead: k = -2p(p-1)/γ(p, n).
    """
    if scattering:
        if p <= 1.0:
            raise DomainError(f"lifespan_exponent requires p > 1, got p={p}")
        g = gamma(p, float(n))
    else:
        if not admissible(n, mu, p):
            raise DomainError(
                f"(n={n}, mu={mu}, p={p}) is outside the admissible blow-up range; "
                "pass scattering=True for the undamped-shift prediction"
            )
        g = gamma(p, n + 2.0 * mu)
    if g <= 0.0:
        raise DomainError(
            f"gamma(p, d) = {g} <= 0: p is at or beyond the critical power (no blow-up prediction)"
        )
    return -2.0 * p * (p - 1.0) / g


def wakasugi_exponent(n: int, mu: float, p: float) -> float:
    """Prior sub-critical lifespan power for the same equation.

    Returns -(p-1)/(2 - n(p-1)) when 1 < p < 1 + 2/n and μ >= 1, and
    -(p-1)/(2 - (n+μ-1)(p-1)) when 1 < p < 1 + 2/(n+μ-1) and 0 < μ < 1.
    Raises DomainError when neither condition holds.
    """
    if n < 1:
        raise DomainError(f"wakasugi_exponent requires n >= 1, got n={n}")
    if mu >= 1.0 and 1.0 < p < fujita_exponent(n):
        return -(p - 1.0) / (2.0 - n * (p - 1.0))
    if 0.0 < mu < 1.0 and 1.0 < p < 1.0 + 2.0 / (n + mu - 1.0):
        return -(p - 1.0) / (2.0 - (n + mu - 1.0) * (p - 1.0))
    raise DomainError(
        f"(n={n}, mu={mu}, p={p}) satisfies neither sub-critical branch condition"
    )


@dataclass(frozen=True)
class ExponentReport:
    """All critical exponents and regime labels for one (n, μ, β, p) tuple.

    `lifespan_exp` is -2p(p-1)/γ(p, n+2μ) whenever that γ is positive (the
    formal prediction, reported even off the admissible set) and None at or
    beyond the critical power. `mu0` is None for n = 1 where the threshold
    formula does not apply.
    """

    n: int
    mu: float
    beta: float
    p: float
    fujita: float
    strauss_shifted: float
    gamma_value: float
    mu0: float | None
    regime: Regime
    admissible: bool
    lifespan_exp: float | None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mu": self.mu,
            "beta": self.beta,
            "p": self.p,
            "fujita": self.fujita,
            "strauss_shifted": self.strauss_shifted,
            "gamma_value": self.gamma_value,
            "mu0": self.mu0,
            "regime": str(self.regime),
            "admissible": self.admissible,
            "lifespan_exp": self.lifespan_exp,
        }


def report(n: int, mu: float, beta: float, p: float) -> ExponentReport:
    """Assemble the full exponent report for one parameter tuple."""
    if n < 1:
        raise DomainError(f"report requires n >= 1, got n={n}")
    if mu <= 0.0:
        raise DomainError(f"report requires mu > 0, got mu={mu}")
    if p <= 1.0:
        raise DomainError(f"report requires p > 1, got p={p}")
    g = gamma(p, n + 2.0 * mu)
    return ExponentReport(
        n=n,
        mu=mu,
        beta=beta,
        p=p,
        fujita=fujita_exponent(n),
        strauss_shifted=strauss_exponent(n + 2.0 * mu),
        gamma_value=g,
        mu0=mu_threshold(n) if n >= 2 else None,
        regime=classify_damping(beta, mu),
        admissible=admissible(n, mu, p),
        lifespan_exp=(-2.0 * p * (p - 1.0) / g) if g > 0.0 else None,
    )
