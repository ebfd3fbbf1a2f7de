"""Exception types shared across the package."""


class ResonanceAtlasError(Exception):
    """Base class for all package-specific errors."""


class DegeneratePolynomial(ResonanceAtlasError):
    """Leading coefficient vanishes; the quartic solver has nothing to do."""


class DecompositionFailure(ResonanceAtlasError):
    """A matrix expected to lie in the commuting-family span does not."""


class UnresolvedConfiguration(ResonanceAtlasError):
    """Spectrum contains a real or zero eigenvalue; no pair configuration applies."""


class RankAnomalous(ResonanceAtlasError):
    """Annihilator rank is neither 0 nor 2; the pair test is inconclusive."""


class AmbiguousStratum(ResonanceAtlasError):
    """Point matches two inconsistent strata within tolerance; shrink tol."""


class DomainError(ResonanceAtlasError):
    """Parameter outside its chart or rectangle, or a singular chart change."""
