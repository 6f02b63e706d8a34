"""Exception types shared across modules."""


class DomainError(ValueError):
    """An input lies outside the domain where a formula is defined."""


class DegenerateDensityError(DomainError):
    """sigma^2 - omega^2 vanishes (or is too small) where it must not."""


class SupportError(DomainError):
    """A denominator density (sigma or omega) vanishes at the point."""


class InfeasibleError(DomainError):
    """An algebraic solve has no real solution."""
