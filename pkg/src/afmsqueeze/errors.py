"""Exception hierarchy with CLI exit-code semantics.

ValidationError maps to exit code 2 (bad inputs or configuration),
PhysicsError and its subclasses to exit code 3 (physically out-of-domain
request), and plain OSError from the writers to exit code 4.
"""

from __future__ import annotations


class AfmSqueezeError(Exception):
    """Base class for package errors.

    The optional ``module`` tag names the module that raised, so the CLI
    can prefix messages without inspecting tracebacks.
    """

    def __init__(self, message: str, *, module: str | None = None):
        super().__init__(message)
        self.module = module


class ValidationError(AfmSqueezeError):
    """Inputs, parameters, or configuration outside the documented domain."""


class InsufficientDataError(ValidationError):
    """A trajectory or series is too short for the requested analysis."""


class PhysicsError(AfmSqueezeError):
    """Request is well-formed but physically out of domain."""


class SnapInError(PhysicsError):
    """No stable oscillation exists: the probe collapses onto the surface."""


class AttractiveRegimeError(PhysicsError):
    """The tip-sample gap left the purely attractive branch of the force."""
