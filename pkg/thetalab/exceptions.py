"""Exception hierarchy; each family maps to a CLI exit code."""


class ThetaLabError(Exception):
    """Base class for all thetalab errors."""
    
    exit_code = 1


class InputError(ThetaLabError, ValueError):
    """Invalid instance parameters or malformed command-line input."""
    
    exit_code = 2


class SchemeError(InputError):
    """The Johnson scheme is only defined here for n >= 2k."""


class FormulaDomainError(ThetaLabError, ValueError):
    """A closed form is undefined at this finite n (zero denominator, etc.)."""
    
    exit_code = 2


class SingularMatrixError(ThetaLabError, ArithmeticError):
    """The matrix P is singular at this n."""
    
    exit_code = 2


class ResourceCapError(ThetaLabError):
    """An explicit graph would exceed the configured vertex cap."""
    
    exit_code = 4


class IdentityCheckError(ThetaLabError):
    """An exact identity or the alpha <= sigma <= theta sandwich failed."""
    
    exit_code = 3


class SolverConsistencyError(ThetaLabError):
    """The exact LP reported UNBOUNDED/INFEASIBLE or its certificate failed."""
    
    exit_code = 3
