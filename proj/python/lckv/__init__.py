"""Numerical verification workbench for locally conformally Kahler structures.

Thin re-export of the compiled module; see the README for the identity
registry and the report schema.
"""

try:
    from ._lckv import (  # type: ignore[attr-defined]
        DomainViolation,
        NumericalDegeneracy,
        StructuralError,
        UnsupportedError,
        christoffel_at,
        integral_checks,
        integrate,
        lee_form_at,
        list_checks,
        run_suite,
        trace_omega_omega,
    )
except ImportError:  # in-build layout: the module sits next to the package
    from _lckv import (  # type: ignore[no-redef]
        DomainViolation,
        NumericalDegeneracy,
        StructuralError,
        UnsupportedError,
        christoffel_at,
        integral_checks,
        integrate,
        lee_form_at,
        list_checks,
        run_suite,
        trace_omega_omega,
    )

__all__ = [
    "DomainViolation",
    "NumericalDegeneracy",
    "StructuralError",
    "UnsupportedError",
    "christoffel_at",
    "integral_checks",
    "integrate",
    "lee_form_at",
    "list_checks",
    "run_suite",
    "trace_omega_omega",
]
