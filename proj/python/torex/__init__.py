"""Flat complex torus extremality toolkit.

Thin Python layer over the C++ core: exact (rational) feasibility checks for
the eigenvalue-extremality systems of flat tori, with certificates, spectra,
identity suites, and deformation derivative checks.
"""

import json as _json

try:
    from ._core import (
        AmbiguousVerdict,
        DimensionError,
        ParameterError,
        SingularBasisError,
        TorexError,
        TorexParseError,
        UnknownEntryError,
        Torus as _Torus,
        catalog_json as _catalog_json,
        catalog_names,
    )
except ImportError:  # CMake dev builds leave _core.so next to the package
    from _core import (
        AmbiguousVerdict,
        DimensionError,
        ParameterError,
        SingularBasisError,
        TorexError,
        TorexParseError,
        UnknownEntryError,
        Torus as _Torus,
        catalog_json as _catalog_json,
        catalog_names,
    )

__all__ = [
    "Torus",
    "catalog_names",
    "catalog",
    "TorexError",
    "TorexParseError",
    "UnknownEntryError",
    "ParameterError",
    "DimensionError",
    "SingularBasisError",
    "AmbiguousVerdict",
]


def catalog(spec):
    """The catalog lattice `spec` in its JSON file form, as a dict."""
    return _json.loads(_catalog_json(spec))


class Torus:
    """A flat torus ready for analysis.

    Construct with :meth:`from_catalog` (e.g. ``"checkerboard(4)"``) or
    :meth:`from_file` (a lattice JSON file). Methods return plain dicts
    decoded from the core's JSON output; rationals arrive as ``"p/q"``
    strings so nothing is rounded.
    """

    def __init__(self, core):
        self._core = core

    @classmethod
    def from_catalog(cls, spec, tol=1e-9):
        return cls(_Torus.from_catalog(spec, tol))

    @classmethod
    def from_file(cls, path, tol=1e-9):
        return cls(_Torus.from_file(str(path), tol))

    @property
    def label(self):
        return self._core.label

    @property
    def exact(self):
        return self._core.exact

    @property
    def complex_structure(self):
        return self._core.complex_structure

    @property
    def notes(self):
        return list(self._core.notes)

    def dual(self):
        """Dual lattice basis (columns are generators)."""
        return _json.loads(self._core.dual_json())

    def spectrum(self, levels=3):
        """The smallest eigenvalue levels with representatives."""
        return _json.loads(self._core.spectrum_json(levels))

    def check_kahler(self, k=1, oracle=True):
        """Extremality feasibility at the k-th eigenvalue, with certificate."""
        return _json.loads(self._core.check_kahler_json(k, oracle))

    def check_immersion(self, oracle=True):
        """First-eigenfunction immersion feasibility, with certificate."""
        return _json.loads(self._core.check_immersion_json(oracle))

    def verify_identities(self, combos=5):
        """Eigenfunction identity suite on the first level."""
        return _json.loads(self._core.verify_identities_json(combos))

    def derivative_check(self, alpha, k=1, step=1e-4):
        """One-sided eigenvalue derivatives along a deformation direction.

        ``alpha`` is a dict (or JSON text) in the deformation file format:
        ``{"n": ..., "hermitian": [[...], ...]}``.
        """
        if not isinstance(alpha, str):
            alpha = _json.dumps(alpha)
        return _json.loads(self._core.derivative_check_json(alpha, k, step))

    def report(self, k=1, levels=1, combos=5, oracle=True, identities=True):
        """Full analysis report as a dict."""
        return _json.loads(
            self._core.report_json(k, levels, combos, oracle, identities)
        )

    def report_text(self, k=1, levels=1, combos=5, oracle=True, identities=True):
        """Full analysis report as human-readable text."""
        return self._core.report_text(k, levels, combos, oracle, identities)

    def __repr__(self):
        return repr(self._core).replace("torex.Torus", "Torus", 1)
