"""2D contact-interaction laboratory: scattering, bound states, lattice and few-body probes."""

try:
    from ._contact2d import *  # noqa: F401,F403
    from ._contact2d import __doc__ as _core_doc  # noqa: F401
except ImportError:  # in-tree builds put the extension next to the package
    from _contact2d import *  # noqa: F401,F403

__version__ = "1.0.0"
