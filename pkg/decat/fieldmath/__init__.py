"""Arithmetic for rational functions in the equivariant parameters x_1..x_N, t.

The K-theory model in :mod:`decat.ktheory` only needs a handful of operations on
rational functions: ring arithmetic, an exact zero test and matrix inversion. This
module puts those behind a small :class:`~decat.fieldmath.backend.Backend` interface
with two included implementations:

* ``"evaluation"`` (default): exact rational evaluation at a seeded set of points.
  Fast, and reproducible for a given seed.
* ``"symbolic"``: sympy expressions. Slow, but removes any doubt on small cases.

The active backend is selected on the backend manager:
>>> from decat.fieldmath import backend_manager
>>> backend_manager.active_backend = "symbolic"
>>> backend_manager.active_backend.name
'symbolic'

Options are forwarded to the backend, and a context manager switches temporarily:
>>> with backend_manager.using_backend("evaluation", seed=7, num_points=6):
...     backend_manager.active_backend.num_points
6
>>> backend_manager.active_backend = "evaluation"

Note that setting the backend sets it globally and is not thread-safe.
"""

import contextlib
from typing import Callable, Dict, Optional, Tuple

from decat.fieldmath.backend import Backend, Variables
from decat.fieldmath.included_backends import default_backend, included_backends

_registered_backends: Dict[str, Callable[..., Backend]] = dict(included_backends)


def register_backend(name: str, get_backend: Callable[..., Backend]):
    """Register a new Backend.

    Args:
      name: The unique name of the backend, e.g. "my_new_backend".
      get_backend: A function that takes the backend options as keyword arguments and
        returns the Backend. It typically also dynamically loads the needed modules.
    """
    if name in _registered_backends:
        raise ValueError(
            f'The name of the backend must be unique: A backend with the name "{name}" has already been registered.'
        )
    _registered_backends[name] = get_backend


BackendKey = Tuple[str, Tuple[Tuple[str, object], ...]]


class BackendManager:
    _active_backend: Optional[BackendKey]
    _backends_cache: Dict[BackendKey, Backend] = {}

    def __init__(self, initial_active_backend: Optional[str] = None, **options):
        self._active_backend = (
            _key(initial_active_backend, options) if initial_active_backend else None
        )

    @property
    def active_backend(self) -> Backend:
        if self._active_backend is None:
            self._active_backend = _key(default_backend, {})

        backend = self._backends_cache.get(self._active_backend, None)
        if backend is None:
            name, options = self._active_backend
            if name not in _registered_backends:
                raise ValueError(
                    f'Unknown backend "{name}". Registered backends: {sorted(_registered_backends)}.'
                )
            backend = _registered_backends[name](**dict(options))
            self._backends_cache[self._active_backend] = backend

        return backend

    @active_backend.setter
    def active_backend(self, new_backend: str):
        self.set_backend(new_backend)

    def set_backend(self, name: str, **options):
        self._active_backend = _key(name, options)
        self.active_backend  # Eagerly instantiate backend

    @contextlib.contextmanager
    def using_backend(self, new_backend: str, **options):
        prev_backend = self._active_backend
        self._active_backend = _key(new_backend, options)
        try:
            yield self.active_backend
        finally:
            self._active_backend = prev_backend


def _key(name: str, options: dict) -> BackendKey:
    return name, tuple(sorted(options.items()))


def proxy_backend(backend_manager: BackendManager) -> Backend:
    """Return a proxy-backend that forwards all calls to the active backend."""

    class ProxyBackend(Backend):
        def __getattribute__(self, attr):
            return getattr(backend_manager.active_backend, attr)

    return ProxyBackend()


backend_manager = BackendManager()
fields = proxy_backend(backend_manager)

__all__ = [
    "Backend",
    "BackendManager",
    "Variables",
    "backend_manager",
    "fields",
    "proxy_backend",
    "register_backend",
]
