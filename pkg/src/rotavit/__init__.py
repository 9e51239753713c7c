"""Mini vision transformer with a rotation pretext head for generalised
zero-shot recognition, built on a self-contained float64 autodiff core.

Submodules are imported lazily so that the CLI can pin BLAS thread counts
before numpy is first loaded.
"""

__version__ = "0.1.0"

_SUBMODULES = (
    "tensor",
    "optim",
    "rng",
    "kernels",
    "images",
    "data",
    "model",
    "losses",
    "train",
    "eval",
    "viz",
    "errors",
)


def __getattr__(name):
    if name in _SUBMODULES:
        import importlib

        module = importlib.import_module(f".{name}", __name__)
        globals()[name] = module
        return module
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


def __dir__():
    return sorted(list(globals()) + list(_SUBMODULES))
