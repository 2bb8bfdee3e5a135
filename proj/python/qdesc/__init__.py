"""Python bindings for the qdesc library; results mirror the CLI's JSON."""

from ._qdesc import *  # noqa: F401,F403
