"""Exact jet-level linearization toolkit.

Every operation is exposed through :func:`run`, which mirrors the command
line one-to-one: the verb name plus a JSON-serializable argument object in,
a versioned report object out.  Mathematical negative verdicts (obstructed,
not-linearizable, ...) are successful reports; operational failures raise
``ValueError`` (malformed input) or ``RuntimeError`` (domain errors).
"""

import json

try:
    from ._core import __version__, run_json, verbs as _verbs
except ImportError:  # development layout: extension built outside the package
    from _core import __version__, run_json, verbs as _verbs

__all__ = ["__version__", "run", "run_raw", "verbs"]


def verbs():
    """Supported verb names, in display order."""
    return list(_verbs())


def run_raw(verb, args):
    """Run a verb on an explicit argument dict; returns the report dict."""
    return json.loads(run_json(verb, json.dumps(args)))


def run(verb, **args):
    """Run a verb with keyword arguments; returns the report dict.

    >>> report = run("fixtures", seed=0)
    >>> report["result"]["count"] > 0
    True
    """
    return run_raw(verb, args)
