"""Structure functions of the elliptic algebra A_{q,p}(sl(2)_c)."""

import json

from ._core import *  # noqa: F401,F403
from ._core import __version__, _evaluate_json, _run_suite_json


def run_suite(config):
    """Run an identity suite. `config` is a dict (or JSON string) in the CLI config format."""
    if not isinstance(config, str):
        config = json.dumps(config)
    return json.loads(_run_suite_json(config))


def evaluate(name, policy=None, **kwargs):
    """Evaluate a registered function by name, arguments as keywords."""
    args = {k: _format(v) for k, v in kwargs.items()}
    if policy is None:
        policy = TruncationPolicy()  # noqa: F405
    return json.loads(_evaluate_json(name, args, policy))


def _format(v):
    if isinstance(v, (list, tuple)):
        return ",".join(_format(e) for e in v)
    if isinstance(v, complex):
        if v.imag == 0:
            return repr(v.real)
        sign = "-" if v.imag < 0 else "+"
        return f"{v.real!r}{sign}{abs(v.imag)!r}i"
    return repr(v) if isinstance(v, float) else str(v)
