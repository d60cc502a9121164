"""Python front end for the fdq toolkit.

Every helper goes through the same code paths as the fdq command line tool
and returns parsed JSON.
"""

import json
import os
from pathlib import Path

from . import _core
from ._core import InputError, StructureError, semisimple_evaluation, structure_constants

__all__ = [
    "CliError",
    "InputError",
    "StructureError",
    "cases_dir",
    "constants",
    "derive",
    "gamma_gm",
    "list_cases",
    "motive",
    "parabolic",
    "roots",
    "run",
    "semisimple_evaluation",
    "structure_constants",
    "verify",
]


class CliError(RuntimeError):
    def __init__(self, code, message):
        super().__init__(message.strip())
        self.code = code


def cases_dir():
    """Bundled case directory: FDQ_CASES_DIR, then the installed copy, then the source tree."""
    env = os.environ.get("FDQ_CASES_DIR")
    if env:
        return Path(env)
    here = Path(__file__).resolve().parent
    for candidate in (here / "cases", here.parent.parent / "cases"):
        if candidate.is_dir():
            return candidate
    return here / "cases"


def run(*args):
    """Run a CLI command; returns (exit code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])


def _json(*args, allow_fail=False):
    code, out, err = run("--format", "json", "--cases-dir", cases_dir(), *args)
    if code == 2 or (code == 1 and not allow_fail):
        raise CliError(code, err or out)
    return json.loads(out)


def roots(group):
    return _json("roots", group)


def parabolic(group, remove):
    return _json("parabolic", group, "--remove", remove)


def constants(target, remove=None):
    extra = ["--remove", remove] if remove is not None else []
    return _json("constants", target, *extra)


def motive(group):
    return _json("motive", group)


def gamma_gm(group, remove):
    return _json("gamma-gm", group, "--remove", remove)


def derive(target, remove=None, j=None):
    extra = []
    if remove is not None:
        extra += ["--remove", remove]
    if j is not None:
        extra += ["--j", j]
    return _json("derive", target, *extra, allow_fail=True)


def verify(*names):
    """Verify the named cases, or all bundled cases when none are given."""
    return _json("verify-case", *(names or ["--all"]), allow_fail=True)


def list_cases():
    return _json("list-cases")
