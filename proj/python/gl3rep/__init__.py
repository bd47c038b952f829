# Copyright 2026 The gl3rep Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact character theory of GL(3, F_q).

Every call returns plain Python data decoded from the engine's JSON output.
"""

import json

from . import _gl3rep
from ._gl3rep import ArithmeticError, FieldError, __version__

__all__ = [
    "ArithmeticError",
    "FieldError",
    "__version__",
    "check_family",
    "classes",
    "coefficients",
    "fingerprint",
    "induce",
    "table",
    "tensor",
    "verify",
]


def fingerprint(q):
    return _gl3rep.fingerprint(q)


def classes(q):
    return json.loads(_gl3rep.classes(q))


def table(q):
    return json.loads(_gl3rep.table(q))


def induce(q, spec):
    """Induced character for a subgroup spec such as "Tm:1:0" or "ZN1:0:1"."""
    return json.loads(_gl3rep.induce(q, spec))


def tensor(q, left, right):
    """Decomposition of the product of two irreducibles, e.g. "cusp:1"."""
    return json.loads(_gl3rep.tensor(q, left, right))


def verify(q, what, which="", seed=20240601, jobs=1):
    return json.loads(_gl3rep.verify(q, what, which, seed, jobs))


def coefficients(n):
    return list(_gl3rep.coefficients(n))


def check_family(q, family):
    if not isinstance(family, str):
        family = json.dumps(family)
    return json.loads(_gl3rep.check_family(q, family))
