# Copyright 2026 The qsuper Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact mutation of quantum super-seeds.

Thin wrapper over the compiled core: JSON documents go in as dicts or text
and structured results come back as dicts.
"""

import json as _json

from ._core import (
    Error,
    Incompatible,
    MalformedInput,
    MutationOnFrozen,
    NotAllowed,
    NotDivisible,
    Seed as _Seed,
)
from . import _core

__all__ = [
    "Error",
    "Incompatible",
    "MalformedInput",
    "MutationOnFrozen",
    "NotAllowed",
    "NotDivisible",
    "Seed",
    "allowedness_survey",
    "laurent_check",
    "load",
    "validate",
]

Seed = _Seed


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def load(doc, mode=""):
    """Seed from an input pair ({"quiver", "lambda", "mode"?}) or a saved state."""
    return _Seed(_text(doc), mode)


def validate(doc, mode=""):
    """Compatibility report for an input pair."""
    return _json.loads(_core.validate(_text(doc), mode))


def laurent_check(seed, sequence):
    """Certificate for a sequence of 1-based vertices."""
    return _json.loads(_core.laurent_check(seed, list(sequence)))


def allowedness_survey(max_n=3, max_m=2, max_multiplicity=2):
    """Summary of the definition-versus-lemma comparison on a quiver family."""
    return _json.loads(_core.allowedness_survey(max_n, max_m, max_multiplicity))
