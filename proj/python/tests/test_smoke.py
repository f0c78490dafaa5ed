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

import json
import os
import pathlib

import pytest

import qsuper

DATA = pathlib.Path(os.environ.get("QSUPER_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


def ex(name):
    return json.loads((DATA / name).read_text())


def test_validate_modes():
    assert qsuper.validate(ex("ex2.json"), "strict")["d"] == [1, 1]
    assert not qsuper.validate(ex("ex1.json"), "strict")["ok"]
    assert qsuper.validate(ex("ex1.json"))["ok"]


def test_two_vertex_chain():
    s = qsuper.load(ex("ex2.json"))
    for v in (1, 2, 1):
        s = s.mutate(v)
    assert s.variables()[0] == "x2^{-1} (1 + q^{-1/2} x1)"
    assert s.variables("latex")[0].startswith("x_{2}^{-1}")
    assert s.frozen == [False, False, True, True]


def test_one_vertex_chain():
    s = qsuper.load(ex("ex1.json"))
    s = s.mutate(1).mutate(1)
    assert s.variables()[0] == "x1 (1 - q^{-1} ξ1 ξ2)"


def test_state_round_trip():
    s = qsuper.load(ex("ex2.json")).mutate(1).mutate(2)
    text = s.to_json()
    again = qsuper.load(text)
    assert again == s
    assert again.to_json() == text


def test_errors():
    s = qsuper.load(ex("ex2.json"))
    with pytest.raises(qsuper.MutationOnFrozen):
        s.mutate(3)
    with pytest.raises(qsuper.MalformedInput):
        s.mutate(7)
    with pytest.raises(qsuper.Incompatible):
        qsuper.load(ex("ex1.json"), "strict")
    with pytest.raises(qsuper.MalformedInput):
        qsuper.load("{")
    assert issubclass(qsuper.NotAllowed, qsuper.Error)


def test_laurent_and_survey():
    cert = qsuper.laurent_check(qsuper.load(ex("ex2.json")), [1, 2, 1, 2, 1, 2])
    assert cert["overall"] and len(cert["verdicts"]) == 6
    survey = qsuper.allowedness_survey(2, 1, 1)
    assert survey["checks"] == 64 and survey["quivers"] == 34
