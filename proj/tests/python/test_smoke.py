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

import pytest

import gl3rep


def test_version_and_fingerprint():
    assert gl3rep.__version__
    assert gl3rep.fingerprint(2).startswith("p=2;n=1;")


def test_classes():
    for q, count, order in [(2, 6, 168), (3, 24, 11232)]:
        cls = gl3rep.classes(q)
        assert len(cls) == count
        assert sum(c["size"] for c in cls) == order


def test_degrees_at_q2():
    assert sorted(c["degree"] for c in gl3rep.table(2)) == [1, 3, 3, 6, 7, 8]


def test_induce_and_tensor():
    ind = gl3rep.induce(3, "Ta:1")
    assert ind["values"][0] == 11232 // 26
    assert ind["decomposition"]["genuine"]
    assert all(m > 0 for m in ind["decomposition"]["multiplicities"].values())
    dec = gl3rep.tensor(3, "cusp:1", "cusp:2")
    assert dec["degree"] == 256


def test_verify():
    assert gl3rep.verify(2, "table")["ok"]
    assert gl3rep.verify(3, "theorem1", "5")["ok"]


def test_conjecture():
    assert gl3rep.coefficients(4) == [1, 2, 2, 1]
    res = gl3rep.check_family(3, [[[]], [[[1, 2]]]])
    assert res["degree_ok"]


def test_errors():
    with pytest.raises(ValueError):
        gl3rep.fingerprint(6)
    with pytest.raises(ValueError):
        gl3rep.induce(3, "Q:1")
