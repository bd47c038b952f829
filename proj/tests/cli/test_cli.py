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

import json
import os
import subprocess

import pytest

BIN = os.environ.get("GL3REP_BIN", "gl3rep")


def run(*args, check=True):
    proc = subprocess.run([BIN, "--quiet", *args], capture_output=True, text=True, timeout=600)
    if check and proc.returncode != 0:
        raise AssertionError(f"{args} exited {proc.returncode}: {proc.stderr}")
    return proc


def run_json(*args):
    return json.loads(run(*args).stdout)


def test_version():
    assert run("--version").stdout.strip()


def test_classes_and_header():
    out = run_json("--q", "3", "classes")
    assert out["q"] == 3
    assert out["fingerprint"].startswith("p=3;n=1;")
    assert out["tool_version"]


def test_verify_table_degrees():
    out = run_json("--q", "2", "verify", "table")
    assert out["ok"]
    assert "degrees=1,3,3,6,7,8" in out["reports"][0]["notes"]


def test_coefficients():
    assert run_json("conjecture", "coeffs", "--n", "4")["coefficients"] == [1, 2, 2, 1]


@pytest.mark.parametrize("args", [
    ["--q", "6", "classes"],
    ["--q", "3", "induce", "--spec", "Q:1"],
    ["--q", "3", "induce", "--spec", '{"kind": "Ti"'],
    ["--q", "3", "tensor", "--left", "cusp:0:1", "--right", "cusp:1"],
    ["--q", "3", "conjecture", "check", "--n", "4"],
])
def test_bad_input_exits_2(args):
    assert run(*args, check=False).returncode == 2


def test_failing_check_exits_1():
    assert run("--q", "4", "verify", "section4", check=False).returncode == 1


def test_json_and_string_specs_agree():
    a = run_json("--q", "3", "induce", "--spec", "Tm:1:0")
    b = run_json("--q", "3", "induce", "--spec", '{"kind": "Tm", "chars": [1, 0]}')
    assert a["rows"] == b["rows"]


def test_seed_determinism():
    args = ["--q", "5", "--seed", "7", "verify", "theorem1", "--case", "2", "--sweep", "random"]
    a, b = run_json(*args), run_json(*args)
    assert a == b
    assert "seed=7" in a["reports"][0]["sweep"]


def test_cache_round_trip(tmp_path):
    cache = str(tmp_path / "cache")
    args = ["--q", "3", "--cache-dir", cache, "induce", "--spec", "ZN1:1:1", "--decompose"]
    first = run(*args).stdout
    files = sorted(os.listdir(cache))
    assert any(f.startswith("induce-q3-") for f in files)
    assert any(f.startswith("sweep-q3-") for f in files)
    for name in files:
        meta = json.load(open(os.path.join(cache, name)))
        assert meta["schema_version"] == 1
        assert meta["tool_version"]
        assert meta["fingerprint"].startswith("p=3;")
    assert run(*args).stdout == first

    for name in files:
        with open(os.path.join(cache, name), "w") as fh:
            fh.write("{corrupt")
    assert run(*args).stdout == first


def test_jobs_do_not_change_results():
    a = run_json("--q", "3", "--jobs", "1", "verify", "section4")
    b = run_json("--q", "3", "--jobs", "3", "verify", "section4")
    assert a == b


def test_csv_output():
    out = run("--q", "2", "--format", "csv", "classes").stdout
    assert len(out.strip().splitlines()) == 7
