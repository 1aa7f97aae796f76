"""Smoke test for the Python bindings.

Build and install them first:

    pip install maturin
    cd crates/py && maturin build --release -o dist && pip install dist/*.whl

Then run `python python/smoke_test.py` or `pytest python/`.
"""

import json
from pathlib import Path

import coring_lab

DATA = Path(__file__).resolve().parent.parent / "crates" / "core" / "tests" / "data"


def report(text):
    r = json.loads(text)
    assert r["schema"] == coring_lab.SCHEMA == "coring-lab/1"
    return r


def test_demo_trig():
    r = report(coring_lab.demo(["trig"]))
    assert r["passed"], r


def test_demo_is_deterministic():
    assert coring_lab.demo(["all"]) == coring_lab.demo(["all"])


def test_aomega_parameters_are_strings():
    r = report(coring_lab.demo(["aomega"], alpha="-1"))
    assert r["instances"][0]["parameters"]["alpha"] == ["-1"]


def test_classify_counts():
    for n, count in [(1, 2), (2, 4), (3, 3)]:
        r = report(coring_lab.classify(n))
        assert r["passed"]
        assert len(r["instances"][0]["classes"]) == count


def test_correspondence():
    assert report(coring_lab.correspondence(n=2))["passed"]


def test_errors_come_back_as_reports():
    r = report(coring_lab.demo(["nope"]))
    assert not r["passed"]
    assert r["error"]["kind"] == "UnknownInstance"
    r = report(coring_lab.check("{"))
    assert r["error"]["kind"] == "Schema" and r["error"]["pointer"] == ""


def test_check_file():
    r = report(coring_lab.check((DATA / "quaternion_setting.json").read_text()))
    coideals = r["instances"][0]["coideals"]
    assert coideals[0]["passed"]
    assert coideals[1]["error"]["index"] == 0
    assert coring_lab.render_text(json.dumps(r)).endswith("result: FAIL\n")


if __name__ == "__main__":
    for name, f in sorted(globals().items()):
        if name.startswith("test_") and callable(f):
            f()
            print("ok", name)
