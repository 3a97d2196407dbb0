# Copyright 2026 The setcat Authors
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

import pytest

import pysetcat


def test_eval_canonical_form():
    u = pysetcat.Universe()
    assert u.eval("{{},{}}") == "{{}}"
    assert u.eval("succ({})") == "{{},{{}}}"
    assert u.eval("union({{{}},{{{}}}})") == "{{},{{}}}"


def test_atoms_and_equality():
    u = pysetcat.Universe("a b | c")
    assert u.eval("#b") == "#a"
    assert u.equal("#a", "#b")
    assert not u.equal("#a", "#c")
    assert u.member("#c", "atoms")
    assert u.rank("{{{}}}") == 2
    assert u.rank("#a") == 0


def test_check_formulas():
    u = pysetcat.Universe()
    assert u.check("all x in {{}} . x = {}")
    assert not u.check("ex y in {} . true")
    assert u.check("funcs({},{}) = {{}}")


def test_errors_surface():
    u = pysetcat.Universe()
    with pytest.raises(pysetcat.SetcatError):
        u.eval("all x . true")  # not a term at all
    with pytest.raises(pysetcat.SetcatError):
        u.eval("#missing")


def test_axiom_suite():
    u = pysetcat.Universe("a b | c")
    passed, report = u.axiom_suite(rank=2, breadth=2)
    assert passed, report
    assert "C3" in report


def test_category_and_iso():
    u = pysetcat.Universe()
    slice_texts = ["{}", "{{}}", "{{},{{}}}"]
    passed, report = u.category_report(slice_texts)
    assert passed, report
    passed, report = u.iso_report(slice_texts)
    assert passed, report


def test_pullbacks():
    assert set(pysetcat.presets()) >= {"unit", "discrete2", "codiscrete2", "pair1"}
    passed, report = pysetcat.pullback_report("discrete2", 1)
    assert passed, report
