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

"""Exit-code and output contract of the setcat CLI.

Codes: 0 pass, 1 check failure, 2 usage/parse error, 3 size cap exceeded.
"""

import subprocess
import sys
import tempfile

CLI = sys.argv[1]
failures = []


def run(args, stdin=None):
    return subprocess.run([CLI] + args, capture_output=True, text=True, input=stdin)


def expect(args, code, stdout_contains=None, stdin=None):
    result = run(args, stdin=stdin)
    if result.returncode != code:
        failures.append(f"{args}: exit {result.returncode}, expected {code}\n"
                        f"stdout: {result.stdout}\nstderr: {result.stderr}")
        return
    if stdout_contains is not None and stdout_contains not in result.stdout:
        failures.append(f"{args}: stdout missing {stdout_contains!r}: {result.stdout!r}")


expect(["eval", "{{},{}}"], 0, "{{}}\n")
expect(["eval", "succ({})"], 0)
expect(["eval", "#a", "--atoms", "a b"], 0, "#a\n")
expect(["eval", "#b", "--atoms", "a b"], 0, "#a\n")  # canonical class representative

expect(["check", "{} in {{}}"], 0, "true")
expect(["check", "{} in {}"], 1, "false")
expect(["check", "#a = #b", "--atoms", "a b | c"], 0, "true")
expect(["check", "#a = #c", "--atoms", "a b | c"], 1, "false")

# parse and usage errors
expect(["check", "all x . true"], 2)
expect(["eval", "@@"], 2)
expect(["eval", "#zzz"], 2)  # unknown atom
expect(["eval", "{"], 2)
expect(["nosuchcommand"], 2)

# size caps
expect(["pullbacks", "--preset", "discrete2", "--depth", "2"], 3)

# suites
expect(["axioms", "--rank", "2", "--breadth", "2", "--atoms", "a b | c"], 0,
       "summary: 12/12")
expect(["pullbacks", "--preset", "unit", "--depth", "1"], 0, "summary: 2/2")

with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
    f.write("{}\n{{}}\n{{},{{}}}\n")
    slice_path = f.name
expect(["category", "--slice", slice_path], 0, "summary: 10/10")
expect(["iso", "--slice", slice_path], 0, "summary: 10/10")

# repl: let binding, check, eval, quit
result = run(["repl"], stdin="let x = {{},{}}\nx\ncheck x = {{}}\nquit\n")
if result.returncode != 0:
    failures.append(f"repl exit {result.returncode}: {result.stderr}")
elif result.stdout.count("{{}}") < 2 or "true" not in result.stdout:
    failures.append(f"repl output unexpected: {result.stdout!r}")

if failures:
    print("\n".join(failures))
    sys.exit(1)
print("cli contract: all checks passed")
