"""
Command line
============

The same computations are available from the ``heisenberg-voa`` command,
which prints a text or JSON report.  Here it is driven in-process.
"""

from heisenberg_voa.cli import run

run(["dims", "--rank", "2", "--max-weight", "6"])
run(["radical", "h1(-2)|0>", "--rank", "1"])
run(["degree", "h1(-3)|0>", "--format", "json"])
run(["commutant", "--rank", "2", "--bosons", "1", "--max-weight", "2"])
code = run(["verify", "--suite", "modes", "--trials", "5", "--format", "json"])
print("exit code", code)
