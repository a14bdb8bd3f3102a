"""Run every verification suite at a small window and print the text reports."""

from glinf_qva import SUITES, run_suite

SMALL = {"gl-jacobi": 1, "e-jacobi": 1, "pbw-confluence": 1, "prop5.2": 1, "thm3.10": 1}

for name in SUITES:
    report = run_suite(name, window=SMALL.get(name))
    print(report.to_text())
