#!/usr/bin/env python3
"""Ranking the bundled engineers dataset step by step.

Five candidates (E1..E5) scored on four weighted attributes; every cell
is an FNNN.  The pipeline normalizes per attribute, aggregates each row,
builds ideal values from the aggregates, and ranks by relative closeness.
Equivalent CLI run:  fnn-madm rank demos/engineers.csv
"""

import pathlib

from fnnmadm import PipelineConfig, run_pipeline
from fnnmadm.cli import parse_problem

HERE = pathlib.Path(__file__).parent
dm = parse_problem(str(HERE / "engineers.csv"))
print(f"problem: {dm.n_alternatives} alternatives x {dm.n_attributes} attributes, "
      f"weights {dm.weights}")

report = run_pipeline(dm, PipelineConfig(operator="fnnwa", metric="hamming", lam=1))

print("\nnormalized matrix (location, spread pairs):")
for label, row in zip(dm.alternatives, report.matrix.cells):
    pairs = "  ".join(f"({c.eta:.4f}, {c.xi:.4f})" for c in row)
    print(f"  {label}: {pairs}")

print("\nrow aggregates:")
for label, agg in zip(dm.alternatives, report.aggregates):
    print(f"  {label}: ({agg.eta:.4f}, {agg.xi:.4f}); "
          f"{agg.t:.4f}, {agg.i:.4f}, {agg.f:.4f}")

print(f"\npositive ideal: ({report.positive_ideal.eta:.4f}, "
      f"{report.positive_ideal.xi:.4f}); 1, 1, 0")
print(f"negative ideal: ({report.negative_ideal.eta:.4f}, "
      f"{report.negative_ideal.xi:.4f}); 0, 0, 1")

print("\ndistances and closeness:")
print("  alt     D+       D-       D*")
for k, label in enumerate(dm.alternatives):
    print(f"  {label}   {report.d_plus[k]:.4f}   {report.d_minus[k]:.4f}   "
          f"{report.closeness[k]:.4f}")

print(f"\nranking: {' >= '.join(report.ordered_labels())}")
print(f"recommended choice: {report.ordered_labels()[0]}")

print("\nsame data through the weighted geometric operator:")
geo = run_pipeline(dm, PipelineConfig(operator="fnnwg"))
print(f"ranking: {' >= '.join(geo.ordered_labels())}")
