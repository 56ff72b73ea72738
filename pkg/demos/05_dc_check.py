"""Scan the shipped survey for pairs that contradict or merely strain DC."""

from collections import Counter

from ramseykit import check_dc
from ramseykit.fileio import survey_kb

statuses = check_dc(survey_kb())
print(Counter(s.status for s in statuses))
for s in statuses:
    if s.status != "consistent":
        print(s)
