import pandas as pd

from johnsonfilt.core.formatting import _display


class VerificationReport:
    """
    outcome of a verification sweep

    Failures are recorded as data, a report is truthy iff nothing failed.

    Parameters
    ----------
    name : str
        Name of the verification, e.g. ``"mccool"``.
    checked : int
        Number of checked items, counted in ``unit``.
    unit : str
        What ``checked`` counts, e.g. ``"relation families"``.
    cases : int, optional
        Number of individual cases (index tuples, samples) that were compared.
    failures : list of tuple of str, optional
        Triples ``(check, case, detail)``.
    notes : list of str, optional
        Free-form remarks, e.g. about degenerate (vacuous) cases.
    """

    def __init__(self, name, checked, unit, cases=None, failures=(), notes=()):

        self.name = name
        self.checked = checked
        self.unit = unit
        self.cases = cases
        self.failures = list(failures)
        self.notes = list(notes)

    @property
    def ok(self):
        return not self.failures

    def __bool__(self):
        return self.ok

    def summary(self):
        status = "OK" if self.ok else "FAILED"
        return f"{status}: {self.checked} {self.unit}, {len(self.failures)} failures"

    def to_dataframe(self):
        return pd.DataFrame(self.failures, columns=["check", "case", "detail"])

    def to_dict(self):
        return {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "unit": self.unit,
            "cases": self.cases,
            "failures": [
                {"check": check, "case": case, "detail": detail}
                for check, case, detail in self.failures
            ],
            "notes": self.notes,
        }

    def __repr__(self):

        metadata = {"check": self.name, "result": self.summary()}
        if self.cases is not None:
            metadata["cases"] = self.cases
        if self.notes:
            metadata["notes"] = "; ".join(self.notes)

        return _display(self, self.to_dataframe(), metadata=metadata)
