"""Structured verification reports.

Every verifier in the package returns a Report: a list of named checks, each
carrying a stable anchor string (the mathematical identity being checked), a
boolean, and enough detail to replay a failure.  Reports serialize to JSON
deterministically; elapsed times are carried but excluded from the content
hash so identical runs hash identically.
"""

from __future__ import annotations

import hashlib
import json

from .errors import GateFailure


class Report:
    def __init__(self, suite):
        self.suite = suite
        self.checks = []

    def add(self, name, anchor, ok, **details):
        self.checks.append({
            "name": name,
            "anchor": anchor,
            "ok": bool(ok),
            "details": {k: v for k, v in details.items() if v is not None},
        })
        return ok

    def extend(self, other):
        self.checks.extend(other.checks)
        return self

    @property
    def ok(self):
        return all(c["ok"] for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c["ok"]]

    def require(self, message=None):
        if not self.ok:
            names = ", ".join(c["name"] for c in self.failures())
            raise GateFailure(message or "%s gate failed: %s" % (self.suite, names),
                              report=self)
        return self

    def first_failure(self):
        fails = self.failures()
        return fails[0] if fails else None

    def to_dict(self):
        return {"suite": self.suite,
                "ok": self.ok,
                "counts": {"total": len(self.checks),
                           "failed": len(self.failures())},
                "checks": self.checks}

    def summary(self):
        lines = ["[%s] %s" % ("PASS" if c["ok"] else "FAIL", c["name"])
                 for c in self.checks]
        return "\n".join(lines)

    def __repr__(self):
        return "Report(%s: %d checks, %s)" % (
            self.suite, len(self.checks), "ok" if self.ok else "FAILED")


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def content_hash(obj, exclude_keys=("elapsed_ms", "timestamp")):
    def strip(x):
        if isinstance(x, dict):
            return {k: strip(v) for k, v in sorted(x.items())
                    if k not in exclude_keys}
        if isinstance(x, list):
            return [strip(v) for v in x]
        return x
    return hashlib.sha256(canonical_json(strip(obj)).encode()).hexdigest()
