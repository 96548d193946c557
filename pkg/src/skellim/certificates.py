"""Limit certificates shared by the comma and limit-engine layers."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class LimitCertificate:
    """Apex, legs and the evidence that they form a limit.

    ``mode`` is ``"induction"``, ``"brute-force"``, ``"simplex"``, ``"pushout"``
    or ``"comma"``.  ``evidence`` holds the factorisation table (brute force),
    the per-stage trace (induction) or the lifting certificate of the comma
    comparison map.
    """

    apex: object
    legs: dict
    mode: str
    evidence: dict = field(default_factory=dict)
    verdict: str = "yes"
    exact: bool = True

    def to_json(self) -> dict:
        ev = {}
        for k, v in self.evidence.items():
            ev[k] = v.to_json() if hasattr(v, "to_json") else v
        return {
            "version": "limcert/1",
            "mode": self.mode,
            "verdict": self.verdict,
            "exactness": "exact" if self.exact else "bounded",
            "apex": self.apex,
            "legs": dict(self.legs),
            "evidence": ev,
        }
