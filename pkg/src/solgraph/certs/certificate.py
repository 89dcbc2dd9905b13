"""Certificate records and their canonical JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Any

FORMAT_VERSION = 1
KINDS = ("LB3", "LB4", "Base2", "InvolutionDist", "NormalizerParity", "SophieBound")


@dataclass(frozen=True)
class Certificate:
    kind: str
    spec: str
    witness: dict[str, Any] = field(default_factory=dict)
    prng_seed: int = 0
    verified: bool = False
    format_version: int = FORMAT_VERSION

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")

    def to_dict(self) -> dict:
        return {
            "format_version": self.format_version,
            "kind": self.kind,
            "spec": self.spec,
            "prng_seed": self.prng_seed,
            "verified": self.verified,
            "witness": self.witness,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        return cls(kind=d["kind"], spec=d["spec"], witness=d["witness"],
                   prng_seed=int(d["prng_seed"]), verified=bool(d["verified"]),
                   format_version=int(d["format_version"]))

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))

    def with_verified(self, flag: bool) -> "Certificate":
        return replace(self, verified=flag)


@dataclass(frozen=True)
class NotFound:
    """A search ran out of budget.  This is inconclusive, not a disproof."""
    kind: str
    spec: str
    attempts: int
    prng_seed: int

    def __bool__(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {"kind": self.kind, "spec": self.spec, "found": False,
                "attempts": self.attempts, "prng_seed": self.prng_seed}
