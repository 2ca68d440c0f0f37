"""Runtime constants.

Every unspecified constant from the underlying theory lives here, is
validated against the inequalities the proofs require, and is echoed
verbatim into the provenance section of every emitted witness so that a
certificate is always auditable against the configuration that produced it.

Two presets are provided:

* ``Constants.default()`` -- the literal textbook values.  With these the
  separator machinery only engages on graphs with hundreds of vertices;
  smaller inputs are answered by trivial single-bag decompositions.
* ``Constants.desk()`` -- a small-instance configuration used by the test
  suite.  It keeps every required inequality intact while scaling the
  thresholds down far enough that graphs with 10..200 vertices exercise all
  code paths.  Witnesses produced under it are labelled by the echoed
  constants; exactness of validators never depends on this choice.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields, replace
from fractions import Fraction

from .errors import InputError


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise InputError(f"cannot interpret {x!r} as a rational constant")


@dataclass(frozen=True)
class Constants:
    # separator refinement chain
    beta0: Fraction = Fraction(1)    # sparse-cut oracle quality
    beta1: Fraction = Fraction(18)   # separator budget multiplier, >= 18*beta0
    beta2: Fraction = Fraction(792)  # unsplittable sparsity constant, >= 44*beta0*beta1
    beta3: Fraction = Fraction(1)    # bramble order constant (echoed, never asserted)
    exact_cut_cap: int = 14          # exhaustive sparsest-separator cap (vertices)

    # decomposition
    exact_tw_cap: int = 18           # subset-DP exact treewidth cap (vertices)
    c0: Fraction = Fraction(1)       # width-bracket divisor constant

    # complete topological minors
    c_deg: Fraction = Fraction(256)  # density gate multiplier (edges >= c_deg*p^2*n)
    c_conn: Fraction = Fraction(128) # connectivity target multiplier
    x_mult: int = 3                  # branch-candidate count multiplier (|X| = x_mult*p)
    y_mult: int = 5                  # neighbour-set size multiplier
    z_mult: int = 7                  # linkable-set size multiplier (|Z| = z_mult*p^2)
    clique_cap: int = 96             # max vertex count for the clique shortcut
    direct_retries: int = 6          # rerouting attempts in the direct subdivision search

    # grid-like minor pipeline
    c_top: Fraction = Fraction(1)    # average-degree threshold multiplier (c_top*p^2)
    c_web: Fraction = Fraction(1)    # linkage-width multiplier (k >= c_web*h^2*p^2)
    c_lll: Fraction = Fraction(1)    # declared degeneracy multiplier for the transversal step

    # concurrent flow
    flow_exact_limit: int = 1500     # max pairs*arcs for the exact rational LP
    flow_path_limit: int = 400       # max enumerated paths for the exact LP
    flow_delta: float = 0.3          # multiplicative-weights accuracy parameter
    flow_round_limit: int = 20000    # hard cap on shortest-path calls per flow

    # hitting-set caps
    order_elements_cap: int = 64
    order_universe_cap: int = 30

    # width-solver caps
    vc_bag_cap: int = 22
    lp_bag_cap: int = 13

    def __post_init__(self):
        for name in ("beta0", "beta1", "beta2", "beta3", "c0", "c_deg",
                     "c_conn", "c_top", "c_web", "c_lll"):
            object.__setattr__(self, name, _frac(getattr(self, name)))
        if self.beta0 <= 0 or self.beta1 <= 0 or self.beta2 <= 0:
            raise InputError("beta constants must be positive")
        if self.beta1 < 18 * self.beta0:
            raise InputError("beta1 must be at least 18*beta0")
        if self.beta2 < 44 * self.beta0 * self.beta1:
            raise InputError("beta2 must be at least 44*beta0*beta1")

    @classmethod
    def default(cls) -> "Constants":
        return cls()

    @classmethod
    def desk(cls) -> "Constants":
        """Small-instance preset: every proof inequality holds, thresholds fit
        graphs of tens of vertices."""
        return cls(
            beta0=Fraction(1, 18),
            beta1=Fraction(1),
            beta2=Fraction(3),
            c_deg=Fraction(1, 4),
            c_conn=Fraction(1),
            c_top=Fraction(1, 5),
            c_web=Fraction(0),
        )

    def with_overrides(self, **kw) -> "Constants":
        return replace(self, **kw)

    # -- serialisation ------------------------------------------------------

    def to_dict(self) -> dict:
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            out[f.name] = str(v) if isinstance(v, Fraction) else v
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "Constants":
        kw = {}
        valid = {f.name for f in fields(cls)}
        for key, val in d.items():
            if key not in valid:
                raise InputError(f"unknown constant {key!r}")
            kw[key] = val
        return cls(**kw)

    @classmethod
    def from_file(cls, path) -> "Constants":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    # frozen dataclass with only hashable fields; usable as a cache key
    def __hash__(self):
        return hash(tuple(getattr(self, f.name) for f in fields(self)))
