"""Bundled reference matrices with known exponent semigroups.

Each fixture pairs a rational matrix with the semigroup it realizes; the
verification command recomputes every exponent semigroup from scratch and
compares.  An integral characteristic polynomial is a cheap transcription
check for each matrix, since all fixtures have nontrivial semigroups
except the trivial one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .interchange import matrix_from_json
from .linalg import RationalMatrix
from .semigroups import TRIVIAL, SubsemigroupDesc, from_generators

FIXTURE_NAMES = [
    "trivial",
    "full",
    "cyclic_5",
    "two_gen_2_7",
    "tail_4",
    "s_3_5_7",
    "s_3_4",
    "s_4_6_17",
    "s_5_33_52",
    "s_5_7",
    "s_6_9_20",
]


@dataclass(frozen=True)
class Fixture:
    name: str
    matrix: RationalMatrix
    expected: SubsemigroupDesc


def load_fixture(name: str) -> Fixture:
    path = resources.files(__package__).joinpath("fixtures", f"{name}.json")
    obj = json.loads(path.read_text())
    gens = obj["generators"]
    expected = TRIVIAL if not gens else from_generators(gens)
    return Fixture(obj["name"], matrix_from_json(obj["matrix"]), expected)


def load_all() -> list[Fixture]:
    return [load_fixture(name) for name in FIXTURE_NAMES]
