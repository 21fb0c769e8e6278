import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from biinterp.corpus import CORPUS, build_group  # noqa: E402
from biinterp.extension import extension_data  # noqa: E402
from biinterp.folog import definable_set, parse_formula, substitute_params  # noqa: E402
from biinterp.groups import make_subgroup  # noqa: E402


class Instance:
    def __init__(self, spec):
        self.spec = spec
        self.name = spec.name
        self.G = build_group(spec.group)
        self.kappa = substitute_params(parse_formula(spec.kappa), spec.params)
        members = sorted(t[0] for t in definable_set(self.G, self.kappa, ["x"]))
        self.H = make_subgroup(self.G, members)
        self.ext = extension_data(self.G, self.H)


_CACHE = {}


def load_instance(spec):
    if spec.name not in _CACHE:
        _CACHE[spec.name] = Instance(spec)
    return _CACHE[spec.name]


@pytest.fixture(params=CORPUS, ids=[s.name for s in CORPUS])
def inst(request):
    return load_instance(request.param)


@pytest.fixture
def corpus():
    return [load_instance(s) for s in CORPUS]
