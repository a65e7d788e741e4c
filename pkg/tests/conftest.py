import random
from fractions import Fraction

import pytest

from unirat.alphabet import build_fixture, build_models
from unirat.config import settings
from unirat.count import count_range
from unirat.expr import MultiPoly, Ring


@pytest.fixture
def make_random_poly():
    """Return a factory for small random polynomials with rational coefficients."""

    def factory(
        rng: random.Random,
        ring: Ring,
        max_terms: int = 4,
        max_degree: int = 3,
        homogeneous_degree=None,
    ):
        terms = {}
        for _ in range(rng.randint(0, max_terms)):
            if homogeneous_degree is None:
                exps = tuple(rng.randint(0, max_degree) for _ in ring.names)
            else:
                cuts = sorted(rng.randint(0, homogeneous_degree) for _ in range(ring.ngens - 1))
                bounds = [0] + cuts + [homogeneous_degree]
                exps = tuple(bounds[i + 1] - bounds[i] for i in range(ring.ngens))
            terms[exps] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        return MultiPoly(ring, terms)

    return factory


@pytest.fixture(scope="session")
def fixture():
    """The alphabet fixture shared by every test."""
    return build_fixture()


@pytest.fixture(scope="session")
def models():
    """Builtin variety models keyed by name."""
    return {model.name: model for model in build_models()}


@pytest.fixture(scope="session")
def x_records(models):
    """Point counts of X for every odd prime below 100."""
    return count_range(models["X"], 100, jobs=1)


@pytest.fixture
def output_dir(tmp_path, monkeypatch):
    """Point the reporting output directory at a temporary path."""
    target = tmp_path / "reports"
    monkeypatch.setattr(settings.reporting, "output_dir", str(target))
    return target
