from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from pretensor.corpus import acceptance_corpus, dual_numbers
from pretensor.modules import free_bimodule, regular_bimodule
from pretensor.monoidal import semigroup_model
from pretensor.radical import build_proj_model, build_proj_model_from_semigroup

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def corpus():
    return acceptance_corpus()


@pytest.fixture(scope="session")
def models(corpus):
    return {name: build_proj_model(alg) for name, alg in corpus.items()}


@pytest.fixture(scope="session")
def D():
    return dual_numbers()


@pytest.fixture(scope="session")
def dt_semigroup(D):
    return semigroup_model(D, [regular_bimodule(D), free_bimodule(D, 0, 0)], ["d", "t"])


@pytest.fixture(scope="session")
def dt_model(dt_semigroup):
    return build_proj_model_from_semigroup(dt_semigroup)


@pytest.fixture(scope="session")
def nearrings():
    from helpers import nearring_suite

    return nearring_suite()
