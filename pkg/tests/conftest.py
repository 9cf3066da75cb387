import hypothesis
import pytest

from dom22 import crosscheck

hypothesis.settings.register_profile("default", max_examples=150, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile("default")


@pytest.fixture(scope="session")
def enumeration():
    """Connected graphs up to 8 vertices plus multigraphs (multiplicity <= 2) up to 6."""
    return crosscheck.enumeration_corpus(8, 6)


@pytest.fixture(scope="session")
def minimal_enumerated(enumeration):
    return [g for g in enumeration
            if crosscheck.is_minimal_22_structural(g) and g.is_connected()]


@pytest.fixture(scope="session")
def family_samples():
    """random_F_graph outputs and directly built minimal graphs, up to 14 vertices."""
    return crosscheck.random_F_corpus(300, seed=11) + crosscheck.random_minimal_corpus(300, seed=12)
