import pytest

from isoflux import INFINITE_LAMBDA, DarbouxFamily, SchrodingerProfile, Superposition


@pytest.fixture(scope="session")
def profile_mixed():
    """Growing seed, the standard figure configuration: k=1, a1=a2=1."""
    return SchrodingerProfile(k=1.0, coefficients=Superposition(a1=1.0, a2=1.0))


@pytest.fixture(scope="session")
def profile_decaying():
    return SchrodingerProfile(k=1.0, coefficients=Superposition(a1=0.0, a2=1.0))


@pytest.fixture(scope="session")
def base_family(profile_mixed):
    """Seed-member family on the default working grid; norm shared via
    with_parameter, so building it once keeps the suite fast."""
    return DarbouxFamily.build(profile_mixed, INFINITE_LAMBDA)
