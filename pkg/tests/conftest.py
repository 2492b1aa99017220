import pytest
from hypothesis import settings

settings.register_profile("tbsl", deadline=None)
settings.load_profile("tbsl")


@pytest.fixture(scope="session")
def links_200():
    from oracles import all_links

    return all_links(200)


@pytest.fixture(scope="session")
def fibered_keys_200():
    from oracles import fibered_census

    return fibered_census(200)
